//! Two-line queue coefficients and their Hecke-side counterparts.
//!
//! Run with `cargo run --example two_line_queues`.

use std::collections::BTreeMap;

use macdonald_interp::algebra::{Ctx, RatQT};
use macdonald_interp::comb::format_composition;
use macdonald_interp::hecke::b_coeffs;
use macdonald_interp::queues::twoline::{a_coeffs, g_coeffs, signed_twoline_queues};

fn main() {
    let ctx = Ctx::symbolic();
    let mu = [0, 2, 1];
    for (lambda, a) in a_coeffs(&[3, 0, 2], &ctx) {
        println!("a^{}_(3,0,2) = {a}", format_composition(&lambda));
    }
    let g: BTreeMap<Vec<i32>, RatQT> = g_coeffs(&mu, &ctx).into_iter().collect();
    for (alpha, c) in &g {
        println!("G^{}_{} = {c}", format_composition(alpha), format_composition(&mu));
    }
    println!("b = G: {}", b_coeffs(&mu, &ctx) == g);
    for q in signed_twoline_queues(&mu, &[0, -2, 1]) {
        print!("{q}");
    }
}
