//! Hook products and the integral form J*.
//!
//! Run with `cargo run --example integral_form`.

use macdonald_interp::algebra::Ctx;
use macdonald_interp::interp::Interpolator;
use macdonald_interp::tableaux::{classical_hook, enumerate_tableaux, hook_product};

fn main() {
    let ctx = Ctx::symbolic();
    let lambda = [2, 1, 0];
    println!("hook product of {lambda:?}: {}", hook_product(&lambda));
    println!("classical hook: {}", classical_hook(&lambda));
    let hooks: Vec<String> = enumerate_tableaux(&lambda).iter().take(3).map(|t| t.hook().to_string()).collect();
    println!("hook of the first fillings: {hooks:?}");

    let p = Interpolator::recursive(3, ctx.clone()).p_star(&lambda).unwrap();
    let j = p.scale(&ctx.embed(&hook_product(&lambda)));
    println!("J* = {j}");
}
