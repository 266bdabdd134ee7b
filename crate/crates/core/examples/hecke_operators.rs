//! Demazure-Lusztig operators and their action on f*.
//!
//! Run with `cargo run --example hecke_operators`.

use macdonald_interp::algebra::{Ctx, Poly, RatQT};
use macdonald_interp::hecke::{hecke_action_rule, hecke_t, HeckeRelation};
use macdonald_interp::interp::Interpolator;

fn main() {
    let ctx = Ctx::symbolic();
    let x: Vec<Poly<RatQT>> = (0..3).map(|i| Poly::var(3, i)).collect();
    let p = &(&x[0] * &x[0]) + &x[2];
    println!("T_1 (x1^2 + x3) = {}", hecke_t(&p, 1, &ctx).unwrap());
    println!("T_2 (x1^2 + x3) = {}", hecke_t(&p, 2, &ctx).unwrap());
    for rel in HeckeRelation::ALL {
        for j in rel.partners(3, 1) {
            println!("{} (i=1, j={j}): {}", rel.name(), rel.holds(&p, 1, j, &ctx).unwrap());
        }
    }

    // T_1 f*(0,2) = t f*(2,0) - (1 - t) f*(0,2)
    let interp = Interpolator::recursive(2, ctx.clone());
    let lhs = hecke_t(&interp.f_star(&[0, 2]).unwrap(), 1, &ctx).unwrap();
    let rhs = hecke_action_rule(&[0, 2], 1, &ctx)
        .into_iter()
        .fold(Poly::zero(2), |acc, (nu, c)| &acc + &interp.f_star(&nu).unwrap().scale(&c));
    println!("action rule holds: {}", lhs == rhs);
}
