//! Exact arithmetic in Q(q, t) and polynomials over it.
//!
//! Run with `cargo run --example exact_algebra`.

use macdonald_interp::algebra::{rat, Ctx, Field, PointSampler, Poly, RatQT};

fn main() {
    let ctx = Ctx::symbolic();
    // (1 - t) / (1 - q t) + t (1 - q) / (1 - q t) = 1
    let a = ctx.one_minus_t().div(&ctx.one_minus(1, 1)).unwrap();
    let b = ctx.t.mul(&ctx.one_minus(1, 0)).div(&ctx.one_minus(1, 1)).unwrap();
    println!("a = {a}");
    println!("b = {b}");
    println!("a + b = {}", a.add(&b));

    // a polynomial in x1, x2 with rational-function coefficients
    let x1: Poly<RatQT> = Poly::var(2, 0);
    let x2: Poly<RatQT> = Poly::var(2, 1);
    let p = &(&x1 * &x2).scale(&a) + &x2.scale(&ctx.q);
    println!("p = {p}");

    // the same polynomial at a reproducible random point
    let mut sampler = PointSampler::new(7, 12);
    let point = sampler.next_ctx();
    println!("at q = {}, t = {}: {}", point.q, point.t, p.specialize(&point.q, &point.t).unwrap());
    println!("p(2, 1/3) at that point = {}", p.specialize(&point.q, &point.t).unwrap().evaluate(&[rat(2, 1), rat(1, 3)]).unwrap());
}
