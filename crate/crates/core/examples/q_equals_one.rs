//! Factorization of P* at q = 1 into elementary interpolation polynomials.
//!
//! Run with `cargo run --example q_equals_one`.

use macdonald_interp::algebra::{rat, Ctx};
use macdonald_interp::interp::{e_star_k, factorization_q1_check, one_row_product, Interpolator};

fn main() {
    let t0 = rat(3, 7);
    let interp = Interpolator::recursive(3, Ctx::symbolic_q(&t0));
    for lambda in [[1, 1, 0], [2, 1, 0], [2, 2, 1]] {
        println!("P*{lambda:?} at q = 1 factors: {}", factorization_q1_check(&interp, &lambda, &t0).unwrap());
    }
    let ctx = Ctx::symbolic();
    println!("e*_2 in 3 variables: {}", e_star_k(2, 3, &ctx));
    println!("one-row product for {{1, 3}}: {}", one_row_product(&[1, 3], 3, &ctx));
}
