//! Interpolation Macdonald polynomials by two independent routes.
//!
//! Run with `cargo run --example interpolation`.

use macdonald_interp::algebra::Ctx;
use macdonald_interp::comb::{compositions_up_to, tilde_point};
use macdonald_interp::interp::{verify_characterization, Interpolator};

fn main() {
    let ctx = Ctx::symbolic();
    let solved = Interpolator::new(2, ctx.clone());
    let recursive = Interpolator::recursive(2, ctx.clone());

    let e = solved.e_star(&[0, 1]).unwrap();
    println!("E*(0,1) = {e}");
    assert_eq!(e, recursive.e_star(&[0, 1]).unwrap());
    for nu in compositions_up_to(1, 2) {
        println!("  at {nu:?}~: {}", e.evaluate(&tilde_point(&nu, &ctx)).unwrap());
    }

    let f = recursive.f_star(&[0, 2]).unwrap();
    println!("f*(0,2) = {f}");
    println!("characterized by its vanishing: {}", verify_characterization(&f, &[0, 2], &ctx).unwrap());

    let p = recursive.p_star(&[1, 1]).unwrap();
    println!("P*(1,1) = {p}");
    println!("its top part P(1,1) = {}", p.top_homogeneous().unwrap());
    println!("E*(2,0)(2,0)~ = {}", solved.self_value(&[2, 0]).unwrap());
}
