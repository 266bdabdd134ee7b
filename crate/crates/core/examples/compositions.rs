//! Compositions, evaluation points and the precedence order.
//!
//! Run with `cargo run --example compositions`.

use macdonald_interp::algebra::Ctx;
use macdonald_interp::comb::{k_stat, orbit, pack, precedes, signed_variants, tilde_point, unpack_path};

fn main() {
    let mu = [4, 2, 0, 1, 4];
    println!("k({mu:?}) = {:?}", k_stat(&mu));
    let pt = tilde_point(&mu, &Ctx::symbolic());
    println!("evaluation point: {}", pt.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    println!("orbit of (2,1,0): {:?}", orbit(&[2, 1, 0]));
    println!("signed variants of (0,2,1): {:?}", signed_variants(&[0, 2, 1]));

    let nu = [0, 3, 0, 1];
    println!("pack({nu:?}) = {:?}, unpacking transpositions {:?}", pack(&nu), unpack_path(&nu));

    let (m, tau) = ([3, 3, 2, 0], [5, 4, 0, 3]);
    println!("{m:?} precedes (5,4,1,2): {}", precedes(&m, &[5, 4, 1, 2]));
    println!("{m:?} precedes {tau:?}: {}", precedes(&m, &tau));
}
