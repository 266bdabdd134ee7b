//! Signed multiline queues and the queue formula for f*.
//!
//! Run with `cargo run --example multiline_queues`.

use macdonald_interp::algebra::Ctx;
use macdonald_interp::interp::Interpolator;
use macdonald_interp::queues::{collect_queues, f_star_queue, z_star_queue, EnumOptions, PairingOrder, QueueFamily};

fn main() {
    let ctx = Ctx::symbolic();
    let queues = collect_queues(QueueFamily::Signed, &[0, 2], EnumOptions::default());
    println!("{} signed multiline queues of type (0,2)", queues.len());
    for q in queues.iter().take(3) {
        print!("{q}");
        println!("weight {}\n", q.weight_poly(&ctx, PairingOrder::Strands));
    }

    let by_queues = f_star_queue(&[1, 0, 2], &ctx);
    let by_hecke = Interpolator::recursive(3, ctx.clone()).f_star(&[1, 0, 2]).unwrap();
    println!("F*(1,0,2) = f*(1,0,2): {}", by_queues == by_hecke);
    println!("Z*(1,1) = {}", z_star_queue(&[1, 1], &ctx));
    let classic = collect_queues(QueueFamily::Classic, &[2, 1, 0], EnumOptions::default());
    println!("{} classic multiline queues of type (2,1,0)", classic.len());
}
