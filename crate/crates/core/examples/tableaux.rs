//! Signed queue tableaux, the bijection with queues, and rendering.
//!
//! Run with `cargo run --example tableaux`.

use macdonald_interp::algebra::{Ctx, Poly};
use macdonald_interp::queues::{collect_queues, f_star_queue, EnumOptions, QueueFamily};
use macdonald_interp::tableaux::{enumerate_tableaux_typed, render_latex, QueueTableau};

fn main() {
    let ctx = Ctx::symbolic();
    let tabs = enumerate_tableaux_typed(&[2, 0], &[0, 2]);
    println!("{} tableaux of shape (2,0) and type (0,2)", tabs.len());
    for t in tabs.iter().take(4) {
        println!("{t}  coinv {} maj {}  term {}", t.coinv(), t.maj(), t.term(&ctx));
    }
    let sum = tabs.iter().fold(Poly::zero(2), |acc, t| &acc + &t.term(&ctx));
    println!("sum equals F*(0,2): {}", sum == f_star_queue(&[0, 2], &ctx));

    let queue = &collect_queues(QueueFamily::Signed, &[0, 2], EnumOptions::default())[5];
    let tab = QueueTableau::from_queue(queue).unwrap();
    println!("a queue maps to {tab} and back: {}", tab.to_queue() == *queue);
    print!("{}", render_latex(&tab));
}
