//! Hand-written reference objects that the suites compare against.

use crate::algebra::{Ctx, Field, Poly, RatQT};
use crate::queues::{Queue, QueueFamily};
use crate::tableaux::QueueTableau;

/// The six-term expansion of `f*_{(0,2)}` over `Q(q, t)`.
pub fn golden_f_star_02() -> Poly<RatQT> {
    let ctx = Ctx::<RatQT>::symbolic();
    let c = |v: RatQT| Poly::constant(2, v);
    let lin = |i: usize, v: &RatQT| Poly::linear(2, i, v.clone());
    let (q, t) = (ctx.q.clone(), ctx.t.clone());
    let one_t = ctx.one_minus_t();
    let one_qt = ctx.one_minus(1, 1);
    let q_over_t = q.div(&t).expect("t is invertible");
    let inv_t = t.inv().expect("t is invertible");
    let div = |a: RatQT, b: &RatQT| a.div(b).expect("nonzero denominator");

    let x1_q = lin(0, &q_over_t);
    let x2_1 = lin(1, &inv_t);
    let x2_q = lin(1, &q_over_t);
    let terms = [
        &(&c(div(one_t.clone(), &one_qt)) * &x1_q) * &x2_1,
        &c(div(one_t.clone(), &t)) * &x1_q,
        &x2_q * &x2_1,
        &c(one_t.mul(&q_over_t)) * &x2_1,
        c(div(q_over_t.mul(&q_over_t).mul(&one_t.mul(&one_t).mul(&one_t)), &one_qt)),
        &c(div(q_over_t.mul(&one_t).mul(&one_t), &one_qt)) * &x2_q,
    ];
    terms.into_iter().fold(Poly::zero(2), |acc, p| acc + p)
}

/// A signed multiline queue of type `(2,2,0,0,0,2,3,1)` with weight
/// `-x_2^2 x_5 x_7 q^5 (1-t)^9 / (t^38 (1-qt^2)(1-qt^4))`.
pub fn golden_queue() -> Queue {
    let rows = vec![
        vec![2, 2, 0, 0, 0, 2, 3, 1],
        vec![-2, 2, 0, -2, -3, 0, 1, 0],
        vec![0, 2, 0, 2, 3, 2, 0, 0],
        vec![-2, 2, 0, -3, 2, 0, 0, 0],
        vec![0, 0, 3, 0, 0, 0, 0, 0],
        vec![0, -3, 0, 0, 0, 0, 0, 0],
    ];
    // one-based (upper column, lower column) pairs per layer
    let pairs: [&[(usize, usize)]; 5] = [
        &[(1, 1), (2, 2), (4, 6), (5, 7), (7, 8)],
        &[(2, 2), (4, 4), (5, 5), (6, 1)],
        &[(1, 4), (2, 2), (4, 5), (5, 6)],
        &[(3, 4)],
        &[(2, 3)],
    ];
    let mut links = vec![vec![None; 8]];
    for layer in pairs {
        let mut row = vec![None; 8];
        for &(upper, lower) in layer {
            row[upper - 1] = Some(lower - 1);
        }
        links.push(row);
    }
    Queue { family: QueueFamily::Signed, n: 8, rows, links }
}

/// The tableau image of [`golden_queue`].
pub fn golden_tableau() -> QueueTableau {
    QueueTableau {
        n: 8,
        lambda: vec![3, 2, 2, 2, 1, 0, 0, 0],
        columns: vec![
            vec![7, -5, 5, -4, 3, -2],
            vec![1, -1, 6, 5],
            vec![2, 2, 2, 2],
            vec![6, -4, 4, -1],
            vec![8, 7],
            vec![],
            vec![],
            vec![],
        ],
    }
}

/// `(coefficient, exponent)` of the weight of [`golden_queue`].
pub fn golden_queue_weight() -> (RatQT, Vec<i32>) {
    let ctx = Ctx::<RatQT>::symbolic();
    let one_t = ctx.one_minus_t();
    let mut c = ctx.qt(-1, 5, -38);
    for _ in 0..9 {
        c = c.mul(&one_t);
    }
    let den = ctx.one_minus(1, 2).mul(&ctx.one_minus(1, 4));
    (c.div(&den).expect("nonzero denominator"), vec![0, 2, 0, 0, 1, 0, 1, 0])
}
