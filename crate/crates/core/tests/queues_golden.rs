use macdonald_interp::algebra::{Ctx, Field, Poly, RatQT};
use macdonald_interp::queues::{count_queues, f_star_queue, EnumOptions, QueueFamily};

fn x(n: usize, i: usize) -> Poly<RatQT> {
    Poly::var(n, i)
}

fn c(v: RatQT) -> Poly<RatQT> {
    Poly::constant(2, v)
}

/// The six-term expansion of f*_{(0,2)}, written out by hand.
fn golden_f_star_02() -> Poly<RatQT> {
    let ctx = Ctx::symbolic();
    let (q, t) = (ctx.q.clone(), ctx.t.clone());
    let one_t = ctx.one_minus_t();
    let one_qt = ctx.one_minus(1, 1);
    let q_over_t = q.div(&t).unwrap();
    let inv_t = t.inv().unwrap();
    let x1_q = &x(2, 0) - &c(q_over_t.clone());
    let x2_1 = &x(2, 1) - &c(inv_t.clone());
    let x2_q = &x(2, 1) - &c(q_over_t.clone());
    let r = |v: RatQT| c(v);
    let t1 = &(&r(one_t.div(&one_qt).unwrap()) * &x1_q) * &x2_1;
    let t2 = &r(one_t.div(&t).unwrap()) * &x1_q;
    let t3 = &x2_q * &x2_1;
    let t4 = &r(one_t.mul(&q_over_t)) * &x2_1;
    let t5 = r(q_over_t.mul(&q_over_t).mul(&one_t.pow(3).unwrap()).div(&one_qt).unwrap());
    let t6 = &r(q_over_t.mul(&one_t.pow(2).unwrap()).div(&one_qt).unwrap()) * &x2_q;
    t1 + t2 + t3 + t4 + t5 + t6
}

#[test]
fn signed_queue_count_for_02() {
    assert_eq!(count_queues(QueueFamily::Signed, &[0, 2], EnumOptions::default()), 15);
}

#[test]
fn golden_f_star_from_queues() {
    let ctx = Ctx::symbolic();
    assert_eq!(f_star_queue(&[0, 2], &ctx), golden_f_star_02());
}

#[test]
fn golden_f_star_from_hecke() {
    let interp = macdonald_interp::interp::Interpolator::new(2, Ctx::symbolic());
    assert_eq!(interp.f_star(&[0, 2]).unwrap(), golden_f_star_02());
    assert_eq!(interp.f_star_word(&[0, 2]).unwrap(), golden_f_star_02());
}
