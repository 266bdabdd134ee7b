//! Multiline queues, signed multiline queues and two-line queues, with
//! the generating functions they define.

pub mod enumerate;
pub mod layer;
pub mod queue;
pub mod twoline;

pub use enumerate::{collect_queues, count_queues, for_each_queue, EnumOptions};
pub use layer::{LayerKind, PairingOrder, PairingStat};
pub use queue::{Queue, QueueError, QueueFamily, Strand};

use crate::algebra::{Ctx, Field, Poly};
use crate::comb::orbit;

fn queue_sum<F: Field>(family: QueueFamily, mu: &[i32], ctx: &Ctx<F>, order: PairingOrder) -> Poly<F> {
    let mut total = Poly::zero(mu.len());
    for_each_queue(family, mu, EnumOptions::default(), &mut |q| {
        let (c, exp) = q.weight(ctx, order);
        total.add_term(exp, c);
    });
    total
}

/// `F*_mu`, the generating function of signed multiline queues of type `mu`.
pub fn f_star_queue<F: Field>(mu: &[i32], ctx: &Ctx<F>) -> Poly<F> {
    queue_sum(QueueFamily::Signed, mu, ctx, PairingOrder::Columns)
}

/// `F*_mu` with the given pairing order.
pub fn f_star_queue_ordered<F: Field>(mu: &[i32], ctx: &Ctx<F>, order: PairingOrder) -> Poly<F> {
    queue_sum(QueueFamily::Signed, mu, ctx, order)
}

/// `F_mu`, the generating function of multiline queues of type `mu`.
pub fn f_queue<F: Field>(mu: &[i32], ctx: &Ctx<F>) -> Poly<F> {
    queue_sum(QueueFamily::Classic, mu, ctx, PairingOrder::Columns)
}

/// `Z*_lambda = sum over rearrangements mu of F*_mu`.
pub fn z_star_queue<F: Field>(lambda: &[i32], ctx: &Ctx<F>) -> Poly<F> {
    orbit(lambda).iter().fold(Poly::zero(lambda.len()), |acc, mu| acc + f_star_queue(mu, ctx))
}

/// `Z_lambda = sum over rearrangements mu of F_mu`.
pub fn z_queue<F: Field>(lambda: &[i32], ctx: &Ctx<F>) -> Poly<F> {
    orbit(lambda).iter().fold(Poly::zero(lambda.len()), |acc, mu| acc + f_queue(mu, ctx))
}
