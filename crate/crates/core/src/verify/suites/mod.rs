//! Instance builders, one function per suite.

mod algebraic;
mod combinatorial;
mod interpolation;

pub(crate) use algebraic::*;
pub(crate) use combinatorial::*;
pub(crate) use interpolation::*;

use std::fmt::Display;

use super::Outcome;
use crate::algebra::{fmt_rat, BigRat, Ctx};
use crate::comb::format_composition;

pub(super) fn comp(mu: &[i32]) -> String {
    format_composition(mu)
}

pub(super) fn at_point(ctx: &Ctx<BigRat>) -> String {
    format!("q={} t={}", fmt_rat(&ctx.q), fmt_rat(&ctx.t))
}

/// Pass when `ok`, otherwise fail with the witness.
pub(super) fn expect(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(None)
    } else {
        Ok(Some(witness()))
    }
}

pub(super) fn err(e: impl Display) -> String {
    e.to_string()
}

/// First failing witness among several checks.
pub(super) fn first_failure(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    for p in parts {
        if p.as_ref().map_or(true, Option::is_some) {
            return p;
        }
    }
    Ok(None)
}
