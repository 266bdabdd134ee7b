//! `compute`: polynomials and coefficient families.

use clap::ValueEnum;
use serde_json::json;

use super::{CliError, Format, Shape};
use crate::algebra::{fmt_rat, Ctx, Field, PointSampler, Poly};
use crate::comb::{conjugate, format_composition};
use crate::hecke::b_coeffs;
use crate::interp::{e_star_k, Interpolator};
use crate::queues::twoline::{a_coeff, a_coeffs, g_coeff, g_coeffs};
use crate::queues::{f_queue, f_star_queue, z_queue, z_star_queue};
use crate::tableaux::hook_product;
use crate::verify::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Nonsymmetric interpolation Macdonald polynomial `E*_mu`.
    #[value(name = "E*")]
    EStar,
    /// Symmetric interpolation Macdonald polynomial `P*_lambda`.
    #[value(name = "P*")]
    PStar,
    /// Interpolation ASEP polynomial `f*_mu`, by Hecke operators.
    #[value(name = "f*")]
    FStar,
    /// `f*_mu` as a sum over signed multiline queues.
    #[value(name = "F*")]
    FStarQueues,
    /// `P*_lambda` as a sum over signed multiline queues.
    #[value(name = "Z*")]
    ZStar,
    /// Integral form `J*_lambda`.
    #[value(name = "J*")]
    JStar,
    /// Product of interpolation elementary polynomials over the columns of `lambda`.
    #[value(name = "e*")]
    EStarElementary,
    /// Homogeneous ASEP polynomial `f_mu`.
    #[value(name = "f")]
    F,
    /// `f_mu` as a sum over multiline queues.
    #[value(name = "F")]
    FQueues,
    /// `P_lambda` as a sum over multiline queues.
    #[value(name = "Z")]
    Z,
    /// Classic two-line coefficients `a^lambda_mu` (`--mu` bottom, `--lambda` top).
    #[value(name = "a")]
    A,
    /// Signed two-line coefficients `G^alpha_mu` (`--mu` bottom, `--lambda` top).
    #[value(name = "G")]
    G,
    /// Hecke-side signed coefficients `b^alpha_mu`.
    #[value(name = "b")]
    B,
}

enum Value<F: Field> {
    Poly(Poly<F>),
    Scalar(F),
    Table(Vec<(Vec<i32>, F)>),
}

fn evaluate<F: Field>(target: Target, shape: &Shape, ctx: Ctx<F>) -> Result<Value<F>, CliError> {
    let interp = |n: usize| Interpolator::recursive(n, ctx.clone());
    Ok(match target {
        Target::EStar => {
            let mu = shape.mu()?;
            Value::Poly(interp(mu.len()).e_star(&mu)?)
        }
        Target::PStar => {
            let l = shape.lambda()?;
            Value::Poly(interp(l.len()).p_star(&l)?)
        }
        Target::FStar => {
            let mu = shape.mu()?;
            Value::Poly(interp(mu.len()).f_star(&mu)?)
        }
        Target::FStarQueues => Value::Poly(f_star_queue(&shape.mu()?, &ctx)),
        Target::ZStar => Value::Poly(z_star_queue(&shape.lambda()?, &ctx)),
        Target::JStar => {
            let l = shape.lambda()?;
            let p = interp(l.len()).p_star(&l)?;
            Value::Poly(p.scale(&ctx.embed(&hook_product(&l))))
        }
        Target::EStarElementary => {
            let l = shape.lambda()?;
            let n = l.len();
            let cols = conjugate(&l);
            if cols.iter().any(|&k| k as usize > n) {
                return Err(CliError::Usage(format!("{} has a column longer than n = {n}", format_composition(&l))));
            }
            let mut prod = Poly::one(n);
            for &k in &cols {
                prod = prod.checked_mul(&e_star_k(k as usize, n, &ctx))?;
            }
            Value::Poly(prod)
        }
        Target::F => {
            let mu = shape.mu()?;
            Value::Poly(interp(mu.len()).f_homogeneous(&mu)?)
        }
        Target::FQueues => Value::Poly(f_queue(&shape.mu()?, &ctx)),
        Target::Z => Value::Poly(z_queue(&shape.lambda()?, &ctx)),
        Target::A | Target::G => {
            let mu = shape.mu()?;
            let top = shape.top()?;
            if let Some(top) = &top {
                if top.len() != mu.len() {
                    return Err(CliError::Usage("--mu and --lambda must have the same length".into()));
                }
            }
            match (target, top) {
                (Target::A, Some(top)) => Value::Scalar(a_coeff(&mu, &top, &ctx)),
                (Target::A, None) => Value::Table(a_coeffs(&mu, &ctx)),
                (_, Some(top)) => Value::Scalar(g_coeff(&mu, &top, &ctx)),
                (_, None) => Value::Table(g_coeffs(&mu, &ctx)),
            }
        }
        Target::B => Value::Table(b_coeffs(&shape.mu()?, &ctx).into_iter().collect()),
    })
}

fn render<F: Field>(value: Value<F>, format: Format, header: serde_json::Value) -> String {
    match (value, format) {
        (Value::Poly(p), Format::Json) => json_line(header, "value", json!(p.to_string())),
        (Value::Scalar(c), Format::Json) => json_line(header, "value", json!(c.to_string())),
        (Value::Table(rows), Format::Json) => {
            let rows: Vec<_> = rows.iter().map(|(alpha, c)| json!({"composition": alpha, "value": c.to_string()})).collect();
            json_line(header, "entries", json!(rows))
        }
        (Value::Poly(p), _) => format!("{p}\n"),
        (Value::Scalar(c), _) => format!("{c}\n"),
        (Value::Table(rows), _) => rows.iter().map(|(alpha, c)| format!("{}: {c}\n", format_composition(alpha))).collect(),
    }
}

fn json_line(mut header: serde_json::Value, key: &str, value: serde_json::Value) -> String {
    header[key] = value;
    format!("{header}\n")
}

pub(super) fn run(target: Target, shape: &Shape, mode: Mode, seed: u64, format: Format) -> Result<String, CliError> {
    let name = target.to_possible_value().expect("targets are named").get_name().to_string();
    match mode {
        Mode::Symbolic => {
            let header = json!({"target": name, "mode": mode.to_string()});
            Ok(render(evaluate(target, shape, Ctx::symbolic())?, format, header))
        }
        Mode::Specialized => {
            let ctx = PointSampler::new(seed, 12).next_ctx();
            let header = json!({"target": name, "mode": mode.to_string(), "q": fmt_rat(&ctx.q), "t": fmt_rat(&ctx.t)});
            Ok(render(evaluate(target, shape, ctx)?, format, header))
        }
    }
}
