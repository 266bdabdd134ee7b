//! `enumerate`: queues, tableaux and two-line queues with their weights.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;

use super::{CliError, Format, Shape};
use crate::algebra::{Ctx, Field, PointSampler};
use crate::comb::{orbit, signed_orbit, truncate_below};
use crate::queues::twoline::{classic_twoline_queues, signed_twoline_queues};
use crate::queues::{collect_queues, EnumOptions, PairingOrder, QueueFamily};
use crate::tableaux::{enumerate_tableaux, enumerate_tableaux_typed};
use crate::verify::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Multiline queues of type `--mu`.
    Mlq,
    /// Signed multiline queues of type `--mu`.
    Smlq,
    /// Queue tableaux of shape `--lambda`, optionally of type `--type`.
    Tableaux,
    /// Classic two-line queues with bottom row `--mu` (and top row `--lambda`).
    Twoline,
    /// Signed two-line queues with bottom row `--mu` (and top row `--lambda`).
    SignedTwoline,
}

/// One listed object: its text encoding, JSON value and weight.
struct Item {
    text: String,
    json: serde_json::Value,
    weight: String,
}

fn item<T: Serialize + std::fmt::Display>(object: &T, weight: String) -> Item {
    Item { text: object.to_string(), json: serde_json::to_value(object).expect("objects serialize"), weight }
}

fn list<F: Field>(kind: Kind, shape: &Shape, ctx: &Ctx<F>) -> Result<Vec<Item>, CliError> {
    Ok(match kind {
        Kind::Mlq | Kind::Smlq => {
            let family = if kind == Kind::Mlq { QueueFamily::Classic } else { QueueFamily::Signed };
            collect_queues(family, &shape.mu()?, EnumOptions::default())
                .iter()
                .map(|q| item(q, q.weight_poly(ctx, PairingOrder::Strands).to_string()))
                .collect()
        }
        Kind::Tableaux => {
            let lambda = shape.lambda()?;
            let tabs = match shape.type_comp()? {
                Some(mu) => enumerate_tableaux_typed(&lambda, &mu),
                None => enumerate_tableaux(&lambda),
            };
            tabs.iter().map(|t| item(t, t.term(ctx).to_string())).collect()
        }
        Kind::Twoline | Kind::SignedTwoline => {
            let mu = shape.mu()?;
            let signed = kind == Kind::SignedTwoline;
            let tops = match shape.top()? {
                Some(top) if top.len() == mu.len() => vec![top],
                Some(_) => return Err(CliError::Usage("--mu and --lambda must have the same length".into())),
                None if signed => signed_orbit(&mu),
                None => orbit(&truncate_below(&mu, 2)),
            };
            let mut out = Vec::new();
            for top in tops {
                let queues = if signed { signed_twoline_queues(&mu, &top) } else { classic_twoline_queues(&mu, &top) };
                out.extend(queues.iter().map(|q| item(q, q.weight(ctx).to_string())));
            }
            out
        }
    })
}

fn render(items: &[Item], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<_> = items.iter().map(|it| json!({"object": it.json, "weight": it.weight})).collect();
            format!("{}\n", serde_json::Value::Array(rows))
        }
        _ => {
            let mut out = String::new();
            for it in items {
                out.push_str(it.text.trim_end());
                out.push_str(&format!("\nweight: {}\n\n", it.weight));
            }
            out.push_str(&format!("count: {}\n", items.len()));
            out
        }
    }
}

pub(super) fn run(kind: Kind, shape: &Shape, mode: Mode, seed: u64, format: Format) -> Result<String, CliError> {
    let items = match mode {
        Mode::Symbolic => list(kind, shape, &Ctx::symbolic())?,
        Mode::Specialized => list(kind, shape, &PointSampler::new(seed, 12).next_ctx())?,
    };
    Ok(render(&items, format))
}
