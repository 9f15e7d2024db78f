//! Batch evaluation of invariants over a family of semigroups.

use std::io::{self, Write};
use std::sync::Arc;

use numsemi_core::gorenstein_search::bg_upper_bound_capped;
use numsemi_core::herzog::h_omega_formula;
use numsemi_core::invariants::classify;
use numsemi_core::{Error, NumericalSemigroup, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{cell, Format};

/// TSV column order.
pub const COLUMNS: [&str; 12] = [
    "generators",
    "multiplicity",
    "edim",
    "type",
    "F",
    "h_omega",
    "h_omega_formula",
    "gorenstein",
    "nearly_gorenstein",
    "almost_gorenstein",
    "bg_upper",
    "skipped",
];

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub generators: Vec<i64>,
    #[serde(flatten)]
    pub invariants: Option<RowInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<Skip>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowInvariants {
    pub multiplicity: i64,
    pub edim: usize,
    #[serde(rename = "type")]
    pub type_: usize,
    #[serde(rename = "F")]
    pub frobenius: i64,
    pub h_omega: u64,
    pub h_omega_formula: Option<u64>,
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub almost_gorenstein: bool,
    pub bg_upper: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skip {
    pub error: &'static str,
    pub message: String,
}

pub struct SweepSettings {
    pub bg_bound: Option<u32>,
    pub node_cap: usize,
}

/// Invariants of one family member. Domain errors become skipped rows;
/// internal inconsistencies abort the sweep.
fn evaluate(generators: &[i64], settings: &SweepSettings) -> Result<Row> {
    let computed = (|| {
        let h = Arc::new(NumericalSemigroup::build(generators)?);
        let report = classify(&h, None)?;
        let formula = if h.embedding_dimension() == 3 && !report.is_gorenstein {
            Some(h_omega_formula(&h)?)
        } else {
            None
        };
        if formula.is_some_and(|f| f != report.h_omega) {
            return Err(Error::InternalInconsistency(format!(
                "{h}: h(ω) = {} but the structure matrix gives {}",
                report.h_omega,
                formula.unwrap()
            )));
        }
        let bound = settings.bg_bound.unwrap_or(report.h_omega as u32);
        let bg = bg_upper_bound_capped(&h, bound, settings.node_cap)?;
        if bg.best_colength.is_some_and(|b| report.h_omega > 2 * b) {
            return Err(Error::InternalInconsistency(format!(
                "{h}: h(ω) = {} exceeds twice the subsemigroup colength",
                report.h_omega
            )));
        }
        Ok(RowInvariants {
            multiplicity: report.multiplicity,
            edim: report.embedding_dimension,
            type_: report.type_,
            frobenius: report.frobenius,
            h_omega: report.h_omega,
            h_omega_formula: formula,
            gorenstein: report.is_gorenstein,
            nearly_gorenstein: report.is_nearly_gorenstein,
            almost_gorenstein: report.is_almost_gorenstein,
            bg_upper: bg.best_colength,
        })
    })();
    match computed {
        Ok(invariants) => Ok(Row {
            generators: generators.to_vec(),
            invariants: Some(invariants),
            skipped: None,
        }),
        Err(e) if e.is_internal() => Err(e),
        Err(e) => Ok(Row {
            generators: generators.to_vec(),
            invariants: None,
            skipped: Some(Skip {
                error: e.kind(),
                message: e.to_string(),
            }),
        }),
    }
}

/// Evaluates every member, in parallel, keeping input order.
pub fn run(family: &[Vec<i64>], settings: &SweepSettings) -> Result<Vec<Row>> {
    family.par_iter().map(|g| evaluate(g, settings)).collect()
}

pub fn write_rows<W: Write>(out: &mut W, format: Format, rows: &[Row]) -> io::Result<()> {
    match format {
        Format::Json => {
            for row in rows {
                let line = serde_json::to_string(row).map_err(io::Error::other)?;
                writeln!(out, "{line}")?;
            }
        }
        Format::Tsv => {
            writeln!(out, "{}", COLUMNS.join("\t"))?;
            for row in rows {
                let value = serde_json::to_value(row).map_err(io::Error::other)?;
                let cells: Vec<String> = COLUMNS
                    .iter()
                    .map(|&c| match (c, &row.skipped) {
                        ("skipped", Some(skip)) => skip.error.to_string(),
                        _ => value.get(c).map(cell).unwrap_or_default(),
                    })
                    .collect();
                writeln!(out, "{}", cells.join("\t"))?;
            }
        }
    }
    Ok(())
}
