//! One JSON object per line describing a classified combination.

use descartes_core::rational::{format_rational, parse_rational};
use descartes_core::realize::{ComboStatus, Method, Status, Witness};
use descartes_core::{Combo, RatPoly};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub pattern: String,
    pub pos: usize,
    pub neg: usize,
    pub status: String,
    /// Exact coefficients, leading first, as `p/q` or `p`.
    pub witness: Option<Vec<String>>,
    pub source: String,
    pub seed: u64,
}

impl Record {
    pub fn from_status(s: &ComboStatus) -> Record {
        let (witness, source) = match &s.status {
            Status::Realized { witness, method } => (
                Some(
                    witness
                        .poly()
                        .coeffs()
                        .iter()
                        .map(format_rational)
                        .collect(),
                ),
                method.as_str().to_string(),
            ),
            Status::KnownNonrealizable(entry) => (None, entry.source.clone()),
            Status::Unknown { budget } => (None, format!("random-search:budget={}", budget)),
        };
        Record {
            pattern: s.combo.pattern.to_string(),
            pos: s.combo.pair.pos,
            neg: s.combo.pair.neg,
            status: s.status.label().to_string(),
            witness,
            source,
            seed: s.seed,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn combo(&self) -> Result<Combo, descartes_core::Error> {
        Combo::parse(&self.pattern, self.pos, self.neg)
    }

    /// Rebuilds and re-verifies the witness of a realized record. `Ok(None)`
    /// means the record is well formed but carries no valid witness.
    pub fn verified_witness(&self) -> Result<Option<Witness>, descartes_core::Error> {
        let combo = self.combo()?;
        let Some(coeffs) = &self.witness else {
            return Ok(None);
        };
        let coeffs = coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Witness::new(RatPoly::new(coeffs), combo))
    }
}

pub fn cached_status(w: Witness, seed: u64) -> ComboStatus {
    ComboStatus {
        combo: w.combo().clone(),
        status: Status::Realized {
            witness: w,
            method: Method::Cache,
        },
        seed,
    }
}
