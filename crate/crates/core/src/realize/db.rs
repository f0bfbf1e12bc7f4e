//! The table of combinations known not to be realizable.
//!
//! Listed entries come from a line-oriented text file (an embedded copy
//! ships with the crate); the σ_k family is a rule and is matched directly.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::pattern::{canonical_rep, orbit, sigma_k_pattern, Combo, SignPattern};
use crate::rootcount::PairPN;
use crate::Error;

/// The embedded database text.
pub const EMBEDDED_DATABASE: &str = include_str!("../../data/nonrealizable.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonrealizableEntry {
    /// Canonical representative of the orbit.
    pub combo: Combo,
    pub source: String,
}

impl NonrealizableEntry {
    pub fn degree(&self) -> usize {
        self.combo.degree()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Database {
    entries: BTreeMap<Combo, NonrealizableEntry>,
}

impl Database {
    /// Parses `<degree> <pattern> <pos> <neg> <source-tag>` lines; blank
    /// lines and `#` comments are skipped. Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Database, Error> {
        let mut entries = BTreeMap::new();
        let mut first_seen: BTreeMap<Combo, usize> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Database { line, message };
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() < 5 {
                return Err(bad(format!("expected 5 fields, found {}", fields.len())));
            }
            let degree: usize = fields[0]
                .parse()
                .map_err(|_| bad(format!("bad degree {:?}", fields[0])))?;
            let pattern: SignPattern = fields[1].parse().map_err(|e: Error| bad(e.to_string()))?;
            if pattern.degree() != degree {
                return Err(bad(format!(
                    "pattern {} has degree {}, not {}",
                    pattern,
                    pattern.degree(),
                    degree
                )));
            }
            let pos: usize = fields[2]
                .parse()
                .map_err(|_| bad(format!("bad pos {:?}", fields[2])))?;
            let neg: usize = fields[3]
                .parse()
                .map_err(|_| bad(format!("bad neg {:?}", fields[3])))?;
            let combo =
                Combo::new(pattern, PairPN::new(pos, neg)).map_err(|e| bad(e.to_string()))?;
            let canonical = canonical_rep(&combo);
            if let Some(prev) = first_seen.get(&canonical) {
                return Err(bad(format!("{} repeats the orbit of line {}", combo, prev)));
            }
            first_seen.insert(canonical.clone(), line);
            let source = fields[4..].join(" ");
            entries.insert(
                canonical.clone(),
                NonrealizableEntry {
                    combo: canonical,
                    source,
                },
            );
        }
        Ok(Database { entries })
    }

    pub fn embedded() -> Database {
        Database::parse(EMBEDDED_DATABASE).expect("embedded database is well formed")
    }

    /// Listed entry or σ_k rule match for the orbit of `combo`.
    pub fn lookup(&self, combo: &Combo) -> Option<NonrealizableEntry> {
        let canonical = canonical_rep(combo);
        if let Some(e) = self.entries.get(&canonical) {
            return Some(e.clone());
        }
        sigma_k_rule(combo)
    }

    /// Listed entries in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = &NonrealizableEntry> {
        self.entries.values()
    }

    pub fn entries_of_degree(&self, d: usize) -> impl Iterator<Item = &NonrealizableEntry> {
        self.entries.values().filter(move |e| e.degree() == d)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Looks `combo` up in the embedded database.
pub fn db_lookup(combo: &Combo) -> Option<NonrealizableEntry> {
    Database::embedded().lookup(combo)
}

/// Matches the orbit of `combo` against `(σ_k, (2s+1, 0))`, `1 ≤ s ≤ k`.
pub fn sigma_k_rule(combo: &Combo) -> Option<NonrealizableEntry> {
    let d = combo.degree();
    if d < 5 || d.is_multiple_of(2) {
        return None;
    }
    for image in orbit(combo) {
        let PairPN { pos, neg } = image.pair;
        if neg != 0 || pos < 3 || pos % 2 == 0 {
            continue;
        }
        let Some(k) = sigma_k_index(&image.pattern) else {
            continue;
        };
        if (pos - 1) / 2 <= k {
            return Some(NonrealizableEntry {
                combo: canonical_rep(combo),
                source: format!("sigma-k:d={},k={}", d, k),
            });
        }
    }
    None
}

/// `Some(k)` if `pattern` is σ_k of its degree.
fn sigma_k_index(pattern: &SignPattern) -> Option<usize> {
    let d = pattern.degree();
    (1..=(d - 3) / 2).find(|&k| sigma_k_pattern(d, k).is_ok_and(|s| &s == pattern))
}
