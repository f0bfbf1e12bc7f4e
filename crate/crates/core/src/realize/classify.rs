//! Classification of every canonical combination of a degree.
//!
//! Per combination, in order: database lookup, a base-block plan, a split
//! into two already-realized smaller combinations, randomized search. Only
//! the database can produce a non-realizable verdict; a failed search is
//! reported as `Unknown`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::pattern::{canonicalize_with, enumerate_combos, Combo};
use crate::Error;

use super::concat::{realize_by_blocks, realize_by_splitting};
use super::db::{Database, NonrealizableEntry};
use super::search::{random_search_with, SearchConfig, DEFAULT_BUDGET};
use super::witness::Witness;

pub const MAX_CLASSIFY_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Blocks,
    Concatenation,
    RandomSearch,
    /// Loaded from a previous run and re-verified.
    Cache,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Blocks => "blocks",
            Method::Concatenation => "concatenation",
            Method::RandomSearch => "random-search",
            Method::Cache => "cache",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Realized {
        witness: Witness,
        method: Method,
    },
    KnownNonrealizable(NonrealizableEntry),
    /// Search gave up after spending `budget`.
    Unknown {
        budget: usize,
    },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Realized { .. } => "realized",
            Status::KnownNonrealizable(_) => "nonrealizable",
            Status::Unknown { .. } => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComboStatus {
    pub combo: Combo,
    pub status: Status,
    /// Seed handed to the search for this combination.
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyOptions {
    pub budget: usize,
    pub seed: u64,
    pub search: SearchConfig,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            budget: DEFAULT_BUDGET,
            seed: 0,
            search: SearchConfig::default(),
        }
    }
}

/// Realized witnesses indexed by canonical combination.
#[derive(Clone, Debug, Default)]
pub struct WitnessBook {
    map: BTreeMap<Combo, Witness>,
}

impl WitnessBook {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores the witness under its canonical combination.
    pub fn insert(&mut self, w: &Witness) {
        let (canonical, g) = canonicalize_with(w.combo());
        if self.map.contains_key(&canonical) {
            return;
        }
        if let Some(t) = w.transport(g) {
            self.map.insert(canonical, t);
        }
    }

    /// A witness for `combo` itself, transported from the stored one.
    pub fn get(&self, combo: &Combo) -> Option<Witness> {
        let (canonical, g) = canonicalize_with(combo);
        let stored = self.map.get(&canonical)?;
        // every element is its own inverse
        stored.transport(g)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn record(&mut self, s: &ComboStatus) {
        if let Status::Realized { witness, .. } = &s.status {
            self.insert(witness);
        }
    }
}

/// Per-combination seed: a SplitMix64 hash of the run seed and the combo key.
pub fn combo_seed(seed: u64, combo: &Combo) -> u64 {
    let mut h = splitmix(seed);
    for b in combo.key().bytes() {
        h = splitmix(h ^ u64::from(b));
    }
    h
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Classifies one combination. Pure in its arguments; `book` should hold
/// witnesses for lower degrees.
pub fn classify_combo(
    combo: &Combo,
    db: &Database,
    book: &WitnessBook,
    opts: &ClassifyOptions,
) -> ComboStatus {
    let seed = combo_seed(opts.seed, combo);
    let status = classify_status(combo, db, |part| book.get(part), opts, seed);
    ComboStatus {
        combo: combo.clone(),
        status,
        seed,
    }
}

/// Classifies a lone combination, with no lower-degree results at hand:
/// the splitting step only uses parts that base blocks realize directly.
pub fn realize_combo(combo: &Combo, db: &Database, opts: &ClassifyOptions) -> ComboStatus {
    let seed = combo_seed(opts.seed, combo);
    let known = |part: &Combo| {
        if db.lookup(part).is_some() {
            None
        } else {
            realize_by_blocks(part)
        }
    };
    let status = classify_status(combo, db, known, opts, seed);
    ComboStatus {
        combo: combo.clone(),
        status,
        seed,
    }
}

fn classify_status<F>(
    combo: &Combo,
    db: &Database,
    known: F,
    opts: &ClassifyOptions,
    seed: u64,
) -> Status
where
    F: FnMut(&Combo) -> Option<Witness>,
{
    if let Some(entry) = db.lookup(combo) {
        return Status::KnownNonrealizable(entry);
    }
    if let Some(w) = realize_by_blocks(combo) {
        return Status::Realized {
            witness: w,
            method: Method::Blocks,
        };
    }
    if let Some(w) = realize_by_splitting(combo, known) {
        return Status::Realized {
            witness: w,
            method: Method::Concatenation,
        };
    }
    match random_search_with(combo, opts.budget, seed, &opts.search) {
        Some(w) => Status::Realized {
            witness: w.simplified(),
            method: Method::RandomSearch,
        },
        None => Status::Unknown {
            budget: opts.budget,
        },
    }
}

pub fn check_degree(d: usize) -> Result<(), Error> {
    if !(1..=MAX_CLASSIFY_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            min: 1,
            max: MAX_CLASSIFY_DEGREE,
        });
    }
    Ok(())
}

/// Classifies all canonical combinations of degree `d` with the embedded
/// database and default search settings.
pub fn classify(d: usize, budget: usize, seed: u64) -> Result<Vec<ComboStatus>, Error> {
    let opts = ClassifyOptions {
        budget,
        seed,
        ..ClassifyOptions::default()
    };
    let mut book = WitnessBook::new();
    classify_with(d, &Database::embedded(), &opts, &mut book)
}

/// Classifies degrees `1..d` into `book` first (their witnesses feed the
/// splitting step), then returns the statuses for degree `d` in canonical
/// order. Sequential; the CLI has a parallel driver.
pub fn classify_with(
    d: usize,
    db: &Database,
    opts: &ClassifyOptions,
    book: &mut WitnessBook,
) -> Result<Vec<ComboStatus>, Error> {
    check_degree(d)?;
    let mut last = Vec::new();
    for k in 1..=d {
        let combos = enumerate_combos(k)?.canonical;
        let statuses: Vec<ComboStatus> = combos
            .iter()
            .map(|c| classify_combo(c, db, book, opts))
            .collect();
        for s in &statuses {
            book.record(s);
        }
        last = statuses;
    }
    Ok(last)
}

/// Counts `(realized, nonrealizable, unknown)`.
pub fn summarize(statuses: &[ComboStatus]) -> (usize, usize, usize) {
    statuses
        .iter()
        .fold((0, 0, 0), |(r, n, u), s| match s.status {
            Status::Realized { .. } => (r + 1, n, u),
            Status::KnownNonrealizable(_) => (r, n + 1, u),
            Status::Unknown { .. } => (r, n, u + 1),
        })
}
