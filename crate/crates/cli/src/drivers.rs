//! Parallel versions of the core drivers. Work is split per combination or
//! per grid point; results come back in input order, so output does not
//! depend on scheduling.

use descartes_core::discriminant::{cubic_sample, quartic_sample, GridRange, RegionSample};
use descartes_core::realize::{
    check_degree, classify_combo, ClassifyOptions, ComboStatus, Database, WitnessBook,
};
use descartes_core::{enumerate_combos, Rational};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::error::CliError;
use crate::records::cached_status;

/// Classifies degrees `1..=d` in turn, each in parallel, and returns the
/// statuses for degree `d`. Database verdicts take precedence; otherwise a
/// cached witness is reused; otherwise the combination is classified.
pub fn classify_parallel(
    d: usize,
    db: &Database,
    opts: &ClassifyOptions,
    cache: &mut Cache,
) -> Result<Vec<ComboStatus>, CliError> {
    check_degree(d)?;
    let mut book = WitnessBook::new();
    let mut last = Vec::new();
    for k in 1..=d {
        let combos = enumerate_combos(k)?.canonical;
        let statuses: Vec<ComboStatus> = combos
            .par_iter()
            .map(|c| match cache.get(c) {
                Some((w, seed)) if db.lookup(c).is_none() => cached_status(w, seed),
                _ => classify_combo(c, db, &book, opts),
            })
            .collect();
        for s in &statuses {
            book.record(s);
            cache.record(s);
        }
        last = statuses;
    }
    Ok(last)
}

pub fn cubic_grid_parallel(
    a: &GridRange,
    b: &GridRange,
    steps: usize,
) -> Result<Vec<RegionSample>, CliError> {
    let aa = a.points(steps)?;
    let bb = b.points(steps)?;
    Ok((0..steps * steps)
        .into_par_iter()
        .map(|i| cubic_sample(&aa[i / steps], &bb[i % steps]))
        .collect())
}

pub fn quartic_slice_parallel(
    a0: &Rational,
    b: &GridRange,
    c: &GridRange,
    steps: usize,
) -> Result<Vec<RegionSample>, CliError> {
    let bb = b.points(steps)?;
    let cc = c.points(steps)?;
    Ok((0..steps * steps)
        .into_par_iter()
        .map(|i| quartic_sample(a0, &bb[i / steps], &cc[i % steps]))
        .collect())
}
