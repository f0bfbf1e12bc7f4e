use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use descartes_core::discriminant::{census, GridRange, RegionSample};
use descartes_core::rational::{format_rational, parse_rational, rat, Rational};
use descartes_core::realize::{
    combo_seed, lemma_derivative_check, random_search, realize_combo, realize_series_pair,
    realize_series_single, summarize, ClassifyOptions, Database, MAX_CLASSIFY_DEGREE,
};
use descartes_core::{enumerate_combos, sigma_k_pattern, Combo, Error, PairPN};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cache::Cache;
use crate::cli::{CertifyArgs, ClassifyArgs, Cli, Command, Family, GridArgs, RealizeArgs};
use crate::csvout::write_samples;
use crate::dbfile::load_database;
use crate::drivers::{classify_parallel, cubic_grid_parallel, quartic_slice_parallel};
use crate::error::CliError;
use crate::records::Record;

/// Runs one invocation. Results go to `out`; seeds and notes go to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Enumerate { degree } => enumerate(*degree, out),
        Command::Classify(args) => {
            let db = load_database(cli.db.as_deref())?;
            classify(args, &db, out, err)
        }
        Command::Realize(args) => {
            let db = load_database(cli.db.as_deref())?;
            realize(args, &db, out, err)
        }
        Command::CertifySeries(args) => certify_series(args, out, err),
        Command::Discriminant { family } => discriminant(family, out, err),
    }
}

fn check_degree(d: usize) -> Result<(), CliError> {
    if !(1..=MAX_CLASSIFY_DEGREE).contains(&d) {
        return Err(CliError::Usage(format!(
            "--degree must lie in 1..={}, got {}",
            MAX_CLASSIFY_DEGREE, d
        )));
    }
    Ok(())
}

fn enumerate(degree: usize, out: &mut dyn Write) -> Result<(), CliError> {
    check_degree(degree)?;
    let e = enumerate_combos(degree)?;
    let io = |e: io::Error| CliError::io("<stdout>", e);
    for c in &e.canonical {
        writeln!(out, "{} {} {}", c.pattern, c.pair.pos, c.pair.neg).map_err(io)?;
    }
    writeln!(out, "orbits: {}", e.canonical.len()).map_err(io)?;
    writeln!(out, "monic: {}", e.monic_total).map_err(io)?;
    writeln!(out, "total: {}", e.total).map_err(io)
}

fn classify(
    args: &ClassifyArgs,
    db: &Database,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    check_degree(args.degree)?;
    let mut cache = match &args.cache {
        Some(path) => Cache::load(path)?,
        None => Cache::default(),
    };
    if cache.rejected > 0 {
        writeln!(
            err,
            "cache: dropped {} records that failed re-verification",
            cache.rejected
        )
        .ok();
    }
    let opts = ClassifyOptions {
        budget: args.budget,
        seed: args.seed,
        ..ClassifyOptions::default()
    };
    writeln!(err, "seed: {}", args.seed).ok();
    let statuses = classify_parallel(args.degree, db, &opts, &mut cache)?;
    let lines: Vec<String> = statuses
        .iter()
        .map(|s| Record::from_status(s).to_line())
        .collect();
    match &args.out {
        Some(path) => write_lines(path, &lines)?,
        None => {
            for l in &lines {
                writeln!(out, "{}", l).map_err(|e| CliError::io("<stdout>", e))?;
            }
        }
    }
    cache.save()?;
    let (r, n, u) = summarize(&statuses);
    writeln!(out, "realized: {}, nonrealizable: {}, unknown: {}", r, n, u)
        .map_err(|e| CliError::io("<stdout>", e))
}

fn write_lines(path: &Path, lines: &[String]) -> Result<(), CliError> {
    let mut w = BufWriter::new(fs::File::create(path).map_err(|e| CliError::io(path, e))?);
    for l in lines {
        writeln!(w, "{}", l).map_err(|e| CliError::io(path, e))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

fn realize(
    args: &RealizeArgs,
    db: &Database,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let combo = Combo::parse(&args.pattern, args.pos, args.neg).map_err(|e| match e {
        Error::Inadmissible { .. } => CliError::Usage(format!("inadmissible: {}", e)),
        other => CliError::Core(other),
    })?;
    let opts = ClassifyOptions {
        budget: args.budget,
        seed: args.seed,
        ..ClassifyOptions::default()
    };
    writeln!(err, "seed: {}", args.seed).ok();
    let status = realize_combo(&combo, db, &opts);
    writeln!(out, "{}", Record::from_status(&status).to_line())
        .map_err(|e| CliError::io("<stdout>", e))
}

struct Row {
    check: String,
    pass: bool,
    detail: String,
}

fn certify_series(
    args: &CertifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let (d, k) = (args.degree, args.k);
    let pattern = sigma_k_pattern(d, k)?;
    writeln!(err, "seed: {}", args.seed).ok();
    let mut rows = Vec::new();

    let single = realize_series_single(d, k);
    rows.push(Row {
        check: "construct (1,0)".into(),
        pass: single.is_ok(),
        detail: match &single {
            Ok(w) => format!(
                "verified, constant term {}",
                format_rational(w.poly().coeffs().last().expect("nonzero"))
            ),
            Err(e) => e.to_string(),
        },
    });
    let r_max = (d - 2 * k - 1) / 2;
    for l in 0..=k {
        for r in 1..=r_max {
            let res = realize_series_pair(d, k, l, r);
            rows.push(Row {
                check: format!("construct {}", PairPN::new(2 * l + 1, 2 * r)),
                pass: res.is_ok(),
                detail: match res {
                    Ok(_) => format!("verified (l={}, r={})", l, r),
                    Err(e) => e.to_string(),
                },
            });
        }
    }

    for a0 in derivative_samples(args.samples, args.seed) {
        let res = lemma_derivative_check(d, k, &a0);
        let (pass, detail) = match res {
            Ok(rows) => {
                let bad = rows.iter().filter(|r| !r.is_positive()).count();
                (
                    bad == 0,
                    format!("{} derivatives at 1, {} not positive", rows.len(), bad),
                )
            }
            Err(e) => (false, e.to_string()),
        };
        rows.push(Row {
            check: format!("derivatives a0={}", format_rational(&a0)),
            pass,
            detail,
        });
    }

    for s in 1..=k {
        let combo = Combo::new(pattern.clone(), PairPN::new(2 * s + 1, 0))?;
        let seed = combo_seed(args.seed, &combo);
        let found = random_search(&combo, args.budget, seed);
        rows.push(Row {
            check: format!("search {}", combo.pair),
            pass: found.is_none(),
            detail: match found {
                None => format!("no witness in {} trials (seed {})", args.budget, seed),
                Some(w) => format!("witness found: {}", w.poly()),
            },
        });
    }

    let io = |e: io::Error| CliError::io("<stdout>", e);
    writeln!(out, "sigma_k d={} k={} pattern {}", d, k, pattern).map_err(io)?;
    let width = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
    for r in &rows {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        writeln!(
            out,
            "{:width$}  {}  {}",
            r.check,
            verdict,
            r.detail,
            width = width
        )
        .map_err(io)?;
    }
    writeln!(
        out,
        "note: search results are statistical evidence, not a proof of non-realizability"
    )
    .map_err(io)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    writeln!(out, "checks: {}, failed: {}", rows.len(), failed).map_err(io)?;
    if failed > 0 {
        return Err(CliError::Certification(format!(
            "{} of {} checks failed",
            failed,
            rows.len()
        )));
    }
    Ok(())
}

/// A few fixed leading coefficients followed by seeded draws from `(1, 100]`.
fn derivative_samples(n: usize, seed: u64) -> Vec<Rational> {
    let fixed = [rat(2, 1), rat(3, 2), rat(1001, 1000), rat(100, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Rational> = fixed.into_iter().take(n).collect();
    while v.len() < n {
        let m: i64 = rng.gen_range(1..=99_000);
        v.push(rat(1000 + m, 1000));
    }
    v
}

fn parse_bound(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text)
        .map_err(|_| CliError::Usage(format!("--{}: cannot parse `{}` as a rational", name, text)))
}

fn range(name: &str, lo: &str, hi: &str) -> Result<GridRange, CliError> {
    GridRange::new(
        parse_bound(&format!("{}-min", name), lo)?,
        parse_bound(&format!("{}-max", name), hi)?,
    )
    .map_err(|e| CliError::Usage(format!("{} window: {}", name, e)))
}

fn discriminant(family: &Family, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let (samples, grid) = match family {
        Family::Cubic {
            a_min,
            a_max,
            b_min,
            b_max,
            grid,
        } => {
            check_steps(grid)?;
            (
                cubic_grid_parallel(
                    &range("a", a_min, a_max)?,
                    &range("b", b_min, b_max)?,
                    grid.steps,
                )?,
                grid,
            )
        }
        Family::QuarticSlice {
            a,
            b_min,
            b_max,
            c_min,
            c_max,
            grid,
        } => {
            check_steps(grid)?;
            let a0 = parse_bound("a", a)?;
            (
                quartic_slice_parallel(
                    &a0,
                    &range("b", b_min, b_max)?,
                    &range("c", c_min, c_max)?,
                    grid.steps,
                )?,
                grid,
            )
        }
    };
    match &grid.out {
        Some(path) => {
            let mut w = BufWriter::new(fs::File::create(path).map_err(|e| CliError::io(path, e))?);
            write_samples(&mut w, &samples)
                .and_then(|_| w.flush())
                .map_err(|e| CliError::io(path, e))?;
            write_census(out, &samples).map_err(|e| CliError::io("<stdout>", e))
        }
        None => {
            write_samples(out, &samples).map_err(|e| CliError::io("<stdout>", e))?;
            write_census(err, &samples).map_err(|e| CliError::io("<stderr>", e))
        }
    }
}

fn check_steps(grid: &GridArgs) -> Result<(), CliError> {
    if grid.steps < 2 {
        return Err(CliError::Usage(format!(
            "--steps must be at least 2, got {}",
            grid.steps
        )));
    }
    Ok(())
}

fn write_census(w: &mut dyn Write, samples: &[RegionSample]) -> io::Result<()> {
    let c = census(samples);
    writeln!(w, "samples: {}", samples.len())?;
    writeln!(
        w,
        "on_locus: {}",
        samples.iter().filter(|s| s.on_locus).count()
    )?;
    writeln!(
        w,
        "zero_coefficient: {}",
        samples.iter().filter(|s| s.zero_coefficient).count()
    )?;
    let mut by_total: BTreeMap<usize, usize> = BTreeMap::new();
    for (pair, n) in &c {
        writeln!(w, "{} {}", pair, n)?;
        *by_total.entry(pair.total()).or_insert(0) += n;
    }
    for (t, n) in by_total {
        writeln!(w, "real roots {}: {}", t, n)?;
    }
    Ok(())
}
