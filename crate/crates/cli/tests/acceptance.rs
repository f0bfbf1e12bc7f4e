//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Run with `cargo test -p descartes-cli --test acceptance`.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use descartes_cli::cache::Cache;
use descartes_cli::drivers::{classify_parallel, quartic_slice_parallel};
use descartes_core::discriminant::{default_quartic_window, disc3, lambda4};
use descartes_core::rational::{int, rat};
use descartes_core::realize::{
    combo_seed, lemma_derivative_check, random_search, realize_series_pair, realize_series_single,
    verify_witness, ClassifyOptions, ComboStatus, Database, Status, Witness,
};
use descartes_core::{
    act, canonical_rep, count_signed_roots, sigma_k_pattern, yun_squarefree, Combo, GroupElement,
    PairPN, RatPoly, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > limit {
        o.pass = false;
        o.detail = format!("{}; took {:.1?}, limit {:?}", o.detail, took, limit);
    } else {
        o.detail = format!("{} ({:.1?})", o.detail, took);
    }
    o
}

/// Name, runtime bound, check.
type Check = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let checks: Vec<Check> = vec![
        ("1 enumeration totals", Duration::from_secs(10), enumeration),
        (
            "2 classification tables d=4..8",
            Duration::from_secs(1800),
            classification,
        ),
        (
            "3 degrees <= 3 all realized",
            Duration::from_secs(60),
            low_degrees,
        ),
        (
            "4 series constructions",
            Duration::from_secs(300),
            series_constructions,
        ),
        (
            "5 series falsification",
            Duration::from_secs(1800),
            series_falsification,
        ),
        (
            "6 derivative rows positive",
            Duration::from_secs(60),
            derivative_rows,
        ),
        (
            "7 root counting vs construction",
            Duration::from_secs(120),
            root_counting,
        ),
        (
            "8 discriminant checkpoints",
            Duration::from_secs(60),
            checkpoints,
        ),
        (
            "9 quartic slice phenomenology",
            Duration::from_secs(300),
            quartic_slices,
        ),
        (
            "10 group transport soundness",
            Duration::from_secs(60),
            transport,
        ),
    ];
    let mut failed = 0;
    for (name, limit, f) in checks {
        let o = timed(limit, f);
        println!(
            "{} {}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn enumeration() -> Outcome {
    let mut totals = Vec::new();
    for d in [7, 8] {
        let out = Command::new(env!("CARGO_BIN_EXE_descartes"))
            .args(["enumerate", "--degree", &d.to_string()])
            .output()
            .expect("binary runs");
        let text = String::from_utf8_lossy(&out.stdout).into_owned();
        let total = text
            .lines()
            .find_map(|l| l.strip_prefix("total: "))
            .and_then(|t| t.parse::<usize>().ok());
        totals.push(total);
    }
    outcome(
        totals == [Some(1472), Some(3648)],
        format!("d=7 total {:?}, d=8 total {:?}", totals[0], totals[1]),
    )
}

/// Non-realizable combinations per degree as published, leading sign first.
fn expected_nonrealizable(d: usize) -> BTreeSet<Combo> {
    let list: &[(&str, usize, usize)] = match d {
        4 => &[("+---+", 0, 2)],
        5 => &[("+----+", 0, 3)],
        6 => &[
            ("+-----+", 0, 2),
            ("+-----+", 0, 4),
            ("++++-++", 2, 0),
            ("++----+", 0, 4),
        ],
        7 => &[
            ("++-----+", 0, 5),
            ("++----++", 0, 5),
            ("++-+----", 3, 0),
            ("+++----+", 0, 5),
            ("+------+", 0, 3),
            ("+------+", 0, 5),
        ],
        8 => &[
            ("++-----++", 0, 6),
            ("+------++", 0, 6),
            ("++++----+", 0, 6),
            ("+++-----+", 0, 6),
            ("++++-++++", 2, 0),
            ("++++++-++", 2, 0),
            ("++++-+-++", 2, 0),
            ("++++-+-++", 4, 0),
            ("+---+---+", 0, 2),
            ("+---+---+", 0, 4),
            ("+-------+", 0, 2),
            ("+-------+", 0, 4),
            ("+-------+", 0, 6),
        ],
        _ => &[],
    };
    list.iter()
        .map(|(p, pos, neg)| canonical_rep(&Combo::parse(p, *pos, *neg).unwrap()))
        .collect()
}

fn classification() -> Outcome {
    let db = Database::embedded();
    let opts = ClassifyOptions::default();
    let mut cache = Cache::default();
    let mut pass = true;
    let mut parts = Vec::new();
    let mut unknown_list = Vec::new();
    for d in 4..=8 {
        let statuses = classify_parallel(d, &db, &opts, &mut cache).expect("degree in range");
        let nonrealizable: BTreeSet<Combo> = statuses
            .iter()
            .filter(|s| matches!(s.status, Status::KnownNonrealizable(_)))
            .map(|s| s.combo.clone())
            .collect();
        let unknown: Vec<&ComboStatus> = statuses
            .iter()
            .filter(|s| matches!(s.status, Status::Unknown { .. }))
            .collect();
        let bad_witness = statuses.iter().any(|s| match &s.status {
            Status::Realized { witness, .. } => !verify_witness(witness.poly(), &s.combo),
            _ => false,
        });
        let expected = expected_nonrealizable(d);
        let ok = nonrealizable == expected && unknown.is_empty() && !bad_witness;
        pass &= ok;
        parts.push(format!(
            "d={} nonrealizable {} (expected {}, lists {}) unknown {}",
            d,
            nonrealizable.len(),
            expected.len(),
            if nonrealizable == expected {
                "match"
            } else {
                "differ"
            },
            unknown.len()
        ));
        unknown_list.extend(
            unknown
                .iter()
                .map(|s| format!("{} {}", s.combo.pattern, s.combo.pair)),
        );
    }
    let mut detail = parts.join("; ");
    if !unknown_list.is_empty() {
        detail = format!("{}; unknown: {}", detail, unknown_list.join(", "));
    }
    outcome(pass, detail)
}

fn low_degrees() -> Outcome {
    let db = Database::embedded();
    let opts = ClassifyOptions::default();
    let mut cache = Cache::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    for d in 1..=3 {
        for s in classify_parallel(d, &db, &opts, &mut cache).expect("degree in range") {
            // every orbit element, not just the representative
            for g in GroupElement::ALL {
                let image = act(g, &s.combo);
                let ok = match &s.status {
                    Status::Realized { witness, .. } => witness
                        .transport(g)
                        .is_some_and(|w| verify_witness(w.poly(), &image)),
                    _ => false,
                };
                checked += 1;
                if !ok {
                    bad.push(format!("{} {}", image.pattern, image.pair));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} combos checked, failures {:?}", checked, bad),
    )
}

fn sigma_range() -> Vec<(usize, usize)> {
    [5, 7, 9, 11]
        .into_iter()
        .flat_map(|d| (1..=(d - 3) / 2).map(move |k| (d, k)))
        .collect()
}

fn series_constructions() -> Outcome {
    let mut jobs = Vec::new();
    for (d, k) in sigma_range() {
        jobs.push((d, k, None));
        for l in 0..=k {
            for r in 1..=(d - 2 * k - 1) / 2 {
                jobs.push((d, k, Some((l, r))));
            }
        }
    }
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(d, k, lr)| {
            let pattern = sigma_k_pattern(d, k).unwrap();
            let (w, pair) = match lr {
                None => (realize_series_single(d, k), PairPN::new(1, 0)),
                Some((l, r)) => (
                    realize_series_pair(d, k, l, r),
                    PairPN::new(2 * l + 1, 2 * r),
                ),
            };
            let want = Combo::new(pattern, pair).unwrap();
            match w {
                Ok(w) if w.combo() == &want && verify_witness(w.poly(), &want) => None,
                _ => Some(format!("d={} k={} {:?}", d, k, lr)),
            }
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!("{} constructions, failures {:?}", jobs.len(), failures),
    )
}

fn series_falsification() -> Outcome {
    let mut combos = Vec::new();
    for (d, k) in sigma_range() {
        let pattern = sigma_k_pattern(d, k).unwrap();
        for s in 1..=k {
            combos.push(Combo::new(pattern.clone(), PairPN::new(2 * s + 1, 0)).unwrap());
        }
    }
    let found: Vec<String> = combos
        .par_iter()
        .filter_map(|c| {
            random_search(c, 100_000, combo_seed(0, c)).map(|_| format!("{} {}", c.pattern, c.pair))
        })
        .collect();
    outcome(
        found.is_empty(),
        format!(
            "{} searches at budget 100000, witnesses found {:?}; statistical evidence, not a proof",
            combos.len(),
            found
        ),
    )
}

fn derivative_rows() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let d = 2 * rng.gen_range(2..=7) + 1;
        let k = rng.gen_range(1..=(d - 3) / 2);
        // a0 in (1, 100] on a grid of step 1/1000
        let a0 = rat(1000 + rng.gen_range(1..=99_000), 1000);
        let ok = lemma_derivative_check(d, k, &a0)
            .is_ok_and(|rows| rows.iter().all(|r| r.is_positive()));
        if !ok {
            failures.push(format!("d={} k={} a0={}", d, k, a0));
        }
    }
    outcome(
        failures.is_empty(),
        format!("100 instances, failures {:?}", failures),
    )
}

fn root_counting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut repeated = 0;
    let mut mismatches = Vec::new();
    for _ in 0..1000 {
        let degree = rng.gen_range(1..=10);
        let mut poly = RatPoly::constant(rat(rng.gen_range(1..=9), rng.gen_range(1..=9)));
        let mut pair = PairPN::default();
        let mut built = 0;
        let mut has_repeat = false;
        while built < degree {
            let room = degree - built;
            if room >= 2 && rng.gen_bool(0.25) {
                // irreducible quadratic x^2 + bx + c with c > b^2/4
                let b = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                let c = &b * &b / int(4) + rat(rng.gen_range(1..=20), rng.gen_range(1..=5));
                poly = &poly * &RatPoly::new(vec![int(1), b, c]);
                built += 2;
                continue;
            }
            let m = rng.gen_range(1..=room.min(3));
            let r = rat(rng.gen_range(1..=20), rng.gen_range(1..=7));
            let positive = rng.gen_bool(0.5);
            let root = if positive { r } else { -r };
            poly = &poly * &RatPoly::linear_root(&root).pow(m);
            if positive {
                pair.pos += m;
            } else {
                pair.neg += m;
            }
            has_repeat |= m > 1;
            built += m;
        }
        repeated += usize::from(has_repeat);
        let got = count_signed_roots(&poly).ok();
        if got != Some(pair) && mismatches.len() < 5 {
            mismatches.push(format!("{:?}: expected {}, got {:?}", poly, pair, got));
        }
    }
    outcome(
        mismatches.is_empty() && repeated > 0,
        format!(
            "1000 polynomials, {} with repeated roots, mismatches {:?}",
            repeated, mismatches
        ),
    )
}

fn checkpoints() -> Outcome {
    let zero = int(0);
    let results = [
        ("disc3(1/3,1/27)=0", disc3(&rat(1, 3), &rat(1, 27)) == zero),
        ("disc3(0,0)=0", disc3(&zero, &zero) == zero),
        ("disc3(1/4,0)=0", disc3(&rat(1, 4), &zero) == zero),
        (
            "lambda4(3/8,1/16)=0",
            lambda4(&rat(3, 8), &rat(1, 16)) == zero,
        ),
        ("lambda4(0,0)=0", lambda4(&zero, &zero) == zero),
        ("yun(x^4+x^3+3x^2/8+x/16+1/256)=[(x+1/4,4)]", {
            let p = RatPoly::new(vec![int(1), int(1), rat(3, 8), rat(1, 16), rat(1, 256)]);
            yun_squarefree(&p).is_ok_and(|f| f == vec![(RatPoly::linear_root(&rat(-1, 4)), 4)])
        }),
    ];
    let failed: Vec<&str> = results
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    outcome(
        failed.is_empty(),
        format!("{} checkpoints, failed {:?}", results.len(), failed),
    )
}

fn quartic_slices() -> Outcome {
    let (b, c) = default_quartic_window();
    let steps = 201;
    let totals = |a: &Rational| -> (
        BTreeSet<usize>,
        Vec<descartes_core::discriminant::RegionSample>,
    ) {
        let samples = quartic_slice_parallel(a, &b, &c, steps).expect("valid window");
        let t = samples
            .iter()
            .filter(|s| s.is_regular())
            .map(|s| s.signature.total())
            .collect();
        (t, samples)
    };
    let (neg_totals, neg_samples) = totals(&rat(-1, 10));
    let (pos_totals, _) = totals(&rat(2, 5));
    let has_all = [0, 2, 4].iter().all(|t| neg_totals.contains(t));
    let no_four = !pos_totals.contains(&4);
    let zero = int(0);
    let (mut zero_two, mut two_zero) = (0, 0);
    for s in neg_samples
        .iter()
        .filter(|s| s.is_regular() && s.params[1] > zero && s.params[2] > zero)
    {
        if s.signature.total() == 2 {
            if s.signature == PairPN::new(0, 2) {
                zero_two += 1;
            } else {
                two_zero += 1;
            }
        }
    }
    outcome(
        has_all && no_four && two_zero == 0 && zero_two > 0,
        format!(
            "a=-1/10 totals {:?}; a=2/5 totals {:?}; octant 2-root samples: {} as (0,2), {} otherwise",
            neg_totals, pos_totals, zero_two, two_zero
        ),
    )
}

fn transport() -> Outcome {
    let db = Database::embedded();
    let opts = ClassifyOptions::default();
    let mut cache = Cache::default();
    let mut realized: Vec<Witness> = Vec::new();
    for d in 1..=6 {
        for s in classify_parallel(d, &db, &opts, &mut cache).expect("degree in range") {
            if let Status::Realized { witness, .. } = s.status {
                realized.push(witness);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let base = &realized[rng.gen_range(0..realized.len())];
        // start from a random orbit element, not always the representative
        let start = base
            .transport(GroupElement::ALL[rng.gen_range(0..4)])
            .expect("verified");
        for g in [GroupElement::NegateArgument, GroupElement::Reverse] {
            let image = act(g, start.combo());
            let ok = start
                .transport(g)
                .is_some_and(|w| w.combo() == &image && verify_witness(w.poly(), &image));
            if !ok {
                failures.push(format!(
                    "{} {} under {:?}",
                    start.combo().pattern,
                    start.combo().pair,
                    g
                ));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "100 combos from {} realized orbits, failures {:?}",
            realized.len(),
            failures
        ),
    )
}
