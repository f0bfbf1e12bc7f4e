//! The cubic family `x³ + x² + ax + b` and the quartic family
//! `x⁴ + x³ + ax² + bx + c`: discriminant curves, special points, and exact
//! root signatures on rational parameter grids.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::{yun_squarefree, RatPoly};
use crate::rational::{format_rational, int, rat, Rational};
use crate::rootcount::{
    count_distinct_real_roots, count_distinct_signed_roots, count_signed_roots, PairPN,
};
use crate::Error;

/// `4a³ - a² + 4b - 18ab + 27b²`, which vanishes exactly where the cubic
/// family has a repeated root. It is the negated discriminant, so three
/// distinct real roots occur iff it is negative.
pub fn disc3(a: &Rational, b: &Rational) -> Rational {
    let a2 = a * a;
    int(4) * &a2 * a - &a2 + int(4) * b - int(18) * a * b + int(27) * b * b
}

/// `64a³ - 18a² + 54b - 216ab + 216b²`.
pub fn lambda4(a: &Rational, b: &Rational) -> Rational {
    let a2 = a * a;
    int(64) * &a2 * a - int(18) * &a2 + int(54) * b - int(216) * a * b + int(216) * b * b
}

/// The line `b = a/2 - 1/8`.
pub fn tangent_line_b(a: &Rational) -> Rational {
    a / int(2) - rat(1, 8)
}

pub fn cubic_family(a: &Rational, b: &Rational) -> RatPoly {
    RatPoly::new(vec![Rational::one(), Rational::one(), a.clone(), b.clone()])
}

pub fn quartic_family(a: &Rational, b: &Rational, c: &Rational) -> RatPoly {
    RatPoly::new(vec![
        Rational::one(),
        Rational::one(),
        a.clone(),
        b.clone(),
        c.clone(),
    ])
}

/// Closed interval with exact endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridRange {
    pub lo: Rational,
    pub hi: Rational,
}

impl GridRange {
    pub fn new(lo: Rational, hi: Rational) -> Result<GridRange, Error> {
        if lo >= hi {
            return Err(Error::InvalidGrid(format!(
                "lower bound {} is not below upper bound {}",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(GridRange { lo, hi })
    }

    /// `steps` equally spaced points including both endpoints.
    pub fn points(&self, steps: usize) -> Result<Vec<Rational>, Error> {
        if steps < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 steps, got {}",
                steps
            )));
        }
        let h = (&self.hi - &self.lo) / int((steps - 1) as i64);
        Ok((0..steps).map(|i| &self.lo + &h * int(i as i64)).collect())
    }
}

/// Parameter window `a ∈ [-1, 1]`, `b ∈ [-1/2, 1/2]`.
pub fn default_cubic_window() -> (GridRange, GridRange) {
    (
        GridRange {
            lo: int(-1),
            hi: int(1),
        },
        GridRange {
            lo: rat(-1, 2),
            hi: rat(1, 2),
        },
    )
}

/// Slice window `b, c ∈ [-1/2, 1/2]`.
pub fn default_quartic_window() -> (GridRange, GridRange) {
    (
        GridRange {
            lo: rat(-1, 2),
            hi: rat(1, 2),
        },
        GridRange {
            lo: rat(-1, 2),
            hi: rat(1, 2),
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionSample {
    /// `(a, b)` or `(a, b, c)`.
    pub params: Vec<Rational>,
    /// Nonzero roots counted with multiplicity.
    pub signature: PairPN,
    /// Distinct nonzero roots.
    pub distinct_signature: PairPN,
    /// Repeated real root, or a zero root.
    pub on_locus: bool,
    /// Some coefficient vanishes, so no sign pattern is defined.
    pub zero_coefficient: bool,
}

impl RegionSample {
    /// Off the locus with every coefficient nonzero.
    pub fn is_regular(&self) -> bool {
        !self.on_locus && !self.zero_coefficient
    }
}

fn signatures(p: &RatPoly) -> (PairPN, PairPN) {
    let p = p.strip_zero_roots();
    let sig = count_signed_roots(&p).expect("family polynomials are nonzero");
    let distinct = count_distinct_signed_roots(&p).expect("family polynomials are nonzero");
    (sig, distinct)
}

pub fn cubic_sample(a: &Rational, b: &Rational) -> RegionSample {
    let p = cubic_family(a, b);
    let (signature, distinct_signature) = signatures(&p);
    RegionSample {
        params: vec![a.clone(), b.clone()],
        signature,
        distinct_signature,
        on_locus: disc3(a, b).is_zero() || b.is_zero(),
        zero_coefficient: a.is_zero() || b.is_zero(),
    }
}

pub fn quartic_sample(a: &Rational, b: &Rational, c: &Rational) -> RegionSample {
    let p = quartic_family(a, b, c);
    let (signature, distinct_signature) = signatures(&p);
    RegionSample {
        params: vec![a.clone(), b.clone(), c.clone()],
        signature,
        distinct_signature,
        on_locus: c.is_zero() || has_repeated_real_root(&p),
        zero_coefficient: a.is_zero() || b.is_zero() || c.is_zero(),
    }
}

/// Uses the square-free decomposition rather than a discriminant formula.
pub fn has_repeated_real_root(p: &RatPoly) -> bool {
    yun_squarefree(p)
        .map(|factors| {
            factors
                .iter()
                .any(|(f, m)| *m >= 2 && count_distinct_real_roots(f).unwrap_or(0) > 0)
        })
        .unwrap_or(false)
}

/// Samples the cubic family on a `steps × steps` grid, `a` major.
pub fn classify_cubic_grid(
    a_range: &GridRange,
    b_range: &GridRange,
    steps: usize,
) -> Result<Vec<RegionSample>, Error> {
    let aa = a_range.points(steps)?;
    let bb = b_range.points(steps)?;
    let mut out = Vec::with_capacity(steps * steps);
    for a in &aa {
        for b in &bb {
            out.push(cubic_sample(a, b));
        }
    }
    Ok(out)
}

/// Samples the quartic family at fixed `a = a0` over a `(b, c)` grid, `b` major.
pub fn classify_quartic_slice(
    a0: &Rational,
    b_range: &GridRange,
    c_range: &GridRange,
    steps: usize,
) -> Result<Vec<RegionSample>, Error> {
    let bb = b_range.points(steps)?;
    let cc = c_range.points(steps)?;
    let mut out = Vec::with_capacity(steps * steps);
    for b in &bb {
        for c in &cc {
            out.push(quartic_sample(a0, b, c));
        }
    }
    Ok(out)
}

/// Counts of each signature among regular samples.
pub fn census(samples: &[RegionSample]) -> BTreeMap<PairPN, usize> {
    let mut m = BTreeMap::new();
    for s in samples.iter().filter(|s| s.is_regular()) {
        *m.entry(s.signature).or_insert(0) += 1;
    }
    m
}

/// A named identity about the families, with its exact check result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub description: &'static str,
    pub poly: RatPoly,
    pub holds: bool,
}

pub fn quartic_special_points() -> Vec<Checkpoint> {
    let (a, b, c) = (rat(3, 8), rat(1, 16), rat(1, 256));
    let quadruple = quartic_family(&a, &b, &c);
    let quarter = RatPoly::linear_root(&rat(-1, 4));
    let quadruple_holds = yun_squarefree(&quadruple).is_ok_and(|f| f == vec![(quarter.clone(), 4)])
        && quadruple == quarter.pow(4);

    let cusp = cubic_family(&rat(1, 3), &rat(1, 27));
    let third = RatPoly::linear_root(&rat(-1, 3));
    let cusp_holds = disc3(&rat(1, 3), &rat(1, 27)).is_zero() && cusp == third.pow(3);

    let tangency_b = tangent_line_b(&rat(1, 4));
    let tangency = cubic_family(&rat(1, 4), &tangency_b);
    let tangency_holds = tangency_b.is_zero() && disc3(&rat(1, 4), &tangency_b).is_zero();

    let line_b = tangent_line_b(&a);
    let line_holds = line_b == b && lambda4(&a, &b).is_zero();

    let (ca, cb) = (rat(1, 3), rat(1, 27));
    let zero_slice = quartic_family(&ca, &cb, &Rational::zero());
    let zero_slice_holds =
        zero_slice == &RatPoly::monomial(Rational::one(), 1) * &cubic_family(&ca, &cb);

    vec![
        Checkpoint {
            description: "x^4 + x^3 + 3x^2/8 + x/16 + 1/256 = (x + 1/4)^4, the swallowtail point (3/8, 1/16, 1/256)",
            poly: quadruple,
            holds: quadruple_holds,
        },
        Checkpoint {
            description: "lambda4(3/8, 1/16) = 0 and the tangent line b = a/2 - 1/8 passes through (3/8, 1/16)",
            poly: quartic_family(&a, &b, &c),
            holds: line_holds,
        },
        Checkpoint {
            description: "cusp of the cubic locus at (1/3, 1/27): x^3 + x^2 + x/3 + 1/27 = (x + 1/3)^3, also on lambda4 = 0",
            poly: cusp,
            holds: cusp_holds && lambda4(&rat(1, 3), &rat(1, 27)).is_zero(),
        },
        Checkpoint {
            description: "the tangent line meets the cubic locus at (1/4, 0): x^3 + x^2 + x/4 = x (x + 1/2)^2",
            poly: tangency,
            holds: tangency_holds,
        },
        Checkpoint {
            description: "on c = 0 the quartic factors as x times the cubic family",
            poly: zero_slice,
            holds: zero_slice_holds,
        },
    ]
}
