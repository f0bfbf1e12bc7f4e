//! Sign patterns, Descartes pairs, admissibility and the Z2×Z2 action.
//!
//! Patterns are full patterns of monic polynomials: the first sign is always
//! `+`. Text form is a string over `+`/`-` of length `d + 1`, e.g.
//! `++-+--`.
//!
//! The group acts on combinations (pattern and pair together):
//!
//! - [`GroupElement::NegateArgument`] is `P(x) ↦ (-1)^d P(-x)`: odd positions
//!   flip, and the pair swaps to `(neg, pos)`;
//! - [`GroupElement::Reverse`] is `P(x) ↦ x^d P(1/x)` renormalized to be
//!   monic: the pattern is read backwards and negated if it now starts with
//!   `-`; the pair is unchanged.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::poly::RatPoly;
use crate::rootcount::PairPN;
use crate::Error;

/// A coefficient sign. `Plus` orders before `Minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPattern {
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self, Error> {
        if signs.len() < 2 {
            return Err(Error::InvalidPattern(
                "a pattern needs at least two signs".into(),
            ));
        }
        if signs[0] != Sign::Plus {
            return Err(Error::InvalidPattern("leading sign must be +".into()));
        }
        Ok(SignPattern { signs })
    }

    /// Builds `(+, shortened...)`.
    pub fn from_shortened(shortened: &[Sign]) -> Result<Self, Error> {
        let mut signs = Vec::with_capacity(shortened.len() + 1);
        signs.push(Sign::Plus);
        signs.extend_from_slice(shortened);
        Self::new(signs)
    }

    pub fn degree(&self) -> usize {
        self.signs.len() - 1
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// All signs but the leading `+`.
    pub fn shortened(&self) -> &[Sign] {
        &self.signs[1..]
    }

    pub fn last(&self) -> Sign {
        *self.signs.last().expect("pattern is never empty")
    }

    /// `true` at position `i` when signs `i` and `i + 1` differ.
    pub fn changes(&self) -> impl Iterator<Item = bool> + '_ {
        self.signs.windows(2).map(|w| w[0] != w[1])
    }

    pub fn descartes_pair(&self) -> DescartesPair {
        let changes = self.changes().filter(|&c| c).count();
        DescartesPair {
            changes,
            preservations: self.degree() - changes,
        }
    }

    /// Checks the Descartes restrictions for `pair`, naming the first clause
    /// that fails.
    pub fn check_admissible(&self, pair: PairPN) -> Result<(), Error> {
        let dp = self.descartes_pair();
        let reason = if pair.pos > dp.changes {
            Some(alloc::format!(
                "pos = {} exceeds sign changes p = {}",
                pair.pos,
                dp.changes
            ))
        } else if pair.pos % 2 != dp.changes % 2 {
            Some(alloc::format!(
                "parity: pos = {} is not congruent to p = {} mod 2",
                pair.pos,
                dp.changes
            ))
        } else if pair.neg > dp.preservations {
            Some(alloc::format!(
                "neg = {} exceeds sign preservations n = {}",
                pair.neg,
                dp.preservations
            ))
        } else if pair.neg % 2 != dp.preservations % 2 {
            Some(alloc::format!(
                "parity: neg = {} is not congruent to n = {} mod 2",
                pair.neg,
                dp.preservations
            ))
        } else {
            None
        };
        match reason {
            None => Ok(()),
            Some(reason) => Err(Error::Inadmissible {
                pattern: self.to_string(),
                pos: pair.pos,
                neg: pair.neg,
                reason,
            }),
        }
    }

    pub fn is_admissible(&self, pair: PairPN) -> bool {
        self.check_admissible(pair).is_ok()
    }

    /// The same pattern with every sign after position 0 multiplied by
    /// `(-1)^j`.
    fn alternated(&self) -> SignPattern {
        let signs = self
            .signs
            .iter()
            .enumerate()
            .map(|(j, &s)| if j % 2 == 1 { s.flip() } else { s })
            .collect();
        SignPattern { signs }
    }

    fn reversed(&self) -> SignPattern {
        let mut signs: Vec<Sign> = self.signs.iter().rev().copied().collect();
        if signs[0] == Sign::Minus {
            for s in signs.iter_mut() {
                *s = s.flip();
            }
        }
        SignPattern { signs }
    }

    /// `(1, shortened, tail)` when the last sign is `+`, else
    /// `(1, shortened, -tail)`.
    pub fn concatenated(&self, other: &SignPattern) -> SignPattern {
        let flip = self.last() == Sign::Minus;
        let mut signs = self.signs.clone();
        signs.extend(
            other
                .shortened()
                .iter()
                .map(|&s| if flip { s.flip() } else { s }),
        );
        SignPattern { signs }
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(Error::InvalidPattern(alloc::format!(
                    "unexpected character `{}`",
                    other
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SignPattern::new(signs)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignPattern({})", self)
    }
}

/// Sign changes `p` and sign preservations `n` of a full pattern;
/// `p + n = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DescartesPair {
    pub changes: usize,
    pub preservations: usize,
}

pub fn descartes_pair(pattern: &SignPattern) -> DescartesPair {
    pattern.descartes_pair()
}

/// All admissible pairs, sorted by `(pos, neg)`.
pub fn admissible_pairs(pattern: &SignPattern) -> Vec<PairPN> {
    let dp = pattern.descartes_pair();
    let mut out = Vec::new();
    for pos in (dp.changes % 2..=dp.changes).step_by(2) {
        for neg in (dp.preservations % 2..=dp.preservations).step_by(2) {
            out.push(PairPN::new(pos, neg));
        }
    }
    out
}

/// Sign pattern of a monic polynomial with no zero coefficient.
pub fn pattern_of(p: &RatPoly) -> Result<SignPattern, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let signs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if c.is_zero() {
                Err(Error::ZeroCoefficient(j))
            } else if c.is_positive() {
                Ok(Sign::Plus)
            } else {
                Ok(Sign::Minus)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    SignPattern::new(signs)
}

/// A sign pattern together with a candidate `(pos, neg)` pair.
///
/// Ordering is lexicographic on the pattern (`+` before `-`), then `pos`,
/// then `neg`; canonical representatives are orbit minima under it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Combo {
    pub pattern: SignPattern,
    pub pair: PairPN,
}

impl Combo {
    /// Fails unless the pair is admissible for the pattern.
    pub fn new(pattern: SignPattern, pair: PairPN) -> Result<Self, Error> {
        pattern.check_admissible(pair)?;
        Ok(Combo { pattern, pair })
    }

    pub fn degree(&self) -> usize {
        self.pattern.degree()
    }
}

impl fmt::Display for Combo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.pattern, self.pair)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Identity,
    /// `P(x) ↦ (-1)^d P(-x)`.
    NegateArgument,
    /// `P(x) ↦ x^d P(1/x)`, made monic.
    Reverse,
    /// Both generators (they commute).
    Both,
}

impl GroupElement {
    pub const ALL: [GroupElement; 4] = [
        GroupElement::Identity,
        GroupElement::NegateArgument,
        GroupElement::Reverse,
        GroupElement::Both,
    ];
}

pub fn act(g: GroupElement, c: &Combo) -> Combo {
    match g {
        GroupElement::Identity => c.clone(),
        GroupElement::NegateArgument => Combo {
            pattern: c.pattern.alternated(),
            pair: c.pair.swapped(),
        },
        GroupElement::Reverse => Combo {
            pattern: c.pattern.reversed(),
            pair: c.pair,
        },
        GroupElement::Both => act(GroupElement::Reverse, &act(GroupElement::NegateArgument, c)),
    }
}

/// The four images of `c` (with repetitions when the orbit is smaller).
pub fn orbit(c: &Combo) -> [Combo; 4] {
    GroupElement::ALL.map(|g| act(g, c))
}

pub fn canonical_rep(c: &Combo) -> Combo {
    let [a, b, cc, d] = orbit(c);
    a.min(b).min(cc).min(d)
}

/// Canonical representative together with a group element mapping `c` to it.
pub fn canonicalize_with(c: &Combo) -> (Combo, GroupElement) {
    GroupElement::ALL
        .iter()
        .map(|&g| (act(g, c), g))
        .min_by(|x, y| x.0.cmp(&y.0))
        .expect("orbit is nonempty")
}

pub const MAX_ENUMERATION_DEGREE: usize = 16;

/// Result of enumerating all admissible combinations of one degree.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub degree: usize,
    /// One canonical representative per orbit, sorted.
    pub canonical: Vec<Combo>,
    /// Admissible combinations over the `2^d` monic patterns.
    pub monic_total: usize,
    /// Admissible combinations over all `2^(d+1)` sign sequences, i.e. with
    /// the leading sign free. This is the conventional headline count
    /// (1472 for d = 7, 3648 for d = 8).
    pub total: usize,
}

/// All monic patterns of degree `d`, in lexicographic order.
pub fn all_patterns(d: usize) -> impl Iterator<Item = SignPattern> {
    (0u64..1u64 << d).map(move |bits| {
        let mut signs = Vec::with_capacity(d + 1);
        signs.push(Sign::Plus);
        for i in (0..d).rev() {
            signs.push(if bits >> i & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            });
        }
        SignPattern { signs }
    })
}

pub fn enumerate_combos(d: usize) -> Result<Enumeration, Error> {
    if !(1..=MAX_ENUMERATION_DEGREE).contains(&d) {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            min: 1,
            max: MAX_ENUMERATION_DEGREE,
        });
    }
    let mut canonical = Vec::new();
    let mut monic_total = 0;
    for pattern in all_patterns(d) {
        for pair in admissible_pairs(&pattern) {
            monic_total += 1;
            let c = Combo {
                pattern: pattern.clone(),
                pair,
            };
            if canonical_rep(&c) == c {
                canonical.push(c);
            }
        }
    }
    canonical.sort();
    Ok(Enumeration {
        degree: d,
        canonical,
        monic_total,
        total: 2 * monic_total,
    })
}

/// `++` followed by `k` copies of `-+` and then `d - 2k - 1` minuses.
/// Requires odd `d ≥ 5` and `1 ≤ k ≤ (d - 3)/2`.
pub fn sigma_k_pattern(d: usize, k: usize) -> Result<SignPattern, Error> {
    validate_sigma_k(d, k)?;
    let mut signs = Vec::with_capacity(d + 1);
    signs.push(Sign::Plus);
    signs.push(Sign::Plus);
    for _ in 0..k {
        signs.push(Sign::Minus);
        signs.push(Sign::Plus);
    }
    signs.resize(d + 1, Sign::Minus);
    SignPattern::new(signs)
}

pub(crate) fn validate_sigma_k(d: usize, k: usize) -> Result<(), Error> {
    if d < 5 || d.is_multiple_of(2) {
        return Err(Error::InvalidSeriesParameters(alloc::format!(
            "degree must be odd and at least 5, got {}",
            d
        )));
    }
    if k < 1 || k > (d - 3) / 2 {
        return Err(Error::InvalidSeriesParameters(alloc::format!(
            "k must lie in 1..={} for degree {}, got {}",
            (d - 3) / 2,
            d,
            k
        )));
    }
    Ok(())
}

impl Combo {
    pub fn parse(pattern: &str, pos: usize, neg: usize) -> Result<Combo, Error> {
        let pattern: SignPattern = pattern.parse()?;
        Combo::new(pattern, PairPN::new(pos, neg))
    }

    /// Stable text key, e.g. `++-+ 1 2`.
    pub fn key(&self) -> String {
        alloc::format!("{} {} {}", self.pattern, self.pair.pos, self.pair.neg)
    }
}
