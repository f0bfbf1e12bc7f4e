//! Exact counting of positive and negative real roots.
//!
//! Root counts come from Sturm chains built over the integers: the input is
//! scaled to a primitive integer polynomial and every remainder is a
//! pseudo-remainder divided by its content, with the sign fixed so that each
//! chain element is a positive multiple of the classical Sturm remainder.
//! Limits at ±∞ use the leading term, never a large substitute value.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{yun_squarefree, RatPoly};
use crate::rational::{format_rational, Rational};
use crate::Error;

/// Numbers of positive and negative real roots, counted with multiplicity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairPN {
    pub pos: usize,
    pub neg: usize,
}

impl PairPN {
    pub const fn new(pos: usize, neg: usize) -> Self {
        PairPN { pos, neg }
    }

    pub const fn swapped(self) -> Self {
        PairPN {
            pos: self.neg,
            neg: self.pos,
        }
    }

    pub const fn total(self) -> usize {
        self.pos + self.neg
    }
}

impl Add for PairPN {
    type Output = PairPN;

    fn add(self, rhs: PairPN) -> PairPN {
        PairPN::new(self.pos + rhs.pos, self.neg + rhs.neg)
    }
}

impl fmt::Display for PairPN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

/// An endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Bound {
    fn rank(&self) -> i8 {
        match self {
            Bound::NegInfinity => -1,
            Bound::Finite(_) => 0,
            Bound::PosInfinity => 1,
        }
    }

    fn is_below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

type IntPoly = Vec<BigInt>;

/// Clears denominators and divides by the content. The result is a
/// positive multiple of `p`, so signs are preserved.
fn primitive_integer(p: &RatPoly) -> IntPoly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut p: IntPoly) -> IntPoly {
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c /= &g;
        }
    }
    p
}

fn int_derivative(p: &IntPoly) -> IntPoly {
    let d = p.len().saturating_sub(1);
    p[..d]
        .iter()
        .enumerate()
        .map(|(j, c)| c * BigInt::from(d - j))
        .collect()
}

fn trim_int(p: &mut IntPoly) {
    let lead = p.iter().take_while(|c| c.is_zero()).count();
    p.drain(..lead);
}

/// Positive multiple of the remainder of `a` divided by `b`.
fn pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r = a.clone();
    let lb = &b[0];
    let mut steps = 0usize;
    while r.len() >= b.len() {
        let lr = r[0].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bc) in b.iter().enumerate() {
            r[k] -= &lr * bc;
        }
        debug_assert!(r[0].is_zero());
        r.remove(0);
        steps += 1;
        trim_int(&mut r);
    }
    if lb.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -core::mem::take(c);
        }
    }
    r
}

struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain of a nonconstant integer polynomial. The last element is a
    /// multiple of `gcd(p, p')`.
    fn new(p: IntPoly) -> Self {
        let mut polys = Vec::new();
        let dp = make_primitive(int_derivative(&p));
        polys.push(p);
        polys.push(dp);
        loop {
            let n = polys.len();
            let r = pseudo_remainder(&polys[n - 2], &polys[n - 1]);
            if r.is_empty() {
                break;
            }
            let next = make_primitive(r.into_iter().map(|c| -c).collect());
            polys.push(next);
        }
        SturmChain { polys }
    }

    fn is_square_free(&self) -> bool {
        self.polys.last().is_some_and(|g| g.len() == 1)
    }

    fn variations_at(&self, x: &Bound) -> usize {
        let signs = self.polys.iter().map(|p| sign_at(p, x));
        count_variations(signs)
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of_int(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_at(p: &IntPoly, x: &Bound) -> i8 {
    if p.is_empty() {
        return 0;
    }
    let lead = sign_of_int(&p[0]);
    let deg = p.len() - 1;
    match x {
        Bound::PosInfinity => lead,
        Bound::NegInfinity => {
            if deg.is_multiple_of(2) {
                lead
            } else {
                -lead
            }
        }
        Bound::Finite(q) => {
            if q.is_zero() {
                return sign_of_int(&p[deg]);
            }
            // sign of d^deg · p(n/d) with d > 0
            let n = q.numer();
            let d = q.denom();
            let mut acc = p[0].clone();
            let mut dpow = BigInt::one();
            for c in &p[1..] {
                dpow *= d;
                acc = acc * n + c * &dpow;
            }
            sign_of_int(&acc)
        }
    }
}

/// Number of distinct real roots of a square-free `p` in the open interval
/// `(lo, hi)`. Finite bounds must not be roots.
pub fn sturm_count(p: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.is_below(hi) {
        return Err(Error::EmptyInterval);
    }
    for b in [lo, hi] {
        if let Bound::Finite(x) = b {
            if p.eval(x).is_zero() {
                return Err(Error::BoundIsRoot(format_rational(x)));
            }
        }
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = SturmChain::new(primitive_integer(p));
    if !chain.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    Ok(chain.variations_at(lo) - chain.variations_at(hi))
}

fn distinct_pos_neg(chain: &SturmChain) -> PairPN {
    let zero = Bound::Finite(Rational::zero());
    let at_zero = chain.variations_at(&zero);
    PairPN::new(
        at_zero - chain.variations_at(&Bound::PosInfinity),
        chain.variations_at(&Bound::NegInfinity) - at_zero,
    )
}

/// Positive and negative real roots counted with multiplicity. A root at
/// zero is counted in neither component.
pub fn count_signed_roots(p: &RatPoly) -> Result<PairPN, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.strip_zero_roots();
    if q.degree() == Some(0) {
        return Ok(PairPN::default());
    }
    let chain = SturmChain::new(primitive_integer(&q));
    if chain.is_square_free() {
        return Ok(distinct_pos_neg(&chain));
    }
    let mut total = PairPN::default();
    for (factor, mult) in yun_squarefree(&q)? {
        let c = distinct_pos_neg(&SturmChain::new(primitive_integer(&factor)));
        total = total + PairPN::new(c.pos * mult, c.neg * mult);
    }
    Ok(total)
}

/// Positive and negative real roots counted without multiplicity.
pub fn count_distinct_signed_roots(p: &RatPoly) -> Result<PairPN, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.strip_zero_roots();
    if q.degree() == Some(0) {
        return Ok(PairPN::default());
    }
    // Sturm's theorem counts distinct roots even without square-freeness,
    // as long as the endpoints are not roots.
    Ok(distinct_pos_neg(&SturmChain::new(primitive_integer(&q))))
}

/// Number of distinct real roots over the whole line.
pub fn count_distinct_real_roots(p: &RatPoly) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = SturmChain::new(primitive_integer(p));
    Ok(chain.variations_at(&Bound::NegInfinity) - chain.variations_at(&Bound::PosInfinity))
}
