//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored leading first: index `j` holds the coefficient of
//! `x^(d-j)`. The zero polynomial is the empty sequence, and a nonzero
//! polynomial never carries a leading zero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, int, Rational};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    /// Builds a polynomial from leading-first coefficients, dropping leading
    /// zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Leading-first `(numerator, denominator)` pairs.
    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| crate::rational::rat(n, d))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![Rational::one(), -r.clone()])
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Coefficient of `x^k` (zero when out of range).
    pub fn coeff_of_power(&self, k: usize) -> Rational {
        match self.degree() {
            Some(d) if k <= d => self.coeffs[d - k].clone(),
            _ => Rational::zero(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// The `m`-th formal derivative.
    pub fn derivative(&self, m: usize) -> RatPoly {
        let Some(d) = self.degree() else {
            return RatPoly::zero();
        };
        if m == 0 {
            return self.clone();
        }
        if m > d {
            return RatPoly::zero();
        }
        let coeffs = self.coeffs[..=d - m]
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let power = d - j;
                c * Rational::from_integer(falling_factorial(power, m))
            })
            .collect();
        RatPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: usize) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `eps^d · p(x / eps)`: coefficient `j` is multiplied by `eps^j`, so the
    /// roots are scaled by `eps` and a monic input stays monic.
    pub fn substitute_scaled(&self, eps: &Rational) -> Result<RatPoly, Error> {
        if !eps.is_positive() {
            return Err(Error::NonPositiveScale(format_rational(eps)));
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut factor = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &factor);
            factor *= eps;
        }
        Ok(RatPoly::new(coeffs))
    }

    /// `(-1)^d · p(-x)`: flips the sign of every odd-indexed coefficient.
    pub fn negate_argument(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `x^d · p(1/x)`, i.e. the coefficient sequence read backwards. The
    /// result is not normalized; a zero constant term lowers the degree.
    pub fn reversed(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (RatPoly::zero(), RatPoly::zero());
        };
        if nd < dd {
            return (RatPoly::zero(), self.clone());
        }
        let lc_inv = divisor.coeffs[0].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in 0..=nd - dd {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i + k] -= t;
            }
            quot[i] = q;
        }
        let rem = RatPoly::new(rem[nd - dd + 1..].to_vec());
        (RatPoly::new(quot), rem)
    }

    /// Exact division; the caller guarantees divisibility.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root at `x = 0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^m` where `m` is [`Self::zero_root_multiplicity`].
    pub fn strip_zero_roots(&self) -> RatPoly {
        let m = self.zero_root_multiplicity();
        RatPoly::new(self.coeffs[..self.coeffs.len() - m].to_vec())
    }
}

/// `n (n-1) ... (n-m+1)`; zero when `m > n`.
pub fn falling_factorial(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    (0..m).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Square-free decomposition (Yun). Returns monic, pairwise coprime,
/// square-free factors `f_i` with multiplicities `m_i` such that
/// `p = lc(p) · Π f_i^m_i`, ordered by increasing multiplicity. A nonzero
/// constant yields an empty list.
pub fn yun_squarefree(p: &RatPoly) -> Result<Vec<(RatPoly, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let f = p.monic();
    let df = f.derivative(1);
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0);
    let mut c = df.div_exact(&a0);
    let mut d = &c - &b.derivative(1);
    let mut i = 1;
    while b.degree() != Some(0) {
        let a = b.gcd(&d);
        b = b.div_exact(&a);
        c = d.div_exact(&a);
        d = &c - &b.derivative(1);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let pad_a = n - self.coeffs.len();
        let pad_b = n - rhs.coeffs.len();
        let coeffs = (0..n)
            .map(|i| {
                let a = if i >= pad_a {
                    self.coeffs[i - pad_a].clone()
                } else {
                    Rational::zero()
                };
                let b = if i >= pad_b {
                    rhs.coeffs[i - pad_b].clone()
                } else {
                    Rational::zero()
                };
                a + b
            })
            .collect();
        RatPoly::new(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Add for RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: RatPoly) -> RatPoly {
        &self + &rhs
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: RatPoly) -> RatPoly {
        &self - &rhs
    }
}

impl Mul for RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: RatPoly) -> RatPoly {
        &self * &rhs
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = d - j;
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mut body = String::new();
            if !a.is_one() || power == 0 {
                if a.denom().is_one() {
                    body.push_str(&format_rational(&a));
                } else {
                    body.push('(');
                    body.push_str(&format_rational(&a));
                    body.push(')');
                }
            }
            f.write_str(&body)?;
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{}", power)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self)
    }
}
