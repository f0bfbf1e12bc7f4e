//! Constructions for the σ_k family and the derivative-positivity check
//! used to rule out the pairs `(3,0) … (2k+1,0)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::pattern::{sigma_k_pattern, validate_sigma_k, Combo, Sign};
use crate::poly::{falling_factorial, RatPoly};
use crate::rational::{format_rational, int, Rational};
use crate::rootcount::PairPN;
use crate::Error;

use super::concat::{concatenate, BaseBlock, MAX_HALVINGS};
use super::witness::Witness;

/// Witness for `(σ_k, (1, 0))`: `x^d - 1 + ε Σ c_j x^j` with `c_j = ±1`
/// following the pattern, for `ε` found by halving from 1.
pub fn realize_series_single(d: usize, k: usize) -> Result<Witness, Error> {
    let pattern = sigma_k_pattern(d, k)?;
    let combo = Combo::new(pattern.clone(), PairPN::new(1, 0))?;
    let half = Rational::new(1.into(), 2.into());
    let mut eps = Rational::one();
    for _ in 0..=MAX_HALVINGS {
        let coeffs: Vec<Rational> = pattern
            .signs()
            .iter()
            .enumerate()
            .map(|(i, s)| match i {
                0 => Rational::one(),
                _ if i == d => -Rational::one(),
                _ => match s {
                    Sign::Plus => eps.clone(),
                    Sign::Minus => -eps.clone(),
                },
            })
            .collect();
        if let Some(w) = Witness::new(RatPoly::new(coeffs), combo.clone()) {
            return Ok(w);
        }
        eps *= &half;
    }
    Err(Error::BudgetExhausted(MAX_HALVINGS))
}

/// Witness for `(σ_k, (2l+1, 2r))` with `0 ≤ l ≤ k`,
/// `1 ≤ r ≤ (d-2k-1)/2`. Starts from `x + 1` and appends `x² - 2x + 2`
/// (`k - l` times), `x - 1` (`2l + 1` times), `x + 1` (`2r - 1` times) and
/// `x² + 2x + 2` (`(d-2k-1)/2 - r` times).
pub fn realize_series_pair(d: usize, k: usize, l: usize, r: usize) -> Result<Witness, Error> {
    validate_sigma_k(d, k)?;
    let r_max = (d - 2 * k - 1) / 2;
    if l > k {
        return Err(Error::InvalidSeriesParameters(alloc::format!(
            "l must lie in 0..={}, got {}",
            k,
            l
        )));
    }
    if r < 1 || r > r_max {
        return Err(Error::InvalidSeriesParameters(alloc::format!(
            "r must lie in 1..={}, got {}",
            r_max,
            r
        )));
    }
    let schedule = [
        (BaseBlock::ChangeComplex, k - l),
        (BaseBlock::XMinusOne, 2 * l + 1),
        (BaseBlock::XPlusOne, 2 * r - 1),
        (BaseBlock::PresComplex, r_max - r),
    ];
    let mut acc = BaseBlock::XPlusOne.witness();
    for (block, times) in schedule {
        let w = block.witness();
        for _ in 0..times {
            acc = concatenate(&acc, &w)?;
        }
    }
    debug_assert_eq!(acc.combo().pattern, sigma_k_pattern(d, k)?);
    debug_assert_eq!(acc.combo().pair, PairPN::new(2 * l + 1, 2 * r));
    Ok(acc)
}

/// One row of the derivative check: `P^(m)(1) = u·a0 + v·a2 - w` for
/// `P = a0 x^d + a2 x^(d-2) - x^(d-2k-3)` with `a2 = 1 - a0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeCheckRow {
    pub m: usize,
    pub u: BigInt,
    pub v: BigInt,
    pub w: BigInt,
    pub value: Rational,
}

impl DerivativeCheckRow {
    pub fn is_positive(&self) -> bool {
        self.value.is_positive()
    }
}

/// Evaluates every derivative `P^(m)(1)`, `m = 1..=d`, of the extremal
/// polynomial `a0 x^d + (1 - a0) x^(d-2) - x^(d-2k-3)`. Each row is computed
/// twice, by differentiating the polynomial and from the falling-factorial
/// form, and the two must agree.
pub fn lemma_derivative_check(
    d: usize,
    k: usize,
    a0: &Rational,
) -> Result<Vec<DerivativeCheckRow>, Error> {
    validate_sigma_k(d, k)?;
    if *a0 <= Rational::one() {
        return Err(Error::InvalidLeadingCoefficient(format_rational(a0)));
    }
    let a2 = Rational::one() - a0;
    let low = d - 2 * k - 3;
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[0] += a0;
    coeffs[2] += &a2;
    coeffs[d - low] -= Rational::one();
    let p = RatPoly::new(coeffs);
    let one = int(1);
    let mut rows = Vec::with_capacity(d);
    for m in 1..=d {
        let u = falling_factorial(d, m);
        let v = falling_factorial(d - 2, m);
        let w = falling_factorial(low, m);
        let value = p.derivative(m).eval(&one);
        let closed = Rational::from_integer(u.clone()) * a0
            + Rational::from_integer(v.clone()) * &a2
            - Rational::from_integer(w.clone());
        assert_eq!(
            value, closed,
            "derivative row {} disagrees with its closed form",
            m
        );
        debug_assert!(BigInt::zero() <= w && w <= v && v < u);
        rows.push(DerivativeCheckRow { m, u, v, w, value });
    }
    Ok(rows)
}
