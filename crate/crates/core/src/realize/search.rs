//! Seeded randomized search for witnesses.
//!
//! Two samplers share one budget. Every `coefficient_period`-th trial draws
//! coefficients directly: the required signs with magnitudes `10^e`, `e`
//! uniform in the exponent window, rounded to four significant digits and
//! root-counted exactly. All other trials are steps of a hill climb in root
//! space: the roots are fixed to the required counts by construction, so only
//! the sign pattern has to be reached. The climb minimizes a normalized
//! sign-violation loss in `f64`; a zero-loss point is rationalized root by
//! root and then checked exactly. Nothing is ever reported without exact
//! verification.

use alloc::vec;
use alloc::vec::Vec;

use core::f64::consts::PI;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pattern::Combo;
use crate::poly::RatPoly;
use crate::rational::{dyadic_from_f64, int, pow10, Rational};

use super::witness::Witness;

/// Tuning knobs for [`random_search_with`].
#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Inclusive window for the decimal exponent of magnitudes.
    pub exponent_min: i32,
    pub exponent_max: i32,
    /// Every n-th trial samples coefficients directly; `0` disables it.
    pub coefficient_period: usize,
    /// Climbing steps without strict improvement before a restart.
    pub stall_limit: usize,
    /// Bits kept when a floating root is turned into a rational.
    pub rational_bits: u32,
    /// Climber restarts draw log10 root moduli from `[-spread, spread]`.
    pub root_spread: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            exponent_min: -4,
            exponent_max: 4,
            coefficient_period: 8,
            stall_limit: 200,
            rational_bits: 40,
            root_spread: 0.5,
        }
    }
}

pub const DEFAULT_BUDGET: usize = 100_000;

/// Searches for a witness of `combo` with the default configuration.
pub fn random_search(combo: &Combo, budget: usize, seed: u64) -> Option<Witness> {
    random_search_with(combo, budget, seed, &SearchConfig::default())
}

/// Deterministic in `(combo, budget, seed, config)`. Each float evaluation
/// and each coefficient sample costs one unit of `budget`.
pub fn random_search_with(
    combo: &Combo,
    budget: usize,
    seed: u64,
    config: &SearchConfig,
) -> Option<Witness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target: Vec<f64> = combo
        .pattern
        .signs()
        .iter()
        .map(|s| f64::from(s.as_i8()))
        .collect();
    let shape = Shape::of(combo);
    let lo = f64::from(config.exponent_min.min(config.exponent_max));
    let hi = f64::from(config.exponent_max.max(config.exponent_min));

    let spread = config.root_spread.abs();
    let mut climber = Climber::new(&shape, &target, -spread, spread, &mut rng);
    let mut spent = 0usize;
    let mut trial = 0usize;
    while spent < budget {
        let sample_coeffs =
            config.coefficient_period > 0 && trial.is_multiple_of(config.coefficient_period);
        trial += 1;
        spent += 1;
        if sample_coeffs {
            if let Some(w) = coefficient_sample(combo, lo, hi, &mut rng) {
                return Some(w);
            }
            continue;
        }
        climber.step(&shape, &target, &mut rng);
        if climber.loss == 0.0 {
            if let Some(w) = climber.rationalize(&shape, combo, config.rational_bits) {
                return Some(w);
            }
            climber.restart(&shape, &target, -spread, spread, &mut rng);
        } else if climber.stalled > config.stall_limit {
            climber.restart(&shape, &target, -spread, spread, &mut rng);
        }
    }
    None
}

fn coefficient_sample(combo: &Combo, lo: f64, hi: f64, rng: &mut ChaCha8Rng) -> Option<Witness> {
    let mut coeffs = Vec::with_capacity(combo.degree() + 1);
    coeffs.push(Rational::one());
    for s in &combo.pattern.signs()[1..] {
        let e = rng.gen_range(lo..=hi);
        let whole = libm::floor(e);
        let mantissa = libm::round(libm::pow(10.0, e - whole + 3.0)) as i64;
        let q = int(mantissa) * pow10(whole as i32 - 3);
        coeffs.push(if s.as_i8() > 0 { q } else { -q });
    }
    Witness::new(RatPoly::new(coeffs), combo.clone())
}

/// Number of roots of each kind a candidate must have.
struct Shape {
    pos: usize,
    neg: usize,
    complex: usize,
}

impl Shape {
    fn of(combo: &Combo) -> Shape {
        let pos = combo.pair.pos;
        let neg = combo.pair.neg;
        Shape {
            pos,
            neg,
            complex: (combo.degree() - pos - neg) / 2,
        }
    }

    /// Parameters: `pos + neg` log10 magnitudes, then `(log10 ρ, θ)` per pair.
    fn len(&self) -> usize {
        self.pos + self.neg + 2 * self.complex
    }

    fn is_angle(&self, i: usize) -> bool {
        let reals = self.pos + self.neg;
        i >= reals && (i - reals) % 2 == 1
    }
}

const LOG_CLAMP: f64 = 12.0;
const ANGLE_EPS: f64 = 1e-9;
const MARGIN: f64 = 1e-9;
const STEP_SCALES: [f64; 3] = [0.01, 0.1, 1.0];

struct Climber {
    params: Vec<f64>,
    loss: f64,
    stalled: usize,
}

impl Climber {
    fn new(shape: &Shape, target: &[f64], lo: f64, hi: f64, rng: &mut ChaCha8Rng) -> Climber {
        let mut c = Climber {
            params: vec![0.0; shape.len()],
            loss: f64::INFINITY,
            stalled: 0,
        };
        c.restart(shape, target, lo, hi, rng);
        c
    }

    fn restart(&mut self, shape: &Shape, target: &[f64], lo: f64, hi: f64, rng: &mut ChaCha8Rng) {
        for i in 0..self.params.len() {
            self.params[i] = if shape.is_angle(i) {
                random_angle(rng)
            } else {
                rng.gen_range(lo..=hi)
            };
        }
        self.loss = loss(shape, &self.params, target);
        self.stalled = 0;
    }

    fn step(&mut self, shape: &Shape, target: &[f64], rng: &mut ChaCha8Rng) {
        if self.params.is_empty() {
            self.loss = loss(shape, &self.params, target);
            self.stalled += 1;
            return;
        }
        let i = rng.gen_range(0..self.params.len());
        let scale = STEP_SCALES[rng.gen_range(0..STEP_SCALES.len())];
        let old = self.params[i];
        let moved = old + scale * gaussian(rng);
        self.params[i] = if shape.is_angle(i) {
            reflect_angle(moved)
        } else {
            moved.clamp(-LOG_CLAMP, LOG_CLAMP)
        };
        let new_loss = loss(shape, &self.params, target);
        if new_loss < self.loss {
            self.loss = new_loss;
            self.stalled = 0;
        } else if new_loss == self.loss {
            self.stalled += 1;
        } else {
            self.params[i] = old;
            self.stalled += 1;
        }
    }

    fn rationalize(&self, shape: &Shape, combo: &Combo, bits: u32) -> Option<Witness> {
        let mut poly = RatPoly::one();
        let reals = shape.pos + shape.neg;
        for (i, &l) in self.params[..reals].iter().enumerate() {
            let r = dyadic_from_f64(libm::pow(10.0, l), bits);
            let root = if i < shape.pos { r } else { -r };
            poly = &poly * &RatPoly::linear_root(&root);
        }
        for pair in self.params[reals..].chunks(2) {
            let rho = libm::pow(10.0, pair[0]);
            let alpha = dyadic_from_f64(rho * libm::cos(pair[1]), bits);
            let beta = dyadic_from_f64(rho * libm::sin(pair[1]), bits);
            if beta.is_zero() {
                return None;
            }
            let two = int(2);
            let quad = RatPoly::new(vec![
                Rational::one(),
                -(&two * &alpha),
                &alpha * &alpha + &beta * &beta,
            ]);
            poly = &poly * &quad;
        }
        Witness::new(poly, combo.clone())
    }
}

/// Angles cluster near the real axis a third of the time each side, where
/// nearly-real conjugate pairs make the hard patterns.
fn random_angle(rng: &mut ChaCha8Rng) -> f64 {
    let u: f64 = rng.gen();
    let near = u * u * u * 0.5;
    match rng.gen_range(0..3) {
        0 => reflect_angle(near),
        1 => reflect_angle(PI - near),
        _ => rng.gen_range(ANGLE_EPS..PI - ANGLE_EPS),
    }
}

fn reflect_angle(mut t: f64) -> f64 {
    t -= 2.0 * PI * libm::floor(t / (2.0 * PI));
    if t > PI {
        t = 2.0 * PI - t;
    }
    t.clamp(ANGLE_EPS, PI - ANGLE_EPS)
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.gen();
    libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(2.0 * PI * u2)
}

/// Sum over coefficients on the wrong side of the margin of `1 - s_j c_j/E_j`,
/// where `E_j` is the matching coefficient with every root replaced by its
/// modulus on the negative axis, so `|c_j| ≤ E_j`.
fn loss(shape: &Shape, params: &[f64], target: &[f64]) -> f64 {
    let d = target.len() - 1;
    let mut c = vec![0.0f64; d + 1];
    let mut e = vec![0.0f64; d + 1];
    c[0] = 1.0;
    e[0] = 1.0;
    let mut deg = 0;
    let reals = shape.pos + shape.neg;
    for (i, &l) in params[..reals].iter().enumerate() {
        let r = libm::pow(10.0, l);
        let root = if i < shape.pos { r } else { -r };
        mul_linear(&mut c, deg, -root);
        mul_linear(&mut e, deg, r);
        deg += 1;
    }
    for pair in params[reals..].chunks(2) {
        let rho = libm::pow(10.0, pair[0]);
        mul_quadratic(&mut c, deg, -2.0 * rho * libm::cos(pair[1]), rho * rho);
        mul_quadratic(&mut e, deg, 2.0 * rho, rho * rho);
        deg += 2;
    }
    let mut total = 0.0;
    for j in 1..=d {
        let n = target[j] * c[j] / e[j];
        if n.is_nan() || n <= MARGIN {
            total += if n.is_finite() { 1.0 - n } else { 2.0 };
        }
    }
    total
}

/// `c ← c · (x + a)` where `c` has degree `deg`, leading entry first.
fn mul_linear(c: &mut [f64], deg: usize, a: f64) {
    for j in (1..=deg + 1).rev() {
        c[j] += a * c[j - 1];
    }
}

/// `c ← c · (x² + a x + b)`.
fn mul_quadratic(c: &mut [f64], deg: usize, a: f64, b: f64) {
    for j in (1..=deg + 2).rev() {
        let mut v = c[j] + a * c[j - 1];
        if j >= 2 {
            v += b * c[j - 2];
        }
        c[j] = v;
    }
}
