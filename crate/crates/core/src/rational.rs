//! Helpers around [`BigRational`]: construction, parsing and the two text
//! encodings used by the file formats (`p/q` and exact decimals).

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^e` as an exact rational.
pub fn pow10(e: i32) -> Rational {
    let p = num_traits::pow(BigInt::from(10u32), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Parses `p/q`, a plain integer, or a decimal such as `-0.125`.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let s = text.trim();
    let bad = || Error::ParseRational(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() && digits.is_empty() {
            return Err(bad());
        }
        if !frac.chars().all(|c| c.is_ascii_digit()) || !digits.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let mut all = String::from(if digits.is_empty() { "0" } else { digits });
        all.push_str(frac);
        let mut n: BigInt = all.parse().map_err(|_| bad())?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10u32), frac.len());
        return Ok(Rational::new(n, d));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact decimal expansion when the denominator has no prime factors other
/// than 2 and 5; `None` otherwise.
pub fn to_decimal_string(q: &Rational) -> Option<String> {
    let mut den = q.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let places = twos.max(fives);
    if places == 0 {
        return Some(q.numer().to_string());
    }
    let scaled = q * Rational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let n = scaled.to_integer();
    let digits = n.abs().to_string();
    let padded = if digits.len() <= places {
        let mut s = String::from("0");
        s.push_str(&"0".repeat(places - digits.len()));
        s.push_str(&digits);
        s
    } else {
        digits
    };
    let split = padded.len() - places;
    let sign = if n.sign() == BigSign::Minus { "-" } else { "" };
    Some(format!("{}{}.{}", sign, &padded[..split], &padded[split..]))
}

/// Decimal when exact, `p/q` otherwise.
pub fn format_decimal_or_fraction(q: &Rational) -> String {
    to_decimal_string(q).unwrap_or_else(|| format_rational(q))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Rounds a finite nonzero `f64` to a dyadic rational with `bits`
/// significant bits. Zero maps to zero; the sign is preserved, so a nonzero
/// input never rounds to zero.
pub fn dyadic_from_f64(x: f64, bits: u32) -> Rational {
    if x == 0.0 || !x.is_finite() {
        return Rational::zero();
    }
    let exp = libm::floor(libm::log2(libm::fabs(x))) as i32;
    let shift = bits as i32 - 1 - exp;
    let m = libm::round(libm::ldexp(x, shift));
    let m = BigInt::from(m as i64);
    if shift >= 0 {
        Rational::new(m, BigInt::one() << shift as usize)
    } else {
        Rational::from_integer(m << (-shift) as usize)
    }
}

/// Rounds to `digits` significant decimal digits (exact result). Used to look
/// for short representations of witness coefficients.
pub fn round_significant(q: &Rational, digits: u32) -> Rational {
    if q.is_zero() {
        return q.clone();
    }
    let a = q.abs();
    // Find e with 10^e <= a < 10^(e+1).
    let mut e: i32 = (libm::floor(libm::log10(to_f64(&a).max(f64::MIN_POSITIVE)))) as i32;
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let scale = pow10(digits as i32 - 1 - e);
    let scaled = q * &scale;
    (scaled.round()) / scale
}

pub fn sign_of(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}
