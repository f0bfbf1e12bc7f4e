use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::pattern::{act, pattern_of, Combo, GroupElement};
use crate::poly::RatPoly;
use crate::rational::round_significant;
use crate::rootcount::count_signed_roots;

/// A monic polynomial, with all coefficients nonzero, that realizes a combo.
/// Construction always verifies, so a `Witness` value is a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    poly: RatPoly,
    combo: Combo,
}

impl Witness {
    /// `None` unless `poly` exactly realizes `combo`.
    pub fn new(poly: RatPoly, combo: Combo) -> Option<Witness> {
        verify_witness(&poly, &combo).then_some(Witness { poly, combo })
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn combo(&self) -> &Combo {
        &self.combo
    }

    pub fn into_parts(self) -> (RatPoly, Combo) {
        (self.poly, self.combo)
    }

    /// Moves the witness along the group action and re-verifies it.
    pub fn transport(&self, g: GroupElement) -> Option<Witness> {
        Witness::new(transport_poly(&self.poly, g), act(g, &self.combo))
    }

    /// Tries progressively finer decimal roundings of the coefficients and
    /// keeps the first one that still verifies.
    pub fn simplified(&self) -> Witness {
        for digits in 1..=12 {
            let mut coeffs: Vec<_> = Vec::with_capacity(self.poly.coeffs().len());
            coeffs.push(crate::Rational::one());
            let mut ok = true;
            for c in &self.poly.coeffs()[1..] {
                let r = round_significant(c, digits);
                if r.is_zero() {
                    ok = false;
                    break;
                }
                coeffs.push(r);
            }
            if !ok {
                continue;
            }
            let candidate = RatPoly::new(coeffs);
            if candidate == self.poly {
                break;
            }
            if let Some(w) = Witness::new(candidate, self.combo.clone()) {
                return w;
            }
        }
        self.clone()
    }
}

/// True iff `poly` is monic with no zero coefficient, has the combo's sign
/// pattern and exactly the combo's root counts.
pub fn verify_witness(poly: &RatPoly, combo: &Combo) -> bool {
    match pattern_of(poly) {
        Ok(p) if p == combo.pattern => {}
        _ => return false,
    }
    count_signed_roots(poly).is_ok_and(|pair| pair == combo.pair)
}

/// Polynomial counterpart of [`act`]: `(-1)^d P(-x)` for the first
/// generator, `x^d P(1/x)` divided by its leading coefficient for the
/// second.
pub fn transport_poly(poly: &RatPoly, g: GroupElement) -> RatPoly {
    match g {
        GroupElement::Identity => poly.clone(),
        GroupElement::NegateArgument => poly.negate_argument(),
        GroupElement::Reverse => poly.reversed().monic(),
        GroupElement::Both => poly.negate_argument().reversed().monic(),
    }
}
