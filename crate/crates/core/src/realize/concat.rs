//! Concatenation of witnesses and the base-block constructions.
//!
//! If `P1` realizes `(1, s1)` with `(pos1, neg1)` and `P2` realizes
//! `(1, s2)` with `(pos2, neg2)`, then for small `ε > 0` the product
//! `ε^d2 · P1(x) · P2(x/ε)` realizes `(1, s1, ±s2)` with the summed pair;
//! the tail is negated when `s1` ends in `-`. The scale is found by halving
//! from 1 and checking each candidate exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::pattern::{act, Combo, GroupElement, SignPattern};
use crate::poly::RatPoly;
use crate::rational::Rational;
use crate::rootcount::PairPN;
use crate::Error;

use super::witness::Witness;

pub const MAX_HALVINGS: usize = 200;

/// Glues two witnesses into one of degree `d1 + d2`.
pub fn concatenate(p1: &Witness, p2: &Witness) -> Result<Witness, Error> {
    let pattern = p1.combo().pattern.concatenated(&p2.combo().pattern);
    let pair = p1.combo().pair + p2.combo().pair;
    let target = Combo::new(pattern, pair)?;
    let half = Rational::new(1.into(), 2.into());
    let mut eps = Rational::one();
    for _ in 0..=MAX_HALVINGS {
        let scaled = p2.poly().substitute_scaled(&eps)?;
        let candidate = p1.poly() * &scaled;
        if let Some(w) = Witness::new(candidate, target.clone()) {
            assert_eq!(
                w.poly().degree(),
                Some(p1.combo().degree() + p2.combo().degree())
            );
            assert_eq!(w.combo().pair, p1.combo().pair + p2.combo().pair);
            return Ok(w);
        }
        eps *= &half;
    }
    Err(Error::BudgetExhausted(MAX_HALVINGS))
}

/// The six small building blocks. Each is a monic polynomial whose pattern,
/// relative to a leading `+`, is either one change (`C`), one preservation
/// (`P`), two changes or two preservations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseBlock {
    /// `x - 1`: one change, `(1, 0)`.
    XMinusOne,
    /// `x + 1`: one preservation, `(0, 1)`.
    XPlusOne,
    /// `x² + 2x + 2`: two preservations, `(0, 0)`.
    PresComplex,
    /// `x² + 2x + 1/2`: two preservations, `(0, 2)`.
    PresReal,
    /// `x² - 2x + 2`: two changes, `(0, 0)`.
    ChangeComplex,
    /// `x² - 2x + 1/2`: two changes, `(2, 0)`.
    ChangeReal,
}

impl BaseBlock {
    pub const ALL: [BaseBlock; 6] = [
        BaseBlock::XMinusOne,
        BaseBlock::XPlusOne,
        BaseBlock::PresComplex,
        BaseBlock::PresReal,
        BaseBlock::ChangeComplex,
        BaseBlock::ChangeReal,
    ];

    pub fn poly(self) -> RatPoly {
        match self {
            BaseBlock::XMinusOne => RatPoly::from_i64s(&[1, -1]),
            BaseBlock::XPlusOne => RatPoly::from_i64s(&[1, 1]),
            BaseBlock::PresComplex => RatPoly::from_i64s(&[1, 2, 2]),
            BaseBlock::PresReal => RatPoly::from_ratios(&[(1, 1), (2, 1), (1, 2)]),
            BaseBlock::ChangeComplex => RatPoly::from_i64s(&[1, -2, 2]),
            BaseBlock::ChangeReal => RatPoly::from_ratios(&[(1, 1), (-2, 1), (1, 2)]),
        }
    }

    pub fn pair(self) -> PairPN {
        match self {
            BaseBlock::XMinusOne => PairPN::new(1, 0),
            BaseBlock::XPlusOne => PairPN::new(0, 1),
            BaseBlock::PresComplex | BaseBlock::ChangeComplex => PairPN::new(0, 0),
            BaseBlock::PresReal => PairPN::new(0, 2),
            BaseBlock::ChangeReal => PairPN::new(2, 0),
        }
    }

    pub fn pattern(self) -> SignPattern {
        let s = match self {
            BaseBlock::XMinusOne => "+-",
            BaseBlock::XPlusOne => "++",
            BaseBlock::PresComplex | BaseBlock::PresReal => "+++",
            BaseBlock::ChangeComplex | BaseBlock::ChangeReal => "+-+",
        };
        s.parse().expect("static pattern")
    }

    pub fn witness(self) -> Witness {
        let combo = Combo::new(self.pattern(), self.pair()).expect("block combos are admissible");
        Witness::new(self.poly(), combo).expect("base blocks realize their combos")
    }
}

/// Finds a block sequence whose concatenation has `pattern` and `pair`.
///
/// A pattern is a word over change/preservation steps; blocks cover one
/// step or two equal steps, so this is a small dynamic program over
/// `(position, pos left, neg left)`.
pub fn block_plan(pattern: &SignPattern, pair: PairPN) -> Option<Vec<BaseBlock>> {
    let steps: Vec<bool> = pattern.changes().collect();
    let d = steps.len();
    if pair.total() > d {
        return None;
    }
    let dim = d + 1;
    let mut dead = vec![false; dim * dim * dim];
    let mut plan = Vec::new();
    if search_plan(&steps, 0, pair.pos, pair.neg, &mut dead, dim, &mut plan) {
        Some(plan)
    } else {
        None
    }
}

fn search_plan(
    steps: &[bool],
    i: usize,
    pos: usize,
    neg: usize,
    dead: &mut [bool],
    dim: usize,
    plan: &mut Vec<BaseBlock>,
) -> bool {
    if i == steps.len() {
        return pos == 0 && neg == 0;
    }
    let key = (i * dim + pos) * dim + neg;
    if dead[key] {
        return false;
    }
    let mut options: Vec<BaseBlock> = Vec::with_capacity(3);
    if steps[i] {
        options.push(BaseBlock::XMinusOne);
    } else {
        options.push(BaseBlock::XPlusOne);
    }
    if i + 1 < steps.len() && steps[i] == steps[i + 1] {
        if steps[i] {
            options.extend([BaseBlock::ChangeReal, BaseBlock::ChangeComplex]);
        } else {
            options.extend([BaseBlock::PresReal, BaseBlock::PresComplex]);
        }
    }
    for block in options {
        let bp = block.pair();
        if bp.pos > pos || bp.neg > neg {
            continue;
        }
        let width = block.pattern().degree();
        plan.push(block);
        if search_plan(
            steps,
            i + width,
            pos - bp.pos,
            neg - bp.neg,
            dead,
            dim,
            plan,
        ) {
            return true;
        }
        plan.pop();
    }
    dead[key] = true;
    false
}

/// Builds a witness for `combo` itself from a block plan.
pub fn realize_plan(plan: &[BaseBlock]) -> Result<Witness, Error> {
    let mut iter = plan.iter();
    let first = iter
        .next()
        .ok_or(Error::InvalidPattern("empty block plan".into()))?;
    let mut acc = first.witness();
    for block in iter {
        acc = concatenate(&acc, &block.witness())?;
    }
    Ok(acc)
}

/// Tries the block constructions on every orbit member and transports the
/// result back.
pub fn realize_by_blocks(combo: &Combo) -> Option<Witness> {
    for g in GroupElement::ALL {
        let image = act(g, combo);
        if let Some(plan) = block_plan(&image.pattern, image.pair) {
            let w = realize_plan(&plan).ok()?;
            debug_assert_eq!(w.combo(), &image);
            return w.transport(g);
        }
    }
    None
}

/// Tries every split of `combo` into a head and a tail combination for which
/// `known` supplies witnesses, and concatenates them.
pub fn realize_by_splitting<F>(combo: &Combo, mut known: F) -> Option<Witness>
where
    F: FnMut(&Combo) -> Option<Witness>,
{
    let d = combo.degree();
    for g in GroupElement::ALL {
        let image = act(g, combo);
        let signs_img = image.pattern.signs();
        for d1 in 1..d {
            let head = SignPattern::new(signs_img[..=d1].to_vec()).ok()?;
            let flip = signs_img[d1] == crate::pattern::Sign::Minus;
            let tail_signs: Vec<_> = signs_img[d1..]
                .iter()
                .map(|&s| if flip { s.flip() } else { s })
                .collect();
            let tail = SignPattern::new(tail_signs).ok()?;
            for pos1 in 0..=image.pair.pos {
                for neg1 in 0..=image.pair.neg {
                    let hp = PairPN::new(pos1, neg1);
                    let tp = PairPN::new(image.pair.pos - pos1, image.pair.neg - neg1);
                    if !head.is_admissible(hp) || !tail.is_admissible(tp) {
                        continue;
                    }
                    let hc = Combo {
                        pattern: head.clone(),
                        pair: hp,
                    };
                    let tc = Combo {
                        pattern: tail.clone(),
                        pair: tp,
                    };
                    let Some(hw) = known(&hc) else { continue };
                    let Some(tw) = known(&tc) else { continue };
                    if let Ok(w) = concatenate(&hw, &tw) {
                        debug_assert_eq!(w.combo(), &image);
                        return w.transport(g);
                    }
                }
            }
        }
    }
    None
}
