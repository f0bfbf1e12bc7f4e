//! Exact realizability of sign patterns and root-count pairs for real
//! univariate polynomials.
//!
//! Given a monic real polynomial with all coefficients nonzero, its *sign
//! pattern* is the sequence of coefficient signs, leading first. Descartes'
//! rule of signs bounds the number of positive roots by the number of sign
//! changes and the number of negative roots by the number of sign
//! preservations, with matching parity. This crate decides, constructs and
//! verifies which `(pattern, (pos, neg))` combinations actually occur.
//!
//! Everything here is exact: coefficients are [`num_rational::BigRational`],
//! root counts come from Sturm chains over the integers, and every witness
//! is re-verified before it is handed out.
//!
//! The crate is `no_std` (it needs `alloc`). File IO, the CLI and the
//! parallel drivers live in the `descartes-cli` companion crate.
//!
//! Module map:
//!
//! - [`poly`]: dense rational polynomials, derivatives, scaling, gcd, Yun.
//! - [`rootcount`]: Sturm chains and signed root counts with multiplicity.
//! - [`pattern`]: sign patterns, Descartes pairs, admissibility, the
//!   Z2×Z2 action, canonical forms, enumeration, the σ_k family.
//! - [`realize`]: witnesses, concatenation, series constructions,
//!   randomized search, the non-realizability database, classification.
//! - [`discriminant`]: the cubic and quartic parameter families.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod discriminant;
pub mod error;
pub mod pattern;
pub mod poly;
pub mod rational;
pub mod realize;
pub mod rootcount;

pub use error::Error;
pub use pattern::{
    act, admissible_pairs, canonical_rep, descartes_pair, enumerate_combos, orbit, pattern_of,
    sigma_k_pattern, Combo, DescartesPair, Enumeration, GroupElement, Sign, SignPattern,
};
pub use poly::{yun_squarefree, RatPoly};
pub use rational::Rational;
pub use rootcount::{count_signed_roots, sturm_count, Bound, PairPN};

pub type Result<T, E = Error> = core::result::Result<T, E>;
