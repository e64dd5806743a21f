//! Abelian vertex groups and monoids for graph products.
//!
//! Each weight type is one of the four vertex families the crate works with:
//! `ℕ` (trace monoids), `ℤ` (right-angled Artin groups), `ℤ × ℕ` (singular
//! monoids, `σ` exponent then `τ` exponent) and `ℤ × ℤ` (their enveloping
//! groups). All arithmetic is arbitrary precision.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    Nat,
    Int,
    IntNat,
    IntInt,
}

impl WeightKind {
    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Nat => "N",
            WeightKind::Int => "Z",
            WeightKind::IntNat => "ZxN",
            WeightKind::IntInt => "ZxZ",
        }
    }
}

/// An element of a vertex group or monoid `K_u`. The operation is written
/// additively.
pub trait Weight: Clone + Eq + Ord + Hash + fmt::Debug {
    const KIND: WeightKind;

    fn identity() -> Self;

    fn is_identity(&self) -> bool;

    fn combine(&self, other: &Self) -> Self;

    /// Writes the exponent part of a syllable, the text after `^`.
    fn write_exponent(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// Vertex families in which every element is invertible.
pub trait GroupWeight: Weight {
    fn inverse(&self) -> Self;
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatWeight(pub BigUint);

impl Weight for NatWeight {
    const KIND: WeightKind = WeightKind::Nat;

    fn identity() -> Self {
        NatWeight(BigUint::zero())
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn combine(&self, other: &Self) -> Self {
        NatWeight(&self.0 + &other.0)
    }

    fn write_exponent(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for NatWeight {
    fn from(p: u64) -> Self {
        NatWeight(p.into())
    }
}

/// An exponent in `ℤ`. Ordered by absolute value, positive before negative,
/// which is the order used when sorting group elements shortlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntWeight(pub BigInt);

impl Ord for IntWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .abs()
            .cmp(&other.0.abs())
            .then_with(|| (self.0.sign() == Sign::Minus).cmp(&(other.0.sign() == Sign::Minus)))
    }
}

impl PartialOrd for IntWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Weight for IntWeight {
    const KIND: WeightKind = WeightKind::Int;

    fn identity() -> Self {
        IntWeight(BigInt::zero())
    }

    fn is_identity(&self) -> bool {
        self.0.is_zero()
    }

    fn combine(&self, other: &Self) -> Self {
        IntWeight(&self.0 + &other.0)
    }

    fn write_exponent(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl GroupWeight for IntWeight {
    fn inverse(&self) -> Self {
        IntWeight(-&self.0)
    }
}

impl From<i64> for IntWeight {
    fn from(q: i64) -> Self {
        IntWeight(q.into())
    }
}

/// `σ^sigma τ^tau` with `tau ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntNatWeight {
    pub sigma: BigInt,
    pub tau: BigUint,
}

impl IntNatWeight {
    pub fn new(sigma: i64, tau: u64) -> Self {
        IntNatWeight { sigma: sigma.into(), tau: tau.into() }
    }
}

impl Weight for IntNatWeight {
    const KIND: WeightKind = WeightKind::IntNat;

    fn identity() -> Self {
        IntNatWeight::new(0, 0)
    }

    fn is_identity(&self) -> bool {
        self.sigma.is_zero() && self.tau.is_zero()
    }

    fn combine(&self, other: &Self) -> Self {
        IntNatWeight { sigma: &self.sigma + &other.sigma, tau: &self.tau + &other.tau }
    }

    fn write_exponent(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sigma, self.tau)
    }
}

/// `σ^sigma τ^tau` with both exponents in `ℤ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntIntWeight {
    pub sigma: BigInt,
    pub tau: BigInt,
}

impl IntIntWeight {
    pub fn new(sigma: i64, tau: i64) -> Self {
        IntIntWeight { sigma: sigma.into(), tau: tau.into() }
    }
}

impl Weight for IntIntWeight {
    const KIND: WeightKind = WeightKind::IntInt;

    fn identity() -> Self {
        IntIntWeight::new(0, 0)
    }

    fn is_identity(&self) -> bool {
        self.sigma.is_zero() && self.tau.is_zero()
    }

    fn combine(&self, other: &Self) -> Self {
        IntIntWeight { sigma: &self.sigma + &other.sigma, tau: &self.tau + &other.tau }
    }

    fn write_exponent(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sigma, self.tau)
    }
}

impl GroupWeight for IntIntWeight {
    fn inverse(&self) -> Self {
        IntIntWeight { sigma: -&self.sigma, tau: -&self.tau }
    }
}
