//! The desingularization map `τ_v ↦ σ_v − σ_v⁻¹` into the group ring, its
//! extension to the enveloping group with values in truncated series, and an
//! exhaustive injectivity scan.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::graph::DefiningGraph;
use crate::product::NormalForm;
use crate::ring::{GroupRing, RingElement};
use crate::series::{SeriesError, TruncatedSeries};
use crate::singular::{Letter, SingularElement, SingularMonoid, Token, Word};
use crate::weight::IntNatWeight;

/// `η` on elements: the product of `[k] − [k⁻¹]` over the trace keys `k` in
/// order, times the group part.
pub fn eta(monoid: &SingularMonoid, x: &SingularElement) -> RingElement {
    let ring = GroupRing::new(monoid.graph());
    let mut acc = RingElement::one();
    for u in &x.trace {
        acc = ring.multiply(&acc, &ring.binomial(&u.key));
    }
    ring.multiply(&acc, &RingElement::unit(x.group.clone()))
}

/// `η` computed straight from a word by substituting each letter.
pub fn eta_word(monoid: &SingularMonoid, w: &Word) -> RingElement {
    let ring = GroupRing::new(monoid.graph());
    let mut acc = RingElement::one();
    for t in &w.0 {
        let image = match t.letter {
            Letter::Sigma => RingElement::unit(monoid.sigma(t.vertex, 1)),
            Letter::SigmaInv => RingElement::unit(monoid.sigma(t.vertex, -1)),
            Letter::Tau => ring.binomial(&monoid.sigma(t.vertex, 1)),
            Letter::TauInv => panic!("τ⁻¹ has no finite image; use eta_tilde"),
        };
        acc = ring.multiply(&acc, &image);
    }
    acc
}

fn token_lower(t: &Token) -> i64 {
    match t.letter {
        Letter::Sigma | Letter::TauInv => 1,
        Letter::SigmaInv | Letter::Tau => -1,
    }
}

fn token_series(monoid: &SingularMonoid, t: &Token, cutoff: i64) -> Result<TruncatedSeries, SeriesError> {
    let ring = GroupRing::new(monoid.graph());
    match t.letter {
        Letter::Sigma => TruncatedSeries::from_ring(&RingElement::unit(monoid.sigma(t.vertex, 1)), cutoff),
        Letter::SigmaInv => TruncatedSeries::from_ring(&RingElement::unit(monoid.sigma(t.vertex, -1)), cutoff),
        Letter::Tau => TruncatedSeries::from_ring(&ring.binomial(&monoid.sigma(t.vertex, 1)), cutoff),
        Letter::TauInv => {
            // −Σ_{n ≥ 0} σ^{2n+1}
            let mut s = TruncatedSeries::zero(1, cutoff)?;
            let mut n = 1;
            while n <= cutoff {
                s.add_stratum(n, &RingElement::term(monoid.sigma(t.vertex, n), -BigInt::one()));
                n += 2;
            }
            Ok(s)
        }
    }
}

/// `η̃` of an extended word, exact in every degree up to `cutoff`.
///
/// Each factor is expanded far enough that the truncated product is exact:
/// factor `i` needs degrees up to `cutoff − (L − lᵢ)` where `lᵢ` is its
/// least degree and `L = Σ lᵢ`.
pub fn eta_tilde(monoid: &SingularMonoid, w: &Word, cutoff: i64) -> Result<TruncatedSeries, SeriesError> {
    let total_lower: i64 = w.0.iter().map(token_lower).sum();
    if cutoff < total_lower {
        return Err(SeriesError::CutoffBelowLower { lower: total_lower, cutoff });
    }
    let ring = GroupRing::new(monoid.graph());
    let mut acc: Option<TruncatedSeries> = None;
    for t in &w.0 {
        let l = token_lower(t);
        let factor = token_series(monoid, t, cutoff - total_lower + l)?;
        acc = Some(match acc {
            None => factor,
            Some(a) => ring.multiply_series(&a, &factor),
        });
    }
    match acc {
        Some(s) => Ok(s),
        None => TruncatedSeries::one(cutoff),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("scan would enumerate {words} words, above the limit of {limit}")]
    TooManyWords { words: u128, limit: u128 },
}

/// Default bound on the number of words a scan may enumerate.
pub const DEFAULT_WORD_LIMIT: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirmanReport {
    pub words: usize,
    pub distinct: usize,
    pub collisions: usize,
}

impl fmt::Display for BirmanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "words: {}", self.words)?;
        writeln!(f, "distinct: {}", self.distinct)?;
        writeln!(f, "collisions: {}", self.collisions)
    }
}

/// Number of words of length at most `max_len` over `letters` letters.
pub fn word_count(letters: u128, max_len: usize) -> u128 {
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(letters);
    }
    total
}

/// Enumerates every word of length at most `max_len`, groups them into
/// distinct elements by their `ℤ × ℕ` graph-product normal form, applies `η`
/// to one representative of each, and counts distinct elements whose images
/// coincide with an earlier one.
pub fn birman_scan(graph: &DefiningGraph, max_len: usize, limit: u128) -> Result<BirmanReport, ScanError> {
    let words = word_count(3 * graph.len() as u128, max_len);
    if words > limit {
        return Err(ScanError::TooManyWords { words, limit });
    }
    let monoid = SingularMonoid::new(graph);
    let all = Word::all_up_to(graph, max_len);
    let mut representatives: HashMap<NormalForm<IntNatWeight>, Word> = HashMap::new();
    for w in &all {
        representatives.entry(monoid.evaluate_direct(w)).or_insert_with(|| w.clone());
    }
    let mut images: HashMap<RingElement, usize> = HashMap::new();
    let mut collisions = 0;
    for w in representatives.values() {
        let image = eta(&monoid, &monoid.evaluate(w));
        let count = images.entry(image).or_insert(0);
        if *count > 0 {
            collisions += 1;
        }
        *count += 1;
    }
    Ok(BirmanReport { words: all.len(), distinct: representatives.len(), collisions })
}
