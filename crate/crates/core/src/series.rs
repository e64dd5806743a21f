//! Degree-stratified series over the group ring, truncated above a cutoff.
//!
//! The group ring is graded by [`deg`](crate::ring::deg), and multiplication
//! adds degrees. A series that is zero below a known bound `lower` therefore
//! multiplies exactly: stratum `d` of a product only involves strata
//! `d₁ + d₂ = d` with each `dᵢ` at least its factor's lower bound. Nothing
//! approximate is ever stored; strata above the cutoff are simply unknown.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::DefiningGraph;
use crate::ring::{deg_i64, GroupRing, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cutoff {cutoff} is below the lower degree bound {lower}")]
    CutoffBelowLower { lower: i64, cutoff: i64 },
    #[error("coefficients are undefined for (p, q) = (0, 0)")]
    ZeroExponents,
}

/// `Σ_{d = lower}^{cutoff} P_d` with every term of `P_d` of degree `d`.
///
/// Equality compares the cutoff and the nonzero strata; `lower` is only a
/// bound.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    lower: i64,
    cutoff: i64,
    strata: BTreeMap<i64, RingElement>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.cutoff == other.cutoff && self.strata == other.strata
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    pub fn zero(lower: i64, cutoff: i64) -> Result<Self, SeriesError> {
        if cutoff < lower {
            return Err(SeriesError::CutoffBelowLower { lower, cutoff });
        }
        Ok(TruncatedSeries { lower, cutoff, strata: BTreeMap::new() })
    }

    pub fn one(cutoff: i64) -> Result<Self, SeriesError> {
        TruncatedSeries::from_ring(&RingElement::one(), cutoff)
    }

    /// A finite element as a series. The lower bound is its least degree.
    pub fn from_ring(r: &RingElement, cutoff: i64) -> Result<Self, SeriesError> {
        let lower = r.degree_range().map_or(cutoff, |(lo, _)| lo);
        let mut s = TruncatedSeries::zero(lower, cutoff)?;
        for (d, part) in r.strata() {
            if d <= cutoff {
                s.strata.insert(d, part);
            }
        }
        Ok(s)
    }

    /// Adds a homogeneous part; terms above the cutoff are discarded.
    ///
    /// Panics if `part` is not homogeneous of degree `d` or `d < lower`.
    pub fn add_stratum(&mut self, d: i64, part: &RingElement) {
        assert!(d >= self.lower, "stratum {d} below lower bound {}", self.lower);
        assert!(part.terms().all(|(g, _)| deg_i64(g) == d), "stratum {d} is not homogeneous");
        if d > self.cutoff || part.is_zero() {
            return;
        }
        let sum = self.stratum(d).add(part);
        if sum.is_zero() {
            self.strata.remove(&d);
        } else {
            self.strata.insert(d, sum);
        }
    }

    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn stratum(&self, d: i64) -> RingElement {
        self.strata.get(&d).cloned().unwrap_or_default()
    }

    /// Nonzero strata in increasing degree.
    pub fn strata(&self) -> impl Iterator<Item = (i64, &RingElement)> {
        self.strata.iter().map(|(d, r)| (*d, r))
    }

    pub fn is_zero(&self) -> bool {
        self.strata.is_empty()
    }

    /// The sum of all known strata as a finite element.
    pub fn to_ring(&self) -> RingElement {
        self.strata.values().fold(RingElement::zero(), |acc, r| acc.add(r))
    }

    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> impl fmt::Display + 'a {
        SeriesText { s: self, graph }
    }
}

struct SeriesText<'a> {
    s: &'a TruncatedSeries,
    graph: &'a DefiningGraph,
}

/// One line `d: <ring text>` per nonzero stratum; the zero series is `0`.
impl fmt::Display for SeriesText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            return writeln!(f, "0");
        }
        for (d, r) in &self.s.strata {
            writeln!(f, "{d}: {}", r.display(self.graph))?;
        }
        Ok(())
    }
}

impl GroupRing<'_> {
    /// Product of two series. The result is exact up to
    /// `min(a.cutoff + b.lower, b.cutoff + a.lower)`, which becomes its cutoff.
    pub fn multiply_series(&self, a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        let lower = a.lower + b.lower;
        let cutoff = (a.cutoff + b.lower).min(b.cutoff + a.lower);
        let mut out = TruncatedSeries { lower, cutoff, strata: BTreeMap::new() };
        for (da, pa) in &a.strata {
            for (db, pb) in &b.strata {
                if da + db <= cutoff {
                    out.add_stratum(da + db, &self.multiply(pa, pb));
                }
            }
        }
        out
    }
}

/// Truncated one-variable Laurent series `Σ_{n ≥ lower} c_n x^n`, dense.
#[derive(Debug, Clone, PartialEq, Eq)]
struct LaurentSeries {
    lower: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    fn cutoff(&self) -> i64 {
        self.lower + self.coeffs.len() as i64 - 1
    }

    fn multiply(&self, other: &LaurentSeries) -> LaurentSeries {
        let lower = self.lower + other.lower;
        let cutoff = (self.cutoff() + other.lower).min(other.cutoff() + self.lower);
        let len = (cutoff - lower + 1).max(0) as usize;
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j < len {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentSeries { lower, coeffs }
    }

    fn coefficient(&self, n: i64) -> BigInt {
        if n < self.lower {
            return BigInt::zero();
        }
        self.coeffs.get((n - self.lower) as usize).cloned().unwrap_or_default()
    }
}

/// `−Σ_{m ≥ 0} x^{2m+1}` up to degree `cutoff ≥ 1`, the inverse of `x − x⁻¹`.
fn inverse_binomial(cutoff: i64) -> LaurentSeries {
    let coeffs = (1..=cutoff)
        .map(|n| if n % 2 == 1 { -BigInt::one() } else { BigInt::zero() })
        .collect();
    LaurentSeries { lower: 1, coeffs }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Least possibly nonzero `n` in the expansion of `(x − x⁻¹)^p x^q`.
pub fn expansion_lower(p: i64, q: i64) -> i64 {
    if p >= 0 {
        q - p
    } else {
        -p + q
    }
}

/// Coefficient of `x^n` in `(x − x⁻¹)^p x^q`, expanded as a series in
/// increasing powers when `p < 0`.
pub fn coeff_c(n: i64, p: i64, q: i64) -> Result<BigInt, SeriesError> {
    if p == 0 && q == 0 {
        return Err(SeriesError::ZeroExponents);
    }
    if p >= 0 {
        // (x − x⁻¹)^p = Σ_j C(p, j) (−1)^j x^{p − 2j}
        let twice_j = p + q - n;
        if twice_j < 0 || twice_j % 2 != 0 || twice_j / 2 > p {
            return Ok(BigInt::zero());
        }
        let j = (twice_j / 2) as u64;
        let c = binomial(p as u64, j);
        return Ok(if j.is_multiple_of(2) { c } else { -c });
    }
    let copies = p.unsigned_abs();
    let target = n - q;
    if target < copies as i64 {
        return Ok(BigInt::zero());
    }
    // each factor starts in degree 1, so one needs degrees up to target − (copies − 1)
    let factor = inverse_binomial(target - copies as i64 + 1);
    let mut acc = factor.clone();
    for _ in 1..copies {
        acc = acc.multiply(&factor);
    }
    Ok(acc.coefficient(target))
}

/// Nonzero coefficients `c(n, p, q)` for `n` from the lower bound up to
/// `max_n`.
pub fn coefficients(p: i64, q: i64, max_n: i64) -> Result<BTreeMap<i64, BigInt>, SeriesError> {
    let mut out = BTreeMap::new();
    for n in expansion_lower(p, q)..=max_n {
        let c = coeff_c(n, p, q)?;
        if !c.is_zero() {
            out.insert(n, c);
        }
    }
    Ok(out)
}

/// Some `a ≠ 0` with `c(a, p, q) ≠ 0`, searched in the window of width
/// `2|p| + 2` above the lower bound.
pub fn nonzero_offcenter_index(p: i64, q: i64) -> Result<Option<i64>, SeriesError> {
    let lower = expansion_lower(p, q);
    let window = coefficients(p, q, lower + 2 * p.abs() + 2)?;
    Ok(window.keys().copied().find(|&a| a != 0))
}
