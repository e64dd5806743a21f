//! The integral group ring of a right-angled Artin group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::DefiningGraph;
use crate::product::GraphProduct;
use crate::singular::GroupElement;
use crate::weight::IntWeight;

/// Exponent sum: the homomorphism to `ℤ` sending every `σ_v` to 1.
pub fn deg(g: &GroupElement) -> BigInt {
    g.syllables().iter().map(|s| &s.weight.0).sum()
}

/// [`deg`] as a machine integer.
///
/// Panics if the degree does not fit in an `i64`.
pub fn deg_i64(g: &GroupElement) -> i64 {
    i64::try_from(deg(g)).expect("degree exceeds i64")
}

/// A finite `ℤ`-combination of group elements. Terms are kept sorted
/// shortlex by group element; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElement {
    terms: BTreeMap<GroupElement, BigInt>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn one() -> Self {
        RingElement::unit(GroupElement::identity())
    }

    /// The basis element `[g]`.
    pub fn unit(g: GroupElement) -> Self {
        RingElement::term(g, BigInt::one())
    }

    pub fn term(g: GroupElement, c: BigInt) -> Self {
        let mut r = RingElement::zero();
        r.add_term(g, c);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, g: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> RingElement {
        RingElement { terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    /// Least and greatest degree of a term, `None` for zero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(deg_i64);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    /// Splits into homogeneous parts by degree.
    pub fn strata(&self) -> BTreeMap<i64, RingElement> {
        let mut out: BTreeMap<i64, RingElement> = BTreeMap::new();
        for (g, c) in &self.terms {
            out.entry(deg_i64(g)).or_default().add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> impl fmt::Display + 'a {
        RingText { r: self, graph }
    }
}

struct RingText<'a> {
    r: &'a RingElement,
    graph: &'a DefiningGraph,
}

/// Terms as `{+|-}k*[g]` joined by spaces; zero is written `0`.
impl fmt::Display for RingText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_zero() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.r.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}*[{}]", c.abs(), g.display(self.graph))?;
        }
        Ok(())
    }
}

/// Ring operations that need the group law.
#[derive(Debug, Clone, Copy)]
pub struct GroupRing<'g> {
    group: GraphProduct<'g, IntWeight>,
}

impl<'g> GroupRing<'g> {
    pub fn new(graph: &'g DefiningGraph) -> Self {
        GroupRing { group: GraphProduct::new(graph) }
    }

    pub fn group(&self) -> GraphProduct<'g, IntWeight> {
        self.group
    }

    pub fn multiply(&self, p: &RingElement, q: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (g, a) in &p.terms {
            for (h, b) in &q.terms {
                out.add_term(self.group.multiply(g, h), a * b);
            }
        }
        out
    }

    /// `[g] − [g⁻¹]`.
    pub fn binomial(&self, g: &GroupElement) -> RingElement {
        RingElement::unit(g.clone()).sub(&RingElement::unit(self.group.invert(g)))
    }
}
