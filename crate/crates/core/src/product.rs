//! Normal forms in graph products of abelian vertex groups and monoids.
//!
//! An [`Expression`] is a sequence of syllables `(u, g)` with `g` a
//! non-identity element of the vertex group `K_u`. Two kinds of elementary
//! moves relate expressions of the same element: merging two adjacent
//! syllables on the same vertex (dropping the result if it is the identity),
//! and swapping two adjacent syllables whose vertices are joined by an edge.
//! An expression is reduced iff no merge is reachable through swaps; the
//! normal form is the reduced expression whose vertex sequence is
//! lexicographically least.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::marker::PhantomData;

use thiserror::Error;

use crate::graph::{DefiningGraph, Vertex};
use crate::weight::{GroupWeight, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("syllable {0} has identity weight")]
    IdentitySyllable(usize),
    #[error("orbit exceeds cap of {0} expressions")]
    OrbitCapExceeded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable<W> {
    pub vertex: Vertex,
    pub weight: W,
}

impl<W> Syllable<W> {
    pub fn new(vertex: Vertex, weight: W) -> Self {
        Syllable { vertex, weight }
    }
}

/// A sequence of non-identity syllables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expression<W>(Vec<Syllable<W>>);

impl<W: Weight> Expression<W> {
    pub fn new(syllables: Vec<Syllable<W>>) -> Result<Self, ProductError> {
        if let Some(i) = syllables.iter().position(|s| s.weight.is_identity()) {
            return Err(ProductError::IdentitySyllable(i));
        }
        Ok(Expression(syllables))
    }

    /// Builds an expression, silently dropping identity syllables.
    pub fn from_lossy(syllables: impl IntoIterator<Item = Syllable<W>>) -> Self {
        Expression(syllables.into_iter().filter(|s| !s.weight.is_identity()).collect())
    }

    pub fn empty() -> Self {
        Expression(Vec::new())
    }
}

impl<W> Expression<W> {
    pub fn syllables(&self) -> &[Syllable<W>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.0.iter().map(|s| s.vertex).collect()
    }

    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> SyllableText<'a, W> {
        SyllableText { syllables: &self.0, graph }
    }
}

/// The canonical expression of an element. Only produced by
/// [`GraphProduct`], so equality of normal forms is equality of elements.
///
/// Normal forms are ordered shortlex: by syllable count, then syllable by
/// syllable on `(vertex, weight)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm<W>(Vec<Syllable<W>>);

impl<W> NormalForm<W> {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    pub fn syllables(&self) -> &[Syllable<W>] {
        &self.0
    }

    /// Syllable length of the element.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.0.iter().map(|s| s.vertex).collect()
    }

    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> SyllableText<'a, W> {
        SyllableText { syllables: &self.0, graph }
    }
}

impl<W: Clone> NormalForm<W> {
    pub fn to_expression(&self) -> Expression<W> {
        Expression(self.0.clone())
    }
}

impl<W: Ord> Ord for NormalForm<W> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl<W: Ord> PartialOrd for NormalForm<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text: syllables `v^e` joined by `.`, the empty sequence as `1`.
pub struct SyllableText<'a, W> {
    syllables: &'a [Syllable<W>],
    graph: &'a DefiningGraph,
}

impl<W: Weight> fmt::Display for SyllableText<'_, W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}^", self.graph.name(s.vertex))?;
            s.weight.write_exponent(f)?;
        }
        Ok(())
    }
}

/// The graph product of copies of one vertex family `W` along a graph.
#[derive(Debug)]
pub struct GraphProduct<'g, W> {
    graph: &'g DefiningGraph,
    _weight: PhantomData<W>,
}

impl<W> Clone for GraphProduct<'_, W> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<W> Copy for GraphProduct<'_, W> {}

impl<'g, W: Weight> GraphProduct<'g, W> {
    pub fn new(graph: &'g DefiningGraph) -> Self {
        GraphProduct { graph, _weight: PhantomData }
    }

    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    /// The one-syllable element `(v, w)`; the identity if `w` is.
    pub fn syllable(&self, v: Vertex, w: W) -> NormalForm<W> {
        if w.is_identity() {
            NormalForm::identity()
        } else {
            NormalForm(vec![Syllable::new(v, w)])
        }
    }

    /// Applies merges until none is reachable through swaps.
    ///
    /// Pairs are found leftmost-innermost: the first position `j` that has an
    /// earlier syllable `i` on the same vertex with everything strictly
    /// between commuting with it. The merged weight goes to `i`; `j` is
    /// removed, and `i` too if the sum is the identity. Scanning resumes at
    /// `j`, since a merge never creates a pair inside an already reduced
    /// prefix.
    pub fn reduce(&self, e: &Expression<W>) -> Expression<W> {
        let mut out: Vec<Syllable<W>> = Vec::with_capacity(e.len());
        for s in &e.0 {
            self.push_reduced(&mut out, s.clone());
        }
        Expression(out)
    }

    fn push_reduced(&self, prefix: &mut Vec<Syllable<W>>, s: Syllable<W>) {
        for i in (0..prefix.len()).rev() {
            let v = prefix[i].vertex;
            if v == s.vertex {
                let merged = prefix[i].weight.combine(&s.weight);
                if merged.is_identity() {
                    prefix.remove(i);
                } else {
                    prefix[i].weight = merged;
                }
                return;
            }
            if !self.graph.commutes(v, s.vertex) {
                break;
            }
        }
        prefix.push(s);
    }

    /// Reorders a reduced sequence into its lexicographically least support.
    fn sort_reduced(&self, mut rest: Vec<Syllable<W>>) -> Vec<Syllable<W>> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for j in 0..rest.len() {
                let v = rest[j].vertex;
                let movable = rest[..j].iter().all(|s| s.vertex != v && self.graph.commutes(s.vertex, v));
                if movable && best.is_none_or(|b| v < rest[b].vertex) {
                    best = Some(j);
                }
            }
            // rest[0] is always movable
            out.push(rest.remove(best.unwrap_or(0)));
        }
        out
    }

    pub fn normal_form(&self, e: &Expression<W>) -> NormalForm<W> {
        NormalForm(self.sort_reduced(self.reduce(e).0))
    }

    pub fn multiply(&self, x: &NormalForm<W>, y: &NormalForm<W>) -> NormalForm<W> {
        let mut out = x.0.clone();
        for s in &y.0 {
            self.push_reduced(&mut out, s.clone());
        }
        NormalForm(self.sort_reduced(out))
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a NormalForm<W>>) -> NormalForm<W>
    where
        W: 'a,
    {
        let mut out = Vec::new();
        for f in factors {
            for s in &f.0 {
                self.push_reduced(&mut out, s.clone());
            }
        }
        NormalForm(self.sort_reduced(out))
    }

    /// All expressions reachable from `e` by single merges and swaps,
    /// including `e` itself.
    pub fn orbit(&self, e: &Expression<W>, cap: usize) -> Result<HashSet<Expression<W>>, ProductError> {
        self.closure(e, cap, true)
    }

    /// Expressions reachable from `e` by swaps alone.
    pub fn swap_class(&self, e: &Expression<W>, cap: usize) -> Result<HashSet<Expression<W>>, ProductError> {
        self.closure(e, cap, false)
    }

    fn closure(
        &self,
        e: &Expression<W>,
        cap: usize,
        merges: bool,
    ) -> Result<HashSet<Expression<W>>, ProductError> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(e.clone());
        queue.push_back(e.clone());
        while let Some(cur) = queue.pop_front() {
            let s = &cur.0;
            for i in 0..s.len().saturating_sub(1) {
                let (u, v) = (s[i].vertex, s[i + 1].vertex);
                let next = if u == v {
                    if !merges {
                        continue;
                    }
                    let merged = s[i].weight.combine(&s[i + 1].weight);
                    let mut n = Vec::with_capacity(s.len() - 1);
                    n.extend_from_slice(&s[..i]);
                    if !merged.is_identity() {
                        n.push(Syllable::new(u, merged));
                    }
                    n.extend_from_slice(&s[i + 2..]);
                    n
                } else if self.graph.commutes(u, v) {
                    let mut n = s.clone();
                    n.swap(i, i + 1);
                    n
                } else {
                    continue;
                };
                let next = Expression(next);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(ProductError::OrbitCapExceeded(cap));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }
}

impl<W: GroupWeight> GraphProduct<'_, W> {
    pub fn invert(&self, x: &NormalForm<W>) -> NormalForm<W> {
        let reversed = x.0.iter().rev().map(|s| Syllable::new(s.vertex, s.weight.inverse()));
        NormalForm(self.sort_reduced(reversed.collect()))
    }

    /// `x · y · x⁻¹`.
    pub fn conjugate(&self, x: &NormalForm<W>, y: &NormalForm<W>) -> NormalForm<W> {
        self.product([x, y, &self.invert(x)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{IntNatWeight, IntWeight, NatWeight};

    fn p() -> DefiningGraph {
        "vertices: a b c\nedges: a-b".parse().unwrap()
    }

    fn int_expr(g: &DefiningGraph, s: &[(&str, i64)]) -> Expression<IntWeight> {
        Expression::new(s.iter().map(|&(v, e)| Syllable::new(g.vertex(v).unwrap(), e.into())).collect())
            .unwrap()
    }

    fn text<W: Weight>(g: &DefiningGraph, nf: &NormalForm<W>) -> String {
        nf.display(g).to_string()
    }

    #[test]
    fn reduce_examples() {
        let g = p();
        let gp = GraphProduct::<IntWeight>::new(&g);
        let r = gp.reduce(&int_expr(&g, &[("a", 1), ("b", 1), ("a", -1)]));
        assert_eq!(r, int_expr(&g, &[("b", 1)]));
        let frozen = int_expr(&g, &[("a", 1), ("c", 1), ("a", -1)]);
        assert_eq!(gp.reduce(&frozen), frozen);

        let nat = GraphProduct::<NatWeight>::new(&g);
        let a = g.vertex("a").unwrap();
        let e = Expression::new(vec![Syllable::new(a, 1.into()), Syllable::new(a, 1.into())]).unwrap();
        assert_eq!(gp_text(&g, &nat.reduce(&e)), "a^2");
    }

    fn gp_text<W: Weight>(g: &DefiningGraph, e: &Expression<W>) -> String {
        e.display(g).to_string()
    }

    #[test]
    fn normal_form_examples() {
        let g = p();
        let gp = GraphProduct::<IntWeight>::new(&g);
        assert_eq!(text(&g, &gp.normal_form(&int_expr(&g, &[("b", 1), ("a", 2)]))), "a^2.b^1");
        assert_eq!(text(&g, &gp.normal_form(&int_expr(&g, &[("c", 1), ("a", 1)]))), "c^1.a^1");
        let sn = GraphProduct::<IntNatWeight>::new(&g);
        let e = Expression::new(vec![Syllable::new(g.vertex("a").unwrap(), IntNatWeight::new(1, 1))]).unwrap();
        assert_eq!(text(&g, &sn.normal_form(&e)), "a^(1,1)");
    }

    #[test]
    fn identity_syllables_rejected() {
        let g = p();
        let e = Expression::new(vec![Syllable::new(g.vertex("a").unwrap(), IntWeight::from(0))]);
        assert_eq!(e, Err(ProductError::IdentitySyllable(0)));
    }

    #[test]
    fn multiply_and_invert() {
        let g = p();
        let gp = GraphProduct::<IntWeight>::new(&g);
        let nf = |s: &[(&str, i64)]| gp.normal_form(&int_expr(&g, s));
        assert!(gp.multiply(&nf(&[("a", 1)]), &nf(&[("a", -1)])).is_identity());
        assert_eq!(text(&g, &gp.multiply(&nf(&[("b", 1)]), &nf(&[("a", 1)]))), "a^1.b^1");
        assert_eq!(text(&g, &gp.multiply(&nf(&[("c", 1)]), &nf(&[("a", 1)]))), "c^1.a^1");

        let x = nf(&[("a", 2), ("b", 1)]);
        assert_eq!(text(&g, &gp.invert(&x)), "a^-2.b^-1");
        assert!(gp.multiply(&x, &gp.invert(&x)).is_identity());
        assert!(gp.invert(&NormalForm::identity()).is_identity());
        assert_eq!(text(&g, &gp.invert(&nf(&[("a", 1), ("c", 1)]))), "c^-1.a^-1");
    }

    #[test]
    fn equality_and_length() {
        let g = p();
        let nat = GraphProduct::<NatWeight>::new(&g);
        let w = |s: &[&str]| {
            nat.normal_form(&Expression::new(
                s.iter().map(|v| Syllable::new(g.vertex(v).unwrap(), 1.into())).collect(),
            )
            .unwrap())
        };
        assert_eq!(w(&["a", "b"]), w(&["b", "a"]));
        assert_ne!(w(&["a", "c"]), w(&["c", "a"]));

        let gp = GraphProduct::<IntWeight>::new(&g);
        assert_eq!(NormalForm::<IntWeight>::identity().len(), 0);
        assert_eq!(gp.normal_form(&int_expr(&g, &[("a", 1), ("c", 1), ("a", -1)])).len(), 3);
        assert_eq!(gp.normal_form(&int_expr(&g, &[("a", 1), ("b", 1), ("a", -1)])).len(), 1);
    }

    #[test]
    fn orbit_examples() {
        let g = p();
        let gp = GraphProduct::<IntWeight>::new(&g);
        let cancel = gp.orbit(&int_expr(&g, &[("a", 1), ("a", -1)]), 100).unwrap();
        assert!(cancel.contains(&Expression::empty()));
        let swap = gp.orbit(&int_expr(&g, &[("a", 1), ("b", 1)]), 100).unwrap();
        assert_eq!(swap.len(), 2);
        assert!(swap.contains(&int_expr(&g, &[("b", 1), ("a", 1)])));
        let frozen = int_expr(&g, &[("a", 1), ("c", 1)]);
        assert_eq!(gp.orbit(&frozen, 100).unwrap(), HashSet::from([frozen.clone()]));
        let big = int_expr(&g, &[("a", 1), ("b", 1), ("a", 1), ("b", 1)]);
        assert_eq!(gp.orbit(&big, 2), Err(ProductError::OrbitCapExceeded(2)));
    }

    #[test]
    fn shortlex_order() {
        let g = p();
        let gp = GraphProduct::<IntWeight>::new(&g);
        let nf = |s: &[(&str, i64)]| gp.normal_form(&int_expr(&g, s));
        let mut v = [nf(&[("a", 1), ("c", 1)]), nf(&[("b", -1)]), nf(&[]), nf(&[("b", 1)]), nf(&[("a", -2)])];
        v.sort();
        let got: Vec<String> = v.iter().map(|x| text(&g, x)).collect();
        assert_eq!(got, ["1", "a^-2", "b^1", "b^-1", "a^1.c^1"]);
    }
}
