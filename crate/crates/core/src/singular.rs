//! The singular monoid of a right-angled Artin group.
//!
//! Elements are words in `σ_v`, `σ_v⁻¹` and the singular generators `τ_v`.
//! Every element factors uniquely as a trace over conjugates `α τ_s α⁻¹`
//! followed by a group element, with the group acting on the trace by
//! conjugation. A conjugate `α τ_s α⁻¹` is identified by the group element
//! `α σ_s α⁻¹` (its key), and two conjugates commute exactly when their keys
//! commute in the group. This gives a decision procedure for equality that
//! only ever computes in the group.
//!
//! The same monoid is also the graph product with vertex monoids `ℤ × ℕ`;
//! [`SingularMonoid::evaluate_direct`] computes in that representation so
//! the two can be checked against each other.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::graph::{DefiningGraph, Vertex};
use crate::product::{Expression, GraphProduct, NormalForm, Syllable};
use crate::trace;
use crate::weight::{IntNatWeight, IntWeight};

pub type GroupElement = NormalForm<IntWeight>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("bad token {0:?}")]
    BadToken(String),
    #[error("token {0:?} is not allowed here")]
    Disallowed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `σ_v`, written `+v`
    Sigma,
    /// `σ_v⁻¹`, written `-v`
    SigmaInv,
    /// `τ_v`, written `~v`
    Tau,
    /// `τ_v⁻¹`, written `!v`; only exists in the enveloping group.
    TauInv,
}

impl Letter {
    fn prefix(self) -> char {
        match self {
            Letter::Sigma => '+',
            Letter::SigmaInv => '-',
            Letter::Tau => '~',
            Letter::TauInv => '!',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Token {
    pub letter: Letter,
    pub vertex: Vertex,
}

/// A word over `σ^{±1}`, `τ` and, for extended words, `τ⁻¹`.
///
/// Text form: whitespace separated tokens `+v`, `-v`, `~v` (and `!v` in
/// extended words); the literal `1` is the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Token>);

impl Word {
    /// Parses a word over `σ^{±1}` and `τ`.
    pub fn parse(text: &str, graph: &DefiningGraph) -> Result<Word, WordError> {
        let w = Word::parse_extended(text, graph)?;
        if let Some(t) = w.0.iter().find(|t| t.letter == Letter::TauInv) {
            return Err(WordError::Disallowed(format!("!{}", graph.name(t.vertex))));
        }
        Ok(w)
    }

    /// Parses a word that may also contain `!v` for `τ_v⁻¹`.
    pub fn parse_extended(text: &str, graph: &DefiningGraph) -> Result<Word, WordError> {
        let mut tokens = Vec::new();
        let parts: Vec<&str> = text.split_whitespace().collect();
        if parts == ["1"] {
            return Ok(Word::default());
        }
        for part in parts {
            let mut chars = part.chars();
            let letter = match chars.next() {
                Some('+') => Letter::Sigma,
                Some('-') => Letter::SigmaInv,
                Some('~') => Letter::Tau,
                Some('!') => Letter::TauInv,
                _ => return Err(WordError::BadToken(part.to_string())),
            };
            let name = chars.as_str();
            if name.is_empty() {
                return Err(WordError::BadToken(part.to_string()));
            }
            let vertex = graph.vertex(name).map_err(|_| WordError::UnknownVertex(name.to_string()))?;
            tokens.push(Token { letter, vertex });
        }
        Ok(Word(tokens))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if the word contains no singular letters.
    pub fn is_group_word(&self) -> bool {
        self.0.iter().all(|t| matches!(t.letter, Letter::Sigma | Letter::SigmaInv))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> impl fmt::Display + 'a {
        WordText { word: self, graph }
    }

    /// Every word over `σ^{±1}`, `τ` of length at most `max_len`, shortest
    /// first.
    pub fn all_up_to(graph: &DefiningGraph, max_len: usize) -> Vec<Word> {
        let letters: Vec<Token> = graph
            .vertices()
            .flat_map(|vertex| {
                [Letter::Sigma, Letter::SigmaInv, Letter::Tau].map(|letter| Token { letter, vertex })
            })
            .collect();
        let mut out = vec![Word::default()];
        let mut frontier = vec![Word::default()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * letters.len());
            for w in &frontier {
                for t in &letters {
                    let mut v = w.0.clone();
                    v.push(*t);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

struct WordText<'a> {
    word: &'a Word,
    graph: &'a DefiningGraph,
}

impl fmt::Display for WordText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", t.letter.prefix(), self.graph.name(t.vertex))?;
        }
        Ok(())
    }
}

/// A conjugate `α τ_s α⁻¹` of a singular generator. Identity, ordering and
/// hashing use only `key = α σ_s α⁻¹`; the witness `(α, s)` is one of many
/// and is kept for display.
#[derive(Debug, Clone)]
pub struct ConjugateVertex {
    pub key: GroupElement,
    pub witness_alpha: GroupElement,
    pub witness_s: Vertex,
}

impl PartialEq for ConjugateVertex {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for ConjugateVertex {}

impl Hash for ConjugateVertex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl Ord for ConjugateVertex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for ConjugateVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the singular monoid as (trace of conjugates, group part).
/// The trace is always in trace normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularElement {
    pub trace: Vec<ConjugateVertex>,
    pub group: GroupElement,
}

impl SingularElement {
    pub fn identity() -> Self {
        SingularElement { trace: Vec::new(), group: NormalForm::identity() }
    }

    pub fn display<'a>(&'a self, graph: &'a DefiningGraph) -> impl fmt::Display + 'a {
        ElementText { x: self, graph }
    }
}

struct ElementText<'a> {
    x: &'a SingularElement,
    graph: &'a DefiningGraph,
}

impl fmt::Display for ElementText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.x.trace.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v.key.display(self.graph))?;
        }
        write!(f, "}}|{}", self.x.group.display(self.graph))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sigma,
    Tau,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrzError {
    #[error("exponent must be nonzero")]
    ZeroExponent,
    #[error("tau exponent must be positive, got {0}")]
    NegativeTauExponent(i64),
}

/// Computations in the singular monoid over a fixed graph.
#[derive(Debug, Clone, Copy)]
pub struct SingularMonoid<'g> {
    graph: &'g DefiningGraph,
    group: GraphProduct<'g, IntWeight>,
}

impl<'g> SingularMonoid<'g> {
    pub fn new(graph: &'g DefiningGraph) -> Self {
        SingularMonoid { graph, group: GraphProduct::new(graph) }
    }

    pub fn graph(&self) -> &'g DefiningGraph {
        self.graph
    }

    /// The underlying right-angled Artin group.
    pub fn group(&self) -> GraphProduct<'g, IntWeight> {
        self.group
    }

    pub fn sigma(&self, v: Vertex, exp: i64) -> GroupElement {
        self.group.syllable(v, exp.into())
    }

    /// `α σ_s α⁻¹`.
    pub fn vertex_key(&self, alpha: &GroupElement, s: Vertex) -> GroupElement {
        self.group.conjugate(alpha, &self.sigma(s, 1))
    }

    /// The conjugate `α τ_s α⁻¹`.
    pub fn conjugate_vertex(&self, alpha: &GroupElement, s: Vertex) -> ConjugateVertex {
        ConjugateVertex { key: self.vertex_key(alpha, s), witness_alpha: alpha.clone(), witness_s: s }
    }

    /// Whether two conjugates commute, decided by commutation of their keys
    /// in the group.
    pub fn vertex_commute(&self, u: &ConjugateVertex, v: &ConjugateVertex) -> bool {
        u == v || self.group.multiply(&u.key, &v.key) == self.group.multiply(&v.key, &u.key)
    }

    /// `g · u · g⁻¹`.
    pub fn act(&self, g: &GroupElement, u: &ConjugateVertex) -> ConjugateVertex {
        ConjugateVertex {
            key: self.group.conjugate(g, &u.key),
            witness_alpha: self.group.multiply(g, &u.witness_alpha),
            witness_s: u.witness_s,
        }
    }

    fn normalize_trace(&self, t: &[ConjugateVertex]) -> Vec<ConjugateVertex> {
        trace::normal_form(t, |u, v| self.vertex_commute(u, v))
    }

    /// Evaluates a word left to right: `σ` letters multiply the group part on
    /// the right, and `τ_s` appends the conjugate of `τ_s` by the current
    /// group part to the trace.
    ///
    /// Panics on `τ⁻¹` letters, which have no image in the monoid.
    pub fn evaluate(&self, w: &Word) -> SingularElement {
        let mut trace = Vec::new();
        let mut group = NormalForm::identity();
        for t in &w.0 {
            match t.letter {
                Letter::Sigma => group = self.group.multiply(&group, &self.sigma(t.vertex, 1)),
                Letter::SigmaInv => group = self.group.multiply(&group, &self.sigma(t.vertex, -1)),
                Letter::Tau => trace.push(self.conjugate_vertex(&group, t.vertex)),
                Letter::TauInv => panic!("τ⁻¹ has no image in the singular monoid"),
            }
        }
        SingularElement { trace: self.normalize_trace(&trace), group }
    }

    /// Evaluates a word in the graph product with vertex monoids `ℤ × ℕ`.
    pub fn evaluate_direct(&self, w: &Word) -> NormalForm<IntNatWeight> {
        let gp = GraphProduct::<IntNatWeight>::new(self.graph);
        let syllables = w.0.iter().map(|t| {
            let weight = match t.letter {
                Letter::Sigma => IntNatWeight::new(1, 0),
                Letter::SigmaInv => IntNatWeight::new(-1, 0),
                Letter::Tau => IntNatWeight::new(0, 1),
                Letter::TauInv => panic!("τ⁻¹ has no image in the singular monoid"),
            };
            Syllable::new(t.vertex, weight)
        });
        gp.normal_form(&Expression::from_lossy(syllables))
    }

    pub fn multiply(&self, x: &SingularElement, y: &SingularElement) -> SingularElement {
        let mut t = x.trace.clone();
        t.extend(y.trace.iter().map(|u| self.act(&x.group, u)));
        SingularElement {
            trace: self.normalize_trace(&t),
            group: self.group.multiply(&x.group, &y.group),
        }
    }

    pub fn elements_equal(&self, x: &SingularElement, y: &SingularElement) -> bool {
        x.group == y.group && trace::equals(&x.trace, &y.trace, |u, v| self.vertex_commute(u, v))
    }

    /// Word problem: do `w1` and `w2` represent the same element?
    pub fn equals(&self, w1: &Word, w2: &Word) -> bool {
        self.elements_equal(&self.evaluate(w1), &self.evaluate(w2))
    }

    /// Image under `σ^{±1} ↦ σ^{±1}`, `τ ↦ σ`.
    pub fn theta(&self, x: &SingularElement) -> GroupElement {
        self.group.product(x.trace.iter().map(|u| &u.key).chain([&x.group]))
    }

    pub fn iota(&self, g: &GroupElement) -> SingularElement {
        SingularElement { trace: Vec::new(), group: g.clone() }
    }

    /// Number of singular letters.
    pub fn ord(&self, x: &SingularElement) -> usize {
        x.trace.len()
    }

    /// Whether `α σ_s α⁻¹ = σ_t`.
    pub fn is_ribbon(&self, alpha: &GroupElement, s: Vertex, t: Vertex) -> bool {
        self.vertex_key(alpha, s) == self.sigma(t, 1)
    }

    /// `gen_v^k` as an element, for `gen` one of `σ`, `τ`.
    pub fn power(&self, family: Family, v: Vertex, k: i64) -> Result<SingularElement, FrzError> {
        match family {
            Family::Sigma => Ok(self.iota(&self.sigma(v, k))),
            Family::Tau if k < 0 => Err(FrzError::NegativeTauExponent(k)),
            Family::Tau => {
                let u = self.conjugate_vertex(&NormalForm::identity(), v);
                Ok(SingularElement { trace: vec![u; k as usize], group: NormalForm::identity() })
            }
        }
    }

    /// Decides `α · gen_s^k = gen_t^k · α`.
    pub fn frz_decide(
        &self,
        family: Family,
        alpha: &SingularElement,
        s: Vertex,
        t: Vertex,
        k: i64,
    ) -> Result<bool, FrzError> {
        if k == 0 {
            return Err(FrzError::ZeroExponent);
        }
        let lhs = self.multiply(alpha, &self.power(family, s, k)?);
        let rhs = self.multiply(&self.power(family, t, k)?, alpha);
        Ok(self.elements_equal(&lhs, &rhs))
    }
}
