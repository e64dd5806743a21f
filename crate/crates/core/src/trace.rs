//! Trace monoids over an abstract ordered alphabet.
//!
//! Letters are any `Ord` type; which pairs commute is decided by a caller
//! supplied predicate. This lets the same engine serve both fixed vertex
//! alphabets and alphabets discovered on the fly, such as conjugates of
//! singular generators.

use std::fmt;

use crate::graph::{DefiningGraph, Vertex};

/// Lexicographically least representative of the commutation class of
/// `word`.
///
/// Repeatedly emits the least letter that can be moved to the front, i.e.
/// every letter before it is distinct from it and commutes with it; ties go
/// to the leftmost occurrence. The predicate is never called on equal
/// letters.
pub fn normal_form<L, F>(word: &[L], commutes: F) -> Vec<L>
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> bool,
{
    let mut rest: Vec<L> = word.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best = 0;
        for j in 1..rest.len() {
            if rest[j] >= rest[best] {
                continue;
            }
            let x = &rest[j];
            if rest[..j].iter().all(|y| y != x && commutes(y, x)) {
                best = j;
            }
        }
        out.push(rest.remove(best));
    }
    out
}

pub fn equals<L, F>(u: &[L], v: &[L], commutes: F) -> bool
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> bool,
{
    u.len() == v.len() && normal_form(u, &commutes) == normal_form(v, &commutes)
}

pub fn concat<L, F>(u: &[L], v: &[L], commutes: F) -> Vec<L>
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> bool,
{
    let mut w = u.to_vec();
    w.extend_from_slice(v);
    normal_form(&w, commutes)
}

/// Outcome of checking one instance of the power-conjugacy property for traces:
/// if `v^p u_1 … u_l = u_1 … u_l w^p` then `v = w` and each `u_i` commutes
/// with `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerConjugacyVerdict {
    pub hypothesis_holds: bool,
    pub same_letter: bool,
    pub all_commute: bool,
}

impl PowerConjugacyVerdict {
    /// False exactly when the instance is a counterexample.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || (self.same_letter && self.all_commute)
    }
}

pub fn verify_power_conjugacy<L, F>(v: &L, p: usize, u: &[L], w: &L, commutes: F) -> PowerConjugacyVerdict
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> bool,
{
    let mut lhs: Vec<L> = std::iter::repeat_n(v.clone(), p).collect();
    lhs.extend_from_slice(u);
    let mut rhs = u.to_vec();
    rhs.extend(std::iter::repeat_n(w.clone(), p));
    PowerConjugacyVerdict {
        hypothesis_holds: equals(&lhs, &rhs, &commutes),
        same_letter: v == w,
        all_commute: u.iter().all(|x| x == v || commutes(x, v)),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PowerConjugacyReport {
    pub instances: u64,
    pub hypothesis_held: u64,
    pub counterexamples: u64,
}

impl fmt::Display for PowerConjugacyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instances: {}", self.instances)?;
        writeln!(f, "hypothesis-held: {}", self.hypothesis_held)?;
        writeln!(f, "counterexamples: {}", self.counterexamples)
    }
}

/// Checks every instance over the vertex alphabet of `graph`: all letters
/// `v`, `w`, all sequences `u` of length at most `max_len`, and all
/// `1 ≤ p ≤ max_power`.
pub fn power_conjugacy_scan(graph: &DefiningGraph, max_len: usize, max_power: usize) -> PowerConjugacyReport {
    let letters: Vec<Vertex> = graph.vertices().collect();
    let commutes = |x: &Vertex, y: &Vertex| graph.commutes(*x, *y);
    let mut report = PowerConjugacyReport::default();
    let mut u: Vec<Vertex> = Vec::new();
    for len in 0..=max_len {
        let n = letters.len();
        let total = n.checked_pow(len as u32).unwrap_or(usize::MAX);
        if n == 0 && len > 0 {
            break;
        }
        for code in 0..total {
            u.clear();
            let mut c = code;
            for _ in 0..len {
                u.push(letters[c % n]);
                c /= n;
            }
            for v in &letters {
                for w in &letters {
                    for p in 1..=max_power {
                        let verdict = verify_power_conjugacy(v, p, &u, w, commutes);
                        report.instances += 1;
                        report.hypothesis_held += verdict.hypothesis_holds as u64;
                        report.counterexamples += !verdict.consistent() as u64;
                    }
                }
            }
        }
    }
    report
}
