//! Exhaustive verification of graph-product normal forms against the orbit
//! of every expression under single merges and swaps.
//!
//! For each expression `e` the checks are:
//! - the normal form of `e` lies in its orbit and every orbit member has the
//!   same normal form;
//! - the normal form is no longer than any orbit member;
//! - every orbit member of minimum length is reachable from the normal form
//!   by swaps alone;
//! - every orbit member with the normal form's support is the normal form.
//!
//! # Enumerating by weight relations
//!
//! Syllables on different vertices never combine, and syllables on the same
//! vertex keep their relative order under every move. An orbit member is
//! therefore a choice of blocks of same-vertex positions, and whether two
//! members (or their normal forms) coincide, or a block vanishes, is decided
//! by linear relations `Σ cᵢ wᵢ = 0`, `cᵢ ∈ {−1, 0, 1}`, among the weights on
//! one vertex. Two expressions with the same support whose per-vertex weight
//! tuples satisfy exactly the same such relations have isomorphic orbits,
//! and every check above transfers between them. The scan enumerates all
//! weight tuples per vertex, groups them by relation set, and checks one
//! representative per group, while counting every expression it covers.

use std::collections::HashMap;
use std::fmt;

use crate::graph::{DefiningGraph, Vertex};
use crate::product::{Expression, GraphProduct, ProductError, Syllable};
use crate::trace;
use crate::weight::{IntIntWeight, IntNatWeight, IntWeight, NatWeight, Weight, WeightKind};

/// Weight families that can be enumerated in a box `|component| ≤ max`.
pub trait SmallWeights: Weight {
    /// Every non-identity weight with each component in `[-max, max]`
    /// (`[0, max]` for `ℕ` components).
    fn bounded(max: u32) -> Vec<Self>;

    /// The weight's components as machine integers, `(σ, τ)` with `τ = 0`
    /// for one-component kinds.
    ///
    /// Panics if a component does not fit in an `i64`.
    fn components(&self) -> (i64, i64);
}

fn small<T: TryInto<i64>>(x: T) -> i64 {
    x.try_into().ok().expect("weight component exceeds i64")
}

impl SmallWeights for NatWeight {
    fn bounded(max: u32) -> Vec<Self> {
        (1..=max as u64).map(NatWeight::from).collect()
    }

    fn components(&self) -> (i64, i64) {
        (small(self.0.clone()), 0)
    }
}

impl SmallWeights for IntWeight {
    fn bounded(max: u32) -> Vec<Self> {
        let m = max as i64;
        (-m..=m).filter(|&q| q != 0).map(IntWeight::from).collect()
    }

    fn components(&self) -> (i64, i64) {
        (small(self.0.clone()), 0)
    }
}

impl SmallWeights for IntNatWeight {
    fn bounded(max: u32) -> Vec<Self> {
        let m = max as i64;
        let mut out = Vec::new();
        for q in -m..=m {
            for p in 0..=m as u64 {
                if (q, p) != (0, 0) {
                    out.push(IntNatWeight::new(q, p));
                }
            }
        }
        out
    }

    fn components(&self) -> (i64, i64) {
        (small(self.sigma.clone()), small(self.tau.clone()))
    }
}

impl SmallWeights for IntIntWeight {
    fn bounded(max: u32) -> Vec<Self> {
        let m = max as i64;
        let mut out = Vec::new();
        for q in -m..=m {
            for p in -m..=m {
                if (q, p) != (0, 0) {
                    out.push(IntIntWeight::new(q, p));
                }
            }
        }
        out
    }

    fn components(&self) -> (i64, i64) {
        (small(self.sigma.clone()), small(self.tau.clone()))
    }
}

/// A representative weight tuple and the number of tuples sharing its
/// relation set.
#[derive(Debug, Clone)]
pub struct WeightClass<W> {
    pub representative: Vec<W>,
    pub size: u64,
}

/// Longest weight tuple [`relation_classes`] accepts.
pub const MAX_TUPLE_LEN: usize = 6;

// one bit per relation; Σ_{d<6} 3^d = 364 bits
type RelationKey = [u64; 6];

/// For each length `k ≤ max_len`, the tuples in `weights^k` grouped by the
/// set of vanishing `{−1, 0, 1}` combinations. Index `k` of the result holds
/// the classes for length `k`.
///
/// Panics if `max_len > MAX_TUPLE_LEN`.
pub fn relation_classes<W: SmallWeights>(weights: &[W], max_len: usize) -> Vec<Vec<WeightClass<W>>> {
    assert!(max_len <= MAX_TUPLE_LEN, "tuples longer than {MAX_TUPLE_LEN} are not supported");
    let comps: Vec<(i64, i64)> = weights.iter().map(W::components).collect();
    let mut tables: Vec<HashMap<RelationKey, (Vec<usize>, u64)>> = vec![HashMap::new(); max_len + 1];
    tables[0].insert([0; 6], (Vec::new(), 1));
    let mut prefix = Vec::with_capacity(max_len);
    extend_classes(&comps, max_len, &mut prefix, &[(0, 0)], [0; 6], 0, &mut tables);
    tables
        .into_iter()
        .map(|t| {
            let mut classes: Vec<WeightClass<W>> = t
                .into_values()
                .map(|(idx, size)| WeightClass {
                    representative: idx.iter().map(|&i| weights[i].clone()).collect(),
                    size,
                })
                .collect();
            classes.sort_by(|a, b| a.representative.cmp(&b.representative));
            classes
        })
        .collect()
}

// `combos` holds Σ cᵢ wᵢ for every c ∈ {−1,0,1}^prefix.len(); `key` has one
// bit per relation whose last nonzero coefficient is +1.
fn extend_classes(
    comps: &[(i64, i64)],
    max_len: usize,
    prefix: &mut Vec<usize>,
    combos: &[(i64, i64)],
    key: RelationKey,
    key_bits: usize,
    tables: &mut [HashMap<RelationKey, (Vec<usize>, u64)>],
) {
    if prefix.len() == max_len {
        return;
    }
    let mut next_combos = Vec::with_capacity(combos.len() * 3);
    for (i, &(q, p)) in comps.iter().enumerate() {
        let mut next_key = key;
        for (j, &(cq, cp)) in combos.iter().enumerate() {
            if cq + q == 0 && cp + p == 0 {
                let bit = key_bits + j;
                next_key[bit / 64] |= 1 << (bit % 64);
            }
        }
        prefix.push(i);
        let entry = tables[prefix.len()].entry(next_key).or_insert_with(|| (prefix.clone(), 0));
        entry.1 += 1;
        if prefix.len() < max_len {
            next_combos.clear();
            for &(cq, cp) in combos {
                next_combos.push((cq - q, cp - p));
                next_combos.push((cq, cp));
                next_combos.push((cq + q, cp + p));
            }
            extend_classes(comps, max_len, prefix, &next_combos, next_key, key_bits + combos.len(), tables);
        }
        prefix.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub kind: WeightKind,
    /// Expressions covered, counting every member of every weight class.
    pub expressions: u128,
    /// Orbits actually explored.
    pub orbits: u64,
    pub orbit_members: u64,
    pub violations: u64,
    /// Descriptions of the first few violations.
    pub examples: Vec<String>,
}

impl OrbitReport {
    fn new(kind: WeightKind) -> Self {
        OrbitReport { kind, expressions: 0, orbits: 0, orbit_members: 0, violations: 0, examples: Vec::new() }
    }

    fn merge(&mut self, other: OrbitReport) {
        self.expressions += other.expressions;
        self.orbits += other.orbits;
        self.orbit_members += other.orbit_members;
        self.violations += other.violations;
        for e in other.examples {
            if self.examples.len() < 5 {
                self.examples.push(e);
            }
        }
    }
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: expressions {} orbits {} members {} violations {}",
            self.kind.name(),
            self.expressions,
            self.orbits,
            self.orbit_members,
            self.violations
        )?;
        for e in &self.examples {
            writeln!(f, "  {e}")?;
        }
        Ok(())
    }
}

/// Default cap on a single orbit.
pub const ORBIT_CAP: usize = 1_000_000;

/// Runs every check on the orbit of one expression. Returns the orbit size,
/// or a description of the first failed check.
pub fn check_expression<W: Weight>(
    gp: &GraphProduct<W>,
    e: &Expression<W>,
    cap: usize,
) -> Result<Result<usize, String>, ProductError> {
    let graph = gp.graph();
    let nf = gp.normal_form(e);
    let orbit = gp.orbit(e, cap)?;
    let nf_expr = nf.to_expression();
    let describe = |what: &str| format!("{}: {what}", e.display(graph));
    if !orbit.contains(&nf_expr) {
        return Ok(Err(describe("normal form not in orbit")));
    }
    let min_len = orbit.iter().map(Expression::len).min().unwrap_or(0);
    if nf.len() != min_len {
        return Ok(Err(describe(&format!("normal form length {} but orbit minimum {min_len}", nf.len()))));
    }
    let swaps = gp.swap_class(&nf_expr, cap)?;
    let support = nf.support();
    for m in &orbit {
        if gp.normal_form(m) != nf {
            return Ok(Err(describe(&format!("member {} has another normal form", m.display(graph)))));
        }
        if m.len() == min_len && !swaps.contains(m) {
            return Ok(Err(describe(&format!("reduced member {} not swap-connected", m.display(graph)))));
        }
        if m.support() == support && *m != nf_expr {
            return Ok(Err(describe(&format!("member {} has normal-form support", m.display(graph)))));
        }
    }
    Ok(Ok(orbit.len()))
}

/// Supports of length at most `max_len` that are lexicographically least in
/// their commutation class, each with the size of its class.
fn least_supports(graph: &DefiningGraph, max_len: usize) -> Vec<(Vec<Vertex>, u128)> {
    let verts: Vec<Vertex> = graph.vertices().collect();
    let mut classes: HashMap<Vec<Vertex>, u128> = HashMap::new();
    let mut frontier = vec![Vec::new()];
    classes.insert(Vec::new(), 1);
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * verts.len());
        for s in &frontier {
            for &v in &verts {
                let mut t: Vec<Vertex> = s.clone();
                t.push(v);
                *classes.entry(trace::normal_form(&t, |x, y| graph.commutes(*x, *y))).or_default() += 1;
                next.push(t);
            }
        }
        frontier = next;
    }
    let mut out: Vec<(Vec<Vertex>, u128)> = classes.into_iter().collect();
    out.sort();
    out
}

/// Orbit checks for one weight kind at fixed bounds, reusable across graphs.
pub struct OrbitChecker<W> {
    max_syll: usize,
    classes: Vec<Vec<WeightClass<W>>>,
}

impl<W: SmallWeights> OrbitChecker<W> {
    /// Panics if `max_syll > MAX_TUPLE_LEN`.
    pub fn new(max_syll: usize, max_exp: u32) -> Self {
        OrbitChecker { max_syll, classes: relation_classes(&W::bounded(max_exp), max_syll) }
    }

    /// Checks every expression with at most `max_syll` syllables and weights
    /// within the bound over `graph`.
    ///
    /// Expressions related by swaps have the same orbit, so only supports
    /// that are least in their commutation class are explored, each counted
    /// with its class size.
    pub fn check(&self, graph: &DefiningGraph) -> Result<OrbitReport, ProductError> {
        let gp = GraphProduct::<W>::new(graph);
        let mut report = OrbitReport::new(W::KIND);
        for (support, multiplicity) in least_supports(graph, self.max_syll) {
            self.check_support(&gp, &support, multiplicity, &mut report)?;
        }
        Ok(report)
    }

    fn check_support(
        &self,
        gp: &GraphProduct<W>,
        support: &[Vertex],
        multiplicity: u128,
        report: &mut OrbitReport,
    ) -> Result<(), ProductError> {
        // positions of each vertex in the support
        let mut positions: Vec<(Vertex, Vec<usize>)> = Vec::new();
        for (i, &v) in support.iter().enumerate() {
            match positions.iter_mut().find(|(u, _)| *u == v) {
                Some((_, ps)) => ps.push(i),
                None => positions.push((v, vec![i])),
            }
        }
        let choices: Vec<&Vec<WeightClass<W>>> =
            positions.iter().map(|(_, ps)| &self.classes[ps.len()]).collect();
        if choices.iter().any(|c| c.is_empty()) {
            return Ok(());
        }
        let mut pick = vec![0usize; choices.len()];
        loop {
            let mut weights: Vec<Option<W>> = vec![None; support.len()];
            let mut covered: u128 = multiplicity;
            for (slot, (_, ps)) in positions.iter().enumerate() {
                let class = &choices[slot][pick[slot]];
                covered *= class.size as u128;
                for (&pos, w) in ps.iter().zip(&class.representative) {
                    weights[pos] = Some(w.clone());
                }
            }
            let e = Expression::new(
                support
                    .iter()
                    .zip(weights)
                    .map(|(&v, w)| Syllable::new(v, w.expect("every position assigned")))
                    .collect(),
            )?;
            report.expressions += covered;
            report.orbits += 1;
            match check_expression(gp, &e, ORBIT_CAP)? {
                Ok(size) => report.orbit_members += size as u64,
                Err(msg) => {
                    report.violations += 1;
                    if report.examples.len() < 5 {
                        report.examples.push(msg);
                    }
                }
            }
            // advance the mixed-radix counter
            let mut slot = 0;
            while slot < pick.len() {
                pick[slot] += 1;
                if pick[slot] < choices[slot].len() {
                    break;
                }
                pick[slot] = 0;
                slot += 1;
            }
            if slot == pick.len() {
                return Ok(());
            }
        }
    }
}

/// Checks every expression with at most `max_syll` syllables and weights
/// bounded by `max_exp` per component over one weight kind.
pub fn check_kind<W: SmallWeights>(
    graph: &DefiningGraph,
    max_syll: usize,
    max_exp: u32,
) -> Result<OrbitReport, ProductError> {
    OrbitChecker::<W>::new(max_syll, max_exp).check(graph)
}

/// [`check_kind`] for all four weight kinds.
pub fn check_all_kinds(
    graph: &DefiningGraph,
    max_syll: usize,
    max_exp: u32,
) -> Result<Vec<OrbitReport>, ProductError> {
    Ok(vec![
        check_kind::<NatWeight>(graph, max_syll, max_exp)?,
        check_kind::<IntWeight>(graph, max_syll, max_exp)?,
        check_kind::<IntNatWeight>(graph, max_syll, max_exp)?,
        check_kind::<IntIntWeight>(graph, max_syll, max_exp)?,
    ])
}

/// Sums reports of the same kind, e.g. across graphs.
pub fn combine_reports(reports: impl IntoIterator<Item = OrbitReport>) -> Option<OrbitReport> {
    let mut it = reports.into_iter();
    let mut acc = it.next()?;
    for r in it {
        assert_eq!(acc.kind, r.kind, "combining reports of different kinds");
        acc.merge(r);
    }
    Some(acc)
}
