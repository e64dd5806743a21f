//! Defining graphs of right-angled presentations.
//!
//! An edge `{u, v}` means the generators attached to `u` and `v` commute; a
//! missing edge means they generate a free product. Vertices are kept sorted
//! by name (byte order), and that order is the total order used by every
//! normal form in the crate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vertex of a [`DefiningGraph`], identified by its position in the
/// sorted vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub(crate) u16);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: duplicate vertex {name}")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: undeclared endpoint {name}")]
    UndeclaredEndpoint { line: usize, name: String },
    #[error("line {line}: loop edge {name}-{name}")]
    LoopEdge { line: usize, name: String },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("too many vertices ({0})")]
    TooManyVertices(usize),
}

/// Vertex names, commutation edges, and the fixed total order on vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningGraph {
    names: Vec<String>,
    adjacency: Vec<Vec<bool>>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl DefiningGraph {
    /// Builds a graph from vertex names and edges given as name pairs.
    /// Line numbers in errors are reported as 0.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut names: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if !valid_name(v) {
                return Err(GraphError::Malformed {
                    line: 0,
                    msg: format!("invalid vertex name {v:?}"),
                });
            }
            if names.iter().any(|n| n == v) {
                return Err(GraphError::DuplicateVertex { line: 0, name: v.to_string() });
            }
            names.push(v.to_string());
        }
        if names.len() > u16::MAX as usize {
            return Err(GraphError::TooManyVertices(names.len()));
        }
        names.sort();
        let n = names.len();
        let mut graph = DefiningGraph { names, adjacency: vec![vec![false; n]; n] };
        for (u, v) in edges {
            graph.add_edge(u.as_ref(), v.as_ref(), 0)?;
        }
        Ok(graph)
    }

    /// The graph on vertices named `a, b, c, …` whose edges are given by a
    /// bitmask over the pairs `(i, j)`, `i < j`, in lexicographic order.
    /// Used to enumerate every edge pattern on a small vertex set.
    ///
    /// Panics if `n > 26`.
    #[allow(clippy::needless_range_loop)]
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 26, "from_edge_mask supports at most 26 vertices");
        let names: Vec<String> = (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect();
        let mut adjacency = vec![vec![false; n]; n];
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    adjacency[i][j] = true;
                    adjacency[j][i] = true;
                }
                bit += 1;
            }
        }
        DefiningGraph { names, adjacency }
    }

    /// All labelled graphs on `n` vertices.
    pub fn all_on(n: usize) -> impl Iterator<Item = DefiningGraph> {
        let pairs = n * n.saturating_sub(1) / 2;
        (0..1u64 << pairs).map(move |mask| DefiningGraph::from_edge_mask(n, mask))
    }

    fn add_edge(&mut self, u: &str, v: &str, line: usize) -> Result<(), GraphError> {
        let lookup = |name: &str| {
            self.position(name)
                .ok_or_else(|| GraphError::UndeclaredEndpoint { line, name: name.to_string() })
        };
        let (i, j) = (lookup(u)?, lookup(v)?);
        if i == j {
            return Err(GraphError::LoopEdge { line, name: u.to_string() });
        }
        self.adjacency[i][j] = true;
        self.adjacency[j][i] = true;
        Ok(())
    }

    fn position(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex, GraphError> {
        self.position(name)
            .map(|i| Vertex(i as u16))
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len()).map(|i| Vertex(i as u16))
    }

    /// True iff `u != v` and `{u, v}` is an edge.
    pub fn commutes(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u.index()][v.index()]
    }

    /// [`commutes`](Self::commutes) addressed by vertex name.
    pub fn commutes_by_name(&self, u: &str, v: &str) -> Result<bool, GraphError> {
        Ok(self.commutes(self.vertex(u)?, self.vertex(v)?))
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut out = BTreeSet::new();
        for u in self.vertices() {
            for v in self.vertices() {
                if u < v && self.commutes(u, v) {
                    out.insert((u, v));
                }
            }
        }
        out
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

impl FromStr for DefiningGraph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, GraphError> {
        let mut vertex_line: Option<(usize, Vec<&str>)> = None;
        let mut edge_line: Option<(usize, Vec<&str>)> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let malformed = |msg: &str| GraphError::Malformed { line: line_no, msg: msg.to_string() };
            if let Some(rest) = line.strip_prefix("vertices:") {
                if vertex_line.is_some() {
                    return Err(malformed("second vertices: line"));
                }
                if edge_line.is_some() {
                    return Err(malformed("vertices: line must precede edges: line"));
                }
                vertex_line = Some((line_no, rest.split_whitespace().collect()));
            } else if let Some(rest) = line.strip_prefix("edges:") {
                if vertex_line.is_none() {
                    return Err(malformed("edges: line before vertices: line"));
                }
                if edge_line.is_some() {
                    return Err(malformed("second edges: line"));
                }
                edge_line = Some((line_no, rest.split_whitespace().collect()));
            } else {
                return Err(malformed("expected `vertices:` or `edges:`"));
            }
        }
        let (vline, names) = vertex_line.ok_or(GraphError::Malformed {
            line: text.lines().count().max(1),
            msg: "missing vertices: line".into(),
        })?;
        let (eline, edges) = edge_line.ok_or(GraphError::Malformed {
            line: text.lines().count().max(1),
            msg: "missing edges: line".into(),
        })?;

        let mut sorted: Vec<String> = Vec::with_capacity(names.len());
        for name in &names {
            if !valid_name(name) {
                return Err(GraphError::Malformed {
                    line: vline,
                    msg: format!("invalid vertex name {name:?}"),
                });
            }
            if sorted.iter().any(|n| n == name) {
                return Err(GraphError::DuplicateVertex { line: vline, name: name.to_string() });
            }
            sorted.push(name.to_string());
        }
        if sorted.len() > u16::MAX as usize {
            return Err(GraphError::TooManyVertices(sorted.len()));
        }
        sorted.sort();
        let n = sorted.len();
        let mut graph = DefiningGraph { names: sorted, adjacency: vec![vec![false; n]; n] };
        for edge in edges {
            let (u, v) = edge.split_once('-').ok_or_else(|| GraphError::Malformed {
                line: eline,
                msg: format!("edge {edge:?} is not of the form u-v"),
            })?;
            if !valid_name(u) || !valid_name(v) {
                return Err(GraphError::Malformed {
                    line: eline,
                    msg: format!("edge {edge:?} is not of the form u-v"),
                });
            }
            graph.add_edge(u, v, eline)?;
        }
        Ok(graph)
    }
}

/// Serializes in the graph-file format; the output reparses to an equal graph.
impl fmt::Display for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.names.join(" "))?;
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.name(u), self.name(v)))
            .collect();
        if edges.is_empty() {
            writeln!(f, "edges:")
        } else {
            writeln!(f, "edges: {}", edges.join(" "))
        }
    }
}
