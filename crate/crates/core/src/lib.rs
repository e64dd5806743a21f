//! Exact computation in right-angled Artin groups, their trace monoids, and
//! their singular monoids.
//!
//! - [`graph`]: defining graphs and the fixed vertex order.
//! - [`product`]: normal forms in graph products over the vertex families of
//!   [`weight`]; [`orbit_check`] verifies them exhaustively.
//! - [`trace`]: trace monoids over an arbitrary ordered alphabet.
//! - [`singular`]: the singular monoid, its word problem, and the maps to and
//!   from the group.
//! - [`ring`], [`series`], [`desingularize`]: the group ring, truncated
//!   series, and the desingularization map.
//! - [`cli`]: the `raag` command line.

pub mod cli;
pub mod desingularize;
pub mod graph;
pub mod orbit_check;
pub mod product;
pub mod ring;
pub mod series;
pub mod singular;
pub mod trace;
pub mod weight;

pub use graph::{DefiningGraph, GraphError, Vertex};
pub use product::{Expression, GraphProduct, NormalForm, Syllable};
pub use ring::{GroupRing, RingElement};
pub use series::TruncatedSeries;
pub use singular::{ConjugateVertex, Family, SingularElement, SingularMonoid, Word};
pub use weight::{IntIntWeight, IntNatWeight, IntWeight, NatWeight, Weight};
