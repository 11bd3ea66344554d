//! The five-way condition classification and matroid recognition.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Length};
use crate::varset::VarSet;

/// The graphs with maximum degree at most 2 and diameter at most 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SmallGraph {
    /// A single edge.
    P1,
    /// The path with two edges.
    P2,
    /// The triangle `C_3`.
    C3,
    C4,
    C5,
}

impl SmallGraph {
    pub fn label(self) -> &'static str {
        match self {
            SmallGraph::P1 => "P1",
            SmallGraph::P2 => "P2",
            SmallGraph::C3 => "C3CYCLE",
            SmallGraph::C4 => "C4CYCLE",
            SmallGraph::C5 => "C5CYCLE",
        }
    }
}

/// Which of the conditions C1–C5 a graph without isolated vertices meets.
///
/// - `C1`: some vertex is compact.
/// - `C2`: no compact vertex, but two non-adjacent vertices share at least
///   three neighbours.
/// - `C3`: neither of the above, and some vertex has degree at least 3.
/// - `C4`: maximum degree at most 2 and diameter at least 3.
/// - `C5`: maximum degree at most 2 and diameter at most 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionClass {
    C1,
    C2,
    C3,
    C4,
    C5(SmallGraph),
}

impl fmt::Display for ConditionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConditionClass::C1 => write!(f, "C1"),
            ConditionClass::C2 => write!(f, "C2"),
            ConditionClass::C3 => write!(f, "C3"),
            ConditionClass::C4 => write!(f, "C4"),
            ConditionClass::C5(s) => write!(f, "C5/{}", s.label()),
        }
    }
}

/// Whether two distinct non-adjacent vertices have at least three common
/// neighbours.
pub fn has_wide_non_edge(g: &Graph) -> bool {
    (0..g.nvertices())
        .tuple_combinations()
        .any(|(p, q)| !g.has_edge(p, q) && g.neighbors(p).intersection(g.neighbors(q)).len() >= 3)
}

/// Classifies a graph with at least 3 vertices and no isolated vertices.
pub fn condition_class(g: &Graph) -> Result<ConditionClass> {
    if g.nvertices() < 3 {
        return Err(Error::TooFewVertices(g.nvertices()));
    }
    if !g.isolated_vertices().is_empty() {
        return Err(Error::IsolatedVertices);
    }
    if !g.compact_vertices().is_empty() {
        return Ok(ConditionClass::C1);
    }
    if has_wide_non_edge(g) {
        return Ok(ConditionClass::C2);
    }
    if g.max_degree() >= 3 {
        return Ok(ConditionClass::C3);
    }
    if g.diameter() >= Length::Finite(3) {
        return Ok(ConditionClass::C4);
    }
    // Connected with maximum degree <= 2 and diameter <= 2: a short path or
    // a cycle of length at most 5.
    let small = match (g.nvertices(), g.nedges()) {
        (2, 1) => SmallGraph::P1,
        (3, 2) => SmallGraph::P2,
        (3, 3) => SmallGraph::C3,
        (4, 4) => SmallGraph::C4,
        (5, 5) => SmallGraph::C5,
        other => unreachable!("degree <= 2 and diameter <= 2 leaves no room for {other:?}"),
    };
    Ok(ConditionClass::C5(small))
}

/// How [`is_matroid`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatroidMethod {
    /// The exchange axiom over all pairs of faces of the 1-complex.
    Exchange,
    /// Every pair of disjoint edges lies in a 4-cycle.
    FourCycle,
    /// No induced Broom or Pentagon; only valid for diameter at most 2.
    Obstruction,
}

impl MatroidMethod {
    pub const ALL: [MatroidMethod; 3] = [
        MatroidMethod::Exchange,
        MatroidMethod::FourCycle,
        MatroidMethod::Obstruction,
    ];

    pub fn label(self) -> &'static str {
        match self {
            MatroidMethod::Exchange => "exchange",
            MatroidMethod::FourCycle => "fourcycle",
            MatroidMethod::Obstruction => "obstruction",
        }
    }
}

/// Induced subgraphs that keep a diameter-2 graph from being a matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Obstruction {
    Broom,
    Pentagon,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Broom => write!(f, "Broom"),
            Obstruction::Pentagon => write!(f, "Pentagon"),
        }
    }
}

fn disjoint_edges_in_four_cycle(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (g.has_edge(a, c) && g.has_edge(b, d)) || (g.has_edge(a, d) && g.has_edge(b, c))
}

/// The first induced Broom or Pentagon, scanning vertex subsets in order.
pub fn find_obstruction(g: &Graph) -> Option<(Obstruction, VarSet)> {
    let broom = Graph::broom().canonical_form();
    let pentagon = Graph::pentagon().canonical_form();
    let n = g.nvertices();
    for (size, target, kind) in [(4, broom, Obstruction::Broom), (5, pentagon, Obstruction::Pentagon)] {
        for verts in (0..n).combinations(size) {
            let set = VarSet::from_indices(verts);
            let sub = g.induced(set);
            if sub.nedges() == size && sub.canonical_form() == target {
                return Some((kind, set));
            }
        }
    }
    None
}

/// Whether the graph, as a 1-complex, is a matroid.
///
/// `FourCycle` first rejects graphs with both an edge and an isolated vertex
/// (a matroid complex is pure); the 4-cycle criterion covers the rest.
/// `Obstruction` returns [`Error::DiameterTooLarge`] when the diameter
/// exceeds 2.
pub fn is_matroid(g: &Graph, method: MatroidMethod) -> Result<bool> {
    match method {
        MatroidMethod::Exchange => Ok(g.complex().is_matroid()),
        MatroidMethod::FourCycle => {
            if g.nedges() > 0 && !g.isolated_vertices().is_empty() {
                return Ok(false);
            }
            let edges = g.edges();
            Ok(edges.iter().tuple_combinations().all(|(&e, &f)| {
                let shares = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
                shares || disjoint_edges_in_four_cycle(g, e, f)
            }))
        }
        MatroidMethod::Obstruction => {
            if g.diameter() > Length::Finite(2) {
                return Err(Error::DiameterTooLarge);
            }
            Ok(find_obstruction(g).is_none())
        }
    }
}
