//! Simple graphs on `{0, .., r-1}` and their Stanley–Reisner ideals.
//!
//! A graph is read as a one-dimensional simplicial complex: its faces are the
//! empty set, every vertex and every edge. Isolated vertices are allowed and
//! are facets of that complex.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::varset::{VarSet, MAX_VARS};

/// A length that may be infinite (girth of a forest, diameter of a
/// disconnected graph).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(v) => write!(f, "{v}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

/// A simple undirected graph with vertices `0..r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VarSet>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(nvertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if nvertices > MAX_VARS {
            return Err(Error::TooManyVariables(nvertices));
        }
        let mut adj = vec![VarSet::EMPTY; nvertices];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= nvertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w + 1,
                        nvertices,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop(u + 1));
            }
            if adj[u].contains(v) {
                let (a, b) = (u.min(v), u.max(v));
                return Err(Error::DuplicateEdge(a + 1, b + 1));
            }
            adj[u] = adj[u].insert(v);
            adj[v] = adj[v].insert(u);
        }
        Ok(Graph { n: nvertices, adj })
    }

    /// Graph with no edges.
    pub fn empty(nvertices: usize) -> Self {
        Graph {
            n: nvertices,
            adj: vec![VarSet::EMPTY; nvertices],
        }
    }

    /// The path `P_len` with `len` edges on `len + 1` vertices.
    pub fn path(len: usize) -> Self {
        Graph::new(len + 1, (0..len).map(|i| (i, i + 1))).expect("valid path")
    }

    /// The cycle `C_len` on `len >= 3` vertices.
    pub fn cycle(len: usize) -> Self {
        assert!(len >= 3, "cycles have length at least 3");
        Graph::new(len, (0..len).map(|i| (i, (i + 1) % len))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).tuple_combinations()).expect("valid complete graph")
    }

    /// The star `K_{1,k}` with centre `k` (the last vertex).
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (0..k).map(|i| (i, k))).expect("valid star")
    }

    /// Triangle `{1,2,3}` with pendant edge `{3,4}` (1-based labels).
    pub fn broom() -> Self {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid broom")
    }

    /// The 5-cycle `1-2-3-4-5-1` (1-based labels).
    pub fn pentagon() -> Self {
        Graph::cycle(5)
    }

    /// Two vertices `4, 5` both joined to `1, 2, 3` (1-based labels).
    pub fn diamond() -> Self {
        Graph::new(5, (0..3).flat_map(|i| [(3, i), (4, i)])).expect("valid diamond")
    }

    /// Disjoint union of `self` and `other`, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges()
                .into_iter()
                .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    /// Adds `k` isolated vertices after the existing ones.
    pub fn with_isolated(&self, k: usize) -> Result<Graph> {
        self.disjoint_union(&Graph::empty(k))
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VarSet {
        VarSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_sets(&self) -> Vec<VarSet> {
        self.edges()
            .into_iter()
            .map(|(u, v)| VarSet::from_indices([u, v]))
            .collect()
    }

    pub fn nedges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// The neighbourhood `N_p`.
    pub fn neighbors(&self, p: usize) -> VarSet {
        self.adj[p]
    }

    pub fn degree(&self, p: usize) -> usize {
        self.adj[p].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> VarSet {
        VarSet::from_indices((0..self.n).filter(|&p| self.adj[p].is_empty()))
    }

    /// The induced subgraph on `vertices`, relabelled to `0..|vertices|`
    /// preserving order.
    pub fn induced(&self, vertices: VarSet) -> Graph {
        let index: Vec<usize> = vertices.to_vec();
        let edges = index
            .iter()
            .enumerate()
            .tuple_combinations()
            .filter(|((_, &u), (_, &v))| self.has_edge(u, v))
            .map(|((a, _), (b, _))| (a, b));
        Graph::new(index.len(), edges).expect("induced subgraph is simple")
    }

    /// The graph with its isolated vertices deleted.
    pub fn without_isolated(&self) -> Graph {
        self.induced(self.vertex_set().difference(self.isolated_vertices()))
    }

    /// The graph as a one-dimensional simplicial complex.
    pub fn complex(&self) -> SimplicialComplex {
        let facets = self
            .edge_sets()
            .into_iter()
            .chain(self.isolated_vertices().iter().map(VarSet::singleton));
        SimplicialComplex::from_facets(self.n, facets)
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices are reached");
            for v in self.adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Length {
        self.distances_from(u)[v].map_or(Length::Infinite, Length::Finite)
    }

    pub fn diameter(&self) -> Length {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.distances_from(u) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Length::Infinite,
                }
            }
        }
        Length::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Length of a shortest cycle: for each edge, one plus the distance
    /// between its endpoints once the edge is removed.
    pub fn girth(&self) -> Length {
        let mut best = Length::Infinite;
        for (u, v) in self.edges() {
            let mut g = self.clone();
            g.adj[u] = g.adj[u].remove(v);
            g.adj[v] = g.adj[v].remove(u);
            if let Some(d) = g.distances_from(u)[v] {
                best = best.min(Length::Finite(d + 1));
            }
        }
        best
    }

    pub fn in_triangle(&self, p: usize) -> bool {
        let nb = self.adj[p];
        nb.iter().any(|i| !self.adj[i].intersection(nb).is_empty())
    }

    /// A vertex is compact when it has degree at least 3 and lies in a triangle.
    pub fn is_compact_vertex(&self, p: usize) -> bool {
        self.degree(p) >= 3 && self.in_triangle(p)
    }

    pub fn compact_vertices(&self) -> VarSet {
        VarSet::from_indices((0..self.n).filter(|&p| self.is_compact_vertex(p)))
    }

    pub fn profile(&self) -> GraphProfile {
        GraphProfile {
            girth: self.girth(),
            diameter: self.diameter(),
            max_degree: self.max_degree(),
            connected: self.is_connected(),
            compact_vertices: self.compact_vertices(),
            isolated_vertices: self.isolated_vertices(),
        }
    }

    /// The Stanley–Reisner ideal `I_G`: non-edges as quadrics and triangles as
    /// cubics, i.e. the minimal non-faces of the 1-complex.
    pub fn stanley_reisner(&self) -> Result<MonomialIdeal> {
        if self.nedges() == 0 {
            return Err(Error::NoEdges);
        }
        let non_edges = (0..self.n)
            .tuple_combinations()
            .filter(|&(u, v)| !self.has_edge(u, v))
            .map(|(u, v)| VarSet::from_indices([u, v]));
        let triangles = (0..self.n)
            .tuple_combinations()
            .filter(|&(u, v, w)| self.has_edge(u, v) && self.has_edge(v, w) && self.has_edge(u, w))
            .map(|(u, v, w)| VarSet::from_indices([u, v, w]));
        Ok(MonomialIdeal::squarefree(self.n, non_edges.chain(triangles)))
    }

    /// The symbolic power `I_G^{(n)}`: the intersection of `P_F^n` over the
    /// facets `F` of the graph's complex, that is its edges and isolated
    /// vertices, where `P_F = (x_i : i ∉ F)`.
    pub fn symbolic_power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        if self.nedges() == 0 {
            return Err(Error::NoEdges);
        }
        let mut facets = self.complex().facets().to_vec().into_iter();
        let first = facets.next().ok_or(Error::NoEdges)?;
        let mut acc = edge_prime(first, self.n)?.power(n);
        for f in facets {
            acc = acc.intersect(&edge_prime(f, self.n)?.power(n))?;
        }
        Ok(acc)
    }

    /// `(u, v)` pairs of the adjacency matrix upper triangle packed as bits,
    /// position `k` for the `k`-th pair in lexicographic order.
    fn adjacency_bits(&self, perm: &[usize]) -> u64 {
        let mut bits = 0u64;
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        bits
    }

    /// Canonical form: the smallest adjacency bitstring over all vertex
    /// orderings. Exhaustive over `r!` orderings.
    pub fn canonical_form(&self) -> CanonicalForm {
        assert!(self.n <= 11, "canonical form is exhaustive; keep r small");
        let bits = (0..self.n)
            .permutations(self.n)
            .map(|perm| self.adjacency_bits(&perm))
            .min()
            .unwrap_or(0);
        CanonicalForm { n: self.n, bits }
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.nedges() == other.nedges()
            && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

/// Prints the vertex count and 1-based edges, e.g. `4:{1,2}{2,3}`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for e in self.edge_sets() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// The monomial prime `P_F = (x_i : i ∉ F)` of a face, usually an edge.
pub fn edge_prime(edge: VarSet, nvars: usize) -> Result<MonomialIdeal> {
    if let Some(i) = edge.iter().find(|&i| i >= nvars) {
        return Err(Error::VariableOutOfRange { index: i, nvars });
    }
    Ok(MonomialIdeal::variables(
        nvars,
        VarSet::full(nvars).difference(edge),
    ))
}

/// Minimum adjacency bitstring over all vertex orderings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalForm {
    /// The graph whose adjacency bitstring is this form.
    pub fn graph(&self) -> Graph {
        let pairs = (0..self.n).tuple_combinations::<(usize, usize)>();
        let edges = pairs
            .enumerate()
            .filter(|(k, _)| self.bits >> k & 1 == 1)
            .map(|(_, e)| e);
        Graph::new(self.n, edges).expect("bits describe a simple graph")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.n * self.n.saturating_sub(1) / 2;
        write!(f, "{}:", self.n)?;
        for k in 0..width {
            write!(f, "{}", self.bits >> k & 1)?;
        }
        Ok(())
    }
}

/// Graph invariants the closed forms branch on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphProfile {
    pub girth: Length,
    pub diameter: Length,
    pub max_degree: usize,
    pub connected: bool,
    pub compact_vertices: VarSet,
    pub isolated_vertices: VarSet,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]).unwrap_err(), Error::Loop(2));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge(1, 2)
        );
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 4, .. })
        ));
    }

    #[test]
    fn pentagon_profile() {
        let p = Graph::pentagon().profile();
        assert_eq!(p.girth, Length::Finite(5));
        assert_eq!(p.diameter, Length::Finite(2));
        assert_eq!(p.max_degree, 2);
        assert!(p.connected);
        assert!(p.compact_vertices.is_empty());
    }

    #[test]
    fn broom_profile() {
        let p = Graph::broom().profile();
        assert_eq!(p.girth, Length::Finite(3));
        assert_eq!(p.compact_vertices, VarSet::singleton(2));
    }

    #[test]
    fn two_disjoint_edges_profile() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = g.profile();
        assert_eq!(p.girth, Length::Infinite);
        assert_eq!(p.diameter, Length::Infinite);
        assert_eq!(p.max_degree, 1);
        assert!(!p.connected);
    }

    #[test]
    fn girth_of_cycles_and_complete_graphs() {
        for len in 3..=8 {
            assert_eq!(Graph::cycle(len).girth(), Length::Finite(len));
        }
        assert_eq!(Graph::complete(5).girth(), Length::Finite(3));
        assert_eq!(Graph::diamond().girth(), Length::Finite(4));
        assert_eq!(Graph::star(3).girth(), Length::Infinite);
    }

    #[test]
    fn stanley_reisner_examples() {
        let tri = Graph::complete(3).stanley_reisner().unwrap();
        assert_eq!(tri.generators(), &[vec![1, 1, 1]]);
        let edge = Graph::new(3, [(0, 1)]).unwrap().stanley_reisner().unwrap();
        assert_eq!(edge.generators(), &[vec![0, 1, 1], vec![1, 0, 1]]);
        let c4 = Graph::cycle(4).stanley_reisner().unwrap();
        assert_eq!(c4.generators(), &[vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
        assert_eq!(Graph::empty(3).stanley_reisner(), Err(Error::NoEdges));
    }

    #[test]
    fn edge_primes() {
        let p = edge_prime(VarSet::from_indices([0, 1]), 4).unwrap();
        assert_eq!(p, MonomialIdeal::variables(4, VarSet::from_indices([2, 3])));
        let p = edge_prime(VarSet::from_indices([1, 2]), 5).unwrap();
        assert_eq!(p, MonomialIdeal::variables(5, VarSet::from_indices([0, 3, 4])));
    }

    #[test]
    fn symbolic_power_examples() {
        let tri = Graph::complete(3);
        assert_eq!(tri.symbolic_power(2).unwrap().generators(), &[vec![2, 2, 2]]);
        let c4 = Graph::cycle(4);
        assert_eq!(c4.symbolic_power(1).unwrap(), c4.stanley_reisner().unwrap());
        assert_eq!(c4.symbolic_power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn canonical_forms_identify_relabellings() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&Graph::star(3)));
        let cf = a.canonical_form();
        assert_eq!(cf.graph().canonical_form(), cf);
    }

    #[test]
    fn complex_keeps_isolated_vertices() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let facets = g.complex().facets().to_vec();
        assert_eq!(facets, vec![VarSet::from_indices([0, 1]), VarSet::singleton(2)]);
    }
}
