//! Small simple undirected graphs.
//!
//! Vertex sets are `u16` bitmasks, so every graph here has at most
//! [`MAX_VERTICES`] vertices. Two types are exposed: [`Adjacency`] is any
//! simple graph (possibly disconnected), and [`Graph`] is an adjacency that
//! has been checked to be connected. All pebbling operations take a `Graph`.

mod canon;
mod enumerate;
mod family;
mod io;

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{automorphisms, canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_all_graphs, enumerate_graphs};
pub use family::{make_family, Family};
pub use io::{parse_graph_text, to_dot, to_graph_text};

pub const MAX_VERTICES: usize = 16;

/// A vertex permutation; `perm[v]` is the image of `v`.
pub type Permutation = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} listed more than once")]
    MultiEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("malformed graph text: {0}")]
    Parse(String),
}

/// A simple undirected graph, not necessarily connected.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Adjacency {
    n: usize,
    adj: Vec<u16>,
}

impl Adjacency {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Adjacency { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::MultiEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from neighbor masks. The caller guarantees symmetry and no loops.
    pub(crate) fn from_masks(adj: Vec<u16>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, &m)| m & (1 << u) == 0
            && (0..adj.len()).all(|v| (m >> v & 1) == (adj[v] >> u & 1))));
        Adjacency { n: adj.len(), adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all = full_mask(self.n);
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Vertex-induced subgraph on `vertices` (listed in any order; the
    /// subgraph keeps that order).
    pub fn induced(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut seen = 0u16;
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(GraphError::Parse(format!("vertex {v} repeated in vertex set")));
            }
            seen |= 1 << v;
        }
        let masks = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u16, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Ok(InducedSubgraph {
            adjacency: Adjacency::from_masks(masks),
            parent: vertices.to_vec(),
        })
    }

    /// Applies a permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Adjacency {
        let mut adj = vec![0u16; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Adjacency { n: self.n, adj }
    }

    /// True iff some `k`-vertex subset induces a path on `k` vertices.
    pub fn has_induced_path(&self, k: usize) -> bool {
        if k == 0 || k > self.n {
            return false;
        }
        let mut found = false;
        for_each_subset(self.n, k, &mut |set| {
            if !found && self.induces_path(set) {
                found = true;
            }
            !found
        });
        found
    }

    fn induces_path(&self, set: u16) -> bool {
        let k = set.count_ones();
        let mut edges = 0;
        for v in bits(set) {
            let d = (self.adj[v] & set).count_ones();
            if d > 2 {
                return false;
            }
            edges += d;
        }
        if edges / 2 != k - 1 {
            return false;
        }
        // k-1 edges and connected means a tree; max degree 2 makes it a path.
        let start = set.trailing_zeros() as usize;
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & set;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == set
    }

    /// Breadth-first all-pairs distances. Unreachable pairs get `None` in the
    /// result; use [`Graph::distances`] for the connected case.
    pub(crate) fn bfs_distances(&self) -> Vec<Option<u32>> {
        let n = self.n;
        let mut d = vec![None; n * n];
        for s in 0..n {
            let mut seen = 1u16 << s;
            let mut frontier = seen;
            let mut level = 0;
            while frontier != 0 {
                for v in bits(frontier) {
                    d[s * n + v] = Some(level);
                }
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
                level += 1;
            }
        }
        d
    }
}

impl fmt::Debug for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Adjacency(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus, for each of its
/// vertices, the index of the corresponding parent vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub adjacency: Adjacency,
    pub parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn is_connected(&self) -> bool {
        self.adjacency.is_connected()
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::new(self.adjacency.clone())
    }
}

/// A connected simple graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Adjacency", into = "Adjacency")]
pub struct Graph(Adjacency);

impl Graph {
    pub fn new(adjacency: Adjacency) -> Result<Self, GraphError> {
        if !adjacency.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Graph(adjacency))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::new(Adjacency::from_edges(n, edges)?)
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.0
    }

    pub fn distances(&self) -> DistanceTable {
        DistanceTable::new(self)
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        self.0.induced(vertices)
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph(self.0.relabel(perm))
    }
}

impl Deref for Graph {
    type Target = Adjacency;
    fn deref(&self) -> &Adjacency {
        &self.0
    }
}

impl TryFrom<Adjacency> for Graph {
    type Error = GraphError;
    fn try_from(a: Adjacency) -> Result<Self, GraphError> {
        Graph::new(a)
    }
}

impl From<Graph> for Adjacency {
    fn from(g: Graph) -> Adjacency {
        g.0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Self {
        let d: Vec<u32> = g
            .bfs_distances()
            .into_iter()
            .map(|x| x.expect("Graph is connected"))
            .collect();
        let diameter = d.iter().copied().max().unwrap_or(0);
        DistanceTable { n: g.n(), d, diameter }
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Convenience wrapper for [`DistanceTable::new`].
pub fn distances(g: &Graph) -> DistanceTable {
    DistanceTable::new(g)
}

pub(crate) fn full_mask(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

/// Iterates the set bits of a mask, lowest first.
pub fn bits(mut mask: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Calls `f` on every `k`-subset of `0..n` (as a mask) in increasing mask
/// order until `f` returns false.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(u16) -> bool) {
    if k == 0 || k > n {
        return;
    }
    let limit = 1u32 << n;
    let mut s: u32 = (1 << k) - 1;
    while s < limit {
        if !f(s as u16) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances_of_families() {
        assert_eq!(make_family(Family::Cycle(7)).unwrap().distances().diameter(), 3);
        assert_eq!(make_family(Family::Complete(5)).unwrap().distances().diameter(), 1);
        let f8 = make_family(Family::Fan(8)).unwrap();
        let dt = f8.distances();
        assert_eq!(dt.diameter(), 2);
        assert_eq!(dt.get(0, 7), 2);
        assert_eq!(dt.get(0, 8), 1);
    }

    #[test]
    fn distance_one_iff_adjacent() {
        let g = make_family(Family::Fan(6)).unwrap();
        let dt = g.distances();
        for u in 0..g.n() {
            assert_eq!(dt.get(u, u), 0);
            for v in 0..g.n() {
                assert_eq!(dt.get(u, v) == 1, g.has_edge(u, v));
                assert_eq!(dt.get(u, v), dt.get(v, u));
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::Empty));
        assert_eq!(Graph::from_edges(3, &[(0, 1)]), Err(GraphError::Disconnected));
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(GraphError::MultiEdge(0, 1)));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(Graph::from_edges(1, &[]).is_ok());
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = make_family(Family::Complete(5)).unwrap();
        let sub = k5.induced_subgraph(&[0, 2, 4]).unwrap();
        assert!(is_isomorphic(&sub.adjacency, &make_family(Family::Complete(3)).unwrap()));
        assert_eq!(sub.parent, vec![0, 2, 4]);

        let c7 = make_family(Family::Cycle(7)).unwrap();
        let seg = c7.induced_subgraph(&[2, 3, 4, 5]).unwrap();
        assert!(is_isomorphic(&seg.adjacency, &make_family(Family::Path(4)).unwrap()));

        let f6 = make_family(Family::Fan(6)).unwrap();
        let rim = f6.induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(is_isomorphic(&rim.adjacency, &make_family(Family::Path(6)).unwrap()));

        let split = c7.induced_subgraph(&[0, 3]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.to_graph(), Err(GraphError::Disconnected));
        assert!(c7.induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn induced_paths() {
        let c7 = make_family(Family::Cycle(7)).unwrap();
        assert!(c7.has_induced_path(5));
        assert!(c7.has_induced_path(6));
        assert!(!c7.has_induced_path(7));
        let k5 = make_family(Family::Complete(5)).unwrap();
        assert!(!k5.has_induced_path(3));
        assert!(k5.has_induced_path(2));
        assert!(k5.has_induced_path(1));
    }

    #[test]
    fn subsets_are_enumerated() {
        let mut count = 0;
        for_each_subset(7, 3, &mut |s| {
            assert_eq!(s.count_ones(), 3);
            count += 1;
            true
        });
        assert_eq!(count, 35);
    }
}
