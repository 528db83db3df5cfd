//! Finite multigraphs on dense vertex indices, their text formats,
//! generators and the separation type.

mod generate;
mod io;
mod separation;

pub use generate::{generate, GraphKind};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use separation::{canonical_separation, is_separation, Separation};

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite graph on vertices `0..n`. Loops and parallel edges are kept in
/// the edge list; `neighbors` describes the simple underlying graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            list.push((u, v));
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// Graph with no vertices.
    pub fn null() -> Self {
        Graph {
            n: 0,
            edges: Vec::new(),
            adj: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The edge multiset in insertion order; indices into this list name edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// `N(set) \ set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
            .difference(set)
    }

    /// Simple underlying graph: loops dropped, parallel edges merged,
    /// each edge stored once as `(u, v)` with `u < v`, sorted.
    pub fn simplify(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                edges.push((u, v));
            }
        }
        Graph {
            n: self.n,
            edges,
            adj: self.adj.clone(),
        }
    }

    pub fn is_simple(&self) -> bool {
        let simple_edges: usize = self.adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        !self.has_loops() && simple_edges == self.edges.len()
    }

    /// Whether the vertices of `set` induce a connected subgraph.
    /// The empty set counts as disconnected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.lowest() {
            None => false,
            Some(start) => self.reach_within(start, set) == set,
        }
    }

    /// Vertices reachable from `start` using only vertices of `set`.
    pub fn reach_within(&self, start: usize, set: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = next.intersection(set).difference(seen);
            seen = seen | frontier;
        }
        seen
    }

    /// Connected components, each a vertex set, ordered by lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(v) = left.lowest() {
            let c = self.reach_within(v, left);
            out.push(c);
            left = left - c;
        }
        out
    }

    /// True for simple acyclic graphs (including the null graph).
    pub fn is_forest(&self) -> bool {
        self.is_simple() && self.edges.len() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_forest() && self.components().len() == 1
    }

    /// Index of the lowest-numbered edge joining `u` and `v` that is not in `used`.
    pub fn find_edge(&self, u: usize, v: usize, used: &[usize]) -> Option<usize> {
        self.edges.iter().enumerate().position(|(idx, &(a, b))| {
            ((a, b) == (u, v) || (a, b) == (v, u)) && !used.contains(&idx)
        })
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
