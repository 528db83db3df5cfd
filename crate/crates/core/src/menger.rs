//! Vertex-disjoint paths between vertex sets and minimum vertex cuts.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A sequence of distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPath(Vec<usize>);

impl VertexPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        VertexPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("paths are non-empty")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Non-empty, no repeated vertex, consecutive vertices adjacent in `g`.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&v| v < g.n())
            && self.vertex_set().len() == self.0.len()
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Result of [`max_disjoint_paths`]: `paths.len() == cut.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    pub paths: Vec<VertexPath>,
    pub cut: VertexSet,
}

/// Problems with a claimed family of disjoint `from`–`to` paths.
pub fn validate_path_family(
    g: &Graph,
    paths: &[VertexPath],
    from: VertexSet,
    to: VertexSet,
) -> Vec<String> {
    let mut problems = Vec::new();
    let mut used = VertexSet::EMPTY;
    for (k, p) in paths.iter().enumerate() {
        if !p.is_path_in(g) {
            problems.push(format!("path {k} {:?} is not a path of the graph", p.0));
            continue;
        }
        if !from.contains(p.first()) {
            problems.push(format!("path {k} does not start in the source set"));
        }
        if !to.contains(p.last()) {
            problems.push(format!("path {k} does not end in the target set"));
        }
        if !p.vertex_set().is_disjoint(used) {
            problems.push(format!("path {k} shares a vertex with an earlier path"));
        }
        used = used | p.vertex_set();
    }
    problems
}

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    /// Adds `from -> to` and its residual twin; the arc id of the twin is `id ^ 1`.
    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &id in &self.out[x] {
                let y = self.head[id];
                if self.cap[id] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = id;
                    if y == sink {
                        let mut node = sink;
                        while node != source {
                            let id = via[node];
                            self.cap[id] -= 1;
                            self.cap[id ^ 1] += 1;
                            node = self.head[id ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            for &id in &self.out[x] {
                let y = self.head[id];
                if self.cap[id] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Maximum family of vertex-disjoint paths from `from` to `to`, with a
/// minimum vertex cut of the same size.
///
/// Each vertex `v` becomes `v_in -> v_out` with capacity one, so a vertex of
/// `from ∩ to` yields a single-vertex path. Arcs outside the vertex arcs have
/// capacity `n + 1`, which keeps the residual cut made of vertices only.
pub fn max_disjoint_paths(g: &Graph, from: VertexSet, to: VertexSet) -> DisjointPaths {
    let n = g.n();
    let big = n as u32 + 1;
    let (source, sink) = (2 * n, 2 * n + 1);
    let v_in = |v: usize| 2 * v;
    let v_out = |v: usize| 2 * v + 1;
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        net.arc(v_in(v), v_out(v), 1);
    }
    for v in from & g.vertices() {
        net.arc(source, v_in(v), big);
    }
    for u in 0..n {
        for v in g.neighbors(u) {
            net.arc(v_out(u), v_in(v), big);
        }
    }
    for v in to & g.vertices() {
        net.arc(v_out(v), sink, big);
    }

    while net.augment(source, sink) {}

    // Each unit of flow enters one `from` vertex; walk it to the sink.
    let mut paths = Vec::new();
    for &id in &net.out[source] {
        if id & 1 == 1 || net.cap[id ^ 1] == 0 {
            continue;
        }
        let mut v = net.head[id] / 2;
        let mut walk = vec![v];
        loop {
            let next = net.out[v_out(v)]
                .iter()
                .copied()
                .find(|&a| a & 1 == 0 && net.cap[a ^ 1] > 0)
                .expect("flow leaving a vertex continues");
            let target = net.head[next];
            if target == sink {
                break;
            }
            v = target / 2;
            walk.push(v);
        }
        paths.push(VertexPath(walk));
    }

    let reach = net.reachable(source);
    let cut = (0..n)
        .filter(|&v| reach[v_in(v)] && !reach[v_out(v)])
        .collect();
    DisjointPaths { paths, cut }
}

/// Shortens each path to run from its last vertex in `boundary` to the first
/// vertex of `target` after that point.
pub fn truncate_to_boundary(
    paths: &[VertexPath],
    boundary: VertexSet,
    target: VertexSet,
) -> Result<Vec<VertexPath>> {
    paths
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let vs = p.vertices();
            let start = vs
                .iter()
                .rposition(|&v| boundary.contains(v))
                .ok_or_else(|| Error::Contract(format!("path {k} misses the boundary")))?;
            let end = vs[start..]
                .iter()
                .position(|&v| target.contains(v))
                .map(|off| start + off)
                .ok_or_else(|| {
                    Error::Contract(format!(
                        "path {k} never reaches the target after the boundary"
                    ))
                })?;
            Ok(VertexPath(vs[start..=end].to_vec()))
        })
        .collect()
}
