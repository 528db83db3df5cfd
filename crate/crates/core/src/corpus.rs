//! Small-graph enumeration up to isomorphism, for exhaustive sweeps.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex to every
//! graph on `n - 1` vertices in every possible way and keeping one
//! representative per canonical code. The canonical code is the smallest
//! adjacency bitmask over all vertex orderings that list vertices by a
//! refined degree invariant, which is cheap for the sizes used here.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`graphs_up_to_iso`].
pub const ENUMERATION_LIMIT: usize = 8;

fn pair_bit(i: usize, j: usize) -> u64 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1u64 << (j * (j - 1) / 2 + i)
}

fn graph_of(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code & pair_bit(i, j) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("code fits the vertex count")
}

/// Canonical code of the simple underlying graph: equal for two graphs iff
/// they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut slots: Vec<&(usize, Vec<usize>)> = invariant.iter().collect();
    slots.sort();

    fn place(
        g: &Graph,
        invariant: &[(usize, Vec<usize>)],
        slots: &[&(usize, Vec<usize>)],
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        code: u64,
        best: &mut u64,
    ) {
        let pos = order.len();
        if pos == slots.len() {
            *best = (*best).min(code);
            return;
        }
        for v in 0..invariant.len() {
            if used[v] || &invariant[v] != slots[pos] {
                continue;
            }
            let mut c = code;
            for (p, &u) in order.iter().enumerate() {
                if g.has_edge(u, v) {
                    c |= pair_bit(p, pos);
                }
            }
            used[v] = true;
            order.push(v);
            place(g, invariant, slots, order, used, c, best);
            order.pop();
            used[v] = false;
        }
    }

    let mut best = u64::MAX;
    place(
        g,
        &invariant,
        &slots,
        &mut Vec::with_capacity(n),
        &mut vec![false; n],
        0,
        &mut best,
    );
    if n == 0 {
        0
    } else {
        best
    }
}

/// One representative of every isomorphism class of simple graphs on `n`
/// vertices, in canonical labelling, ordered by canonical code.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::Capacity {
            what: "vertices for exhaustive enumeration",
            got: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            for attach in 0u64..1 << (k - 1) {
                let mut c = code;
                for i in 0..k - 1 {
                    if attach >> i & 1 == 1 {
                        c |= pair_bit(i, k - 1);
                    }
                }
                next.insert(canonical_code(&graph_of(k, c)));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| graph_of(n, c)).collect())
}

/// Every forest on `1..=max_n` vertices up to isomorphism, smallest first.
pub fn forests_up_to_iso(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(graphs_up_to_iso(n)?.into_iter().filter(Graph::is_forest));
    }
    Ok(out)
}

/// Every labelled simple graph on `n` vertices (`2^(n choose 2)` of them).
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        n <= ENUMERATION_LIMIT,
        "labelled enumeration is capped at {ENUMERATION_LIMIT} vertices"
    );
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |code| graph_of(n, code))
}
