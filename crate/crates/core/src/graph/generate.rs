use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Graph families available from [`generate`]. `n` is always the vertex count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// `K_{1,n-1}` with centre 0.
    Star {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Uniform labelled tree via a random Prüfer sequence.
    RandomTree {
        n: usize,
    },
    /// Erdős–Rényi `G(n, p)`.
    Gnp {
        n: usize,
        p: f64,
    },
}

/// Builds a graph of the given kind. Output depends only on `kind` and `seed`.
pub fn generate(kind: GraphKind, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GraphKind::Complete { n } => {
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphKind::Path { n } => Graph::new(n, (1..n).map(|v| (v - 1, v))),
        GraphKind::Star { n } => {
            if n == 0 {
                return Err(Error::InvalidParams("star needs n >= 1".into()));
            }
            Graph::new(n, (1..n).map(|v| (0, v)))
        }
        GraphKind::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParams("cycle needs n >= 3".into()));
            }
            Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        GraphKind::RandomTree { n } => {
            if n == 0 {
                return Err(Error::InvalidParams("random tree needs n >= 1".into()));
            }
            let prufer: Vec<usize> = (0..n.saturating_sub(2))
                .map(|_| rng.gen_range(0..n))
                .collect();
            Graph::new(n, prufer_to_edges(n, &prufer))
        }
        GraphKind::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)
        }
    }
}

fn prufer_to_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}
