//! Brute-force oracles shared by the integration and acceptance tests.
//! None of these call into the code paths they check.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use fmc_core::{Graph, Separation, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// For each `X ⊆ V`, whether some bag sequence of width at most `w` is a
/// path-decomposition of `g` ending in exactly `X`. Breadth-first search
/// over (vertices seen, current bag, edges covered); a vertex that has left
/// the current bag may never come back.
pub fn final_bags_by_search(g: &Graph, w: usize) -> Vec<bool> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.simplify().edges().to_vec();
    let all_edges: u64 = if edges.is_empty() {
        0
    } else {
        (1u64 << edges.len()) - 1
    };
    let all = (1u64 << n) - 1;
    let bags: Vec<u64> = (0..=all)
        .filter(|b| b.count_ones() as usize <= w + 1)
        .collect();
    let covers = |bag: u64| -> u64 {
        edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| bag >> u & 1 == 1 && bag >> v & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    };
    let cover_of: Vec<u64> = (0..=all).map(covers).collect();

    let mut finals = vec![false; 1usize << n];
    let mut seen_states = HashSet::new();
    let mut queue = VecDeque::new();
    for &b in &bags {
        let st = (b, b, cover_of[b as usize]);
        if seen_states.insert(st) {
            queue.push_back(st);
        }
    }
    while let Some((seen, cur, cov)) = queue.pop_front() {
        if seen == all && cov == all_edges {
            finals[cur as usize] = true;
        }
        let forgotten = seen & !cur;
        for &b in &bags {
            if b & forgotten != 0 {
                continue;
            }
            let st = (seen | b, b, cov | cover_of[b as usize]);
            if seen_states.insert(st) {
                queue.push_back(st);
            }
        }
    }
    finals
}

/// Size of a smallest vertex set meeting every `from`–`to` path, by trying
/// all subsets in order of size.
pub fn min_vertex_cut(g: &Graph, from: VertexSet, to: VertexSet) -> usize {
    let n = g.n();
    let mut subsets: Vec<u64> = (0..1u64 << n).collect();
    subsets.sort_by_key(|s| s.count_ones());
    for bits in subsets {
        let cut = VertexSet::from_bits(bits);
        let alive = g.vertices() - cut;
        // Plain BFS in g - cut from every surviving source vertex.
        let mut reached = VertexSet::EMPTY;
        let mut queue: VecDeque<usize> = (from & alive).iter().collect();
        for v in &queue {
            reached.insert(*v);
        }
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if alive.contains(y) && !reached.contains(y) && g.has_edge(x, y) {
                    reached.insert(y);
                    queue.push_back(y);
                }
            }
        }
        if (reached & to).is_empty() {
            return cut.len();
        }
    }
    unreachable!("removing every vertex separates anything")
}

/// Every separation of `g`: each vertex goes to A only, B only, or both.
pub fn all_separations(g: &Graph) -> Vec<Separation> {
    let n = g.n();
    let mut out = Vec::new();
    for mut code in 0..3usize.pow(n as u32) {
        let (mut a, mut b) = (VertexSet::EMPTY, VertexSet::EMPTY);
        for v in 0..n {
            match code % 3 {
                0 => a.insert(v),
                1 => b.insert(v),
                _ => {
                    a.insert(v);
                    b.insert(v);
                }
            }
            code /= 3;
        }
        if let Some(s) = Separation::new(g, a, b) {
            out.push(s);
        }
    }
    out
}

/// Direct check of the path-decomposition clauses, written independently
/// of the library validator.
pub fn is_decomposition_of(g: &Graph, domain: VertexSet, bags: &[VertexSet]) -> bool {
    let union = bags.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
    if union != domain {
        return false;
    }
    for u in domain {
        for v in domain {
            if u < v && g.has_edge(u, v) && !bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return false;
            }
        }
    }
    for i in 0..bags.len() {
        for j in i + 1..bags.len() {
            for k in j + 1..bags.len() {
                if !(bags[i] & bags[k]).is_subset(bags[j]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subset(rng: &mut impl Rng, of: VertexSet) -> VertexSet {
    of.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// `g[a]` relabelled to `0..|a|` in increasing order, with the label map.
pub fn induced(g: &Graph, a: VertexSet) -> (Graph, Vec<usize>) {
    let map = a.to_vec();
    let pos = |v: usize| map.iter().position(|&x| x == v).unwrap();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| a.contains(u) && a.contains(v))
        .map(|&(u, v)| (pos(u), pos(v)))
        .collect();
    (Graph::new(map.len(), edges).unwrap(), map)
}

/// Whether `g[a]` has a decomposition of width at most `w` ending in `x`,
/// decided by [`final_bags_by_search`].
pub fn good_by_search(g: &Graph, a: VertexSet, x: VertexSet, w: usize) -> bool {
    if a.is_empty() {
        return true;
    }
    let (sub, map) = induced(g, a);
    let mask: usize = map
        .iter()
        .enumerate()
        .filter(|(_, &v)| x.contains(v))
        .map(|(i, _)| 1 << i)
        .sum();
    final_bags_by_search(&sub, w)[mask]
}
