//! w-good separations, the extension order, the climb to a maximal w-good
//! separation, and re-use of a witness along disjoint paths.

use std::cmp::Reverse;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_separation, is_separation, Graph, Separation};
use crate::menger::VertexPath;
use crate::pathwidth::{
    constrained_pw_decide_within, validate_decomposition_within, PathDecomposition,
    DEFAULT_DP_LIMIT,
};
use crate::vertex_set::VertexSet;

/// Default cap on `|B \ A|` when enumerating extension candidates.
pub const DEFAULT_ENUM_LIMIT: usize = 22;

/// A separation together with a path-decomposition of `G[a]` of width at most
/// `w` that ends in the bag `a ∩ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodSeparation {
    pub sep: Separation,
    pub w: usize,
    pub witness: PathDecomposition,
}

impl GoodSeparation {
    /// `(∅, V)` with the single empty bag.
    pub fn trivial(g: &Graph, w: usize) -> Self {
        GoodSeparation {
            sep: Separation {
                a: VertexSet::EMPTY,
                b: g.vertices(),
            },
            w,
            witness: PathDecomposition::new(vec![VertexSet::EMPTY]),
        }
    }

    /// Every invariant of a w-good separation, as a list of problems.
    pub fn check(&self, g: &Graph) -> Vec<String> {
        let mut problems = Vec::new();
        if !is_separation(g, self.sep.a, self.sep.b) {
            problems.push("not a separation".to_string());
        }
        let report = validate_decomposition_within(g, self.sep.a, &self.witness);
        problems.extend(report.violations.iter().map(|v| v.to_string()));
        if self.witness.width() > self.w as isize {
            problems.push(format!(
                "witness width {} exceeds w = {}",
                self.witness.width(),
                self.w
            ));
        }
        if self.witness.last_bag() != Some(self.sep.boundary()) {
            problems.push(format!(
                "witness last bag {:?} differs from the boundary {:?}",
                self.witness.last_bag(),
                self.sep.boundary()
            ));
        }
        if self.sep.order() > self.w + 1 {
            problems.push(format!("order {} exceeds w+1", self.sep.order()));
        }
        problems
    }
}

/// Size caps for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertices handed to the path-width DP.
    pub dp: usize,
    /// `|B \ A|` when enumerating extension candidates.
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dp: DEFAULT_DP_LIMIT,
            enumeration: DEFAULT_ENUM_LIMIT,
        }
    }
}

/// Decides whether `sep` is w-good, returning the witness if so.
pub fn is_w_good(g: &Graph, sep: Separation, w: usize) -> Result<Option<GoodSeparation>> {
    is_w_good_with(g, sep, w, Limits::default())
}

pub fn is_w_good_with(
    g: &Graph,
    sep: Separation,
    w: usize,
    limits: Limits,
) -> Result<Option<GoodSeparation>> {
    if sep.order() > w + 1 {
        return Err(Error::Precondition(format!(
            "separation of order {} cannot be {w}-good",
            sep.order()
        )));
    }
    if sep.a.is_empty() {
        return Ok(Some(GoodSeparation {
            sep,
            w,
            witness: PathDecomposition::new(vec![VertexSet::EMPTY]),
        }));
    }
    let witness = constrained_pw_decide_within(g, sep.a, sep.boundary(), w, limits.dp)?;
    Ok(witness.map(|witness| GoodSeparation { sep, w, witness }))
}

/// Whether `s2` extends `s1`: `s1 ≤ s2` and `s2` has no larger order.
pub fn extends(s1: &Separation, s2: &Separation) -> bool {
    s1.le(s2) && s2.order() <= s1.order()
}

/// Climbs from `start` through proper w-good extensions until none is left.
///
/// Only separations with a minimal right side are tried: if some w-good
/// `(A', B'')` extends the current one, so does the canonical `(A', b')`,
/// since `b' ⊆ B''` and the witness can end with the smaller bag.
pub fn find_maximal_w_good(g: &Graph, start: GoodSeparation) -> Result<GoodSeparation> {
    find_maximal_w_good_with(g, start, Limits::default())
}

pub fn find_maximal_w_good_with(
    g: &Graph,
    start: GoodSeparation,
    limits: Limits,
) -> Result<GoodSeparation> {
    let w = start.w;
    let mut memo: HashMap<(VertexSet, VertexSet), Option<PathDecomposition>> = HashMap::new();
    let mut current = start;
    loop {
        let Separation { a, b } = current.sep;
        let free = b - a;
        if free.len() > limits.enumeration {
            return Err(Error::Capacity {
                what: "vertices in B \\ A to enumerate",
                got: free.len(),
                limit: limits.enumeration,
            });
        }
        let free_list = free.to_vec();
        let mut candidates: Vec<Separation> = (0u64..1 << free_list.len())
            .map(|pick| {
                let extra: VertexSet = free_list
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| pick >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                canonical_separation(g, a | extra)
            })
            .filter(|c| c.order() <= current.sep.order() && *c != current.sep)
            .collect();
        // Largest left side first, then smallest order, then lexicographically
        // smallest left side.
        candidates.sort_by(|x, y| {
            (Reverse(x.a.len()), x.order())
                .cmp(&(Reverse(y.a.len()), y.order()))
                .then_with(|| x.a.lex_cmp(y.a))
        });

        let mut next = None;
        for cand in candidates {
            let key = (cand.a, cand.boundary());
            let witness = match memo.get(&key) {
                Some(w) => w.clone(),
                None => {
                    let found = is_w_good_with(g, cand, w, limits)?.map(|gs| gs.witness);
                    memo.insert(key, found.clone());
                    found
                }
            };
            if let Some(witness) = witness {
                next = Some(GoodSeparation {
                    sep: cand,
                    w,
                    witness,
                });
                break;
            }
        }
        match next {
            Some(n) => current = n,
            None => return Ok(current),
        }
    }
}

/// Turns a witness for `outer` into one for the smaller separation `pq`,
/// given `|pq.a ∩ pq.b|` disjoint paths from `pq.a` to `outer.b`.
///
/// Each path has only its first vertex in `pq.a` and only its last vertex in
/// `outer.a ∩ outer.b`. Contracting every path onto its first vertex maps the
/// witness of `G[outer.a]` onto a decomposition of `G[pq.a]` whose last bag is
/// `pq.a ∩ pq.b`.
pub fn good_from_disjoint_paths(
    g: &Graph,
    outer: &GoodSeparation,
    pq: Separation,
    paths: &[VertexPath],
) -> Result<GoodSeparation> {
    let contract = |msg: String| Err(Error::Contract(msg));
    if !pq.le(&outer.sep) {
        return contract("pq is not below the outer separation".into());
    }
    if !is_separation(g, pq.a, pq.b) {
        return contract("pq is not a separation".into());
    }
    if paths.len() != pq.order() {
        return contract(format!(
            "{} paths given for a separation of order {}",
            paths.len(),
            pq.order()
        ));
    }
    let outer_boundary = outer.sep.boundary();
    let mut used = VertexSet::EMPTY;
    let mut starts = VertexSet::EMPTY;
    let mut relabel = vec![usize::MAX; g.n()];
    for (k, path) in paths.iter().enumerate() {
        let vs = path.vertices();
        if !path.is_path_in(g) {
            return contract(format!("path {k} is not a path of the graph"));
        }
        let set = path.vertex_set();
        if !set.is_disjoint(used) {
            return contract(format!("path {k} meets an earlier path"));
        }
        used = used | set;
        let (first, last) = (vs[0], *vs.last().unwrap());
        if (set & pq.a) != VertexSet::singleton(first) {
            return contract(format!(
                "path {k} must meet pq.a exactly in its first vertex"
            ));
        }
        if (set & outer_boundary) != VertexSet::singleton(last) {
            return contract(format!(
                "path {k} must meet the outer boundary exactly in its last vertex"
            ));
        }
        if !set.is_subset(outer.sep.a) {
            return contract(format!("path {k} leaves the outer left side"));
        }
        starts.insert(first);
        for &v in vs {
            relabel[v] = first;
        }
    }
    if starts != pq.boundary() {
        return contract("path starts differ from pq.a ∩ pq.b".into());
    }

    let keep = pq.a | used;
    let mut bags: Vec<VertexSet> = Vec::new();
    for bag in &outer.witness.bags {
        let mapped: VertexSet = (*bag & keep)
            .iter()
            .map(|v| if used.contains(v) { relabel[v] } else { v })
            .collect();
        if bags.last() != Some(&mapped) {
            bags.push(mapped);
        }
    }
    if bags.last() != Some(&pq.boundary()) {
        bags.push(pq.boundary());
    }
    let result = GoodSeparation {
        sep: pq,
        w: outer.w,
        witness: PathDecomposition::new(bags),
    };
    let problems = result.check(g);
    if !problems.is_empty() {
        return contract(format!(
            "contracted witness is invalid: {}",
            problems.join("; ")
        ));
    }
    Ok(result)
}
