//! Path-decompositions: validation, exact path-width, and the variant with a
//! prescribed last bag that decides w-goodness.
//!
//! The exact solver is a dynamic program over vertex subsets. For a set `S`
//! of already placed vertices and a required final bag `X`, the boundary
//!
//! ```text
//! ∂_X(S) = { v ∈ S : v ∈ X or v has a neighbour outside S }
//! ```
//!
//! is what must stay in the bag when the next vertex `v` is placed, so the
//! bag introduced for `v` is `∂_X(S) ∪ {v}`. Every decomposition ending in
//! `X` induces such an ordering (order vertices by first bag) with no larger
//! bags, so minimising the largest of these bags over all orderings gives
//! the exact answer.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{ValidationReport, Violation};
use crate::vertex_set::VertexSet;

/// Default cap on the number of vertices handed to the subset DP.
pub const DEFAULT_DP_LIMIT: usize = 24;

/// Hard ceiling regardless of configuration: the DP table has `2^k` bytes.
pub const MAX_DP_LIMIT: usize = 30;

/// Largest graph [`pathwidth_bruteforce`] accepts.
pub const BRUTEFORCE_LIMIT: usize = 9;

/// An ordered sequence of bags.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    /// Largest bag size minus one; `-1` when every bag is empty or there are none.
    pub fn width(&self) -> isize {
        self.bags
            .iter()
            .map(|b| b.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn last_bag(&self) -> Option<VertexSet> {
        self.bags.last().copied()
    }

    pub fn vertices(&self) -> VertexSet {
        self.bags.iter().fold(VertexSet::EMPTY, |acc, &b| acc | b)
    }

    /// Reads the body that follows a `pathdecomp n_bags width` header.
    /// `lines` yields `(line_number, text)`; exactly `n_bags` lines are consumed.
    pub fn parse_lines<'a>(
        header: (usize, &str),
        lines: &mut impl Iterator<Item = (usize, &'a str)>,
    ) -> Result<Self> {
        let (line_no, text) = header;
        let fields: Vec<&str> = text.split_whitespace().collect();
        let (count, declared_width) = match fields.as_slice() {
            ["pathdecomp", count, width] => (
                count
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_no, "bag count is not an integer"))?,
                width
                    .parse::<isize>()
                    .map_err(|_| Error::parse(line_no, "width is not an integer"))?,
            ),
            _ => {
                return Err(Error::parse(
                    line_no,
                    "expected header `pathdecomp <n_bags> <width>`",
                ))
            }
        };
        let mut bags = Vec::with_capacity(count);
        for k in 0..count {
            let (ln, body) = lines.next().ok_or_else(|| {
                Error::parse(line_no + k + 1, format!("expected {count} bag lines"))
            })?;
            let mut bag = VertexSet::EMPTY;
            for tok in body.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(ln, format!("`{tok}` is not a vertex")))?;
                if v >= crate::MAX_VERTICES {
                    return Err(Error::parse(ln, format!("vertex {v} out of range")));
                }
                bag.insert(v);
            }
            bags.push(bag);
        }
        let d = PathDecomposition { bags };
        if d.width() != declared_width {
            return Err(Error::parse(
                line_no,
                format!(
                    "declared width {declared_width}, bags have width {}",
                    d.width()
                ),
            ));
        }
        Ok(d)
    }

    /// Parses a standalone decomposition in the `pathdecomp` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let header = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing pathdecomp header"))?;
        let d = Self::parse_lines(header, &mut lines)?;
        if let Some((ln, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(ln, "trailing content after the last bag"));
        }
        Ok(d)
    }
}

impl fmt::Display for PathDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pathdecomp {} {}", self.bags.len(), self.width())?;
        for bag in &self.bags {
            writeln!(f, "{bag}")?;
        }
        Ok(())
    }
}

/// Checks every clause of the path-decomposition definition for `g`.
pub fn validate_decomposition(g: &Graph, d: &PathDecomposition) -> ValidationReport {
    validate_decomposition_within(g, g.vertices(), d)
}

/// As [`validate_decomposition`], for the induced subgraph `g[domain]`.
pub fn validate_decomposition_within(
    g: &Graph,
    domain: VertexSet,
    d: &PathDecomposition,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (i, bag) in d.bags.iter().enumerate() {
        for v in *bag - domain {
            report.push(Violation::BagOutsideGraph { bag: i, vertex: v });
        }
    }
    let covered = d.vertices();
    for v in domain - covered {
        report.push(Violation::VertexUncovered { vertex: v });
    }
    for u in domain {
        for v in g.neighbors(u) & domain {
            if u < v && !d.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                report.push(Violation::EdgeUncovered { u, v });
            }
        }
    }
    for v in covered {
        let hits: Vec<usize> = (0..d.bags.len())
            .filter(|&i| d.bags[i].contains(v))
            .collect();
        if let Some(w) = hits.windows(2).find(|w| w[1] != w[0] + 1) {
            report.push(Violation::IntervalBroken {
                vertex: v,
                before: w[0],
                gap: w[0] + 1,
                after: w[1],
            });
        }
    }
    report
}

/// Minimum over vertex orderings of the largest bag needed to finish, per subset.
struct BoundaryTable {
    verts: Vec<usize>,
    adj: Vec<u64>,
    x: u64,
    /// `best[S]` = least achievable largest bag size when `S` is already placed.
    best: Vec<u8>,
}

impl BoundaryTable {
    fn build(g: &Graph, domain: VertexSet, x: VertexSet, limit: usize) -> Result<Self> {
        let limit = limit.min(MAX_DP_LIMIT);
        let verts = domain.to_vec();
        let k = verts.len();
        if k > limit {
            return Err(Error::Capacity {
                what: "vertices in the path-width DP",
                got: k,
                limit,
            });
        }
        let local = |set: VertexSet| -> u64 {
            verts
                .iter()
                .enumerate()
                .filter(|(_, &v)| set.contains(v))
                .fold(0, |acc, (i, _)| acc | 1 << i)
        };
        let adj: Vec<u64> = verts.iter().map(|&v| local(g.neighbors(v))).collect();
        let x = local(x);

        let full: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        let mut best = vec![0u8; 1usize << k];
        best[full as usize] = x.count_ones() as u8;
        let mut table = BoundaryTable {
            verts,
            adj,
            x,
            best,
        };
        for s in (0..full).rev() {
            let bag = table.boundary(s).count_ones() as u8 + 1;
            let finish = (0..k)
                .filter(|&i| s >> i & 1 == 0)
                .map(|i| table.best[(s | 1 << i) as usize])
                .min()
                .expect("a non-full subset has an unplaced vertex");
            table.best[s as usize] = bag.max(finish);
        }
        Ok(table)
    }

    fn boundary(&self, s: u64) -> u64 {
        let mut out = s & self.x;
        let mut rest = s & !self.x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[i] & !s != 0 {
                out |= 1 << i;
            }
        }
        out
    }

    fn global(&self, mask: u64) -> VertexSet {
        self.verts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Largest bag in the best decomposition.
    fn optimum(&self) -> usize {
        self.best[0] as usize
    }

    /// Bags `∂_X(S_{i-1}) ∪ {v_i}` for the forward-greedy ordering that keeps
    /// every bag within `max_bag`, taking the lowest feasible vertex each step.
    fn witness(&self, max_bag: usize) -> Vec<VertexSet> {
        let k = self.verts.len();
        let full: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        let mut s = 0u64;
        let mut bags = Vec::with_capacity(k + 1);
        while s != full {
            let bd = self.boundary(s);
            debug_assert!((bd.count_ones() as usize) < max_bag);
            let i = (0..k)
                .find(|&i| s >> i & 1 == 0 && self.best[(s | 1 << i) as usize] as usize <= max_bag)
                .expect("table promises a feasible continuation");
            bags.push(self.global(bd | 1 << i));
            s |= 1 << i;
        }
        bags
    }
}

/// A path-decomposition of `g` with width at most `w` whose last bag is
/// exactly `x`, or `None` if there is none.
pub fn constrained_pw_decide(
    g: &Graph,
    x: VertexSet,
    w: usize,
) -> Result<Option<PathDecomposition>> {
    constrained_pw_decide_within(g, g.vertices(), x, w, DEFAULT_DP_LIMIT)
}

/// [`constrained_pw_decide`] for the induced subgraph `g[domain]`, with an
/// explicit DP size limit.
pub fn constrained_pw_decide_within(
    g: &Graph,
    domain: VertexSet,
    x: VertexSet,
    w: usize,
    limit: usize,
) -> Result<Option<PathDecomposition>> {
    if !x.is_subset(domain) {
        return Err(Error::Precondition(format!(
            "prescribed last bag {{{x}}} is not inside the vertex set"
        )));
    }
    if x.len() > w + 1 {
        return Err(Error::Precondition(format!(
            "prescribed last bag has {} vertices, more than w+1 = {}",
            x.len(),
            w + 1
        )));
    }
    let table = BoundaryTable::build(g, domain, x, limit)?;
    if table.optimum() > w + 1 {
        return Ok(None);
    }
    let mut bags = table.witness(w + 1);
    bags.push(x);
    // A bag contained in its successor adds nothing.
    let mut kept: Vec<VertexSet> = Vec::with_capacity(bags.len());
    for (i, &bag) in bags.iter().enumerate() {
        if i + 1 == bags.len() || !bag.is_subset(bags[i + 1]) {
            kept.push(bag);
        }
    }
    Ok(Some(PathDecomposition { bags: kept }))
}

/// Exact path-width of `g` and a decomposition achieving it.
pub fn pathwidth_exact(g: &Graph) -> Result<(isize, PathDecomposition)> {
    pathwidth_exact_with_limit(g, DEFAULT_DP_LIMIT)
}

pub fn pathwidth_exact_with_limit(g: &Graph, limit: usize) -> Result<(isize, PathDecomposition)> {
    let table = BoundaryTable::build(g, g.vertices(), VertexSet::EMPTY, limit)?;
    let max_bag = table.optimum();
    let mut bags = table.witness(max_bag);
    if bags.is_empty() {
        bags.push(VertexSet::EMPTY);
    }
    Ok((max_bag as isize - 1, PathDecomposition { bags }))
}

/// Path-width by trying every vertex ordering. Slow; a reference for tests
/// and the `sweep --oracle` cross-check.
pub fn pathwidth_bruteforce(g: &Graph) -> Result<isize> {
    let n = g.n();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::Capacity {
            what: "vertices for brute-force path-width",
            got: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(-1);
    }
    fn search(g: &Graph, placed: VertexSet, worst: usize, best: &mut usize) {
        if placed == g.vertices() {
            *best = (*best).min(worst);
            return;
        }
        let boundary = placed
            .iter()
            .filter(|&u| !g.neighbors(u).is_subset(placed))
            .count();
        let worst = worst.max(boundary + 1);
        for v in g.vertices() - placed {
            search(g, placed.with(v), worst, best);
        }
    }
    let mut best = usize::MAX;
    search(g, VertexSet::EMPTY, 0, &mut best);
    Ok(best as isize - 1)
}
