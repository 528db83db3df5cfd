//! The leaf-by-leaf construction of a spanning separation, and the top-level
//! decision between a narrow path-decomposition and a forest minor.
//!
//! Starting from a maximal w-good separation of order zero, each step adds
//! one leaf `j` of the tree (attached to `i`):
//!
//! 1. pick `v ∈ B \ A` (a neighbour of `i`'s boundary vertex when `i` exists);
//! 2. if the tree now has `w + 2` vertices, `(A ∪ {v}, B)` already spans it;
//! 3. otherwise `(A ∪ {v}, B)` is w-good; climb to a maximal w-good
//!    `(A', B')`, route `|T|` disjoint paths from `A ∪ {v}` to `B'` and grow
//!    every branch set along its path.
//!
//! Steps that the argument proves cannot fail are still checked; a failure
//! surfaces as [`Error::InternalInvariant`] with an [`InvariantReport`].

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separation};
use crate::menger::{max_disjoint_paths, truncate_to_boundary, DisjointPaths, VertexPath};
use crate::minors::{
    complete_forest_to_tree, restrict_model, splice_model, validate_model_within, MinorModel,
    Splice, TreeModel,
};
use crate::pathwidth::{pathwidth_exact_with_limit, PathDecomposition};
use crate::separations::{
    find_maximal_w_good_with, good_from_disjoint_paths, GoodSeparation, Limits,
};
use crate::vertex_set::VertexSet;

/// How the construction picks among equally valid leaves and neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChoiceMode {
    /// Lowest index everywhere; certificates are reproducible byte for byte.
    #[default]
    Lowest,
    /// Uniform random choice from a seeded generator.
    Seeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EngineConfig {
    pub limits: Limits,
    pub choice: ChoiceMode,
}

/// Counters collected during one construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EngineStats {
    pub steps: usize,
    pub maximal_searches: usize,
    pub flow_calls: usize,
}

/// Which proof step a broken run tripped over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    /// No `v ∈ B \ A` was available.
    MissingNeighbor,
    /// The maximal extension of `(A ∪ {v}, B)` did not have order `|T|`.
    WrongOrder,
    /// Fewer than `|T|` disjoint paths from `A ∪ {v}` to `B'`.
    ShortPathCount,
}

/// Diagnostic payload for [`Error::InternalInvariant`].
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub kind: InvariantKind,
    /// Number of tree vertices placed when the check failed.
    pub tree_size: usize,
    pub separation: Separation,
    pub detail: String,
    /// For [`InvariantKind::ShortPathCount`]: a w-good separation that
    /// extends `(A, B)`, exhibiting that `(A, B)` was not maximal.
    pub counterexample: Option<GoodSeparation>,
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} at |T| = {} on ({{{}}}, {{{}}}): {}",
            self.kind, self.tree_size, self.separation.a, self.separation.b, self.detail
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "; w-good extension ({{{}}}, {{{}}})", c.sep.a, c.sep.b)?;
        }
        Ok(())
    }
}

fn invariant(
    kind: InvariantKind,
    tree_size: usize,
    separation: Separation,
    detail: String,
    counterexample: Option<GoodSeparation>,
) -> Error {
    Error::InternalInvariant(Box::new(InvariantReport {
        kind,
        tree_size,
        separation,
        detail,
        counterexample,
    }))
}

/// A separation of order `|T|` whose left side hosts a model of `T` with
/// every branch set touching the boundary; `witness` is present (and
/// maximal w-good) when `|T| ≤ w + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningCertificate {
    pub sep: Separation,
    pub w: usize,
    /// The model; its pattern is the tree.
    pub model: MinorModel,
    pub witness: Option<GoodSeparation>,
}

impl SpanningCertificate {
    pub fn tree(&self) -> &Graph {
        &self.model.pattern
    }

    /// Structural checks (maximality is not checked here).
    pub fn check(&self, g: &Graph) -> Vec<String> {
        let mut problems = Vec::new();
        let t = self.tree().n();
        if self.sep.order() != t {
            problems.push(format!("order {} differs from |T| = {t}", self.sep.order()));
        }
        let report = validate_model_within(g, self.sep.a, &self.model);
        problems.extend(report.violations.iter().map(|v| v.to_string()));
        let boundary = self.sep.boundary();
        for (h, set) in self.model.branch_sets.iter().enumerate() {
            if set.intersection(boundary).len() != 1 {
                problems.push(format!(
                    "branch set of {h} meets the boundary in {} vertices",
                    set.intersection(boundary).len()
                ));
            }
        }
        match (&self.witness, t <= self.w + 1) {
            (Some(gs), true) => {
                if gs.sep != self.sep {
                    problems.push("witness separation differs".into());
                }
                problems.extend(gs.check(g));
            }
            (None, true) => problems.push("missing w-good witness".into()),
            (Some(_), false) => problems.push("unexpected witness for |T| = w + 2".into()),
            (None, false) => {}
        }
        problems
    }
}

/// Removal order of a tree: repeatedly delete a vertex of degree at most one,
/// recording its neighbour at that moment. Leaves of the original tree go
/// first, lowest index first, so a star loses its leaves before its centre.
pub fn leaf_order(tree: &Graph) -> Result<Vec<(usize, Option<usize>)>> {
    leaf_order_with(tree, &mut None)
}

fn leaf_order_with(
    tree: &Graph,
    rng: &mut Option<ChaCha8Rng>,
) -> Result<Vec<(usize, Option<usize>)>> {
    if !tree.is_tree() {
        return Err(Error::Input("leaf order needs a non-null tree".into()));
    }
    let mut left = tree.vertices();
    let mut out = Vec::with_capacity(tree.n());
    while !left.is_empty() {
        let leaves = left
            .iter()
            .filter(|&v| (tree.neighbors(v) & left).len() <= 1);
        let j = match rng {
            Some(r) => leaves.choose(r),
            None => leaves.min_by_key(|&v| (tree.degree(v) > 1, v)),
        }
        .expect("every non-empty tree has a vertex of degree at most one");
        left.remove(j);
        out.push((j, (tree.neighbors(j) & left).lowest()));
    }
    Ok(out)
}

/// Builds a `(w, T)`-spanning separation of `g`.
///
/// Requires `pw(g) > w`, `T` a tree or the null graph, and `|T| ≤ w + 2`.
pub fn spanning_separation(g: &Graph, tree: &Graph, w: usize) -> Result<SpanningCertificate> {
    spanning_separation_traced(g, tree, w, EngineConfig::default(), |_| {}).map(|(c, _)| c)
}

/// [`spanning_separation`] with explicit configuration; `observe` sees the
/// certificate for every intermediate subtree, starting with the null tree.
pub fn spanning_separation_traced(
    g: &Graph,
    tree: &Graph,
    w: usize,
    config: EngineConfig,
    mut observe: impl FnMut(&SpanningCertificate),
) -> Result<(SpanningCertificate, EngineStats)> {
    if !(tree.is_null() || tree.is_tree()) {
        return Err(Error::Precondition(
            "pattern must be a tree or the null graph".into(),
        ));
    }
    if tree.n() > w + 2 {
        return Err(Error::Precondition(format!(
            "tree has {} vertices, more than w + 2 = {}",
            tree.n(),
            w + 2
        )));
    }
    let (pw, _) = pathwidth_exact_with_limit(g, config.limits.dp)?;
    if pw <= w as isize {
        return Err(Error::Precondition(format!(
            "graph has path-width {pw}, not more than w = {w}"
        )));
    }

    let mut rng = match config.choice {
        ChoiceMode::Lowest => None,
        ChoiceMode::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut build = if tree.is_null() {
        Vec::new()
    } else {
        leaf_order_with(tree, &mut rng)?
    };
    build.reverse();

    let mut stats = EngineStats::default();
    let base = find_maximal_w_good_with(g, GoodSeparation::trivial(g, w), config.limits)?;
    stats.maximal_searches += 1;
    if base.sep.order() != 0 {
        return Err(invariant(
            InvariantKind::WrongOrder,
            0,
            base.sep,
            "maximal extension of (∅, V) has non-zero order".into(),
            None,
        ));
    }

    let mut sep = base.sep;
    let mut good = Some(base);
    let mut model = TreeModel::empty(tree);
    observe(&snapshot(tree, &model, sep, w, &good)?);

    for (k, &(j, i)) in build.iter().enumerate() {
        let t = k + 1;
        stats.steps += 1;
        let Separation { a, b } = sep;
        let boundary = sep.boundary();

        let (v, uv) = match i {
            None => {
                let v = pick(b - a, &mut rng).ok_or_else(|| {
                    invariant(
                        InvariantKind::MissingNeighbor,
                        t,
                        sep,
                        "B is empty although the path-width exceeds w".into(),
                        None,
                    )
                })?;
                (v, None)
            }
            Some(i) => {
                let bi = model.branch_sets[i].expect("neighbour placed earlier");
                let u = (bi & boundary)
                    .lowest()
                    .expect("branch sets meet the boundary");
                let v = pick(g.neighbors(u) & (b - a), &mut rng).ok_or_else(|| {
                    invariant(
                        InvariantKind::MissingNeighbor,
                        t,
                        sep,
                        format!("boundary vertex {u} has no neighbour in B \\ A"),
                        None,
                    )
                })?;
                let used: Vec<usize> = model.edge_images.iter().flatten().copied().collect();
                let uv = g.find_edge(u, v, &used).expect("u and v are adjacent");
                (v, Some(uv))
            }
        };
        let grown = Separation { a: a.with(v), b };

        if t == w + 2 {
            let paths: BTreeMap<usize, VertexPath> = boundary
                .with(v)
                .iter()
                .map(|x| (x, VertexPath::new(vec![x])))
                .collect();
            model = splice_model(
                g,
                tree,
                &Splice {
                    model: &model,
                    a,
                    boundary,
                    paths: &paths,
                    target: grown.boundary(),
                    j,
                    i,
                    v,
                    uv,
                },
            )?;
            sep = grown;
            good = None;
            observe(&snapshot(tree, &model, sep, w, &good)?);
            continue;
        }

        let previous = good.as_ref().expect("|T| - 1 ≤ w + 1 keeps a witness");
        let mut bags = previous.witness.bags.clone();
        bags.push(boundary.with(v));
        let start = GoodSeparation {
            sep: grown,
            w,
            witness: PathDecomposition::new(bags),
        };
        debug_assert!(start.check(g).is_empty(), "{:?}", start.check(g));

        let maximal = find_maximal_w_good_with(g, start, config.limits)?;
        stats.maximal_searches += 1;
        if maximal.sep.order() != t {
            return Err(invariant(
                InvariantKind::WrongOrder,
                t,
                sep,
                format!(
                    "maximal extension ({{{}}}, {{{}}}) has order {}",
                    maximal.sep.a,
                    maximal.sep.b,
                    maximal.sep.order()
                ),
                None,
            ));
        }

        let source = a.with(v);
        let flow = max_disjoint_paths(g, source, maximal.sep.b);
        stats.flow_calls += 1;
        if flow.paths.len() < t {
            let counterexample = reductio(g, &maximal, source, &flow).ok();
            return Err(invariant(
                InvariantKind::ShortPathCount,
                t,
                sep,
                format!(
                    "only {} disjoint paths from A ∪ {{v}} to B', cut {{{}}}",
                    flow.paths.len(),
                    flow.cut
                ),
                counterexample,
            ));
        }
        let truncated =
            truncate_to_boundary(&flow.paths, boundary.with(v), maximal.sep.boundary())?;
        let paths: BTreeMap<usize, VertexPath> =
            truncated.into_iter().map(|p| (p.first(), p)).collect();
        model = splice_model(
            g,
            tree,
            &Splice {
                model: &model,
                a,
                boundary,
                paths: &paths,
                target: maximal.sep.boundary(),
                j,
                i,
                v,
                uv,
            },
        )?;
        sep = maximal.sep;
        good = Some(maximal);
        observe(&snapshot(tree, &model, sep, w, &good)?);
    }

    let cert = SpanningCertificate {
        sep,
        w,
        model: model.into_minor_model(tree)?,
        witness: good.filter(|_| tree.n() <= w + 1),
    };
    Ok((cert, stats))
}

fn pick(candidates: VertexSet, rng: &mut Option<ChaCha8Rng>) -> Option<usize> {
    match rng {
        Some(r) => candidates.iter().choose(r),
        None => candidates.lowest(),
    }
}

fn snapshot(
    tree: &Graph,
    model: &TreeModel,
    sep: Separation,
    w: usize,
    good: &Option<GoodSeparation>,
) -> Result<SpanningCertificate> {
    let model = model.to_minor_model(tree)?;
    let witness = good.clone().filter(|_| model.pattern.n() <= w + 1);
    Ok(SpanningCertificate {
        sep,
        w,
        model,
        witness,
    })
}

/// Given fewer disjoint paths from `source` to `outer.b` than the order of
/// the previous separation, builds the w-good separation of minimum order
/// between them. It extends the previous separation, so its existence
/// contradicts that separation's maximality.
pub fn reductio(
    g: &Graph,
    outer: &GoodSeparation,
    source: VertexSet,
    flow: &DisjointPaths,
) -> Result<GoodSeparation> {
    let cut = flow.cut;
    let mut reach = VertexSet::EMPTY;
    for s in source - cut {
        reach = reach | g.reach_within(s, g.vertices() - cut);
    }
    let p = source | cut | reach;
    let q = (g.vertices() - p) | cut;
    let pq = Separation::new(g, p, q)
        .ok_or_else(|| Error::Contract("cut does not induce a separation".into()))?;
    let paths = max_disjoint_paths(g, p, outer.sep.b).paths;
    let paths = truncate_to_boundary(&paths, pq.boundary(), outer.sep.boundary())?;
    good_from_disjoint_paths(g, outer, pq, &paths)
}

/// Either a narrow decomposition of `G` or a model of `F` in `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Decomposition(PathDecomposition),
    Model(MinorModel),
}

/// The output of [`decide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub forest_size: usize,
    /// `|F| - 2`.
    pub w: isize,
    pub evidence: Evidence,
    pub stats: EngineStats,
}

/// Returns a path-decomposition of `g` of width at most `|F| - 2`, or a
/// model of the forest `f` in `g`. The decomposition is preferred when both
/// exist.
pub fn decide(g: &Graph, f: &Graph) -> Result<Certificate> {
    decide_with(g, f, EngineConfig::default())
}

pub fn decide_with(g: &Graph, f: &Graph, config: EngineConfig) -> Result<Certificate> {
    if f.is_null() {
        return Err(Error::Input(
            "the forest must have at least one vertex".into(),
        ));
    }
    if !f.is_forest() {
        return Err(Error::Input("pattern is not a forest".into()));
    }
    let w = f.n() as isize - 2;
    let done = |evidence, stats| Certificate {
        forest_size: f.n(),
        w,
        evidence,
        stats,
    };

    if f.n() == 1 {
        let evidence = if g.is_null() {
            Evidence::Decomposition(PathDecomposition::new(vec![VertexSet::EMPTY]))
        } else {
            Evidence::Model(MinorModel {
                pattern: f.clone(),
                branch_sets: vec![VertexSet::singleton(0)],
                edge_images: Vec::new(),
            })
        };
        return Ok(done(evidence, EngineStats::default()));
    }

    let (pw, decomposition) = pathwidth_exact_with_limit(g, config.limits.dp)?;
    if pw <= w {
        return Ok(done(
            Evidence::Decomposition(decomposition),
            EngineStats::default(),
        ));
    }
    let (tree, added) = complete_forest_to_tree(f)?;
    let (cert, stats) = spanning_separation_traced(g, &tree, w as usize, config, |_| {})?;
    let model = restrict_model(&cert.model, f, &added)?;
    Ok(done(Evidence::Model(model), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::minors::validate_model;

    #[test]
    fn leaf_orders() {
        assert_eq!(
            leaf_order(&Graph::new(1, []).unwrap()).unwrap(),
            vec![(0, None)]
        );
        assert_eq!(
            leaf_order(&Graph::new(2, [(0, 1)]).unwrap()).unwrap(),
            vec![(0, Some(1)), (1, None)]
        );
        let star = generate(GraphKind::Star { n: 4 }, 0).unwrap();
        assert_eq!(
            leaf_order(&star).unwrap(),
            vec![(1, Some(0)), (2, Some(0)), (3, Some(0)), (0, None)]
        );
        assert!(leaf_order(&generate(GraphKind::Cycle { n: 3 }, 0).unwrap()).is_err());
        assert!(leaf_order(&Graph::null()).is_err());
    }

    fn check_spanning(g: &Graph, tree: &Graph, w: usize) -> SpanningCertificate {
        let mut seen = 0;
        let (cert, _) = spanning_separation_traced(g, tree, w, EngineConfig::default(), |c| {
            assert!(c.check(g).is_empty(), "{:?}", c.check(g));
            seen += 1;
        })
        .unwrap();
        assert_eq!(seen, tree.n() + 1);
        assert!(cert.check(g).is_empty());
        cert
    }

    #[test]
    fn k3_spans_an_edge() {
        let k3 = generate(GraphKind::Complete { n: 3 }, 0).unwrap();
        let cert = check_spanning(&k3, &Graph::new(2, [(0, 1)]).unwrap(), 0);
        assert_eq!(cert.sep.order(), 2);
        assert_eq!(cert.model.branch_sets.len(), 2);
    }

    #[test]
    fn p4_spans_a_vertex() {
        let p4 = generate(GraphKind::Path { n: 4 }, 0).unwrap();
        let cert = check_spanning(&p4, &Graph::new(1, []).unwrap(), 0);
        assert_eq!(cert.sep.order(), 1);
        assert_eq!(cert.model.branch_sets.len(), 1);
    }

    #[test]
    fn p4_spans_an_edge() {
        let p4 = generate(GraphKind::Path { n: 4 }, 0).unwrap();
        let cert = check_spanning(&p4, &Graph::new(2, [(0, 1)]).unwrap(), 0);
        assert_eq!(cert.sep.order(), 2);
        assert!(cert.witness.is_none());
    }

    #[test]
    fn k5_spans_a_path_on_four() {
        let k5 = generate(GraphKind::Complete { n: 5 }, 0).unwrap();
        let p4 = generate(GraphKind::Path { n: 4 }, 0).unwrap();
        let cert = check_spanning(&k5, &p4, 2);
        assert_eq!(cert.sep.order(), 4);
    }

    #[test]
    fn null_tree_gives_order_zero() {
        let k3 = generate(GraphKind::Complete { n: 3 }, 0).unwrap();
        let cert = check_spanning(&k3, &Graph::null(), 1);
        assert_eq!(cert.sep.order(), 0);
    }

    #[test]
    fn spanning_preconditions() {
        let p3 = generate(GraphKind::Path { n: 3 }, 0).unwrap();
        let t = Graph::new(1, []).unwrap();
        assert!(matches!(
            spanning_separation(&p3, &t, 1),
            Err(Error::Precondition(_))
        ));
        let big = generate(GraphKind::Path { n: 4 }, 0).unwrap();
        let k4 = generate(GraphKind::Complete { n: 4 }, 0).unwrap();
        assert!(matches!(
            spanning_separation(&k4, &big, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn decide_examples() {
        let k4 = generate(GraphKind::Complete { n: 4 }, 0).unwrap();
        let p5 = generate(GraphKind::Path { n: 5 }, 0).unwrap();
        let c = decide(&k4, &p5).unwrap();
        match &c.evidence {
            Evidence::Decomposition(d) => assert_eq!(d.width(), 3),
            other => panic!("expected decomposition, got {other:?}"),
        }

        let p4 = generate(GraphKind::Path { n: 4 }, 0).unwrap();
        match decide(&k4, &p4).unwrap().evidence {
            Evidence::Model(m) => assert!(validate_model(&k4, &m).is_clean()),
            other => panic!("expected model, got {other:?}"),
        }

        let c5 = generate(GraphKind::Cycle { n: 5 }, 0).unwrap();
        let claw = generate(GraphKind::Star { n: 4 }, 0).unwrap();
        assert!(matches!(
            decide(&c5, &claw).unwrap().evidence,
            Evidence::Decomposition(_)
        ));
    }

    #[test]
    fn decide_single_vertex_forest() {
        let f = Graph::new(1, []).unwrap();
        assert!(matches!(
            decide(&Graph::new(3, []).unwrap(), &f).unwrap().evidence,
            Evidence::Model(_)
        ));
        match decide(&Graph::null(), &f).unwrap().evidence {
            Evidence::Decomposition(d) => assert_eq!(d.width(), -1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decide_rejects_non_forests() {
        let k4 = generate(GraphKind::Complete { n: 4 }, 0).unwrap();
        let c3 = generate(GraphKind::Cycle { n: 3 }, 0).unwrap();
        assert!(matches!(decide(&k4, &c3), Err(Error::Input(_))));
        assert!(matches!(decide(&k4, &Graph::null()), Err(Error::Input(_))));
    }

    #[test]
    fn reductio_builds_a_good_separation() {
        // P4 0-1-2-3 is 1-good as a whole; from {0} there is one path to {3}.
        let p4 = generate(GraphKind::Path { n: 4 }, 0).unwrap();
        let outer = crate::separations::is_w_good(
            &p4,
            Separation {
                a: p4.vertices(),
                b: VertexSet::from([3]),
            },
            1,
        )
        .unwrap()
        .unwrap();
        let source = VertexSet::from([0]);
        let flow = max_disjoint_paths(&p4, source, outer.sep.b);
        let c = reductio(&p4, &outer, source, &flow).unwrap();
        assert!(c.check(&p4).is_empty());
        assert!(source.is_subset(c.sep.a));
        assert_eq!(c.sep.order(), flow.cut.len());
    }
}
