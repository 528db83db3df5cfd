//! Minor models: validation, completing a forest to a tree, restricting a
//! tree model back to the forest, and extending a model along disjoint paths.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::menger::VertexPath;
use crate::report::{ValidationReport, Violation};
use crate::vertex_set::VertexSet;

/// A model of `pattern` in some host graph: one branch set per pattern
/// vertex, one host edge index per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub pattern: Graph,
    pub branch_sets: Vec<VertexSet>,
    /// `edge_images[f]` indexes `host.edges()`.
    pub edge_images: Vec<usize>,
}

impl MinorModel {
    /// Writes the `model` format: branch sets, then edge images by endpoint.
    pub fn write(&self, host: &Graph) -> String {
        let mut out = format!("model {}\n", self.pattern.n());
        for (h, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                out.push_str(&format!("{h}:\n"));
            } else {
                out.push_str(&format!("{h}: {set}\n"));
            }
        }
        for (f, &img) in self.edge_images.iter().enumerate() {
            let (h1, h2) = self.pattern.edges()[f];
            let (u, v) = host.edges()[img];
            out.push_str(&format!("{h1} {h2}: {u} {v}\n"));
        }
        out
    }

    /// Reads the `model` format for a known pattern and host. Edge lines are
    /// matched to pattern edges in pattern order; each host edge `u v` resolves
    /// to the lowest-indexed unused parallel copy.
    pub fn parse_lines<'a>(
        pattern: &Graph,
        host: &Graph,
        header: (usize, &str),
        lines: &mut impl Iterator<Item = (usize, &'a str)>,
    ) -> Result<Self> {
        let (line_no, text) = header;
        let count: usize = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["model", k] => k
                .parse()
                .map_err(|_| Error::parse(line_no, "pattern size is not an integer"))?,
            _ => return Err(Error::parse(line_no, "expected header `model <|H|>`")),
        };
        if count != pattern.n() {
            return Err(Error::parse(
                line_no,
                format!(
                    "model has {count} branch sets, pattern has {} vertices",
                    pattern.n()
                ),
            ));
        }
        let int = |ln: usize, tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| Error::parse(ln, format!("`{tok}` is not an integer")))
        };
        let mut branch_sets = Vec::with_capacity(count);
        for h in 0..count {
            let (ln, body) = lines
                .next()
                .ok_or_else(|| Error::parse(line_no + h + 1, "missing branch set line"))?;
            let (label, rest) = body
                .split_once(':')
                .ok_or_else(|| Error::parse(ln, "expected `h: v1 v2 ...`"))?;
            if int(ln, label.trim())? != h {
                return Err(Error::parse(ln, format!("expected branch set {h}")));
            }
            let mut set = VertexSet::EMPTY;
            for tok in rest.split_whitespace() {
                let v = int(ln, tok)?;
                if v >= host.n() {
                    return Err(Error::parse(ln, format!("vertex {v} is not in the host")));
                }
                set.insert(v);
            }
            branch_sets.push(set);
        }
        let mut edge_images = Vec::with_capacity(pattern.m());
        let mut pending: Vec<Option<usize>> = vec![None; pattern.m()];
        for k in 0..pattern.m() {
            let (ln, body) = lines
                .next()
                .ok_or_else(|| Error::parse(line_no + count + k + 1, "missing edge image line"))?;
            let (lhs, rhs) = body
                .split_once(':')
                .ok_or_else(|| Error::parse(ln, "expected `h h': u v`"))?;
            let ends = |s: &str| -> Result<(usize, usize)> {
                let toks: Vec<&str> = s.split_whitespace().collect();
                match toks.as_slice() {
                    [a, b] => Ok((int(ln, a)?, int(ln, b)?)),
                    _ => Err(Error::parse(ln, "expected two integers")),
                }
            };
            let (h1, h2) = ends(lhs)?;
            let (u, v) = ends(rhs)?;
            let f = pattern
                .edges()
                .iter()
                .enumerate()
                .position(|(i, &(a, b))| {
                    pending[i].is_none() && ((a, b) == (h1, h2) || (a, b) == (h2, h1))
                })
                .ok_or_else(|| Error::parse(ln, format!("pattern has no unused edge {h1} {h2}")))?;
            let used: Vec<usize> = pending.iter().flatten().copied().collect();
            let img = host
                .find_edge(u, v, &used)
                .ok_or_else(|| Error::parse(ln, format!("host has no unused edge {u} {v}")))?;
            pending[f] = Some(img);
        }
        for p in pending {
            edge_images.push(p.expect("every pattern edge was read"));
        }
        Ok(MinorModel {
            pattern: pattern.clone(),
            branch_sets,
            edge_images,
        })
    }
}

/// Checks every clause of the model definition against `host`.
pub fn validate_model(host: &Graph, model: &MinorModel) -> ValidationReport {
    validate_model_within(host, host.vertices(), model)
}

/// As [`validate_model`], with every branch set required inside `domain`.
pub fn validate_model_within(
    host: &Graph,
    domain: VertexSet,
    model: &MinorModel,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let pattern = &model.pattern;
    for &(a, b) in pattern.edges() {
        if a == b {
            report.push(Violation::PatternHasLoop { h: a });
        }
    }
    if model.branch_sets.len() != pattern.n() {
        report.push(Violation::BranchSetCount {
            expected: pattern.n(),
            found: model.branch_sets.len(),
        });
        return report;
    }
    let domain = domain & host.vertices();
    let mut owner: Vec<Option<usize>> = vec![None; crate::MAX_VERTICES];
    for (h, &set) in model.branch_sets.iter().enumerate() {
        if set.is_empty() {
            report.push(Violation::EmptyBranchSet { h });
            continue;
        }
        for v in set - domain {
            report.push(Violation::BranchSetOutsideHost { h, vertex: v });
        }
        if set.is_subset(domain) && !host.is_connected_within(set) {
            report.push(Violation::DisconnectedBranchSet { h, set });
        }
        for v in set {
            match owner[v] {
                Some(h1) => report.push(Violation::BranchSetsOverlap {
                    h1,
                    h2: h,
                    vertex: v,
                }),
                None => owner[v] = Some(h),
            }
        }
    }
    if model.edge_images.len() != pattern.m() {
        report.push(Violation::EdgeImageCount {
            expected: pattern.m(),
            found: model.edge_images.len(),
        });
        return report;
    }
    let mut first_use: BTreeMap<usize, usize> = BTreeMap::new();
    for (f, &img) in model.edge_images.iter().enumerate() {
        if img >= host.m() {
            report.push(Violation::EdgeImageOutOfRange { f, image: img });
            continue;
        }
        if let Some(&f1) = first_use.get(&img) {
            report.push(Violation::EdgeImageReused {
                f1,
                f2: f,
                image: img,
            });
        } else {
            first_use.insert(img, f);
        }
        let (x, y) = host.edges()[img];
        let (h1, h2) = pattern.edges()[f];
        if h1 == h2 {
            continue;
        }
        let inside = |h: usize, v: usize| model.branch_sets[h].contains(v);
        let ok = (inside(h1, x) && inside(h2, y)) || (inside(h1, y) && inside(h2, x));
        if !ok {
            // With disjoint branch sets, some end of f misses the image entirely.
            let missing: Vec<usize> = [h1, h2]
                .into_iter()
                .filter(|&h| !inside(h, x) && !inside(h, y))
                .collect();
            for h in if missing.is_empty() {
                vec![h2]
            } else {
                missing
            } {
                report.push(Violation::EdgeImageNotIncident {
                    f,
                    h,
                    image: (x, y),
                });
            }
        }
    }
    report
}

/// Adds edges joining the lowest vertices of consecutive components so that
/// the forest becomes a tree. Returns the tree and the added edges; the
/// tree's edge list is the forest's edges followed by the added ones.
pub fn complete_forest_to_tree(forest: &Graph) -> Result<(Graph, Vec<(usize, usize)>)> {
    if forest.is_null() {
        return Err(Error::Input("the null graph has no spanning tree".into()));
    }
    if !forest.is_forest() {
        return Err(Error::Input("pattern is not a forest".into()));
    }
    let roots: Vec<usize> = forest
        .components()
        .iter()
        .map(|c| c.lowest().expect("components are non-empty"))
        .collect();
    let added: Vec<(usize, usize)> = roots.windows(2).map(|w| (w[0], w[1])).collect();
    let tree = Graph::new(
        forest.n(),
        forest.edges().iter().copied().chain(added.iter().copied()),
    )?;
    Ok((tree, added))
}

/// Drops the images of `added` edges from a model of the completed tree,
/// yielding a model of `forest` with the same branch sets.
pub fn restrict_model(
    model: &MinorModel,
    forest: &Graph,
    added: &[(usize, usize)],
) -> Result<MinorModel> {
    let tree = &model.pattern;
    let same =
        |(a, b): (usize, usize), (c, d): (usize, usize)| (a, b) == (c, d) || (a, b) == (d, c);
    let mut taken = vec![false; tree.m()];
    for &e in added {
        let f = (0..tree.m())
            .find(|&f| !taken[f] && same(tree.edges()[f], e))
            .ok_or_else(|| {
                Error::Contract(format!("added edge {}-{} is not in the tree", e.0, e.1))
            })?;
        taken[f] = true;
    }
    if forest.n() != tree.n() || forest.m() + added.len() != tree.m() {
        return Err(Error::Contract(
            "forest plus added edges is not the tree".into(),
        ));
    }
    let mut edge_images = Vec::with_capacity(forest.m());
    for &e in forest.edges() {
        let f = (0..tree.m())
            .find(|&f| !taken[f] && same(tree.edges()[f], e))
            .ok_or_else(|| {
                Error::Contract(format!("forest edge {}-{} is not in the tree", e.0, e.1))
            })?;
        taken[f] = true;
        edge_images.push(model.edge_images[f]);
    }
    Ok(MinorModel {
        pattern: forest.clone(),
        branch_sets: model.branch_sets.clone(),
        edge_images,
    })
}

/// A model of the subtree `tree[present]`, indexed by the vertices and edges
/// of the whole tree. Used while the spanning construction grows the tree
/// one leaf at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeModel {
    pub branch_sets: Vec<Option<VertexSet>>,
    pub edge_images: Vec<Option<usize>>,
}

impl TreeModel {
    pub fn empty(tree: &Graph) -> Self {
        TreeModel {
            branch_sets: vec![None; tree.n()],
            edge_images: vec![None; tree.m()],
        }
    }

    pub fn present(&self) -> VertexSet {
        self.branch_sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_some())
            .map(|(h, _)| h)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.present().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Union of all branch sets.
    pub fn support(&self) -> VertexSet {
        self.branch_sets
            .iter()
            .flatten()
            .fold(VertexSet::EMPTY, |acc, &s| acc | s)
    }

    /// The equivalent [`MinorModel`] of `tree[present]`, present vertices
    /// relabelled `0..k` in ascending order. Fails if an edge image is missing
    /// or dangling.
    pub fn to_minor_model(&self, tree: &Graph) -> Result<MinorModel> {
        let present = self.present();
        let mut label = vec![usize::MAX; tree.n()];
        for (i, h) in present.iter().enumerate() {
            label[h] = i;
        }
        let mut edges = Vec::new();
        let mut images = Vec::new();
        for (f, &(a, b)) in tree.edges().iter().enumerate() {
            match (
                present.contains(a) && present.contains(b),
                self.edge_images[f],
            ) {
                (true, Some(img)) => {
                    edges.push((label[a], label[b]));
                    images.push(img);
                }
                (true, None) => {
                    return Err(Error::Contract(format!("tree edge {a}-{b} has no image")))
                }
                (false, Some(_)) => {
                    return Err(Error::Contract(format!(
                        "tree edge {a}-{b} has an image but an endpoint is absent"
                    )))
                }
                (false, None) => {}
            }
        }
        Ok(MinorModel {
            pattern: Graph::new(present.len(), edges)?,
            branch_sets: present
                .iter()
                .map(|h| self.branch_sets[h].expect("present"))
                .collect(),
            edge_images: images,
        })
    }

    /// The full-tree model once every vertex is present.
    pub fn into_minor_model(self, tree: &Graph) -> Result<MinorModel> {
        if self.len() != tree.n() {
            return Err(Error::Contract("tree model is incomplete".into()));
        }
        self.to_minor_model(tree)
    }
}

impl fmt::Display for TreeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, s) in self.branch_sets.iter().enumerate() {
            if let Some(s) = s {
                write!(f, "[{h}: {s}] ")?;
            }
        }
        Ok(())
    }
}

/// Everything [`splice_model`] needs besides the host and the tree.
#[derive(Debug, Clone)]
pub struct Splice<'a> {
    /// Model of the tree minus `j` in `G[a]`.
    pub model: &'a TreeModel,
    /// Left side of the separation the model lives in.
    pub a: VertexSet,
    /// Its boundary `a ∩ b`.
    pub boundary: VertexSet,
    /// Truncated paths keyed by first vertex; keys are `boundary ∪ {v}`.
    pub paths: &'a BTreeMap<usize, VertexPath>,
    /// Boundary of the target separation; every path ends there.
    pub target: VertexSet,
    pub j: usize,
    pub i: Option<usize>,
    pub v: usize,
    /// Host edge index joining `v` to the branch set of `i` (required iff `i` is).
    pub uv: Option<usize>,
}

/// Grows a model of `tree - j` into a model of `tree[present ∪ {j}]`: every
/// old branch set absorbs the path starting at its boundary vertex, `j`
/// gets the path starting at `v`, and the tree edge `ij` maps to `uv`.
pub fn splice_model(host: &Graph, tree: &Graph, s: &Splice<'_>) -> Result<TreeModel> {
    let fail = |msg: String| Err(Error::Contract(msg));
    let present = s.model.present();
    if present.contains(s.j) {
        return fail(format!("pattern vertex {} is already modelled", s.j));
    }
    let expected_keys = s.boundary.with(s.v);
    let keys: VertexSet = s.paths.keys().copied().collect();
    if keys != expected_keys || s.paths.len() != expected_keys.len() {
        return fail(format!(
            "path keys {{{keys}}} differ from boundary plus v {{{expected_keys}}}"
        ));
    }
    if s.a.contains(s.v) {
        return fail(format!("new vertex {} already lies in A", s.v));
    }
    let old_side = s.a.with(s.v);
    let mut used = VertexSet::EMPTY;
    for (&key, path) in s.paths {
        if !path.is_path_in(host) || path.first() != key {
            return fail(format!("path keyed by {key} is not a path starting there"));
        }
        let set = path.vertex_set();
        if !set.is_disjoint(used) {
            return fail(format!("path keyed by {key} meets another path"));
        }
        used = used | set;
        if (set & old_side) != VertexSet::singleton(key) {
            return fail(format!("path keyed by {key} re-enters A ∪ {{v}}"));
        }
        if !s.target.contains(path.last()) {
            return fail(format!(
                "path keyed by {key} does not end in the target boundary"
            ));
        }
    }

    let mut out = s.model.clone();
    let mut boundary_hits = VertexSet::EMPTY;
    for h in present {
        let set = s.model.branch_sets[h].expect("present");
        if !set.is_subset(s.a) {
            return fail(format!("branch set of {h} leaves A"));
        }
        let hit = set & s.boundary;
        if hit.len() != 1 {
            return fail(format!(
                "branch set of {h} meets the boundary in {} vertices",
                hit.len()
            ));
        }
        let x = hit.lowest().expect("one vertex");
        boundary_hits.insert(x);
        out.branch_sets[h] = Some(set | s.paths[&x].vertex_set());
    }
    if boundary_hits != s.boundary {
        return fail("boundary vertices not matched one-to-one with branch sets".into());
    }
    out.branch_sets[s.j] = Some(s.paths[&s.v].vertex_set());

    match (s.i, s.uv) {
        (None, None) => {
            if !present.is_empty() {
                return fail("a new vertex of a non-empty tree needs a neighbour".into());
            }
        }
        (Some(i), Some(uv)) => {
            if !present.contains(i) {
                return fail(format!("neighbour {i} is not modelled yet"));
            }
            let f = tree
                .edges()
                .iter()
                .position(|&(a, b)| (a, b) == (i, s.j) || (a, b) == (s.j, i))
                .ok_or_else(|| Error::Contract(format!("{i}-{} is not a tree edge", s.j)))?;
            if uv >= host.m() || s.model.edge_images.contains(&Some(uv)) {
                return fail(format!("host edge {uv} is missing or already used"));
            }
            let (x, y) = host.edges()[uv];
            let bi = s.model.branch_sets[i].expect("present");
            if !((bi.contains(x) && y == s.v) || (bi.contains(y) && x == s.v)) {
                return fail(format!(
                    "host edge {x}-{y} does not join branch set of {i} to v"
                ));
            }
            out.edge_images[f] = Some(uv);
        }
        _ => return fail("neighbour and connecting edge must be given together".into()),
    }
    Ok(out)
}
