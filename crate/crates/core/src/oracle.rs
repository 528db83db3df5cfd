//! Exhaustive minor search for tiny graphs. Used to cross-check the engine,
//! never by it.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::MinorModel;
use crate::vertex_set::VertexSet;

pub const MINOR_ORACLE_HOST_LIMIT: usize = 6;
pub const MINOR_ORACLE_PATTERN_LIMIT: usize = 4;

/// Searches every assignment of host vertices to pattern vertices (or to
/// nothing), then every injective choice of edge images.
pub fn find_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>> {
    if host.n() > MINOR_ORACLE_HOST_LIMIT || pattern.n() > MINOR_ORACLE_PATTERN_LIMIT {
        return Err(Error::Capacity {
            what: "graph size for the minor oracle",
            got: host.n().max(pattern.n()),
            limit: MINOR_ORACLE_HOST_LIMIT,
        });
    }
    if pattern.has_loops() {
        return Err(Error::Input("minor patterns must be loopless".into()));
    }
    let k = pattern.n();
    let n = host.n();
    if k == 0 {
        return Ok(Some(MinorModel {
            pattern: pattern.clone(),
            branch_sets: Vec::new(),
            edge_images: Vec::new(),
        }));
    }
    let total = (k + 1).pow(n as u32);
    for mut code in 0..total {
        let mut sets = vec![VertexSet::EMPTY; k];
        for v in 0..n {
            let label = code % (k + 1);
            code /= k + 1;
            if label < k {
                sets[label].insert(v);
            }
        }
        if !sets.iter().all(|&s| host.is_connected_within(s)) {
            continue;
        }
        let mut images = Vec::with_capacity(pattern.m());
        if assign_edges(host, pattern, &sets, &mut images) {
            return Ok(Some(MinorModel {
                pattern: pattern.clone(),
                branch_sets: sets,
                edge_images: images,
            }));
        }
    }
    Ok(None)
}

fn assign_edges(
    host: &Graph,
    pattern: &Graph,
    sets: &[VertexSet],
    images: &mut Vec<usize>,
) -> bool {
    let f = images.len();
    if f == pattern.m() {
        return true;
    }
    let (h1, h2) = pattern.edges()[f];
    for (idx, &(x, y)) in host.edges().iter().enumerate() {
        let joins = (sets[h1].contains(x) && sets[h2].contains(y))
            || (sets[h1].contains(y) && sets[h2].contains(x));
        if joins && !images.contains(&idx) {
            images.push(idx);
            if assign_edges(host, pattern, sets, images) {
                return true;
            }
            images.pop();
        }
    }
    false
}

pub fn contains_minor(host: &Graph, pattern: &Graph) -> Result<bool> {
    Ok(find_minor(host, pattern)?.is_some())
}
