use super::Graph;
use crate::vertex_set::VertexSet;

/// A pair `(a, b)` of vertex sets covering the graph with no edge between
/// `a \ b` and `b \ a`. Construct via [`canonical_separation`] or
/// [`Separation::new`], which checks the covering and edge conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Option<Self> {
        is_separation(g, a, b).then_some(Separation { a, b })
    }

    /// `a ∩ b`.
    pub fn boundary(&self) -> VertexSet {
        self.a & self.b
    }

    pub fn order(&self) -> usize {
        self.boundary().len()
    }

    /// `self ≤ other`: `a ⊆ other.a` and `other.b ⊆ b`.
    pub fn le(&self, other: &Separation) -> bool {
        self.a.is_subset(other.a) && other.b.is_subset(self.b)
    }
}

pub fn is_separation(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    let all = g.vertices();
    if (a | b) != all || !a.is_subset(all) || !b.is_subset(all) {
        return false;
    }
    let a_only = a - b;
    let b_only = b - a;
    b_only.iter().all(|v| g.neighbors(v).is_disjoint(a_only))
}

/// The separation with left side `a` and the smallest right side:
/// `b = (V \ a) ∪ (N(V \ a) ∩ a)`.
pub fn canonical_separation(g: &Graph, a: VertexSet) -> Separation {
    let outside = g.vertices() - a;
    let attach = g.neighborhood(outside) & a;
    Separation {
        a,
        b: outside | attach,
    }
}
