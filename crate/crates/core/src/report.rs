//! Violation lists produced by the certificate validators.

use std::fmt;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    // Path-decompositions.
    VertexUncovered {
        vertex: usize,
    },
    EdgeUncovered {
        u: usize,
        v: usize,
    },
    IntervalBroken {
        vertex: usize,
        before: usize,
        gap: usize,
        after: usize,
    },
    BagOutsideGraph {
        bag: usize,
        vertex: usize,
    },
    WidthExceeded {
        width: isize,
        max: isize,
    },
    LastBagMismatch {
        expected: VertexSet,
        found: Option<VertexSet>,
    },

    // Minor models.
    PatternHasLoop {
        h: usize,
    },
    BranchSetCount {
        expected: usize,
        found: usize,
    },
    EmptyBranchSet {
        h: usize,
    },
    DisconnectedBranchSet {
        h: usize,
        set: VertexSet,
    },
    BranchSetOutsideHost {
        h: usize,
        vertex: usize,
    },
    BranchSetsOverlap {
        h1: usize,
        h2: usize,
        vertex: usize,
    },
    EdgeImageCount {
        expected: usize,
        found: usize,
    },
    EdgeImageOutOfRange {
        f: usize,
        image: usize,
    },
    EdgeImageReused {
        f1: usize,
        f2: usize,
        image: usize,
    },
    EdgeImageNotIncident {
        f: usize,
        h: usize,
        image: (usize, usize),
    },

    // Certificate framing.
    HeaderMismatch {
        field: &'static str,
        expected: isize,
        found: isize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            EdgeUncovered { u, v } => write!(f, "edge {u}-{v} is in no bag"),
            IntervalBroken {
                vertex,
                before,
                gap,
                after,
            } => write!(
                f,
                "vertex {vertex} is in bags {before} and {after} but not in bag {gap}"
            ),
            BagOutsideGraph { bag, vertex } => {
                write!(f, "bag {bag} contains vertex {vertex} outside the graph")
            }
            WidthExceeded { width, max } => write!(f, "width {width} exceeds the bound {max}"),
            LastBagMismatch { expected, found } => match found {
                Some(b) => write!(f, "last bag is {{{b}}}, expected {{{expected}}}"),
                None => write!(f, "no bags, expected last bag {{{expected}}}"),
            },
            PatternHasLoop { h } => write!(f, "pattern vertex {h} carries a loop"),
            BranchSetCount { expected, found } => {
                write!(
                    f,
                    "{found} branch sets for a pattern with {expected} vertices"
                )
            }
            EmptyBranchSet { h } => write!(f, "branch set of {h} is empty"),
            DisconnectedBranchSet { h, set } => {
                write!(f, "branch set of {h} ({{{set}}}) is not connected")
            }
            BranchSetOutsideHost { h, vertex } => {
                write!(f, "branch set of {h} uses vertex {vertex} outside the host")
            }
            BranchSetsOverlap { h1, h2, vertex } => {
                write!(f, "branch sets of {h1} and {h2} share vertex {vertex}")
            }
            EdgeImageCount { expected, found } => {
                write!(f, "{found} edge images for a pattern with {expected} edges")
            }
            EdgeImageOutOfRange { f: e, image } => {
                write!(
                    f,
                    "edge image of pattern edge {e} is host edge {image}, which does not exist"
                )
            }
            EdgeImageReused { f1, f2, image } => {
                write!(
                    f,
                    "pattern edges {f1} and {f2} both map to host edge {image}"
                )
            }
            EdgeImageNotIncident { f: e, h, image } => write!(
                f,
                "edge image {}-{} of pattern edge {e} misses the branch set of {h}",
                image.0, image.1
            ),
            HeaderMismatch {
                field,
                expected,
                found,
            } => {
                write!(
                    f,
                    "certificate header {field} is {found}, expected {expected}"
                )
            }
        }
    }
}

/// The outcome of a validator: empty means the certificate checks out.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        Ok(())
    }
}
