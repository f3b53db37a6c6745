//! Identifiers and small value types shared by every module.

use std::collections::BTreeSet;
use std::fmt;

/// Index of a vertex in the oracle's decidable vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u64);

/// Index of an edge in the oracle's decidable edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of edges.
pub type EdgeSet = BTreeSet<EdgeId>;

/// Vertex degree in ℕ∪{∞}. Loops count twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    Finite(u64),
    Infinite,
}

impl Degree {
    pub fn is_infinite(self) -> bool {
        matches!(self, Degree::Infinite)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::Finite(n) => Some(n),
            Degree::Infinite => None,
        }
    }

    /// Finite and odd.
    pub fn is_odd(self) -> bool {
        matches!(self, Degree::Finite(n) if n % 2 == 1)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(n) => write!(f, "{n}"),
            Degree::Infinite => f.write_str("inf"),
        }
    }
}

/// An edge together with its unordered pair of endpoints, stored as
/// `(min, max)`. A loop has both endpoints equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incidence {
    edge: EdgeId,
    lo: VertexId,
    hi: VertexId,
}

impl Incidence {
    pub fn new(edge: EdgeId, u: VertexId, v: VertexId) -> Self {
        Incidence { edge, lo: u.min(v), hi: u.max(v) }
    }

    pub fn edge(&self) -> EdgeId {
        self.edge
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }

    pub fn is_loop(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_incident(&self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite to `v`; `v` itself for a loop.
    pub fn other(&self, v: VertexId) -> Option<VertexId> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    /// Contribution of this edge to the degree of `v`.
    pub fn multiplicity_at(&self, v: VertexId) -> u64 {
        u64::from(self.lo == v) + u64::from(self.hi == v)
    }

    /// Whether the edge joins `u` and `v` (in either order).
    pub fn joins(&self, u: VertexId, v: VertexId) -> bool {
        (self.lo, self.hi) == (u.min(v), u.max(v))
    }
}
