//! Graphs presented by decidable predicates and a computable degree function.

pub(crate) mod ball;
pub mod families;
mod presentation;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::path::FinitePath;
use crate::types::{Degree, EdgeId, Incidence, VertexId};

pub use ball::{ball, Ball};
pub use presentation::load_presentation;

/// A possibly infinite multigraph whose vertex and edge index sets are
/// decidable subsets of ℕ, with decidable incidence and a computable degree
/// function into ℕ∪{∞}. All queries are total and pure.
pub trait GraphOracle: Send + Sync {
    fn is_vertex(&self, n: u64) -> bool;

    fn is_edge(&self, n: u64) -> bool;

    /// Endpoints of `e`; `None` when `e` is not an edge.
    fn incidence(&self, e: EdgeId) -> Option<Incidence>;

    /// Degree of `v`, loops counted twice; `None` when `v` is not a vertex.
    fn degree(&self, v: VertexId) -> Option<Degree>;

    /// A certified upper bound on the indices of the edges incident to a
    /// finite-degree vertex. Without one, incident edges are found by
    /// scanning until the degree count is reached.
    fn scan_bound(&self, _v: VertexId) -> Option<u64> {
        None
    }
}

/// Edges incident to `v`, in ascending order, or `None` when `v` has
/// infinite degree. Finite-degree vertices are handled by scanning edge
/// indices until the incidences found add up to the degree.
pub fn incident_edges(oracle: &dyn GraphOracle, v: VertexId) -> Result<Option<Vec<EdgeId>>> {
    let degree = oracle.degree(v).ok_or_else(|| Error::domain(format!("{v} is not a vertex")))?;
    let Degree::Finite(target) = degree else {
        return Ok(None);
    };
    let bound = oracle.scan_bound(v);
    let mut found = Vec::new();
    let mut count = 0;
    let mut idx = 0u64;
    while count < target {
        if bound.is_some_and(|b| idx > b) {
            return Err(Error::domain(format!(
                "oracle inconsistency: degree({v}) = {target} but only {count} incidences up to edge {}",
                bound.unwrap_or_default()
            )));
        }
        if let Some(inc) = oracle.incidence(EdgeId(idx)) {
            let m = inc.multiplicity_at(v);
            if m > 0 {
                found.push(inc.edge());
                count += m;
            }
        }
        idx += 1;
    }
    Ok(Some(found))
}

/// Validates a path against the oracle: vertices exist, edges exist and
/// join their neighbours, nothing repeats.
pub fn validate_path(oracle: &dyn GraphOracle, t: &FinitePath) -> Result<()> {
    for &v in t.vertices() {
        if !oracle.is_vertex(v.0) {
            return Err(crate::error::PathError::UnknownVertex(v).into());
        }
    }
    t.validate_with(|e| oracle.incidence(e))?;
    Ok(())
}

/// Memoised incidence lookups over a dense prefix of edge indices.
pub(crate) struct EdgeCache<'a> {
    oracle: &'a dyn GraphOracle,
    known: Vec<Option<Incidence>>,
    degrees: HashMap<VertexId, Degree>,
}

impl<'a> EdgeCache<'a> {
    pub(crate) fn new(oracle: &'a dyn GraphOracle) -> Self {
        EdgeCache { oracle, known: Vec::new(), degrees: HashMap::new() }
    }

    /// Incidences of all edges with index `≤ s`, indexed by edge id.
    pub(crate) fn upto(&mut self, s: u64) -> &[Option<Incidence>] {
        let want = s as usize + 1;
        while self.known.len() < want {
            let e = EdgeId(self.known.len() as u64);
            self.known.push(self.oracle.incidence(e));
        }
        &self.known[..want]
    }

    pub(crate) fn get(&mut self, e: u64) -> Option<Incidence> {
        self.upto(e)[e as usize]
    }

    pub(crate) fn degree(&mut self, v: VertexId) -> Degree {
        let oracle = self.oracle;
        *self.degrees.entry(v).or_insert_with(|| oracle.degree(v).expect("incidence endpoints are vertices"))
    }
}

/// Which of the existence conditions for one-way (`E1`) and two-way (`E2`)
/// infinite Eulerian paths a graph is declared to satisfy.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Conditions {
    pub e1: bool,
    pub e2: bool,
}

impl Conditions {
    pub const NONE: Conditions = Conditions { e1: false, e2: false };
    pub const E1: Conditions = Conditions { e1: true, e2: false };
    pub const E2: Conditions = Conditions { e1: false, e2: true };
    pub const BOTH: Conditions = Conditions { e1: true, e2: true };

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "E1" => Some(Self::E1),
            "E2" => Some(Self::E2),
            "E1E2" => Some(Self::BOTH),
            "none" => Some(Self::NONE),
            _ => None,
        }
    }
}

impl fmt::Display for Conditions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.e1, self.e2) {
            (true, true) => "E1E2",
            (true, false) => "E1",
            (false, true) => "E2",
            (false, false) => "none",
        })
    }
}

/// Declared facts about a graph. These are trusted input: whether a graph
/// has an odd-degree vertex cannot be computed uniformly from its oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metadata {
    pub name: String,
    pub has_odd_vertex: bool,
    pub conditions: Conditions,
}

/// An oracle together with its declared metadata.
#[derive(Clone)]
pub struct GraphDescription {
    oracle: Arc<dyn GraphOracle>,
    meta: Metadata,
}

impl GraphDescription {
    pub fn new(oracle: Arc<dyn GraphOracle>, meta: Metadata) -> Self {
        GraphDescription { oracle, meta }
    }

    pub fn oracle(&self) -> &dyn GraphOracle {
        self.oracle.as_ref()
    }

    pub fn meta(&self) -> &Metadata {
        &self.meta
    }

    pub fn name(&self) -> &str {
        &self.meta.name
    }

    pub fn has_odd_vertex(&self) -> bool {
        self.meta.has_odd_vertex
    }

    pub fn conditions(&self) -> Conditions {
        self.meta.conditions
    }
}

impl fmt::Debug for GraphDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphDescription").field("meta", &self.meta).finish_non_exhaustive()
    }
}
