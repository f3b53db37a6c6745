//! Finite paths as edge-injective maps from an integer interval `⟦a,b⟧`.

use std::collections::HashSet;
use std::fmt;

use crate::error::PathError;
use crate::types::{EdgeId, EdgeSet, Incidence, VertexId};

/// A path `t: ⟦a,b⟧ → G`.
///
/// Vertex `i` of [`vertices`](Self::vertices) sits at position `a + i` and
/// edge `i` joins positions `a + i` and `a + i + 1`. Edges never repeat. The
/// length-0 path is legal and is the identity for concatenation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePath {
    base: i64,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl FinitePath {
    /// Checks the structural invariants: sequence lengths and no repeated
    /// edge. Incidence needs a graph, see [`validate_with`](Self::validate_with).
    pub fn new(base: i64, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self, PathError> {
        if vertices.len() != edges.len() + 1 {
            return Err(PathError::LengthMismatch { vertices: vertices.len(), edges: edges.len() });
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &e in &edges {
            if !seen.insert(e) {
                return Err(PathError::RepeatedEdge(e));
            }
        }
        Ok(FinitePath { base, vertices, edges })
    }

    /// The length-0 path sitting at `v`, with domain `⟦base,base⟧`.
    pub fn trivial(base: i64, v: VertexId) -> Self {
        FinitePath { base, vertices: vec![v], edges: Vec::new() }
    }

    /// Parses the flat token list `v0 e0 v1 e1 … vk`.
    pub fn from_tokens(base: i64, tokens: &[u64]) -> Result<Self, PathError> {
        if tokens.len().is_multiple_of(2) {
            return Err(PathError::TokenCount(tokens.len()));
        }
        let vertices = tokens.iter().step_by(2).map(|&v| VertexId(v)).collect();
        let edges = tokens.iter().skip(1).step_by(2).map(|&e| EdgeId(e)).collect();
        FinitePath::new(base, vertices, edges)
    }

    pub fn to_tokens(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.vertices.len() + self.edges.len());
        for (i, v) in self.vertices.iter().enumerate() {
            out.push(v.0);
            if let Some(e) = self.edges.get(i) {
                out.push(e.0);
            }
        }
        out
    }

    /// Checks that every edge joins its two neighbouring vertices, using
    /// `lookup` as the incidence relation.
    pub fn validate_with<F>(&self, lookup: F) -> Result<(), PathError>
    where
        F: Fn(EdgeId) -> Option<Incidence>,
    {
        for (i, &e) in self.edges.iter().enumerate() {
            let inc = lookup(e).ok_or(PathError::UnknownEdge(e))?;
            if !inc.joins(self.vertices[i], self.vertices[i + 1]) {
                return Err(PathError::NotIncident { position: self.base + i as i64, edge: e });
            }
        }
        Ok(())
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    /// Right end `b` of the domain.
    pub fn end(&self) -> i64 {
        self.base + self.edges.len() as i64
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn initial(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn terminal(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn is_circuit(&self) -> bool {
        self.initial() == self.terminal()
    }

    pub fn vertex_at(&self, position: i64) -> Option<VertexId> {
        let i = usize::try_from(position - self.base).ok()?;
        self.vertices.get(i).copied()
    }

    /// The edge joining positions `position` and `position + 1`.
    pub fn edge_at(&self, position: i64) -> Option<EdgeId> {
        let i = usize::try_from(position - self.base).ok()?;
        self.edges.get(i).copied()
    }

    pub fn visits_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    /// Restriction to `⟦from,to⟧`, which must lie inside the domain.
    pub fn restrict(&self, from: i64, to: i64) -> Option<FinitePath> {
        if from > to || from < self.base || to > self.end() {
            return None;
        }
        let lo = (from - self.base) as usize;
        let hi = (to - self.base) as usize;
        Some(FinitePath { base: from, vertices: self.vertices[lo..=hi].to_vec(), edges: self.edges[lo..hi].to_vec() })
    }

    /// Whether `self` restricted to the domain of `other` equals `other`.
    pub fn extends(&self, other: &FinitePath) -> bool {
        self.restrict(other.base, other.end()).as_ref() == Some(other)
    }

    fn check_disjoint(&self, other: &FinitePath) -> Result<(), PathError> {
        let mine: HashSet<EdgeId> = self.edges.iter().copied().collect();
        match other.edges.iter().find(|e| mine.contains(e)) {
            Some(&e) => Err(PathError::SharedEdge(e)),
            None => Ok(()),
        }
    }

    /// Concatenation of `s` at the right of `self`: domain
    /// `⟦a, b + (d − c)⟧`, agreeing with `self` on `⟦a,b⟧`.
    pub fn concat_right(&self, s: &FinitePath) -> Result<FinitePath, PathError> {
        if self.terminal() != s.initial() {
            return Err(PathError::EndpointMismatch { expected: self.terminal(), found: s.initial() });
        }
        self.check_disjoint(s)?;
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&s.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&s.edges);
        Ok(FinitePath { base: self.base, vertices, edges })
    }

    /// Concatenation of `s` at the left of `self`: domain
    /// `⟦a − (d − c), b⟧`, agreeing with `self` on `⟦a,b⟧`.
    pub fn concat_left(&self, s: &FinitePath) -> Result<FinitePath, PathError> {
        if s.terminal() != self.initial() {
            return Err(PathError::EndpointMismatch { expected: self.initial(), found: s.terminal() });
        }
        self.check_disjoint(s)?;
        let mut vertices = s.vertices.clone();
        vertices.extend_from_slice(&self.vertices[1..]);
        let mut edges = s.edges.clone();
        edges.extend_from_slice(&self.edges);
        Ok(FinitePath { base: self.base - s.len() as i64, vertices, edges })
    }

    /// The inverse path `−t` with domain `⟦−b,−a⟧`.
    pub fn invert(&self) -> FinitePath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        FinitePath { base: -self.end(), vertices, edges }
    }

    /// `deg_t(v)`: edge occurrences of the path at `v`, loops counted twice.
    pub fn degree_in_path(&self, v: VertexId) -> u64 {
        self.vertices.windows(2).map(|w| u64::from(w[0] == v) + u64::from(w[1] == v)).sum()
    }
}

impl fmt::Display for FinitePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{} [{}", self.base, self.vertices[0])?;
        for (e, v) in self.edges.iter().zip(&self.vertices[1..]) {
            write!(f, " -{e}- {v}")?;
        }
        f.write_str("]")
    }
}
