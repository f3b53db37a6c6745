//! Finite multigraphs with loops and parallel edges.

mod dot;
mod euler;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::types::{EdgeId, EdgeSet, Incidence, VertexId};

pub use euler::{brute_force_euler, eulerian_finite, parity_feasible, Infeasible, BRUTE_FORCE_LIMIT};

/// A finite multigraph: a vertex set and a map from edge ids to incidences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteMultigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Incidence>,
}

impl FiniteMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph whose vertex set is exactly the endpoints of `incidences`.
    pub fn from_incidences<I: IntoIterator<Item = Incidence>>(incidences: I) -> Self {
        let mut g = Self::new();
        for inc in incidences {
            g.add_edge(inc);
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    pub fn add_edge(&mut self, inc: Incidence) {
        let (u, v) = inc.endpoints();
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.edges.insert(inc.edge(), inc);
    }

    /// `G[E]`: edge set exactly `edges`, vertex set their endpoints.
    pub fn induced<F>(edges: &EdgeSet, lookup: F) -> Result<Self>
    where
        F: Fn(EdgeId) -> Option<Incidence>,
    {
        let mut g = Self::new();
        for &e in edges {
            let inc = lookup(e).ok_or_else(|| Error::domain(format!("edge {e} has no known incidence")))?;
            g.add_edge(inc);
        }
        Ok(g)
    }

    /// `H − E`: drop the edges in `removed`, then every vertex left without
    /// an incident edge.
    pub fn remove_edges(&self, removed: &EdgeSet) -> Self {
        Self::from_incidences(self.edges.values().filter(|inc| !removed.contains(&inc.edge())).copied())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    /// Incidences in ascending edge order.
    pub fn edges(&self) -> impl Iterator<Item = &Incidence> + '_ {
        self.edges.values()
    }

    pub fn edge_ids(&self) -> EdgeSet {
        self.edges.keys().copied().collect()
    }

    pub fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        self.edges.get(&e).copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// No vertices at all.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        self.edges.values().map(|inc| inc.multiplicity_at(v)).sum()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, u64> {
        let mut deg: BTreeMap<VertexId, u64> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for inc in self.edges.values() {
            let (u, v) = inc.endpoints();
            *deg.entry(u).or_default() += 1;
            *deg.entry(v).or_default() += 1;
        }
        deg
    }

    pub fn odd_vertices(&self) -> Vec<VertexId> {
        self.degrees().into_iter().filter(|&(_, d)| d % 2 == 1).map(|(v, _)| v).collect()
    }

    /// Adjacency lists `(edge, neighbour)` sorted by edge id. A loop appears
    /// once in its vertex's list.
    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> {
        let mut adj: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for inc in self.edges.values() {
            let (u, v) = inc.endpoints();
            adj.entry(u).or_default().push((inc.edge(), v));
            if u != v {
                adj.entry(v).or_default().push((inc.edge(), u));
            }
        }
        adj
    }

    /// Connected components ordered by least vertex id.
    pub fn components(&self) -> Vec<FiniteMultigraph> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &root in &self.vertices {
            if !seen.insert(root) {
                continue;
            }
            let mut comp = FiniteMultigraph::new();
            comp.add_vertex(root);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &(e, w) in &adj[&v] {
                    comp.add_edge(self.edges[&e]);
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Handshaking: the degree sum equals twice the number of edges.
    pub fn handshake_check(&self) -> bool {
        let sum: u64 = self.vertices.iter().map(|&v| self.degree(v)).sum();
        sum == 2 * self.edges.len() as u64
    }

    /// Subgraph relation on labelled graphs.
    pub fn is_subgraph_of(&self, other: &FiniteMultigraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.iter().all(|(e, inc)| other.edges.get(e) == Some(inc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inc(e: u64, u: u64, v: u64) -> Incidence {
        Incidence::new(EdgeId(e), VertexId(u), VertexId(v))
    }

    fn ray_lookup(e: EdgeId) -> Option<Incidence> {
        Some(inc(e.0, e.0, e.0 + 1))
    }

    fn set(ids: &[u64]) -> EdgeSet {
        ids.iter().map(|&e| EdgeId(e)).collect()
    }

    fn triangle() -> FiniteMultigraph {
        FiniteMultigraph::from_incidences([inc(0, 0, 1), inc(1, 1, 2), inc(2, 2, 0)])
    }

    #[test]
    fn induced_examples() {
        let g = FiniteMultigraph::induced(&set(&[0, 1]), ray_lookup).unwrap();
        assert_eq!(g.vertices().map(|v| v.0).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(g.num_edges(), 2);

        assert!(FiniteMultigraph::induced(&set(&[]), ray_lookup).unwrap().is_empty());

        let looped = FiniteMultigraph::induced(&set(&[4]), |e| Some(inc(e.0, 0, 0))).unwrap();
        assert_eq!(looped.num_vertices(), 1);
        assert_eq!(looped.degree(VertexId(0)), 2);

        assert!(FiniteMultigraph::induced(&set(&[1]), |_| None).is_err());
    }

    #[test]
    fn remove_edges_examples() {
        let g = FiniteMultigraph::induced(&set(&[0, 1]), ray_lookup).unwrap();
        let h = g.remove_edges(&set(&[1]));
        assert_eq!(h, FiniteMultigraph::from_incidences([inc(0, 0, 1)]));
        assert!(g.remove_edges(&set(&[0, 1])).is_empty());
        assert_eq!(g.remove_edges(&set(&[])), g);
    }

    #[test]
    fn components_examples() {
        let two = FiniteMultigraph::from_incidences([inc(0, 0, 1), inc(1, 2, 3)]);
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert!(comps[0].contains_vertex(VertexId(0)));
        assert_eq!(triangle().components().len(), 1);
        assert!(FiniteMultigraph::new().components().is_empty());
    }

    #[test]
    fn handshake_examples() {
        assert!(triangle().handshake_check());
        let single_loop = FiniteMultigraph::from_incidences([inc(0, 0, 0)]);
        assert_eq!(single_loop.degree(VertexId(0)), 2);
        assert!(single_loop.handshake_check());
    }
}
