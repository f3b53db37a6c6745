//! Euler's theorem on finite multigraphs: parity predicate, Hierholzer
//! construction and an exhaustive backtracking oracle.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::FiniteMultigraph;
use crate::error::{Error, Result};
use crate::path::FinitePath;
use crate::types::{EdgeId, VertexId};

/// Largest edge count [`brute_force_euler`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Why a finite multigraph has no Eulerian path with the requested endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasible {
    /// No edges; Eulerian objects visit at least one edge.
    Empty,
    Disconnected,
    NotInGraph(VertexId),
    /// More than two vertices of odd degree.
    OddVertices(Vec<VertexId>),
    /// Parity allows Eulerian paths, but not between the requested endpoints.
    Endpoints {
        from: Option<VertexId>,
        to: Option<VertexId>,
        odd: Vec<VertexId>,
    },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[VertexId]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Infeasible::Empty => f.write_str("graph has no edges"),
            Infeasible::Disconnected => f.write_str("graph is not connected"),
            Infeasible::NotInGraph(v) => write!(f, "vertex {v} is not in the graph"),
            Infeasible::OddVertices(odd) => {
                write!(f, "{} vertices of odd degree ({})", odd.len(), list(odd))
            }
            Infeasible::Endpoints { from, to, odd } => {
                let show = |v: &Option<VertexId>| v.map_or("*".to_string(), |v| v.to_string());
                write!(f, "no Eulerian path {} -> {} with odd vertices [{}]", show(from), show(to), list(odd))
            }
        }
    }
}

/// Euler's theorem as a predicate: a connected graph with at least one edge
/// has an Eulerian circuit at `u` iff every degree is even, and an Eulerian
/// path from `u` to `v ≠ u` iff `u`, `v` are exactly the odd vertices.
pub fn parity_feasible(h: &FiniteMultigraph, from: VertexId, to: VertexId) -> bool {
    if h.num_edges() == 0 || !h.is_connected() || !h.contains_vertex(from) || !h.contains_vertex(to) {
        return false;
    }
    let odd = h.odd_vertices();
    if from == to {
        odd.is_empty()
    } else {
        odd.len() == 2 && odd.contains(&from) && odd.contains(&to)
    }
}

fn choose_start(
    h: &FiniteMultigraph,
    from: Option<VertexId>,
    to: Option<VertexId>,
) -> std::result::Result<VertexId, Infeasible> {
    if h.num_edges() == 0 {
        return Err(Infeasible::Empty);
    }
    if !h.is_connected() {
        return Err(Infeasible::Disconnected);
    }
    for v in [from, to].into_iter().flatten() {
        if !h.contains_vertex(v) {
            return Err(Infeasible::NotInGraph(v));
        }
    }
    let odd = h.odd_vertices();
    let mismatch = || Infeasible::Endpoints { from, to, odd: odd.clone() };
    match odd.as_slice() {
        [] => match (from, to) {
            (Some(a), Some(b)) if a != b => Err(mismatch()),
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => Ok(h.vertices().next().expect("nonempty graph")),
        },
        &[x, y] => match (from, to) {
            (Some(a), Some(b)) if a != b && [a, b].contains(&x) && [a, b].contains(&y) => Ok(a),
            (Some(a), None) if a == x || a == y => Ok(a),
            (None, Some(b)) if b == x => Ok(y),
            (None, Some(b)) if b == y => Ok(x),
            (None, None) => Ok(x),
            _ => Err(mismatch()),
        },
        _ => Err(Infeasible::OddVertices(odd.clone())),
    }
}

/// Eulerian path (or circuit, when `from == to`) of a finite multigraph, by
/// Hierholzer's stack-splicing construction. At every vertex the smallest
/// unused edge id is followed.
pub fn eulerian_finite(
    h: &FiniteMultigraph,
    from: Option<VertexId>,
    to: Option<VertexId>,
) -> std::result::Result<FinitePath, Infeasible> {
    let start = choose_start(h, from, to)?;
    let adj = h.adjacency();
    let mut cursor: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut used: HashSet<EdgeId> = HashSet::with_capacity(h.num_edges());

    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
    let mut spliced: Vec<(VertexId, Option<EdgeId>)> = Vec::with_capacity(h.num_edges() + 1);
    while let Some(&(v, _)) = stack.last() {
        let list = &adj[&v];
        let pos = cursor.entry(v).or_insert(0);
        while *pos < list.len() && used.contains(&list[*pos].0) {
            *pos += 1;
        }
        if let Some(&(e, w)) = list.get(*pos) {
            used.insert(e);
            stack.push((w, Some(e)));
        } else {
            spliced.push(stack.pop().expect("stack is nonempty"));
        }
    }
    spliced.reverse();

    // Walking the spliced sequence forward, each entry carries the edge used
    // to reach it from its predecessor.
    let vertices: Vec<VertexId> = spliced.iter().map(|&(v, _)| v).collect();
    let edges: Vec<EdgeId> = spliced.iter().filter_map(|&(_, e)| e).collect();
    let path = FinitePath::new(0, vertices, edges).expect("Hierholzer never repeats an edge");
    debug_assert_eq!(path.len(), h.num_edges());
    if let Some(t) = to {
        debug_assert_eq!(path.terminal(), t);
    }
    Ok(path)
}

/// Every Eulerian path of `h` with the requested endpoints, by exhaustive
/// backtracking over edge orders. Paths are distinct as vertex/edge
/// sequences. Refuses graphs with more than [`BRUTE_FORCE_LIMIT`] edges.
pub fn brute_force_euler(
    h: &FiniteMultigraph,
    from: Option<VertexId>,
    to: Option<VertexId>,
) -> Result<Vec<FinitePath>> {
    if h.num_edges() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard { limit: BRUTE_FORCE_LIMIT, edges: h.num_edges() });
    }
    let mut found = Vec::new();
    if h.num_edges() == 0 {
        return Ok(found);
    }
    let adj = h.adjacency();
    let starts: Vec<VertexId> = match from {
        Some(v) if h.contains_vertex(v) => vec![v],
        Some(_) => Vec::new(),
        None => h.vertices().collect(),
    };

    struct Walk<'a> {
        adj: &'a BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
        total: usize,
        to: Option<VertexId>,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
        used: HashSet<EdgeId>,
    }

    impl Walk<'_> {
        fn go(&mut self, found: &mut Vec<FinitePath>) {
            let here = *self.vertices.last().expect("walk has a start");
            if self.edges.len() == self.total {
                if self.to.is_none_or(|t| t == here) {
                    found.push(
                        FinitePath::new(0, self.vertices.clone(), self.edges.clone())
                            .expect("walk never repeats an edge"),
                    );
                }
                return;
            }
            for &(e, w) in &self.adj[&here] {
                if self.used.insert(e) {
                    self.vertices.push(w);
                    self.edges.push(e);
                    self.go(found);
                    self.edges.pop();
                    self.vertices.pop();
                    self.used.remove(&e);
                }
            }
        }
    }

    for s in starts {
        let mut walk =
            Walk { adj: &adj, total: h.num_edges(), to, vertices: vec![s], edges: Vec::new(), used: HashSet::new() };
        walk.go(&mut found);
    }
    Ok(found)
}
