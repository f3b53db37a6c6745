//! The ball `G(v,r,s)`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::ops::Deref;

use super::{EdgeCache, GraphOracle};
use crate::error::{Error, Result};
use crate::finite::FiniteMultigraph;
use crate::types::{EdgeId, VertexId};

/// `G(v,r,s)`: the subgraph induced by the edges of every path that visits
/// `v`, has length at most `r` and only uses edges of index at most `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball(FiniteMultigraph);

impl Ball {
    pub fn into_graph(self) -> FiniteMultigraph {
        self.0
    }
}

impl Deref for Ball {
    type Target = FiniteMultigraph;

    fn deref(&self) -> &FiniteMultigraph {
        &self.0
    }
}

/// Computes `G(v,r,s)`.
///
/// An edge lies on a path of length `≤ r` through `v` exactly when one of its
/// endpoints is within distance `r − 1` of `v` in the graph of edges with
/// index `≤ s`: cut such a path at `v` and keep the half holding the edge,
/// and conversely a shortest route to the nearer endpoint never uses the
/// edge itself. So a breadth-first search over that finite graph suffices.
pub fn ball(oracle: &dyn GraphOracle, v: VertexId, r: u64, s: u64) -> Result<Ball> {
    if !oracle.is_vertex(v.0) {
        return Err(Error::domain(format!("{v} is not a vertex")));
    }
    let mut cache = EdgeCache::new(oracle);
    Ok(ball_cached(&mut cache, v, r, s))
}

pub(crate) fn ball_cached(cache: &mut EdgeCache<'_>, v: VertexId, r: u64, s: u64) -> Ball {
    if r == 0 {
        return Ball(FiniteMultigraph::new());
    }
    let incs: Vec<_> = cache.upto(s).iter().flatten().copied().collect();
    let mut adj: HashMap<VertexId, Vec<(EdgeId, VertexId)>> = HashMap::new();
    for inc in &incs {
        let (a, b) = inc.endpoints();
        adj.entry(a).or_default().push((inc.edge(), b));
        if a != b {
            adj.entry(b).or_default().push((inc.edge(), a));
        }
    }

    let mut dist: BTreeMap<VertexId, u64> = BTreeMap::new();
    dist.insert(v, 0);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if d + 1 > r - 1 {
            continue;
        }
        for &(_, y) in adj.get(&x).map(Vec::as_slice).unwrap_or_default() {
            if let Entry::Vacant(slot) = dist.entry(y) {
                slot.insert(d + 1);
                queue.push_back(y);
            }
        }
    }

    Ball(FiniteMultigraph::from_incidences(incs.into_iter().filter(|inc| {
        let (a, b) = inc.endpoints();
        dist.contains_key(&a) || dist.contains_key(&b)
    })))
}
