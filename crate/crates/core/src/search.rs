//! Trail enumeration over a finite pool of edges.

use std::collections::BTreeMap;
#[cfg(test)]
use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::types::{EdgeId, EdgeSet, Incidence, VertexId};

/// Receives `(vertices, edges)` of each trail; `Break` stops the walk.
pub(crate) type TrailVisitor<'a, B> = dyn FnMut(&[VertexId], &[EdgeId]) -> ControlFlow<B> + 'a;

/// A finite edge pool with adjacency lists sorted by edge index, so depth
/// first search yields trails in lexicographic order of their edge sequence.
#[derive(Debug, Default)]
pub(crate) struct TrailPool {
    adj: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    size: usize,
}

impl TrailPool {
    pub(crate) fn new(incidences: impl IntoIterator<Item = Incidence>) -> Self {
        let mut pool = TrailPool::default();
        for inc in incidences {
            let (a, b) = inc.endpoints();
            pool.adj.entry(a).or_default().push((inc.edge(), b));
            if a != b {
                pool.adj.entry(b).or_default().push((inc.edge(), a));
            }
            pool.size += 1;
        }
        for list in pool.adj.values_mut() {
            list.sort();
        }
        pool
    }

    pub(crate) fn len(&self) -> usize {
        self.size
    }

    pub(crate) fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Calls `f(vertices, edges)` on every trail of exactly `len` edges that
    /// starts at `start` and avoids `used`, in lexicographic edge order.
    /// `used` is restored before returning.
    pub(crate) fn for_each_trail<B>(
        &self,
        start: VertexId,
        len: usize,
        used: &mut EdgeSet,
        f: &mut TrailVisitor<'_, B>,
    ) -> ControlFlow<B> {
        let mut vertices = vec![start];
        let mut edges = Vec::with_capacity(len);
        self.extend(len, used, &mut vertices, &mut edges, f)
    }

    fn extend<B>(
        &self,
        len: usize,
        used: &mut EdgeSet,
        vertices: &mut Vec<VertexId>,
        edges: &mut Vec<EdgeId>,
        f: &mut TrailVisitor<'_, B>,
    ) -> ControlFlow<B> {
        if edges.len() == len {
            return f(vertices, edges);
        }
        let here = *vertices.last().expect("trail has a start");
        let Some(next) = self.adj.get(&here) else {
            return ControlFlow::Continue(());
        };
        for &(e, to) in next {
            if !used.insert(e) {
                continue;
            }
            vertices.push(to);
            edges.push(e);
            let flow = self.extend(len, used, vertices, edges, f);
            edges.pop();
            vertices.pop();
            used.remove(&e);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// All trails from `start` with up to `max_len` edges, ordered by length and
/// then lexicographically. Used by tests as a small reference enumerator.
#[cfg(test)]
pub(crate) fn all_trails(pool: &TrailPool, start: VertexId, max_len: usize) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        let _ = pool.for_each_trail(start, len, &mut BTreeSet::new(), &mut |_, es| {
            out.push(es.to_vec());
            ControlFlow::<()>::Continue(())
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inc(e: u64, u: u64, v: u64) -> Incidence {
        Incidence::new(EdgeId(e), VertexId(u), VertexId(v))
    }

    fn ids(v: &[u64]) -> Vec<EdgeId> {
        v.iter().map(|&e| EdgeId(e)).collect()
    }

    #[test]
    fn triangle_trails_in_order() {
        let pool = TrailPool::new([inc(0, 0, 1), inc(1, 1, 2), inc(2, 0, 2)]);
        let trails = all_trails(&pool, VertexId(0), 3);
        assert_eq!(
            trails,
            vec![ids(&[]), ids(&[0]), ids(&[2]), ids(&[0, 1]), ids(&[2, 1]), ids(&[0, 1, 2]), ids(&[2, 1, 0])]
        );
    }

    #[test]
    fn loops_and_parallels() {
        let pool = TrailPool::new([inc(0, 0, 0), inc(1, 0, 1), inc(2, 0, 1)]);
        assert_eq!(pool.len(), 3);
        let two = all_trails(&pool, VertexId(0), 2).into_iter().filter(|t| t.len() == 2).collect::<Vec<_>>();
        assert_eq!(two, vec![ids(&[0, 1]), ids(&[0, 2]), ids(&[1, 2]), ids(&[2, 1])]);
    }

    #[test]
    fn used_edges_are_skipped_and_restored() {
        let pool = TrailPool::new([inc(0, 0, 1), inc(1, 1, 2)]);
        let mut used: EdgeSet = [EdgeId(1)].into_iter().collect();
        let mut seen = Vec::new();
        let _ = pool.for_each_trail(VertexId(0), 1, &mut used, &mut |vs, es| {
            seen.push((vs.to_vec(), es.to_vec()));
            ControlFlow::<()>::Continue(())
        });
        assert_eq!(seen, vec![(vec![VertexId(0), VertexId(1)], ids(&[0]))]);
        assert_eq!(used.len(), 1);
        assert!(pool.for_each_trail(VertexId(0), 2, &mut used, &mut |_, _| ControlFlow::Break(())).is_continue());
    }
}
