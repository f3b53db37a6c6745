//! Streaming computable infinite Eulerian paths.
//!
//! A stream keeps a finite prefix `t_n` that the matching extensibility
//! decider accepts. Stage `n` extends it to the first candidate, in order of
//! (largest new edge index, number of new edges, lexicographic), that is
//! still accepted and visits `e_n`, the `n`-th smallest edge index. Every
//! edge is therefore emitted eventually, and never twice.

use std::ops::ControlFlow;

use crate::deciders::{is_distinguished, Decider, DistinguishedQuery, StepBudgetOutcome, UNDECLARED_BUDGET};
use crate::error::{Error, Result};
use crate::oracle::{EdgeCache, GraphDescription};
use crate::path::FinitePath;
use crate::search::TrailPool;
use crate::types::{EdgeId, EdgeSet, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    OneWay,
    TwoWay,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// One pulled step: the edge crossed, the vertex arrived at and that
/// vertex's position in the path's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Emitted {
    pub edge: EdgeId,
    pub vertex: VertexId,
    pub pos: i64,
}

pub struct EulerStream {
    graph: GraphDescription,
    mode: Mode,
    prefix: Option<FinitePath>,
    stage: u64,
    scan: u64,
    right_next: i64,
    left_next: i64,
    candidate_limit: Option<u64>,
    audit: u64,
}

/// Gives up on the edge enumeration after this many consecutive indices
/// that are not edges.
const EDGE_GAP_LIMIT: u64 = UNDECLARED_BUDGET;

/// Starts a one-way stream at `start`, or at the least distinguished vertex.
pub fn one_way_stream(g: &GraphDescription, start: Option<VertexId>) -> Result<EulerStream> {
    if !g.conditions().e1 {
        return Err(Error::domain(format!("graph `{}` does not declare E1", g.name())));
    }
    let distinguished = |v: VertexId| {
        is_distinguished(&DistinguishedQuery { oracle: g.oracle(), vertex: v, has_odd_vertex: g.has_odd_vertex() })
    };
    let start = match start {
        Some(v) if !g.oracle().is_vertex(v.0) => return Err(Error::domain(format!("{v} is not a vertex"))),
        Some(v) if !distinguished(v) => {
            return Err(Error::domain(format!("vertex {v} is not distinguished and cannot start a one-way path")))
        }
        Some(v) => v,
        None => (0..UNDECLARED_BUDGET)
            .map(VertexId)
            .find(|&v| g.oracle().is_vertex(v.0) && distinguished(v))
            .ok_or_else(|| Error::domain("no distinguished vertex found"))?,
    };
    Ok(EulerStream::new(g, Mode::OneWay, Some(FinitePath::trivial(0, start))))
}

pub fn two_way_stream(g: &GraphDescription) -> Result<EulerStream> {
    if !g.conditions().e2 {
        return Err(Error::domain(format!("graph `{}` does not declare E2", g.name())));
    }
    Ok(EulerStream::new(g, Mode::TwoWay, None))
}

impl EulerStream {
    fn new(g: &GraphDescription, mode: Mode, prefix: Option<FinitePath>) -> Self {
        EulerStream {
            graph: g.clone(),
            mode,
            prefix,
            stage: 0,
            scan: 0,
            right_next: 1,
            left_next: -1,
            candidate_limit: None,
            audit: 0,
        }
    }

    /// Caps the candidates examined per stage; a stage that runs out fails
    /// with [`Error::Exhausted`].
    pub fn with_candidate_limit(mut self, limit: u64) -> Self {
        self.candidate_limit = Some(limit);
        self
    }

    /// Audits every decider race, see [`Decider::audit`].
    pub fn with_audit(mut self, extra_steps: u64) -> Self {
        self.audit = extra_steps;
        self
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn graph(&self) -> &GraphDescription {
        &self.graph
    }

    /// Number of completed stages.
    pub fn stage(&self) -> u64 {
        self.stage
    }

    /// The current prefix; a two-way stream has none before its first stage.
    pub fn prefix(&self) -> Option<&FinitePath> {
        self.prefix.as_ref()
    }

    /// `e_n`: the `n`-th smallest edge index, `n` = completed stages.
    fn next_target(&mut self) -> Result<EdgeId> {
        let oracle = self.graph.oracle();
        let from = self.scan;
        while !oracle.is_edge(self.scan) {
            self.scan += 1;
            if self.scan - from > EDGE_GAP_LIMIT {
                return Err(Error::domain(format!("no edge index in [{from}, {}]", self.scan)));
            }
        }
        Ok(EdgeId(self.scan))
    }

    fn accepts(&self, t: &FinitePath) -> Result<bool> {
        let decider = Decider::new(&self.graph).audit(self.audit);
        let verdict = match self.mode {
            Mode::OneWay => decider.right_extensible(t)?,
            Mode::TwoWay => decider.bi_extensible(t)?,
        };
        match verdict.outcome {
            StepBudgetOutcome::Decided(b) => Ok(b),
            StepBudgetOutcome::Exhausted(n) => Err(Error::Exhausted(n)),
        }
    }

    /// Runs one stage: extends the prefix so that it visits `e_n`.
    pub fn advance_stage(&mut self) -> Result<()> {
        let target = self.next_target()?;
        let next = match (self.mode, &self.prefix) {
            (Mode::OneWay, Some(t)) if t.visits_edge(target) => t.clone(),
            (Mode::OneWay, Some(t)) => self.search(target, |s, pool, used, f| s.right_candidates(t, pool, used, f))?,
            (Mode::TwoWay, None) => self.search(target, |s, pool, used, f| s.initial_candidates(pool, used, f))?,
            (Mode::TwoWay, Some(t)) => self.search(target, |s, pool, used, f| s.both_candidates(t, pool, used, f))?,
            (Mode::OneWay, None) => unreachable!("one-way streams always hold a prefix"),
        };
        self.prefix = Some(next);
        self.stage += 1;
        self.scan = target.0 + 1;
        Ok(())
    }

    /// Walks `m = target, target+1, …` and, over the pool of unvisited edges
    /// with index `≤ m`, hands every candidate produced by `generate` that
    /// uses edge `m` and visits `target` to the decider.
    fn search<G>(&self, target: EdgeId, generate: G) -> Result<FinitePath>
    where
        G: Fn(
            &Self,
            &TrailPool,
            &mut EdgeSet,
            &mut dyn FnMut(FinitePath) -> ControlFlow<Result<FinitePath>>,
        ) -> ControlFlow<Result<FinitePath>>,
    {
        let visited = self.prefix.as_ref().map(FinitePath::edge_set).unwrap_or_default();
        let mut cache = EdgeCache::new(self.graph.oracle());
        let mut examined = 0u64;
        let mut m = target.0;
        loop {
            if cache.get(m).is_some() && !visited.contains(&EdgeId(m)) {
                let pool = TrailPool::new(
                    cache.upto(m).iter().flatten().filter(|inc| !visited.contains(&inc.edge())).copied(),
                );
                let mut used = visited.clone();
                let limit = self.candidate_limit;
                let flow = generate(self, &pool, &mut used, &mut |cand: FinitePath| {
                    if !cand.visits_edge(EdgeId(m)) || !cand.visits_edge(target) {
                        return ControlFlow::Continue(());
                    }
                    examined += 1;
                    if limit.is_some_and(|l| examined > l) {
                        return ControlFlow::Break(Err(Error::Exhausted(examined - 1)));
                    }
                    match self.accepts(&cand) {
                        Ok(true) => ControlFlow::Break(Ok(cand)),
                        Ok(false) => ControlFlow::Continue(()),
                        Err(e) => ControlFlow::Break(Err(e)),
                    }
                });
                if let ControlFlow::Break(found) = flow {
                    return found;
                }
            }
            m += 1;
        }
    }

    fn right_candidates(
        &self,
        t: &FinitePath,
        pool: &TrailPool,
        used: &mut EdgeSet,
        f: &mut dyn FnMut(FinitePath) -> ControlFlow<Result<FinitePath>>,
    ) -> ControlFlow<Result<FinitePath>> {
        for len in 1..=pool.len() {
            pool.for_each_trail(t.terminal(), len, used, &mut |vs, es| {
                let tail = FinitePath::new(t.end(), vs.to_vec(), es.to_vec()).expect("trail is a path");
                f(t.concat_right(&tail).expect("trail avoids the prefix"))
            })?;
        }
        ControlFlow::Continue(())
    }

    fn initial_candidates(
        &self,
        pool: &TrailPool,
        used: &mut EdgeSet,
        f: &mut dyn FnMut(FinitePath) -> ControlFlow<Result<FinitePath>>,
    ) -> ControlFlow<Result<FinitePath>> {
        let starts: Vec<VertexId> = pool.vertices().collect();
        for len in 1..=pool.len() {
            for &v in &starts {
                pool.for_each_trail(v, len, used, &mut |vs, es| {
                    f(FinitePath::new(0, vs.to_vec(), es.to_vec()).expect("trail is a path"))
                })?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Extensions `l·t·r` with both `l` and `r` nonempty, by total length,
    /// then length of `l`, then `l` and `r` lexicographically.
    fn both_candidates(
        &self,
        t: &FinitePath,
        pool: &TrailPool,
        used: &mut EdgeSet,
        f: &mut dyn FnMut(FinitePath) -> ControlFlow<Result<FinitePath>>,
    ) -> ControlFlow<Result<FinitePath>> {
        for total in 2..=pool.len() {
            for left_len in 1..total {
                // Left trails are collected first: the right walk needs
                // `used` with the left trail's edges added.
                let mut lefts = Vec::new();
                let _ = pool.for_each_trail(t.initial(), left_len, used, &mut |vs, es| {
                    lefts.push((vs.to_vec(), es.to_vec()));
                    ControlFlow::<()>::Continue(())
                });
                for (lvs, les) in lefts {
                    let left = FinitePath::new(0, lvs, les.clone()).expect("trail is a path").invert();
                    used.extend(les.iter().copied());
                    let flow = pool.for_each_trail(t.terminal(), total - left_len, used, &mut |vs, es| {
                        let right = FinitePath::new(t.end(), vs.to_vec(), es.to_vec()).expect("trail is a path");
                        let grown = t.concat_right(&right).and_then(|p| p.concat_left(&left));
                        f(grown.expect("trails are disjoint from each other and the prefix"))
                    });
                    for e in &les {
                        used.remove(e);
                    }
                    flow?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Next step on `side`, running stages as needed.
    pub fn next_edge(&mut self, side: Side) -> Result<Emitted> {
        match side {
            Side::Right => {
                let pos = self.right_next;
                while self.prefix.as_ref().is_none_or(|t| t.end() < pos) {
                    self.advance_stage()?;
                }
                let t = self.prefix.as_ref().expect("advanced");
                let out = Emitted {
                    edge: t.edge_at(pos - 1).expect("in domain"),
                    vertex: t.vertex_at(pos).expect("in domain"),
                    pos,
                };
                self.right_next += 1;
                Ok(out)
            }
            Side::Left if self.mode == Mode::OneWay => {
                Err(Error::Usage("a one-way stream has no left side".to_string()))
            }
            Side::Left => {
                let pos = self.left_next;
                while self.prefix.as_ref().is_none_or(|t| t.base() > pos) {
                    self.advance_stage()?;
                }
                let t = self.prefix.as_ref().expect("advanced");
                let out = Emitted {
                    edge: t.edge_at(pos).expect("in domain"),
                    vertex: t.vertex_at(pos).expect("in domain"),
                    pos,
                };
                self.left_next -= 1;
                Ok(out)
            }
        }
    }

    /// The start of the path: position 0 and the vertex there. Runs the
    /// first stage of a two-way stream if needed.
    pub fn origin(&mut self) -> Result<VertexId> {
        if self.prefix.is_none() {
            self.advance_stage()?;
        }
        Ok(self.prefix.as_ref().and_then(|t| t.vertex_at(0)).expect("position 0 is always in the domain"))
    }
}
