//! The two semideciders the extensibility deciders race against each other.

use std::collections::HashMap;

use super::semi::{SemiState, Semidecider};
use crate::error::{Error, Result};
use crate::finite::FiniteMultigraph;
use crate::oracle::ball::ball_cached;
use crate::oracle::{EdgeCache, GraphOracle};
use crate::types::{Degree, EdgeId, EdgeSet, VertexId};

/// A finite connected component of `G − E`, certified inside `G(v,r,s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWitness {
    pub component: FiniteMultigraph,
    pub radius: u64,
    pub precision: u64,
}

/// Halts iff `G − E` has a finite connected component (for connected `G`).
///
/// Each step checks one ball `G(v,r,s)` around a fixed endpoint `v` of `E`,
/// with `(r,s)` running through the diagonals `r + s = 0, 1, 2, …`. It halts
/// when some component of `G(v,r,s) − E` consists of finite-degree vertices
/// whose every incident edge of `G` already lies in the ball.
pub struct FiniteComponentSearch<'g> {
    cache: EdgeCache<'g>,
    removed: EdgeSet,
    root: VertexId,
    next: (u64, u64),
    steps: u64,
    found: Option<FiniteWitness>,
}

impl<'g> FiniteComponentSearch<'g> {
    /// `removed` must be a nonempty set of edges of `oracle`. The root is the
    /// smaller endpoint of the largest edge in `removed`.
    pub fn new(oracle: &'g dyn GraphOracle, removed: &EdgeSet) -> Result<Self> {
        let last = *removed.last().ok_or_else(|| Error::domain("finite-component search needs a nonempty edge set"))?;
        let mut cache = EdgeCache::new(oracle);
        for &e in removed {
            if cache.get(e.0).is_none() {
                return Err(Error::domain(format!("edge {e} is not an edge of the graph")));
            }
        }
        let root = cache.get(last.0).expect("checked above").endpoints().0;
        Ok(FiniteComponentSearch { cache, removed: removed.clone(), root, next: (0, 0), steps: 0, found: None })
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// The component test at one `(r,s)`, independent of the schedule.
    pub fn check_at(&mut self, r: u64, s: u64) -> Option<FiniteMultigraph> {
        let ball = ball_cached(&mut self.cache, self.root, r, s);
        let rest = ball.remove_edges(&self.removed);
        rest.components().into_iter().find(|comp| {
            comp.vertices().all(|u| match self.cache.degree(u) {
                Degree::Finite(d) => d == ball.degree(u),
                Degree::Infinite => false,
            })
        })
    }

    pub fn witness(&self) -> Option<&FiniteWitness> {
        self.found.as_ref()
    }
}

impl Semidecider for FiniteComponentSearch<'_> {
    type Witness = FiniteWitness;

    fn step(&mut self) -> SemiState<FiniteWitness> {
        if let Some(w) = &self.found {
            return SemiState::Halted(w.clone());
        }
        let (r, s) = self.next;
        self.next = if s == 0 { (0, r + 1) } else { (r + 1, s - 1) };
        self.steps += 1;
        match self.check_at(r, s) {
            Some(component) => {
                let w = FiniteWitness { component, radius: r, precision: s };
                self.found = Some(w.clone());
                SemiState::Halted(w)
            }
            None => SemiState::Running,
        }
    }

    fn steps(&self) -> u64 {
        self.steps
    }
}

#[derive(Default)]
struct UnionFind {
    parent: HashMap<VertexId, VertexId>,
}

impl UnionFind {
    fn find(&mut self, v: VertexId) -> VertexId {
        let mut root = v;
        while let Some(&p) = self.parent.get(&root) {
            if p == root {
                break;
            }
            root = p;
        }
        let mut cur = v;
        while cur != root {
            let next = self.parent.get(&cur).copied().unwrap_or(root);
            self.parent.insert(cur, root);
            cur = next;
        }
        root
    }

    fn union(&mut self, a: VertexId, b: VertexId) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra.max(rb), ra.min(rb));
        }
    }
}

/// What the linkage search waits for.
#[derive(Debug, Clone)]
pub(crate) enum Goal {
    /// Every listed vertex joined to every other.
    AllJoined(Vec<VertexId>),
    /// Every vertex of `others` joined to one of `ends`.
    JoinedToEnds { ends: (VertexId, VertexId), others: Vec<VertexId> },
}

/// Exhaustive search for `E`-avoiding paths between given vertices.
///
/// Paths are considered by increasing largest edge index: step `m` admits
/// every path whose edges all have index `≤ m`, tracked with a union-find
/// over the admitted edges of `G − E`. Halts with the number of edge indices
/// admitted once the goal's vertices are joined.
pub(crate) struct LinkageSearch<'g> {
    oracle: &'g dyn GraphOracle,
    removed: EdgeSet,
    goal: Goal,
    links: UnionFind,
    admitted: u64,
    steps: u64,
    halted: bool,
}

impl<'g> LinkageSearch<'g> {
    pub(crate) fn new(oracle: &'g dyn GraphOracle, removed: &EdgeSet, goal: Goal) -> Self {
        LinkageSearch {
            oracle,
            removed: removed.clone(),
            goal,
            links: UnionFind::default(),
            admitted: 0,
            steps: 0,
            halted: false,
        }
    }

    fn goal_met(&mut self) -> bool {
        match self.goal.clone() {
            Goal::AllJoined(vs) => match vs.split_first() {
                None => true,
                Some((&first, rest)) => {
                    let r = self.links.find(first);
                    rest.iter().all(|&v| self.links.find(v) == r)
                }
            },
            Goal::JoinedToEnds { ends: (a, b), others } => {
                let (ra, rb) = (self.links.find(a), self.links.find(b));
                others.iter().all(|&v| {
                    let rv = self.links.find(v);
                    rv == ra || rv == rb
                })
            }
        }
    }
}

impl Semidecider for LinkageSearch<'_> {
    type Witness = u64;

    fn step(&mut self) -> SemiState<u64> {
        if self.halted {
            return SemiState::Halted(self.admitted);
        }
        self.steps += 1;
        if !self.goal_met() {
            let e = EdgeId(self.admitted);
            self.admitted += 1;
            if !self.removed.contains(&e) {
                if let Some(inc) = self.oracle.incidence(e) {
                    let (u, v) = inc.endpoints();
                    self.links.union(u, v);
                }
            }
        }
        if self.goal_met() {
            self.halted = true;
            SemiState::Halted(self.admitted)
        } else {
            SemiState::Running
        }
    }

    fn steps(&self) -> u64 {
        self.steps
    }
}
