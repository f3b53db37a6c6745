//! Deciding whether a finite path extends to an infinite Eulerian path.
//!
//! A path extends to a one-way infinite Eulerian path in a graph satisfying
//! `E1` iff it is *right-extensible*:
//!
//! 1. `G − t` is connected,
//! 2. its initial vertex is distinguished,
//! 3. some edge at its final vertex is unvisited.
//!
//! It extends to a two-way infinite Eulerian path in a graph satisfying `E2`
//! iff it is *bi-extensible*:
//!
//! 1. `G − t` has no finite connected component,
//! 2. some edge `e` at the final vertex is unvisited,
//! 3. some edge `f ≠ e` at the initial vertex is unvisited.
//!
//! The endpoint conditions need only degree queries and incident-edge scans.
//! The global conditions are settled by racing two semideciders: one halts
//! on a finite component of `G − t`, the other halts once the vertices where
//! `t` was cut are seen to be joined up in `G − t`.

mod search;
mod semi;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::oracle::{incident_edges, validate_path, GraphDescription, GraphOracle};
use crate::path::FinitePath;
use crate::types::{Degree, EdgeId, EdgeSet, VertexId};

pub use search::{FiniteComponentSearch, FiniteWitness};
pub use semi::{SemiState, Semidecider};

pub(crate) use search::{Goal, LinkageSearch};
use semi::{also_halts, dovetail, Race};

/// Step budget applied when the graph does not declare the condition a
/// decider relies on.
pub const UNDECLARED_BUDGET: u64 = 1_000_000;

static AUDIT_CONFLICTS: AtomicU64 = AtomicU64::new(0);

/// Number of audited races, process wide, in which the losing semidecider
/// halted as well. Nonzero means the graph's declared conditions are false.
pub fn audit_conflicts() -> u64 {
    AUDIT_CONFLICTS.load(Ordering::Relaxed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Budget {
    /// Unlimited when the graph declares the relevant condition (halting is
    /// then guaranteed), [`UNDECLARED_BUDGET`] otherwise.
    #[default]
    Auto,
    Unlimited,
    Steps(u64),
}

impl Budget {
    fn limit(self, declared: bool) -> Option<u64> {
        match self {
            Budget::Auto if declared => None,
            Budget::Auto => Some(UNDECLARED_BUDGET),
            Budget::Unlimited => None,
            Budget::Steps(n) => Some(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepBudgetOutcome {
    Decided(bool),
    Exhausted(u64),
}

impl StepBudgetOutcome {
    pub fn decided(self) -> Option<bool> {
        match self {
            StepBudgetOutcome::Decided(b) => Some(b),
            StepBudgetOutcome::Exhausted(_) => None,
        }
    }
}

/// Outcome of one decider run with its bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: StepBudgetOutcome,
    /// Semidecider steps spent.
    pub steps: u64,
    /// The audit saw the losing semidecider halt too.
    pub conflict: bool,
}

impl Verdict {
    fn decided(answer: bool, steps: u64) -> Self {
        Verdict { outcome: StepBudgetOutcome::Decided(answer), steps, conflict: false }
    }
}

/// Vertex `v` with the caller's knowledge of whether the graph has an odd
/// vertex. That flag is declared metadata and is never computed.
#[derive(Clone, Copy)]
pub struct DistinguishedQuery<'a> {
    pub oracle: &'a dyn GraphOracle,
    pub vertex: VertexId,
    pub has_odd_vertex: bool,
}

/// In a graph satisfying `E1`: the odd vertex when there is one, otherwise
/// any vertex of infinite degree.
pub fn is_distinguished(q: &DistinguishedQuery<'_>) -> bool {
    match q.oracle.degree(q.vertex) {
        Some(d) if q.has_odd_vertex => d.is_odd(),
        Some(d) => d.is_infinite(),
        None => false,
    }
}

/// Endpoints of edges in `removed` that keep an incident edge outside it,
/// i.e. the vertices of `G − E` incident to some edge of `E`.
pub fn incident_survivors(oracle: &dyn GraphOracle, removed: &EdgeSet) -> Result<BTreeSet<VertexId>> {
    let mut endpoints = BTreeSet::new();
    for &e in removed {
        let inc = oracle.incidence(e).ok_or_else(|| Error::domain(format!("edge {e} is not an edge of the graph")))?;
        let (u, v) = inc.endpoints();
        endpoints.insert(u);
        endpoints.insert(v);
    }
    let mut out = BTreeSet::new();
    for v in endpoints {
        let keeps = match incident_edges(oracle, v)? {
            None => true,
            Some(edges) => edges.iter().any(|e| !removed.contains(e)),
        };
        if keeps {
            out.insert(v);
        }
    }
    Ok(out)
}

/// The semidecider halting iff `G − E` has a finite connected component.
pub fn finite_component_semidecider<'g>(
    oracle: &'g dyn GraphOracle,
    removed: &EdgeSet,
) -> Result<FiniteComponentSearch<'g>> {
    FiniteComponentSearch::new(oracle, removed)
}

/// Whether `G − E` is connected, for a connected graph with one end.
/// `budget = None` runs until decided.
pub fn connectivity_decider_one_end(
    oracle: &dyn GraphOracle,
    removed: &EdgeSet,
    budget: Option<u64>,
) -> Result<StepBudgetOutcome> {
    let survivors = incident_survivors(oracle, removed)?;
    Ok(connectivity_run(oracle, removed, &survivors, budget, 0)?.outcome)
}

fn record_audit<S: Semidecider>(loser: &mut S, extra: u64) -> bool {
    let conflict = extra > 0 && also_halts(loser, extra);
    if conflict {
        AUDIT_CONFLICTS.fetch_add(1, Ordering::Relaxed);
    }
    conflict
}

fn connectivity_run(
    oracle: &dyn GraphOracle,
    removed: &EdgeSet,
    survivors: &BTreeSet<VertexId>,
    limit: Option<u64>,
    audit: u64,
) -> Result<Verdict> {
    if removed.is_empty() || survivors.len() <= 1 {
        return Ok(Verdict::decided(true, 0));
    }
    let mut finite = FiniteComponentSearch::new(oracle, removed)?;
    let mut linkage = LinkageSearch::new(oracle, removed, Goal::AllJoined(survivors.iter().copied().collect()));
    let (race, steps) = dovetail(&mut finite, &mut linkage, limit);
    Ok(match race {
        Race::First(_) => Verdict { conflict: record_audit(&mut linkage, audit), ..Verdict::decided(false, steps) },
        Race::Second(_) => Verdict { conflict: record_audit(&mut finite, audit), ..Verdict::decided(true, steps) },
        Race::Exhausted => Verdict { outcome: StepBudgetOutcome::Exhausted(steps), steps, conflict: false },
    })
}

/// Unvisited edge incidences at a vertex.
enum Unvisited {
    Infinite,
    /// `(edge, multiplicity at the vertex)`.
    Finite(Vec<(EdgeId, u64)>),
}

fn unvisited_at(oracle: &dyn GraphOracle, v: VertexId, visited: &EdgeSet) -> Result<Unvisited> {
    Ok(match incident_edges(oracle, v)? {
        None => Unvisited::Infinite,
        Some(edges) => Unvisited::Finite(
            edges
                .into_iter()
                .filter(|e| !visited.contains(e))
                .map(|e| {
                    let inc = oracle.incidence(e).expect("incident edge exists");
                    (e, inc.multiplicity_at(v))
                })
                .collect(),
        ),
    })
}

/// Conditions (2) and (3) of bi-extensibility. When the path is closed both
/// conditions draw on the same vertex, which then needs two unvisited edge
/// incidences; a single unvisited loop supplies two.
fn bi_endpoints_ok(oracle: &dyn GraphOracle, t: &FinitePath, visited: &EdgeSet) -> Result<bool> {
    if t.is_circuit() {
        return Ok(match unvisited_at(oracle, t.initial(), visited)? {
            Unvisited::Infinite => true,
            Unvisited::Finite(list) => list.iter().map(|&(_, m)| m).sum::<u64>() >= 2,
        });
    }
    let at_start = unvisited_at(oracle, t.initial(), visited)?;
    let at_end = unvisited_at(oracle, t.terminal(), visited)?;
    Ok(match (at_start, at_end) {
        (Unvisited::Infinite, Unvisited::Infinite) => true,
        (Unvisited::Infinite, Unvisited::Finite(f)) | (Unvisited::Finite(f), Unvisited::Infinite) => !f.is_empty(),
        (Unvisited::Finite(s), Unvisited::Finite(f)) => {
            !s.is_empty() && !f.is_empty() && !(s.len() == 1 && f.len() == 1 && s[0].0 == f[0].0)
        }
    })
}

/// Configurable runner for the extensibility deciders.
#[derive(Clone, Copy)]
pub struct Decider<'g> {
    graph: &'g GraphDescription,
    budget: Budget,
    audit: u64,
}

impl<'g> Decider<'g> {
    pub fn new(graph: &'g GraphDescription) -> Self {
        Decider { graph, budget: Budget::Auto, audit: 0 }
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    /// After a race is won, keep stepping the loser this many more steps and
    /// flag a conflict if it halts as well.
    pub fn audit(mut self, extra_steps: u64) -> Self {
        self.audit = extra_steps;
        self
    }

    /// Right-extensibility, for graphs declared to satisfy `E1`. The cheap
    /// endpoint conditions are checked before connectivity of `G − t`.
    pub fn right_extensible(&self, t: &FinitePath) -> Result<Verdict> {
        let oracle = self.graph.oracle();
        validate_path(oracle, t)?;
        let limit = self.budget.limit(self.graph.conditions().e1);

        let start = DistinguishedQuery { oracle, vertex: t.initial(), has_odd_vertex: self.graph.has_odd_vertex() };
        if !is_distinguished(&start) {
            return Ok(Verdict::decided(false, 0));
        }
        let visited = t.edge_set();
        if visited.is_empty() {
            let alive = oracle.degree(t.terminal()) != Some(Degree::Finite(0));
            return Ok(Verdict::decided(alive, 0));
        }
        let survivors = incident_survivors(oracle, &visited)?;
        if !survivors.contains(&t.terminal()) {
            return Ok(Verdict::decided(false, 0));
        }
        connectivity_run(oracle, &visited, &survivors, limit, self.audit)
    }

    /// Bi-extensibility, for graphs declared to satisfy `E2`. The global
    /// condition races the finite-component search against a search joining
    /// every other cut vertex to the initial or the final vertex of `t`.
    pub fn bi_extensible(&self, t: &FinitePath) -> Result<Verdict> {
        let oracle = self.graph.oracle();
        validate_path(oracle, t)?;
        let limit = self.budget.limit(self.graph.conditions().e2);

        let visited = t.edge_set();
        if !bi_endpoints_ok(oracle, t, &visited)? {
            return Ok(Verdict::decided(false, 0));
        }
        if visited.is_empty() {
            return Ok(Verdict::decided(true, 0));
        }
        let survivors = incident_survivors(oracle, &visited)?;
        let (first, last) = (t.initial(), t.terminal());
        let others = survivors.iter().copied().filter(|&v| v != first && v != last).collect();

        let mut finite = FiniteComponentSearch::new(oracle, &visited)?;
        let mut linkage = LinkageSearch::new(oracle, &visited, Goal::JoinedToEnds { ends: (first, last), others });
        let (race, steps) = dovetail(&mut finite, &mut linkage, limit);
        Ok(match race {
            Race::First(_) => {
                Verdict { conflict: record_audit(&mut linkage, self.audit), ..Verdict::decided(false, steps) }
            }
            Race::Second(_) => {
                Verdict { conflict: record_audit(&mut finite, self.audit), ..Verdict::decided(true, steps) }
            }
            Race::Exhausted => Verdict { outcome: StepBudgetOutcome::Exhausted(steps), steps, conflict: false },
        })
    }
}

/// Whether `t` extends to a one-way infinite Eulerian path of `g`.
pub fn is_right_extensible(g: &GraphDescription, t: &FinitePath, budget: Budget) -> Result<StepBudgetOutcome> {
    Ok(Decider::new(g).budget(budget).right_extensible(t)?.outcome)
}

/// Whether `t` extends to a two-way infinite Eulerian path of `g`.
pub fn is_bi_extensible(g: &GraphDescription, t: &FinitePath, budget: Budget) -> Result<StepBudgetOutcome> {
    Ok(Decider::new(g).budget(budget).bi_extensible(t)?.outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::families::{family_fat_ray, family_line, family_loop_star, family_ray};

    fn set(ids: &[u64]) -> EdgeSet {
        ids.iter().map(|&e| EdgeId(e)).collect()
    }

    fn path(tokens: &[u64]) -> FinitePath {
        FinitePath::from_tokens(0, tokens).unwrap()
    }

    fn vs(ids: &[u64]) -> BTreeSet<VertexId> {
        ids.iter().map(|&v| VertexId(v)).collect()
    }

    #[test]
    fn survivors_examples() {
        let ray = family_ray();
        assert_eq!(incident_survivors(ray.oracle(), &set(&[1])).unwrap(), vs(&[1, 2]));
        assert_eq!(incident_survivors(ray.oracle(), &set(&[0])).unwrap(), vs(&[1]));
        let star = family_loop_star();
        assert_eq!(incident_survivors(star.oracle(), &set(&[0])).unwrap(), vs(&[0]));
    }

    #[test]
    fn distinguished_examples() {
        let ray = family_ray();
        let q = |v| DistinguishedQuery { oracle: ray.oracle(), vertex: VertexId(v), has_odd_vertex: true };
        assert!(is_distinguished(&q(0)));
        assert!(!is_distinguished(&q(1)));
        let star = family_loop_star();
        assert!(is_distinguished(&DistinguishedQuery {
            oracle: star.oracle(),
            vertex: VertexId(0),
            has_odd_vertex: false
        }));
    }

    #[test]
    fn connectivity_examples() {
        let ray = family_ray();
        assert_eq!(
            connectivity_decider_one_end(ray.oracle(), &set(&[0]), None).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
        assert_eq!(
            connectivity_decider_one_end(ray.oracle(), &set(&[1]), None).unwrap(),
            StepBudgetOutcome::Decided(false)
        );
        let star = family_loop_star();
        assert_eq!(
            connectivity_decider_one_end(star.oracle(), &set(&[0, 5]), None).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
    }

    #[test]
    fn right_extensible_examples() {
        let ray = family_ray();
        assert_eq!(
            is_right_extensible(&ray, &path(&[0, 0, 1, 1, 2]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
        assert_eq!(
            is_right_extensible(&ray, &path(&[1, 1, 2]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(false)
        );
        assert_eq!(
            is_right_extensible(&ray, &FinitePath::trivial(0, VertexId(0)), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
    }

    #[test]
    fn bi_extensible_examples() {
        assert_eq!(
            is_bi_extensible(&family_line(), &path(&[0, 0, 2]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
        assert_eq!(
            is_bi_extensible(&family_loop_star(), &path(&[0, 0, 0]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
        assert_eq!(
            is_bi_extensible(&family_fat_ray(), &path(&[1, 2, 2, 3, 1]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(false)
        );
    }

    #[test]
    fn invalid_paths_are_domain_errors() {
        let ray = family_ray();
        assert!(is_right_extensible(&ray, &path(&[0, 1, 1]), Budget::Auto).is_err());
        assert!(incident_survivors(family_loop_star().oracle(), &set(&[])).unwrap().is_empty());
    }

    #[test]
    fn fat_ray_endpoint_edge_cases() {
        let fat = family_fat_ray();
        // [0 A0 1]: the only unvisited edge at 0 is B0, and 1 has B0, A1, B1.
        assert_eq!(is_bi_extensible(&fat, &path(&[0, 0, 1]), Budget::Auto).unwrap(), StepBudgetOutcome::Decided(true));
        // [1 A0 0 B0 1]: closed at 1, which keeps A1 and B1; G − t is the
        // fat ray from 1 with no finite component, so it is bi-extensible.
        assert_eq!(
            is_bi_extensible(&fat, &path(&[1, 0, 0, 1, 1]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(true)
        );
        // [0 A0 1 B0 0]: vertex 0 is used up.
        assert_eq!(
            is_bi_extensible(&fat, &path(&[0, 0, 1, 1, 0]), Budget::Auto).unwrap(),
            StepBudgetOutcome::Decided(false)
        );
    }

    #[test]
    fn exhausted_on_tiny_budget() {
        let ray = family_ray();
        let out = Decider::new(&ray).budget(Budget::Steps(1)).right_extensible(&path(&[0, 0, 1, 1, 2])).unwrap();
        // Survivor set {2} decides without any race.
        assert_eq!(out.outcome, StepBudgetOutcome::Decided(true));
        let fat = family_fat_ray();
        let out = Decider::new(&fat).budget(Budget::Steps(3)).bi_extensible(&path(&[1, 2, 2, 3, 1])).unwrap();
        assert_eq!(out.outcome, StepBudgetOutcome::Exhausted(3));
    }
}
