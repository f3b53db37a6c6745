//! Property harnesses: an exhaustive finite corpus, prefix validation and
//! cross-checks between independent ways of answering the same question.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::deciders::{
    audit_conflicts, connectivity_decider_one_end, incident_survivors, is_distinguished, Decider, DistinguishedQuery,
    FiniteComponentSearch, SemiState, Semidecider, StepBudgetOutcome,
};
use crate::error::Result;
use crate::finite::{brute_force_euler, eulerian_finite, parity_feasible, FiniteMultigraph};
use crate::oracle::families::{self, family_fat_ray, family_line, family_loop_star, family_ray};
use crate::oracle::{ball, validate_path, Conditions, GraphDescription, GraphOracle, Metadata};
use crate::path::FinitePath;
use crate::stream::{one_way_stream, two_way_stream, Mode, Side};
use crate::types::{Degree, EdgeId, EdgeSet, Incidence, VertexId};

/// Number of graphs [`finite_corpus`] produces.
pub const CORPUS_SIZE: usize = 953;

/// Extra steps granted to the losing semidecider when races are audited.
pub const AUDIT_STEPS: u64 = 500;

const SHOWN_FAILURES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub checked: u64,
    /// One reproducer per failed instance.
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn new(name: impl Into<String>) -> Self {
        PropertyReport { name: name.into(), checked: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, repro: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(repro());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The machine-readable summary line.
    pub fn summary(&self) -> String {
        format!(
            "PROP {} {} checked={} failures={}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len()
        )
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())?;
        for repro in self.failures.iter().take(SHOWN_FAILURES) {
            write!(f, "\n  repro: {repro}")?;
        }
        if self.failures.len() > SHOWN_FAILURES {
            write!(f, "\n  ... {} more", self.failures.len() - SHOWN_FAILURES)?;
        }
        Ok(())
    }
}

fn show_graph(h: &FiniteMultigraph) -> String {
    let edges: Vec<String> = h
        .edges()
        .map(|inc| {
            let (a, b) = inc.endpoints();
            format!("{}:{a}-{b}", inc.edge())
        })
        .collect();
    format!("{{{}}}", edges.join(" "))
}

/// Every connected multigraph on vertex set `{0,…,n−1}`, `1 ≤ n ≤ 4`, with
/// one to five edges, loops and parallel edges allowed. Graphs are labeled:
/// two graphs are the same when they have the same multiset of endpoint
/// pairs, and edge ids follow the sorted order of that multiset. Ordered by
/// vertex count, edge count, then the multiset.
pub fn finite_corpus() -> Vec<FiniteMultigraph> {
    let mut out = Vec::new();
    for n in 1..=4u64 {
        let pairs: Vec<(u64, u64)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        for k in 1..=5usize {
            multisets(pairs.len(), k, &mut Vec::new(), 0, &mut |choice| {
                let h = FiniteMultigraph::from_incidences(choice.iter().enumerate().map(|(e, &p)| {
                    let (u, v) = pairs[p];
                    Incidence::new(EdgeId(e as u64), VertexId(u), VertexId(v))
                }));
                if h.num_vertices() == n as usize && h.is_connected() {
                    out.push(h);
                }
            });
        }
    }
    out
}

/// Non-decreasing index sequences of length `k` over `0..choices`.
fn multisets(choices: usize, k: usize, acc: &mut Vec<usize>, from: usize, f: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for c in from..choices {
        acc.push(c);
        multisets(choices, k, acc, c, f);
        acc.pop();
    }
}

fn is_eulerian_in(h: &FiniteMultigraph, t: &FinitePath, from: VertexId, to: VertexId) -> bool {
    t.validate_with(|e| h.incidence(e)).is_ok()
        && t.edge_set() == h.edge_ids()
        && t.initial() == from
        && t.terminal() == to
}

/// Agreement of the parity predicate, Hierholzer's construction and brute
/// force on `h`, for circuits at every vertex and every ordered pair of
/// distinct endpoints. Constructed paths are validated as well.
pub fn crosscheck_euler(h: &FiniteMultigraph) -> PropertyReport {
    let mut report = PropertyReport::new("euler_equivalence");
    let vertices: Vec<VertexId> = h.vertices().collect();
    for &from in &vertices {
        for &to in &vertices {
            let parity = parity_feasible(h, from, to);
            let built = eulerian_finite(h, Some(from), Some(to));
            let brute = brute_force_euler(h, Some(from), Some(to));
            let built_ok = built.as_ref().is_ok_and(|t| is_eulerian_in(h, t, from, to));
            let brute_ok = match &brute {
                Ok(paths) => paths.iter().all(|t| is_eulerian_in(h, t, from, to)),
                Err(_) => false,
            };
            let brute_nonempty = brute.as_ref().is_ok_and(|p| !p.is_empty());
            let agree = parity == built.is_ok() && parity == brute_nonempty && brute_ok && (built.is_err() || built_ok);
            report.record(agree, || {
                format!(
                    "graph {} from {from} to {to}: parity={parity} hierholzer={} brute={}",
                    show_graph(h),
                    built.is_ok(),
                    brute.as_ref().map_or(-1, |p| p.len() as i64)
                )
            });
        }
    }
    report
}

/// [`crosscheck_euler`] over every graph of `corpus`.
pub fn euler_on_corpus(corpus: &[FiniteMultigraph]) -> PropertyReport {
    let mut report = PropertyReport::new("euler_equivalence");
    for h in corpus {
        let r = crosscheck_euler(h);
        report.checked += r.checked;
        report.failures.extend(r.failures);
    }
    report
}

pub fn corpus_size(corpus: &[FiniteMultigraph]) -> PropertyReport {
    let mut report = PropertyReport::new("corpus_size");
    report.record(corpus.len() == CORPUS_SIZE, || format!("expected {CORPUS_SIZE} graphs, got {}", corpus.len()));
    report
}

/// Handshaking on every corpus graph, every graph obtained by removing a
/// subset of its edges and every component of those.
pub fn handshaking(corpus: &[FiniteMultigraph]) -> PropertyReport {
    let mut report = PropertyReport::new("handshaking");
    for h in corpus {
        let ids: Vec<EdgeId> = h.edge_ids().into_iter().collect();
        for mask in 0u32..(1 << ids.len()) {
            let removed: EdgeSet =
                ids.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
            let rest = h.remove_edges(&removed);
            report.record(rest.handshake_check(), || format!("graph {} minus {removed:?}", show_graph(h)));
            for comp in rest.components() {
                report.record(comp.handshake_check(), || format!("component of {} minus {removed:?}", show_graph(h)));
            }
        }
    }
    report
}

/// Validates a stream prefix: path invariants in `g`, no repeated edge and
/// acceptance by the decider matching `mode`.
pub fn check_prefix(g: &GraphDescription, prefix: &FinitePath, mode: Mode) -> PropertyReport {
    let mut report = PropertyReport::new("check_prefix");
    let valid = validate_path(g.oracle(), prefix);
    report.record(valid.is_ok(), || format!("{} on {}: {}", prefix, g.name(), valid.as_ref().unwrap_err()));
    report.record(prefix.edge_set().len() == prefix.len(), || format!("{prefix} repeats an edge"));
    if valid.is_ok() {
        let decider = Decider::new(g).audit(AUDIT_STEPS);
        let verdict = match mode {
            Mode::OneWay => decider.right_extensible(prefix),
            Mode::TwoWay => decider.bi_extensible(prefix),
        };
        let accepted = verdict.as_ref().is_ok_and(|v| v.outcome == StepBudgetOutcome::Decided(true) && !v.conflict);
        report.record(accepted, || format!("{prefix} on {}: decider returned {verdict:?}", g.name()));
    }
    report
}

/// [`check_prefix`] on a raw token list `v0 e0 v1 … vk`, so that malformed
/// prefixes (a repeated edge, say) are reported rather than unrepresentable.
pub fn check_tokens(g: &GraphDescription, base: i64, tokens: &[u64], mode: Mode) -> PropertyReport {
    match FinitePath::from_tokens(base, tokens) {
        Ok(t) => check_prefix(g, &t, mode),
        Err(e) => {
            let mut report = PropertyReport::new("check_prefix");
            report.record(false, || format!("{tokens:?} on {}: {e}", g.name()));
            report
        }
    }
}

/// The (graph, mode) pairs for which the built-in families declare the
/// matching condition.
pub fn stream_targets() -> Vec<(GraphDescription, Mode)> {
    vec![
        (family_ray(), Mode::OneWay),
        (family_loop_star(), Mode::OneWay),
        (family_loop_star(), Mode::TwoWay),
        (family_line(), Mode::TwoWay),
        (family_fat_ray(), Mode::TwoWay),
    ]
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::OneWay => "one-way",
        Mode::TwoWay => "two-way",
    }
}

/// Runs `stages` stages; after each one the prefix must pass
/// [`check_prefix`] and visit `e_0,…,e_n`, and a two-way prefix must have
/// grown at both ends.
pub fn stream_stages(g: &GraphDescription, mode: Mode, stages: u64) -> PropertyReport {
    let mut report = PropertyReport::new(format!("stream_stages[{}/{}]", g.name(), mode_name(mode)));
    let stream = match mode {
        Mode::OneWay => one_way_stream(g, None),
        Mode::TwoWay => two_way_stream(g),
    };
    let mut stream = match stream {
        Ok(s) => s.with_audit(AUDIT_STEPS),
        Err(e) => {
            report.record(false, || format!("cannot start: {e}"));
            return report;
        }
    };
    let edges: Vec<EdgeId> = (0..).filter(|&n| g.oracle().is_edge(n)).take(stages as usize).map(EdgeId).collect();
    let mut span: Option<(i64, i64)> = None;
    for n in 0..stages as usize {
        if let Err(e) = stream.advance_stage() {
            report.record(false, || format!("stage {n}: {e}"));
            return report;
        }
        let t = stream.prefix().expect("a stage ran").clone();
        let inner = check_prefix(g, &t, mode);
        report.checked += inner.checked;
        report.failures.extend(inner.failures.into_iter().map(|f| format!("stage {n}: {f}")));
        report.record(edges[..=n].iter().all(|&e| t.visits_edge(e)), || {
            format!("stage {n}: {t} misses some of e_0..e_{n}")
        });
        if mode == Mode::TwoWay {
            if let Some((b, e)) = span {
                report.record(t.base() < b && t.end() > e, || format!("stage {n}: {t} did not grow at both ends"));
            }
            span = Some((t.base(), t.end()));
        }
    }
    report
}

/// Pulls `count` edges (alternating sides in two-way mode) and checks that
/// no edge repeats and consecutive pulls on each side chain through shared
/// vertices.
pub fn stream_pulls(g: &GraphDescription, mode: Mode, count: usize) -> PropertyReport {
    let mut report = PropertyReport::new(format!("stream_pulls[{}/{}]", g.name(), mode_name(mode)));
    let started = match mode {
        Mode::OneWay => one_way_stream(g, None),
        Mode::TwoWay => two_way_stream(g),
    };
    let mut stream = match started {
        Ok(s) => s,
        Err(e) => {
            report.record(false, || format!("cannot start: {e}"));
            return report;
        }
    };
    let origin = match stream.origin() {
        Ok(v) => v,
        Err(e) => {
            report.record(false, || format!("no origin: {e}"));
            return report;
        }
    };
    let mut seen = BTreeSet::new();
    let (mut right_at, mut left_at) = (origin, origin);
    for k in 0..count {
        let side = if mode == Mode::TwoWay && k % 2 == 1 { Side::Left } else { Side::Right };
        let step = match stream.next_edge(side) {
            Ok(s) => s,
            Err(e) => {
                report.record(false, || format!("pull {k}: {e}"));
                return report;
            }
        };
        let from = if side == Side::Right { &mut right_at } else { &mut left_at };
        let chained = g.oracle().incidence(step.edge).is_some_and(|inc| inc.joins(*from, step.vertex));
        report.record(chained, || format!("pull {k}: edge {} does not join {} and {}", step.edge, from, step.vertex));
        report.record(seen.insert(step.edge), || format!("pull {k}: edge {} repeated", step.edge));
        *from = step.vertex;
    }
    report
}

/// The ray with an extra edge `g` parallel to its first edge: `g` has index
/// 0 and the ray edge joining `i` and `i+1` has index `i + 1`. Vertex 1 is
/// the only odd vertex.
#[derive(Debug, Clone, Copy, Default)]
pub struct SpurRay;

impl GraphOracle for SpurRay {
    fn is_vertex(&self, _n: u64) -> bool {
        true
    }

    fn is_edge(&self, _n: u64) -> bool {
        true
    }

    fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        Some(match e.0 {
            0 => Incidence::new(e, VertexId(0), VertexId(1)),
            i => Incidence::new(e, VertexId(i - 1), VertexId(i)),
        })
    }

    fn degree(&self, v: VertexId) -> Option<Degree> {
        Some(Degree::Finite(if v.0 == 1 { 3 } else { 2 }))
    }

    fn scan_bound(&self, v: VertexId) -> Option<u64> {
        Some(v.0 + 1)
    }
}

pub fn spur_ray() -> GraphDescription {
    GraphDescription::new(
        Arc::new(SpurRay),
        Metadata { name: "spur_ray".to_string(), has_odd_vertex: true, conditions: Conditions::E1 },
    )
}

fn ids(v: &[u64]) -> EdgeSet {
    v.iter().map(|&e| EdgeId(e)).collect()
}

fn verts(v: &[u64]) -> BTreeSet<VertexId> {
    v.iter().map(|&x| VertexId(x)).collect()
}

/// Runs a finite-component search for at most `steps` steps.
fn finite_search(g: &GraphDescription, removed: &[u64], steps: u64) -> Result<Option<BTreeSet<VertexId>>> {
    let mut s = FiniteComponentSearch::new(g.oracle(), &ids(removed))?;
    for _ in 0..steps {
        if let SemiState::Halted(w) = s.step() {
            return Ok(Some(w.component.vertex_set().clone()));
        }
    }
    Ok(None)
}

/// One hand-derived decider case: a description and whether it reproduced.
pub struct Case {
    pub name: &'static str,
    pub holds: bool,
}

/// The hand-derived decider and ball cases, each with its expected answer.
pub fn decider_cases() -> Vec<Case> {
    let ray = family_ray();
    let line = family_line();
    let star = family_loop_star();
    let fat = family_fat_ray();
    let spur = spur_ray();
    let path = |tokens: &[u64]| FinitePath::from_tokens(0, tokens).expect("well-formed case");
    let right =
        |g: &GraphDescription, tokens: &[u64]| Decider::new(g).right_extensible(&path(tokens)).map(|v| v.outcome);
    let bi = |g: &GraphDescription, tokens: &[u64]| Decider::new(g).bi_extensible(&path(tokens)).map(|v| v.outcome);
    let yes = Some(StepBudgetOutcome::Decided(true));
    let no = Some(StepBudgetOutcome::Decided(false));
    let dist = |g: &GraphDescription, v: u64| {
        is_distinguished(&DistinguishedQuery {
            oracle: g.oracle(),
            vertex: VertexId(v),
            has_odd_vertex: g.has_odd_vertex(),
        })
    };
    let conn = |g: &GraphDescription, e: &[u64]| connectivity_decider_one_end(g.oracle(), &ids(e), Some(100_000)).ok();
    let ball_is = |g: &GraphDescription, v: u64, r: u64, s: u64, vs: &[u64], es: &[u64]| {
        ball(g.oracle(), VertexId(v), r, s).is_ok_and(|b| *b.vertex_set() == verts(vs) && b.edge_ids() == ids(es))
    };

    let cases = [
        ("survivors ray {e1} = {1,2}", incident_survivors(ray.oracle(), &ids(&[1])).ok() == Some(verts(&[1, 2]))),
        ("survivors ray {e0} = {1}", incident_survivors(ray.oracle(), &ids(&[0])).ok() == Some(verts(&[1]))),
        ("survivors loop_star {e0} = {0}", incident_survivors(star.oracle(), &ids(&[0])).ok() == Some(verts(&[0]))),
        ("finite component ray {e1} = {0,1}", finite_search(&ray, &[1], 100_000).ok() == Some(Some(verts(&[0, 1])))),
        ("finite component ray {e0} running at 10^4", finite_search(&ray, &[0], 10_000).ok() == Some(None)),
        (
            "finite component fat_ray {A2,B2} = {0,1,2}",
            finite_search(&fat, &[4, 5], 100_000).ok() == Some(Some(verts(&[0, 1, 2]))),
        ),
        ("connectivity ray {e0} true", conn(&ray, &[0]) == Some(StepBudgetOutcome::Decided(true))),
        ("connectivity ray {e1} false", conn(&ray, &[1]) == Some(StepBudgetOutcome::Decided(false))),
        ("connectivity loop_star {e0,e5} true", conn(&star, &[0, 5]) == Some(StepBudgetOutcome::Decided(true))),
        ("distinguished ray 0", dist(&ray, 0)),
        ("not distinguished ray 1", !dist(&ray, 1)),
        ("distinguished loop_star 0", dist(&star, 0)),
        ("right-extensible ray [0 e0 1 e1 2]", right(&ray, &[0, 0, 1, 1, 2]).ok() == yes),
        ("not right-extensible ray [1 e1 2]", right(&ray, &[1, 1, 2]).ok() == no),
        ("not right-extensible spur_ray [1 e1 2]", right(&spur, &[1, 2, 2]).ok() == no),
        ("bi-extensible line [0 f0 1]", bi(&line, &[families::zeta(0), 0, families::zeta(1)]).ok() == yes),
        ("bi-extensible loop_star [0 e0 0]", bi(&star, &[0, 0, 0]).ok() == yes),
        ("not bi-extensible fat_ray [1 A1 2 B1 1]", bi(&fat, &[1, 2, 2, 3, 1]).ok() == no),
        ("ball ray (0,2,5)", ball_is(&ray, 0, 2, 5, &[0, 1, 2], &[0, 1])),
        ("ball ray (3,1,10)", ball_is(&ray, 3, 1, 10, &[2, 3, 4], &[2, 3])),
        ("ball loop_star (0,1,2)", ball_is(&star, 0, 1, 2, &[0], &[0, 1, 2])),
    ];
    cases.into_iter().map(|(name, holds)| Case { name, holds }).collect()
}

pub fn decider_ground_truth() -> PropertyReport {
    let mut report = PropertyReport::new("decider_ground_truth");
    for case in decider_cases() {
        report.record(case.holds, || case.name.to_string());
    }
    report
}

/// Fails if any audited race so far saw both semideciders halt.
pub fn dovetail_exclusivity() -> PropertyReport {
    let mut report = PropertyReport::new("dovetail_exclusivity");
    let conflicts = audit_conflicts();
    report.record(conflicts == 0, || format!("{conflicts} audited races had both semideciders halt"));
    report
}

/// Every harness, in a fixed order.
pub fn run_all() -> Vec<PropertyReport> {
    let corpus = finite_corpus();
    let mut reports =
        vec![corpus_size(&corpus), euler_on_corpus(&corpus), handshaking(&corpus), decider_ground_truth()];
    for (g, mode) in stream_targets() {
        reports.push(stream_stages(&g, mode, 40));
        reports.push(stream_pulls(&g, mode, 200));
    }
    reports.push(dovetail_exclusivity());
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_contains_small_cases() {
        let corpus = finite_corpus();
        let single_loop = FiniteMultigraph::from_incidences([Incidence::new(EdgeId(0), VertexId(0), VertexId(0))]);
        let doubled = FiniteMultigraph::from_incidences([
            Incidence::new(EdgeId(0), VertexId(0), VertexId(1)),
            Incidence::new(EdgeId(1), VertexId(0), VertexId(1)),
        ]);
        assert!(corpus.contains(&single_loop));
        assert!(corpus.contains(&doubled));
        assert_eq!(corpus.len(), CORPUS_SIZE);
    }

    #[test]
    fn crosscheck_small_examples() {
        let tri = FiniteMultigraph::from_incidences([
            Incidence::new(EdgeId(0), VertexId(0), VertexId(1)),
            Incidence::new(EdgeId(1), VertexId(1), VertexId(2)),
            Incidence::new(EdgeId(2), VertexId(0), VertexId(2)),
        ]);
        assert!(crosscheck_euler(&tri).passed());
        assert!(parity_feasible(&tri, VertexId(0), VertexId(0)));
        let star =
            FiniteMultigraph::from_incidences((0..3).map(|i| Incidence::new(EdgeId(i), VertexId(0), VertexId(i + 1))));
        assert!(crosscheck_euler(&star).passed());
        assert!(eulerian_finite(&star, None, None).is_err());
    }

    #[test]
    fn check_prefix_examples() {
        let ray = family_ray();
        let good = FinitePath::from_tokens(0, &[0, 0, 1, 1, 2]).unwrap();
        assert!(check_prefix(&ray, &good, Mode::OneWay).passed());
        let bad_start = FinitePath::from_tokens(0, &[1, 1, 2]).unwrap();
        assert!(!check_prefix(&ray, &bad_start, Mode::OneWay).passed());
        let repeat = check_tokens(&ray, 0, &[0, 0, 1, 0, 0], Mode::OneWay);
        assert_eq!(repeat.failures.len(), 1);
        assert!(repeat.failures[0].contains("edge 0 is visited twice"), "{repeat}");
    }

    #[test]
    fn spur_ray_is_consistent() {
        let g = spur_ray();
        assert_eq!(
            crate::oracle::incident_edges(g.oracle(), VertexId(1)).unwrap(),
            Some(vec![EdgeId(0), EdgeId(1), EdgeId(2)])
        );
        assert_eq!(crate::oracle::incident_edges(g.oracle(), VertexId(0)).unwrap(), Some(vec![EdgeId(0), EdgeId(1)]));
    }

    #[test]
    fn report_line_format() {
        let mut r = PropertyReport::new("x");
        r.record(true, String::new);
        assert_eq!(r.summary(), "PROP x PASS checked=1 failures=0");
        r.record(false, || "boom".into());
        assert_eq!(r.to_string(), "PROP x FAIL checked=2 failures=1\n  repro: boom");
    }
}
