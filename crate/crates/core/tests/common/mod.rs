//! Oracles shared by the integration tests. They are deliberately naive and
//! independent of the library's own algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use infinite_euler::{EdgeId, EdgeSet, GraphOracle, Incidence, VertexId};

/// `G(v,r,s)` by its definition: collect every trail of length `≤ r` over
/// the edges of index `≤ s` that visits `v` anywhere, and take the
/// subgraph its edges induce.
pub fn ball_by_enumeration(g: &dyn GraphOracle, v: u64, r: u64, s: u64) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let edges: Vec<Incidence> = (0..=s).filter_map(|e| g.incidence(EdgeId(e))).collect();
    let mut starts: BTreeSet<VertexId> = BTreeSet::new();
    for inc in &edges {
        let (a, b) = inc.endpoints();
        starts.insert(a);
        starts.insert(b);
    }
    let mut in_ball: BTreeSet<u64> = BTreeSet::new();
    let mut trail: Vec<u64> = Vec::new();
    for &start in &starts {
        walk(&edges, start, r, VertexId(v), start == VertexId(v), &mut trail, &mut in_ball);
    }
    let mut vertices = BTreeSet::new();
    for inc in &edges {
        if in_ball.contains(&inc.edge().0) {
            let (a, b) = inc.endpoints();
            vertices.insert(a.0);
            vertices.insert(b.0);
        }
    }
    (vertices, in_ball)
}

fn walk(
    edges: &[Incidence],
    at: VertexId,
    budget: u64,
    target: VertexId,
    seen_target: bool,
    trail: &mut Vec<u64>,
    out: &mut BTreeSet<u64>,
) {
    if seen_target {
        out.extend(trail.iter().copied());
    }
    if budget == 0 {
        return;
    }
    for inc in edges {
        let e = inc.edge().0;
        if trail.contains(&e) || !inc.is_incident(at) {
            continue;
        }
        let next = inc.other(at).expect("incident");
        trail.push(e);
        walk(edges, next, budget - 1, target, seen_target || next == target, trail, out);
        trail.pop();
    }
}

pub fn ids(v: &[u64]) -> EdgeSet {
    v.iter().map(|&e| EdgeId(e)).collect()
}

/// Runs the `infeuler` binary; returns exit code and stdout.
pub fn infeuler(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_infeuler")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("UTF-8 output"))
}

/// The CLI invocations with committed golden outputs.
pub const GOLDEN: [(&str, &[&str]); 3] = [
    ("stream_ray.out", &["stream", "--graph", "ray", "--mode", "one-way", "--count", "3"]),
    ("extendable_ray.out", &["extendable", "--graph", "ray", "--mode", "one-way", "--path", "1 1 2"]),
    ("ball_ray.out", &["ball", "--graph", "ray", "--vertex", "0", "--radius", "2", "--bound", "5"]),
];

pub fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden"))
}
