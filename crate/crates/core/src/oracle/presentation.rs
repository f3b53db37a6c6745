//! Line-oriented presentation files: built-in aliases and periodic graphs.
//!
//! ```text
//! family periodic
//! orientation one_way
//! cell_vertices 1
//! link_edge 0 0
//! odd_vertex true
//! conditions E1
//! ```
//!
//! A periodic graph repeats a cell of `n` vertices along ℕ (`one_way`) or ℤ
//! (`two_way`, cells numbered through [`zeta`]). Vertex `u` of cell `c` has
//! id `c·n + u`, shifted by one when a hub is present (the hub is vertex 0).
//! Each cell owns `m` edges: its `cell_edge`s, then its `link_edge`s towards
//! the next cell, then the hub edge; edge `j` of cell `c` has id `c·m + j`.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::families::{builtin, zeta, zeta_inv};
use super::{Conditions, GraphDescription, GraphOracle, Metadata};
use crate::error::{Error, Result};
use crate::finite::FiniteMultigraph;
use crate::types::{Degree, EdgeId, Incidence, VertexId};

#[derive(Debug, Clone)]
struct Periodic {
    two_way: bool,
    n: u64,
    cell_edges: Vec<(u64, u64)>,
    link_edges: Vec<(u64, u64)>,
    hub: bool,
}

impl Periodic {
    fn per_cell(&self) -> u64 {
        (self.cell_edges.len() + self.link_edges.len()) as u64 + u64::from(self.hub)
    }

    fn shift(&self) -> u64 {
        u64::from(self.hub)
    }

    /// Cell index → position along ℕ or ℤ.
    fn position(&self, cell: u64) -> i64 {
        if self.two_way {
            zeta_inv(cell)
        } else {
            cell as i64
        }
    }

    fn cell(&self, position: i64) -> Option<u64> {
        if self.two_way {
            Some(zeta(position))
        } else {
            u64::try_from(position).ok()
        }
    }

    fn vid(&self, cell: u64, u: u64) -> VertexId {
        VertexId(self.shift() + cell * self.n + u)
    }

    /// `(cell, local vertex)` of a non-hub vertex.
    fn locate(&self, v: VertexId) -> Option<(u64, u64)> {
        let w = v.0.checked_sub(self.shift())?;
        Some((w / self.n, w % self.n))
    }

    fn is_hub(&self, v: VertexId) -> bool {
        self.hub && v.0 == 0
    }

    /// Degree of local vertex `u` in a cell at `position`.
    fn local_degree(&self, position: i64, u: u64) -> u64 {
        let mut d = 0;
        for &(a, b) in &self.cell_edges {
            d += u64::from(a == u) + u64::from(b == u);
        }
        for &(a, _) in &self.link_edges {
            d += u64::from(a == u);
        }
        if self.cell(position - 1).is_some() {
            for &(_, b) in &self.link_edges {
                d += u64::from(b == u);
            }
        }
        if self.hub && u == 0 {
            d += 1;
        }
        d
    }
}

impl GraphOracle for Periodic {
    fn is_vertex(&self, _n: u64) -> bool {
        true
    }

    fn is_edge(&self, _n: u64) -> bool {
        self.per_cell() > 0
    }

    fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        let m = self.per_cell();
        if m == 0 {
            return None;
        }
        let (cell, j) = (e.0 / m, (e.0 % m) as usize);
        let ce = self.cell_edges.len();
        let le = self.link_edges.len();
        Some(if j < ce {
            let (a, b) = self.cell_edges[j];
            Incidence::new(e, self.vid(cell, a), self.vid(cell, b))
        } else if j < ce + le {
            let (a, b) = self.link_edges[j - ce];
            let next = self.cell(self.position(cell) + 1).expect("successor cell exists");
            Incidence::new(e, self.vid(cell, a), self.vid(next, b))
        } else {
            Incidence::new(e, VertexId(0), self.vid(cell, 0))
        })
    }

    fn degree(&self, v: VertexId) -> Option<Degree> {
        if self.is_hub(v) {
            return Some(Degree::Infinite);
        }
        let (cell, u) = self.locate(v)?;
        Some(Degree::Finite(self.local_degree(self.position(cell), u)))
    }

    fn scan_bound(&self, v: VertexId) -> Option<u64> {
        if self.is_hub(v) {
            return None;
        }
        let (cell, _) = self.locate(v)?;
        let prev = self.cell(self.position(cell) - 1).unwrap_or(cell);
        Some((cell.max(prev) + 1) * self.per_cell())
    }
}

#[derive(Default)]
struct Parsed {
    family: Option<(String, usize)>,
    orientation: Option<bool>,
    cell_vertices: Option<u64>,
    cell_edges: Vec<(u64, u64, usize)>,
    link_edges: Vec<(u64, u64, usize)>,
    hub: bool,
    odd_vertex: Option<bool>,
    conditions: Option<Conditions>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_text(text: &str) -> Result<(Parsed, usize)> {
    let mut p = Parsed::default();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or_default().trim();
        if content.is_empty() {
            continue;
        }
        last = line;
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (directive, args) = (tokens[0], &tokens[1..]);
        if p.family.is_none() && directive != "family" {
            return Err(parse_err(line, "the first directive must be `family`"));
        }
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(parse_err(line, format!("`{directive}` takes {n} argument(s), got {}", args.len())))
            }
        };
        let number = |s: &str| -> Result<u64> {
            s.parse().map_err(|_| parse_err(line, format!("expected a natural number, got `{s}`")))
        };
        match directive {
            "family" => {
                arity(1)?;
                if p.family.is_some() {
                    return Err(parse_err(line, "duplicate `family`"));
                }
                let name = args[0];
                if name != "periodic" && builtin(name).is_none() {
                    return Err(parse_err(line, format!("unknown family `{name}`")));
                }
                p.family = Some((name.to_string(), line));
            }
            "orientation" => {
                arity(1)?;
                p.orientation = Some(match args[0] {
                    "one_way" => false,
                    "two_way" => true,
                    other => return Err(parse_err(line, format!("unknown orientation `{other}`"))),
                });
            }
            "cell_vertices" => {
                arity(1)?;
                let n = number(args[0])?;
                if n == 0 {
                    return Err(parse_err(line, "cell_vertices must be positive"));
                }
                p.cell_vertices = Some(n);
            }
            "cell_edge" => {
                arity(2)?;
                p.cell_edges.push((number(args[0])?, number(args[1])?, line));
            }
            "link_edge" => {
                arity(2)?;
                p.link_edges.push((number(args[0])?, number(args[1])?, line));
            }
            "hub" => {
                arity(0)?;
                p.hub = true;
            }
            "odd_vertex" => {
                arity(1)?;
                p.odd_vertex = Some(match args[0] {
                    "true" => true,
                    "false" => false,
                    other => return Err(parse_err(line, format!("expected true or false, got `{other}`"))),
                });
            }
            "conditions" => {
                arity(1)?;
                p.conditions = Some(
                    Conditions::parse(args[0])
                        .ok_or_else(|| parse_err(line, format!("unknown conditions `{}`", args[0])))?,
                );
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
        let periodic_only = matches!(directive, "orientation" | "cell_vertices" | "cell_edge" | "link_edge" | "hub");
        if periodic_only && p.family.as_ref().is_some_and(|(f, _)| f != "periodic") {
            return Err(parse_err(line, format!("`{directive}` is only valid for periodic families")));
        }
    }
    if p.family.is_none() {
        return Err(parse_err(last.max(1), "missing `family` directive"));
    }
    Ok((p, last.max(1)))
}

/// Parses a presentation file into a graph description, validating the
/// declared metadata against everything the presentation makes checkable.
pub fn load_presentation(text: &str) -> Result<GraphDescription> {
    let (p, last) = parse_text(text)?;
    let (family, _) = p.family.clone().expect("checked by parser");
    let has_odd_vertex = p.odd_vertex.ok_or_else(|| parse_err(last, "missing `odd_vertex` directive"))?;
    let conditions = p.conditions.ok_or_else(|| parse_err(last, "missing `conditions` directive"))?;

    if family != "periodic" {
        let desc = builtin(&family).expect("checked by parser");
        let mut violations = Vec::new();
        if desc.has_odd_vertex() != has_odd_vertex {
            violations.push(format!("family {family} has odd_vertex {}", desc.has_odd_vertex()));
        }
        if desc.conditions() != conditions {
            violations.push(format!("family {family} satisfies conditions {}", desc.conditions()));
        }
        if !violations.is_empty() {
            return Err(Error::Validation(violations));
        }
        return Ok(desc);
    }

    let n = p.cell_vertices.ok_or_else(|| parse_err(last, "missing `cell_vertices` directive"))?;
    let two_way = p.orientation.ok_or_else(|| parse_err(last, "missing `orientation` directive"))?;
    for &(a, b, line) in p.cell_edges.iter().chain(&p.link_edges) {
        if a >= n || b >= n {
            return Err(parse_err(line, format!("cell vertex out of range 0..{n}")));
        }
    }
    let graph = Periodic {
        two_way,
        n,
        cell_edges: p.cell_edges.iter().map(|&(a, b, _)| (a, b)).collect(),
        link_edges: p.link_edges.iter().map(|&(a, b, _)| (a, b)).collect(),
        hub: p.hub,
    };
    let violations = validate(&graph, has_odd_vertex, conditions);
    if !violations.is_empty() {
        return Err(Error::Validation(violations));
    }
    let name = format!(
        "periodic({}, n={n}, m={}{})",
        if two_way { "two_way" } else { "one_way" },
        graph.per_cell(),
        if graph.hub { ", hub" } else { "" }
    );
    Ok(GraphDescription::new(Arc::new(graph), Metadata { name, has_odd_vertex, conditions }))
}

/// Checks the declared metadata against the parity, end and connectivity
/// facts readable off a periodic presentation. Returns the violated rules.
fn validate(g: &Periodic, has_odd_vertex: bool, conditions: Conditions) -> Vec<String> {
    let mut out = Vec::new();
    let generic: Vec<u64> = (0..g.n).map(|u| g.local_degree(1, u)).collect();
    let boundary: Vec<u64> = if g.two_way { generic.clone() } else { (0..g.n).map(|u| g.local_degree(0, u)).collect() };
    let generic_odd = generic.iter().filter(|&&d| d % 2 == 1).count();
    let boundary_odd = boundary.iter().filter(|&&d| d % 2 == 1).count();
    // A generic odd vertex repeats in every cell.
    let odd_total = if generic_odd > 0 { None } else { Some(if g.two_way { 0 } else { boundary_odd }) };
    let computed_odd = odd_total != Some(0);

    if computed_odd != has_odd_vertex {
        out.push(format!("odd_vertex declared {has_odd_vertex} but the presented degrees give {computed_odd}"));
    }
    if conditions.e1 {
        match odd_total {
            Some(1) => {}
            Some(0) if g.hub => {}
            Some(0) => out.push("E1 without an odd vertex needs a vertex of infinite degree (hub)".into()),
            Some(k) => out.push(format!("E1 allows at most one odd vertex, found {k}")),
            None => out.push("E1 allows at most one odd vertex, found infinitely many".into()),
        }
        if g.two_way && !g.hub {
            out.push("E1 needs one end, but a two_way periodic graph without hub has two".into());
        }
    }
    if conditions.e2 && odd_total != Some(0) {
        out.push("E2 needs every degree even or infinite".into());
    }
    if conditions.e1 || conditions.e2 {
        if g.per_cell() == 0 || (g.link_edges.is_empty() && !g.hub) {
            out.push("connectivity needs a link_edge or a hub joining the cells".into());
        } else if generic.contains(&0) || boundary.contains(&0) {
            out.push("connectivity forbids cell vertices without edges".into());
        } else if !window_connected(g) {
            out.push("graph is not connected".into());
        }
    }
    out
}

/// Connectivity of the central cells inside a window of `2n + 3` cells on
/// each side, plus the hub.
fn window_connected(g: &Periodic) -> bool {
    let reach = 2 * g.n as i64 + 3;
    let positions: Vec<i64> = if g.two_way { (-reach..=reach).collect() } else { (0..=2 * reach).collect() };
    let cells: BTreeSet<u64> = positions.iter().filter_map(|&k| g.cell(k)).collect();
    let m = g.per_cell();
    let window = FiniteMultigraph::from_incidences(
        cells.iter().flat_map(|&c| (0..m).filter_map(move |j| g.incidence(EdgeId(c * m + j)))),
    );
    let central = if g.two_way { -(g.n as i64)..=g.n as i64 } else { 0..=g.n as i64 };
    let comps = window.components();
    let home = comps.iter().position(|comp| comp.contains_vertex(g.vid(0, 0)));
    let Some(home) = home else { return false };
    central.filter_map(|k| g.cell(k)).all(|c| (0..g.n).all(|u| comps[home].contains_vertex(g.vid(c, u))))
}
