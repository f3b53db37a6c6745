//! Built-in graph families.

use std::sync::Arc;

use super::{Conditions, GraphDescription, GraphOracle, Metadata};
use crate::types::{Degree, EdgeId, Incidence, VertexId};

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 4] = ["ray", "line", "loop_star", "fat_ray"];

/// The coding ℤ → ℕ: `k ↦ 2k` for `k ≥ 0`, `k ↦ −2k − 1` for `k < 0`.
pub fn zeta(k: i64) -> u64 {
    if k >= 0 {
        2 * k as u64
    } else {
        (-2 * k - 1) as u64
    }
}

/// Inverse of [`zeta`].
pub fn zeta_inv(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        (n / 2) as i64
    } else {
        -(n.div_ceil(2) as i64)
    }
}

/// ⟦ℕ⟧: edge `i` joins `i` and `i + 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ray;

impl GraphOracle for Ray {
    fn is_vertex(&self, _n: u64) -> bool {
        true
    }

    fn is_edge(&self, _n: u64) -> bool {
        true
    }

    fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        Some(Incidence::new(e, VertexId(e.0), VertexId(e.0 + 1)))
    }

    fn degree(&self, v: VertexId) -> Option<Degree> {
        Some(Degree::Finite(if v.0 == 0 { 1 } else { 2 }))
    }

    fn scan_bound(&self, v: VertexId) -> Option<u64> {
        Some(v.0)
    }
}

/// ⟦ℤ⟧ coded through [`zeta`]: vertex `ζ(k)`, and the edge joining `ζ(k)` to
/// `ζ(k+1)` has index `ζ(k)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Line;

impl GraphOracle for Line {
    fn is_vertex(&self, _n: u64) -> bool {
        true
    }

    fn is_edge(&self, _n: u64) -> bool {
        true
    }

    fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        let k = zeta_inv(e.0);
        Some(Incidence::new(e, VertexId(zeta(k)), VertexId(zeta(k + 1))))
    }

    fn degree(&self, _v: VertexId) -> Option<Degree> {
        Some(Degree::Finite(2))
    }

    fn scan_bound(&self, v: VertexId) -> Option<u64> {
        let k = zeta_inv(v.0);
        Some(zeta(k).max(zeta(k - 1)))
    }
}

/// One vertex carrying a loop for every natural number.
#[derive(Debug, Clone, Copy, Default)]
pub struct LoopStar;

impl GraphOracle for LoopStar {
    fn is_vertex(&self, n: u64) -> bool {
        n == 0
    }

    fn is_edge(&self, _n: u64) -> bool {
        true
    }

    fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        Some(Incidence::new(e, VertexId(0), VertexId(0)))
    }

    fn degree(&self, v: VertexId) -> Option<Degree> {
        (v.0 == 0).then_some(Degree::Infinite)
    }
}

/// ⟦ℕ⟧ with every edge doubled: `A_i` (index `2i`) and `B_i` (index
/// `2i + 1`) both join `i` and `i + 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct FatRay;

impl GraphOracle for FatRay {
    fn is_vertex(&self, _n: u64) -> bool {
        true
    }

    fn is_edge(&self, _n: u64) -> bool {
        true
    }

    fn incidence(&self, e: EdgeId) -> Option<Incidence> {
        let i = e.0 / 2;
        Some(Incidence::new(e, VertexId(i), VertexId(i + 1)))
    }

    fn degree(&self, v: VertexId) -> Option<Degree> {
        Some(Degree::Finite(if v.0 == 0 { 2 } else { 4 }))
    }

    fn scan_bound(&self, v: VertexId) -> Option<u64> {
        Some(2 * v.0 + 1)
    }
}

fn describe(
    oracle: Arc<dyn GraphOracle>,
    name: &str,
    has_odd_vertex: bool,
    conditions: Conditions,
) -> GraphDescription {
    GraphDescription::new(oracle, Metadata { name: name.to_string(), has_odd_vertex, conditions })
}

pub fn family_ray() -> GraphDescription {
    describe(Arc::new(Ray), "ray", true, Conditions::E1)
}

pub fn family_line() -> GraphDescription {
    describe(Arc::new(Line), "line", false, Conditions::E2)
}

pub fn family_loop_star() -> GraphDescription {
    describe(Arc::new(LoopStar), "loop_star", false, Conditions::BOTH)
}

pub fn family_fat_ray() -> GraphDescription {
    describe(Arc::new(FatRay), "fat_ray", false, Conditions::E2)
}

pub fn builtin(name: &str) -> Option<GraphDescription> {
    match name {
        "ray" => Some(family_ray()),
        "line" => Some(family_line()),
        "loop_star" => Some(family_loop_star()),
        "fat_ray" => Some(family_fat_ray()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::incident_edges;

    fn v(n: u64) -> VertexId {
        VertexId(n)
    }

    #[test]
    fn zeta_round_trips() {
        for k in -50..50 {
            assert_eq!(zeta_inv(zeta(k)), k);
        }
        assert_eq!((zeta(0), zeta(1), zeta(-1), zeta(-2)), (0, 2, 1, 3));
    }

    #[test]
    fn ray_examples() {
        let g = family_ray();
        let o = g.oracle();
        assert_eq!(o.degree(v(0)), Some(Degree::Finite(1)));
        assert_eq!(o.degree(v(7)), Some(Degree::Finite(2)));
        assert_eq!(o.incidence(EdgeId(5)).unwrap().endpoints(), (v(5), v(6)));
        assert!((0..100).all(|n| o.is_vertex(n)));
        assert!(g.has_odd_vertex());
        assert_eq!(g.conditions(), Conditions::E1);
    }

    #[test]
    fn line_examples() {
        let g = family_line();
        let o = g.oracle();
        assert_eq!(o.degree(v(0)), Some(Degree::Finite(2)));
        // f_{-1} has index ζ(-1) = 1 and joins ζ(-1) = 1 to ζ(0) = 0.
        assert_eq!(o.incidence(EdgeId(1)).unwrap().endpoints(), (v(0), v(1)));
        assert_eq!(o.incidence(EdgeId(0)).unwrap().endpoints(), (v(0), v(2)));
        assert!(!g.has_odd_vertex());
        assert!((0..40).all(|n| !o.degree(v(n)).unwrap().is_odd()));
    }

    #[test]
    fn loop_star_examples() {
        let g = family_loop_star();
        let o = g.oracle();
        assert_eq!(o.degree(v(0)), Some(Degree::Infinite));
        assert_eq!(o.degree(v(1)), None);
        assert!((0..30).all(|k| o.incidence(EdgeId(k)).unwrap().endpoints() == (v(0), v(0))));
        assert_eq!(g.conditions(), Conditions::BOTH);
        assert_eq!(incident_edges(o, v(0)).unwrap(), None);
    }

    #[test]
    fn fat_ray_examples() {
        let g = family_fat_ray();
        let o = g.oracle();
        assert_eq!(o.incidence(EdgeId(7)).unwrap().endpoints(), (v(3), v(4)));
        assert_eq!(o.degree(v(1)), Some(Degree::Finite(4)));
        assert_eq!(o.degree(v(0)), Some(Degree::Finite(2)));
        assert_eq!(incident_edges(o, v(2)).unwrap().unwrap(), vec![EdgeId(2), EdgeId(3), EdgeId(4), EdgeId(5)]);
    }

    #[test]
    fn builtin_lookup() {
        for name in BUILTIN_NAMES {
            assert_eq!(builtin(name).unwrap().name(), name);
        }
        assert!(builtin("torus").is_none());
    }
}
