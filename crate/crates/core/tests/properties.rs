mod common;

use common::ids;
use infinite_euler::deciders::{FiniteComponentSearch, SemiState, Semidecider};
use infinite_euler::families::{family_fat_ray, family_line, family_loop_star, family_ray, zeta, zeta_inv};
use infinite_euler::finite::parity_feasible;
use infinite_euler::{
    ball, brute_force_euler, connectivity_decider_one_end, eulerian_finite, is_bi_extensible, is_right_extensible,
    one_way_stream, two_way_stream, Budget, EdgeId, FiniteMultigraph, FinitePath, Incidence, Side, StepBudgetOutcome,
    VertexId,
};
use proptest::prelude::*;

fn multigraph(max_vertices: u64, max_edges: usize) -> impl Strategy<Value = FiniteMultigraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(|pairs| {
            FiniteMultigraph::from_incidences(
                pairs
                    .into_iter()
                    .enumerate()
                    .map(|(e, (u, v))| Incidence::new(EdgeId(e as u64), VertexId(u), VertexId(v))),
            )
        })
    })
}

/// A path on the ray covering `[a, b]`, walked upwards or downwards.
fn ray_segment(a: u64, len: u64, upwards: bool) -> FinitePath {
    let mut tokens = vec![a];
    for i in 0..len {
        tokens.extend([a + i, a + i + 1]);
    }
    let t = FinitePath::from_tokens(0, &tokens).unwrap();
    if upwards {
        t
    } else {
        t.invert()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshaking_survives_edge_removal(h in multigraph(6, 10), mask in any::<u16>()) {
        prop_assert!(h.handshake_check());
        let removed = h.edge_ids().into_iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, e)| e).collect();
        let rest = h.remove_edges(&removed);
        prop_assert!(rest.handshake_check());
        prop_assert!(rest.is_subgraph_of(&h));
        let comps = rest.components();
        prop_assert_eq!(comps.iter().map(|c| c.num_edges()).sum::<usize>(), rest.num_edges());
        prop_assert!(comps.iter().all(|c| c.is_connected() && c.handshake_check()));
    }

    #[test]
    fn euler_constructions_agree(h in multigraph(4, 6)) {
        for from in h.vertices() {
            for to in h.vertices() {
                let parity = parity_feasible(&h, from, to);
                let built = eulerian_finite(&h, Some(from), Some(to));
                prop_assert_eq!(parity, built.is_ok());
                prop_assert_eq!(parity, !brute_force_euler(&h, Some(from), Some(to)).unwrap().is_empty());
                if let Ok(t) = built {
                    prop_assert_eq!(t.edge_set(), h.edge_ids());
                    prop_assert!(t.validate_with(|e| h.incidence(e)).is_ok());
                }
            }
        }
    }

    #[test]
    fn zeta_is_a_bijection(k in -1_000_000i64..1_000_000, n in 0u64..2_000_000) {
        prop_assert_eq!(zeta_inv(zeta(k)), k);
        prop_assert_eq!(zeta(zeta_inv(n)), n);
    }

    #[test]
    fn path_algebra(a in 0u64..20, len in 0u64..8, split in 0u64..8, base in -5i64..5) {
        let t = ray_segment(a, len, true);
        let shifted = FinitePath::new(base, t.vertices().to_vec(), t.edges().to_vec()).unwrap();
        prop_assert_eq!(shifted.invert().invert(), shifted.clone());
        let cut = base + (split % (len + 1)) as i64;
        let left = shifted.restrict(base, cut).unwrap();
        let right = shifted.restrict(cut, shifted.end()).unwrap();
        prop_assert_eq!(left.concat_right(&right).unwrap(), shifted.clone());
        prop_assert_eq!(right.concat_left(&left).unwrap(), shifted.clone());
        prop_assert!(shifted.extends(&left) && shifted.extends(&right));
    }

    /// On the ray a path extends to a one-way Eulerian path exactly when it
    /// is an initial segment walked outwards.
    #[test]
    fn ray_right_extensible_ground_truth(a in 0u64..12, len in 0u64..6, upwards: bool) {
        let t = ray_segment(a, len, upwards);
        let expected = t.initial() == VertexId(0) && (upwards || len == 0);
        prop_assert_eq!(is_right_extensible(&family_ray(), &t, Budget::Auto).unwrap(), StepBudgetOutcome::Decided(expected));
    }

    /// On the line every segment lies on the unique two-way Eulerian path.
    #[test]
    fn line_segments_are_bi_extensible(k in -10i64..10, len in 0u64..6, upwards: bool) {
        let mut tokens = vec![zeta(k)];
        for i in 0..len as i64 {
            tokens.extend([zeta(k + i), zeta(k + i + 1)]);
        }
        let t = FinitePath::from_tokens(0, &tokens).unwrap();
        let t = if upwards { t } else { t.invert() };
        prop_assert_eq!(is_bi_extensible(&family_line(), &t, Budget::Auto).unwrap(), StepBudgetOutcome::Decided(true));
    }

    /// Any sequence of distinct loops extends both ways on the loop star.
    #[test]
    fn loop_star_paths_always_extend(loops in prop::collection::btree_set(0u64..40, 0..6), seed: u64) {
        let mut order: Vec<u64> = loops.into_iter().collect();
        if !order.is_empty() {
            let k = order.len();
            order.rotate_left((seed % k as u64) as usize);
        }
        let mut tokens = vec![0];
        for e in &order {
            tokens.extend([*e, 0]);
        }
        let t = FinitePath::from_tokens(0, &tokens).unwrap();
        let g = family_loop_star();
        prop_assert_eq!(is_right_extensible(&g, &t, Budget::Auto).unwrap(), StepBudgetOutcome::Decided(true));
        prop_assert_eq!(is_bi_extensible(&g, &t, Budget::Auto).unwrap(), StepBudgetOutcome::Decided(true));
    }

    /// Decided answers do not depend on the budget.
    #[test]
    fn budget_is_monotone(a in 0u64..8, len in 1u64..5, steps in 0u64..200) {
        let g = family_fat_ray();
        let mut tokens = vec![a];
        for i in 0..len {
            tokens.extend([2 * (a + i) + (i % 2), a + i + 1]);
        }
        let t = FinitePath::from_tokens(0, &tokens).unwrap();
        let full = is_bi_extensible(&g, &t, Budget::Unlimited).unwrap();
        let capped = is_bi_extensible(&g, &t, Budget::Steps(steps)).unwrap();
        prop_assert!(matches!(full, StepBudgetOutcome::Decided(_)));
        if let StepBudgetOutcome::Decided(_) = capped {
            prop_assert_eq!(capped, full);
        }
    }

    /// A certified finite component stays certified in every larger ball,
    /// and a connected complement is never certified as split.
    #[test]
    fn finite_component_witness_is_stable(cut in prop::collection::btree_set(0u64..10, 1..4)) {
        let g = family_ray();
        let removed = cut.iter().map(|&e| EdgeId(e)).collect();
        let mut search = FiniteComponentSearch::new(g.oracle(), &removed).unwrap();
        let witness = (0..5_000).find_map(|_| match search.step() {
            SemiState::Halted(w) => Some(w),
            SemiState::Running => None,
        });
        let connected = connectivity_decider_one_end(g.oracle(), &removed, Some(100_000)).unwrap();
        // G − E drops isolated vertices, so the ray stays connected exactly
        // when the cut is an initial segment {e0, ..., ek}.
        let splits = cut.iter().enumerate().any(|(i, &e)| e != i as u64);
        prop_assert_eq!(connected, StepBudgetOutcome::Decided(!splits));
        prop_assert_eq!(witness.is_some(), splits);
        if let Some(w) = witness {
            for (dr, ds) in [(1, 1), (2, 3), (0, 5)] {
                let bigger = ball(g.oracle(), search.root(), w.radius + dr, w.precision + ds).unwrap();
                let comps = bigger.remove_edges(&removed).components();
                prop_assert!(comps.contains(&w.component), "{:?} lost at +({dr},{ds})", w.component);
                prop_assert!(search.check_at(w.radius + dr, w.precision + ds).is_some());
            }
        }
    }
}

#[test]
fn streams_are_deterministic() {
    for g in [family_ray(), family_loop_star()] {
        let run = || {
            let mut s = one_way_stream(&g, None).unwrap();
            (0..60).map(|_| s.next_edge(Side::Right).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(run(), run(), "{}", g.name());
    }
    for g in [family_line(), family_fat_ray(), family_loop_star()] {
        let run = || {
            let mut s = two_way_stream(&g).unwrap();
            (0..60).map(|k| s.next_edge(if k % 2 == 0 { Side::Right } else { Side::Left }).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(run(), run(), "{}", g.name());
    }
}

/// The emitted path does not depend on the order in which sides are pulled.
#[test]
fn two_way_pull_order_is_irrelevant() {
    for g in [family_line(), family_fat_ray(), family_loop_star()] {
        let mut alternating = two_way_stream(&g).unwrap();
        let mut batched = two_way_stream(&g).unwrap();
        let (mut a_right, mut a_left) = (Vec::new(), Vec::new());
        for _ in 0..30 {
            a_right.push(alternating.next_edge(Side::Right).unwrap());
            a_left.push(alternating.next_edge(Side::Left).unwrap());
        }
        let b_left: Vec<_> = (0..30).map(|_| batched.next_edge(Side::Left).unwrap()).collect();
        let b_right: Vec<_> = (0..30).map(|_| batched.next_edge(Side::Right).unwrap()).collect();
        assert_eq!(a_right, b_right, "{}", g.name());
        assert_eq!(a_left, b_left, "{}", g.name());
    }
}

#[test]
fn one_way_start_is_distinguished() {
    let ray = one_way_stream(&family_ray(), None).unwrap();
    assert_eq!(ray.prefix().unwrap().initial(), VertexId(0));
    let mut star = one_way_stream(&family_loop_star(), None).unwrap();
    star.advance_stage().unwrap();
    assert_eq!(star.prefix().unwrap().initial(), VertexId(0));
    assert_eq!(star.prefix().unwrap().edge_set(), ids(&[0]));
}
