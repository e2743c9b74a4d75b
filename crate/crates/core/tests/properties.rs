mod common;

use std::collections::BTreeSet;

use empire_core::bounds::{empire_upper, known_value, uniform_slack};
use empire_core::colouring::{chromatic_number, greedy_upper_bound, is_critical, GreedyOrder};
use empire_core::empire::{verify_jnm, EmpireGraph};
use empire_core::graph::Graph;
use empire_core::topology::{min_genus_lower_bound, RotationSystem, SurfaceWord, Symbol};
use empire_core::BigScalar;
use proptest::prelude::*;

fn any_multigraph() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..25).prop_map(move |e| Graph::from_edges(n, e).unwrap())
    })
}

fn simple_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

/// A connected simple graph (random tree plus extra edges) with a random
/// rotation at every vertex.
fn connected_rotation() -> impl Strategy<Value = RotationSystem> {
    (2usize..9)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<prop::sample::Index>(), n - 1),
                prop::collection::vec((0..n, 0..n), 0..8),
                prop::collection::vec(any::<u64>(), n),
            )
        })
        .prop_map(|(n, parents, extra, seeds)| {
            let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
            for v in 1..n {
                let p = parents[v - 1].index(v);
                edges.insert((p, v));
            }
            for (a, b) in extra {
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let orders = g
                .vertices()
                .map(|v| {
                    let mut nb = g.neighbours(v);
                    // deterministic shuffle from the seed
                    let mut s = seeds[v] | 1;
                    for i in (1..nb.len()).rev() {
                        s ^= s << 13;
                        s ^= s >> 7;
                        s ^= s << 17;
                        nb.swap(i, (s % (i as u64 + 1)) as usize);
                    }
                    nb
                })
                .collect();
            RotationSystem::from_neighbour_orders(g, orders).unwrap()
        })
}

fn orientable_word() -> impl Strategy<Value = SurfaceWord> {
    (1usize..=8).prop_flat_map(|n| {
        Just((0..2 * n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |slots| {
                let symbols = slots
                    .into_iter()
                    .map(|s| Symbol::new(format!("x{}", s / 2), s % 2 == 1))
                    .collect();
                SurfaceWord::new(symbols).unwrap()
            })
    })
}

/// Minimum colours for the faces so that faces on both sides of an edge
/// differ, found directly from the darts.
fn brute_force_face_colouring(rs: &RotationSystem) -> Option<usize> {
    let (faces, face_of) = rs.face_of_darts().unwrap();
    let mut pairs = BTreeSet::new();
    for e in 0..rs.graph().edge_count() {
        let (a, b) = (face_of[2 * e], face_of[2 * e + 1]);
        if a == b {
            continue;
        }
        pairs.insert((a.min(b), a.max(b)));
    }
    let g = Graph::from_edges(faces.len(), pairs).unwrap();
    Some(common::brute_force_chromatic(&g))
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in any_multigraph()) {
        let total: usize = g.degrees().iter().sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn rewrites_preserve_genus(w in orientable_word(), pick in any::<prop::sample::Index>(), cut in any::<prop::sample::Index>()) {
        let labels: Vec<String> = w.symbols().iter().filter(|s| !s.inverse).map(|s| s.label.clone()).collect();
        let x = &labels[pick.index(labels.len())];
        let i = w.symbols().iter().position(|s| &s.label == x && !s.inverse).unwrap();
        let j = w.symbols().iter().position(|s| &s.label == x && s.inverse).unwrap();
        let genus = w.genus();
        if i < j {
            let split = i + 1 + cut.index(j - i);
            prop_assert_eq!(w.rewrite_right_to_left(x, split).unwrap().genus(), genus);
            let split = cut.index(i + 1);
            prop_assert_eq!(w.rewrite_left_to_right(x, split).unwrap().genus(), genus);
        } else {
            prop_assert!(w.rewrite_right_to_left(x, i).is_err());
        }
    }

    #[test]
    fn faces_partition_darts(rs in connected_rotation()) {
        let faces = rs.trace_faces().unwrap();
        let total: usize = faces.iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, 2 * rs.graph().edge_count());
        let mut darts: Vec<usize> = faces.iter().flat_map(|f| f.darts.iter().map(|d| d.index())).collect();
        darts.sort_unstable();
        prop_assert_eq!(darts, (0..total).collect::<Vec<_>>());
        let chi = rs.euler_characteristic().unwrap();
        prop_assert!(chi <= 2 && chi % 2 == 0);
        if rs.graph().vertex_count() >= 3 {
            prop_assert!(rs.genus().unwrap().genus >= min_genus_lower_bound(rs.graph()).unwrap());
        }
    }

    #[test]
    fn duals_are_simple(rs in connected_rotation()) {
        prop_assert!(rs.dual_graph().unwrap().is_simple());
    }

    #[test]
    fn face_colouring_is_dual_vertex_colouring(rs in connected_rotation()) {
        prop_assume!(rs.genus().unwrap().genus == 0);
        let dual = rs.dual_graph().unwrap();
        prop_assert_eq!(Some(chromatic_number(&dual).unwrap().0), brute_force_face_colouring(&rs));
    }

    #[test]
    fn solver_matches_enumeration(g in simple_graph(7)) {
        let (k, w) = chromatic_number(&g).unwrap();
        prop_assert!(w.is_proper(&g));
        prop_assert_eq!(k, common::brute_force_chromatic(&g));
        for order in [GreedyOrder::Natural, GreedyOrder::LargestFirst, GreedyOrder::SmallestLast, GreedyOrder::Dsatur] {
            prop_assert!(greedy_upper_bound(&g, &order).unwrap() >= k);
        }
    }

    #[test]
    fn critical_graphs_have_large_min_degree(g in simple_graph(7)) {
        if is_critical(&g).unwrap() {
            let c = chromatic_number(&g).unwrap().0;
            prop_assert!(g.degrees().into_iter().all(|d| d + 1 >= c));
        }
    }

    #[test]
    fn m_pire_is_monotone(sizes in prop::collection::vec(1usize..5, 1..8), m in 1usize..6) {
        let ids: Vec<String> = sizes.iter().enumerate().flat_map(|(e, &s)| std::iter::repeat_n(e.to_string(), s)).collect();
        let eg = EmpireGraph::new(Graph::empty(ids.len()), &ids).unwrap();
        if eg.is_m_pire(m) {
            prop_assert!(eg.is_m_pire(m + 1));
        }
    }

    #[test]
    fn verified_graphs_collapse_to_cliques(g in simple_graph(7), split in any::<prop::sample::Index>()) {
        // pair up vertex v with v + k as one empire
        let n = g.vertex_count();
        let k = split.index(n) + 1;
        let ids: Vec<String> = (0..n).map(|v| (v % k).to_string()).collect();
        let eg = EmpireGraph::new(g, &ids).unwrap();
        let count = eg.empire_count();
        if verify_jnm(&eg, count, n).passed {
            prop_assert_eq!(eg.collapse().graph.edge_count(), count * (count - 1) / 2);
        }
    }

    #[test]
    fn wide_and_narrow_bounds_agree(g in 0i64..10_000, m in 1i64..1_000) {
        let small = empire_upper(g, m).unwrap();
        let big = empire_upper(BigScalar::from(g), BigScalar::from(m)).unwrap();
        prop_assert_eq!(BigScalar::from(small), big);
        // h is the floor of (a + √d)/2 exactly when (2h − a)² <= d < (2h + 2 − a)²
        let a = 6 * m + 1;
        let d = a * a + 24 * (2 * g - 2);
        let (lo, hi) = (2 * small - a, 2 * small + 2 - a);
        prop_assert!(lo <= 0 || lo * lo <= d);
        prop_assert!(hi > 0 && d < hi * hi);
        prop_assert_eq!(uniform_slack(BigScalar::from(g.max(1)), BigScalar::from(m)).unwrap(),
            BigScalar::from(uniform_slack(g.max(1), m).unwrap()));
    }
}

#[test]
fn slack_is_never_negative() {
    for g in 1..=50i64 {
        for m in 1..=10 {
            assert!(uniform_slack(g, m).unwrap() >= 0, "g={g} m={m}");
        }
    }
}

#[test]
fn known_lower_bounds_grow_with_genus() {
    for m in 1..=8 {
        let mut prev = 0;
        for g in 0..=30 {
            let r = known_value(g, m).unwrap();
            let lo = r.lower.unwrap();
            assert!(lo >= prev, "g={g} m={m}");
            assert!(lo <= r.upper);
            assert_eq!(r.is_exact(), lo == r.upper);
            prev = lo;
        }
    }
}

#[test]
fn enumeration_oracle_visits_every_partition() {
    for n in 0..=8 {
        assert_eq!(common::count_partitions(n), common::bell(n));
    }
    assert_eq!(common::bell(8), 4140);
}
