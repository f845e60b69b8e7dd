//! Invariants as property tests.

mod common;

use std::f64::consts::{PI, TAU};

use conegraph::construction::{build_directed, undirect};
use conegraph::geometry::{bisector_projection, cone_of, ConeIndex, Vector};
use conegraph::io::{graph_from_json, graph_to_json, node_set_from_json, node_set_to_json};
use conegraph::routing::{greedy_route, RouteResult};
use conegraph::voidcheck::{check_by_routing, check_void_free};
use conegraph::{graphs_equal, Family, GeometricGraph, NodeSet, Point};
use proptest::prelude::*;

fn point_strategy() -> impl Strategy<Value = (f64, f64)> {
    (-100.0..100.0f64, -100.0..100.0f64)
}

fn node_set_strategy(max: usize) -> impl Strategy<Value = NodeSet> {
    prop::collection::vec(point_strategy(), 1..max).prop_filter_map("distinct points", |coords| {
        NodeSet::from_points(coords.into_iter().map(|(x, y)| Point::new(x, y).unwrap())).ok()
    })
}

fn family_strategy() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Yao), Just(Family::Theta)]
}

fn undirected(nodes: &NodeSet, family: Family, k: u32) -> GeometricGraph {
    undirect(&build_directed(nodes, family, k).unwrap()).unwrap()
}

#[test]
fn cones_partition_a_dense_angular_grid() {
    for k in 1..=16u32 {
        let width = TAU / f64::from(k);
        let steps = 64 * k;
        for s in 0..steps {
            let theta = f64::from(s) * TAU / f64::from(steps);
            let p = Point::new(theta.sin() * 3.0, theta.cos() * 3.0).unwrap();
            let i = cone_of(&Point::ORIGIN, &p, k).unwrap().index();
            assert!((1..=k).contains(&i));
            // bearing in (0, 2π], north = 2π
            let bearing = if s == 0 { TAU } else { theta };
            let lo = f64::from(i - 1) * width;
            let hi = f64::from(i) * width;
            assert!(bearing > lo - 1e-12 && bearing <= hi + 1e-12, "k={k} s={s} -> {i}");
        }
    }
}

#[test]
fn boundary_rays_belong_to_the_preceding_cone() {
    for k in 1..=24u32 {
        for j in 1..=k {
            let theta = f64::from(j - 1) * TAU / f64::from(k);
            let expected = if j == 1 { k } else { j - 1 };
            for r in [0.001, 1.0, 1234.5] {
                let p = Point::new(r * theta.sin(), r * theta.cos()).unwrap();
                assert_eq!(cone_of(&Point::ORIGIN, &p, k).unwrap().index(), expected, "ray l_{j} for k={k}, r={r}");
            }
            // offset origins add cancellation error, so keep the ray long
            for r in [1.0, 1234.5] {
                let origin = Point::new(5.0, -2.0).unwrap();
                let p = Point::new(5.0 + r * theta.sin(), -2.0 + r * theta.cos()).unwrap();
                assert_eq!(cone_of(&origin, &p, k).unwrap().index(), expected, "ray l_{j} for k={k}, r={r}");
            }
        }
    }
}

#[test]
fn boundary_rays_project_equally_onto_the_bisector() {
    for k in 1..=16u32 {
        for i in 1..=k {
            let cone = ConeIndex::new(i, k).unwrap();
            let width = TAU / f64::from(k);
            for bearing in [f64::from(i - 1) * width, f64::from(i) * width] {
                let ray = Vector::from_bearing(bearing);
                let p = Point::new(ray.x, ray.y).unwrap();
                let proj = bisector_projection(&Point::ORIGIN, &p, cone).unwrap();
                assert!((proj - (PI / f64::from(k)).cos()).abs() < 1e-12);
            }
        }
    }
}

proptest! {
    #[test]
    fn rotation_by_one_cone_advances_the_index(k in 1u32..=16, bearing in 0.0..TAU, r in 0.01..50.0f64) {
        let width = TAU / f64::from(k);
        prop_assume!({
            let t = bearing / width;
            (t - t.round()).abs() > 1e-6
        });
        let here = Point::new(r * bearing.sin(), r * bearing.cos()).unwrap();
        let rotated = Point::new(r * (bearing + width).sin(), r * (bearing + width).cos()).unwrap();
        let i = cone_of(&Point::ORIGIN, &here, k).unwrap().index();
        let j = cone_of(&Point::ORIGIN, &rotated, k).unwrap().index();
        prop_assert_eq!(j, i % k + 1);
    }

    #[test]
    fn in_cone_projection_is_positive_for_k_at_least_3(k in 3u32..=16, (x, y) in point_strategy()) {
        prop_assume!(x != 0.0 || y != 0.0);
        let p = Point::new(x, y).unwrap();
        let cone = cone_of(&Point::ORIGIN, &p, k).unwrap();
        prop_assert!(bisector_projection(&Point::ORIGIN, &p, cone).unwrap() > 0.0);
    }

    #[test]
    fn construction_invariants(nodes in node_set_strategy(25), k in 1u32..=12, family in family_strategy()) {
        let directed = build_directed(&nodes, family, k).unwrap();
        let mut per_cone = std::collections::HashSet::new();
        for &(u, w) in directed.edges() {
            let cone = cone_of(nodes.point(u), nodes.point(w), k).unwrap();
            prop_assert!(per_cone.insert((u, cone.index())), "two edges in one cone");
        }
        let undirected = undirect(&directed).unwrap();
        prop_assert!(undirected.edge_count() <= directed.edge_count());
        prop_assert!(directed.edge_count() <= nodes.len() * k as usize);
        for u in 0..nodes.len() {
            for &w in undirected.neighbors(u).unwrap() {
                prop_assert!(undirected.neighbors(w).unwrap().contains(&u));
            }
        }
    }

    #[test]
    fn two_node_sets_agree_across_families(a in point_strategy(), b in point_strategy(), k in 1u32..=12) {
        prop_assume!(a != b);
        let nodes = NodeSet::from_points([Point::new(a.0, a.1).unwrap(), Point::new(b.0, b.1).unwrap()]).unwrap();
        let y = undirected(&nodes, Family::Yao, k);
        let t = undirected(&nodes, Family::Theta, k);
        prop_assert!(graphs_equal(&y, &t).unwrap());
        prop_assert_eq!(y.edge_count(), 1);
    }

    #[test]
    fn export_import_round_trip(nodes in node_set_strategy(20), k in 1u32..=9, family in family_strategy(), directed in any::<bool>()) {
        let g = build_directed(&nodes, family, k).unwrap();
        let g = if directed { g } else { undirect(&g).unwrap() };
        let back = graph_from_json(&graph_to_json(&g).unwrap()).unwrap();
        prop_assert!(graphs_equal(&g, &back).unwrap());
        prop_assert_eq!(g.edges(), back.edges());
        prop_assert!(back.nodes().same_nodes(&nodes));
        let ns = node_set_from_json(&node_set_to_json(&nodes).unwrap()).unwrap();
        prop_assert!(ns.same_nodes(&nodes));
    }

    #[test]
    fn delivered_paths_strictly_approach_the_target(nodes in node_set_strategy(30), k in 1u32..=12, family in family_strategy()) {
        let g = undirected(&nodes, family, k);
        let n = nodes.len();
        for s in 0..n {
            for t in 0..n {
                let route = greedy_route(&g, s, t).unwrap();
                let path = route.path();
                prop_assert_eq!(path[0], s);
                for hop in path.windows(2) {
                    prop_assert!(g.has_edge(hop[0], hop[1]));
                    let goal = nodes.point(t);
                    prop_assert!(nodes.point(hop[1]).distance(goal) < nodes.point(hop[0]).distance(goal));
                }
                let mut seen = path.to_vec();
                seen.sort_unstable();
                seen.dedup();
                prop_assert_eq!(seen.len(), path.len());
                if let RouteResult::Delivered { path } = &route {
                    prop_assert_eq!(*path.last().unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn witnesses_are_sound_and_routing_agrees(nodes in node_set_strategy(30), k in 1u32..=12, family in family_strategy()) {
        let g = undirected(&nodes, family, k);
        let verdict = check_void_free(&g).unwrap();
        for w in &verdict.witnesses {
            prop_assert!(w.u != w.v);
            let target = nodes.point(w.v);
            let d_uv = nodes.point(w.u).distance(target);
            prop_assert_eq!(d_uv, w.d_uv);
            for &x in g.neighbors(w.u).unwrap() {
                prop_assert!(nodes.point(x).distance(target) >= d_uv);
            }
            if let Some(m) = w.min_neighbor_distance {
                prop_assert!(m >= w.d_uv);
            }
            let patched = check_void_free(&g.with_extra_edge(w.u, w.v).unwrap()).unwrap();
            prop_assert!(!patched.contains_pair(w.u, w.v));
        }
        let routed = check_by_routing(&g).unwrap();
        prop_assert_eq!(routed.is_void_free(), verdict.is_void_free());
        for w in &routed.witnesses {
            prop_assert!(verdict.contains_pair(w.u, w.v));
        }
        if k >= 6 {
            prop_assert!(verdict.is_void_free());
        }
    }
}
