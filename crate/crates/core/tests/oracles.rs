//! Library results checked against the brute-force references in `common`.

mod common;

use common::*;
use conegraph::construction::{build_directed, undirect, yao};
use conegraph::corpus::random_nodeset;
use conegraph::routing::{greedy_step, Step};
use conegraph::voidcheck::check_void_free;
use conegraph::{graphs_equal, Family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn cone_assignment_matches_reference() {
    for seed in 0..40 {
        let nodes = random_nodeset(25, seed).unwrap();
        for k in 1..=16 {
            for (i, a) in nodes.points().iter().enumerate() {
                for b in &nodes.points()[i + 1..] {
                    if near_boundary(a, b, k, 1e-9) {
                        continue;
                    }
                    let got = conegraph::geometry::cone_of(a, b, k).unwrap().index();
                    assert_eq!(got, reference_cone(a, b, k));
                }
            }
        }
    }
}

#[test]
fn directed_edges_are_per_cone_minimisers() {
    for seed in 0..20 {
        let nodes = random_nodeset(30, 1000 + seed).unwrap();
        for family in [Family::Yao, Family::Theta] {
            let g = build_directed(&nodes, family, 6).unwrap();
            let mut per_node = vec![Vec::new(); nodes.len()];
            for &(u, w) in g.edges() {
                per_node[u].push(w);
            }
            for (u, chosen) in per_node.iter().enumerate() {
                assert!(chosen.len() <= 6);
                for i in 1..=6 {
                    let minimisers = rescan_minimisers(&nodes, family, 6, u, i, 0.0);
                    let picked: Vec<_> = chosen
                        .iter()
                        .filter(|&&w| reference_cone(nodes.point(u), nodes.point(w), 6) == i)
                        .collect();
                    match minimisers.first() {
                        None => assert!(picked.is_empty()),
                        Some(&w) => assert_eq!(picked, vec![&w], "{family} u={u} cone {i}"),
                    }
                }
            }
        }
    }
}

#[test]
fn undirected_count_bounded_by_directed() {
    for seed in 0..10 {
        let nodes = random_nodeset(20, seed).unwrap();
        let d = build_directed(&nodes, Family::Yao, 6).unwrap();
        let u = undirect(&d).unwrap();
        assert!(u.edge_count() <= d.edge_count());
        assert!(d.edge_count() <= 20 * 6);
    }
}

#[test]
fn y6_and_y7_differ_on_generic_sets() {
    let nodes = random_nodeset(20, 77).unwrap();
    let (y6, y7) = (yao(&nodes, 6).unwrap(), yao(&nodes, 7).unwrap());
    assert_ne!(y6.edge_count(), y7.edge_count());
    assert!(!graphs_equal(&y6, &y7).unwrap());
}

#[test]
fn k1_yao_is_nearest_neighbour_graph() {
    for seed in 0..20 {
        let nodes = random_nodeset(15, seed).unwrap();
        let d = build_directed(&nodes, Family::Yao, 1).unwrap();
        for &(u, w) in d.edges() {
            let nearest = (0..nodes.len())
                .filter(|&x| x != u)
                .min_by(|&a, &b| euclid(nodes.point(u), nodes.point(a)).total_cmp(&euclid(nodes.point(u), nodes.point(b))))
                .unwrap();
            assert_eq!(w, nearest);
        }
        assert_eq!(d.edge_count(), nodes.len());
    }
}

#[test]
fn greedy_step_matches_exhaustive_argmin() {
    let nodes = random_nodeset(40, 5).unwrap();
    let g = yao(&nodes, 7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let u = rng.gen_range(0..nodes.len());
        let t = loop {
            let t = rng.gen_range(0..nodes.len());
            if t != u {
                break t;
            }
        };
        let goal = nodes.point(t);
        let best = g
            .neighbors(u)
            .unwrap()
            .iter()
            .copied()
            .min_by(|&a, &b| euclid(nodes.point(a), goal).total_cmp(&euclid(nodes.point(b), goal)).then(a.cmp(&b)));
        let expected = match best {
            Some(w) if euclid(nodes.point(w), goal) < euclid(nodes.point(u), goal) => Step::Forward(w),
            _ => panic!("k=7 graphs are void-free"),
        };
        assert_eq!(greedy_step(&g, u, t).unwrap(), expected);
    }
}

#[test]
fn void_scan_matches_definition() {
    for seed in 0..60 {
        let nodes = random_nodeset(3 + (seed as usize % 20), seed).unwrap();
        for k in 1..=6 {
            for family in [Family::Yao, Family::Theta] {
                let g = undirect(&build_directed(&nodes, family, k).unwrap()).unwrap();
                let verdict = check_void_free(&g).unwrap();
                assert_eq!(verdict.pairs(), reference_witnesses(&nodes, g.edges()));
            }
        }
    }
}
