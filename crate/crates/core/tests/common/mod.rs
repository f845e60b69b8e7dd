//! Brute-force references that share no code with the library's selection paths.
#![allow(dead_code)]

use std::f64::consts::PI;

use conegraph::{Family, NodeSet, Point};

/// Cone label via acos of the angle to north; index = ceil(angle / width) with north -> k.
pub fn reference_cone(origin: &Point, p: &Point, k: u32) -> u32 {
    let (dx, dy) = (p.x() - origin.x(), p.y() - origin.y());
    let r = dx.hypot(dy);
    let from_north = (dy / r).clamp(-1.0, 1.0).acos();
    let bearing = if dx >= 0.0 { from_north } else { 2.0 * PI - from_north };
    let bearing = if bearing == 0.0 { 2.0 * PI } else { bearing };
    let width = 2.0 * PI / f64::from(k);
    ((bearing / width).ceil() as u32).clamp(1, k)
}

/// Distance of `p` from `origin` along the bisector of cone `i`, unsigned.
pub fn reference_projection(origin: &Point, p: &Point, i: u32, k: u32) -> f64 {
    let theta = (f64::from(i) - 0.5) * 2.0 * PI / f64::from(k);
    ((p.x() - origin.x()) * theta.sin() + (p.y() - origin.y()) * theta.cos()).abs()
}

pub fn euclid(a: &Point, b: &Point) -> f64 {
    ((a.x() - b.x()).powi(2) + (a.y() - b.y()).powi(2)).sqrt()
}

/// True when `p` is within `eps` radians of a cone boundary seen from `origin`.
pub fn near_boundary(origin: &Point, p: &Point, k: u32, eps: f64) -> bool {
    let bearing = (p.x() - origin.x()).atan2(p.y() - origin.y()).rem_euclid(2.0 * PI);
    let t = bearing / (2.0 * PI / f64::from(k));
    (t - t.round()).abs() * 2.0 * PI / f64::from(k) < eps
}

/// Metric-minimal candidates (within `tol`) of cone `i` around `u`, ascending index.
pub fn rescan_minimisers(nodes: &NodeSet, family: Family, k: u32, u: usize, i: u32, tol: f64) -> Vec<usize> {
    let pu = nodes.point(u);
    let metric = |w: usize| match family {
        Family::Yao => euclid(pu, nodes.point(w)),
        Family::Theta => reference_projection(pu, nodes.point(w), i, k),
    };
    let members: Vec<usize> = (0..nodes.len())
        .filter(|&w| w != u && reference_cone(pu, nodes.point(w), k) == i)
        .collect();
    let Some(best) = members.iter().map(|&w| metric(w)).min_by(f64::total_cmp) else {
        return Vec::new();
    };
    members.into_iter().filter(|&w| metric(w) <= best + tol).collect()
}

/// Exhaustive void scan written directly from the definition.
#[allow(clippy::needless_range_loop)]
pub fn reference_witnesses(nodes: &NodeSet, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = nodes.len();
    let mut adjacent = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adjacent[a][b] = true;
        adjacent[b][a] = true;
    }
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let d_uv = euclid(nodes.point(u), nodes.point(v));
            let progress = (0..n).any(|w| adjacent[u][w] && euclid(nodes.point(w), nodes.point(v)) < d_uv);
            if !progress {
                out.push((u, v));
            }
        }
    }
    out
}
