//! Seeded graph generators for verification and benchmarking.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsp_core::{Graph, GraphBuilder};

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusParams {
    pub count: usize,
    pub vertices: RangeInclusive<usize>,
    pub weights: RangeInclusive<u32>,
    pub seed: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        Self {
            count: 500,
            vertices: 5..=60,
            weights: 1..=100,
            seed: 42,
        }
    }
}

/// Random connected simple graph with integer weights.
///
/// `m` is drawn log-uniformly from `[n - 1, n (n - 1) / 2]` so sparse graphs
/// (long shortest paths, many forest vertices) are as common as dense ones.
/// The target is the vertex farthest from the source.
pub fn random_connected<R: Rng>(
    rng: &mut R,
    vertices: RangeInclusive<usize>,
    weights: RangeInclusive<u32>,
) -> Graph {
    let n = rng.random_range(vertices).max(2);
    let max_m = n * (n - 1) / 2;
    let lo = ((n - 1) as f64).ln();
    let hi = (max_m as f64).ln();
    let m = (rng.random_range(lo..=hi).exp().round() as usize).clamp(n - 1, max_m);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = HashSet::with_capacity(m);
    let mut builder = GraphBuilder::with_capacity(n, m);
    let add = |builder: &mut GraphBuilder, rng: &mut R, u: usize, v: usize| {
        let w = rng.random_range(weights.clone());
        builder.add_edge(u, v, f64::from(w)).unwrap();
    };
    for k in 1..n {
        let (u, v) = (order[k], order[rng.random_range(0..k)]);
        pairs.insert((u.min(v), u.max(v)));
        add(&mut builder, rng, u, v);
    }
    if m > max_m / 2 {
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|p| !pairs.contains(p))
            .collect();
        rest.shuffle(rng);
        for &(u, v) in rest.iter().take(m - (n - 1)) {
            add(&mut builder, rng, u, v);
        }
    } else {
        while pairs.len() < m {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v && pairs.insert((u.min(v), u.max(v))) {
                add(&mut builder, rng, u, v);
            }
        }
    }

    let source = rng.random_range(0..n);
    let probe = builder.clone().build(source, (source + 1) % n).unwrap();
    let tree = rsp_core::spt::dijkstra(&probe, source);
    let target = (0..n)
        .max_by(|&a, &b| tree.dist(a).total_cmp(&tree.dist(b)).then(b.cmp(&a)))
        .unwrap();
    builder.build(source, target).unwrap()
}

/// The corpus described by `params`, generated from one seeded stream.
pub fn corpus(params: &CorpusParams) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..params.count)
        .map(|_| random_connected(&mut rng, params.vertices.clone(), params.weights.clone()))
        .collect()
}

/// `2^k` vertices: a backbone path `0..2^(k-1)` of weight-2 edges from `s = 0`
/// to its last vertex `t`, one pendant vertex (weight 1) per remaining id hung
/// off a random backbone vertex, and `2 n` random chords. A chord between
/// vertices at backbone positions `a` and `b` weighs `2 |a - b| + 3`, more than
/// the tree path, so `T_s` is the backbone with its pendants and `l = 2^(k-1) - 1`.
pub fn path_with_chords(k: u32, seed: u64) -> Graph {
    let n = 1usize << k;
    let spine = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(k));
    let mut position: Vec<usize> = (0..n).collect();
    let mut builder = GraphBuilder::with_capacity(n, 3 * n);
    for v in 1..spine {
        builder.add_edge(v - 1, v, 2.0).unwrap();
    }
    for (p, pos) in position.iter_mut().enumerate().skip(spine) {
        let anchor = rng.random_range(0..spine);
        *pos = anchor;
        builder.add_edge(anchor, p, 1.0).unwrap();
    }
    for _ in 0..2 * n {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let span = position[a].abs_diff(position[b]);
        builder.add_edge(a, b, (2 * span + 3) as f64).unwrap();
    }
    builder.build(0, spine - 1).unwrap()
}
