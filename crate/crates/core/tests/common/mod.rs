#![allow(dead_code)]

use rand::Rng;
use stc_core::model::ElInstance;
use stc_core::Graph;

/// Every labeled graph on `0..=max_n` vertices.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u64..1 << pairs {
            out.push(Graph::from_pair_mask(n, mask));
        }
    }
    out
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs).unwrap()
}

/// Each color enters each edge list independently with probability 1/2.
pub fn random_lists<R: Rng>(rng: &mut R, m: usize, c: usize) -> Vec<Vec<usize>> {
    (0..m)
        .map(|_| (1..=c).filter(|_| rng.gen_bool(0.5)).collect())
        .collect()
}

pub fn random_el<R: Rng>(rng: &mut R, max_n: usize, max_c: usize) -> ElInstance {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.2..0.9);
    let g = random_graph(rng, n, p);
    let c = rng.gen_range(1..=max_c);
    let k = rng.gen_range(0..=g.m());
    let psi = if rng.gen_bool(0.3) {
        vec![(1..=c).collect(); g.m()]
    } else {
        random_lists(rng, g.m(), c)
    };
    ElInstance::new(g, c, k, psi).unwrap()
}

/// Maps `f` over `items` on all cores, keeping input order.
pub fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(usize, &T) -> U + Sync) -> Vec<U> {
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = items.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .enumerate()
            .map(|(ci, part)| {
                let f = &f;
                s.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(i, x)| f(ci * chunk + i, x))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    })
}
