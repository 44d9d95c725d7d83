#![allow(dead_code)]

use graph_hypersurface::embedding::RotationSystem;
use graph_hypersurface::graph::Multigraph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random connected multigraph with exactly `n` edges: a random spanning
/// tree on `v <= n + 1` vertices plus extra edges that may be loops or
/// parallel to existing ones, with shuffled edge ids and vertex labels.
pub fn random_connected(rng: &mut impl Rng, n: usize) -> Multigraph {
    let v = rng.gen_range(1..=n + 1);
    let mut pairs = Vec::with_capacity(n);
    for i in 1..v {
        pairs.push((rng.gen_range(0..i), i));
    }
    while pairs.len() < n {
        pairs.push((rng.gen_range(0..v), rng.gen_range(0..v)));
    }
    pairs.shuffle(rng);
    let mut labels: Vec<usize> = (0..v).collect();
    labels.shuffle(rng);
    let pairs = pairs.into_iter().map(|(a, b)| {
        if rng.gen_bool(0.5) {
            (labels[a], labels[b])
        } else {
            (labels[b], labels[a])
        }
    });
    let pairs: Vec<_> = pairs.collect();
    Multigraph::new(v, pairs).unwrap()
}

/// Every connected multigraph with `1..=max_edges` edges whose edge list is a
/// nondecreasing sequence of vertex pairs `(a, b)`, `a <= b`, using all of
/// the vertices `0..v`. No isomorphism reduction is attempted.
pub fn all_connected(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_edges {
        for v in 1..=n + 1 {
            let pairs: Vec<(usize, usize)> = (0..v)
                .flat_map(|a| (a..v).map(move |b| (a, b)))
                .collect();
            let mut chosen = Vec::with_capacity(n);
            extend(&pairs, 0, n, v, &mut chosen, &mut out);
        }
    }
    out
}

fn extend(
    pairs: &[(usize, usize)],
    from: usize,
    n: usize,
    v: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Multigraph>,
) {
    if chosen.len() == n {
        let g = Multigraph::new(v, chosen.iter().copied()).unwrap();
        if g.is_connected() {
            out.push(g);
        }
        return;
    }
    for i in from..pairs.len() {
        chosen.push(pairs[i]);
        extend(pairs, i, n, v, chosen, out);
        chosen.pop();
    }
}

/// A random edge-id permutation of `1..=n`.
pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    p.shuffle(rng);
    p
}

/// Wheel embeddings with random edge labels, randomly mirrored.
pub fn random_wheel_embedding(rng: &mut impl Rng, k: usize) -> RotationSystem {
    let base = RotationSystem::wheel(k).unwrap();
    let perm = random_perm(rng, 2 * k);
    let r = base.relabel_edges(&perm).unwrap();
    if rng.gen_bool(0.5) {
        r.mirrored()
    } else {
        r
    }
}
