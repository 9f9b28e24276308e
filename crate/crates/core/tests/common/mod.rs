//! Seeded instance generators and family helpers shared by the integration
//! suites. Everything is deterministic: fixed seeds, fixed orders.

use hgdual::{Hypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random hypergraph: `m` nonempty edges, each vertex joining an edge with
/// probability `p` (a random vertex is added when a draw comes out empty).
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize, p: f64) -> Hypergraph {
    let edges = (0..m)
        .map(|_| {
            let mut e = VertexSet::from_indices(n, (0..n).filter(|_| rng.random_bool(p)));
            if e.is_empty() {
                e.insert(rng.random_range(0..n));
            }
            e
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// The shared small corpus: universes of 3..=10 vertices, 1..=15 raw edges,
/// densities cycling over a spread. Instances are Sperner-reduced.
pub fn small_corpus(count: usize) -> Vec<Hypergraph> {
    let mut r = rng(0x5EED_0001);
    let densities = [0.2, 0.3, 0.45, 0.6, 0.75];
    (0..count)
        .map(|i| {
            let n = 3 + i % 8;
            let m = 1 + r.random_range(0..15);
            let p = densities[i % densities.len()];
            random_hypergraph(&mut r, n, m, p).sperner_reduce()
        })
        .collect()
}

/// Interval hypergraph: `count` intervals `[a, b]` over `0..n`, lengths
/// from `len_range`.
pub fn interval_hypergraph(
    rng: &mut ChaCha8Rng,
    n: usize,
    count: usize,
    len_range: std::ops::RangeInclusive<usize>,
) -> Hypergraph {
    let edges = (0..count)
        .map(|_| {
            let len = rng.random_range(len_range.clone()).min(n);
            let a = rng.random_range(0..=n - len);
            VertexSet::from_indices(n, a..a + len)
        })
        .collect();
    Hypergraph::new(n, edges)
}

pub fn path_graph(n: usize) -> Hypergraph {
    Hypergraph::new(
        n,
        (0..n - 1)
            .map(|i| VertexSet::from_indices(n, [i, i + 1]))
            .collect(),
    )
}

pub fn cycle_graph(n: usize) -> Hypergraph {
    Hypergraph::new(
        n,
        (0..n)
            .map(|i| VertexSet::from_indices(n, [i, (i + 1) % n]))
            .collect(),
    )
}

/// Random bipartite graph on `a + b` vertices (triangle-free by
/// construction); every edge crosses the bipartition.
pub fn bipartite_graph(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Hypergraph {
    let n = a + b;
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..n {
            if rng.random_bool(p) {
                edges.push(VertexSet::from_indices(n, [u, v]));
            }
        }
    }
    Hypergraph::new(n, edges)
}

/// Canonical form for family comparison.
pub fn sorted_family(mut fam: Vec<VertexSet>) -> Vec<VertexSet> {
    fam.sort();
    fam.dedup();
    fam
}

pub fn families_equal(a: Vec<VertexSet>, b: Vec<VertexSet>) -> bool {
    sorted_family(a) == sorted_family(b)
}
