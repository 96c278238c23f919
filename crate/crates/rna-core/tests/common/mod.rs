//! Shared helpers for the integration suites: seeded random graphs and
//! labelings, and small combinatorial utilities.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rna_core::graph::Graph;
use rna_core::signing::ParityLabeling;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random attachment tree plus independent extra
/// edges with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, order: usize, p: f64) -> Graph {
    let mut g = Graph::empty(order).unwrap();
    for v in 1..order {
        let anchor = rng.gen_range(0..v);
        g.add_edge(v, anchor).unwrap();
    }
    for u in 0..order {
        for v in u + 1..order {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniformly random parity labeling of an `order`-vertex graph.
pub fn random_labeling(rng: &mut ChaCha8Rng, order: usize) -> ParityLabeling {
    let mut labels: Vec<usize> = (1..=order).collect();
    labels.shuffle(rng);
    ParityLabeling::new(labels).unwrap()
}

#[allow(dead_code)]
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut out = 1u64;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}
