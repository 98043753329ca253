//! Shared inputs for the criterion benchmarks.

use turanlab_core::{apex_mixed, build_gf, Graph, LinearForest};

pub fn forest(text: &str) -> LinearForest {
    LinearForest::parse(text).unwrap()
}

/// G_F(n) for F = P_7 ∪ P_5, δ_F = 4.
pub fn gf_host(n: usize) -> Graph {
    build_gf(&forest("7+5"), n).unwrap()
}

/// A deterministic pseudo-random graph, edge {i, j} kept when a hash of the
/// pair falls under `density` percent.
pub fn scrambled(n: usize, density: u64, salt: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let mut h = (i as u64) << 32 ^ j as u64 ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
            h ^= h >> 33;
            h = h.wrapping_mul(0xff51_afd7_ed55_8ccd);
            h ^= h >> 33;
            if h % 100 < density {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// K_1 + (3K_6 ∪ 3K_5) relabeled by a fixed permutation.
pub fn shuffled_apex(seed: u64) -> Graph {
    let g = apex_mixed(7, 3, 3).unwrap();
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut x = seed | 1;
    for i in (1..n).rev() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        perm.swap(i, (x % (i as u64 + 1)) as usize);
    }
    g.permuted(&perm).unwrap()
}
