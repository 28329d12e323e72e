//! Independent reference implementations used by the integration suites.
#![allow(dead_code, clippy::needless_range_loop)]

use lfcd::{Graph, Partition};
use rand::seq::SliceRandom;
use rand::Rng;

/// All-pairs hop distances by Floyd–Warshall; `None` means unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for &j in g.neighbors(i) {
            d[i][j] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

/// Column sums of the Floyd–Warshall matrix; panics if disconnected.
pub fn centrality_oracle(g: &Graph) -> Vec<u64> {
    let d = floyd_warshall(g);
    (0..g.node_count())
        .map(|v| (0..g.node_count()).map(|u| d[u][v].expect("connected")).sum())
        .collect()
}

/// Pair error summed literally over the upper triangle (diagonal included,
/// where the indicator is always zero).
pub fn pair_error_brute(truth: &Partition, pred: &Partition) -> u64 {
    let n = truth.node_count();
    let mut total = 0;
    for i in 0..n {
        for j in i..n {
            let same_truth = truth.community_of(i) == truth.community_of(j);
            let same_pred = pred.community_of(i) == pred.community_of(j);
            if same_truth != same_pred {
                total += 1;
            }
        }
    }
    total
}

/// Random connected graph: random spanning tree plus `extra` random edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::with_capacity(n + extra);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    if n > 1 {
        for _ in 0..extra {
            edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with exactly `pieces` connected components.
pub fn random_with_components<R: Rng>(rng: &mut R, sizes: &[usize], extra: usize) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for &s in sizes {
        let piece = random_connected(rng, s, extra);
        edges.extend(piece.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += s;
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
