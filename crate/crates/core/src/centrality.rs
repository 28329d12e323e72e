//! Distance centrality: the sum of hop distances from a node to every other
//! node of a connected graph. Lower means more central.

use std::collections::VecDeque;
use std::ops::Index;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNREACHED: usize = usize::MAX;

/// Per-node distance centrality in exact integer hop sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityVector(Vec<u64>);

impl CentralityVector {
    pub fn new(values: Vec<u64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }
}

impl Index<usize> for CentralityVector {
    type Output = u64;

    fn index(&self, node: usize) -> &u64 {
        &self.0[node]
    }
}

/// Reusable BFS scratch space so the all-sources loop allocates once per
/// worker instead of once per source.
struct Bfs {
    dist: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![UNREACHED; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Fills `self.dist` from `source` and returns the distance sum.
    fn run(&mut self, g: &Graph, source: usize) -> Result<u64> {
        self.dist.fill(UNREACHED);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push_back(source);
        let mut reached = 1;
        let mut total = 0u64;
        while let Some(u) = self.queue.pop_front() {
            let next = self.dist[u] + 1;
            for &v in g.neighbors(u) {
                if self.dist[v] == UNREACHED {
                    self.dist[v] = next;
                    total += next as u64;
                    reached += 1;
                    self.queue.push_back(v);
                }
            }
        }
        if reached != g.node_count() {
            let node = self
                .dist
                .iter()
                .position(|&d| d == UNREACHED)
                .expect("some node unreached");
            return Err(Error::Disconnected {
                source_node: source,
                node,
            });
        }
        Ok(total)
    }
}

/// Hop distances from `source` to every node. Fails if any node is
/// unreachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<usize>> {
    let mut bfs = Bfs::new(g.node_count());
    bfs.run(g, source)?;
    Ok(bfs.dist)
}

/// Distance centrality of a single node.
pub fn distance_centrality(g: &Graph, node: usize) -> Result<u64> {
    Bfs::new(g.node_count()).run(g, node)
}

/// Distance centrality of every node, one BFS per source, spread over the
/// rayon pool. Output is independent of scheduling.
pub fn distance_centrality_all(g: &Graph) -> Result<CentralityVector> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.node_count();
    let values = (0..n)
        .into_par_iter()
        .map_init(|| Bfs::new(n), |bfs, source| bfs.run(g, source))
        .collect::<Result<Vec<u64>>>()?;
    Ok(CentralityVector(values))
}

/// Single-threaded variant of [`distance_centrality_all`].
pub fn distance_centrality_all_serial(g: &Graph) -> Result<CentralityVector> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut bfs = Bfs::new(g.node_count());
    let values = (0..g.node_count())
        .map(|source| bfs.run(g, source))
        .collect::<Result<Vec<u64>>>()?;
    Ok(CentralityVector(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn bridged_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&triangle(), 0).unwrap(), vec![0, 1, 1]);
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_distances(&path, 0).unwrap(), vec![0, 1, 2]);
        assert_eq!(
            bfs_distances(&bridged_triangles(), 0).unwrap(),
            vec![0, 1, 1, 2, 3, 3]
        );
    }

    #[test]
    fn all_sources_examples() {
        assert_eq!(distance_centrality_all(&triangle()).unwrap().values(), &[2, 2, 2]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(distance_centrality_all(&star).unwrap().values(), &[3, 5, 5, 5]);
        assert_eq!(
            distance_centrality_all(&bridged_triangles()).unwrap().values(),
            &[10, 10, 7, 7, 10, 10]
        );
    }

    #[test]
    fn single_node_is_zero() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(distance_centrality_all(&g).unwrap().values(), &[0]);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        match bfs_distances(&g, 0) {
            Err(Error::Disconnected { source_node: 0, node: 2 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(distance_centrality_all(&g).is_err());
        assert!(distance_centrality_all_serial(&g).is_err());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let g = bridged_triangles();
        assert_eq!(
            distance_centrality_all(&g).unwrap(),
            distance_centrality_all_serial(&g).unwrap()
        );
        assert_eq!(distance_centrality(&g, 2).unwrap(), 7);
    }
}
