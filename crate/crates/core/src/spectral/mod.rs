//! RatioCut spectral clustering baseline: eigenvectors of the `k` smallest
//! eigenvalues of the unnormalized Laplacian, rows clustered with k-means.

mod jacobi;
mod kmeans;

pub use jacobi::{eigen_smallest_k, eigen_symmetric, DenseSymMatrix, EigenPairs, MAX_SWEEPS};
pub use kmeans::{kmeans, Embedding, CONVERGENCE_SHIFT, MAX_ITERATIONS, RESTARTS};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Unnormalized Laplacian `L = D - A`.
pub fn laplacian(g: &Graph) -> DenseSymMatrix {
    DenseSymMatrix::from_upper(g.node_count(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            -1.0
        } else {
            0.0
        }
    })
}

/// Partitions `g` into `k` clusters.
pub fn spectral_cluster(g: &Graph, k: usize, seed: u64) -> Result<Partition> {
    if k == 0 || k > g.node_count() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must lie in 1..={}",
            g.node_count()
        )));
    }
    let eig = eigen_smallest_k(&laplacian(g), k)?;
    let points = Embedding::from_columns(&eig.vectors)?;
    let labels = kmeans(&points, k, seed)?;
    Ok(Partition::from_labels(&labels))
}
