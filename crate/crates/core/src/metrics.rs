//! Pair-misclassification error between two partitions.
//!
//! A pair of distinct nodes is misclassified when it is grouped together in
//! exactly one of the two partitions. Counting goes through the contingency
//! table: with `a` = pairs together in the truth, `b` = pairs together in the
//! prediction and `c` = pairs together in both, the error is `a + b - 2c`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScoreReport {
    pub pair_error: u64,
    pub num_pred_communities: usize,
    pub num_true_communities: usize,
    pub node_count: usize,
}

impl fmt::Display for ScoreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair_error={} pred_k={} true_k={} n={}",
            self.pair_error, self.num_pred_communities, self.num_true_communities, self.node_count
        )
    }
}

fn pairs(size: u64) -> u64 {
    size * size.saturating_sub(1) / 2
}

/// Number of unordered node pairs grouped together in exactly one of
/// `truth` and `pred`.
pub fn pair_error(truth: &Partition, pred: &Partition) -> Result<u64> {
    if truth.node_count() != pred.node_count() {
        return Err(Error::NodeSetMismatch(format!(
            "truth covers {} nodes, prediction covers {}",
            truth.node_count(),
            pred.node_count()
        )));
    }
    let mut truth_sizes = vec![0u64; truth.num_communities()];
    let mut pred_sizes = vec![0u64; pred.num_communities()];
    let mut joint: HashMap<(usize, usize), u64> = HashMap::new();
    for v in 0..truth.node_count() {
        let (t, p) = (truth.community_of(v), pred.community_of(v));
        truth_sizes[t] += 1;
        pred_sizes[p] += 1;
        *joint.entry((t, p)).or_default() += 1;
    }
    let together_truth: u64 = truth_sizes.into_iter().map(pairs).sum();
    let together_pred: u64 = pred_sizes.into_iter().map(pairs).sum();
    let together_both: u64 = joint.into_values().map(pairs).sum();
    Ok(together_truth + together_pred - 2 * together_both)
}

pub fn score(truth: &Partition, pred: &Partition) -> Result<ScoreReport> {
    Ok(ScoreReport {
        pair_error: pair_error(truth, pred)?,
        num_pred_communities: pred.num_communities(),
        num_true_communities: truth.num_communities(),
        node_count: truth.node_count(),
    })
}
