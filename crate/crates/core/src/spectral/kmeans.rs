//! Seeded k-means: k-means++ initialization, Lloyd iterations, best of a
//! fixed number of restarts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub const RESTARTS: usize = 10;
pub const MAX_ITERATIONS: usize = 100;
/// Lloyd stops once no centroid moves farther than this.
pub const CONVERGENCE_SHIFT: f64 = 1e-9;

/// Row-major point matrix; row `i` belongs to node `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    dim: usize,
    data: Vec<f64>,
}

impl Embedding {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter("embedding rows differ in length".into()));
        }
        Ok(Self {
            dim,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Embedding whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::InvalidParameter("embedding columns differ in length".into()));
        }
        let dim = columns.len();
        let mut data = vec![0.0; rows * dim];
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                data[i * dim + j] = x;
            }
        }
        Ok(Self { dim, data })
    }

    pub fn rows(&self) -> usize {
        self.data.len().checked_div(self.dim).unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

struct Fit {
    labels: Vec<usize>,
    wcss: f64,
}

fn plus_plus_init(points: &Embedding, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = points.rows();
    let mut centroids = vec![points.row(rng.gen_range(0..n)).to_vec()];
    let mut nearest: Vec<f64> = (0..n).map(|i| dist2(points.row(i), &centroids[0])).collect();
    while centroids.len() < k {
        let total: f64 = nearest.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.gen::<f64>() * total;
            let mut chosen = n - 1;
            for (i, &d) in nearest.iter().enumerate() {
                if target < d {
                    chosen = i;
                    break;
                }
                target -= d;
            }
            chosen
        } else {
            rng.gen_range(0..n)
        };
        let c = points.row(pick).to_vec();
        for (i, d) in nearest.iter_mut().enumerate() {
            *d = d.min(dist2(points.row(i), &c));
        }
        centroids.push(c);
    }
    centroids
}

/// Nearest-centroid labels (ties to the lower centroid), then moves the
/// farthest point of a multi-member cluster into each empty cluster.
fn assign(points: &Embedding, centroids: &mut [Vec<f64>], labels: &mut [usize]) {
    let k = centroids.len();
    let mut counts = vec![0usize; k];
    let mut gap = vec![0.0; points.rows()];
    for (i, label) in labels.iter_mut().enumerate() {
        let row = points.row(i);
        let (best, d) = centroids
            .iter()
            .enumerate()
            .map(|(c, centroid)| (c, dist2(row, centroid)))
            .fold((0, f64::INFINITY), |acc, cur| if cur.1 < acc.1 { cur } else { acc });
        *label = best;
        gap[i] = d;
        counts[best] += 1;
    }
    for empty in 0..k {
        if counts[empty] > 0 {
            continue;
        }
        let far = (0..points.rows())
            .filter(|&i| counts[labels[i]] > 1)
            .fold(None, |best: Option<usize>, i| match best {
                Some(b) if gap[b] >= gap[i] => Some(b),
                _ => Some(i),
            })
            .expect("k <= rows leaves a cluster with a spare point");
        counts[labels[far]] -= 1;
        labels[far] = empty;
        counts[empty] = 1;
        gap[far] = 0.0;
        centroids[empty] = points.row(far).to_vec();
    }
}

fn means(points: &Embedding, labels: &[usize], k: usize) -> Vec<Vec<f64>> {
    let mut sums = vec![vec![0.0; points.dim()]; k];
    let mut counts = vec![0usize; k];
    for (i, &c) in labels.iter().enumerate() {
        counts[c] += 1;
        for (s, x) in sums[c].iter_mut().zip(points.row(i)) {
            *s += x;
        }
    }
    for (s, &count) in sums.iter_mut().zip(&counts) {
        for x in s.iter_mut() {
            *x /= count as f64;
        }
    }
    sums
}

fn lloyd(points: &Embedding, k: usize, rng: &mut ChaCha8Rng) -> Fit {
    let mut centroids = plus_plus_init(points, k, rng);
    let mut labels = vec![0usize; points.rows()];
    for _ in 0..MAX_ITERATIONS {
        assign(points, &mut centroids, &mut labels);
        let updated = means(points, &labels, k);
        let shift = centroids
            .iter()
            .zip(&updated)
            .map(|(a, b)| dist2(a, b).sqrt())
            .fold(0.0, f64::max);
        centroids = updated;
        if shift < CONVERGENCE_SHIFT {
            break;
        }
    }
    assign(points, &mut centroids, &mut labels);
    let centroids = means(points, &labels, k);
    let wcss = labels
        .iter()
        .enumerate()
        .map(|(i, &c)| dist2(points.row(i), &centroids[c]))
        .sum();
    Fit { labels, wcss }
}

/// Clusters the rows of `points` into `k` groups. Labels are canonical
/// (numbered by smallest member row). Deterministic in `seed`.
pub fn kmeans(points: &Embedding, k: usize, seed: u64) -> Result<Vec<usize>> {
    let n = points.rows();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must lie in 1..={n}"
        )));
    }
    let fits: Vec<Fit> = (0..RESTARTS)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(restart as u64);
            lloyd(points, k, &mut rng)
        })
        .collect();
    // first restart wins ties
    let best = fits
        .into_iter()
        .reduce(|best, fit| if fit.wcss < best.wcss { fit } else { best })
        .expect("at least one restart");
    Ok(Partition::from_labels(&best.labels).assignments().to_vec())
}
