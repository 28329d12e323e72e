//! Sparse-vs-dense comparison harness: for each (seed, inter-edge count)
//! cell, generate a planted instance, run leader-follower, hand its
//! community count to spectral clustering, and score both.

use std::io::Write;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::leader_follower::detect;
use crate::metrics::pair_error;
use crate::planted::{generate, PlantedSpec};
use crate::spectral::spectral_cluster;

pub const CSV_HEADER: [&str; 7] = [
    "seed",
    "inter_edges",
    "n",
    "true_k",
    "lf_k",
    "lf_error",
    "spectral_error",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareConfig {
    pub communities: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub seeds: RangeInclusive<u64>,
    pub inter_edges: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompareRow {
    pub seed: u64,
    pub inter_edges: usize,
    pub n: usize,
    pub true_k: usize,
    pub lf_k: usize,
    pub lf_error: u64,
    pub spectral_error: u64,
}

/// Runs one cell.
pub fn compare_cell(cfg: &CompareConfig, seed: u64, inter_edges: usize) -> Result<CompareRow> {
    let spec = PlantedSpec::new(cfg.communities, cfg.size_min, cfg.size_max, inter_edges, seed);
    let inst = generate(&spec)?;
    let lf = detect(&inst.graph)?;
    let spectral = spectral_cluster(&inst.graph, lf.num_communities(), seed)?;
    Ok(CompareRow {
        seed,
        inter_edges,
        n: inst.graph.node_count(),
        true_k: inst.truth.num_communities(),
        lf_k: lf.num_communities(),
        lf_error: pair_error(&inst.truth, &lf)?,
        spectral_error: pair_error(&inst.truth, &spectral)?,
    })
}

/// All cells, sorted by (seed, inter_edges). Cells run concurrently.
pub fn run_compare(cfg: &CompareConfig) -> Result<Vec<CompareRow>> {
    if cfg.inter_edges.is_empty() {
        return Err(Error::InvalidParameter("no inter-edge counts given".into()));
    }
    if cfg.seeds.is_empty() {
        return Err(Error::InvalidParameter("empty seed range".into()));
    }
    let cells: Vec<(u64, usize)> = cfg
        .seeds
        .clone()
        .flat_map(|s| cfg.inter_edges.iter().map(move |&m| (s, m)))
        .collect();
    let mut rows = cells
        .into_par_iter()
        .map(|(seed, m)| compare_cell(cfg, seed, m))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.seed, r.inter_edges));
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[CompareRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let to_io = |e: csv::Error| Error::Io(e.into());
    w.write_record(CSV_HEADER).map_err(to_io)?;
    for r in rows {
        w.write_record([
            r.seed.to_string(),
            r.inter_edges.to_string(),
            r.n.to_string(),
            r.true_k.to_string(),
            r.lf_k.to_string(),
            r.lf_error.to_string(),
            r.spectral_error.to_string(),
        ])
        .map_err(to_io)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid() {
        let cfg = CompareConfig {
            communities: 4,
            size_min: 3,
            size_max: 6,
            seeds: 1..=2,
            inter_edges: vec![20, 5],
        };
        let rows = run_compare(&cfg).unwrap();
        let keys: Vec<(u64, usize)> = rows.iter().map(|r| (r.seed, r.inter_edges)).collect();
        assert_eq!(keys, vec![(1, 5), (1, 20), (2, 5), (2, 20)]);
        assert!(rows.iter().all(|r| r.lf_error == 0 && r.lf_k == r.true_k));

        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("seed,inter_edges,n,true_k,lf_k,lf_error,spectral_error\n1,5,"));
        assert_eq!(text.lines().count(), 5);
    }
}
