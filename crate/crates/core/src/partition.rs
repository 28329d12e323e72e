//! Disjoint community assignments and their TSV file format.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{split_pair, NodeIdMap};

/// A covering partition of `0..n` in canonical form: community ids are
/// `0..k` and numbered by ascending smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    community_of: Vec<usize>,
    num_communities: usize,
}

impl Partition {
    /// Canonicalizes arbitrary per-node labels. Nodes sharing a label share a
    /// community.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Self {
        let mut renumber: HashMap<&T, usize> = HashMap::new();
        let community_of = labels
            .iter()
            .map(|label| {
                let next = renumber.len();
                *renumber.entry(label).or_insert(next)
            })
            .collect();
        Self {
            community_of,
            num_communities: renumber.len(),
        }
    }

    /// Builds from explicit member lists. Every node in `0..n` must appear
    /// exactly once.
    pub fn from_communities(n: usize, communities: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (c, members) in communities.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::InvalidParameter(format!(
                        "community member {v} outside 0..{n}"
                    )));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "node {v} appears in more than one community"
                    )));
                }
                labels[v] = c;
            }
        }
        if let Some(v) = labels.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidParameter(format!("node {v} is not in any community")));
        }
        Ok(Self::from_labels(&labels))
    }

    /// Everything in one community.
    pub fn single(n: usize) -> Self {
        Self {
            community_of: vec![0; n],
            num_communities: usize::from(n > 0),
        }
    }

    pub fn node_count(&self) -> usize {
        self.community_of.len()
    }

    pub fn num_communities(&self) -> usize {
        self.num_communities
    }

    pub fn community_of(&self, node: usize) -> usize {
        self.community_of[node]
    }

    pub fn assignments(&self) -> &[usize] {
        &self.community_of
    }

    /// Member lists indexed by community id, each sorted.
    pub fn communities(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_communities];
        for (v, &c) in self.community_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Partition of the renamed node set where node `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Partition {
        let mut labels = vec![0; self.node_count()];
        for (v, &c) in self.community_of.iter().enumerate() {
            labels[perm[v]] = c;
        }
        Partition::from_labels(&labels)
    }
}

/// Writes `label TAB community_id` lines sorted by label.
pub fn write_partition<W: Write>(partition: &Partition, map: &NodeIdMap, mut out: W) -> Result<()> {
    let mut rows: Vec<(&str, usize)> = (0..partition.node_count())
        .map(|v| (map.label(v), partition.community_of(v)))
        .collect();
    rows.sort_unstable();
    for (label, c) in rows {
        writeln!(out, "{label}\t{c}")?;
    }
    Ok(())
}

/// Reads a partition file into a label → community id map. Ids may be any
/// non-negative integers; they are canonicalized when the map is turned into
/// a [`Partition`].
pub fn read_partition<R: BufRead>(reader: R) -> Result<BTreeMap<String, usize>> {
    let mut rows = BTreeMap::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let Some((label, id)) = split_pair(&line, line_no)? else {
            continue;
        };
        let id: usize = id.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("community id {id:?} is not a non-negative integer"),
        })?;
        if rows.insert(label.to_owned(), id).is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("label {label:?} listed twice"),
            });
        }
    }
    if rows.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(rows)
}

/// Aligns two label maps on a shared node order (sorted labels). Both must
/// name exactly the same labels.
pub fn align_partitions(
    truth: &BTreeMap<String, usize>,
    pred: &BTreeMap<String, usize>,
) -> Result<(Partition, Partition)> {
    if let Some(label) = truth.keys().find(|l| !pred.contains_key(*l)) {
        return Err(Error::NodeSetMismatch(format!("{label:?} missing from prediction")));
    }
    if let Some(label) = pred.keys().find(|l| !truth.contains_key(*l)) {
        return Err(Error::NodeSetMismatch(format!("{label:?} missing from truth")));
    }
    let t: Vec<usize> = truth.values().copied().collect();
    let p: Vec<usize> = pred.values().copied().collect();
    Ok((Partition::from_labels(&t), Partition::from_labels(&p)))
}
