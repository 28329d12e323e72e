//! Undirected simple graphs over contiguous `0..n` node indices, plus the
//! tab-separated edge-list format used to move them in and out of files.

use std::collections::{HashMap, VecDeque};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Immutable undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` nodes. Self-loops and repeated edges (in either
    /// orientation) are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange {
                    index,
                    u,
                    v,
                    node_count: n,
                });
            }
            if u == v {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: degree_sum / 2,
        })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Maximal connected node sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() > 0 && self.connected_components().len() == 1
    }

    /// Subgraph induced by `nodes` (sorted, distinct). Local index `i` maps
    /// to `nodes[i]`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut local = HashMap::with_capacity(nodes.len());
        for (i, &v) in nodes.iter().enumerate() {
            local.insert(v, i);
        }
        let adjacency: Vec<Vec<usize>> = nodes
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adjacency[v]
                    .iter()
                    .filter_map(|w| local.get(w).copied())
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            edge_count,
        }
    }

    /// Renames node `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.node_count(), "permutation length");
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.node_count(), &edges).expect("permutation stays in range")
    }
}

/// Bijection between external string labels and internal node indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeIdMap {
    to_internal: HashMap<String, usize>,
    to_external: Vec<String>,
}

impl NodeIdMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `"0"`, `"1"`, ... for graphs that were built from indices.
    pub fn identity(n: usize) -> Self {
        let mut map = Self::new();
        for i in 0..n {
            map.intern(&i.to_string());
        }
        map
    }

    /// Returns the index of `label`, assigning the next free index if unseen.
    pub fn intern(&mut self, label: &str) -> usize {
        if let Some(&id) = self.to_internal.get(label) {
            return id;
        }
        let id = self.to_external.len();
        self.to_internal.insert(label.to_owned(), id);
        self.to_external.push(label.to_owned());
        id
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.to_internal.get(label).copied()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.to_external[index]
    }

    pub fn len(&self) -> usize {
        self.to_external.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_external.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.to_external
    }
}

/// Splits a data line into its two tab-separated fields. Returns `None` for
/// blank and `#` comment lines.
pub(crate) fn split_pair(line: &str, line_no: usize) -> Result<Option<(&str, &str)>> {
    let line = line.strip_suffix('\r').unwrap_or(line);
    if line.trim().is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let mut fields = line.split('\t');
    match (fields.next(), fields.next(), fields.next()) {
        (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => Ok(Some((a, b))),
        _ => Err(Error::Parse {
            line: line_no,
            message: format!("expected two non-empty TAB-separated fields, got {line:?}"),
        }),
    }
}

/// Reads a TAB-separated edge list. Labels are numbered in order of first
/// appearance.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, NodeIdMap)> {
    let mut map = NodeIdMap::new();
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if let Some((a, b)) = split_pair(&line, i + 1)? {
            let u = map.intern(a);
            let v = map.intern(b);
            edges.push((u, v));
        }
    }
    if map.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let graph = Graph::from_edges(map.len(), &edges)?;
    Ok((graph, map))
}

/// Writes one `a TAB b` line per edge with `a < b` as strings, lines sorted.
pub fn write_edge_list<W: Write>(graph: &Graph, map: &NodeIdMap, mut out: W) -> Result<()> {
    let mut lines: Vec<(&str, &str)> = graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = (map.label(u), map.label(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    lines.sort_unstable();
    for (a, b) in lines {
        writeln!(out, "{a}\t{b}")?;
    }
    Ok(())
}
