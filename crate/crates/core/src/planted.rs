//! Planted-clique benchmark graphs and a checker for the two community
//! properties they are built to satisfy:
//!
//! 1. every community induces a clique;
//! 2. every community has at least one member with no neighbors outside it
//!    (a loyal follower).
//!
//! Random draws happen in a fixed order: community sizes, then one protected
//! follower per community, then the cross-community edges. Redraws for
//! connectivity only repeat the last step, so every attempt for a seed shares
//! the same communities.

use std::fmt;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

pub const MAX_CONNECT_RETRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlantedSpec {
    pub num_communities: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub inter_edges: usize,
    pub seed: u64,
    pub require_connected: bool,
}

impl PlantedSpec {
    pub fn new(num_communities: usize, size_min: usize, size_max: usize, inter_edges: usize, seed: u64) -> Self {
        Self {
            num_communities,
            size_min,
            size_max,
            inter_edges,
            seed,
            require_connected: true,
        }
    }

    fn check(&self) -> Result<()> {
        if self.num_communities == 0 {
            return Err(Error::InvalidParameter("need at least one community".into()));
        }
        if self.size_min < 2 || self.size_min > self.size_max {
            return Err(Error::InvalidParameter(format!(
                "community sizes must satisfy 2 <= min <= max, got {}..={}",
                self.size_min, self.size_max
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedInstance {
    pub graph: Graph,
    pub truth: Partition,
    /// One guaranteed loyal follower per community, indexed by community id.
    pub protected_followers: Vec<usize>,
}

/// Number of node pairs that may carry a cross-community edge: both ends
/// unprotected and in different communities.
fn allowed_cross_pairs(sizes: &[usize]) -> usize {
    let open: Vec<usize> = sizes.iter().map(|s| s - 1).collect();
    let total: usize = open.iter().sum();
    let same: usize = open.iter().map(|u| u * u).sum();
    (total * total - same) / 2
}

/// Largest `inter_edges` any instance with these community sizes accepts.
pub fn max_inter_edges(sizes: &[usize]) -> usize {
    allowed_cross_pairs(sizes)
}

/// Community sizes a spec's seed will produce, without building the graph.
pub fn draw_sizes(spec: &PlantedSpec) -> Result<Vec<usize>> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(sample_sizes(spec, &mut rng))
}

fn sample_sizes(spec: &PlantedSpec, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..spec.num_communities)
        .map(|_| rng.gen_range(spec.size_min..=spec.size_max))
        .collect()
}

pub fn generate(spec: &PlantedSpec) -> Result<PlantedInstance> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let sizes = sample_sizes(spec, &mut rng);

    let mut offsets = Vec::with_capacity(sizes.len());
    let mut n = 0;
    for &s in &sizes {
        offsets.push(n);
        n += s;
    }
    let protected: Vec<usize> = sizes
        .iter()
        .zip(&offsets)
        .map(|(&s, &start)| start + rng.gen_range(0..s))
        .collect();

    let max = allowed_cross_pairs(&sizes);
    if spec.inter_edges > max {
        return Err(Error::TooManyInterEdges {
            requested: spec.inter_edges,
            max,
        });
    }

    let mut labels = Vec::with_capacity(n);
    let mut intra = Vec::new();
    for (c, (&s, &start)) in sizes.iter().zip(&offsets).enumerate() {
        labels.extend(std::iter::repeat_n(c, s));
        for u in start..start + s {
            for v in u + 1..start + s {
                intra.push((u, v));
            }
        }
    }

    let mut candidates = Vec::with_capacity(max);
    for u in 0..n {
        if protected[labels[u]] == u {
            continue;
        }
        for v in u + 1..n {
            if labels[v] != labels[u] && protected[labels[v]] != v {
                candidates.push((u, v));
            }
        }
    }
    debug_assert_eq!(candidates.len(), max);

    let truth = Partition::from_labels(&labels);
    let attempts = if spec.require_connected { MAX_CONNECT_RETRIES } else { 1 };
    // A spanning structure over k communities needs k - 1 cross edges.
    if spec.require_connected && spec.inter_edges + 1 < spec.num_communities {
        return Err(Error::ConnectivityUnattainable { retries: 0 });
    }
    for _ in 0..attempts {
        let mut picks = index::sample(&mut rng, candidates.len(), spec.inter_edges).into_vec();
        picks.sort_unstable();
        let mut edges = intra.clone();
        edges.extend(picks.into_iter().map(|i| candidates[i]));
        let graph = Graph::from_edges(n, &edges)?;
        if !spec.require_connected || graph.is_connected() {
            return Ok(PlantedInstance {
                graph,
                truth,
                protected_followers: protected,
            });
        }
    }
    Err(Error::ConnectivityUnattainable { retries: attempts })
}

/// A failed community property, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Community is not a clique; `missing` lists the absent member pairs.
    NotClique {
        community: usize,
        missing: Vec<(usize, usize)>,
    },
    /// Every member has an outside neighbor; `witnesses` pairs each member
    /// with one such neighbor.
    NoLoyalFollower {
        community: usize,
        witnesses: Vec<(usize, usize)>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotClique { community, missing } => write!(
                f,
                "community {community} is not a clique: {} missing edge(s), first ({}, {})",
                missing.len(),
                missing[0].0,
                missing[0].1
            ),
            Violation::NoLoyalFollower { community, witnesses } => write!(
                f,
                "community {community} has no loyal follower ({} members all have outside neighbors)",
                witnesses.len()
            ),
        }
    }
}

/// Checks both community properties for every community of `truth`.
/// Returns an empty list when the graph complies.
pub fn validate(g: &Graph, truth: &Partition) -> Vec<Violation> {
    assert_eq!(g.node_count(), truth.node_count(), "truth must cover the graph");
    let mut violations = Vec::new();
    for (community, members) in truth.communities().into_iter().enumerate() {
        let missing: Vec<(usize, usize)> = members
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if !missing.is_empty() {
            violations.push(Violation::NotClique { community, missing });
        }

        let mut witnesses = Vec::with_capacity(members.len());
        for &u in &members {
            match g
                .neighbors(u)
                .iter()
                .find(|&&w| truth.community_of(w) != community)
            {
                Some(&outside) => witnesses.push((u, outside)),
                None => {
                    witnesses.clear();
                    break;
                }
            }
        }
        if !witnesses.is_empty() {
            violations.push(Violation::NoLoyalFollower { community, witnesses });
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_triangle() {
        let inst = generate(&PlantedSpec::new(1, 3, 3, 0, 42)).unwrap();
        assert_eq!(inst.graph.node_count(), 3);
        assert_eq!(inst.graph.edge_count(), 3);
        assert_eq!(inst.truth.num_communities(), 1);
        assert!(validate(&inst.graph, &inst.truth).is_empty());
    }

    #[test]
    fn exact_inter_edge_count() {
        let spec = PlantedSpec::new(10, 2, 30, 200, 7);
        let inst = generate(&spec).unwrap();
        let intra: usize = inst
            .truth
            .communities()
            .iter()
            .map(|c| c.len() * (c.len() - 1) / 2)
            .sum();
        assert_eq!(inst.graph.edge_count(), intra + 200);
        assert!(inst.graph.is_connected());
        assert!(validate(&inst.graph, &inst.truth).is_empty());
    }

    #[test]
    fn protected_followers_stay_inside() {
        let inst = generate(&PlantedSpec::new(6, 2, 8, 40, 3)).unwrap();
        for (c, &f) in inst.protected_followers.iter().enumerate() {
            assert_eq!(inst.truth.community_of(f), c);
            assert!(inst
                .graph
                .neighbors(f)
                .iter()
                .all(|&w| inst.truth.community_of(w) == c));
        }
    }

    #[test]
    fn too_many_inter_edges() {
        // sizes 2 and 2: one unprotected node each, a single allowed pair
        let err = generate(&PlantedSpec::new(2, 2, 2, 2, 0)).unwrap_err();
        assert!(matches!(err, Error::TooManyInterEdges { requested: 2, max: 1 }));
        assert!(generate(&PlantedSpec::new(2, 2, 2, 1, 0)).is_ok());
    }

    #[test]
    fn invalid_sizes() {
        assert!(generate(&PlantedSpec::new(3, 1, 4, 0, 0)).is_err());
        assert!(generate(&PlantedSpec::new(3, 5, 4, 0, 0)).is_err());
        assert!(generate(&PlantedSpec::new(0, 2, 4, 0, 0)).is_err());
    }

    #[test]
    fn disconnected_request_fails_fast() {
        let err = generate(&PlantedSpec::new(3, 3, 3, 0, 0)).unwrap_err();
        assert!(matches!(err, Error::ConnectivityUnattainable { .. }));
        let spec = PlantedSpec {
            require_connected: false,
            ..PlantedSpec::new(3, 3, 3, 0, 0)
        };
        assert_eq!(generate(&spec).unwrap().graph.connected_components().len(), 3);
    }

    #[test]
    fn same_seed_same_instance() {
        let spec = PlantedSpec::new(5, 2, 10, 30, 99);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = generate(&PlantedSpec { seed: 100, ..spec }).unwrap();
        assert_ne!(generate(&spec).unwrap().graph, other.graph);
    }

    #[test]
    fn densities_share_communities() {
        let sparse = generate(&PlantedSpec::new(10, 2, 30, 200, 5)).unwrap();
        let dense = generate(&PlantedSpec::new(10, 2, 30, 2000, 5)).unwrap();
        assert_eq!(sparse.truth, dense.truth);
        assert_eq!(sparse.protected_followers, dense.protected_followers);
    }

    #[test]
    fn validate_path_is_not_a_clique() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let v = validate(&g, &Partition::single(3));
        assert_eq!(
            v,
            vec![Violation::NotClique {
                community: 0,
                missing: vec![(0, 2)]
            }]
        );
    }

    #[test]
    fn validate_bridged_triangles() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let truth = Partition::from_labels(&[0, 0, 0, 1, 1, 1]);
        assert!(validate(&g, &truth).is_empty());
    }

    #[test]
    fn validate_flags_missing_follower() {
        // K2 pair {0,1} where both ends have outside edges
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let truth = Partition::from_labels(&[0, 0, 1, 1]);
        let v = validate(&g, &truth);
        assert!(v.contains(&Violation::NoLoyalFollower {
            community: 0,
            witnesses: vec![(0, 2), (1, 3)]
        }));
    }
}
