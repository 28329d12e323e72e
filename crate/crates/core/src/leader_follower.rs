//! Leader-follower community detection.
//!
//! A node is a *leader* when at least one neighbor has strictly larger
//! distance centrality; every other node is a *loyal follower*. Leaders are
//! visited in order of increasing centrality and each claims its unclaimed
//! follower neighbors. Leaders that end up without followers are folded into
//! the community most of their neighbors belong to.
//!
//! On graphs whose communities are cliques that each contain a node with no
//! outside neighbors, this recovers the communities exactly.

use std::collections::HashMap;

use crate::centrality::{distance_centrality_all, CentralityVector};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Leader,
    Follower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleLabeling {
    roles: Vec<Role>,
    /// Leaders by (centrality, index) ascending.
    leaders_sorted: Vec<usize>,
}

impl RoleLabeling {
    pub fn role(&self, node: usize) -> Role {
        self.roles[node]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn is_leader(&self, node: usize) -> bool {
        self.roles[node] == Role::Leader
    }

    pub fn leaders_sorted(&self) -> &[usize] {
        &self.leaders_sorted
    }

    pub fn followers(&self) -> impl Iterator<Item = usize> + '_ {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == Role::Follower)
            .map(|(v, _)| v)
    }
}

/// Per-node community representative; `None` is the unassigned state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership(Vec<Option<usize>>);

impl Membership {
    pub fn get(&self, node: usize) -> Option<usize> {
        self.0[node]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.0
    }

    pub fn is_complete(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    /// Canonical partition. Panics if any node is unassigned.
    pub fn to_partition(&self) -> Partition {
        let reps: Vec<usize> = self
            .0
            .iter()
            .map(|m| m.expect("membership is complete"))
            .collect();
        Partition::from_labels(&reps)
    }
}

/// Tags `v` as a leader iff some neighbor `u` has `D(v) < D(u)`.
pub fn classify_roles(g: &Graph, dc: &CentralityVector) -> RoleLabeling {
    let roles: Vec<Role> = (0..g.node_count())
        .map(|v| {
            if g.neighbors(v).iter().any(|&u| dc[v] < dc[u]) {
                Role::Leader
            } else {
                Role::Follower
            }
        })
        .collect();
    let mut leaders_sorted: Vec<usize> = (0..g.node_count())
        .filter(|&v| roles[v] == Role::Leader)
        .collect();
    leaders_sorted.sort_by_key(|&v| (dc[v], v));
    RoleLabeling {
        roles,
        leaders_sorted,
    }
}

/// Most frequent value; ties go to the smallest.
fn majority(values: impl IntoIterator<Item = usize>) -> Option<usize> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for v in values {
        *counts.entry(v).or_default() += 1;
    }
    counts
        .into_iter()
        .max_by(|(a, ca), (b, cb)| ca.cmp(cb).then(b.cmp(a)))
        .map(|(v, _)| v)
}

/// Runs the assignment procedure and returns the raw membership map.
///
/// With no leaders at all every node stays unassigned; [`assign_communities`]
/// handles that case.
pub fn assign_membership(g: &Graph, roles: &RoleLabeling) -> Membership {
    let n = g.node_count();
    let mut m: Vec<Option<usize>> = (0..n)
        .map(|v| roles.is_leader(v).then_some(v))
        .collect();

    // Seed: leaders in order claim their still-free follower neighbors.
    let mut claimed = vec![0usize; n];
    for &leader in roles.leaders_sorted() {
        for &u in g.neighbors(leader) {
            if !roles.is_leader(u) && m[u].is_none() {
                m[u] = Some(leader);
                claimed[leader] += 1;
            }
        }
    }

    // Fold followerless leaders into a neighboring community. Updates are in
    // place, so later leaders see earlier absorptions.
    let mut pending: Vec<bool> = (0..n)
        .map(|v| roles.is_leader(v) && claimed[v] == 0)
        .collect();
    for &leader in roles.leaders_sorted() {
        if !pending[leader] {
            continue;
        }
        pending[leader] = false;
        let neighbors = g.neighbors(leader);
        let via_followers = majority(
            neighbors
                .iter()
                .filter(|&&u| !roles.is_leader(u))
                .filter_map(|&u| m[u]),
        );
        let target = via_followers.or_else(|| {
            majority(
                neighbors
                    .iter()
                    .filter_map(|&u| m[u])
                    .filter(|&rep| !pending[rep]),
            )
        });
        // With nothing to join the leader keeps its own community.
        if let Some(rep) = target {
            m[leader] = Some(rep);
        }
    }

    // Followers out of reach of every leader take the majority community of
    // their assigned neighbors, sweep by sweep, until nothing changes.
    loop {
        let updates: Vec<(usize, usize)> = (0..n)
            .filter(|&v| m[v].is_none())
            .filter_map(|v| majority(g.neighbors(v).iter().filter_map(|&u| m[u])).map(|rep| (v, rep)))
            .collect();
        if updates.is_empty() {
            break;
        }
        for (v, rep) in updates {
            m[v] = Some(rep);
        }
    }

    Membership(m)
}

/// Community assignment for a connected graph. A graph without leaders is
/// one community.
pub fn assign_communities(g: &Graph, roles: &RoleLabeling) -> Partition {
    if roles.leaders_sorted().is_empty() {
        return Partition::single(g.node_count());
    }
    let membership = assign_membership(g, roles);
    debug_assert!(membership.is_complete(), "connected graph leaves no node unassigned");
    membership.to_partition()
}

/// Leader-follower detection on an arbitrary graph. Each connected component
/// is handled on its own.
pub fn detect(g: &Graph) -> Result<Partition> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut labels = vec![(0usize, 0usize); g.node_count()];
    for (ci, component) in g.connected_components().into_iter().enumerate() {
        if component.len() == 1 {
            labels[component[0]] = (ci, 0);
            continue;
        }
        let sub = g.induced_subgraph(&component);
        let dc = distance_centrality_all(&sub)?;
        let roles = classify_roles(&sub, &dc);
        let local = assign_communities(&sub, &roles);
        for (i, &v) in component.iter().enumerate() {
            labels[v] = (ci, local.community_of(i));
        }
    }
    Ok(Partition::from_labels(&labels))
}
