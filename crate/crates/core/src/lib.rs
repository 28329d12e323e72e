//! Community detection by leader-follower role assignment.
//!
//! Distance centrality separates *leaders* (nodes bridging communities) from
//! *loyal followers* (nodes whose neighbors all sit in one community); the
//! followers then seed one community per leader group. The number of
//! communities is learned, not supplied.
//!
//! Alongside the detector the crate ships a RatioCut spectral clustering
//! baseline, a planted-clique benchmark generator, the pair-misclassification
//! score, and the `lfcd` command line that ties them together.

pub mod centrality;
pub mod cli;
pub mod compare;
pub mod error;
pub mod graph;
pub mod leader_follower;
pub mod metrics;
pub mod partition;
pub mod planted;
pub mod spectral;

pub use centrality::{distance_centrality_all, CentralityVector};
pub use error::{Error, Result};
pub use graph::{Graph, NodeIdMap};
pub use leader_follower::{classify_roles, detect, Role, RoleLabeling};
pub use metrics::{pair_error, ScoreReport};
pub use partition::Partition;
pub use planted::{generate, validate, PlantedInstance, PlantedSpec};
pub use spectral::spectral_cluster;
