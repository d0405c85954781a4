//! The orientation stages and the primitives they share.
//!
//! Each stage adds arcs to a [`MixedOrientation`] and never reverses one;
//! an attempt to do so surfaces as [`ConstructionError::Conflict`].

mod primitives;
mod stages;
mod walk;

pub use primitives::{
    arrow, one_in_rest_out, one_out_rest_in, orient_two_ways, rs_instance, rs_orient, RsInstance,
};
pub use stages::{apply_stage, Ctx};
pub use walk::{find_mixed_closure, orient_walk, walk_direction, MixedWalk, WalkDir};

use crate::graph::VertexId;
use crate::mixed::{ConflictError, Stage};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Conflict(#[from] ConflictError),
    #[error("{stage}: no {what} for vertex {vertex}")]
    NotFound { stage: Stage, vertex: VertexId, what: String },
    #[error("{stage}: invalid R-S instance: {detail}")]
    InvalidRs { stage: Stage, detail: String },
    #[error("{stage}: vertex {vertex} has {found} edges where two ways needs at least 2")]
    TwoWays { stage: Stage, vertex: VertexId, found: usize },
    #[error("{stage}: {detail}")]
    Internal { stage: Stage, detail: String },
}

impl ConstructionError {
    pub fn stage(&self) -> Stage {
        match self {
            ConstructionError::Conflict(c) => c.stage,
            ConstructionError::NotFound { stage, .. }
            | ConstructionError::InvalidRs { stage, .. }
            | ConstructionError::TwoWays { stage, .. }
            | ConstructionError::Internal { stage, .. } => *stage,
        }
    }
}
