//! Designs, Study-space poses, dual quaternions and constraint generation.

mod constraints;
mod design;
mod dq;

pub use constraints::{
    canonical_constraints, general_constraints, limb_anchors, limb_constraints, normalization,
    study_quadric, translational_substitution, translational_system, twisted_substitution,
    ConstraintSystem,
};
pub use design::{Design, DesignSpec};
pub use dq::{quat_conj, quat_mul, DualQuaternion, Pose, Quat};

/// Errors raised while building or loading models.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid design: {0}")]
    InvalidDesign(String),
    #[error("cannot read design file {0}")]
    Io(String),
}
