//! Exact algebraic kinematics of the 3-RUU parallel manipulator.
//!
//! [`algebra`] holds the arithmetic kernel over ℚ(√3). [`model`] builds the
//! constraint equations from dual quaternions, [`workspace`] eliminates the
//! joint inputs, [`kinematics`] solves IK and FK in the translational mode
//! and [`singularity`] covers input, output and self-motion singularities.

pub mod algebra;
pub mod kinematics;
pub mod model;
pub mod printed;
pub mod singularity;
pub mod verify;
pub mod workspace;

pub type Pose64 = model::Pose<f64>;
pub type IkSolution64 = kinematics::IkSolution<f64>;
pub type FkSolution64 = kinematics::FkSolution<f64>;
pub type FkDegeneration64 = kinematics::FkDegeneration<f64>;
pub type RoundTripReport64 = kinematics::RoundTripReport<f64>;
