//! Published polynomials of the 3-RUU analysis, transcribed verbatim in the
//! parser syntax of [`parse_poly`]. They serve as reference data: generated
//! objects are compared against them term for term.
//!
//! `t` of the canonical limb equations is written as `t1`.

use crate::algebra::{parse_poly, MPoly};

/// Parses one of the constants of this module.
pub fn poly(src: &str) -> MPoly {
    parse_poly(src).expect("reference polynomial parses")
}

/// First canonical limb equation.
pub const F1: &str = r"
    ((x0*x1 - x2*x3)*(t1^2 - 1) - (2*x0*x2 + 2*x1*x3)*t1)*a1
    + 2*(t1^2 + 1)*(x0*y0 + x3*y3)
";

/// Second canonical limb equation.
pub const F2: &str = r"
    -(x0^2 + x1^2 + x2^2 + x3^2)*(t1^2 + 1)*a1^2
    + (4*(x0*y1 - x1*y0 + x2*y3 - x3*y2)*t1^2
       + 8*(-x0*y2 + x1*y3 + x2*y0 - x3*y1)*t1
       - 4*(x0*y1 - x1*y0 + x2*y3 - x3*y2))*a1
    + ((x0^2 + x1^2 + x2^2 + x3^2)*a3^2 - 4*(y0^2 + y1^2 + y2^2 + y3^2))*(t1^2 + 1)
";

/// Translational system, limb 1.
pub const WT_G2: &str = r"
    (a1^2 - a3^2 + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 - a1*y3 + r0*y1 - r1*y1))*t1^2
    + 4*a1*(r0 - r1 + 2*y1)*t1
    + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 + a1*y3 + r0*y1 - r1*y1) + a1^2 - a3^2
";

/// Translational system, limb 2.
pub const WT_G4: &str = r"
    (2*(r0 - r1)*(sqrt3*y2 - y1) + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 - a1*y3) + a1^2 - a3^2)*t2^2
    + 4*a1*(sqrt3*y2 + r0 - r1 - y1)*t2
    + 2*(r0 - r1)*(sqrt3*y2 - y1) + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 + a1*y3) + a1^2 - a3^2
";

/// Translational system, limb 3.
pub const WT_G6: &str = r"
    (-2*(r0 - r1)*(sqrt3*y2 + y1) + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 - a1*y3) + a1^2 - a3^2)*t3^2
    + 4*a1*(-sqrt3*y2 + r0 - r1 - y1)*t3
    - 2*(r0 - r1)*(sqrt3*y2 + y1) + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 + a1*y3) + a1^2 - a3^2
";

/// Input singularity factor of limb 1.
pub const P1: &str = r"
    (a1^2 - a3^2 + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 - a1*y3 + r0*y1 - r1*y1))*t1
    + 2*a1*(r0 - r1 + 2*y1)
";

/// Input singularity factor of limb 2.
pub const P2: &str = r"
    (2*(r0 - r1)*(sqrt3*y2 - y1) + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 - a1*y3) + a1^2 - a3^2)*t2
    + 2*a1*(sqrt3*y2 + r0 - r1 - y1)
";

/// Input singularity factor of limb 3.
pub const P3: &str = r"
    (-2*(r0 - r1)*(sqrt3*y2 + y1) + (r0 - r1)^2 + 4*(y1^2 + y2^2 + y3^2 - a1*y3) + a1^2 - a3^2)*t3
    + 2*a1*(-sqrt3*y2 + r0 - r1 - y1)
";

/// Leading coefficient of `P1` in `t1`, expanded.
pub const LEAD_COEFF: &str = r"
    a1^2 - 4*a1*y3 - a3^2 + r0^2 - 2*r0*r1 + 4*r0*y1 + r1^2 - 4*r1*y1
    + 4*y1^2 + 4*y2^2 + 4*y3^2
";

/// Factor of the self-motion eliminant (plane `y3 = 0`, general design).
pub const SELF_MOTION_FACTOR: &str = r"
    a1^2 - a3^2 - (r0 - r1)^2 + 4*(y1^2 + y2^2)
";

/// Product of the two complex output-singularity spheres of design
/// (3, 5, 11, 7): `(y1² + y2² + (y3 ± i·√7/2)² − 25/4)` multiplied out.
pub const SPHERES_PRODUCT: &str = r"
    (y1^2 + y2^2 + y3^2 - 8)^2 + 7*y3^2
";

/// Translational system of design (3, 5, 11, 7) on the circle
/// `y1² + y2² = 8, y3 = 0`, in factored form (limbs 1, 2, 3).
pub const CIRCLE_FACTORED: [&str; 3] = [
    "(t1^2 + 3/2*t1 + 1)*(y1 + 2)",
    "(t2^2 + 3/2*t2 + 1)*(-sqrt3*y2 + y1 - 4)",
    "(t3^2 + 3/2*t3 + 1)*(sqrt3*y2 + y1 - 4)",
];

/// First factor of the translational output determinant (general design).
pub const S1: &str = r"
    18*r0^2*t1^2*t2^2*y3+18*r0^2*t1^2*t3^2*y3+18*r0^2*t2^2*t3^2*y3+18*r1^2*t1^2*t2^2*y3
    +18*r1^2*t1^2*t3^2*y3+18*r1^2*t2^2*t3^2*y3+24*a1^2*t1*t2*y3+24*a1^2*t1*t3*y3
    +24*a1^2*t2*t3*y3-36*r0*r1*t1^2*y3-36*r0*r1*t2^2*y3-36*r0*r1*t3^2*y3+24*a1*r0*t1*y3
    +24*a1*r0*t2*y3+24*a1*r0*t3*y3-24*a1*r1*t1*y3-24*a1*r1*t2*y3-24*a1*r1*t3*y3
    +12*a1^3*t1*t3+12*a1^3*t2*t3-6*a1*r0*r1*t3^2-3*a1*r0^2*t1^2*t3^2-3*a1*r0^2*t2^2*t3^2
    -3*a1*r1^2*t1^2*t3^2-3*a1*r1^2*t2^2*t3^2+12*a1*r0*t1^2*t2^2*y2*sqrt3
    -12*a1*r0*t1^2*t3^2*y2*sqrt3-12*a1*r1*t1^2*t2^2*y2*sqrt3+12*a1*r1*t1^2*t3^2*y2*sqrt3
    -36*r0*r1*t1^2*t2^2*t3^2*y3+24*a1*r0*t1^2*t2^2*t3*y3+24*a1*r0*t1^2*t2*t3^2*y3
    +24*a1*r0*t1*t2^2*t3^2*y3-24*a1*r1*t1^2*t2^2*t3*y3-24*a1*r1*t1^2*t2*t3^2*y3
    -24*a1*r1*t1*t2^2*t3^2*y3+18*r0^2*y3+18*r1^2*y3+12*a1*r0*t2^2*y2*sqrt3
    -12*a1*r0*t3^2*y2*sqrt3-12*a1*r1*t2^2*y2*sqrt3+12*a1*r1*t3^2*y2*sqrt3
    +8*a1^2*t1^2*t2*y2*sqrt3-8*a1^2*t1^2*t3*y2*sqrt3+16*a1^2*sqrt3*t1*t2^2*y2
    -16*a1^2*sqrt3*t1*t3^2*y2+8*a1^2*t3*t2^2*y2*sqrt3+18*a1*r0*r1*t1^2*t2^2*t3^2
    +9*a1*r1^2+12*a1^3*t1*t2+6*a1*r0*r1*t1^2*t2^2+6*a1*r0*r1*t1^2*t3^2
    -12*a1^2*r0*t1^2*t2^2*t3-12*a1^2*r0*t1^2*t2*t3^2-12*a1^2*r0*t1*t2^2*t3^2
    +6*a1*r0*r1*t2^2*t3^2+9*a1*r0^2-12*a1^2*r1*t2-12*a1^2*r1*t1+12*a1^2*r1*t1^2*t2^2*t3
    +12*a1^2*r1*t1^2*t2*t3^2+12*a1^2*r1*t1*t2^2*t3^2+18*r0^2*t1^2*t2^2*t3^2*y3
    +18*r1^2*t1^2*t2^2*t3^2*y3+24*a1^2*t1^2*t2*t3*y3+24*a1^2*t1*t2^2*t3*y3
    +24*a1^2*t1*t2*t3^2*y3-36*r0*r1*t1^2*t2^2*y3-36*r0*r1*t1^2*t3^2*y3
    -36*r0*r1*t2^2*t3^2*y3+24*a1*r0*t1^2*t2*y3+24*a1*r0*t1^2*t3*y3+24*a1*r0*t1*t2^2*y3
    +24*a1*r0*t1*t3^2*y3+24*a1*r0*t2^2*t3*y3+24*a1*r0*t2*t3^2*y3-24*a1*r1*t1^2*t2*y3
    -24*a1*r1*t1^2*t3*y3-24*a1*r1*t1*t2^2*y3-24*a1*r1*t1*t3^2*y3-24*a1*r1*t2^2*t3*y3
    -24*a1*r1*t2*t3^2*y3+18*r0^2*t1^2*y3+18*r0^2*t2^2*y3+18*r0^2*t3^2*y3+18*r1^2*t1^2*y3
    +18*r1^2*t2^2*y3+18*r1^2*t3^2*y3-36*r0*r1*y3-12*a1*r1*t1^2*t2^2*y1
    -12*a1*r1*t1^2*t3^2*y1+24*a1*r1*t2^2*t3^2*y1+12*a1*r0*t1^2*t2^2*y1
    +12*a1*r0*t1^2*t3^2*y1-24*a1*r0*t2^2*t3^2*y1+3*a1*r0^2*t1^2+3*a1*r0^2*t2^2
    +3*a1*r0^2*t3^2+3*a1*r1^2*t1^2+3*a1*r1^2*t2^2+3*a1*r1^2*t3^2
    -9*a1*r0^2*t1^2*t2^2*t3^2-9*a1*r1^2*t1^2*t2^2*t3^2-18*a1*r0*r1+12*a1^2*r0*t1
    +12*a1^2*r0*t2+12*a1^2*r0*t3-12*a1^2*r1*t3+24*a1^2*t1^2*t2*y1+24*a1^2*t1^2*t3*y1
    -24*a1^2*t2^2*t3*y1-24*a1^2*t2*t3^2*y1+24*a1*r0*t1^2*y1-12*a1*r0*t2^2*y1
    -12*a1*r0*t3^2*y1-24*a1*r1*t1^2*y1+12*a1*r1*t2^2*y1+12*a1*r1*t3^2*y1
    -8*a1^2*t2*t3^2*y2*sqrt3-3*a1*r0^2*t1^2*t2^2-3*a1*r1^2*t1^2*t2^2-6*a1*r0*r1*t1^2
    -6*a1*r0*r1*t2^2-12*a1^3*t1^2*t2*t3-12*a1^3*t1*t2^2*t3-12*a1^3*t1*t2*t3^2
";

/// Second factor of the translational output determinant (general design).
pub const S2: &str = r"
    a1*t1^2*t2^2*y1^2+a1*t1^2*t3^2*y1^2-5*a1*t2^2*t3^2*y1^2-6*r0^2*t1^2*t2^2*y3
    -6*r0^2*t1^2*t3^2*y3-6*r0^2*t2^2*t3^2*y3-6*r1^2*t1^2*t2^2*y3-6*r1^2*t1^2*t3^2*y3
    -6*r1^2*t2^2*t3^2*y3-8*a1^2*t1*t2*y3-8*a1^2*t1*t3*y3-8*a1^2*t2*t3*y3
    +12*r0*r1*t1^2*y3+12*r0*r1*t2^2*y3+12*r0*r1*t3^2*y3-8*a1*r0*t1*y3-8*a1*r0*t2*y3
    -8*a1*r0*t3*y3+8*a1*r1*t1*y3+8*a1*r1*t2*y3+8*a1*r1*t3*y3+6*t1^2*t2^2*y1^2*y3
    +6*t1^2*t2^2*y2^2*y3+6*t1^2*t3^2*y1^2*y3+6*t1^2*t3^2*y2^2*y3+6*t2^2*t3^2*y1^2*y3
    +6*t2^2*t3^2*y2^2*y3+8*a1*t1*y1*y3-4*a1*t2*y1*y3-4*a1*t3*y1*y3-4*a1^3*t1*t3
    -4*a1^3*t2*t3+2*a1*r0*r1*t3^2+a1*r0^2*t1^2*t3^2+a1*r0^2*t2^2*t3^2+a1*r1^2*t1^2*t3^2
    +a1*r1^2*t2^2*t3^2+2*a1^2*t1^2*t3*t2^2*y2*sqrt3-2*a1^2*t1^2*t2*t3^2*y2*sqrt3
    -2*a1*r0*t1^2*t2^2*y2*sqrt3+2*a1*r0*t1^2*t3^2*y2*sqrt3+2*a1*r1*t1^2*t2^2*y2*sqrt3
    -2*a1*r1*t1^2*t3^2*y2*sqrt3-4*a1*t1^2*t2^2*y1*y2*sqrt3+4*a1*t1^2*t3^2*y1*y2*sqrt3
    +4*a1*t1^2*sqrt3*t2*y2*y3-4*a1*t1^2*sqrt3*t3*y2*y3-4*a1*t2^2*sqrt3*t3*y2*y3
    +4*a1*sqrt3*t2*t3^2*y2*y3+2*a1^2*t2*y2*sqrt3-2*a1^2*t3*y2*sqrt3
    +12*r0*r1*t1^2*t2^2*t3^2*y3-8*a1*r0*t1^2*t2^2*t3*y3-8*a1*r0*t1^2*t2*t3^2*y3
    -8*a1*r0*t1*t2^2*t3^2*y3+8*a1*r1*t1^2*t2^2*t3*y3+8*a1*r1*t1^2*t2*t3^2*y3
    +8*a1*r1*t1*t2^2*t3^2*y3-4*a1*t1^2*t2^2*t3*y1*y3-4*a1*t1^2*t2*t3^2*y1*y3
    +8*a1*t1*t2^2*t3^2*y1*y3-4*a1*t1^2*t2^2*sqrt3*t3*y2*y3+4*a1*t1^2*sqrt3*t2*t3^2*y2*y3
    +3*a1*y1^2-6*r0^2*y3-6*r1^2*y3+6*y1^2*y3+6*y2^2*y3-2*a1*r0*t2^2*y2*sqrt3
    +2*a1*r0*t3^2*y2*sqrt3+2*a1*r1*t2^2*y2*sqrt3-2*a1*r1*t3^2*y2*sqrt3
    -4*a1*t2^2*y1*y2*sqrt3+4*a1*t3^2*y1*y2*sqrt3+4*a1*sqrt3*t2*y2*y3-4*a1*sqrt3*t3*y2*y3
    -2*a1^2*t1^2*t2*y2*sqrt3+2*a1^2*t1^2*t3*y2*sqrt3-4*a1^2*sqrt3*t1*t2^2*y2
    +4*a1^2*sqrt3*t1*t3^2*y2-2*a1^2*t3*t2^2*y2*sqrt3-6*a1*r0*r1*t1^2*t2^2*t3^2-3*a1*r1^2
    -4*a1^3*t1*t2-3*a1*t1^2*t2^2*y2^2-3*a1*t1^2*t3^2*y2^2+3*a1*t2^2*t3^2*y2^2+3*a1*y2^2
    -3*a1*t1^2*t2^2*t3^2*y1^2+2*a1^2*t1^2*t2^2*t3*y1+2*a1^2*t1^2*t2*t3^2*y1
    -4*a1^2*t1*t2^2*t3^2*y1-2*a1*r0*r1*t1^2*t2^2-2*a1*r0*r1*t1^2*t3^2
    +4*a1^2*r0*t1^2*t2^2*t3+4*a1^2*r0*t1^2*t2*t3^2+4*a1^2*r0*t1*t2^2*t3^2
    -3*a1*t1^2*t2^2*t3^2*y2^2-2*a1*r0*r1*t2^2*t3^2-3*a1*r0^2+4*a1^2*r1*t2+4*a1^2*r1*t1
    -4*a1^2*r1*t1^2*t2^2*t3-4*a1^2*r1*t1^2*t2*t3^2-4*a1^2*r1*t1*t2^2*t3^2
    -6*r0^2*t1^2*t2^2*t3^2*y3-6*r1^2*t1^2*t2^2*t3^2*y3-8*a1^2*t1^2*t2*t3*y3
    -8*a1^2*t1*t2^2*t3*y3-8*a1^2*t1*t2*t3^2*y3+12*r0*r1*t1^2*t2^2*y3
    +12*r0*r1*t1^2*t3^2*y3+12*r0*r1*t2^2*t3^2*y3-8*a1*r0*t1^2*t2*y3-8*a1*r0*t1^2*t3*y3
    -8*a1*r0*t1*t2^2*y3-8*a1*r0*t1*t3^2*y3-8*a1*r0*t2^2*t3*y3-8*a1*r0*t2*t3^2*y3
    +8*a1*r1*t1^2*t2*y3+8*a1*r1*t1^2*t3*y3+8*a1*r1*t1*t2^2*y3+8*a1*r1*t1*t3^2*y3
    +8*a1*r1*t2^2*t3*y3+8*a1*r1*t2*t3^2*y3+6*t1^2*t2^2*t3^2*y1^2*y3
    +6*t1^2*t2^2*t3^2*y2^2*y3-4*a1*t1^2*t2*y1*y3-4*a1*t1^2*t3*y1*y3+8*a1*t1*t2^2*y1*y3
    +8*a1*t1*t3^2*y1*y3-4*a1*t2^2*t3*y1*y3-4*a1*t2*t3^2*y1*y3+6*t1^2*y1^2*y3
    +6*t1^2*y2^2*y3+6*t2^2*y1^2*y3+6*t2^2*y2^2*y3+6*t3^2*y1^2*y3+6*t3^2*y2^2*y3
    -6*r0^2*t1^2*y3-6*r0^2*t2^2*y3-6*r0^2*t3^2*y3-6*r1^2*t1^2*y3-6*r1^2*t2^2*y3
    -6*r1^2*t3^2*y3+12*r0*r1*y3+2*a1*r1*t1^2*t2^2*y1+2*a1*r1*t1^2*t3^2*y1
    -4*a1*r1*t2^2*t3^2*y1-2*a1*r0*t1^2*t2^2*y1-2*a1*r0*t1^2*t3^2*y1+4*a1*r0*t2^2*t3^2*y1
    +4*a1^2*t1*y1-2*a1^2*t2*y1-2*a1^2*t3*y1+5*a1*t1^2*y1^2-a1*t2^2*y1^2-a1*t3^2*y1^2
    -a1*r0^2*t1^2-a1*r0^2*t2^2-a1*r0^2*t3^2-a1*r1^2*t1^2-a1*r1^2*t2^2-a1*r1^2*t3^2
    +3*a1*r0^2*t1^2*t2^2*t3^2+3*a1*r1^2*t1^2*t2^2*t3^2+6*a1*r0*r1-4*a1^2*r0*t1
    -4*a1^2*r0*t2-4*a1^2*r0*t3+4*a1^2*r1*t3-6*a1^2*t1^2*t2*y1-6*a1^2*t1^2*t3*y1
    +6*a1^2*t2^2*t3*y1+6*a1^2*t2*t3^2*y1-4*a1*r0*t1^2*y1+2*a1*r0*t2^2*y1+2*a1*r0*t3^2*y1
    +4*a1*r1*t1^2*y1-2*a1*r1*t2^2*y1-2*a1*r1*t3^2*y1+2*a1^2*t2*t3^2*y2*sqrt3
    +a1*r0^2*t1^2*t2^2+a1*r1^2*t1^2*t2^2+2*a1*r0*r1*t1^2+2*a1*r0*r1*t2^2
    +4*a1^3*t1^2*t2*t3+4*a1^3*t1*t2^2*t3+4*a1^3*t1*t2*t3^2-3*a1*t1^2*y2^2+3*a1*t2^2*y2^2
    +3*a1*t3^2*y2^2
";

/// Degree-12 joint-space input singularity polynomial for design (3, 5, 11, 7).
pub const JOINT_INPUT: &str = r"
    32*t1^4*t2^4*t3^4+96*t1^4*t2^4*t3^3+96*t1^4*t2^3*t3^4+96*t1^3*t2^4*t3^4
    -16*t1^4*t2^4*t3^2+240*t1^4*t2^3*t3^3+160*t1^4*t2^2*t3^4+240*t1^3*t2^4*t3^3
    +288*t1^3*t2^3*t3^4+160*t1^2*t2^4*t3^4-32*t1^4*t2^4*t3+44*t1^4*t2^3*t3^2
    +272*t1^4*t2^2*t3^3+132*t1^4*t2*t3^4+44*t1^3*t2^4*t3^2+576*t1^3*t2^3*t3^3
    +480*t1^3*t2^2*t3^4+272*t1^2*t2^4*t3^3+480*t1^2*t2^3*t3^4+132*t1*t2^4*t3^4
    +48*t1^4*t2^4+16*t1^4*t2^3*t3+102*t1^4*t2^2*t3^2+80*t1^4*t2*t3^3+72*t1^4*t3^4
    +16*t1^3*t2^4*t3+152*t1^3*t2^3*t3^2+740*t1^3*t2^2*t3^3+396*t1^3*t2*t3^4
    +102*t1^2*t2^4*t3^2+740*t1^2*t2^3*t3^3+718*t1^2*t2^2*t3^4+80*t1*t2^4*t3^3
    +396*t1*t2^3*t3^4+72*t2^4*t3^4+156*t1^4*t2^3+192*t1^4*t2^2*t3-52*t1^4*t2*t3^2
    +32*t1^4*t3^3+156*t1^3*t2^4+409*t1^3*t2^2*t3^2+288*t1^3*t2*t3^3+216*t1^3*t3^4
    +192*t1^2*t2^4*t3+409*t1^2*t2^3*t3^2+962*t1^2*t2^2*t3^3+537*t1^2*t2*t3^4
    -52*t1*t2^4*t3^2+288*t1*t2^3*t3^3+537*t1*t2^2*t3^4+32*t2^4*t3^3+216*t2^3*t3^4
    +266*t1^4*t2^2+176*t1^4*t2*t3-80*t1^4*t3^2+360*t1^3*t2^3+348*t1^3*t2^2*t3
    +8*t1^3*t2*t3^2+176*t1^3*t3^3+266*t1^2*t2^4+348*t1^2*t2^3*t3+996*t1^2*t2^2*t3^2
    +348*t1^2*t2*t3^3+266*t1^2*t3^4+176*t1*t2^4*t3+8*t1*t2^3*t3^2+348*t1*t2^2*t3^3
    +360*t1*t2*t3^4-80*t2^4*t3^2+176*t2^3*t3^3+266*t2^2*t3^4+216*t1^4*t2+32*t1^4*t3
    +537*t1^3*t2^2+288*t1^3*t2*t3-52*t1^3*t3^2+537*t1^2*t2^3+962*t1^2*t2^2*t3
    +409*t1^2*t2*t3^2+192*t1^2*t3^3+216*t1*t2^4+288*t1*t2^3*t3+409*t1*t2^2*t3^2
    +156*t1*t3^4+32*t2^4*t3-52*t2^3*t3^2+192*t2^2*t3^3+156*t2*t3^4+72*t1^4+396*t1^3*t2
    +80*t1^3*t3+718*t1^2*t2^2+740*t1^2*t2*t3+102*t1^2*t3^2+396*t1*t2^3+740*t1*t2^2*t3
    +152*t1*t2*t3^2+16*t1*t3^3+72*t2^4+80*t2^3*t3+102*t2^2*t3^2+16*t2*t3^3+48*t3^4
    +132*t1^3+480*t1^2*t2+272*t1^2*t3+480*t1*t2^2+576*t1*t2*t3+44*t1*t3^2+132*t2^3
    +272*t2^2*t3+44*t2*t3^2-32*t3^3+160*t1^2+288*t1*t2+240*t1*t3+160*t2^2+240*t2*t3
    -16*t3^2+96*t1+96*t2+96*t3+32
";

/// Degree-12 joint-space output singularity polynomial for design (3, 5, 11, 7).
pub const JOINT_OUTPUT: &str = r"
    144*t1^4*t2^4*t3^4+32*t1^4*t2^4*t3^3+32*t1^4*t2^3*t3^4+32*t1^3*t2^4*t3^4
    -272*t1^4*t2^4*t3^2-520*t1^4*t2^3*t3^3-272*t1^4*t2^2*t3^4-520*t1^3*t2^4*t3^3
    -520*t1^3*t2^3*t3^4-272*t1^2*t2^4*t3^4-544*t1^4*t2^4*t3-1352*t1^4*t2^3*t3^2
    -1352*t1^4*t2^2*t3^3-544*t1^4*t2*t3^4-1352*t1^3*t2^4*t3^2-1656*t1^3*t2^3*t3^3
    -1352*t1^3*t2^2*t3^4-1352*t1^2*t2^4*t3^3-1352*t1^2*t2^3*t3^4-544*t1*t2^4*t3^4
    +16*t1^4*t2^4-1528*t1^4*t2^3*t3-3183*t1^4*t2^2*t3^2-1528*t1^4*t2*t3^3+16*t1^4*t3^4
    -1528*t1^3*t2^4*t3-3182*t1^3*t2^3*t3^2-3182*t1^3*t2^2*t3^3-1528*t1^3*t2*t3^4
    -3183*t1^2*t2^4*t3^2-3182*t1^2*t2^3*t3^3-3183*t1^2*t2^2*t3^4-1528*t1*t2^4*t3^3
    -1528*t1*t2^3*t3^4+16*t2^4*t3^4-448*t1^4*t2^3-2576*t1^4*t2^2*t3-2576*t1^4*t2*t3^2
    -448*t1^4*t3^3-448*t1^3*t2^4-2520*t1^3*t2^3*t3-6880*t1^3*t2^2*t3^2-2520*t1^3*t2*t3^3
    -448*t1^3*t3^4-2576*t1^2*t2^4*t3-6880*t1^2*t2^3*t3^2-6880*t1^2*t2^2*t3^3
    -2576*t1^2*t2*t3^4-2576*t1*t2^4*t3^2-2520*t1*t2^3*t3^3-2576*t1*t2^2*t3^4
    -448*t2^4*t3^3-448*t2^3*t3^4-928*t1^4*t2^2-1480*t1^4*t2*t3-928*t1^4*t3^2
    -1480*t1^3*t2^3-4562*t1^3*t2^2*t3-4562*t1^3*t2*t3^2-1480*t1^3*t3^3-928*t1^2*t2^4
    -4562*t1^2*t2^3*t3-12486*t1^2*t2^2*t3^2-4562*t1^2*t2*t3^3-928*t1^2*t3^4
    -1480*t1*t2^4*t3-4562*t1*t2^3*t3^2-4562*t1*t2^2*t3^3-1480*t1*t2*t3^4-928*t2^4*t3^2
    -1480*t2^3*t3^3-928*t2^2*t3^4-448*t1^4*t2-448*t1^4*t3-2576*t1^3*t2^2-2520*t1^3*t2*t3
    -2576*t1^3*t3^2-2576*t1^2*t2^3-6880*t1^2*t2^2*t3-6880*t1^2*t2*t3^2-2576*t1^2*t3^3
    -448*t1*t2^4-2520*t1*t2^3*t3-6880*t1*t2^2*t3^2-2520*t1*t2*t3^3-448*t1*t3^4
    -448*t2^4*t3-2576*t2^3*t3^2-2576*t2^2*t3^3-448*t2*t3^4+16*t1^4-1528*t1^3*t2
    -1528*t1^3*t3-3183*t1^2*t2^2-3182*t1^2*t2*t3-3183*t1^2*t3^2-1528*t1*t2^3
    -3182*t1*t2^2*t3-3182*t1*t2*t3^2-1528*t1*t3^3+16*t2^4-1528*t2^3*t3-3183*t2^2*t3^2
    -1528*t2*t3^3+16*t3^4-544*t1^3-1352*t1^2*t2-1352*t1^2*t3-1352*t1*t2^2-1656*t1*t2*t3
    -1352*t1*t3^2-544*t2^3-1352*t2^2*t3-1352*t2*t3^2-544*t3^3-272*t1^2-520*t1*t2
    -520*t1*t3-272*t2^2-520*t2*t3-272*t3^2+32*t1+32*t2+32*t3+144
";

/// Input singularity surface of limb 1 in the translational three-space.
pub const TORUS_1: &str = r"
    a1^4-2*a3^2*a1^2-2*r0^2*a1^2+4*r0*r1*a1^2-8*r0*a1^2*y1-2*r1^2*a1^2+8*r1*a1^2*y1
    -8*a1^2*y1^2+8*a1^2*y2^2-8*a1^2*y3^2+a3^4-2*a3^2*r0^2+4*a3^2*r0*r1-8*a3^2*r0*y1
    -2*a3^2*r1^2+8*a3^2*r1*y1-8*a3^2*y1^2-8*a3^2*y2^2-8*a3^2*y3^2+r0^4-4*r0^3*r1
    +8*r0^3*y1+6*r0^2*r1^2-24*r0^2*r1*y1+24*r0^2*y1^2+8*r0^2*y2^2+8*r0^2*y3^2-4*r0*r1^3
    +24*r0*r1^2*y1-48*r0*r1*y1^2-16*r0*r1*y2^2-16*r0*r1*y3^2+32*r0*y1^3+32*r0*y1*y2^2
    +32*r0*y1*y3^2+r1^4-8*r1^3*y1+24*r1^2*y1^2+8*r1^2*y2^2+8*r1^2*y3^2-32*r1*y1^3
    -32*r1*y1*y2^2-32*r1*y1*y3^2+16*y1^4+32*y1^2*y2^2+32*y1^2*y3^2+16*y2^4+32*y2^2*y3^2
    +16*y3^4
";
