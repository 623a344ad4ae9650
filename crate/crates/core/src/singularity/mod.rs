//! Jacobians, input and output singularities, self-motions and the
//! classification of translational configurations.

mod eliminant;
mod sampling;
mod surface;

pub use eliminant::{output_eliminant, sphere_pair, EliminantReport};
pub use sampling::{
    complex_residual, input_singular_configuration, output_singular_configuration,
    random_regular_triple, Configuration, REGULARITY_MARGIN,
};
pub use surface::{sample_surface, Grid, GridAxis, SurfaceSample};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{AlgebraError, Assignment, ExtScalar, MPoly, PolyMatrix, Real, Scalar, Var};
use crate::kinematics::KinematicModel;
use crate::model::{
    general_constraints, translational_substitution, translational_system, ConstraintSystem,
    Design, DesignSpec,
};
use crate::printed;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SingularityError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0} is not divisible by the reference factors")]
    NotDivisible(&'static str),
    #[error("{0} depends on the leg length a3")]
    DependsOnA3(&'static str),
    #[error("unexpected minor structure: {0} of {1} minors vanish")]
    MinorCount(usize, usize),
    #[error("limb must be 1, 2 or 3, got {0}")]
    BadLimb(usize),
    #[error("configuration violates the translational system (residual {0:e})")]
    OffVariety(f64),
    #[error("elimination degenerated at stage {0}")]
    EliminationStage(usize),
    #[error("interpolated eliminant failed its check at {0} points")]
    Verification(usize),
    #[error("sampling gave up after {0} attempts")]
    Sampling(usize),
}

/// Default relative tolerance for singularity flags.
pub const SINGULARITY_TOL: f64 = 1e-8;

/// Tolerance for accepting a configuration as a point of the translational
/// system in [`classify`].
pub const VARIETY_TOL: f64 = 1e-6;

/// Output and input Jacobians of the full system, rows `g1..g8`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobianPair {
    /// `∂g_k / ∂(x0..x3, y0..y3)`, 8×8.
    pub output: PolyMatrix,
    /// `∂g_k / ∂(t1, t2, t3)`, 8×3.
    pub input: PolyMatrix,
}

impl JacobianPair {
    /// Restriction of both matrices to the translational mode.
    pub fn translational(&self) -> JacobianPair {
        let sub = translational_substitution();
        JacobianPair {
            output: self.output.subs(&sub),
            input: self.input.subs(&sub),
        }
    }
}

/// Jacobians of a general constraint system, taken before any substitution.
pub fn jacobian(cs: &ConstraintSystem) -> JacobianPair {
    let polys = cs.polys();
    JacobianPair {
        output: PolyMatrix::jacobian(&polys, &Var::STUDY),
        input: PolyMatrix::jacobian(&polys, &Var::INPUTS),
    }
}

fn check_limb(limb: usize) -> Result<(), SingularityError> {
    if (1..=3).contains(&limb) {
        Ok(())
    } else {
        Err(SingularityError::BadLimb(limb))
    }
}

/// `p_limb = ½ ∂g/∂t_limb` of the translational limb equation.
pub fn input_factor(limb: usize, spec: &DesignSpec) -> Result<MPoly, SingularityError> {
    check_limb(limb)?;
    let wt = translational_system(spec);
    let t = Var::input(limb);
    Ok(wt.polys()[limb - 1]
        .diff(t)
        .scale(&ExtScalar::from_ratio(1, 2)))
}

/// The printed input factors with the design applied.
pub fn printed_input_factors(spec: &DesignSpec) -> [MPoly; 3] {
    [printed::P1, printed::P2, printed::P3].map(|s| spec.apply(&printed::poly(s)))
}

/// The printed output factors with the design applied.
pub fn printed_output_factors(spec: &DesignSpec) -> [MPoly; 2] {
    [printed::S1, printed::S2].map(|s| spec.apply(&printed::poly(s)))
}

/// Structure of the 3×3 minors of the translational input Jacobian.
#[derive(Clone, Debug, PartialEq)]
pub struct InputFactorization {
    pub minors: usize,
    pub vanishing: usize,
    /// Row indices (0-based, into `g1..g8`) of the surviving minor.
    pub surviving_rows: Vec<usize>,
    /// `p1, p2, p3` as printed.
    pub factors: [MPoly; 3],
    /// Surviving minor divided by `p1 p2 p3`.
    pub cofactor: MPoly,
}

/// Substitutes the translational mode into every 3×3 minor of `J_i`; exactly
/// one must survive, and it must be divisible by the printed `p1 p2 p3`.
pub fn input_minors_translational(
    spec: &DesignSpec,
) -> Result<InputFactorization, SingularityError> {
    let ji = jacobian(&general_constraints(spec)).translational().input;
    let minors = ji.minors(3)?;
    let total = minors.len();
    let survivors: Vec<_> = minors
        .into_iter()
        .filter(|(_, _, d)| !d.is_zero())
        .collect();
    if survivors.len() != 1 {
        return Err(SingularityError::MinorCount(total - survivors.len(), total));
    }
    let (rows, _, det) = survivors.into_iter().next().expect("one survivor");
    let factors = printed_input_factors(spec);
    let product = &(&factors[0] * &factors[1]) * &factors[2];
    let cofactor = det
        .div_exact(&product)?
        .ok_or(SingularityError::NotDivisible("surviving input minor"))?;
    Ok(InputFactorization {
        minors: total,
        vanishing: total - 1,
        surviving_rows: rows,
        factors,
        cofactor,
    })
}

/// `det(J_o)` in the translational mode, split as `cofactor · s1 · s2`.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputFactorization {
    pub s1: MPoly,
    pub s2: MPoly,
    pub cofactor: MPoly,
}

pub fn output_det_translational(
    spec: &DesignSpec,
) -> Result<OutputFactorization, SingularityError> {
    let jo = jacobian(&general_constraints(spec)).translational().output;
    let det = jo.det()?;
    let [s1, s2] = printed_output_factors(spec);
    if s1.has_var(Var::A3) {
        return Err(SingularityError::DependsOnA3("s1"));
    }
    if s2.has_var(Var::A3) {
        return Err(SingularityError::DependsOnA3("s2"));
    }
    let cofactor = det
        .div_exact(&(&s1 * &s2))?
        .ok_or(SingularityError::NotDivisible(
            "translational output determinant",
        ))?;
    Ok(OutputFactorization { s1, s2, cofactor })
}

/// Root of the linear input factor, or the degenerate case of a vanishing
/// leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub enum InputRoot<S> {
    Root(S),
    Degenerate,
}

fn y_assignment<S: Clone>(y: &[S; 3]) -> Assignment<S> {
    Assignment::new()
        .with(Var::Y1, y[0].clone())
        .with(Var::Y2, y[1].clone())
        .with(Var::Y3, y[2].clone())
}

/// Exact root in `t_limb` of `p_limb` at the translational pose `y`.
pub fn input_sing_root(
    limb: usize,
    y: &[ExtScalar; 3],
    design: &Design,
) -> Result<InputRoot<ExtScalar>, SingularityError> {
    let p = input_factor(limb, &design.into())?;
    let t = Var::input(limb);
    let c = p.coeffs_in(t);
    let point = y_assignment(y);
    let lead = match c.get(1) {
        Some(l) => l.eval(&point)?,
        None => ExtScalar::zero(),
    };
    let constant = c[0].eval(&point)?;
    Ok(match lead.inv() {
        Some(inv) => InputRoot::Root(-(constant * inv)),
        None => InputRoot::Degenerate,
    })
}

/// Floating-point variant of [`input_sing_root`]; leading coefficients with
/// relative size below `tol` count as zero.
pub fn input_sing_root_float<R: Real>(
    limb: usize,
    y: [R; 3],
    design: &Design,
    tol: R,
) -> Result<InputRoot<R>, SingularityError> {
    let p = input_factor(limb, &design.into())?;
    let c = p.coeffs_in(Var::input(limb));
    let point = y_assignment(&y);
    let lead: R = match c.get(1) {
        Some(l) => l.eval(&point)?,
        None => R::zero(),
    };
    let constant: R = c[0].eval(&point)?;
    let scale = lead.abs() + constant.abs();
    if lead.abs() <= tol * scale || scale == R::zero() {
        return Ok(InputRoot::Degenerate);
    }
    Ok(InputRoot::Root(-constant / lead))
}

/// Poses where the leading coefficient and the constant term of `p_1`
/// vanish together with the limb equation: `y1 = (r1 − r0)/2`, `y3 = 0`,
/// `y2² = (a3² − a1²)/4`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegeneratePoints {
    pub y1: BigRational,
    pub y2_sq: BigRational,
    pub y3: BigRational,
    /// Whether they lie on the limb-1 torus (checked exactly).
    pub on_torus: bool,
}

impl DegeneratePoints {
    pub fn is_real(&self) -> bool {
        !self.y2_sq.is_negative()
    }

    /// The real points, `y2 = ±√(y2²)`, in floating point.
    pub fn points_f64(&self) -> Vec<[f64; 3]> {
        if !self.is_real() {
            return Vec::new();
        }
        let f = |r: &BigRational| ExtScalar::from_rational(r.clone()).to_f64();
        let y2 = f(&self.y2_sq).sqrt();
        let mut pts = vec![
            [f(&self.y1), -y2, f(&self.y3)],
            [f(&self.y1), y2, f(&self.y3)],
        ];
        pts.dedup();
        pts
    }
}

pub fn degenerate_points(design: &Design) -> Result<DegeneratePoints, SingularityError> {
    let two = BigRational::from_integer(BigInt::from(2));
    let four = &two * &two;
    let y1 = (design.r1() - design.r0()) / &two;
    let y2_sq = (design.a3() * design.a3() - design.a1() * design.a1()) / &four;
    let y3 = BigRational::zero();
    let torus = torus_equation(1, &design.into())?;
    let sub = Assignment::new()
        .with(Var::Y1, MPoly::from_rational(y1.clone()))
        .with(Var::Y3, MPoly::zero());
    let in_y2 = torus.subs(&sub).coeffs_in(Var::Y2);
    // only even powers of y2 may appear; evaluate at y2² directly
    let mut value = ExtScalar::zero();
    let mut odd_free = true;
    let y2_sq_s = ExtScalar::from_rational(y2_sq.clone());
    for (k, c) in in_y2.iter().enumerate() {
        let c = c.as_constant().expect("only y2 remains");
        if k % 2 == 1 {
            odd_free &= c.is_zero();
        } else {
            value += &(c * Scalar::pow(&y2_sq_s, (k / 2) as u32));
        }
    }
    Ok(DegeneratePoints {
        y1,
        y2_sq,
        y3,
        on_torus: odd_free && value.is_zero(),
    })
}

/// Input singularity surface of a limb in the translational image space:
/// the limb equation with the root of `p_limb` substituted, denominators
/// cleared. With `g = A t² + B t + C` and `t = −B / (2A)` this is
/// `(A N² + B N D + C D²) / A = A C − B²/4` for `N = −B/2, D = A`.
pub fn torus_equation(limb: usize, spec: &DesignSpec) -> Result<MPoly, SingularityError> {
    check_limb(limb)?;
    let wt = translational_system(spec);
    let g = &wt.polys()[limb - 1];
    let c = g.coeffs_in(Var::input(limb));
    let (cc, b, a) = (&c[0], &c[1], &c[2]);
    let n = -b.scale(&ExtScalar::from_ratio(1, 2));
    let d = a;
    let cleared = &(&(a * &(&n * &n)) + &(b * &(&n * d))) + &(cc * &(d * d));
    cleared
        .div_exact(a)?
        .ok_or(SingularityError::NotDivisible("cleared torus equation"))
}

/// Image of `p(y1, y2, y3)` under a rotation by `k · 120°` about the
/// `y3`-axis, i.e. `p(R⁻¹ y)`.
pub fn rotate_about_z(p: &MPoly, k: usize) -> MPoly {
    let c = ExtScalar::from_ratio(-1, 2);
    let s = ExtScalar::sqrt3().scale(&BigRational::new(1.into(), 2.into()));
    let (c, s) = match k % 3 {
        0 => return p.clone(),
        1 => (c, s),
        _ => (c, -s),
    };
    let y1 = MPoly::var(Var::Y1);
    let y2 = MPoly::var(Var::Y2);
    let sub = Assignment::new()
        .with(Var::Y1, &y1.scale(&c) + &y2.scale(&s))
        .with(Var::Y2, &y2.scale(&c) - &y1.scale(&s));
    p.subs(&sub)
}

/// Which of the printed degree-12 joint-space polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JointKind {
    Input,
    Output,
}

/// The printed joint-space singularity polynomial (design (3, 5, 11, 7)).
pub fn joint_poly(kind: JointKind) -> MPoly {
    printed::poly(match kind {
        JointKind::Input => printed::JOINT_INPUT,
        JointKind::Output => printed::JOINT_OUTPUT,
    })
}

fn t_assignment<S: Clone>(t: &[S; 3]) -> Assignment<S> {
    Assignment::new()
        .with(Var::T1, t[0].clone())
        .with(Var::T2, t[1].clone())
        .with(Var::T3, t[2].clone())
}

/// Value of a joint-space polynomial at `t`.
pub fn joint_poly_eval<R: Real>(kind: JointKind, t: [R; 3]) -> R {
    joint_poly(kind)
        .eval(&t_assignment(&t))
        .expect("joint polynomial depends on t only")
}

/// `|P(t)| / Σ|c·m(t)|` for a joint-space polynomial.
pub fn joint_poly_residual(kind: JointKind, t: [f64; 3]) -> f64 {
    joint_poly(kind)
        .relative_residual(&t_assignment(&t))
        .expect("joint polynomial depends on t only")
}

/// Fixed inputs of a self-motion: `t = (−a1 ± √(a1² − (r0 − r1)²)) / (r0 − r1)`,
/// or `t = 0` for equal radii.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedInputs {
    /// `a1² − (r0 − r1)²`.
    pub radicand: BigRational,
    /// Exact values when the radicand is a rational square (or radii are
    /// equal).
    pub exact: Option<Vec<BigRational>>,
    /// Real values, ascending; empty when complex.
    pub values: Vec<f64>,
    /// Real and imaginary parts when the radicand is negative.
    pub complex: Option<[(f64, f64); 2]>,
}

impl FixedInputs {
    pub fn is_complex(&self) -> bool {
        self.complex.is_some()
    }
}

/// Self-motion circle `y1² + y2² = radius_sq`, `y3 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfMotion {
    pub radius_sq: BigRational,
    pub inputs: FixedInputs,
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Self-motion of a design, present when the circle radius² is positive.
pub fn self_motion(design: &Design) -> Option<SelfMotion> {
    let sq = |r: &BigRational| r * r;
    let dr = design.r0() - design.r1();
    let four = BigRational::from_integer(BigInt::from(4));
    let radius_sq = (sq(design.a3()) + sq(&dr) - sq(design.a1())) / four;
    if !radius_sq.is_positive() {
        return None;
    }
    let radicand = sq(design.a1()) - sq(&dr);
    let f = |r: &BigRational| ExtScalar::from_rational(r.clone()).to_f64();
    let inputs = if dr.is_zero() {
        FixedInputs {
            radicand,
            exact: Some(vec![BigRational::zero()]),
            values: vec![0.0],
            complex: None,
        }
    } else {
        let base = -design.a1() / &dr;
        let exact = rational_sqrt(&radicand).map(|root| {
            let mut v = vec![&base - &root / &dr, &base + &root / &dr];
            v.sort();
            v
        });
        if radicand.is_negative() {
            let im = (f(&-radicand.clone())).sqrt() / f(&dr);
            FixedInputs {
                radicand,
                exact: None,
                values: Vec::new(),
                complex: Some([(f(&base), -im.abs()), (f(&base), im.abs())]),
            }
        } else {
            let root = f(&radicand).sqrt() / f(&dr);
            let mut values = vec![f(&base) - root, f(&base) + root];
            values.sort_by(|a, b| a.total_cmp(b));
            FixedInputs {
                radicand,
                exact,
                values,
                complex: None,
            }
        }
    };
    Some(SelfMotion { radius_sq, inputs })
}

/// Per-configuration singularity flags with the residuals they were
/// decided on.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct SingularityReport {
    /// Scale-normalized `|p_i|`.
    pub input_residuals: [f64; 3],
    pub input: [bool; 3],
    /// Scale-normalized `|s1|, |s2|`.
    pub output_residuals: [f64; 2],
    pub output: bool,
    pub self_motion: bool,
    /// Residuals of the translational system at the configuration.
    pub variety_residuals: [f64; 3],
    pub tol: f64,
}

impl SingularityReport {
    pub fn any(&self) -> bool {
        self.input.iter().any(|&b| b) || self.output || self.self_motion
    }
}

/// Singularity factors of one numeric design, ready for evaluation.
#[derive(Clone, Debug)]
pub struct SingularityModel {
    pub kinematics: KinematicModel,
    pub input_factors: [MPoly; 3],
    pub output_factors: [MPoly; 2],
    pub self_motion: Option<SelfMotion>,
}

impl SingularityModel {
    pub fn new(design: &Design) -> Result<Self, SingularityError> {
        let spec = DesignSpec::from(design);
        let kinematics = KinematicModel::new(design)
            .map_err(|_| SingularityError::NotDivisible("translational system"))?;
        Ok(SingularityModel {
            kinematics,
            input_factors: printed_input_factors(&spec),
            output_factors: printed_output_factors(&spec),
            self_motion: self_motion(design),
        })
    }

    pub fn design(&self) -> &Design {
        &self.kinematics.design
    }

    fn point(y: [f64; 3], t: [f64; 3]) -> Assignment<f64> {
        let mut a = y_assignment(&y);
        for (v, x) in Var::INPUTS.iter().zip(t) {
            a.set(*v, x);
        }
        a
    }

    /// Scale-normalized `|p_i|` at `(y, t)`.
    pub fn input_residuals(&self, y: [f64; 3], t: [f64; 3]) -> [f64; 3] {
        let a = Self::point(y, t);
        self.input_factors
            .clone()
            .map(|p| p.relative_residual(&a).expect("p depends on y, t"))
    }

    /// Scale-normalized `|s1|, |s2|` at `(y, t)`.
    pub fn output_residuals(&self, y: [f64; 3], t: [f64; 3]) -> [f64; 2] {
        let a = Self::point(y, t);
        self.output_factors
            .clone()
            .map(|p| p.relative_residual(&a).expect("s depends on y, t"))
    }

    /// Signed value of `s_k` divided by its scale.
    pub fn output_signed(&self, k: usize, y: [f64; 3], t: [f64; 3]) -> f64 {
        let (v, s) = self.output_factors[k]
            .eval_scaled(&Self::point(y, t))
            .expect("s depends on y, t");
        if s == 0.0 {
            0.0
        } else {
            v / s
        }
    }

    fn on_self_motion(&self, y: [f64; 3], t: [f64; 3], tol: f64) -> bool {
        let Some(sm) = &self.self_motion else {
            return false;
        };
        let r2 = ExtScalar::from_rational(sm.radius_sq.clone()).to_f64();
        let scale = 1.0 + r2;
        let on_circle = y[2].abs() <= tol.sqrt() * scale.sqrt()
            && (y[0] * y[0] + y[1] * y[1] - r2).abs() <= tol.sqrt() * scale;
        let inputs_fixed = t.iter().all(|ti| {
            sm.inputs
                .values
                .iter()
                .any(|v| (ti - v).abs() <= tol.sqrt() * (1.0 + v.abs()))
        });
        on_circle && inputs_fixed
    }

    /// Classifies a configuration of the translational mode.
    pub fn classify(
        &self,
        y: [f64; 3],
        t: [f64; 3],
        tol: f64,
    ) -> Result<SingularityReport, SingularityError> {
        let variety_residuals = crate::kinematics::residuals(&self.kinematics, y, t);
        let worst = variety_residuals.iter().cloned().fold(0.0, f64::max);
        if worst > VARIETY_TOL.max(tol) {
            return Err(SingularityError::OffVariety(worst));
        }
        let input_residuals = self.input_residuals(y, t);
        let output_residuals = self.output_residuals(y, t);
        Ok(SingularityReport {
            input_residuals,
            input: input_residuals.map(|r| r <= tol),
            output_residuals,
            output: output_residuals.iter().any(|&r| r <= tol),
            self_motion: self.on_self_motion(y, t, tol),
            variety_residuals,
            tol,
        })
    }
}

/// Convenience wrapper around [`SingularityModel::classify`].
pub fn classify(
    design: &Design,
    y: [f64; 3],
    t: [f64; 3],
    tol: f64,
) -> Result<SingularityReport, SingularityError> {
    SingularityModel::new(design)?.classify(y, t, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobian_rows() {
        let jp = jacobian(&general_constraints(&DesignSpec::Symbolic));
        assert_eq!((jp.output.rows(), jp.output.cols()), (8, 8));
        assert_eq!((jp.input.rows(), jp.input.cols()), (8, 3));
        assert!(jp.input.row(7).iter().all(MPoly::is_zero));
        let expected: Vec<MPoly> = [
            Var::Y0,
            Var::Y1,
            Var::Y2,
            Var::Y3,
            Var::X0,
            Var::X1,
            Var::X2,
            Var::X3,
        ]
        .map(MPoly::var)
        .to_vec();
        assert_eq!(jp.output.row(6), &expected[..]);
    }

    #[test]
    fn input_factors_match_printed() {
        let spec = DesignSpec::Symbolic;
        let printed = printed_input_factors(&spec);
        for limb in 1..=3 {
            assert_eq!(input_factor(limb, &spec).unwrap(), printed[limb - 1]);
        }
    }

    #[test]
    fn input_roots_for_design_3() {
        let d = Design::pars();
        let y = |a: i64| [ExtScalar::from_int(a), ExtScalar::zero(), ExtScalar::zero()];
        assert_eq!(
            input_sing_root(1, &y(0), &d).unwrap(),
            InputRoot::Degenerate
        );
        assert_eq!(
            input_sing_root(1, &y(1), &d).unwrap(),
            InputRoot::Root(ExtScalar::from_ratio(-9, 5))
        );
        let f = input_sing_root_float(1, [1.0, 0.0, 0.0], &d, 1e-12).unwrap();
        assert_eq!(f, InputRoot::Root(-1.8));
    }

    #[test]
    fn torus_matches_printed_and_rotates() {
        let spec = DesignSpec::Symbolic;
        let t1 = torus_equation(1, &spec).unwrap();
        assert_eq!(t1, printed::poly(printed::TORUS_1));
        let neg = t1.subs(&Assignment::new().with(Var::Y2, -MPoly::var(Var::Y2)));
        assert_eq!(neg, t1);
        let d = DesignSpec::from(&Design::pars());
        let t1 = torus_equation(1, &d).unwrap();
        let t2 = torus_equation(2, &d).unwrap();
        let t3 = torus_equation(3, &d).unwrap();
        assert_eq!(rotate_about_z(&t1, 1), t2);
        assert_eq!(rotate_about_z(&t1, 2), t3);
    }

    #[test]
    fn degenerate_points_of_design_3() {
        let dp = degenerate_points(&Design::pars()).unwrap();
        assert_eq!(dp.y1, BigRational::from_integer((-2).into()));
        assert_eq!(dp.y2_sq, BigRational::from_integer(4.into()));
        assert!(dp.on_torus);
        assert_eq!(dp.points_f64(), vec![[-2.0, -2.0, 0.0], [-2.0, 2.0, 0.0]]);
    }

    #[test]
    fn self_motion_formulas() {
        let sm = self_motion(&Design::pars2()).unwrap();
        assert_eq!(sm.radius_sq, BigRational::new(7.into(), 4.into()));
        assert_eq!(
            sm.inputs.exact,
            Some(vec![
                BigRational::from_integer((-2).into()),
                BigRational::new((-1).into(), 2.into())
            ])
        );
        let sm3 = self_motion(&Design::pars()).unwrap();
        assert_eq!(sm3.radius_sq, BigRational::from_integer(8.into()));
        assert!(sm3.inputs.is_complex());
        // t² + 3/2 t + 1 = 0 has roots -3/4 ± i √7/4
        let [(re, im), _] = sm3.inputs.complex.unwrap();
        assert!((re + 0.75).abs() < 1e-15 && (im.abs() - 7f64.sqrt() / 4.0).abs() < 1e-15);
    }

    #[test]
    fn joint_polynomials_constant_terms() {
        assert_eq!(
            joint_poly(JointKind::Input).constant_term(),
            ExtScalar::from_int(32)
        );
        assert_eq!(
            joint_poly(JointKind::Output).constant_term(),
            ExtScalar::from_int(144)
        );
        assert!(joint_poly_eval(JointKind::Input, [1.0, 1.0, 1.0]).abs() > 1.0);
    }

    #[test]
    fn classify_regular_pose() {
        let tau = 3.0 - 14f64.sqrt();
        let r = classify(&Design::pars(), [0.0, 0.0, 2.0], [tau; 3], SINGULARITY_TOL).unwrap();
        assert!(!r.any(), "{r:?}");
        assert!(matches!(
            classify(&Design::pars(), [0.0, 0.0, 2.0], [0.0; 3], SINGULARITY_TOL),
            Err(SingularityError::OffVariety(_))
        ));
    }

    #[test]
    fn classify_self_motion_point() {
        let r2 = 1.75f64;
        let y = [r2.sqrt() * 0.6, r2.sqrt() * 0.8, 0.0];
        let r = classify(&Design::pars2(), y, [-0.5; 3], SINGULARITY_TOL).unwrap();
        assert!(r.output && r.self_motion, "{r:?}");
    }
}
