//! Inverse and forward kinematics of the translational mode.
//!
//! Each equation of the translational system is quadratic in its own input
//! `t_i`, and for fixed `t_i` it is a sphere in `(y1, y2, y3)` (equal square
//! coefficients, no mixed terms). IK therefore solves three independent
//! quadratics; FK intersects three spheres through two radical planes.

use std::cmp::Ordering;

use num_complex::Complex;

use crate::algebra::{Assignment, MPoly, Monomial, Real, Var};
use crate::model::{translational_system, Design, DesignSpec};

/// Relative threshold under which a discriminant counts as zero.
pub const DOUBLE_ROOT_TOL: f64 = 1e-12;

/// Per-limb data of the translational system, with the design substituted.
#[derive(Clone, Debug)]
pub struct LimbModel {
    /// The limb equation `A t² + B t + C` as a polynomial.
    pub equation: MPoly,
    pub input: Var,
    /// `[C, B, A]` as polynomials in `y1, y2, y3`.
    pub t_coeffs: [MPoly; 3],
    /// Coefficient of `y1²` (equal to those of `y2²`, `y3²`), in `t`.
    pub sphere_square: MPoly,
    /// Coefficients of `y1, y2, y3`, in `t`.
    pub sphere_linear: [MPoly; 3],
    /// The `y`-free part, in `t`.
    pub sphere_constant: MPoly,
}

/// Translational system of one design prepared for IK and FK.
#[derive(Clone, Debug)]
pub struct KinematicModel {
    pub design: Design,
    pub limbs: [LimbModel; 3],
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KinematicsError {
    #[error("the translational system is not of sphere form: {0}")]
    NotSphereForm(String),
}

impl KinematicModel {
    pub fn new(design: &Design) -> Result<Self, KinematicsError> {
        let wt = translational_system(&DesignSpec::from(design));
        let limbs: Vec<LimbModel> = wt
            .equations()
            .iter()
            .zip(Var::INPUTS)
            .map(|((name, g), t)| limb_model(name, g, t))
            .collect::<Result<_, _>>()?;
        Ok(KinematicModel {
            design: design.clone(),
            limbs: limbs.try_into().expect("three limbs"),
        })
    }
}

fn limb_model(name: &str, g: &MPoly, t: Var) -> Result<LimbModel, KinematicsError> {
    let cs = g.coeffs_in(t);
    if cs.len() != 3 {
        return Err(KinematicsError::NotSphereForm(format!(
            "{name} has degree {} in {t}",
            cs.len() - 1
        )));
    }
    let [y1, y2, y3] = [Var::Y1, Var::Y2, Var::Y3];
    let coeff = |m: Monomial| -> MPoly {
        MPoly::from_terms(g.terms().iter().filter_map(|(gm, c)| {
            let rest = gm.with_exp(t, 0);
            (rest == m).then(|| (Monomial::var(t, gm.exp(t)), c.clone()))
        }))
    };
    let sq = |v: Var| coeff(Monomial::var(v, 2));
    let square = sq(y1);
    if sq(y2) != square || sq(y3) != square {
        return Err(KinematicsError::NotSphereForm(format!(
            "{name} has unequal square coefficients"
        )));
    }
    let mixed = [(y1, y2), (y1, y3), (y2, y3)]
        .iter()
        .any(|&(a, b)| !coeff(Monomial::var(a, 1).mul(&Monomial::var(b, 1))).is_zero());
    if mixed || g.total_degree() > 4 {
        return Err(KinematicsError::NotSphereForm(format!(
            "{name} has mixed or higher terms in y"
        )));
    }
    Ok(LimbModel {
        equation: g.clone(),
        input: t,
        t_coeffs: cs.try_into().expect("three coefficients"),
        sphere_square: square,
        sphere_linear: [y1, y2, y3].map(|v| coeff(Monomial::var(v, 1))),
        sphere_constant: coeff(Monomial::one()),
    })
}

fn y_point<R: Real>(y: [R; 3]) -> Assignment<R> {
    Assignment::new()
        .with(Var::Y1, y[0])
        .with(Var::Y2, y[1])
        .with(Var::Y3, y[2])
}

/// How a limb's quadratic degenerated, if at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootTag {
    /// Genuine quadratic; 0 or 2 real roots.
    Regular,
    /// Vanishing discriminant: one double root (input singular).
    Double,
    /// Vanishing leading coefficient: linear equation (the other root went
    /// to infinity).
    Linear,
    /// All three coefficients vanish: any input satisfies the limb.
    Identity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimbRoots<R> {
    /// Real roots, ascending.
    pub roots: Vec<R>,
    pub tag: RootTag,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IkSolution<R> {
    pub y: [R; 3],
    pub limbs: [LimbRoots<R>; 3],
}

impl<R: Real> IkSolution<R> {
    /// All input triples, lexicographically sorted.
    pub fn combinations(&self) -> Vec<[R; 3]> {
        let mut out = Vec::new();
        for &a in &self.limbs[0].roots {
            for &b in &self.limbs[1].roots {
                for &c in &self.limbs[2].roots {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    pub fn count(&self) -> usize {
        self.limbs.iter().map(|l| l.roots.len()).product()
    }

    /// Whether some limb equation vanishes identically at this pose.
    pub fn has_identity_limb(&self) -> bool {
        self.limbs.iter().any(|l| l.tag == RootTag::Identity)
    }
}

fn cmp_real<R: Real>(a: &R, b: &R) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

/// Real roots of `a t² + b t + c`, using `scale` as the magnitude reference
/// for the zero tests.
pub fn solve_quadratic<R: Real>(a: R, b: R, c: R) -> LimbRoots<R> {
    let eps = R::from(DOUBLE_ROOT_TOL).expect("representable");
    let scale = a.abs() + b.abs() + c.abs();
    if scale == R::zero() {
        return LimbRoots {
            roots: Vec::new(),
            tag: RootTag::Identity,
        };
    }
    if a.abs() <= eps * scale {
        if b.abs() <= eps * scale {
            return LimbRoots {
                roots: Vec::new(),
                tag: if c.abs() <= eps * scale {
                    RootTag::Identity
                } else {
                    RootTag::Linear
                },
            };
        }
        return LimbRoots {
            roots: vec![-c / b],
            tag: RootTag::Linear,
        };
    }
    let two = R::one() + R::one();
    let four = two * two;
    let disc = b * b - four * a * c;
    let disc_scale = b * b + (four * a * c).abs();
    if disc.abs() <= eps * disc_scale {
        return LimbRoots {
            roots: vec![-b / (two * a)],
            tag: RootTag::Double,
        };
    }
    if disc < R::zero() {
        return LimbRoots {
            roots: Vec::new(),
            tag: RootTag::Regular,
        };
    }
    // cancellation-free pair of roots
    let sign = if b < R::zero() { -R::one() } else { R::one() };
    let q = -(b + sign * disc.sqrt()) / two;
    let mut roots = vec![q / a, if q == R::zero() { R::zero() } else { c / q }];
    roots.sort_by(cmp_real);
    LimbRoots {
        roots,
        tag: RootTag::Regular,
    }
}

/// Inverse kinematics at the translational pose `y`.
pub fn ik<R: Real>(model: &KinematicModel, y: [R; 3]) -> IkSolution<R> {
    let point = y_point(y);
    let limbs = model.limbs.clone().map(|limb| {
        let [c, b, a] = limb
            .t_coeffs
            .clone()
            .map(|p| p.eval(&point).expect("coefficients depend on y only"));
        solve_quadratic(a, b, c)
    });
    IkSolution { y, limbs }
}

/// Sphere `|y − center|² = radius_sq` of one limb at a fixed input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere<R> {
    pub center: [R; 3],
    pub radius_sq: R,
}

/// How the forward problem degenerated, if at all.
#[derive(Clone, Debug, PartialEq)]
pub enum FkDegeneration<R> {
    None,
    /// The radical planes coincide: the platform moves on a circle with all
    /// inputs locked.
    SelfMotionCircle {
        center: [R; 3],
        normal: [R; 3],
        radius_sq: R,
    },
    /// All three spheres coincide.
    SelfMotionSphere(Sphere<R>),
    /// The radical planes are parallel but distinct, or a sphere has no
    /// real points: no solution.
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FkSolution<R> {
    pub inputs: [R; 3],
    /// Real poses `(y1, y2, y3)`, lexicographically sorted.
    pub points: Vec<[R; 3]>,
    /// Set when the two candidate points merge into one.
    pub double: bool,
    pub degeneration: FkDegeneration<R>,
    /// Intersection line of the radical planes, absent when degenerate.
    pub line: Option<FkLine<R>>,
}

/// Line `p0 + s·u` of the two radical planes and the quadratic
/// `a s² + b s + c` (stored as `[a, b, c]`) cutting it with the first sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FkLine<R> {
    pub p0: [R; 3],
    pub u: [R; 3],
    pub quadratic: [R; 3],
}

impl<R: Real> FkLine<R> {
    /// Both intersection points over the complex numbers.
    pub fn complex_points(&self) -> [[Complex<R>; 3]; 2] {
        let [a, b, c] = self.quadratic;
        let two = R::one() + R::one();
        let disc = b * b - two * two * a * c;
        let re = -b / (two * a);
        let im = disc.abs().sqrt() / (two * a);
        let roots = if disc >= R::zero() {
            [
                Complex::new(re - im, R::zero()),
                Complex::new(re + im, R::zero()),
            ]
        } else {
            [Complex::new(re, -im), Complex::new(re, im)]
        };
        roots.map(|s| std::array::from_fn(|i| Complex::new(self.p0[i], R::zero()) + s * self.u[i]))
    }
}

fn dot<R: Real>(a: &[R; 3], b: &[R; 3]) -> R {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross<R: Real>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn sub<R: Real>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn axpy<R: Real>(p: &[R; 3], s: R, u: &[R; 3]) -> [R; 3] {
    [p[0] + s * u[0], p[1] + s * u[1], p[2] + s * u[2]]
}

/// Spheres of the three limbs at fixed inputs.
pub fn spheres<R: Real>(model: &KinematicModel, t: [R; 3]) -> [Sphere<R>; 3] {
    let two = R::one() + R::one();
    std::array::from_fn(|i| {
        let limb = &model.limbs[i];
        let pt = Assignment::new().with(limb.input, t[i]);
        let ev = |p: &MPoly| p.eval(&pt).expect("coefficients depend on t only");
        let q = ev(&limb.sphere_square);
        let l = limb.sphere_linear.clone().map(|p| ev(&p));
        let k = ev(&limb.sphere_constant);
        let center = l.map(|li| -li / (two * q));
        Sphere {
            center,
            radius_sq: dot(&center, &center) - k / q,
        }
    })
}

/// Forward kinematics at the inputs `t`.
pub fn fk<R: Real>(model: &KinematicModel, t: [R; 3]) -> FkSolution<R> {
    let eps = R::from(DOUBLE_ROOT_TOL).expect("representable");
    let two = R::one() + R::one();
    let sph = spheres(model, t);
    let mut result = FkSolution {
        inputs: t,
        points: Vec::new(),
        double: false,
        degeneration: FkDegeneration::None,
        line: None,
    };
    // |y|² − 2 c_i·y + |c_i|² − ρ_i = 0; subtracting limb 1 gives n_k·y = d_k
    let off = |s: &Sphere<R>| dot(&s.center, &s.center) - s.radius_sq;
    let planes: Vec<([R; 3], R)> = sph[1..]
        .iter()
        .map(|s| {
            let n = sub(&s.center, &sph[0].center).map(|x| two * x);
            (n, off(s) - off(&sph[0]))
        })
        .collect();
    let (n2, d2) = planes[0];
    let (n3, d3) = planes[1];
    let len = |v: &[R; 3]| dot(v, v).sqrt();
    let length_scale = R::one()
        + sph
            .iter()
            .map(|s| len(&s.center) + s.radius_sq.abs().sqrt())
            .fold(R::zero(), |a, b| a.max(b));
    let u = cross(&n2, &n3);
    if len(&u) <= eps * (len(&n2) * len(&n3)).max(length_scale * length_scale) {
        result.degeneration = degenerate_fk(&sph, (n2, d2), (n3, d3), length_scale);
        return result;
    }
    let uu = dot(&u, &u);
    let p0 = {
        let a = cross(&n3, &u).map(|x| x * d2);
        let b = cross(&u, &n2).map(|x| x * d3);
        [(a[0] + b[0]) / uu, (a[1] + b[1]) / uu, (a[2] + b[2]) / uu]
    };
    let w = sub(&p0, &sph[0].center);
    let a = uu;
    let b = two * dot(&u, &w);
    let c = dot(&w, &w) - sph[0].radius_sq;
    result.line = Some(FkLine {
        p0,
        u,
        quadratic: [a, b, c],
    });
    let roots = solve_quadratic(a, b, c);
    result.double = roots.tag == RootTag::Double;
    let mut points: Vec<[R; 3]> = roots.roots.iter().map(|&s| axpy(&p0, s, &u)).collect();
    points.sort_by(|p, q| {
        p.iter()
            .zip(q.iter())
            .map(|(a, b)| cmp_real(a, b))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    });
    result.points = points;
    result
}

fn degenerate_fk<R: Real>(
    sph: &[Sphere<R>; 3],
    (n2, d2): ([R; 3], R),
    (n3, d3): ([R; 3], R),
    scale: R,
) -> FkDegeneration<R> {
    let eps = R::from(1e-9).expect("representable");
    let len = |v: &[R; 3]| dot(v, v).sqrt();
    let tol = eps * scale * scale;
    // pick the better-conditioned plane as representative
    let (n, d, other, od) = if len(&n2) >= len(&n3) {
        (n2, d2, n3, d3)
    } else {
        (n3, d3, n2, d2)
    };
    if len(&n) <= tol {
        let same = (d2.abs() <= tol) && (d3.abs() <= tol);
        return if same && sph[0].radius_sq >= R::zero() {
            FkDegeneration::SelfMotionSphere(sph[0])
        } else {
            FkDegeneration::Inconsistent
        };
    }
    // parallel planes: the other one must be a multiple of (n, d)
    let nn = dot(&n, &n);
    let ratio = dot(&other, &n) / nn;
    if (od - ratio * d).abs() > tol {
        return FkDegeneration::Inconsistent;
    }
    let normal = n.map(|x| x / nn.sqrt());
    let dist = (dot(&n, &sph[0].center) - d) / nn.sqrt();
    let center = axpy(&sph[0].center, -dist, &normal);
    let radius_sq = sph[0].radius_sq - dist * dist;
    if radius_sq < -tol {
        return FkDegeneration::Inconsistent;
    }
    FkDegeneration::SelfMotionCircle {
        center,
        normal,
        radius_sq,
    }
}

/// Scale-normalized residuals of the three limb equations at `(y, t)`.
pub fn residuals<R: Real>(model: &KinematicModel, y: [R; 3], t: [R; 3]) -> [f64; 3] {
    let mut point = y_point(y.map(|v| v.to_f64().unwrap_or(f64::NAN)));
    for (v, x) in Var::INPUTS.iter().zip(t) {
        point.set(*v, x.to_f64().unwrap_or(f64::NAN));
    }
    std::array::from_fn(|i| {
        model.limbs[i]
            .equation
            .relative_residual(&point)
            .expect("equation depends on y and t only")
    })
}

/// Result of checking `fk ∘ ik` at one pose.
#[derive(Clone, Debug, PartialEq)]
pub struct RoundTrip<R> {
    pub inputs: [R; 3],
    pub recovered: bool,
    /// FK solutions other than the starting pose (the other assembly mode).
    pub others: Vec<[R; 3]>,
    pub degeneration: FkDegeneration<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundTripReport<R> {
    pub y: [R; 3],
    pub combinations: Vec<RoundTrip<R>>,
}

impl<R: Real> RoundTripReport<R> {
    /// No IK solution at all (pose out of reach).
    pub fn is_empty(&self) -> bool {
        self.combinations.is_empty()
    }

    pub fn all_recovered(&self) -> bool {
        self.combinations.iter().all(|c| c.recovered)
    }
}

/// Runs FK on every IK combination at `y` and checks that `y` comes back
/// within `tol` (absolute, in Study coordinates).
pub fn roundtrip_check<R: Real>(model: &KinematicModel, y: [R; 3], tol: R) -> RoundTripReport<R> {
    let sol = ik(model, y);
    let combinations = sol
        .combinations()
        .into_iter()
        .map(|t| {
            let f = fk(model, t);
            let close = |p: &[R; 3]| {
                let d = sub(p, &y);
                dot(&d, &d).sqrt() <= tol
            };
            let recovered = match &f.degeneration {
                FkDegeneration::None => f.points.iter().any(close),
                FkDegeneration::SelfMotionCircle {
                    center,
                    normal,
                    radius_sq,
                } => {
                    let d = sub(&y, center);
                    let h = dot(&d, normal);
                    let r2 = dot(&d, &d) - h * h;
                    h.abs() <= tol && (r2 - *radius_sq).abs() <= tol * (R::one() + radius_sq.abs())
                }
                FkDegeneration::SelfMotionSphere(s) => {
                    let d = sub(&y, &s.center);
                    (dot(&d, &d) - s.radius_sq).abs() <= tol * (R::one() + s.radius_sq.abs())
                }
                FkDegeneration::Inconsistent => false,
            };
            let others = f.points.iter().filter(|p| !close(p)).copied().collect();
            RoundTrip {
                inputs: t,
                recovered,
                others,
                degeneration: f.degeneration,
            }
        })
        .collect();
    RoundTripReport { y, combinations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> KinematicModel {
        KinematicModel::new(&Design::pars()).unwrap()
    }

    #[test]
    fn ik_at_symmetric_pose() {
        let sol = ik(&model(), [0.0, 0.0, 2.0]);
        let s = 14f64.sqrt();
        for limb in &sol.limbs {
            assert_eq!(limb.tag, RootTag::Regular);
            assert!((limb.roots[0] - (3.0 - s)).abs() < 1e-12);
            assert!((limb.roots[1] - (3.0 + s)).abs() < 1e-12);
        }
        assert_eq!(sol.count(), 8);
    }

    #[test]
    fn ik_out_of_reach() {
        let sol = ik(&model(), [0.0, 0.0, 10.0]);
        assert_eq!(sol.count(), 0);
        assert!(sol.limbs.iter().all(|l| l.roots.is_empty()));
    }

    #[test]
    fn quadratic_edge_cases() {
        assert_eq!(solve_quadratic(1.0, -2.0, 1.0).tag, RootTag::Double);
        assert_eq!(solve_quadratic(0.0, 2.0, -4.0).roots, vec![2.0]);
        assert_eq!(solve_quadratic(0.0, 0.0, 0.0).tag, RootTag::Identity);
        assert_eq!(solve_quadratic(1.0, 0.0, -4.0).roots, vec![-2.0, 2.0]);
    }

    #[test]
    fn fk_recovers_both_assembly_modes() {
        let tau = 3.0 - 14f64.sqrt();
        let f = fk(&model(), [tau; 3]);
        assert_eq!(f.degeneration, FkDegeneration::None);
        assert_eq!(f.points.len(), 2);
        assert!((f.points[1][2] - 2.0).abs() < 1e-9);
        assert!((f.points[0][2] + 2.8709).abs() < 1e-4);
        let [lo, hi] = f.line.unwrap().complex_points();
        assert!((lo[2].re - f.points[0][2]).abs() < 1e-9 && lo[2].im == 0.0);
        assert!((hi[2].re - 2.0).abs() < 1e-9);
    }

    #[test]
    fn fk_coincident_spheres_contain_the_circle() {
        let m = KinematicModel::new(&Design::pars2()).unwrap();
        for t in [-0.5f64, -2.0] {
            let f = fk(&m, [t; 3]);
            let FkDegeneration::SelfMotionSphere(s) = f.degeneration else {
                panic!("unexpected {:?}", f.degeneration);
            };
            // every point of y1² + y2² = 7/4, y3 = 0 lies on the common sphere
            let on_circle = [1.75f64.sqrt(), 0.0, 0.0];
            let d = sub(&on_circle, &s.center);
            assert!((dot(&d, &d) - s.radius_sq).abs() < 1e-9);
        }
    }

    #[test]
    fn works_in_single_precision() {
        let m = model();
        let sol = ik(&m, [0.0f32, 0.0, 2.0]);
        assert!((sol.limbs[0].roots[0] - (3.0 - 14f32.sqrt())).abs() < 1e-5);
    }
}
