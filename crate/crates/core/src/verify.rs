//! One-shot identity suite over a numeric design.
//!
//! Symbolic identities (translational system, torus) are design-free. The
//! factorizations are checked with the design substituted. The degree-12
//! joint-space checks compare constructed configurations of the design with
//! the hard-coded polynomials, which belong to `pars`; any other design
//! is expected to fail them.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{fmt_exact, Assignment, ExtScalar, Var};
use crate::model::{translational_system, Design, DesignSpec};
use crate::printed;
use crate::singularity::{
    degenerate_points, input_minors_translational, input_singular_configuration, joint_poly,
    joint_poly_residual, output_det_translational, output_singular_configuration, self_motion,
    torus_equation, JointKind, SingularityModel,
};
use crate::workspace::{
    eliminate_inputs, mode_of, transition_curve_design, transition_curve_point, Mode,
};

/// Seed of the constructed configurations.
pub const VERIFY_SEED: u64 = 6;
/// Residual bound for the degree-12 vanishing samples.
pub const VANISHING_TOL: f64 = 1e-6;
/// Residual bound for self-motion circle points.
pub const CIRCLE_TOL: f64 = 1e-9;
/// Membership bound along the transition curve.
pub const CURVE_TOL: f64 = 1e-6;
const SAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct VerifyReport {
    pub design: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

type CheckResult = Result<String, String>;
type Runner<'a> = Box<dyn Fn() -> CheckResult + 'a>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn y_point(y: [f64; 3]) -> Assignment<f64> {
    Assignment::new()
        .with(Var::Y1, y[0])
        .with(Var::Y2, y[1])
        .with(Var::Y3, y[2])
}

fn translational_match(design: &Design) -> CheckResult {
    let printed = [printed::WT_G2, printed::WT_G4, printed::WT_G6].map(printed::poly);
    let symbolic = translational_system(&DesignSpec::Symbolic).polys();
    ensure(
        symbolic == printed,
        "symbolic W_T differs from the printed system",
    )?;
    let numeric = translational_system(&design.into()).polys();
    let expected: Vec<_> = printed.iter().map(|p| design.apply(p)).collect();
    ensure(numeric == expected, "W_T of the design differs")?;
    Ok("g2, g4, g6 match symbolically and for the design".into())
}

fn input_minors(design: &Design) -> CheckResult {
    let f = input_minors_translational(&design.into()).map_err(err)?;
    ensure(
        f.vanishing + 1 == f.minors,
        format!("{} of {} minors vanish", f.vanishing, f.minors),
    )?;
    Ok(format!(
        "{} of {} minors vanish, survivor ({}) p1 p2 p3",
        f.vanishing, f.minors, f.cofactor
    ))
}

fn output_det(design: &Design) -> CheckResult {
    let f = output_det_translational(&design.into()).map_err(err)?;
    let free = [printed::S1, printed::S2]
        .iter()
        .all(|s| !printed::poly(s).has_var(Var::A3));
    ensure(free, "s1 or s2 depends on a3")?;
    Ok(format!("det = ({}) s1 s2", f.cofactor))
}

fn torus(design: &Design) -> CheckResult {
    let t1 = torus_equation(1, &DesignSpec::Symbolic).map_err(err)?;
    ensure(
        t1 == printed::poly(printed::TORUS_1),
        "limb-1 torus differs",
    )?;
    let dp = degenerate_points(design).map_err(err)?;
    ensure(dp.on_torus, "degenerate points are off the torus")?;
    Ok(format!(
        "torus matches; degenerate points y1 = {}, y2² = {} lie on it{}",
        fmt_exact(&dp.y1),
        fmt_exact(&dp.y2_sq),
        if dp.is_real() { "" } else { " (complex)" }
    ))
}

fn circle_check(design: &Design) -> CheckResult {
    let Some(sm) = self_motion(design) else {
        return Ok(format!("{design}: no self-motion"));
    };
    if sm.inputs.is_complex() {
        return Ok(format!(
            "{design}: radius² {}, complex fixed inputs",
            fmt_exact(&sm.radius_sq)
        ));
    }
    let wt = translational_system(&design.into()).polys();
    let r = ExtScalar::from_rational(sm.radius_sq.clone())
        .to_f64()
        .sqrt();
    let mut worst = 0f64;
    for &t in &sm.inputs.values {
        for k in 0..12 {
            let th = (30.0 * k as f64).to_radians();
            let mut a = y_point([r * th.cos(), r * th.sin(), 0.0]);
            for v in Var::INPUTS {
                a.set(v, t);
            }
            for g in &wt {
                worst = worst.max(g.relative_residual(&a).map_err(err)?);
            }
        }
    }
    ensure(worst <= CIRCLE_TOL, format!("circle residual {worst:e}"))?;
    Ok(format!(
        "{design}: radius² {}, inputs {:?}, residual {worst:.1e}",
        fmt_exact(&sm.radius_sq),
        sm.inputs.values
    ))
}

fn self_motion_check(design: &Design) -> CheckResult {
    let reference = Design::pars2();
    let sm = self_motion(&reference).ok_or("pars2 has no self-motion")?;
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    ensure(sm.radius_sq == q(7, 4), "pars2 radius² is not 7/4")?;
    ensure(
        sm.inputs.exact == Some(vec![q(-2, 1), q(-1, 2)]),
        "pars2 fixed inputs are not {-2, -1/2}",
    )?;
    let mut detail = circle_check(&reference)?;
    if *design != reference {
        detail = format!("{detail}; {}", circle_check(design)?);
    }
    Ok(detail)
}

fn transition_curve() -> CheckResult {
    let c0 = transition_curve_point(0.0, 0).map_err(err)?;
    ensure(
        c0.coords == [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.5],
        "C(0)",
    )?;
    let ws = eliminate_inputs(&crate::model::general_constraints(
        &transition_curve_design().into(),
    ))
    .map_err(err)?;
    let mut worst = 0f64;
    for k in 0..50 {
        let t = -1.0 + 2.0 * k as f64 / 49.0;
        let m = ws
            .membership(&transition_curve_point(t, 0).map_err(err)?, CURVE_TOL)
            .map_err(err)?;
        worst = m.residuals.iter().fold(worst, |a, &b| a.max(b));
        ensure(m.in_workspace, format!("C({t}) not in the workspace"))?;
    }
    for k in -20..=20 {
        let t = k as f64 * 0.05;
        let mode = mode_of(&transition_curve_point(t, 0).map_err(err)?, 1e-12).map_err(err)?;
        ensure(
            (mode == Mode::O1) == (k == 0),
            format!("mode {mode:?} at t = {t}"),
        )?;
    }
    Ok(format!("50 samples within {worst:.1e}; O1 only at t = 0"))
}

fn joint_constants() -> CheckResult {
    let ci = joint_poly(JointKind::Input).constant_term();
    let co = joint_poly(JointKind::Output).constant_term();
    ensure(
        ci == ExtScalar::from_int(32),
        format!("input constant {ci}"),
    )?;
    ensure(
        co == ExtScalar::from_int(144),
        format!("output constant {co}"),
    )?;
    Ok("constant terms 32 and 144".into())
}

fn joint_vanishing(design: &Design, kind: JointKind) -> CheckResult {
    let model = SingularityModel::new(design).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    let mut worst = 0f64;
    for _ in 0..SAMPLES {
        let c = match kind {
            // the printed input polynomial singles out t3
            JointKind::Input => input_singular_configuration(&model, 3, &mut rng),
            JointKind::Output => output_singular_configuration(&model, 0, &mut rng),
        }
        .map_err(err)?;
        worst = worst.max(joint_poly_residual(kind, c.t));
    }
    ensure(
        worst <= VANISHING_TOL,
        format!("max residual {worst:.1e} over {SAMPLES} singular triples"),
    )?;
    Ok(format!(
        "max residual {worst:.1e} over {SAMPLES} singular triples"
    ))
}

/// Runs every check for `design`.
pub fn verify(design: &Design) -> VerifyReport {
    let checks: [(&'static str, Runner); 9] = [
        (
            "translational-system",
            Box::new(|| translational_match(design)),
        ),
        ("input-minors", Box::new(|| input_minors(design))),
        ("output-determinant", Box::new(|| output_det(design))),
        ("torus", Box::new(|| torus(design))),
        ("self-motion", Box::new(|| self_motion_check(design))),
        ("transition-curve", Box::new(transition_curve)),
        ("joint-constants", Box::new(joint_constants)),
        (
            "joint-input-vanishing",
            Box::new(|| joint_vanishing(design, JointKind::Input)),
        ),
        (
            "joint-output-vanishing",
            Box::new(|| joint_vanishing(design, JointKind::Output)),
        ),
    ];
    let checks = checks
        .iter()
        .map(|(name, run)| {
            let outcome = run();
            Check {
                name,
                passed: outcome.is_ok(),
                detail: outcome.unwrap_or_else(|e| e),
            }
        })
        .collect();
    VerifyReport {
        design: design.to_string(),
        checks,
    }
}
