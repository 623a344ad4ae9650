//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ruukin::algebra::{Assignment, ExtScalar, Var};
use ruukin::kinematics::{fk, ik, roundtrip_check, FkDegeneration, KinematicModel};
use ruukin::model::{
    general_constraints, translational_substitution, translational_system, twisted_substitution,
    Design, DesignSpec,
};
use ruukin::printed;
use ruukin::singularity::{
    input_minors_translational, input_singular_configuration, joint_poly, joint_poly_residual,
    output_det_translational, output_eliminant, output_singular_configuration,
    random_regular_triple, self_motion, torus_equation, JointKind, SingularityModel,
};
use ruukin::workspace::{eliminate_inputs, mode_of, transition_curve_point, Mode};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn y_point(y: [f64; 3]) -> Assignment<f64> {
    Assignment::new()
        .with(Var::Y1, y[0])
        .with(Var::Y2, y[1])
        .with(Var::Y3, y[2])
}

fn c1_translational_system() -> Outcome {
    let wt = translational_system(&DesignSpec::Symbolic).polys();
    for (i, src) in [printed::WT_G2, printed::WT_G4, printed::WT_G6]
        .iter()
        .enumerate()
    {
        ensure(
            wt[i] == printed::poly(src),
            format!("g{} differs", 2 * i + 2),
        )?;
    }
    Ok("g2, g4, g6 equal the reference term for term".into())
}

fn c2_workspace_modes() -> Outcome {
    let mut degrees = Vec::new();
    for design in [Design::pars(), Design::pars2()] {
        let ws = eliminate_inputs(&general_constraints(&design.clone().into()))
            .map_err(|e| e.to_string())?;
        for (label, sub) in [
            ("O1", translational_substitution()),
            ("O2", twisted_substitution()),
        ] {
            for (name, g) in ws.equations() {
                ensure(
                    g.subs(&sub).is_zero(),
                    format!("{name} != 0 on {label} for {design}"),
                )?;
            }
        }
        degrees.push(ws.degrees());
    }
    Ok(format!("exact zero on O1 and O2; degrees {degrees:?}"))
}

fn c3_input_factorization() -> Outcome {
    let f = input_minors_translational(&DesignSpec::Symbolic).map_err(|e| e.to_string())?;
    ensure(f.minors == 56 && f.vanishing == 55, "minor count")?;
    Ok(format!(
        "{} of {} minors vanish; survivor = ({}) p1 p2 p3",
        f.vanishing, f.minors, f.cofactor
    ))
}

fn c4_torus() -> Outcome {
    let t1 = torus_equation(1, &DesignSpec::Symbolic).map_err(|e| e.to_string())?;
    ensure(
        t1 == printed::poly(printed::TORUS_1),
        "limb-1 torus differs",
    )?;
    let t = torus_equation(1, &Design::pars().into()).map_err(|e| e.to_string())?;
    for y2 in [-2, 2] {
        let a = Assignment::new()
            .with(Var::Y1, ExtScalar::from_int(-2))
            .with(Var::Y2, ExtScalar::from_int(y2))
            .with(Var::Y3, ExtScalar::from_int(0));
        let v = t.eval(&a).map_err(|e| e.to_string())?;
        ensure(v == ExtScalar::from_int(0), format!("torus({y2}) = {v}"))?;
    }
    Ok("equals the reference; exact zero at (-2, ±2, 0)".into())
}

fn c5_output_factorization() -> Outcome {
    let f = output_det_translational(&DesignSpec::Symbolic).map_err(|e| e.to_string())?;
    ensure(
        !f.s1.has_var(Var::A3) && !f.s2.has_var(Var::A3),
        "a3 present",
    )?;
    ensure(!f.cofactor.is_zero(), "zero cofactor")?;
    Ok(format!("det = ({}) s1 s2; s1, s2 free of a3", f.cofactor))
}

fn c6_joint_polynomials() -> Outcome {
    ensure(
        joint_poly(JointKind::Input).constant_term() == ExtScalar::from_int(32),
        "input constant term",
    )?;
    ensure(
        joint_poly(JointKind::Output).constant_term() == ExtScalar::from_int(144),
        "output constant term",
    )?;
    let model = SingularityModel::new(&Design::pars()).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut worst_in, mut worst_out) = (0f64, 0f64);
    for _ in 0..20 {
        // the input polynomial belongs to the limb whose input is t3
        let c = input_singular_configuration(&model, 3, &mut rng).map_err(|e| e.to_string())?;
        worst_in = worst_in.max(joint_poly_residual(JointKind::Input, c.t));
        let c = output_singular_configuration(&model, 0, &mut rng).map_err(|e| e.to_string())?;
        worst_out = worst_out.max(joint_poly_residual(JointKind::Output, c.t));
    }
    let mut best = [f64::MAX; 2];
    for _ in 0..20 {
        let t = random_regular_triple(&model, &mut rng).map_err(|e| e.to_string())?;
        best[0] = best[0].min(joint_poly_residual(JointKind::Input, t));
        best[1] = best[1].min(joint_poly_residual(JointKind::Output, t));
    }
    let detail = format!(
        "singular max {worst_in:.1e}/{worst_out:.1e}, regular min {:.1e}/{:.1e}",
        best[0], best[1]
    );
    ensure(worst_in <= 1e-6 && worst_out <= 1e-6, detail.clone())?;
    ensure(best[0] >= 1e-3 && best[1] >= 1e-3, detail.clone())?;
    Ok(detail)
}

fn c7_output_eliminant() -> Outcome {
    let rep = output_eliminant(&Design::pars()).map_err(|e| e.to_string())?;
    ensure(
        rep.sphere_pair == printed::poly(printed::SPHERES_PRODUCT),
        "sphere pair differs from the reference product",
    )?;
    let e = &rep.eliminant;
    let r = 8f64.sqrt();
    let mut worst = 0f64;
    for deg in [0.0f64, 30.0, 45.0] {
        let th = deg.to_radians();
        let res = e
            .relative_residual(&y_point([r * th.cos(), r * th.sin(), 0.0]))
            .map_err(|x| x.to_string())?;
        worst = worst.max(res);
    }
    let regular = e
        .relative_residual(&y_point([0.0, 0.0, 2.0]))
        .map_err(|x| x.to_string())?;
    let detail = format!(
        "degree {} = 4*{} + {}, circle residual {worst:.1e}, at (0,0,2) {regular:.1e}",
        rep.degree,
        rep.multiplicity,
        rep.cofactor.total_degree()
    );
    ensure(worst <= 1e-6 && regular > 1e-6, detail.clone())?;
    Ok(detail)
}

fn c8_self_motion() -> Outcome {
    use num_rational::BigRational;
    let sm = self_motion(&Design::pars2()).ok_or("no self-motion for pars2")?;
    ensure(
        sm.radius_sq == BigRational::new(7.into(), 4.into()),
        "radius²",
    )?;
    let expected = vec![
        BigRational::from_integer((-2).into()),
        BigRational::new((-1).into(), 2.into()),
    ];
    ensure(sm.inputs.exact.as_ref() == Some(&expected), "fixed inputs")?;
    let wt = translational_system(&Design::pars2().into()).polys();
    let r = 1.75f64.sqrt();
    let mut worst = 0f64;
    for k in 0..12 {
        let th = (30.0 * k as f64).to_radians();
        let mut a = y_point([r * th.cos(), r * th.sin(), 0.0]);
        for t in Var::INPUTS {
            a.set(t, -0.5);
        }
        for g in &wt {
            worst = worst.max(g.relative_residual(&a).map_err(|e| e.to_string())?);
        }
    }
    ensure(worst <= 1e-9, format!("circle residual {worst:e}"))?;
    let sm3 = self_motion(&Design::pars()).ok_or("no self-motion for pars")?;
    ensure(
        sm3.radius_sq == BigRational::from_integer(8.into()),
        "pars radius²",
    )?;
    ensure(sm3.inputs.is_complex(), "pars inputs should be complex")?;
    Ok(format!(
        "radius² 7/4, t ∈ {{-2, -1/2}}, max residual {worst:.1e}; pars: 8, complex"
    ))
}

fn c9_transition_curve() -> Outcome {
    let c0 = transition_curve_point(0.0, 0).map_err(|e| e.to_string())?;
    ensure(
        c0.coords == [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3.5],
        "C(0)",
    )?;
    let ws = eliminate_inputs(&general_constraints(&Design::pars2().into()))
        .map_err(|e| e.to_string())?;
    let mut worst = 0f64;
    for k in 0..50 {
        let t = -1.0 + 2.0 * k as f64 / 49.0;
        let m = ws
            .membership(
                &transition_curve_point(t, 0).map_err(|e| e.to_string())?,
                1e-6,
            )
            .map_err(|e| e.to_string())?;
        worst = worst.max(m.residuals.iter().cloned().fold(0.0, f64::max));
        ensure(
            m.in_workspace,
            format!("t = {t}: residuals {:?}", m.residuals),
        )?;
    }
    for k in -20..=20 {
        let t = k as f64 * 0.05;
        let mode = mode_of(
            &transition_curve_point(t, 0).map_err(|e| e.to_string())?,
            1e-12,
        )
        .map_err(|e| e.to_string())?;
        ensure(
            (mode == Mode::O1) == (k == 0),
            format!("mode {mode:?} at t = {t}"),
        )?;
    }
    Ok(format!(
        "50 samples, max residual {worst:.1e}; O1 only at t = 0"
    ))
}

fn c10_kinematics() -> Outcome {
    let model = KinematicModel::new(&Design::pars()).map_err(|e| e.to_string())?;
    let sol = ik(&model, [0.0, 0.0, 2.0]);
    let s = 14f64.sqrt();
    for limb in &sol.limbs {
        ensure(limb.roots.len() == 2, "two roots per limb")?;
        let err = (limb.roots[0] - (3.0 - s))
            .abs()
            .max((limb.roots[1] - (3.0 + s)).abs());
        ensure(err < 1e-12 * (3.0 + s), format!("IK error {err:e}"))?;
    }
    let f = fk(&model, [3.0 - s; 3]);
    ensure(f.degeneration == FkDegeneration::None, "FK degenerate")?;
    ensure(f.points.len() == 2, "two FK solutions")?;
    let hit = f
        .points
        .iter()
        .any(|p| (p[0].abs() + p[1].abs() + (p[2] - 2.0).abs()) < 1e-8);
    ensure(hit, format!("FK points {:?}", f.points))?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut tested = 0;
    while tested < 100 {
        let y: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        let report = roundtrip_check(&model, y, 1e-8);
        if report.is_empty() {
            continue;
        }
        ensure(report.all_recovered(), format!("closure fails at {y:?}"))?;
        tested += 1;
    }
    Ok("IK 3±√14, FK (0,0,2) plus a second solution, 100 closures".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("translational system reproduction", c1_translational_system),
        ("workspace equations on O1 and O2", c2_workspace_modes),
        ("input singularity factorization", c3_input_factorization),
        ("torus identity", c4_torus),
        ("output determinant factorization", c5_output_factorization),
        ("degree-12 joint polynomials", c6_joint_polynomials),
        ("output eliminant on the circle", c7_output_eliminant),
        ("self-motion", c8_self_motion),
        ("transition curve", c9_transition_curve),
        ("kinematics", c10_kinematics),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
