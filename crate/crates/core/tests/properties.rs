use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ruukin::algebra::{
    resultant, resultant_raw, Assignment, ExtScalar, LowerSetInterpolator, MPoly, Monomial, Var,
    NVARS,
};
use ruukin::kinematics::{fk, ik, FkDegeneration, KinematicModel};
use ruukin::model::{general_constraints, Design, DesignSpec, DualQuaternion};
use ruukin::singularity::jacobian;

const VARS: [Var; 3] = [Var::Y1, Var::Y2, Var::T1];

fn scalar() -> impl Strategy<Value = ExtScalar> {
    (-6i64..=6, 1i64..=4, -2i64..=2).prop_map(|(n, d, i)| {
        &ExtScalar::from_ratio(n, d) + &(&ExtScalar::sqrt3() * &ExtScalar::from_int(i))
    })
}

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::array::uniform3(0u16..3), scalar()), 0..5).prop_map(|terms| {
        MPoly::from_terms(terms.into_iter().map(|(e, c)| {
            let mut exps = [0u16; NVARS];
            for (v, k) in VARS.iter().zip(e) {
                exps[v.index()] = k;
            }
            (Monomial::from_exponents(exps), c)
        }))
    })
}

fn point() -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-3i64..=3)
}

fn exact_at(p: [i64; 3]) -> Assignment<ExtScalar> {
    VARS.iter()
        .zip(p)
        .map(|(&v, x)| (v, ExtScalar::from_int(x)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly()) {
        for v in VARS {
            let lhs = (&a * &b).diff(v);
            let rhs = &(&a.diff(v) * &b) + &(&a * &b.diff(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        let at = exact_at(p);
        let prod = (&a * &b).eval(&at).unwrap();
        prop_assert_eq!(prod, &a.eval(&at).unwrap() * &b.eval(&at).unwrap());
    }

    #[test]
    fn exact_division_recovers_factors(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).div_exact(&b).unwrap();
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn float_evaluation_tracks_exact(a in poly(), p in point()) {
        let exact = a.eval(&exact_at(p)).unwrap().to_f64();
        let float_at: Assignment<f64> = VARS.iter().zip(p).map(|(&v, x)| (v, x as f64)).collect();
        let (value, scale) = a.eval_scaled(&float_at).unwrap();
        prop_assert!((value - exact).abs() <= 1e-12 * (1.0 + scale));
    }

    #[test]
    fn resultant_symmetry(f in poly(), g in poly()) {
        let df = f.degree_in(Var::T1) as i32;
        let dg = g.degree_in(Var::T1) as i32;
        prop_assume!(df > 0 && dg > 0);
        let rfg = resultant_raw(&f, &g, Var::T1).unwrap();
        let rgf = resultant_raw(&g, &f, Var::T1).unwrap();
        let sign = if (df * dg) % 2 == 0 { ExtScalar::from_int(1) } else { ExtScalar::from_int(-1) };
        prop_assert_eq!(rfg, rgf.scale(&sign));
    }

    #[test]
    fn resultant_vanishes_on_common_roots(f in poly(), r in -3i64..=3) {
        // both polynomials share the root t1 = r
        let root = &MPoly::var(Var::T1) - &MPoly::from_int(r);
        let g = &root * &MPoly::var(Var::Y1);
        let ff = &root * &f;
        prop_assume!(ff.degree_in(Var::T1) > 0);
        prop_assert!(resultant(&ff, &g, Var::T1).unwrap().is_zero());
    }

    #[test]
    fn interpolation_reproduces_polynomials(a in poly()) {
        let deg = a.total_degree() as usize;
        let interp = LowerSetInterpolator::new(&VARS, deg);
        let values: Vec<ExtScalar> = interp
            .points()
            .iter()
            .map(|p| {
                let at: Assignment<ExtScalar> = VARS
                    .iter()
                    .zip(p)
                    .map(|(&v, x)| (v, ExtScalar::from_rational(x.clone())))
                    .collect();
                a.eval(&at).unwrap()
            })
            .collect();
        prop_assert_eq!(interp.interpolate(&values), a);
    }

    #[test]
    fn dual_quaternion_composition_is_associative(
        c in prop::array::uniform3(prop::array::uniform8(-3i64..=3))
    ) {
        let dq = |k: usize| {
            DualQuaternion::from_coords(c[k].map(ExtScalar::from_int))
        };
        let (a, b, d) = (dq(0), dq(1), dq(2));
        prop_assert_eq!(a.compose(&b).compose(&d), a.compose(&b.compose(&d)));
    }

    #[test]
    fn fk_inverts_ik(y in prop::array::uniform3(-3.0f64..3.0)) {
        let model = KinematicModel::new(&Design::pars()).unwrap();
        for t in ik(&model, y).combinations() {
            let sol = fk(&model, t);
            let hit = sol.points.iter().any(|p| {
                (0..3).map(|i| (p[i] - y[i]).powi(2)).sum::<f64>().sqrt() < 1e-7
            });
            prop_assert!(hit || sol.degeneration != FkDegeneration::None, "{y:?} {t:?}");
        }
    }
}

#[test]
fn jacobian_matches_finite_differences() {
    let design = Design::pars();
    let cs = general_constraints(&DesignSpec::from(&design));
    let jac = jacobian(&cs);
    let polys = cs.polys();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let vars: Vec<Var> = Var::STUDY
        .iter()
        .chain(Var::INPUTS.iter())
        .copied()
        .collect();
    for _ in 0..10 {
        let mut at = Assignment::new();
        for &v in &vars {
            at.set(v, rng.gen_range(-2.0..2.0));
        }
        for (i, g) in polys.iter().enumerate() {
            for (j, &v) in vars.iter().enumerate() {
                let h = 1e-6;
                let x = *at.get(v).unwrap();
                let mut plus = at.clone();
                plus.set(v, x + h);
                let mut minus = at.clone();
                minus.set(v, x - h);
                let fd = (g.eval(&plus).unwrap() - g.eval(&minus).unwrap()) / (2.0 * h);
                let entry = if j < 8 {
                    jac.output.get(i, j)
                } else {
                    jac.input.get(i, j - 8)
                };
                let exact = entry.eval(&at).unwrap();
                let (_, scale) = entry.eval_scaled(&at).unwrap();
                assert!(
                    (fd - exact).abs() <= 1e-5 * (1.0 + scale),
                    "row {i}, {v}: {fd} vs {exact}"
                );
            }
        }
    }
}
