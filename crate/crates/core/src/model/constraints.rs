use crate::algebra::{Assignment, ExtScalar, MPoly, Var};

use super::design::DesignSpec;
use super::dq::DualQuaternion;

/// A named list of polynomial equations together with the design they were
/// generated for.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintSystem {
    equations: Vec<(String, MPoly)>,
    design: DesignSpec,
}

impl ConstraintSystem {
    pub fn new(equations: Vec<(String, MPoly)>, design: DesignSpec) -> Self {
        ConstraintSystem { equations, design }
    }

    pub fn equations(&self) -> &[(String, MPoly)] {
        &self.equations
    }

    pub fn polys(&self) -> Vec<MPoly> {
        self.equations.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&MPoly> {
        self.equations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }

    pub fn design(&self) -> &DesignSpec {
        &self.design
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// Union of the variables of all equations, in registry order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.equations.iter().any(|(_, p)| p.has_var(v)))
            .collect()
    }

    /// Applies the same substitution to every equation.
    pub fn subs(&self, point: &Assignment<MPoly>) -> ConstraintSystem {
        ConstraintSystem {
            equations: self
                .equations
                .iter()
                .map(|(n, p)| (n.clone(), p.subs(point)))
                .collect(),
            design: self.design.clone(),
        }
    }
}

fn v(var: Var) -> MPoly {
    MPoly::var(var)
}

/// The two equations of a limb in its own frames, with input `t` written as
/// `t1`.
pub fn canonical_constraints(spec: &DesignSpec) -> (MPoly, MPoly) {
    let [x0, x1, x2, x3, y0, y1, y2, y3] = Var::STUDY.map(v);
    let (t, a1, a3) = (v(Var::T1), v(Var::A1), v(Var::A3));
    let one = MPoly::one();
    let c = |n: i64| MPoly::from_int(n);
    let tt = &t * &t;
    let tp = &tt + &one;
    let tm = &tt - &one;

    let f1 = &(&(&(&(&x0 * &x1) - &(&x2 * &x3)) * &tm)
        - &(&(&(&c(2) * &(&x0 * &x2)) + &(&c(2) * &(&x1 * &x3))) * &t))
        * &a1
        + &(&c(2) * &tp) * &(&(&x0 * &y0) + &(&x3 * &y3));

    let xx = &(&(&x0 * &x0) + &(&x1 * &x1)) + &(&(&x2 * &x2) + &(&x3 * &x3));
    let yy = &(&(&y0 * &y0) + &(&y1 * &y1)) + &(&(&y2 * &y2) + &(&y3 * &y3));
    let u = &(&(&x0 * &y1) - &(&x1 * &y0)) + &(&(&x2 * &y3) - &(&x3 * &y2));
    let w = &(&(&x1 * &y3) - &(&x0 * &y2)) + &(&(&x2 * &y0) - &(&x3 * &y1));
    let lin = &(&(&c(4) * &(&u * &tt)) + &(&c(8) * &(&w * &t))) - &(&c(4) * &u);
    let f2 = &(&(&-(&xx * &tp) * &(&a1 * &a1)) + &(&lin * &a1))
        + &(&(&(&xx * &(&a3 * &a3)) - &(&c(4) * &yy)) * &tp);

    (spec.apply(&f1), spec.apply(&f2))
}

/// Base and platform anchors `(B_i, P_i)` of limb `1..=3` with symbolic radii:
/// a third turn about z, a shift by the radius along x, and a fixed frame
/// rotation that aligns the first joint axis with the circum-circle tangent.
pub fn limb_anchors(limb: usize) -> (DualQuaternion<MPoly>, DualQuaternion<MPoly>) {
    assert!((1..=3).contains(&limb), "limb index must be 1, 2 or 3");
    let half = ExtScalar::from_ratio(1, 2);
    let frame = DualQuaternion::rotation([
        MPoly::constant(half.clone()),
        MPoly::constant(-half.clone()),
        MPoly::constant(-half.clone()),
        MPoly::constant(-half),
    ]);
    let turn = DualQuaternion::<MPoly>::rot_z_third(limb - 1);
    let anchor = |r: Var| {
        let shift = DualQuaternion::translation([v(r), MPoly::zero(), MPoly::zero()]);
        turn.compose(&shift).compose(&frame)
    };
    (anchor(Var::R0), anchor(Var::R1))
}

/// Limb equations `(g_{2i−1}, g_{2i})` in the global frames.
///
/// The canonical equations are pulled back through `X ↦ conj(B_i)·X·P_i`;
/// the second one is negated so that its translational specialization has a
/// positive `y1²` coefficient.
pub fn limb_constraints(limb: usize, spec: &DesignSpec) -> (MPoly, MPoly) {
    let (f1, f2) = canonical_constraints(&DesignSpec::Symbolic);
    let (b, p) = limb_anchors(limb);
    let x = DualQuaternion::from_coords(Var::STUDY.map(v));
    let moved = b.conj().compose(&x).compose(&p);
    let mut point: Assignment<MPoly> = Var::STUDY.iter().copied().zip(moved.coords()).collect();
    point.set(Var::T1, v(Var::input(limb)));
    let g_odd = f1.subs(&point);
    let g_even = -f2.subs(&point);
    (spec.apply(&g_odd), spec.apply(&g_even))
}

/// `x0·y0 + x1·y1 + x2·y2 + x3·y3`.
pub fn study_quadric() -> MPoly {
    (0..4)
        .map(|i| &v(Var::STUDY[i]) * &v(Var::STUDY[i + 4]))
        .fold(MPoly::zero(), |acc, t| &acc + &t)
}

/// `x0² + x1² + x2² + x3² − 1`.
pub fn normalization() -> MPoly {
    let sq = (0..4)
        .map(|i| &v(Var::STUDY[i]) * &v(Var::STUDY[i]))
        .fold(MPoly::zero(), |acc, t| &acc + &t);
    &sq - &MPoly::one()
}

/// The full system `g1..g8`.
pub fn general_constraints(spec: &DesignSpec) -> ConstraintSystem {
    let mut eqs = Vec::with_capacity(8);
    for limb in 1..=3 {
        let (g_odd, g_even) = limb_constraints(limb, spec);
        eqs.push((format!("g{}", 2 * limb - 1), g_odd));
        eqs.push((format!("g{}", 2 * limb), g_even));
    }
    eqs.push(("g7".to_string(), study_quadric()));
    eqs.push(("g8".to_string(), normalization()));
    ConstraintSystem::new(eqs, spec.clone())
}

/// Substitution `x0 = 1, x1 = x2 = x3 = y0 = 0` of the translational mode.
pub fn translational_substitution() -> Assignment<MPoly> {
    Assignment::new()
        .with(Var::X0, MPoly::one())
        .with(Var::X1, MPoly::zero())
        .with(Var::X2, MPoly::zero())
        .with(Var::X3, MPoly::zero())
        .with(Var::Y0, MPoly::zero())
}

/// Substitution `x3 = 1, x0 = x1 = x2 = y3 = 0` of the twisted translational
/// mode (platform turned half a revolution about z).
pub fn twisted_substitution() -> Assignment<MPoly> {
    Assignment::new()
        .with(Var::X3, MPoly::one())
        .with(Var::X0, MPoly::zero())
        .with(Var::X1, MPoly::zero())
        .with(Var::X2, MPoly::zero())
        .with(Var::Y3, MPoly::zero())
}

/// The translational system: `g2, g4, g6` restricted to the translational
/// mode, polynomials in `y1, y2, y3, t_i` (and the design variables when
/// symbolic).
pub fn translational_system(spec: &DesignSpec) -> ConstraintSystem {
    let sub = translational_substitution();
    let eqs = (1..=3)
        .map(|limb| {
            let (_, g_even) = limb_constraints(limb, spec);
            (format!("g{}", 2 * limb), g_even.subs(&sub))
        })
        .collect();
    ConstraintSystem::new(eqs, spec.clone())
}
