//! Seeded construction of singular and regular configurations.

use num_complex::Complex;
use rand::Rng;

use super::{SingularityError, SingularityModel};
use crate::algebra::{MPoly, Var};
use crate::kinematics::{fk, ik, FkDegeneration, RootTag};

/// Scaled residual above which a factor counts as clearly nonzero when
/// drawing regular configurations.
pub const REGULARITY_MARGIN: f64 = 1e-3;

const ATTEMPTS: usize = 10_000;

/// A translational pose together with inputs.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Configuration {
    pub y: [f64; 3],
    pub t: [f64; 3],
}

/// `q |y|² + l·y + k` of a polynomial that is a sphere in `y` once `tv = t`.
fn sphere_at(p: &MPoly, tv: Var, t: f64) -> (f64, [f64; 3], f64) {
    let (mut q, mut l, mut k) = (0.0, [0.0; 3], 0.0);
    for (m, c) in p.terms() {
        let v = c.to_f64() * t.powi(m.exp(tv) as i32);
        let rest = m.with_exp(tv, 0);
        match (rest.exp(Var::Y1), rest.exp(Var::Y2), rest.exp(Var::Y3)) {
            (2, 0, 0) => q += v,
            (0, 2, 0) | (0, 0, 2) => {}
            (1, 0, 0) => l[0] += v,
            (0, 1, 0) => l[1] += v,
            (0, 0, 1) => l[2] += v,
            _ => k += v,
        }
    }
    (q, l, k)
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn unit(a: [f64; 3]) -> [f64; 3] {
    let n = dot(&a, &a).sqrt();
    a.map(|x| x / n)
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Completes a pose and one input by IK for the other limbs, choosing a
/// random real root for each.
fn complete<R: Rng>(
    model: &SingularityModel,
    y: [f64; 3],
    fixed: Option<(usize, f64)>,
    rng: &mut R,
) -> Option<[f64; 3]> {
    let sol = ik(&model.kinematics, y);
    let mut t = [0.0; 3];
    for (i, limb) in sol.limbs.iter().enumerate() {
        if let Some((l, v)) = fixed {
            if l == i {
                t[i] = v;
                continue;
            }
        }
        if limb.roots.is_empty() || limb.tag == RootTag::Identity {
            return None;
        }
        t[i] = limb.roots[rng.gen_range(0..limb.roots.len())];
    }
    Some(t)
}

/// A configuration where limb `limb` is input-singular: for a random
/// `t_limb` the limb equation and `p_limb` are two spheres in `y`; a random
/// point of their intersection circle is completed by IK.
pub fn input_singular_configuration<R: Rng>(
    model: &SingularityModel,
    limb: usize,
    rng: &mut R,
) -> Result<Configuration, SingularityError> {
    super::check_limb(limb)?;
    let tv = Var::input(limb);
    let g = &model.kinematics.limbs[limb - 1].equation;
    let p = &model.input_factors[limb - 1];
    for _ in 0..ATTEMPTS {
        let tl = rng.gen_range(-4.0..4.0);
        let (q1, l1, k1) = sphere_at(g, tv, tl);
        let (q2, l2, k2) = sphere_at(p, tv, tl);
        if q1.abs() < 1e-9 || q2.abs() < 1e-9 {
            continue;
        }
        let a1 = l1.map(|x| x / q1);
        let a2 = l2.map(|x| x / q2);
        let c1 = a1.map(|x| -x / 2.0);
        let rho1 = dot(&c1, &c1) - k1 / q1;
        let n = [a1[0] - a2[0], a1[1] - a2[1], a1[2] - a2[2]];
        let nn = dot(&n, &n).sqrt();
        if nn < 1e-12 {
            continue;
        }
        let d = k2 / q2 - k1 / q1;
        let nh = n.map(|x| x / nn);
        let h = (dot(&n, &c1) - d) / nn;
        let r2 = rho1 - h * h;
        if r2 <= 0.0 {
            continue;
        }
        let center = [c1[0] - h * nh[0], c1[1] - h * nh[1], c1[2] - h * nh[2]];
        let helper = if nh[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let u = unit(cross(&nh, &helper));
        let v = cross(&nh, &u);
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = r2.sqrt();
        let y = std::array::from_fn(|i| center[i] + r * (phi.cos() * u[i] + phi.sin() * v[i]));
        if let Some(t) = complete(model, y, Some((limb - 1, tl)), rng) {
            return Ok(Configuration { y, t });
        }
    }
    Err(SingularityError::Sampling(ATTEMPTS))
}

/// A configuration where the output factor `s_{which+1}` vanishes: a sign
/// change of the factor along a random line of reachable poses, with fixed
/// IK branches, refined by bisection.
pub fn output_singular_configuration<R: Rng>(
    model: &SingularityModel,
    which: usize,
    rng: &mut R,
) -> Result<Configuration, SingularityError> {
    let branch_inputs = |y: [f64; 3], branch: &[usize; 3]| -> Option<[f64; 3]> {
        let sol = ik(&model.kinematics, y);
        let mut t = [0.0; 3];
        for (i, l) in sol.limbs.iter().enumerate() {
            if l.tag != RootTag::Regular || l.roots.len() != 2 {
                return None;
            }
            t[i] = l.roots[branch[i]];
        }
        Some(t)
    };
    for _ in 0..ATTEMPTS {
        let y0: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        let branch: [usize; 3] = std::array::from_fn(|_| rng.gen_range(0..2));
        let dir = unit(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
        let at = |s: f64| std::array::from_fn(|i| y0[i] + s * dir[i]);
        let value = |s: f64| -> Option<f64> {
            let y = at(s);
            let t = branch_inputs(y, &branch)?;
            Some(model.output_signed(which, y, t))
        };
        let Some(mut prev) = value(0.0) else { continue };
        let step = 0.05;
        for k in 1..80 {
            let s = k as f64 * step;
            let Some(cur) = value(s) else { break };
            if prev.signum() != cur.signum() {
                let (mut lo, mut hi) = (s - step, s);
                let mut flo = prev;
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    let Some(fm) = value(mid) else { break };
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                let y = at(0.5 * (lo + hi));
                if let Some(t) = branch_inputs(y, &branch) {
                    return Ok(Configuration { y, t });
                }
                break;
            }
            prev = cur;
        }
    }
    Err(SingularityError::Sampling(ATTEMPTS))
}

/// `|p(y, t)| / Σ|c|·|m(y, t)|` at a complex pose and real inputs.
pub fn complex_residual(p: &MPoly, y: &[Complex<f64>; 3], t: [f64; 3]) -> f64 {
    let mut value = Complex::new(0.0, 0.0);
    let mut scale = 0.0;
    for (m, c) in p.terms() {
        let c = c.to_f64();
        let mut term = Complex::new(c, 0.0);
        for (v, e) in m.vars() {
            let x = match v {
                Var::Y1 => y[0],
                Var::Y2 => y[1],
                Var::Y3 => y[2],
                _ => Complex::new(
                    t[Var::INPUTS.iter().position(|&w| w == v).unwrap_or(0)],
                    0.0,
                ),
            };
            term *= x.powu(e as u32);
        }
        scale += term.norm();
        value += term;
    }
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

/// Inputs drawn uniformly from `[-3, 3]³`, kept only if FK is not
/// degenerate and both FK solutions, complex ones included, keep all of
/// `p1, p2, p3, s1, s2` above [`REGULARITY_MARGIN`].
pub fn random_regular_triple<R: Rng>(
    model: &SingularityModel,
    rng: &mut R,
) -> Result<[f64; 3], SingularityError> {
    for _ in 0..ATTEMPTS {
        let t: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        let sol = fk(&model.kinematics, t);
        let Some(line) = sol.line else { continue };
        if sol.degeneration != FkDegeneration::None || sol.double {
            continue;
        }
        let regular = line.complex_points().iter().all(|y| {
            model
                .input_factors
                .iter()
                .chain(model.output_factors.iter())
                .all(|p| complex_residual(p, y, t) > REGULARITY_MARGIN)
        });
        if regular {
            return Ok(t);
        }
    }
    Err(SingularityError::Sampling(ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Design;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constructed_configurations_are_singular() {
        let model = SingularityModel::new(&Design::pars()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for limb in 1..=3 {
            let c = input_singular_configuration(&model, limb, &mut rng).unwrap();
            let r = model.classify(c.y, c.t, 1e-8).unwrap();
            assert!(r.input[limb - 1], "{r:?}");
        }
        let c = output_singular_configuration(&model, 0, &mut rng).unwrap();
        let r = model.classify(c.y, c.t, 1e-8).unwrap();
        assert!(r.output_residuals[0] <= 1e-8, "{r:?}");
    }
}
