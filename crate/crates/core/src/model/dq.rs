use std::ops::Mul;

use crate::algebra::{Assignment, ExtScalar, Scalar, Var};

/// Quaternion `w + x·i + y·j + z·k` stored as `[w, x, y, z]`.
pub type Quat<S> = [S; 4];

pub fn quat_mul<S: Scalar>(a: &Quat<S>, b: &Quat<S>) -> Quat<S> {
    let [a0, a1, a2, a3] = a.clone();
    let [b0, b1, b2, b3] = b.clone();
    [
        a0.clone() * b0.clone()
            - a1.clone() * b1.clone()
            - a2.clone() * b2.clone()
            - a3.clone() * b3.clone(),
        a0.clone() * b1.clone() + a1.clone() * b0.clone() + a2.clone() * b3.clone()
            - a3.clone() * b2.clone(),
        a0.clone() * b2.clone() - a1.clone() * b3.clone()
            + a2.clone() * b0.clone()
            + a3.clone() * b1.clone(),
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

pub fn quat_conj<S: Scalar>(q: &Quat<S>) -> Quat<S> {
    let [w, x, y, z] = q.clone();
    [w, -x, -y, -z]
}

fn quat_add<S: Scalar>(a: Quat<S>, b: Quat<S>) -> Quat<S> {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [a0 + b0, a1 + b1, a2 + b2, a3 + b3]
}

/// Dual quaternion in Study coordinates: `primal = (x0..x3)`,
/// `dual = (y0..y3)`.
///
/// A pure translation by `v` has primal `1` and dual `(0, −v/2)`; the
/// translation vector of a general element is `−2·vec(dual · conj(primal))`
/// for unit primal part. Composition is the ordinary dual-quaternion product,
/// `a * b` applying `b` in the frame reached by `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualQuaternion<S> {
    pub primal: Quat<S>,
    pub dual: Quat<S>,
}

impl<S: Scalar> DualQuaternion<S> {
    pub fn new(primal: Quat<S>, dual: Quat<S>) -> Self {
        DualQuaternion { primal, dual }
    }

    pub fn identity() -> Self {
        DualQuaternion {
            primal: [S::one(), S::zero(), S::zero(), S::zero()],
            dual: [S::zero(), S::zero(), S::zero(), S::zero()],
        }
    }

    pub fn rotation(q: Quat<S>) -> Self {
        DualQuaternion {
            primal: q,
            dual: [S::zero(), S::zero(), S::zero(), S::zero()],
        }
    }

    pub fn translation(v: [S; 3]) -> Self {
        let half = S::from_ext(&ExtScalar::from_ratio(-1, 2));
        let [a, b, c] = v;
        DualQuaternion {
            primal: [S::one(), S::zero(), S::zero(), S::zero()],
            dual: [S::zero(), half.clone() * a, half.clone() * b, half * c],
        }
    }

    /// Rotation about the z-axis by `k · 120°`.
    pub fn rot_z_third(k: usize) -> Self {
        let half = ExtScalar::from_ratio(1, 2);
        let s = ExtScalar::sqrt3().scale(&num_rational::BigRational::new(1.into(), 2.into()));
        let (c, z) = match k % 3 {
            0 => (ExtScalar::from_int(1), ExtScalar::from_int(0)),
            1 => (half, s),
            _ => (-half, s),
        };
        Self::rotation([S::from_ext(&c), S::zero(), S::zero(), S::from_ext(&z)])
    }

    /// Quaternion conjugate of both parts; the inverse displacement for unit
    /// primal part.
    pub fn conj(&self) -> Self {
        DualQuaternion {
            primal: quat_conj(&self.primal),
            dual: quat_conj(&self.dual),
        }
    }

    pub fn compose(&self, o: &Self) -> Self {
        DualQuaternion {
            primal: quat_mul(&self.primal, &o.primal),
            dual: quat_add(
                quat_mul(&self.primal, &o.dual),
                quat_mul(&self.dual, &o.primal),
            ),
        }
    }

    /// `x0·y0 + x1·y1 + x2·y2 + x3·y3`.
    pub fn study_residual(&self) -> S {
        let mut acc = S::zero();
        for i in 0..4 {
            acc = acc + self.primal[i].clone() * self.dual[i].clone();
        }
        acc
    }

    /// The eight Study coordinates.
    pub fn coords(&self) -> [S; 8] {
        std::array::from_fn(|i| {
            if i < 4 {
                self.primal[i].clone()
            } else {
                self.dual[i - 4].clone()
            }
        })
    }

    pub fn from_coords(c: [S; 8]) -> Self {
        let [x0, x1, x2, x3, y0, y1, y2, y3] = c;
        DualQuaternion {
            primal: [x0, x1, x2, x3],
            dual: [y0, y1, y2, y3],
        }
    }
}

impl<S: Scalar> Mul for &DualQuaternion<S> {
    type Output = DualQuaternion<S>;
    fn mul(self, o: &DualQuaternion<S>) -> DualQuaternion<S> {
        self.compose(o)
    }
}

/// A point of Study space given by its eight homogeneous coordinates
/// `[x0, x1, x2, x3, y0, y1, y2, y3]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pose<S> {
    pub coords: [S; 8],
}

impl<S: Scalar> Pose<S> {
    pub fn new(coords: [S; 8]) -> Self {
        Pose { coords }
    }

    /// The pose `[1, 0, 0, 0, 0, y1, y2, y3]` of the translational mode.
    pub fn translational(y: [S; 3]) -> Self {
        let [y1, y2, y3] = y;
        Pose {
            coords: [
                S::one(),
                S::zero(),
                S::zero(),
                S::zero(),
                S::zero(),
                y1,
                y2,
                y3,
            ],
        }
    }

    pub fn x(&self) -> &[S] {
        &self.coords[..4]
    }

    pub fn y(&self) -> &[S] {
        &self.coords[4..]
    }

    pub fn study_residual(&self) -> S {
        self.dual_quaternion().study_residual()
    }

    pub fn dual_quaternion(&self) -> DualQuaternion<S> {
        DualQuaternion::from_coords(self.coords.clone())
    }

    /// Values of `x0..y3` for polynomial evaluation.
    pub fn assignment(&self) -> Assignment<S> {
        Var::STUDY
            .iter()
            .zip(self.coords.iter())
            .map(|(&v, c)| (v, c.clone()))
            .collect()
    }
}

impl Pose<f64> {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0.0)
    }

    /// Scales so that the largest coordinate magnitude is 1 (first such
    /// coordinate positive); `None` for the zero vector.
    pub fn normalized(&self) -> Option<Pose<f64>> {
        let (idx, max) = self
            .coords
            .iter()
            .enumerate()
            .fold((0, 0.0f64), |(bi, bm), (i, c)| {
                if c.abs() > bm {
                    (i, c.abs())
                } else {
                    (bi, bm)
                }
            });
        if max == 0.0 || !max.is_finite() {
            return None;
        }
        let s = self.coords[idx].signum() * max;
        Some(Pose {
            coords: self.coords.map(|c| c / s),
        })
    }

    pub fn scaled(&self, lambda: f64) -> Pose<f64> {
        Pose {
            coords: self.coords.map(|c| c * lambda),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Dq = DualQuaternion<ExtScalar>;

    fn t(v: [i64; 3]) -> Dq {
        Dq::translation(v.map(ExtScalar::from_int))
    }

    #[test]
    fn identity_is_neutral() {
        let a = &Dq::rot_z_third(1) * &t([1, 2, 3]);
        assert_eq!(&a * &Dq::identity(), a);
        assert_eq!(&Dq::identity() * &a, a);
    }

    #[test]
    fn translations_add() {
        assert_eq!(&t([1, 2, 3]) * &t([4, -5, 6]), t([5, -3, 9]));
    }

    #[test]
    fn third_turn_cubes_to_minus_identity() {
        let r = Dq::rot_z_third(1);
        let r3 = &(&r * &r) * &r;
        let minus: Dq = Dq::new(
            [-ExtScalar::from_int(1), 0.into(), 0.into(), 0.into()],
            [0.into(), 0.into(), 0.into(), 0.into()],
        );
        assert_eq!(r3, minus);
        assert_eq!(&r * &r, Dq::rot_z_third(2));
    }

    #[test]
    fn rigid_products_satisfy_study_condition() {
        let a = &(&Dq::rot_z_third(2) * &t([3, 0, -1])) * &Dq::rot_z_third(1);
        let b = &t([0, 7, 2]) * &a;
        assert_eq!(b.study_residual(), ExtScalar::from_int(0));
    }

    #[test]
    fn pose_normalization() {
        let p = Pose::new([0.0, 0.0, 0.0, -2.0, -10.0, 2.0, 4.0, 0.0]);
        let n = p.normalized().unwrap();
        assert_eq!(n.coords[4], 1.0);
        assert_eq!(n.coords[3], 0.2);
        assert!(Pose::new([0.0; 8]).normalized().is_none());
    }
}
