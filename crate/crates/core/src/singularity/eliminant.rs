//! Elimination of the inputs from `s1 = 0` and the translational system.
//!
//! The eliminant `Res_t3(Res_t2(Res_t1(s1, g2), g4), g6)` is far too large
//! to expand symbolically stage by stage. Instead the chain is evaluated
//! exactly at rational poses, with the formal `t`-degrees of the generic
//! case, and the result is recovered by interpolation. A line probe fixes the
//! total degree and the multiplicity of the complex sphere pair, which is
//! divided out before interpolating and multiplied back afterwards.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{printed_output_factors, SingularityError};
use crate::algebra::{resultant_formal, Assignment, ExtScalar, LowerSetInterpolator, MPoly, Var};
use crate::model::{translational_system, Design, DesignSpec};

const Y: [Var; 3] = [Var::Y1, Var::Y2, Var::Y3];

/// `(|y|² − ρ)² + ((r0 − r1)² − a1²) · y3²` with the self-motion radius²
/// `ρ = (a3² + (r0 − r1)² − a1²)/4`: the product of the two spheres
/// centered at `(0, 0, ±√(a1² − (r0 − r1)²)/2)` with radius `a3/2`, complex
/// when `a1 < |r0 − r1|`.
pub fn sphere_pair(design: &Design) -> MPoly {
    let sq = |r: &BigRational| r * r;
    let dr = design.r0() - design.r1();
    let four = BigRational::from_integer(BigInt::from(4));
    let rho = (sq(design.a3()) + sq(&dr) - sq(design.a1())) / four;
    let kappa = sq(&dr) - sq(design.a1());
    let r2 = Y
        .iter()
        .map(|&v| MPoly::var(v).pow(2))
        .fold(MPoly::zero(), |a, b| &a + &b);
    let shifted = &r2 - &MPoly::from_rational(rho);
    &shifted.pow(2)
        + &MPoly::var(Var::Y3)
            .pow(2)
            .scale(&ExtScalar::from_rational(kappa))
}

/// The output eliminant of a design with the data of its construction.
#[derive(Clone, Debug, PartialEq)]
pub struct EliminantReport {
    /// Content-normalized eliminant in `y1, y2, y3`.
    pub eliminant: MPoly,
    /// Total degree of the eliminant.
    pub degree: u32,
    /// [`sphere_pair`] of the design.
    pub sphere_pair: MPoly,
    /// Multiplicity of the sphere pair in the eliminant.
    pub multiplicity: u32,
    /// Eliminant with the sphere pair divided out, content-normalized.
    pub cofactor: MPoly,
    /// Formal degrees of the three stage inputs in `t1`, `t2`, `t3`.
    pub formal_degrees: [usize; 3],
    /// Number of interpolation points.
    pub points: usize,
}

struct Chain {
    s: MPoly,
    g: Vec<MPoly>,
    degrees: [usize; 3],
}

fn pad(mut v: Vec<MPoly>, n: usize) -> Result<Vec<MPoly>, usize> {
    if v.len() > n {
        return Err(v.len() - 1);
    }
    v.resize(n, MPoly::zero());
    Ok(v)
}

impl Chain {
    fn new(design: &Design) -> Result<Self, SingularityError> {
        let spec = DesignSpec::from(design);
        let [s, _] = printed_output_factors(&spec);
        let g = translational_system(&spec).polys();
        let mut chain = Chain {
            s,
            g,
            degrees: [0; 3],
        };
        // generic degrees from a pseudo-random pose
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let y = std::array::from_fn(|_| {
            ExtScalar::from_ratio(rng.gen_range(-997..997), rng.gen_range(1..97))
        });
        let (_, found) = chain.run(&y, None)?;
        chain.degrees = found;
        Ok(chain)
    }

    /// Runs the chain; with `degrees` the stage inputs are padded to those
    /// formal degrees, otherwise their actual degrees are used and returned.
    fn run(
        &self,
        y: &[ExtScalar; 3],
        degrees: Option<[usize; 3]>,
    ) -> Result<(ExtScalar, [usize; 3]), SingularityError> {
        let a: Assignment<ExtScalar> = Y.iter().copied().zip(y.iter().cloned()).collect();
        let mut f = self.s.subs_values(&a);
        let mut found = [0; 3];
        for (k, &t) in Var::INPUTS.iter().enumerate() {
            let fc = f.coeffs_in(t);
            found[k] = fc.len() - 1;
            let n = degrees.map_or(fc.len(), |d| d[k] + 1);
            let fc = pad(fc, n).map_err(|_| SingularityError::EliminationStage(k + 1))?;
            let gc = pad(self.g[k].subs_values(&a).coeffs_in(t), 3)
                .map_err(|_| SingularityError::EliminationStage(k + 1))?;
            f = resultant_formal(&fc, &gc)?;
        }
        let v = f
            .as_constant()
            .ok_or(SingularityError::EliminationStage(3))?;
        Ok((v, found))
    }

    fn eval(&self, y: &[ExtScalar; 3]) -> Result<ExtScalar, SingularityError> {
        Ok(self.run(y, Some(self.degrees))?.0)
    }
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn ext_point(p: &[BigRational]) -> [ExtScalar; 3] {
    std::array::from_fn(|i| ExtScalar::from_rational(p[i].clone()))
}

/// Restriction of the chain to the line `base + λ·dir` as a polynomial in
/// `λ` (written in the variable `y1`).
fn line_restriction(
    chain: &Chain,
    base: &[BigRational; 3],
    dir: &[BigRational; 3],
) -> Result<MPoly, SingularityError> {
    let mut budget = 64;
    loop {
        let interp = LowerSetInterpolator::new(&[Var::Y1], budget);
        let values: Vec<ExtScalar> = interp
            .points()
            .par_iter()
            .map(|l| {
                let y: Vec<BigRational> = (0..3).map(|i| &base[i] + &l[0] * &dir[i]).collect();
                chain.eval(&ext_point(&y))
            })
            .collect::<Result<_, _>>()?;
        let u = interp.interpolate(&values);
        if (u.total_degree() as usize) < budget {
            return Ok(u);
        }
        budget *= 2;
    }
}

/// Computes the output eliminant of `s1` for a numeric design.
pub fn output_eliminant(design: &Design) -> Result<EliminantReport, SingularityError> {
    let chain = Chain::new(design)?;
    let q = sphere_pair(design);

    let mut rng = ChaCha8Rng::seed_from_u64(0x11e);
    let mut random_point = || -> [BigRational; 3] {
        std::array::from_fn(|_| rational(rng.gen_range(-40..40), rng.gen_range(1..13)))
    };
    let base = random_point();
    let dir = random_point();
    let on_line = line_restriction(&chain, &base, &dir)?;
    if on_line.is_zero() {
        return Err(SingularityError::EliminationStage(3));
    }
    let lambda = MPoly::var(Var::Y1);
    let line: Assignment<MPoly> = Y
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let c = |r: &BigRational| MPoly::from_rational(r.clone());
            (v, &c(&base[i]) + &(&lambda * &c(&dir[i])))
        })
        .collect();
    let q_line = q.subs(&line);
    let mut rest = on_line;
    let mut multiplicity = 0u32;
    while let Some(next) = rest.div_exact(&q_line)? {
        rest = next;
        multiplicity += 1;
    }
    let cofactor_degree = rest.total_degree() as usize;

    // integer nodes where possible (cheapest to evaluate), else shifted so
    // that no node is a real zero of the pair
    let candidates = [[0, 0, 0], [0, 0, 1], [1, 1, 1], [1, 0, 1]];
    let interp = candidates
        .iter()
        .map(|o| {
            let offsets = o.map(|k| rational(k, 2));
            LowerSetInterpolator::with_offsets(&Y, cofactor_degree, &offsets)
        })
        .find(|interp| {
            interp.points().iter().all(|p| {
                let a: Assignment<ExtScalar> = Y.iter().copied().zip(ext_point(p)).collect();
                !q.eval(&a).map(|v| v.is_zero()).unwrap_or(true)
            })
        })
        .ok_or(SingularityError::EliminationStage(3))?;
    let values: Vec<ExtScalar> = interp
        .points()
        .par_iter()
        .map(|p| {
            let y = ext_point(p);
            let v = chain.eval(&y)?;
            let qv = q.eval(&Y.iter().copied().zip(y.iter().cloned()).collect())?;
            let qm = crate::algebra::Scalar::pow(&qv, multiplicity);
            let inv = qm.inv().ok_or(SingularityError::Verification(0))?;
            Ok(v * inv)
        })
        .collect::<Result<_, SingularityError>>()?;
    let cofactor = interp.interpolate(&values);
    let eliminant = &q.pow(multiplicity) * &cofactor;

    let failures = (0..3)
        .map(|_| ext_point(&random_point()))
        .filter(|y| {
            let a: Assignment<ExtScalar> = Y.iter().copied().zip(y.iter().cloned()).collect();
            match (chain.eval(y), eliminant.eval(&a)) {
                (Ok(v), Ok(w)) => v != w,
                _ => true,
            }
        })
        .count();
    if failures > 0 {
        return Err(SingularityError::Verification(failures));
    }
    Ok(EliminantReport {
        degree: eliminant.total_degree(),
        eliminant: eliminant.normalized(),
        sphere_pair: q,
        multiplicity,
        cofactor: cofactor.normalized(),
        formal_degrees: chain.degrees,
        points: interp.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::printed;

    #[test]
    fn sphere_pair_matches_printed_product() {
        assert_eq!(
            sphere_pair(&Design::pars()),
            printed::poly(printed::SPHERES_PRODUCT)
        );
    }

    #[test]
    fn chain_degrees_are_generic() {
        let chain = Chain::new(&Design::pars()).unwrap();
        assert_eq!(chain.degrees, [2, 4, 8]);
        // the chain vanishes on the real circle of the sphere pair
        let y = [
            ExtScalar::from_int(2),
            ExtScalar::from_int(2),
            ExtScalar::zero(),
        ];
        assert!(chain.eval(&y).unwrap().is_zero());
        let y = [ExtScalar::zero(), ExtScalar::zero(), ExtScalar::from_int(2)];
        assert!(!chain.eval(&y).unwrap().is_zero());
    }
}
