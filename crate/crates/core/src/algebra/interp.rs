//! Multivariate Newton interpolation on total-degree lower sets.
//!
//! A polynomial of total degree `≤ d` in `n` variables is determined by its
//! values on the grid points `(x_{i1}, …, x_{in})` with `i1 + … + in ≤ d`.
//! Divided differences are taken one dimension at a time and the Newton form
//! is expanded by nested Horner steps.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::monomial::Var;
use super::poly::MPoly;
use super::scalar::ExtScalar;

/// Node `k` of the sequence `0, 1, -1, 2, -2, …`.
pub fn node(k: usize) -> i64 {
    let h = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        h
    } else {
        -h
    }
}

/// Interpolation scheme for a fixed variable list and degree bound.
#[derive(Clone, Debug)]
pub struct LowerSetInterpolator {
    vars: Vec<Var>,
    degree: usize,
    offsets: Vec<BigRational>,
    points: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl LowerSetInterpolator {
    pub fn new(vars: &[Var], degree: usize) -> Self {
        Self::with_offsets(vars, degree, &vec![BigRational::zero(); vars.len()])
    }

    /// Nodes shifted per dimension: coordinate `d` of point `k` is
    /// `node(k) + offsets[d]`.
    pub fn with_offsets(vars: &[Var], degree: usize, offsets: &[BigRational]) -> Self {
        assert_eq!(vars.len(), offsets.len(), "one offset per variable");
        let mut points = Vec::new();
        fn rec(dims: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == dims {
                out.push(cur.clone());
                return;
            }
            for i in 0..=left {
                cur.push(i);
                rec(dims, left - i, cur, out);
                cur.pop();
            }
        }
        rec(vars.len(), degree, &mut Vec::new(), &mut points);
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        LowerSetInterpolator {
            vars: vars.to_vec(),
            degree,
            offsets: offsets.to_vec(),
            points,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Node index tuples, in the order expected by [`Self::interpolate`].
    pub fn indices(&self) -> &[Vec<usize>] {
        &self.points
    }

    fn coord(&self, d: usize, k: usize) -> BigRational {
        BigRational::from_integer(BigInt::from(node(k))) + &self.offsets[d]
    }

    /// Coordinates of every interpolation point.
    pub fn points(&self) -> Vec<Vec<BigRational>> {
        self.points
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .map(|(d, &k)| self.coord(d, k))
                    .collect()
            })
            .collect()
    }

    /// The unique polynomial of total degree `≤ degree` taking `values[i]` at
    /// point `i`.
    pub fn interpolate(&self, values: &[ExtScalar]) -> MPoly {
        assert_eq!(values.len(), self.points.len(), "one value per point");
        let mut c = values.to_vec();
        let x = |k: usize| BigRational::from_integer(BigInt::from(node(k)));
        for d in 0..self.vars.len() {
            for (start, p) in self.points.iter().enumerate() {
                if p[d] != 0 {
                    continue;
                }
                let len = self.degree - p.iter().sum::<usize>() + 1;
                let line: Vec<usize> = (0..len)
                    .map(|k| {
                        let mut q = p.clone();
                        q[d] = k;
                        if k == 0 {
                            start
                        } else {
                            self.index[&q]
                        }
                    })
                    .collect();
                for level in 1..len {
                    for i in (level..len).rev() {
                        let diff = &c[line[i]] - &c[line[i - 1]];
                        let h = x(i) - x(i - level);
                        c[line[i]] = diff.scale(&h.recip());
                    }
                }
            }
        }
        self.expand(0, &mut Vec::new(), &c)
    }

    fn expand(&self, dim: usize, prefix: &mut Vec<usize>, c: &[ExtScalar]) -> MPoly {
        if dim == self.vars.len() {
            return MPoly::constant(c[self.index[prefix]].clone());
        }
        let used: usize = prefix.iter().sum();
        let top = self.degree - used;
        let v = MPoly::var(self.vars[dim]);
        let mut acc = MPoly::zero();
        for k in (0..=top).rev() {
            prefix.push(k);
            let inner = self.expand(dim + 1, prefix, c);
            prefix.pop();
            let shift = &v - &MPoly::from_rational(self.coord(dim, k));
            acc = &(&acc * &shift) + &inner;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Assignment};

    #[test]
    fn node_sequence() {
        let n: Vec<i64> = (0..6).map(node).collect();
        assert_eq!(n, vec![0, 1, -1, 2, -2, 3]);
    }

    #[test]
    fn recovers_a_known_polynomial() {
        let vars = [Var::Y1, Var::Y2, Var::Y3];
        let p = parse_poly("3*y1^3*y2 - sqrt3*y2^2*y3^2 + 1/7*y1 - 5 + y3^4").unwrap();
        let offsets = [1, 0, 2].map(|k| BigRational::new(k.into(), 3.into()));
        let interp = LowerSetInterpolator::with_offsets(&vars, 4, &offsets);
        assert_eq!(interp.len(), 35);
        let values: Vec<ExtScalar> = interp
            .points()
            .iter()
            .map(|pt| {
                let a: Assignment<ExtScalar> = vars
                    .iter()
                    .zip(pt)
                    .map(|(&v, x)| (v, ExtScalar::from_rational(x.clone())))
                    .collect();
                p.eval(&a).unwrap()
            })
            .collect();
        assert_eq!(interp.interpolate(&values), p);
    }
}
