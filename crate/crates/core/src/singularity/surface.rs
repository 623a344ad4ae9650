//! Sampling of polynomial surfaces on rectangular grids.

use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{AlgebraError, Assignment, MPoly, Var};

/// `count` equally spaced values from `min` to `max`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn value(&self, i: usize) -> f64 {
        if self.count <= 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
        }
    }
}

impl FromStr for GridAxis {
    type Err = String;

    /// Parses `min:max:count`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, count] = parts[..] else {
            return Err(format!("expected min:max:count, got '{s}'"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("'{x}': {e}"));
        let axis = GridAxis {
            min: num(min)?,
            max: num(max)?,
            count: count
                .trim()
                .parse()
                .map_err(|e| format!("'{count}': {e}"))?,
        };
        if axis.count == 0 || !axis.min.is_finite() || !axis.max.is_finite() {
            return Err(format!("degenerate grid axis '{s}'"));
        }
        Ok(axis)
    }
}

/// Rectangular grid over three variables.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub vars: [Var; 3],
    pub axes: [GridAxis; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct SurfaceSample {
    pub coords: [f64; 3],
    pub value: f64,
    /// `|value| / Σ|c·m|`.
    pub residual: f64,
    /// The value vanishes here or changes sign towards a following grid
    /// neighbor along some axis.
    pub crossing: bool,
}

/// Evaluates `p` on the grid in row-major order (last axis fastest).
pub fn sample_surface(p: &MPoly, grid: &Grid) -> Result<Vec<SurfaceSample>, AlgebraError> {
    let [n0, n1, n2] = grid.axes.map(|a| a.count);
    let total = n0 * n1 * n2;
    let coords = |idx: usize| -> [usize; 3] { [idx / (n1 * n2), (idx / n2) % n1, idx % n2] };
    let evals: Vec<(f64, f64, [f64; 3])> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let ijk = coords(idx);
            let c: [f64; 3] = std::array::from_fn(|d| grid.axes[d].value(ijk[d]));
            let a: Assignment<f64> = grid.vars.iter().copied().zip(c).collect();
            let (v, s) = p.eval_scaled(&a)?;
            Ok((v, if s == 0.0 { 0.0 } else { v.abs() / s }, c))
        })
        .collect::<Result<_, AlgebraError>>()?;
    let strides = [n1 * n2, n2, 1];
    Ok((0..total)
        .map(|idx| {
            let ijk = coords(idx);
            let (v, residual, c) = evals[idx];
            let crossing = v == 0.0
                || (0..3).any(|d| {
                    ijk[d] + 1 < grid.axes[d].count && {
                        let w = evals[idx + strides[d]].0;
                        w == 0.0 || (w > 0.0) != (v > 0.0)
                    }
                });
            SurfaceSample {
                coords: c,
                value: v,
                residual,
                crossing,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn sphere_crossings() {
        let p = parse_poly("y1^2 + y2^2 + y3^2 - 1").unwrap();
        let axis: GridAxis = "-2:2:5".parse().unwrap();
        let grid = Grid {
            vars: [Var::Y1, Var::Y2, Var::Y3],
            axes: [axis; 3],
        };
        let s = sample_surface(&p, &grid).unwrap();
        assert_eq!(s.len(), 125);
        assert_eq!(s[0].coords, [-2.0, -2.0, -2.0]);
        assert_eq!(s[1].coords, [-2.0, -2.0, -1.0]);
        let center = &s[62];
        assert_eq!(center.coords, [0.0; 3]);
        assert!(center.crossing);
        assert!(!s[0].crossing);
        assert!("1:2".parse::<GridAxis>().is_err());
    }
}
