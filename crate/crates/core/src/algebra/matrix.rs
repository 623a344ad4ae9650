use rayon::prelude::*;

use super::monomial::Var;
use super::poly::{Assignment, MPoly};
use super::AlgebraError;

/// Dense row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![MPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, MPoly::one());
        }
        m
    }

    /// Builds from rows; panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Jacobian `∂polys[i] / ∂vars[j]`.
    pub fn jacobian(polys: &[MPoly], vars: &[Var]) -> Self {
        let data = polys
            .iter()
            .flat_map(|p| vars.iter().map(move |&v| p.diff(v)))
            .collect();
        PolyMatrix {
            rows: polys.len(),
            cols: vars.len(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MPoly) {
        self.data[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[MPoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        PolyMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn map(&self, f: impl Fn(&MPoly) -> MPoly + Sync + Send) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(f).collect(),
        }
    }

    pub fn subs(&self, point: &Assignment<MPoly>) -> PolyMatrix {
        self.map(|p| p.subs(point))
    }

    /// Float evaluation of every entry, row-major.
    pub fn eval_f64(&self, point: &Assignment<f64>) -> Result<Vec<Vec<f64>>, AlgebraError> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.eval(point)).collect())
            .collect()
    }

    fn check_square(&self) -> Result<(), AlgebraError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each step pivots on the sparsest nonzero entry of the remaining block,
    /// which keeps the exact divisions small.
    pub fn det(&self) -> Result<MPoly, AlgebraError> {
        self.check_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(MPoly::one());
        }
        let mut a: Vec<Vec<MPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = MPoly::one();
        for k in 0..n {
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| (a[i][j].len(), a[i][j].total_degree(), i, j));
            let Some((pi, pj)) = pivot else {
                return Ok(MPoly::zero());
            };
            if pi != k {
                a.swap(pi, k);
                negate = !negate;
            }
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(pj, k);
                }
                negate = !negate;
            }
            if k + 1 == n {
                break;
            }
            let (top, rest) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let akk = &pivot_row[k];
            rest.par_iter_mut().for_each(|row| {
                let aik = row[k].clone();
                for j in k + 1..n {
                    let num = &(&row[j] * akk) - &(&aik * &pivot_row[j]);
                    row[j] = num
                        .div_exact(&prev)
                        .expect("Bareiss divisor is nonzero")
                        .expect("Bareiss division is exact");
                }
                row[k] = MPoly::zero();
            });
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant by Laplace expansion along the first row (small `n` only;
    /// serves as an independent check of [`PolyMatrix::det`]).
    pub fn det_cofactor(&self) -> Result<MPoly, AlgebraError> {
        self.check_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(MPoly::one());
        }
        if n == 1 {
            return Ok(self.get(0, 0).clone());
        }
        let mut acc = MPoly::zero();
        for j in 0..n {
            if self.get(0, j).is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = self.select(&rows, &cols).det_cofactor()?;
            let term = self.get(0, j) * &minor;
            acc = if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        Ok(acc)
    }

    /// All `k×k` minors, rows and columns in lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Minor>, AlgebraError> {
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let jobs: Vec<(Vec<usize>, Vec<usize>)> = row_sets
            .iter()
            .flat_map(|r| col_sets.iter().map(move |c| (r.clone(), c.clone())))
            .collect();
        jobs.into_par_iter()
            .map(|(r, c)| {
                let d = self.select(&r, &c).det()?;
                Ok((r, c, d))
            })
            .collect()
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
/// `(row indices, column indices, determinant)` of one minor.
pub type Minor = (Vec<usize>, Vec<usize>, MPoly);

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn identity_and_repeated_row() {
        assert_eq!(PolyMatrix::identity(3).det().unwrap(), MPoly::one());
        let m = PolyMatrix::from_rows(vec![
            vec![p("y1"), p("2"), p("t1")],
            vec![p("y1"), p("2"), p("t1")],
            vec![p("1"), p("y2"), p("3")],
        ]);
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = PolyMatrix::from_rows(vec![
            vec![p("y1 + 1"), p("t1"), p("0"), p("sqrt3")],
            vec![p("2"), p("y2^2"), p("y1*t1"), p("1")],
            vec![p("0"), p("3*y3"), p("t1 - 1"), p("y1")],
            vec![p("y2"), p("1"), p("1"), p("t1^2")],
        ]);
        assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn non_square_is_an_error() {
        let m = PolyMatrix::zeros(2, 3);
        assert!(matches!(
            m.det(),
            Err(AlgebraError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(8, 3).len(), 56);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
