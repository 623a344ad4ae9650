use super::matrix::PolyMatrix;
use super::monomial::Var;
use super::poly::MPoly;
use super::AlgebraError;

/// Sylvester matrix of `f` and `g` with respect to `v` (rows of `f` first).
pub fn sylvester_matrix(f: &MPoly, g: &MPoly, v: Var) -> PolyMatrix {
    sylvester_from_coeffs(&f.coeffs_in(v), &g.coeffs_in(v))
}

/// Sylvester matrix of two coefficient lists (constant term first). The
/// degrees are the formal ones, `len - 1`, even when leading entries vanish.
pub fn sylvester_from_coeffs(fc: &[MPoly], gc: &[MPoly]) -> PolyMatrix {
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size);
    for i in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            s.set(n + i, i + k, c.clone());
        }
    }
    s
}

/// Resultant without content normalization, `lc(f)^deg(g) · ∏ g(α)` over the
/// roots `α` of `f`.
pub fn resultant_raw(f: &MPoly, g: &MPoly, v: Var) -> Result<MPoly, AlgebraError> {
    let m = f.degree_in(v);
    let n = g.degree_in(v);
    match (m, n) {
        (0, 0) => Err(AlgebraError::DegenerateResultant(v)),
        (0, _) => Ok(f.pow(n as u32)),
        (_, 0) => Ok(g.pow(m as u32)),
        (2, 2) => Ok(res_quadratics(f, g, v)),
        _ => sylvester_matrix(f, g, v).det(),
    }
}

/// Content-normalized resultant (see [`MPoly::normalized`]).
pub fn resultant(f: &MPoly, g: &MPoly, v: Var) -> Result<MPoly, AlgebraError> {
    Ok(resultant_raw(f, g, v)?.normalized())
}

/// Resultant of coefficient lists with formal degrees `fc.len() - 1` and
/// `gc.len() - 1`: the specialization of the generic resultant, also when
/// leading coefficients vanish.
///
/// When `g` is a quadratic with nonzero leading coefficient, `f` is reduced
/// at the roots of `g` instead of expanding a Sylvester determinant.
pub fn resultant_formal(fc: &[MPoly], gc: &[MPoly]) -> Result<MPoly, AlgebraError> {
    let m = fc.len().saturating_sub(1);
    if fc.is_empty() || gc.is_empty() {
        return Ok(MPoly::zero());
    }
    if gc.len() == 3 && !gc[2].is_zero() && m >= 1 {
        return Ok(reduce_at_quadratic(fc, gc));
    }
    sylvester_from_coeffs(fc, gc).det()
}

/// `Res(f, a v² + b v + c)` via `a^(m-1) f(α) = U α + W` at the roots `α`,
/// giving `(c U² − b U W + a W²) / a^(m-1)`.
fn reduce_at_quadratic(fc: &[MPoly], gc: &[MPoly]) -> MPoly {
    let m = fc.len() - 1;
    let (c, b, a) = (&gc[0], &gc[1], &gc[2]);
    let mut u = fc[m].clone();
    let mut w = fc[m - 1].clone();
    let mut a_pow = a.clone();
    for k in (0..m - 1).rev() {
        let nu = &(a * &w) - &(b * &u);
        let nw = &(&a_pow * &fc[k]) - &(c * &u);
        u = nu;
        w = nw;
        a_pow = &a_pow * a;
    }
    let num = &(&(c * &(&u * &u)) - &(b * &(&u * &w))) + &(a * &(&w * &w));
    if m == 1 {
        return num;
    }
    num.div_exact(&a.pow(m as u32 - 1))
        .expect("leading coefficient is nonzero")
        .expect("the reduction formula divides exactly")
}

/// Resultant of two quadratics through the reduction of `g` modulo `f`:
/// with `f = a v² + b v + c`, `g(α) = (u α + w) / a` at the roots of `f`
/// where `u = a g1 − g2 b` and `w = a g0 − g2 c`, hence
/// `Res = (a w² − b u w + c u²) / a`.
fn res_quadratics(f: &MPoly, g: &MPoly, v: Var) -> MPoly {
    let fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    let (c, b, a) = (&fc[0], &fc[1], &fc[2]);
    let u = &(a * &gc[1]) - &(&gc[2] * b);
    let w = &(a * &gc[0]) - &(&gc[2] * c);
    let num = &(&(a * &(&w * &w)) - &(b * &(&u * &w))) + &(c * &(&u * &u));
    num.div_exact(a)
        .expect("leading coefficient is nonzero")
        .expect("the reduction formula divides exactly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn simple_values() {
        assert_eq!(
            resultant(&p("t1^2 + 1"), &p("t1 - 1"), Var::T1).unwrap(),
            MPoly::from_int(1)
        );
        assert_eq!(
            resultant_raw(&p("t1^2 + 1"), &p("t1 - 1"), Var::T1).unwrap(),
            MPoly::from_int(2)
        );
        assert_eq!(
            resultant_raw(&p("t1^2 + 1"), &p("3"), Var::T1).unwrap(),
            MPoly::from_int(9)
        );
        assert!(matches!(
            resultant(&p("y1"), &p("2"), Var::T1),
            Err(AlgebraError::DegenerateResultant(Var::T1))
        ));
    }

    #[test]
    fn quadratic_shortcut_matches_sylvester() {
        let f = p("(y1 + 1)*t1^2 - y2*t1 + 3 - sqrt3*y3");
        let g = p("2*t1^2 + y1*y2*t1 - y3^2 + 1");
        let fast = resultant_raw(&f, &g, Var::T1).unwrap();
        let slow = sylvester_matrix(&f, &g, Var::T1).det().unwrap();
        assert_eq!(fast, slow);
        assert_eq!(
            fast,
            sylvester_matrix(&f, &g, Var::T1).det_cofactor().unwrap()
        );
    }

    #[test]
    fn formal_resultant_matches_sylvester() {
        let f = p("(y1 + 2)*t1^3 - y2*t1^2 + t2*t1 + 3 - sqrt3*y3");
        let g = p("(1 - y3)*t1^2 + y1*y2*t1 - y3^2 + t2");
        let (fc, gc) = (f.coeffs_in(Var::T1), g.coeffs_in(Var::T1));
        let fast = resultant_formal(&fc, &gc).unwrap();
        assert_eq!(
            fast,
            sylvester_matrix(&f, &g, Var::T1).det_cofactor().unwrap()
        );
        // vanishing formal leading coefficients
        let mut fz = fc.clone();
        fz.push(MPoly::zero());
        let slow = sylvester_from_coeffs(&fz, &gc).det_cofactor().unwrap();
        assert_eq!(resultant_formal(&fz, &gc).unwrap(), slow);
        let gz = vec![gc[0].clone(), gc[1].clone(), MPoly::zero()];
        let slow = sylvester_from_coeffs(&fc, &gz).det_cofactor().unwrap();
        assert_eq!(resultant_formal(&fc, &gz).unwrap(), slow);
    }

    #[test]
    fn common_root_gives_zero() {
        let f = p("(t1 - y1)*(t1 + 2)");
        let g = p("(t1 - y1)*(t1^2 + y2)");
        assert!(resultant(&f, &g, Var::T1).unwrap().is_zero());
    }
}
