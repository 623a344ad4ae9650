use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::monomial::{Monomial, Var, NVARS};
use super::scalar::{ExtScalar, Scalar};
use super::AlgebraError;

/// Values for some of the registered variables.
#[derive(Clone, Debug)]
pub struct Assignment<S> {
    slots: [Option<S>; NVARS],
}

impl<S> Default for Assignment<S> {
    fn default() -> Self {
        Assignment {
            slots: std::array::from_fn(|_| None),
        }
    }
}

impl<S> Assignment<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: Var, value: S) -> &mut Self {
        self.slots[v.index()] = Some(value);
        self
    }

    pub fn with(mut self, v: Var, value: S) -> Self {
        self.set(v, value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&S> {
        self.slots[v.index()].as_ref()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.slots[v.index()].is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &S)> {
        Var::ALL
            .iter()
            .zip(self.slots.iter())
            .filter_map(|(&v, s)| s.as_ref().map(|s| (v, s)))
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Assignment<T> {
        Assignment {
            slots: std::array::from_fn(|i| self.slots[i].as_ref().map(&f)),
        }
    }
}

impl<S> FromIterator<(Var, S)> for Assignment<S> {
    fn from_iter<I: IntoIterator<Item = (Var, S)>>(iter: I) -> Self {
        let mut a = Assignment::new();
        for (v, s) in iter {
            a.set(v, s);
        }
        a
    }
}

/// Sparse multivariate polynomial over ℚ(√3).
///
/// Terms are kept sorted by decreasing [`Monomial`] order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, ExtScalar)>,
}

const PAR_MUL_THRESHOLD: usize = 1 << 16;

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExtScalar::one())
    }

    pub fn constant(c: ExtScalar) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(ExtScalar::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::constant(ExtScalar::from_rational(r))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), ExtScalar::one())
    }

    pub fn term(m: Monomial, c: ExtScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: vec![(m, c)],
        }
    }

    /// Collects terms, merging duplicate monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, ExtScalar)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, ExtScalar> = HashMap::new();
        for (m, c) in terms {
            accumulate(&mut acc, m, c);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, ExtScalar>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        MPoly { terms }
    }

    /// Builds from terms already in strictly decreasing order without zeros.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, ExtScalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, ExtScalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<ExtScalar> {
        match self.terms.as_slice() {
            [] => Some(ExtScalar::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, ExtScalar)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// Variables occurring in the polynomial, in registry order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.has_var(v))
            .collect()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> ExtScalar {
        self.coeff(&Monomial::one())
    }

    pub fn coeff(&self, m: &Monomial) -> ExtScalar {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => ExtScalar::zero(),
        }
    }

    pub fn scale(&self, c: &ExtScalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &ExtScalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        Scalar::pow(self, e)
    }

    fn merge(&self, o: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            o.terms[j..]
                .iter()
                .map(|(m, c)| (*m, if negate { -c } else { c.clone() })),
        );
        MPoly { terms: out }
    }

    fn mul_poly(&self, o: &MPoly) -> MPoly {
        if self.is_zero() || o.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let (small, big) = if self.len() <= o.len() {
            (self, o)
        } else {
            (o, self)
        };
        if small.len() * big.len() >= PAR_MUL_THRESHOLD && small.len() > 1 {
            let chunk = (small.len() / rayon::current_num_threads().max(1)).max(1);
            let partials: Vec<HashMap<Monomial, ExtScalar>> = small
                .terms
                .par_chunks(chunk)
                .map(|part| {
                    let mut acc = HashMap::with_capacity((part.len() * big.len()).min(1 << 16));
                    for (ma, ca) in part {
                        for (mb, cb) in &big.terms {
                            accumulate(&mut acc, ma.mul(mb), ca * cb);
                        }
                    }
                    acc
                })
                .collect();
            let mut iter = partials.into_iter();
            let mut acc = iter.next().unwrap_or_default();
            for part in iter {
                for (m, c) in part {
                    accumulate(&mut acc, m, c);
                }
            }
            return Self::from_map(acc);
        }
        let mut acc = HashMap::with_capacity((small.len() * big.len()).min(1 << 16));
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                accumulate(&mut acc, ma.mul(mb), ca * cb);
            }
        }
        Self::from_map(acc)
    }

    /// Formal partial derivative.
    pub fn diff(&self, v: Var) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                (m.with_exp(v, e - 1), c * &ExtScalar::from_int(e as i64))
            });
        // Lowering one exponent can reorder terms, so re-sort.
        MPoly::from_terms(terms)
    }

    /// Full evaluation into any [`Scalar`]; every variable of the polynomial
    /// must be assigned.
    pub fn eval<S: Scalar>(&self, point: &Assignment<S>) -> Result<S, AlgebraError> {
        let pows = self.power_table(point, true)?;
        let mut sum = S::zero();
        for (m, c) in &self.terms {
            let mut t = S::from_ext(c);
            for (v, e) in m.vars() {
                t = t * pows[v.index()][e as usize].clone();
            }
            sum = sum + t;
        }
        Ok(sum)
    }

    /// Float evaluation together with the magnitude scale
    /// `Σ |c|·|monomial(point)|`, used for relative zero tests.
    pub fn eval_scaled(&self, point: &Assignment<f64>) -> Result<(f64, f64), AlgebraError> {
        let abs_point = point.map(|x| x.abs());
        let pows = self.power_table(point, true)?;
        let abs_pows = self.power_table(&abs_point, true)?;
        let mut sum = 0.0;
        let mut scale = 0.0;
        for (m, c) in &self.terms {
            let cf = c.to_f64();
            let mut t = cf;
            let mut s = cf.abs();
            for (v, e) in m.vars() {
                t *= pows[v.index()][e as usize];
                s *= abs_pows[v.index()][e as usize];
            }
            sum += t;
            scale += s;
        }
        Ok((sum, scale))
    }

    /// Evaluation returning `|value| / scale` (0 when both vanish).
    pub fn relative_residual(&self, point: &Assignment<f64>) -> Result<f64, AlgebraError> {
        let (v, s) = self.eval_scaled(point)?;
        Ok(if s == 0.0 { v.abs() } else { v.abs() / s })
    }

    fn power_table<S: Scalar>(
        &self,
        point: &Assignment<S>,
        require_all: bool,
    ) -> Result<Vec<Vec<S>>, AlgebraError> {
        let mut maxe = [0u16; NVARS];
        for (m, _) in &self.terms {
            for (i, e) in m.exponents().iter().enumerate() {
                maxe[i] = maxe[i].max(*e);
            }
        }
        let mut table = Vec::with_capacity(NVARS);
        for v in Var::ALL {
            let e = maxe[v.index()];
            let mut row = Vec::new();
            if e > 0 {
                match point.get(v) {
                    Some(x) => {
                        row.push(S::one());
                        for k in 1..=e as usize {
                            let next = row[k - 1].clone() * x.clone();
                            row.push(next);
                        }
                    }
                    None if require_all => return Err(AlgebraError::MissingVariable(v)),
                    None => {}
                }
            }
            table.push(row);
        }
        Ok(table)
    }

    /// Substitutes polynomials for the assigned variables; the others stay.
    pub fn subs(&self, point: &Assignment<MPoly>) -> MPoly {
        let pows = self
            .power_table(point, false)
            .expect("partial substitution never fails");
        let constants: Assignment<ExtScalar> = point
            .iter()
            .filter_map(|(v, p)| p.as_constant().map(|c| (v, c)))
            .collect();
        let const_pows = self
            .power_table(&constants, false)
            .expect("partial substitution never fails");
        let mut acc: HashMap<Monomial, ExtScalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut coeff = c.clone();
            let mut poly: Option<MPoly> = None;
            for (v, e) in m.vars() {
                if !point.contains(v) {
                    continue;
                }
                rest = rest.with_exp(v, 0);
                if constants.contains(v) {
                    coeff = &coeff * &const_pows[v.index()][e as usize];
                } else {
                    let f = &pows[v.index()][e as usize];
                    poly = Some(match poly {
                        None => f.clone(),
                        Some(p) => &p * f,
                    });
                }
            }
            if coeff.is_zero() {
                continue;
            }
            match poly {
                None => accumulate(&mut acc, rest, coeff),
                Some(p) => {
                    for (pm, pc) in p.terms {
                        accumulate(&mut acc, pm.mul(&rest), &pc * &coeff);
                    }
                }
            }
        }
        MPoly::from_map(acc)
    }

    /// Substitutes exact constants for the assigned variables.
    pub fn subs_values(&self, point: &Assignment<ExtScalar>) -> MPoly {
        self.subs(&point.map(|c| MPoly::constant(c.clone())))
    }

    /// Renames variables (`from[i] -> to[i]` simultaneously).
    pub fn rename(&self, pairs: &[(Var, Var)]) -> MPoly {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = *m;
            for &(from, _) in pairs {
                out = out.with_exp(from, 0);
            }
            for &(from, to) in pairs {
                let e = m.exp(from);
                out = out.with_exp(to, out.exp(to) + e);
            }
            (out, c.clone())
        });
        MPoly::from_terms(terms)
    }

    /// Coefficients as a univariate polynomial in `v`; index `k` holds the
    /// coefficient of `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, ExtScalar)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            buckets[e].push((m.with_exp(v, 0), c.clone()));
        }
        buckets.into_iter().map(MPoly::from_terms).collect()
    }

    pub fn from_coeffs(coeffs: &[MPoly], v: Var) -> MPoly {
        let terms = coeffs.iter().enumerate().flat_map(|(k, p)| {
            let vk = Monomial::var(v, k as u16);
            p.terms.iter().map(move |(m, c)| (m.mul(&vk), c.clone()))
        });
        MPoly::from_terms(terms)
    }

    /// Exact quotient `self / den`, or `None` when `den` does not divide.
    pub fn div_exact(&self, den: &MPoly) -> Result<Option<MPoly>, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(MPoly::zero()));
        }
        if let Some(c) = den.as_constant() {
            let inv = c.inv().expect("nonzero constant");
            return Ok(Some(self.scale(&inv)));
        }
        let (lm, lc) = den.terms[0].clone();
        let lc_inv = lc.inv().expect("leading coefficient is nonzero");
        let mut rem: BTreeMap<Monomial, ExtScalar> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = lm.quotient_of(&m);
            let qc = &c * &lc_inv;
            for (dm, dc) in &den.terms[1..] {
                let key = dm.mul(&qm);
                let p = &qc * dc;
                let entry = rem.entry(key).or_default();
                *entry -= &p;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Some(MPoly::from_sorted_unchecked(quotient)))
    }

    /// Positive rational content: gcd of all numerators over lcm of all
    /// denominators (both the rational and the √3 parts).
    pub fn content(&self) -> BigRational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            let (cg, cl) = c.num_den();
            g = num_integer::Integer::gcd(&g, &cg);
            l = num_integer::Integer::lcm(&l, &cl);
        }
        if g.is_zero() {
            return BigRational::one();
        }
        BigRational::new(g.abs(), l)
    }

    /// Divides out the content and fixes the sign so that the leading
    /// coefficient has a positive rational part (positive √3 part when the
    /// rational part vanishes).
    pub fn normalized(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let c = self.content();
        let lead = &self.terms[0].1;
        let negative = if lead.rat().is_zero() {
            lead.irr().is_negative()
        } else {
            lead.rat().is_negative()
        };
        let mut factor = BigRational::one() / c;
        if negative {
            factor = -factor;
        }
        self.scale(&ExtScalar::from_rational(factor))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .iter()
            .map(|(_, c)| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

fn accumulate(acc: &mut HashMap<Monomial, ExtScalar>, m: Monomial, c: ExtScalar) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::one()
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        self.merge(o, false)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self.merge(o, true)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.mul_poly(o)
    }
}

macro_rules! forward_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                self.$m(&o)
            }
        }
    };
}
forward_poly!(Add, add);
forward_poly!(Sub, sub);
forward_poly!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

impl Scalar for MPoly {
    fn from_ext(c: &ExtScalar) -> Self {
        MPoly::constant(c.clone())
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::from_int(n)
    }
}

impl From<ExtScalar> for MPoly {
    fn from(c: ExtScalar) -> Self {
        MPoly::constant(c)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coeff_text(c);
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (body.as_str(), m.is_one()) {
                (b, true) => f.write_str(b)?,
                ("1", false) => write!(f, "{}", m)?,
                (b, false) => write!(f, "{}*{}", b, m)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self)
    }
}

/// Sign and magnitude text for a coefficient in the parser's syntax.
fn coeff_text(c: &ExtScalar) -> (bool, String) {
    let ratio = |r: &BigRational| -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    };
    if c.irr().is_zero() {
        return (c.rat().is_negative(), ratio(&c.rat().abs()));
    }
    if c.rat().is_zero() {
        let b = c.irr().abs();
        let text = if b.is_one() {
            "sqrt3".to_string()
        } else {
            format!("{}*sqrt3", ratio(&b))
        };
        return (c.irr().is_negative(), text);
    }
    let sign = if c.irr().is_negative() { "-" } else { "+" };
    let text = format!(
        "({}{} {} {}*sqrt3)",
        if c.rat().is_negative() { "-" } else { "" },
        ratio(&c.rat().abs()),
        sign,
        ratio(&c.irr().abs())
    );
    (false, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: usize) -> MPoly {
        MPoly::var(Var::STUDY[4 + i])
    }

    #[test]
    fn eval_zero_point() {
        let p = &y(1) * &y(1) + &y(2) * &y(2);
        let pt = Assignment::new()
            .with(Var::Y1, ExtScalar::zero())
            .with(Var::Y2, ExtScalar::zero());
        assert_eq!(p.eval(&pt).unwrap(), ExtScalar::zero());
    }

    #[test]
    fn eval_conjugate_product() {
        let p = y(1).scale(&ExtScalar::from_ints(1, 1));
        let pt = Assignment::new().with(Var::Y1, ExtScalar::from_ints(1, -1));
        assert_eq!(p.eval(&pt).unwrap(), ExtScalar::from_int(-2));
    }

    #[test]
    fn missing_variable_is_an_error() {
        let p = &y(1) + &y(2);
        let pt = Assignment::new().with(Var::Y1, 1.0);
        assert_eq!(p.eval(&pt), Err(AlgebraError::MissingVariable(Var::Y2)));
    }

    #[test]
    fn partial_substitution_returns_polynomial() {
        let p = &y(1) * &y(2) + y(3);
        let q = p.subs(&Assignment::new().with(Var::Y1, MPoly::from_int(2)));
        assert_eq!(q, y(2).scale(&ExtScalar::from_int(2)) + y(3));
    }

    #[test]
    fn derivative_examples() {
        let p = &y(1) * &y(1) + &y(2) * &y(2);
        assert_eq!(p.diff(Var::Y1), y(1).scale(&ExtScalar::from_int(2)));
        assert!(MPoly::from_int(7).diff(Var::T1).is_zero());
    }

    #[test]
    fn exact_division_examples() {
        let s3 = MPoly::constant(ExtScalar::sqrt3());
        let num = &y(1) * &y(1) - MPoly::from_int(3);
        let den = &y(1) - &s3;
        assert_eq!(num.div_exact(&den).unwrap(), Some(&y(1) + &s3));
        let num = &y(1) + &MPoly::one();
        assert_eq!(num.div_exact(&y(2)).unwrap(), None);
        assert_eq!(
            num.div_exact(&MPoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn normalization_fixes_content_and_sign() {
        let p = (&y(1) * &MPoly::from_int(-6) + MPoly::constant(ExtScalar::from_ints(0, 4)))
            .scale(&ExtScalar::from_ratio(1, 5));
        let n = p.normalized();
        assert_eq!(
            n,
            &y(1) * &MPoly::from_int(3) - MPoly::constant(ExtScalar::from_ints(0, 2))
        );
    }

    #[test]
    fn univariate_view_round_trip() {
        let t = MPoly::var(Var::T1);
        let p = &(&t * &t) * &y(1) + &t * &MPoly::from_int(3) + y(2);
        let cs = p.coeffs_in(Var::T1);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], y(1));
        assert_eq!(MPoly::from_coeffs(&cs, Var::T1), p);
    }

    #[test]
    fn display_uses_parser_syntax() {
        let p = &y(1) * &MPoly::from_int(-2) + MPoly::constant(ExtScalar::from_ints(1, -1));
        assert_eq!(p.to_string(), "-2*y1 + (1 - 1*sqrt3)");
    }
}
