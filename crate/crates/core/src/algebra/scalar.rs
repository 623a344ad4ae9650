//! The coefficient field ℚ(√3) and the [`Scalar`] abstraction used for
//! evaluating polynomials into exact, floating-point, complex or polynomial
//! targets.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

/// An element `rat + irr·√3` of ℚ(√3) with arbitrary-precision rational parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    rat: BigRational,
    irr: BigRational,
}

impl ExtScalar {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        ExtScalar { rat, irr }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        ExtScalar {
            rat,
            irr: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `a + b√3` with integer parts.
    pub fn from_ints(a: i64, b: i64) -> Self {
        ExtScalar::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn sqrt3() -> Self {
        ExtScalar::from_ints(0, 1)
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Galois conjugate `rat − irr·√3`.
    pub fn conj(&self) -> Self {
        ExtScalar::new(self.rat.clone(), -self.irr.clone())
    }

    /// Field norm `rat² − 3·irr²`; zero iff the element is zero.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(3.into()) * &self.irr * &self.irr
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(ExtScalar::new(&self.rat / &n, -(&self.irr / &n)))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        ExtScalar::new(&self.rat * r, &self.irr * r)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.irr.is_zero() {
            return r;
        }
        r + self.irr.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    /// Sign of the real number represented, computed exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.irr);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a² against 3b²
        let a2 = &self.rat * &self.rat;
        let b2 = BigRational::from_integer(3.into()) * &self.irr * &self.irr;
        match a2.cmp(&b2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Least common multiple of the denominators and gcd of the numerators
    /// of both rational parts, as used for content normalization.
    pub(crate) fn num_den(&self) -> (BigInt, BigInt) {
        let g = self.rat.numer().gcd(self.irr.numer());
        let l = self.rat.denom().lcm(self.irr.denom());
        (g, l)
    }

    /// Dump representation: `p/q p/q`.
    pub fn to_dump(&self) -> String {
        format!("{} {}", fmt_ratio(&self.rat), fmt_ratio(&self.irr))
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Always `p/q`, including `q = 1`.
pub fn fmt_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `p/q`, or just `p` when the denominator is 1.
pub fn fmt_exact(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fmt_ratio(r)
    }
}

/// Parses `p/q` or a plain integer.
pub fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*sqrt3", self.irr),
            (false, false) => write!(f, "({} + {}*sqrt3)", self.rat, self.irr),
        }
    }
}

impl Zero for ExtScalar {
    fn zero() -> Self {
        ExtScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        ExtScalar::from_int(1)
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        ExtScalar::from_int(n)
    }
}

impl From<BigRational> for ExtScalar {
    fn from(r: BigRational) -> Self {
        ExtScalar::from_rational(r)
    }
}

impl<'a> Add<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn add(self, o: &ExtScalar) -> ExtScalar {
        ExtScalar::new(&self.rat + &o.rat, &self.irr + &o.irr)
    }
}

impl<'a> Sub<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn sub(self, o: &ExtScalar) -> ExtScalar {
        ExtScalar::new(&self.rat - &o.rat, &self.irr - &o.irr)
    }
}

impl<'a> Mul<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: &ExtScalar) -> ExtScalar {
        if self.irr.is_zero() && o.irr.is_zero() {
            return ExtScalar::from_rational(&self.rat * &o.rat);
        }
        let three = BigRational::from_integer(3.into());
        ExtScalar::new(
            &self.rat * &o.rat + three * &self.irr * &o.irr,
            &self.rat * &o.irr + &self.irr * &o.rat,
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $m(self, o: ExtScalar) -> ExtScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $m(self, o: &ExtScalar) -> ExtScalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Div for ExtScalar {
    type Output = ExtScalar;
    /// Panics on division by zero, like integer division.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: ExtScalar) -> ExtScalar {
        let inv = o.inv().expect("division by zero in Q(sqrt3)");
        &self * &inv
    }
}

impl AddAssign<&ExtScalar> for ExtScalar {
    fn add_assign(&mut self, o: &ExtScalar) {
        self.rat += &o.rat;
        if !o.irr.is_zero() {
            self.irr += &o.irr;
        }
    }
}

impl SubAssign<&ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, o: &ExtScalar) {
        self.rat -= &o.rat;
        if !o.irr.is_zero() {
            self.irr -= &o.irr;
        }
    }
}

impl MulAssign<&ExtScalar> for ExtScalar {
    fn mul_assign(&mut self, o: &ExtScalar) {
        *self = &*self * o;
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar::new(-self.rat, -self.irr)
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar::new(-self.rat.clone(), -self.irr.clone())
    }
}

/// A commutative ring that polynomials can be evaluated into.
///
/// Implemented for [`ExtScalar`] (exact), `f32`/`f64`, complex floats and
/// [`MPoly`](super::MPoly) itself (composition / substitution).
pub trait Scalar:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_ext(c: &ExtScalar) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_ext(&ExtScalar::from_int(n))
    }

    fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for ExtScalar {
    fn from_ext(c: &ExtScalar) -> Self {
        c.clone()
    }
}

impl Scalar for f64 {
    fn from_ext(c: &ExtScalar) -> Self {
        c.to_f64()
    }
}

impl Scalar for f32 {
    fn from_ext(c: &ExtScalar) -> Self {
        c.to_f64() as f32
    }
}

impl<T: Float + Scalar> Scalar for Complex<T> {
    fn from_ext(c: &ExtScalar) -> Self {
        Complex::new(T::from_ext(c), T::zero())
    }
}

/// Floating-point scalar usable by the numeric solvers.
pub trait Real: Float + Scalar + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T: Float + Scalar + fmt::Debug + fmt::Display + Send + Sync + 'static> Real for T {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_product_is_rational() {
        let a = ExtScalar::from_ints(1, 1);
        let p = &a * &a.conj();
        assert_eq!(p, ExtScalar::from_int(-2));
        assert!(p.is_rational());
    }

    #[test]
    fn inverse_and_zero() {
        assert!(ExtScalar::zero().inv().is_none());
        let a = ExtScalar::from_ints(2, -1);
        assert_eq!(&a * &a.inv().unwrap(), ExtScalar::one());
    }

    #[test]
    fn exact_sign() {
        assert_eq!(ExtScalar::from_ints(2, -1).signum(), 1); // 2 - 1.732
        assert_eq!(ExtScalar::from_ints(1, -1).signum(), -1);
        assert_eq!(ExtScalar::from_ints(-7, 4).signum(), -1); // -7 + 6.93
        assert_eq!(ExtScalar::zero().signum(), 0);
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!(
            parse_ratio("-3/6"),
            Some(BigRational::new((-1).into(), 2.into()))
        );
        assert_eq!(
            parse_ratio("11"),
            Some(BigRational::from_integer(11.into()))
        );
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(fmt_ratio(&BigRational::from_integer(5.into())), "5/1");
    }

    #[test]
    fn float_pow_matches() {
        assert_eq!(Scalar::pow(&3.0f64, 5), 243.0);
        assert_eq!(Scalar::pow(&ExtScalar::sqrt3(), 2), ExtScalar::from_int(3));
    }
}
