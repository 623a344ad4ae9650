use std::cmp::Ordering;
use std::fmt;

/// Number of registered variables.
pub const NVARS: usize = 15;

/// The fixed variable registry shared by every polynomial in the crate.
///
/// The declaration order is the variable order used by the term order
/// (`X0` is the largest variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X0,
    X1,
    X2,
    X3,
    Y0,
    Y1,
    Y2,
    Y3,
    T1,
    T2,
    T3,
    A1,
    A3,
    R0,
    R1,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X0,
        Var::X1,
        Var::X2,
        Var::X3,
        Var::Y0,
        Var::Y1,
        Var::Y2,
        Var::Y3,
        Var::T1,
        Var::T2,
        Var::T3,
        Var::A1,
        Var::A3,
        Var::R0,
        Var::R1,
    ];

    /// Study coordinates in order `x0..x3, y0..y3`.
    pub const STUDY: [Var; 8] = [
        Var::X0,
        Var::X1,
        Var::X2,
        Var::X3,
        Var::Y0,
        Var::Y1,
        Var::Y2,
        Var::Y3,
    ];

    pub const INPUTS: [Var; 3] = [Var::T1, Var::T2, Var::T3];

    pub const DESIGN: [Var; 4] = [Var::A1, Var::A3, Var::R0, Var::R1];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        const NAMES: [&str; NVARS] = [
            "x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3", "t1", "t2", "t3", "a1", "a3", "r0",
            "r1",
        ];
        NAMES[self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    /// Input parameter of limb `1..=3`.
    pub fn input(limb: usize) -> Var {
        Var::INPUTS[limb - 1]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense exponent vector over the registry.
///
/// Ordered by graded reverse lexicographic order (total degree first, then
/// the smaller exponent in the last differing variable wins).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub(crate) [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn from_exponents(exps: [u16; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        Monomial(m)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self.divides(o)`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut m = o.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        Monomial(m)
    }

    pub fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL
            .iter()
            .zip(self.0.iter())
            .filter(|(_, &e)| e > 0)
            .map(|(&v, &e)| (v, e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        let d = self.total_degree().cmp(&o.total_degree());
        if d != Ordering::Equal {
            return d;
        }
        for i in (0..NVARS).rev() {
            if self.0[i] != o.0[i] {
                return o.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_examples() {
        let x0 = Monomial::var(Var::X0, 1);
        let x1 = Monomial::var(Var::X1, 1);
        let r1 = Monomial::var(Var::R1, 1);
        assert!(x0 > x1);
        assert!(x1 > r1);
        // same degree: x0*r1 vs x1^2 -> x1^2 has smaller exponent in r1
        let a = x0.mul(&r1);
        let b = x1.mul(&x1);
        assert!(b > a);
        assert!(Monomial::var(Var::R1, 2) > x0);
    }

    #[test]
    fn names_round_trip() {
        for v in Var::ALL {
            assert_eq!(Var::from_name(v.name()), Some(v));
        }
        assert_eq!(Var::from_name("t4"), None);
    }
}
