use std::fmt;
use std::path::Path;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use crate::algebra::{fmt_exact, fmt_ratio, parse_ratio, Assignment, ExtScalar, MPoly, Var};

use super::ModelError;

/// Geometric design: leg lengths `a1`, `a3` and circum-radii `r0` (base),
/// `r1` (platform), all exact and strictly positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Design {
    a1: BigRational,
    a3: BigRational,
    r0: BigRational,
    r1: BigRational,
}

impl Design {
    pub fn new(
        a1: BigRational,
        a3: BigRational,
        r0: BigRational,
        r1: BigRational,
    ) -> Result<Self, ModelError> {
        for (name, v) in [("a1", &a1), ("a3", &a3), ("r0", &r0), ("r1", &r1)] {
            if !v.is_positive() {
                return Err(ModelError::InvalidDesign(format!(
                    "{name} must be positive, got {}",
                    fmt_ratio(v)
                )));
            }
        }
        Ok(Design { a1, a3, r0, r1 })
    }

    pub fn from_ints(a1: i64, a3: i64, r0: i64, r1: i64) -> Result<Self, ModelError> {
        let r = |n: i64| BigRational::from_integer(n.into());
        Self::new(r(a1), r(a3), r(r0), r(r1))
    }

    /// Design `(a1, a3, r0, r1) = (3, 5, 11, 7)`, the main worked example.
    pub fn pars() -> Self {
        Self::from_ints(3, 5, 11, 7).expect("valid design")
    }

    /// Design `(5, 4, 11, 7)`, used for the mode-transition curve and the
    /// real self-motion.
    pub fn pars2() -> Self {
        Self::from_ints(5, 4, 11, 7).expect("valid design")
    }

    pub fn a1(&self) -> &BigRational {
        &self.a1
    }

    pub fn a3(&self) -> &BigRational {
        &self.a3
    }

    pub fn r0(&self) -> &BigRational {
        &self.r0
    }

    pub fn r1(&self) -> &BigRational {
        &self.r1
    }

    /// `r0 == r1` switches the self-motion input formula to `t = 0`.
    pub fn equal_radii(&self) -> bool {
        self.r0 == self.r1
    }

    /// `[a1, a3, r0, r1]` as floats.
    pub fn to_f64(&self) -> [f64; 4] {
        [&self.a1, &self.a3, &self.r0, &self.r1].map(|r| r.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact values for the design variables.
    pub fn assignment(&self) -> Assignment<ExtScalar> {
        Var::DESIGN
            .iter()
            .zip([&self.a1, &self.a3, &self.r0, &self.r1])
            .map(|(&v, r)| (v, ExtScalar::from_rational(r.clone())))
            .collect()
    }

    /// Substitutes this design into a polynomial.
    pub fn apply(&self, p: &MPoly) -> MPoly {
        p.subs_values(&self.assignment())
    }

    /// Parses the JSON design format: an object with keys `a1`, `a3`, `r0`,
    /// `r1` whose values are integers or `"p/q"` strings.
    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| ModelError::InvalidDesign(e.to_string()))?;
        let obj = v
            .as_object()
            .ok_or_else(|| ModelError::InvalidDesign("expected a JSON object".into()))?;
        if let Some(k) = obj
            .keys()
            .find(|k| !["a1", "a3", "r0", "r1"].contains(&k.as_str()))
        {
            return Err(ModelError::InvalidDesign(format!("unknown key '{k}'")));
        }
        let get = |key: &str| -> Result<BigRational, ModelError> {
            let val = obj
                .get(key)
                .ok_or_else(|| ModelError::InvalidDesign(format!("missing key '{key}'")))?;
            let parsed = match val {
                Value::String(s) => parse_ratio(s),
                Value::Number(n) if n.is_i64() || n.is_u64() => parse_ratio(&n.to_string()),
                _ => None,
            };
            parsed.ok_or_else(|| {
                ModelError::InvalidDesign(format!(
                    "'{key}' must be an integer or a \"p/q\" string, got {val}"
                ))
            })
        };
        Self::new(get("a1")?, get("a3")?, get("r0")?, get("r1")?)
    }

    pub fn load(path: &Path) -> Result<Self, ModelError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ModelError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// JSON with every value as a `"p/q"` string.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"a1\": \"{}\", \"a3\": \"{}\", \"r0\": \"{}\", \"r1\": \"{}\"}}",
            fmt_ratio(&self.a1),
            fmt_ratio(&self.a3),
            fmt_ratio(&self.r0),
            fmt_ratio(&self.r1)
        )
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a1={} a3={} r0={} r1={}",
            fmt_exact(&self.a1),
            fmt_exact(&self.a3),
            fmt_exact(&self.r0),
            fmt_exact(&self.r1)
        )
    }
}

/// Either a concrete design or fully symbolic `a1, a3, r0, r1`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum DesignSpec {
    Numeric(Design),
    Symbolic,
}

impl DesignSpec {
    pub fn apply(&self, p: &MPoly) -> MPoly {
        match self {
            DesignSpec::Numeric(d) => d.apply(p),
            DesignSpec::Symbolic => p.clone(),
        }
    }

    pub fn design(&self) -> Option<&Design> {
        match self {
            DesignSpec::Numeric(d) => Some(d),
            DesignSpec::Symbolic => None,
        }
    }
}

impl From<Design> for DesignSpec {
    fn from(d: Design) -> Self {
        DesignSpec::Numeric(d)
    }
}

impl From<&Design> for DesignSpec {
    fn from(d: &Design) -> Self {
        DesignSpec::Numeric(d.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let d = Design::from_json(r#"{"a1": 3, "a3": "5", "r0": "22/2", "r1": 7}"#).unwrap();
        assert_eq!(d, Design::pars());
        assert_eq!(Design::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn rejects_bad_designs() {
        for bad in [
            r#"{"a1": 3, "a3": 5, "r0": 0, "r1": 7}"#,
            r#"{"a1": 3, "a3": 5, "r0": 11}"#,
            r#"{"a1": 3.5, "a3": 5, "r0": 11, "r1": 7}"#,
            r#"{"a1": 3, "a3": 5, "r0": 11, "r1": 7, "r2": 1}"#,
            r#"{"a1": "-1/2", "a3": 5, "r0": 11, "r1": 7}"#,
            "[1, 2]",
        ] {
            assert!(Design::from_json(bad).is_err(), "{bad}");
        }
    }
}
