//! Infix polynomial parser.
//!
//! Grammar: sums and differences of products; `^` takes a non-negative
//! integer exponent; numbers are integers or `p/q` literals; `sqrt3` is the
//! field generator; identifiers must name registered variables.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::Var;
use super::poly::MPoly;
use super::scalar::{ExtScalar, Scalar};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(parse_err(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn parse_err(pos: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        pos,
        msg: msg.into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly, AlgebraError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<MPoly, AlgebraError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly, AlgebraError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| parse_err(at, "exponent too large"))?;
                    return Ok(Scalar::pow(&base, e));
                }
                _ => return Err(parse_err(at, "expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, AlgebraError> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut r = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Op('/')) {
                    self.pos += 1;
                    let at = self.here();
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            r /= BigRational::from_integer(d);
                        }
                        _ => return Err(parse_err(at, "expected nonzero integer denominator")),
                    }
                }
                Ok(MPoly::from_rational(r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "sqrt3" {
                    return Ok(MPoly::constant(ExtScalar::sqrt3()));
                }
                Var::from_name(&name)
                    .map(MPoly::var)
                    .ok_or_else(|| parse_err(at, format!("unknown variable '{name}'")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(parse_err(self.here(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(parse_err(at, format!("unexpected '{c}'"))),
            None => Err(parse_err(at, "unexpected end of input")),
        }
    }
}

/// Parses an infix polynomial such as `4*y1^2 - (1/2)*sqrt3*t2 + 3/4`.
pub fn parse_poly(src: &str) -> Result<MPoly, AlgebraError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(p.here(), "trailing input"));
    }
    Ok(out)
}

impl std::str::FromStr for MPoly {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_expressions() {
        let p = parse_poly("(y1 + 1)^2 - y1^2 - 2*y1").unwrap();
        assert_eq!(p, MPoly::one());
        let q = parse_poly("3/4*sqrt3*t2 - -t2").unwrap();
        assert_eq!(q.terms().len(), 1);
        assert_eq!(
            q.terms()[0].1,
            ExtScalar::new(
                BigRational::from_integer(1.into()),
                BigRational::new(3.into(), 4.into())
            )
        );
    }

    #[test]
    fn display_round_trips() {
        let p = parse_poly("-2*y1^3*t1 + (1/2 - 3*sqrt3)*y2 + sqrt3 - 7/3").unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_poly("y1 +"),
            Err(AlgebraError::Parse { .. })
        ));
        assert!(matches!(parse_poly("z9"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_poly("1/0"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(
            parse_poly("y1 y2"),
            Err(AlgebraError::Parse { .. })
        ));
    }
}
