//! Plain-text polynomial dump format.
//!
//! A single polynomial is written as a `vars` header followed by one term per
//! line in canonical (decreasing) order:
//!
//! ```text
//! vars y1 y3 t1
//! 4/1 0/1 : 2 0 0
//! -2/1 0/1 : 0 1 1
//! ```
//!
//! Each term line is `rat irr : e1 ... ek`, the coefficient being
//! `rat + irr·√3` and the exponents following the header order. Files holding
//! several polynomials prefix each one with `== name`; lines starting with `#`
//! carry `key: value` metadata. Writing a parsed canonical dump reproduces it
//! byte for byte.

use std::fmt::Write as _;

use super::monomial::{Monomial, Var, NVARS};
use super::poly::MPoly;
use super::scalar::{fmt_ratio, parse_ratio, ExtScalar};
use super::AlgebraError;

fn dump_err(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Dump {
        line,
        msg: msg.into(),
    }
}

/// Serializes one polynomial.
pub fn write_poly(p: &MPoly) -> String {
    let vars = p.vars();
    let mut out = String::from("vars");
    for v in &vars {
        out.push(' ');
        out.push_str(v.name());
    }
    out.push('\n');
    for (m, c) in p.terms() {
        let _ = write!(out, "{} {} :", fmt_ratio(c.rat()), fmt_ratio(c.irr()));
        for v in &vars {
            let _ = write!(out, " {}", m.exp(*v));
        }
        out.push('\n');
    }
    out
}

/// Parses one polynomial (the inverse of [`write_poly`]).
pub fn read_poly(text: &str) -> Result<MPoly, AlgebraError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    parse_body(&lines)
}

fn parse_body(lines: &[(usize, &str)]) -> Result<MPoly, AlgebraError> {
    let Some(&(hline, header)) = lines.first() else {
        return Err(dump_err(0, "missing vars header"));
    };
    let mut words = header.split_whitespace();
    if words.next() != Some("vars") {
        return Err(dump_err(hline, "expected 'vars' header"));
    }
    let mut vars = Vec::new();
    for w in words {
        let v =
            Var::from_name(w).ok_or_else(|| dump_err(hline, format!("unknown variable '{w}'")))?;
        if vars.contains(&v) {
            return Err(dump_err(hline, format!("duplicate variable '{w}'")));
        }
        vars.push(v);
    }
    let mut terms = Vec::with_capacity(lines.len() - 1);
    for &(ln, line) in &lines[1..] {
        let (coeff, exps) = line
            .split_once(':')
            .ok_or_else(|| dump_err(ln, "expected ':' separator"))?;
        let mut cw = coeff.split_whitespace();
        let (Some(a), Some(b), None) = (cw.next(), cw.next(), cw.next()) else {
            return Err(dump_err(ln, "coefficient must be 'rat irr'"));
        };
        let rat = parse_ratio(a).ok_or_else(|| dump_err(ln, format!("bad rational '{a}'")))?;
        let irr = parse_ratio(b).ok_or_else(|| dump_err(ln, format!("bad rational '{b}'")))?;
        let es: Vec<&str> = exps.split_whitespace().collect();
        if es.len() != vars.len() {
            return Err(dump_err(
                ln,
                format!("expected {} exponents, found {}", vars.len(), es.len()),
            ));
        }
        let mut mono = [0u16; NVARS];
        for (v, e) in vars.iter().zip(es) {
            mono[v.index()] = e
                .parse()
                .map_err(|_| dump_err(ln, format!("bad exponent '{e}'")))?;
        }
        terms.push((Monomial::from_exponents(mono), ExtScalar::new(rat, irr)));
    }
    Ok(MPoly::from_terms(terms))
}

/// A multi-section dump: metadata plus named polynomials in file order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DumpFile {
    pub meta: Vec<(String, String)>,
    pub sections: Vec<(String, MPoly)>,
}

impl DumpFile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<String>) -> Self {
        self.meta.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, name: &str, p: MPoly) {
        self.sections.push((name.to_string(), p));
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&MPoly> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }

    pub fn write(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k}: {v}");
        }
        for (name, p) in &self.sections {
            let _ = writeln!(out, "== {name}");
            out.push_str(&write_poly(p));
        }
        out
    }

    pub fn parse(text: &str) -> Result<DumpFile, AlgebraError> {
        type Section<'a> = Option<(String, Vec<(usize, &'a str)>)>;
        fn flush(cur: Section<'_>, file: &mut DumpFile) -> Result<(), AlgebraError> {
            if let Some((name, body)) = cur {
                let p = parse_body(&body)?;
                file.sections.push((name, p));
            }
            Ok(())
        }
        let mut file = DumpFile::new();
        let mut current: Section<'_> = None;
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if current.is_some() {
                    return Err(dump_err(ln, "metadata must precede sections"));
                }
                let (k, v) = rest
                    .split_once(':')
                    .ok_or_else(|| dump_err(ln, "metadata must be '# key: value'"))?;
                file.meta.push((k.trim().to_string(), v.trim().to_string()));
            } else if let Some(name) = line.strip_prefix("== ") {
                flush(current.take(), &mut file)?;
                current = Some((name.trim().to_string(), Vec::new()));
            } else {
                match current.as_mut() {
                    Some((_, body)) => body.push((ln, line)),
                    None => return Err(dump_err(ln, "term outside of a section")),
                }
            }
        }
        flush(current, &mut file)?;
        Ok(file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn single_round_trip_is_bit_exact() {
        let p = parse_poly("4*y1^2 - 3/2*sqrt3*y3*t1 + (1 + sqrt3) - a1^3").unwrap();
        let text = write_poly(&p);
        assert!(text.starts_with("vars y1 y3 t1 a1\n"));
        let back = read_poly(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(write_poly(&back), text);
    }

    #[test]
    fn zero_polynomial() {
        let text = write_poly(&MPoly::zero());
        assert_eq!(text, "vars\n");
        assert!(read_poly(&text).unwrap().is_zero());
    }

    #[test]
    fn sections_round_trip() {
        let mut f = DumpFile::new().with_meta("tool", "ruukin 0.1.0");
        f.push("g12", parse_poly("y1*y2 - 1").unwrap());
        f.push("g34", parse_poly("x0^2").unwrap());
        let text = f.write();
        let back = DumpFile::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.write(), text);
        assert_eq!(back.meta("tool"), Some("ruukin 0.1.0"));
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(read_poly("vars y1\n1/1 0/1 : 1 2\n").is_err());
        assert!(read_poly("vars y9\n").is_err());
        assert!(read_poly("vars y1\n1/0 0/1 : 1\n").is_err());
        assert!(read_poly("").is_err());
    }
}
