//! Exact arithmetic over ℚ(√3): scalars, sparse multivariate polynomials,
//! polynomial matrices and resultants.

mod dump;
mod interp;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod resultant;
mod scalar;

pub use dump::{read_poly, write_poly, DumpFile};
pub use interp::{node, LowerSetInterpolator};
pub use matrix::{combinations, Minor, PolyMatrix};
pub use monomial::{Monomial, Var, NVARS};
pub use parse::parse_poly;
pub use poly::{Assignment, MPoly};
pub use resultant::{
    resultant, resultant_formal, resultant_raw, sylvester_from_coeffs, sylvester_matrix,
};
pub use scalar::{fmt_exact, fmt_ratio, parse_ratio, ExtScalar, Real, Scalar};

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable {0} has no value")]
    MissingVariable(Var),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("both resultant arguments have degree 0 in {0}")]
    DegenerateResultant(Var),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dump line {line}: {msg}")]
    Dump { line: usize, msg: String },
}
