//! Exact arithmetic substrate: rationals, sparse polynomials, monomial
//! orders, binary forms and truncated power series.

pub mod binform;
pub mod error;
pub mod linalg;
pub mod mono;
pub mod order;
pub mod poly;
pub mod rat;
pub mod series;
pub mod parse;
pub mod upoly;

pub use binform::{gcd_binary, BinFactorization, BinForm, LinePoint};
pub use error::AlgebraError;
pub use mono::{Degree, Mono};
pub use order::{MonomialOrder, OrderKind};
pub use poly::{ArithKind, MPoly, Ring, RingRef};
pub use rat::{int, rat, Rat};
pub use series::{SeriesOp, TruncSeries};
pub use upoly::UPoly;

/// Ring-checked `add`, `sub` or `mul`.
pub fn poly_arith(a: &MPoly, b: &MPoly, kind: ArithKind) -> Result<MPoly, AlgebraError> {
    a.arith(b, kind)
}

/// Truncated series `add` or `mul`.
pub fn series_arith(a: &TruncSeries, b: &TruncSeries, op: SeriesOp) -> Result<TruncSeries, AlgebraError> {
    a.arith(b, op)
}
