use num_traits::Zero;

use super::error::AlgebraError;
use super::poly::{same_ring, MPoly};
use super::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

/// Multivariate power series truncated above total degree `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    cap: u32,
    body: MPoly,
}

impl TruncSeries {
    pub fn new(body: &MPoly, cap: u32) -> Self {
        TruncSeries { cap, body: body.truncate(cap) }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn body(&self) -> &MPoly {
        &self.body
    }

    pub fn into_body(self) -> MPoly {
        self.body
    }

    pub fn arith(&self, other: &TruncSeries, op: SeriesOp) -> Result<TruncSeries, AlgebraError> {
        if self.cap != other.cap {
            return Err(AlgebraError::CapMismatch { left: self.cap, right: other.cap });
        }
        if !same_ring(self.body.ring(), other.body.ring()) {
            return Err(AlgebraError::RingMismatch {
                left: self.body.ring().names().join(","),
                right: other.body.ring().names().join(","),
            });
        }
        Ok(match op {
            SeriesOp::Add => TruncSeries { cap: self.cap, body: &self.body + &other.body },
            SeriesOp::Mul => TruncSeries { cap: self.cap, body: truncated_product(&self.body, &other.body, self.cap) },
        })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncSeries, AlgebraError> {
        let c0 = self.body.constant_term();
        if c0.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let ring = self.body.ring().clone();
        let inv0 = c0.recip();
        // 1/(c0 (1 - u)) = inv0 * sum u^k with u = 1 - body/c0.
        let u = &MPoly::one(&ring) - &self.body.scale(&inv0);
        let mut acc = MPoly::one(&ring);
        let mut power = MPoly::one(&ring);
        for _ in 0..self.cap {
            power = truncated_product(&power, &u, self.cap);
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(TruncSeries { cap: self.cap, body: acc.scale(&inv0) })
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        TruncSeries { cap: self.cap, body: self.body.scale(c) }
    }
}

/// Product of two polynomials with every term above `cap` discarded.
pub fn truncated_product(a: &MPoly, b: &MPoly, cap: u32) -> MPoly {
    let mut out = MPoly::zero(a.ring());
    for (ma, ca) in a.terms() {
        let da = ma.degree();
        if da > cap {
            continue;
        }
        for (mb, cb) in b.terms() {
            if da + mb.degree() <= cap {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Ring;

    #[test]
    fn truncated_products() {
        let r = Ring::new(&["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let one = MPoly::one(&r);
        let a = TruncSeries::new(&(&one + &x), 2);
        let b = TruncSeries::new(&(&one - &x), 2);
        assert_eq!(a.arith(&b, SeriesOp::Mul).unwrap().body(), &(&one - &x.pow(2)));
        let s = TruncSeries::new(&(&x + &y), 1);
        assert!(s.arith(&s, SeriesOp::Mul).unwrap().body().is_zero());
        // (1 + x + x^2)(1 - x) = 1 - x^3, truncated at 2 gives 1.
        let c = TruncSeries::new(&(&(&one + &x) + &x.pow(2)), 2);
        assert_eq!(c.arith(&b, SeriesOp::Mul).unwrap().body(), &one);
        assert!(matches!(
            a.arith(&TruncSeries::new(&x, 3), SeriesOp::Add),
            Err(AlgebraError::CapMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_of_unit() {
        let r = Ring::new(&["x"]);
        let x = MPoly::var(&r, 0);
        let one = MPoly::one(&r);
        let s = TruncSeries::new(&(&one - &x), 5);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.body(), &(0..=5).fold(MPoly::zero(&r), |acc, k| &acc + &x.pow(k)));
        assert_eq!(s.arith(&inv, SeriesOp::Mul).unwrap().body(), &one);
        assert!(TruncSeries::new(&x, 3).inverse().is_err());
    }
}
