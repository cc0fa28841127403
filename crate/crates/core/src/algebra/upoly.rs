//! Dense univariate polynomials over the rationals, used inside binary-form
//! gcd and factor extraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Coefficients in ascending degree order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().recip();
        UPoly(self.0.iter().map(|c| c * &inv).collect())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(i.into())).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        self.sub(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        UPoly::new(out)
    }

    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        let inv = divisor.lc().recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Primitive integer polynomial proportional to `self`.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        primitive_part(&ints)
    }

    /// Monic gcd via the subresultant polynomial remainder sequence.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (a, b) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let g = subresultant_gcd(a.primitive_integer(), b.primitive_integer());
        UPoly::new(g.into_iter().map(Rat::from_integer).collect()).monic()
    }

    /// Yun's square-free decomposition: `self = c * prod a_i^i` with each
    /// `a_i` monic, square-free and pairwise coprime. Only factors of
    /// positive degree are returned.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.div_rem(&a).0;
            let nc = d.div_rem(&a).0;
            d = nc.sub(&nb.derivative());
            b = nb;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Distinct rational roots (rational root theorem on the primitive
    /// integer form).
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let ints = self.primitive_integer();
        let mut roots = Vec::new();
        let mut low = 0;
        while ints[low].is_zero() {
            low += 1;
        }
        if low > 0 {
            roots.push(Rat::zero());
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        let p_cands = divisors(&a0);
        let q_cands = divisors(&an);
        let mut seen = std::collections::BTreeSet::new();
        for p in &p_cands {
            for q in &q_cands {
                for sign in [1, -1] {
                    let r = Rat::new(p * BigInt::from(sign), q.clone());
                    if seen.insert(r.clone()) && self.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return p.to_vec();
    }
    let sign = if p.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    p.iter().map(|x| x / &c * &sign).collect()
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}


fn subresultant_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem_exact(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![c];
        }
        a = b;
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        b = r.iter().map(|x| x / &divisor).collect();
        g = a.last().unwrap().clone();
        if delta == 0 {
            // h unchanged: h^(1-0) * g^0
        } else {
            let num = num_traits::pow(g.clone(), delta as usize);
            let den = num_traits::pow(h.clone(), (delta - 1) as usize);
            h = num / den;
        }
    }
    primitive_part(&b).into_iter().map(|x| x * &c).collect()
}

/// Pseudo-remainder with the full multiplier `lc(b)^(deg a - deg b + 1)`.
fn prem_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let steps = a.len() - db;
    let lc = b[db].clone();
    let mut r = a.to_vec();
    let mut done = 0;
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &lr * bj;
        }
        r.pop();
        r = trim(r);
        done += 1;
    }
    let missing = steps.saturating_sub(done);
    if missing > 0 {
        let f = num_traits::pow(lc, missing);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn up(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = up(&[-2, 1, 1]);
        let b = up(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        assert_eq!(up(&[1, 1]).gcd(&up(&[2, 1])), UPoly::one());
    }

    #[test]
    fn squarefree_and_roots() {
        // x^2 (x-1)^3 (x^2+1)
        let f = up(&[0, 0, 1]).mul(&up(&[-1, 1]).mul(&up(&[-1, 1])).mul(&up(&[-1, 1]))).mul(&up(&[1, 0, 1]));
        let dec = f.squarefree_decomposition();
        let total: usize = dec.iter().map(|(a, i)| a.degree().unwrap() * *i as usize).sum();
        assert_eq!(total, 7);
        assert!(dec.iter().any(|(a, i)| *i == 3 && *a == up(&[-1, 1])));
        assert_eq!(f.rational_roots(), vec![int(0), int(1)]);
        let g = up(&[-3, 2]); // 2x - 3
        assert_eq!(g.rational_roots(), vec![Rat::new(3.into(), 2.into())]);
    }
}
