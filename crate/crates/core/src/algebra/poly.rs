//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::error::AlgebraError;
use super::mono::{Degree, Mono};
use super::order::MonomialOrder;
use super::rat::{to_plain_string, Rat};

/// Variable names of a polynomial ring over the rationals.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Arc<Ring> {
        Arc::new(Ring { names: names.iter().map(|s| s.as_ref().to_string()).collect() })
    }

    /// `prefix0, prefix1, ..., prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Arc<Ring> {
        Arc::new(Ring { names: (0..n).map(|i| format!("{prefix}{i}")).collect() })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A ring with `extra` variables placed in front of the existing ones.
    pub fn with_front_vars<S: AsRef<str>>(&self, extra: &[S]) -> Arc<Ring> {
        let mut names: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(self.names.iter().cloned());
        Arc::new(Ring { names })
    }
}

pub type RingRef = Arc<Ring>;

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

#[derive(Clone)]
pub struct MPoly {
    ring: RingRef,
    terms: BTreeMap<Mono, Rat>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl MPoly {
    pub fn zero(ring: &RingRef) -> Self {
        MPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &RingRef, c: Rat) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Mono::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Mono::var(ring.nvars(), i, 1), Rat::one())
    }

    pub fn monomial(ring: &RingRef, m: Mono, c: Rat) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(ring: &RingRef, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Mono::one(self.nvars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> Degree {
        self.terms.keys().map(|m| m.degree()).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Lowest total degree among the terms (the order of vanishing at 0).
    pub fn low_degree(&self) -> Degree {
        self.terms.keys().map(|m| m.degree()).min().map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> MPoly {
        self.filter_terms(|m| m.degree() == deg)
    }

    /// Drop every term of total degree above `cap`.
    pub fn truncate(&self, cap: u32) -> MPoly {
        self.filter_terms(|m| m.degree() <= cap)
    }

    pub fn filter_terms<F: Fn(&Mono) -> bool>(&self, keep: F) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring-checked arithmetic.
    pub fn arith(&self, other: &MPoly, kind: ArithKind) -> Result<MPoly, AlgebraError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(AlgebraError::RingMismatch {
                left: self.ring.names().join(","),
                right: other.ring.names().join(","),
            });
        }
        Ok(match kind {
            ArithKind::Add => self.add_unchecked(other, false),
            ArithKind::Sub => self.add_unchecked(other, true),
            ArithKind::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c } else { c.clone() });
        }
        out
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn partial(&self, var: usize) -> MPoly {
        assert!(var < self.nvars(), "variable index out of range");
        let mut out = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.exps_mut()[var] = e - 1;
            out.add_term(m2, c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Apply the ring morphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly, AlgebraError> {
        if images.len() != self.nvars() {
            return Err(AlgebraError::ArityMismatch { expected: self.nvars(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(AlgebraError::RingMismatch {
                left: target.names().join(","),
                right: "mixed image rings".into(),
            });
        }
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(&target), p.clone()]).collect();
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars(), "point dimension must match the ring");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// `p(x + a)`: moves the point `a` to the origin.
    pub fn translate(&self, a: &[Rat]) -> MPoly {
        let images: Vec<MPoly> = (0..self.nvars())
            .map(|i| &MPoly::var(&self.ring, i) + &MPoly::constant(&self.ring, a[i].clone()))
            .collect();
        self.substitute(&images).expect("images share the ring")
    }

    /// Re-express in `target`, sending variable `i` to variable `map[i]`.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> MPoly {
        assert_eq!(map.len(), self.nvars());
        let n = target.nvars();
        MPoly {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; n];
                    for (i, &x) in m.exps().iter().enumerate() {
                        e[map[i]] += x;
                    }
                    (Mono::from_exps(e), c.clone())
                })
                .collect(),
        }
    }

    /// Terms sorted descending by `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Mono, Rat)> {
        let mut v: Vec<(Mono, Rat)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Mono, &Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Divide by the leading coefficient under `order`.
    pub fn make_monic(&self, order: &MonomialOrder) -> MPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Largest `k` with `x_var^k` dividing every term.
    pub fn var_content(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).min().unwrap_or(0)
    }

    /// Exact division by the monomial `m` (every term must be divisible).
    pub fn div_mono(&self, m: &Mono) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    assert!(m.divides(k), "monomial division is not exact");
                    (m.quotient_of(k), c.clone())
                })
                .collect(),
        }
    }

    /// Homogenize to total degree `deg` using variable `var` (which must not
    /// occur in the polynomial).
    pub fn homogenize_with(&self, var: usize, deg: u32) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = m.clone();
                    let d = m.degree();
                    assert!(d <= deg, "homogenizing degree too small");
                    m2.exps_mut()[var] += deg - d;
                    (m2, c.clone())
                })
                .collect(),
        }
    }

}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.arith(rhs, ArithKind::Add).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.arith(rhs, ArithKind::Sub).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.arith(rhs, ArithKind::Mul).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Canonical rendering: terms in graded reverse lexicographic order,
/// explicit `*` and `^`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = MonomialOrder::grevlex(self.nvars());
        for (k, (m, c)) in self.sorted_terms(&order).iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let factors = render_mono(&self.ring, m);
            if factors.is_empty() {
                write!(f, "{}", to_plain_string(&a))?;
            } else if a.is_one() {
                write!(f, "{factors}")?;
            } else {
                write!(f, "{}*{factors}", to_plain_string(&a))?;
            }
        }
        Ok(())
    }
}

pub fn render_mono(ring: &Ring, m: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.name(i).to_string()),
            _ => parts.push(format!("{}^{e}", ring.name(i))),
        }
    }
    parts.join("*")
}
