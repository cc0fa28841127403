//! Homogeneous polynomials in two variables `(s, t)`.

use std::fmt;

use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::mono::{Degree, Mono};
use super::poly::{MPoly, RingRef};
use super::rat::{to_plain_string, Rat};
use super::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinForm {
    poly: MPoly,
}

/// A point `[s:t]` of the projective line.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinePoint {
    pub s: Rat,
    pub t: Rat,
}

impl fmt::Display for LinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", to_plain_string(&self.s), to_plain_string(&self.t))
    }
}

/// Coprime factorization of a binary form: rational points with their
/// multiplicities, plus square-free factors without rational roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinFactorization {
    pub points: Vec<(LinePoint, u32)>,
    pub other_factors: Vec<(BinForm, u32)>,
}

impl BinForm {
    pub fn new(poly: MPoly) -> Result<Self, AlgebraError> {
        if poly.nvars() != 2 || !poly.is_homogeneous() {
            return Err(AlgebraError::NotBinaryForm(poly.to_string()));
        }
        Ok(BinForm { poly })
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn ring(&self) -> &RingRef {
        self.poly.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Degree {
        self.poly.degree()
    }

    /// Order of vanishing at `[1:0]`, i.e. the power of `t` dividing the form.
    pub fn t_order(&self) -> u32 {
        self.poly.var_content(1)
    }

    /// Dehomogenize at `t = 1`: the coefficient of `u^k` is that of `s^k t^(n-k)`.
    fn affine_part(&self) -> UPoly {
        let n = self.degree().finite().unwrap_or(0) as usize;
        let mut c = vec![Rat::zero(); n + 1];
        for (m, a) in self.poly.terms() {
            c[m.exp(0) as usize] = a.clone();
        }
        UPoly::new(c)
    }

    fn from_parts(ring: &RingRef, t_power: u32, affine: &UPoly) -> BinForm {
        let da = affine.degree().unwrap_or(0) as u32;
        let terms = affine.coeffs().iter().enumerate().map(|(k, c)| {
            (Mono::from_exps(vec![k as u32, da - k as u32 + t_power]), c.clone())
        });
        BinForm { poly: MPoly::from_terms(ring, terms) }
    }

    /// Normalize so the coefficient of the highest power of `s` is 1.
    pub fn monic(&self) -> BinForm {
        let lead = self.poly.terms().max_by_key(|(m, _)| m.exp(0)).map(|(_, c)| c.clone());
        match lead {
            None => self.clone(),
            Some(c) => BinForm { poly: self.poly.scale(&c.recip()) },
        }
    }

    pub fn eval(&self, p: &LinePoint) -> Rat {
        self.poly.eval(&[p.s.clone(), p.t.clone()])
    }

    /// Order of vanishing at a point of the projective line.
    pub fn order_at(&self, p: &LinePoint) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        if p.t.is_zero() {
            return self.t_order();
        }
        let root = &p.s / &p.t;
        let mut f = self.affine_part();
        let lin = UPoly::new(vec![-root.clone(), Rat::one()]);
        let mut k = 0;
        while !f.is_zero() && f.eval(&root).is_zero() {
            f = f.div_rem(&lin).0;
            k += 1;
        }
        k
    }

    /// Coprime factorization with multiplicities.
    pub fn factor(&self) -> BinFactorization {
        let mut points = Vec::new();
        let mut other = Vec::new();
        let tk = self.t_order();
        if tk > 0 {
            points.push((LinePoint { s: Rat::one(), t: Rat::zero() }, tk));
        }
        let ring = self.ring().clone();
        for (sqf, mult) in self.affine_part().squarefree_decomposition() {
            let mut rest = sqf.clone();
            for r in sqf.rational_roots() {
                points.push((LinePoint { s: r.clone(), t: Rat::one() }, mult));
                rest = rest.div_rem(&UPoly::new(vec![-r, Rat::one()])).0;
            }
            if rest.degree().unwrap_or(0) > 0 {
                other.push((BinForm::from_parts(&ring, 0, &rest.monic()), mult));
            }
        }
        points.sort();
        BinFactorization { points, other_factors: other }
    }
}

impl fmt::Display for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Monic greatest common divisor of a list of nonzero binary forms.
///
/// Works on the two affine charts: the power of `t` is handled directly and
/// the remaining factor through a univariate subresultant gcd at `t = 1`.
pub fn gcd_binary(forms: &[BinForm]) -> Result<BinForm, AlgebraError> {
    let first = forms.first().ok_or(AlgebraError::EmptyInput)?;
    let ring = first.ring().clone();
    if forms.iter().any(|f| f.is_zero()) {
        return Err(AlgebraError::ZeroForm);
    }
    if forms.iter().any(|f| !super::poly::same_ring(f.ring(), &ring)) {
        return Err(AlgebraError::RingMismatch { left: ring.names().join(","), right: "mixed".into() });
    }
    let tk = forms.iter().map(|f| f.t_order()).min().unwrap();
    let mut g = first.affine_part();
    for f in &forms[1..] {
        g = g.gcd(&f.affine_part());
    }
    Ok(BinForm::from_parts(&ring, tk, &g.monic()).monic())
}
