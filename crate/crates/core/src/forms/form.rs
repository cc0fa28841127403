use std::collections::BTreeMap;
use std::fmt;

use super::error::FormError;
use super::field::PolyVectorField;
use crate::algebra::{poly::same_ring, MPoly, Rat, RingRef};

/// A polynomial differential form: strictly increasing index tuples mapped to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyForm {
    ring: RingRef,
    grade: usize,
    comps: BTreeMap<Vec<usize>, MPoly>,
}

/// Sort `idx` in place and return the permutation sign, or `None` on a repeat.
fn normalize(idx: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

impl PolyForm {
    pub fn zero(ring: &RingRef, grade: usize) -> Self {
        PolyForm { ring: ring.clone(), grade, comps: BTreeMap::new() }
    }

    /// Grade-0 form.
    pub fn function(p: MPoly) -> Self {
        let ring = p.ring().clone();
        Self::from_components(&ring, 0, [(vec![], p)])
    }

    /// `dx_i`.
    pub fn dx(ring: &RingRef, i: usize) -> Self {
        Self::from_components(ring, 1, [(vec![i], MPoly::one(ring))])
    }

    /// `Σ coeffs[i] dx_i`.
    pub fn one_form(ring: &RingRef, coeffs: Vec<MPoly>) -> Self {
        assert_eq!(coeffs.len(), ring.nvars(), "one coefficient per variable");
        Self::from_components(ring, 1, coeffs.into_iter().enumerate().map(|(i, c)| (vec![i], c)))
    }

    /// `dx_0 ∧ … ∧ dx_{n-1}`.
    pub fn volume(ring: &RingRef) -> Self {
        Self::from_components(ring, ring.nvars(), [((0..ring.nvars()).collect(), MPoly::one(ring))])
    }

    /// Index tuples may be unsorted; they are normalized with the permutation
    /// sign and repeated indices vanish.
    pub fn from_components<I: IntoIterator<Item = (Vec<usize>, MPoly)>>(ring: &RingRef, grade: usize, comps: I) -> Self {
        let mut out = PolyForm::zero(ring, grade);
        for (mut idx, c) in comps {
            assert_eq!(idx.len(), grade, "index tuple length must equal the grade");
            assert!(idx.iter().all(|&i| i < ring.nvars()), "index out of range");
            if let Some(neg) = normalize(&mut idx) {
                out.add_component(idx, if neg { -c } else { c });
            }
        }
        out
    }

    fn add_component(&mut self, idx: Vec<usize>, c: MPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.comps.remove(&idx) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.comps.insert(idx, sum);
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, idx: &[usize]) -> MPoly {
        self.comps.get(idx).cloned().unwrap_or_else(|| MPoly::zero(&self.ring))
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &MPoly)> {
        self.comps.iter()
    }

    /// Coefficients of every basis element of this grade, in lexicographic
    /// index order (zeros included).
    pub fn dense_coefficients(&self) -> Vec<MPoly> {
        combinations(self.ring.nvars(), self.grade).into_iter().map(|idx| self.component(&idx)).collect()
    }

    /// Coefficients of a 1-form, one per variable.
    pub fn coefficients(&self) -> Vec<MPoly> {
        assert_eq!(self.grade, 1, "coefficients() expects a 1-form");
        (0..self.ring.nvars()).map(|i| self.component(&[i])).collect()
    }

    fn check_ring(&self, other: &PolyForm) -> Result<(), FormError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(FormError::RingMismatch)
        }
    }

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm, FormError> {
        self.check_ring(other)?;
        if self.grade != other.grade {
            return Err(FormError::WrongGrade { expected: self.grade, got: other.grade });
        }
        let mut out = self.clone();
        for (k, c) in &other.comps {
            out.add_component(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyForm) -> Result<PolyForm, FormError> {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rat) -> PolyForm {
        self.map_coefficients(|p| p.scale(c))
    }

    /// Multiply by a function.
    pub fn mul_function(&self, f: &MPoly) -> PolyForm {
        self.map_coefficients(|p| p * f)
    }

    pub fn map_coefficients<F: Fn(&MPoly) -> MPoly>(&self, f: F) -> PolyForm {
        Self::from_components(&self.ring, self.grade, self.comps.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    pub fn wedge(&self, other: &PolyForm) -> Result<PolyForm, FormError> {
        self.check_ring(other)?;
        let n = self.ring.nvars();
        let grade = self.grade + other.grade;
        if grade > n {
            return Err(FormError::GradeOverflow { grade, n });
        }
        let mut out = PolyForm::zero(&self.ring, grade);
        for (a, ca) in &self.comps {
            for (b, cb) in &other.comps {
                let mut idx: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                if let Some(neg) = normalize(&mut idx) {
                    let prod = ca * cb;
                    out.add_component(idx, if neg { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    pub fn ext_d(&self) -> Result<PolyForm, FormError> {
        let n = self.ring.nvars();
        if self.grade >= n {
            return Err(FormError::GradeOverflow { grade: self.grade + 1, n });
        }
        let mut out = PolyForm::zero(&self.ring, self.grade + 1);
        for (idx, c) in &self.comps {
            for v in 0..n {
                let dc = c.partial(v);
                if dc.is_zero() {
                    continue;
                }
                let mut k: Vec<usize> = std::iter::once(v).chain(idx.iter().copied()).collect();
                if let Some(neg) = normalize(&mut k) {
                    out.add_component(k, if neg { -dc } else { dc });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `i_X self`.
    pub fn contract(&self, x: &PolyVectorField) -> Result<PolyForm, FormError> {
        if !same_ring(&self.ring, x.ring()) {
            return Err(FormError::RingMismatch);
        }
        if self.grade == 0 {
            return Err(FormError::GradeZero);
        }
        let mut out = PolyForm::zero(&self.ring, self.grade - 1);
        for (idx, c) in &self.comps {
            for (pos, &v) in idx.iter().enumerate() {
                let xv = &x.components()[v];
                if xv.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let term = c * xv;
                out.add_component(rest, if pos % 2 == 1 { -term } else { term });
            }
        }
        Ok(out)
    }

    /// The single coefficient of a grade-0 form.
    pub fn as_function(&self) -> MPoly {
        assert_eq!(self.grade, 0, "as_function() expects a 0-form");
        self.component(&[])
    }

    /// Pullback along `x_i ↦ images[i]` (all images in a common target ring).
    pub fn pullback(&self, images: &[MPoly]) -> Result<PolyForm, FormError> {
        if images.len() != self.ring.nvars() {
            return Err(FormError::WrongVariableCount { expected: self.ring.nvars(), got: images.len() });
        }
        let target = images.first().map(|p| p.ring().clone()).unwrap_or_else(|| self.ring.clone());
        let differentials: Vec<PolyForm> = images.iter().map(|f| PolyForm::function(f.clone()).ext_d()).collect::<Result<_, _>>()?;
        let mut out = PolyForm::zero(&target, self.grade);
        for (idx, c) in &self.comps {
            let mut term = PolyForm::function(c.substitute(images)?);
            for &v in idx {
                term = term.wedge(&differentials[v])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Substitute into the coefficients only (no chain rule).
    pub fn substitute_coefficients(&self, images: &[MPoly], target: &RingRef) -> Result<PolyForm, FormError> {
        let mut out = PolyForm::zero(target, self.grade);
        for (idx, c) in &self.comps {
            out.add_component(idx.clone(), c.substitute(images)?);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rat]) -> BTreeMap<Vec<usize>, Rat> {
        self.comps
            .iter()
            .map(|(k, c)| (k.clone(), c.eval(point)))
            .filter(|(_, v)| !num_traits::Zero::is_zero(v))
            .collect()
    }

    /// Keep only coefficient terms of total degree `<= cap`.
    pub fn truncate(&self, cap: u32) -> PolyForm {
        self.map_coefficients(|p| p.truncate(cap))
    }

    /// Homogeneous part of degree `deg` in every coefficient.
    pub fn homogeneous_part(&self, deg: u32) -> PolyForm {
        self.map_coefficients(|p| p.homogeneous_part(deg))
    }

    /// Move the rational point `a` to the origin in every coefficient.
    pub fn translate(&self, a: &[Rat]) -> PolyForm {
        self.map_coefficients(|p| p.translate(a))
    }
}

/// All strictly increasing tuples of length `k` from `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for PolyForm {
    /// Coefficients in parentheses when they have more than one term,
    /// differentials joined by `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.comps.iter().enumerate() {
            let basis: Vec<String> = idx.iter().map(|&i| format!("d{}", self.ring.name(i))).collect();
            let basis = basis.join("^");
            let coef = c.to_string();
            let (neg, body) = match coef.strip_prefix('-') {
                Some(rest) if c.num_terms() == 1 => (true, rest.to_string()),
                _ => (false, coef),
            };
            if n > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if idx.is_empty() {
                write!(f, "{body}")?;
            } else if c.num_terms() > 1 {
                write!(f, "({body})*{basis}")?;
            } else if body == "1" {
                write!(f, "{basis}")?;
            } else {
                write!(f, "{body}*{basis}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyForm[{}]({self})", self.grade)
    }
}
