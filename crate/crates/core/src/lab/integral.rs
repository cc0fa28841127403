use std::collections::BTreeMap;

use num_traits::Zero;

use super::error::LabError;
use crate::algebra::{linalg, MPoly, Mono, Rat, TruncSeries};
use crate::forms::PolyForm;
use crate::ideal::cancel::checkpoint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncFirstIntegral {
    pub h: TruncSeries,
    pub cap: u32,
    /// `dH ∧ η` with coefficients truncated to degree `cap - 1`.
    pub residual: PolyForm,
    /// Whether `η ∧ dη` vanishes identically (not only up to the cap).
    pub integrable: bool,
}

impl TruncFirstIntegral {
    /// `dH(0)` is nonzero.
    pub fn regular_at_origin(&self) -> bool {
        !self.h.body().homogeneous_part(1).is_zero()
    }
}

/// All monomials of total degree `deg` in `n` variables, ascending.
pub(crate) fn monomials_of_degree(n: usize, deg: u32) -> Vec<Mono> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(Mono::from_exps(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, deg, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Flatten the coefficients of a form into `(index, monomial) -> coefficient`.
pub(crate) fn flatten(form: &PolyForm) -> BTreeMap<(Vec<usize>, Mono), Rat> {
    let mut out = BTreeMap::new();
    for (idx, c) in form.components() {
        for (m, v) in c.terms() {
            out.insert((idx.clone(), m.clone()), v.clone());
        }
    }
    out
}

/// Solve `Σ u_k columns[k] = target` over the union of supports.
pub(crate) fn solve_columns(
    columns: &[BTreeMap<(Vec<usize>, Mono), Rat>],
    target: &BTreeMap<(Vec<usize>, Mono), Rat>,
) -> Option<Vec<Rat>> {
    let mut keys: Vec<&(Vec<usize>, Mono)> = columns.iter().flat_map(|c| c.keys()).chain(target.keys()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Rat>> =
        keys.iter().map(|k| columns.iter().map(|c| c.get(*k).cloned().unwrap_or_else(Rat::zero)).collect()).collect();
    let rhs: Vec<Rat> = keys.iter().map(|k| target.get(*k).cloned().unwrap_or_else(Rat::zero)).collect();
    linalg::solve(&rows, &rhs, columns.len())
}

fn differential(p: &MPoly) -> PolyForm {
    PolyForm::function(p.clone()).ext_d().expect("0-form has a differential")
}

/// Order-by-order solution of `dH ∧ η ≡ 0` with `H(0) = 0` and linear part
/// proportional to `η(0)`, normalized on its first nonzero coefficient.
pub fn frobenius_first_integral(eta: &PolyForm, cap: u32) -> Result<TruncFirstIntegral, LabError> {
    if eta.grade() != 1 {
        return Err(crate::forms::FormError::WrongGrade { expected: 1, got: eta.grade() }.into());
    }
    let ring = eta.ring().clone();
    let n = ring.nvars();
    let eta0: Vec<Rat> = eta.coefficients().iter().map(|c| c.constant_term()).collect();
    let Some(k) = eta0.iter().position(|c| !c.is_zero()) else {
        return Err(LabError::EtaVanishes);
    };
    let norm = eta0[k].recip();
    let mut parts: Vec<MPoly> = vec![MPoly::zero(&ring)];
    parts.push((0..n).fold(MPoly::zero(&ring), |acc, i| &acc + &MPoly::var(&ring, i).scale(&(&eta0[i] * &norm))));
    let eta_parts: Vec<PolyForm> = (0..cap).map(|j| eta.homogeneous_part(j)).collect();
    for m in 2..=cap {
        checkpoint()?;
        // dH_m ∧ η_0 = -Σ_{j<m} dH_j ∧ η_{m-j} in coefficient degree m - 1.
        let mut rhs = PolyForm::zero(&ring, 2);
        for (j, hj) in parts.iter().enumerate().skip(1) {
            if (m as usize) - j < eta_parts.len() {
                rhs = rhs.sub(&differential(hj).wedge(&eta_parts[m as usize - j])?)?;
            }
        }
        let monos = monomials_of_degree(n, m);
        let columns: Vec<_> = monos
            .iter()
            .map(|mu| flatten(&differential(&MPoly::monomial(&ring, mu.clone(), Rat::from_integer(1.into()))).wedge(&eta_parts[0]).unwrap()))
            .collect();
        let sol = solve_columns(&columns, &flatten(&rhs)).ok_or(LabError::FirstIntegralInconsistent(m))?;
        parts.push(MPoly::from_terms(&ring, monos.into_iter().zip(sol)));
    }
    let h = parts.iter().fold(MPoly::zero(&ring), |acc, p| &acc + p);
    let residual = differential(&h).wedge(eta)?.truncate(cap.saturating_sub(1));
    let integrable = n < 3 || eta.wedge(&eta.ext_d()?)?.is_zero();
    Ok(TruncFirstIntegral { h: TruncSeries::new(&h, cap), cap, residual, integrable })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedIntegral {
    pub h1: TruncSeries,
    /// `dH₁ ∧ ω` with coefficients truncated to degree `cap - 1`.
    pub residual: PolyForm,
    /// `dH₁(0)` as a covector.
    pub dh1_at_origin: Vec<Rat>,
}

/// `H₁ = H ∘ φ` for a map `φ` given by `images`, checked against `omega`.
pub fn compose_first_integral(fi: &TruncFirstIntegral, images: &[MPoly], omega: &PolyForm) -> Result<ComposedIntegral, LabError> {
    let cap = fi.cap;
    let h1 = fi.h.body().substitute(images)?.truncate(cap);
    let residual = differential(&h1).wedge(omega)?.truncate(cap.saturating_sub(1));
    let n = omega.ring().nvars();
    let dh1_at_origin = (0..n).map(|i| h1.partial(i).eval(&vec![Rat::zero(); n])).collect();
    Ok(ComposedIntegral { h1: TruncSeries::new(&h1, cap), residual, dh1_at_origin })
}
