use std::collections::BTreeSet;

use num_traits::Zero;

use super::classify::point_string;
use super::error::LabError;
use super::scheme::CurveComponent;
use crate::algebra::{gcd_binary, BinForm, LinePoint, MPoly, Rat};
use crate::forms::FoliationP3;
use crate::ideal::HilbertData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NKPoint {
    pub param: LinePoint,
    /// Image on the curve, scaled so the first nonzero coordinate is 1.
    pub image: Vec<Rat>,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NKDivisor {
    pub component: String,
    pub points: Vec<NKPoint>,
    /// Factors of the gcd without rational roots, with multiplicities.
    pub other_factors: Vec<(BinForm, u32)>,
    pub gcd: BinForm,
    pub total_degree: u32,
    /// Bound `d · e` on the total degree.
    pub pullback_degree: u32,
}

pub(crate) fn normalize_point(p: &[Rat]) -> Vec<Rat> {
    match p.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
        None => p.to_vec(),
    }
}

/// Zeros of `dω` along a parametrized component: the gcd of the six
/// pulled-back coefficients, factored over the rationals.
pub fn nk_divisor(f: &FoliationP3, z: &CurveComponent) -> Result<NKDivisor, LabError> {
    let param = z.param.as_ref().ok_or_else(|| LabError::NoParam(z.name.clone()))?;
    let images: Vec<MPoly> = param.iter().map(|b| b.poly().clone()).collect();
    let dw = f.d_omega();
    let mut pulled = Vec::new();
    for c in dw.dense_coefficients() {
        let p = c.substitute(&images)?;
        if !p.is_zero() {
            pulled.push(BinForm::new(p)?);
        }
    }
    if pulled.is_empty() {
        return Err(LabError::EntirelyNonKupka(z.name.clone()));
    }
    let gcd = gcd_binary(&pulled)?;
    let fac = gcd.factor();
    let points = fac
        .points
        .into_iter()
        .map(|(lp, order)| {
            let image = normalize_point(&param.iter().map(|b| b.eval(&lp)).collect::<Vec<_>>());
            NKPoint { param: lp, image, order }
        })
        .collect();
    let e = z.param_degree().unwrap_or(0);
    Ok(NKDivisor {
        component: z.name.clone(),
        points,
        total_degree: gcd.degree().finite().unwrap_or(0),
        other_factors: fac.other_factors,
        gcd,
        pullback_degree: f.degree() * e,
    })
}

impl NKDivisor {
    pub fn describe_points(&self) -> Vec<String> {
        self.points.iter().map(|p| format!("{} -> {} (order {})", p.param, point_string(&p.image), p.order)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NKCountReport {
    pub degree_d: u32,
    pub curve_degree: u64,
    pub p_a: i64,
    /// `(d - 2) · deg Z`.
    pub deg_kf_restricted: i64,
    /// `2 p_a - 2`.
    pub deg_kz: i64,
    /// `deg K_F|Z - deg K_Z`.
    pub difference: i64,
    /// `deg K_Z - deg K_F|Z`.
    pub reversed_difference: i64,
    /// Sum of per-branch divisor degrees over the parametrized components.
    pub observed_total: Option<u64>,
    /// Number of distinct points in the union of divisor supports.
    pub distinct_points: Option<usize>,
}

/// Degree bookkeeping for the non-Kupka divisor on a curve `Z` with Hilbert
/// data `z`, compared with the divisors of parametrized components covering it.
pub fn nk_count(f: &FoliationP3, z: &HilbertData, covering: &[CurveComponent]) -> Result<NKCountReport, LabError> {
    let p_a = z.p_a.ok_or(LabError::GenusUndefined(z.dim_proj))?;
    let d = f.degree() as i64;
    let deg_kf_restricted = (d - 2) * z.degree as i64;
    let deg_kz = 2 * p_a - 2;
    let mut observed = None;
    let mut distinct = None;
    let covered: u64 = covering.iter().map(|c| c.hilbert.degree).sum();
    if !covering.is_empty() && covering.iter().all(|c| c.param.is_some()) && covered == z.degree {
        let mut total = 0u64;
        let mut support = BTreeSet::new();
        for c in covering {
            let div = nk_divisor(f, c)?;
            total += div.total_degree as u64;
            for p in div.points {
                support.insert(p.image);
            }
        }
        observed = Some(total);
        distinct = Some(support.len());
    }
    Ok(NKCountReport {
        degree_d: f.degree(),
        curve_degree: z.degree,
        p_a,
        deg_kf_restricted,
        deg_kz,
        difference: deg_kf_restricted - deg_kz,
        reversed_difference: deg_kz - deg_kf_restricted,
        observed_total: observed,
        distinct_points: distinct,
    })
}
