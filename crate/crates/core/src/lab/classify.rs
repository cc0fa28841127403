use std::fmt;

use num_traits::Zero;

use super::error::LabError;
use super::LabConfig;
use crate::algebra::rat::to_plain_string;
use crate::algebra::Rat;
use crate::forms::{rot, FoliationP3, PolyForm, PolyVectorField};
use crate::ideal::{local_multiplicity_with_cap, Ideal, LocalMultiplicity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Kupka,
    NonKupka,
}

/// Type of the linear part of `rot ω` at a non-Kupka point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimpleClass {
    Logarithmic,
    Degenerated,
    Nilpotent,
    NoneOfThese,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Kupka => "Kupka",
            PointKind::NonKupka => "non-Kupka",
        })
    }
}

impl fmt::Display for SimpleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SimpleClass::Logarithmic => "logarithmic",
            SimpleClass::Degenerated => "degenerated",
            SimpleClass::Nilpotent => "nilpotent",
            SimpleClass::NoneOfThese => "none of these",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    pub point: Vec<Rat>,
    pub kind: PointKind,
    pub simple_subclass: Option<SimpleClass>,
    pub jet1_nonzero: bool,
    /// `(tr, σ2, det)` of the linear part of `rot ω` in the affine chart,
    /// present for non-Kupka points.
    pub rot_char_poly: Option<[Rat; 3]>,
}

pub(crate) fn point_string(p: &[Rat]) -> String {
    format!("[{}]", p.iter().map(to_plain_string).collect::<Vec<_>>().join(":"))
}

/// Affine chart where `point` has a nonzero coordinate, with the point moved
/// to the origin.
pub fn local_chart(f: &FoliationP3, point: &[Rat]) -> (usize, PolyForm) {
    let chart = (0..4).find(|&i| !point[i].is_zero()).expect("projective point has a nonzero coordinate");
    let scale = point[chart].recip();
    let affine: Vec<Rat> = (0..4).filter(|&i| i != chart).map(|i| &point[i] * &scale).collect();
    (chart, f.chart_restrict(chart).translate(&affine))
}

/// Kupka test by evaluating `dω` at the point, then the simple subclass from
/// the characteristic polynomial of `D rot ω`.
pub fn classify_point(f: &FoliationP3, point: &[Rat]) -> Result<PointClass, LabError> {
    if point.len() != 4 || point.iter().all(|c| c.is_zero()) {
        return Err(LabError::NotSingular(point_string(point)));
    }
    if !f.omega().eval(point).is_empty() {
        return Err(LabError::NotSingular(point_string(point)));
    }
    let (_, local) = local_chart(f, point);
    let jet1_nonzero = !local.homogeneous_part(1).is_zero();
    if !f.d_omega().eval(point).is_empty() {
        return Ok(PointClass { point: point.to_vec(), kind: PointKind::Kupka, simple_subclass: None, jet1_nonzero, rot_char_poly: None });
    }
    let x = rot(&local)?;
    let origin = vec![Rat::zero(); 3];
    let m: Vec<Vec<Rat>> = x.jacobian().iter().map(|row| row.iter().map(|e| e.eval(&origin)).collect()).collect();
    let tr = &m[0][0] + &m[1][1] + &m[2][2];
    let minor = |i: usize, j: usize| &m[i][i] * &m[j][j] - &m[i][j] * &m[j][i];
    let sigma2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = &m[0][0] * minor(1, 2) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    let linear_zero = m.iter().all(|r| r.iter().all(|e| e.is_zero()));
    let quadratic_part = !local.homogeneous_part(2).is_zero();
    let subclass = if !det.is_zero() && quadratic_part {
        SimpleClass::Logarithmic
    } else if det.is_zero() && !sigma2.is_zero() && tr.is_zero() {
        SimpleClass::Degenerated
    } else if !linear_zero && tr.is_zero() && sigma2.is_zero() && det.is_zero() {
        SimpleClass::Nilpotent
    } else {
        SimpleClass::NoneOfThese
    };
    Ok(PointClass {
        point: point.to_vec(),
        kind: PointKind::NonKupka,
        simple_subclass: Some(subclass),
        jet1_nonzero,
        rot_char_poly: Some([tr, sigma2, det]),
    })
}

/// Milnor number of the foliation at a projective point, in the chart where
/// the point has a nonzero coordinate.
pub fn milnor(f: &FoliationP3, point: &[Rat], cfg: &LabConfig) -> Result<LocalMultiplicity, LabError> {
    let (_, local) = local_chart(f, point);
    milnor_affine(&local, &[Rat::zero(), Rat::zero(), Rat::zero()], cfg)
}

/// Milnor number of an affine 1-form at a rational point.
pub fn milnor_affine(omega: &PolyForm, point: &[Rat], cfg: &LabConfig) -> Result<LocalMultiplicity, LabError> {
    let ideal = Ideal::new(omega.ring(), omega.coefficients());
    Ok(local_multiplicity_with_cap(&ideal, point, cfg.mora_cap)?)
}

/// Multiplicity of the zero of a vector field at a rational point.
pub fn milnor_field(x: &PolyVectorField, point: &[Rat], cfg: &LabConfig) -> Result<LocalMultiplicity, LabError> {
    let ideal = Ideal::new(x.ring(), x.components().to_vec());
    Ok(local_multiplicity_with_cap(&ideal, point, cfg.mora_cap)?)
}

/// Multiplicity of `rot ω` at a projective point, in the local chart.
pub fn milnor_rot(f: &FoliationP3, point: &[Rat], cfg: &LabConfig) -> Result<LocalMultiplicity, LabError> {
    let (_, local) = local_chart(f, point);
    milnor_field(&rot(&local)?, &[Rat::zero(), Rat::zero(), Rat::zero()], cfg)
}
