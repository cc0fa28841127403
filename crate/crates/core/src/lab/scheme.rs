use num_traits::Zero;

use super::error::LabError;
use crate::algebra::{BinForm, MPoly};
use crate::forms::{FoliationP3, PolyForm};
use crate::ideal::{affine_dimension, hilbert_data, intersect, radical_contains, saturation, HilbertData, Ideal};

/// A user-declared curve in the singular set, optionally with a rational
/// parametrization `[s:t] -> [p0:p1:p2:p3]`.
#[derive(Debug, Clone)]
pub struct CurveComponent {
    pub name: String,
    pub ideal: Ideal,
    pub param: Option<Vec<BinForm>>,
    pub hilbert: HilbertData,
    /// A point of the component used for transversal slices, if declared.
    pub point: Option<Vec<crate::algebra::Rat>>,
}

impl CurveComponent {
    /// Verifies that the ideal is a curve and that the parametrization lies on
    /// it. With `birational`, the parametrization degree must equal the curve
    /// degree.
    pub fn new(name: &str, ideal: Ideal, param: Option<Vec<MPoly>>, birational: bool) -> Result<Self, LabError> {
        let hilbert = hilbert_data(&ideal, true)?;
        if hilbert.dim_proj != 1 {
            return Err(LabError::NotACurve { component: name.to_string(), dim: hilbert.dim_proj });
        }
        let param = match param {
            None => None,
            Some(ps) => {
                let bad = || LabError::BadParam { component: name.to_string() };
                if ps.len() != ideal.ring().nvars() || ps.iter().all(|p| p.is_zero()) {
                    return Err(bad());
                }
                let forms: Vec<BinForm> = ps.into_iter().map(BinForm::new).collect::<Result<_, _>>().map_err(|_| bad())?;
                let degs: Vec<u32> = forms.iter().filter(|f| !f.is_zero()).filter_map(|f| f.degree().finite()).collect();
                if degs.windows(2).any(|w| w[0] != w[1]) {
                    return Err(bad());
                }
                let images: Vec<MPoly> = forms.iter().map(|f| f.poly().clone()).collect();
                for g in ideal.generators() {
                    if !g.substitute(&images)?.is_zero() {
                        return Err(LabError::ParamOffComponent { component: name.to_string(), generator: g.to_string() });
                    }
                }
                if birational && degs[0] as u64 != hilbert.degree {
                    return Err(LabError::ParamDegree { component: name.to_string(), param: degs[0], curve: hilbert.degree });
                }
                Some(forms)
            }
        };
        Ok(CurveComponent { name: name.to_string(), ideal, param, hilbert, point: None })
    }

    pub fn with_point(mut self, point: Vec<crate::algebra::Rat>) -> Self {
        self.point = Some(point);
        self
    }

    pub fn param_degree(&self) -> Option<u32> {
        self.param.as_ref().and_then(|p| p.iter().filter(|f| !f.is_zero()).find_map(|f| f.degree().finite()))
    }

    /// A rational point of the component: the declared one, else the image of
    /// `[1:1]` under the parametrization.
    pub fn sample_point(&self) -> Option<Vec<crate::algebra::Rat>> {
        if let Some(p) = &self.point {
            return Some(p.clone());
        }
        let param = self.param.as_ref()?;
        let one = crate::algebra::LinePoint { s: crate::algebra::int(1), t: crate::algebra::int(1) };
        let pt: Vec<_> = param.iter().map(|f| f.eval(&one)).collect();
        if pt.iter().all(|c| c.is_zero()) {
            None
        } else {
            Some(pt)
        }
    }
}

#[derive(Debug, Clone)]
pub struct SingularScheme {
    pub ideal: Ideal,
    pub hilbert: HilbertData,
    pub components: Vec<CurveComponent>,
}

/// Saturated coefficient ideal with its Hilbert data; each declared component
/// must contain it.
pub fn singular_scheme(f: &FoliationP3, components: Vec<CurveComponent>) -> Result<SingularScheme, LabError> {
    let ring = f.ring();
    let sat = saturation(&f.coefficient_ideal(), &Ideal::maximal_at_origin(ring))?;
    let hilbert = hilbert_data(&sat, false)?;
    for c in &components {
        if let Some(g) = sat.first_outside(&c.ideal)? {
            return Err(LabError::NotContained { component: c.name.clone(), generator: g.to_string() });
        }
    }
    Ok(SingularScheme { ideal: sat, hilbert, components })
}

#[derive(Debug, Clone)]
pub struct IsolatedReport {
    pub residual: Ideal,
    pub hilbert: HilbertData,
    pub count: u64,
}

/// Total multiplicity of the zero-dimensional part of the singular scheme off
/// the declared curve part.
pub fn isolated_count(f: &FoliationP3, curve_part: &Ideal) -> Result<IsolatedReport, LabError> {
    let scheme = singular_scheme(f, vec![])?;
    if let Some(g) = scheme.ideal.first_outside(curve_part)? {
        return Err(LabError::NotContained { component: "curve part".into(), generator: g.to_string() });
    }
    let residual = saturation(&scheme.ideal, curve_part)?;
    let hilbert = hilbert_data(&residual, true)?;
    if hilbert.dim_proj > 0 {
        return Err(LabError::ResidualNotZeroDimensional(hilbert.dim_proj));
    }
    Ok(IsolatedReport { count: hilbert.degree, residual, hilbert })
}

/// Result of checking declared components of an affine singular scheme.
#[derive(Debug, Clone)]
pub struct AffineComponentCheck {
    pub ideal: Ideal,
    /// Whether the intersection of the declared components equals the ideal.
    pub decomposes: bool,
    /// Per component: Krull dimension and the names of components whose zero
    /// set contains it (non-empty means embedded).
    pub components: Vec<(String, i64, Vec<String>)>,
}

/// Affine coefficient ideal of `omega` checked against declared components.
pub fn affine_decomposition(omega: &PolyForm, declared: &[(String, Ideal)]) -> Result<AffineComponentCheck, LabError> {
    let ring = omega.ring().clone();
    let ideal = Ideal::new(&ring, omega.coefficients());
    let mut acc: Option<Ideal> = None;
    for (_, c) in declared {
        acc = Some(match acc {
            None => c.clone(),
            Some(a) => intersect(&a, c)?,
        });
    }
    let decomposes = match &acc {
        Some(a) => a.same_as(&ideal)?,
        None => false,
    };
    let mut components = Vec::new();
    for (name, c) in declared {
        let dim = affine_dimension(c)?;
        let mut inside = Vec::new();
        for (other, o) in declared {
            if other == name {
                continue;
            }
            // V(c) ⊆ V(o) iff o ⊆ √c.
            let mut all = true;
            for g in o.generators() {
                if !radical_contains(c, g)? {
                    all = false;
                    break;
                }
            }
            if all && affine_dimension(o)? > dim {
                inside.push(other.clone());
            }
        }
        components.push((name.clone(), dim, inside));
    }
    Ok(AffineComponentCheck { ideal: ideal.grevlex()?.to_ideal(), decomposes, components })
}
