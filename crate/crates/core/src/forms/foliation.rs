use super::error::{FoliationError, FormError};
use super::field::PolyVectorField;
use super::form::PolyForm;
use crate::algebra::{MPoly, Mono, Ring, RingRef};
use crate::ideal::{hilbert_data, Ideal};

/// A validated integrable 1-form on projective 3-space with coefficients of
/// degree `d + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationP3 {
    omega: PolyForm,
    degree: u32,
}

/// Checks homogeneity, the Euler condition, integrability and codimension of
/// the singular set, in that order.
pub fn validate_foliation(omega: PolyForm, d: u32) -> Result<FoliationP3, FoliationError> {
    let n = omega.ring().nvars();
    if n != 4 {
        return Err(FormError::WrongVariableCount { expected: 4, got: n }.into());
    }
    if omega.grade() != 1 {
        return Err(FormError::WrongGrade { expected: 1, got: omega.grade() }.into());
    }
    if omega.is_zero() {
        return Err(FoliationError::ZeroForm);
    }
    let ring = omega.ring().clone();
    for (i, c) in omega.coefficients().iter().enumerate() {
        if !c.is_zero() && !(c.is_homogeneous() && c.degree().finite() == Some(d + 1)) {
            return Err(FoliationError::NotHomogeneous { var: ring.name(i).to_string(), expected: d + 1 });
        }
    }
    let euler = omega.contract(&PolyVectorField::radial(&ring))?.as_function();
    if !euler.is_zero() {
        return Err(FoliationError::EulerFails(euler.to_string()));
    }
    let integ = omega.wedge(&omega.ext_d()?)?;
    if let Some((_, c)) = integ.components().next() {
        return Err(FoliationError::NotIntegrable(c.to_string()));
    }
    let hd = hilbert_data(&Ideal::new(&ring, omega.coefficients()), false)?;
    if hd.dim_proj >= 2 {
        return Err(FoliationError::CodimensionOne(hd.dim_proj));
    }
    Ok(FoliationP3 { omega, degree: d })
}

impl FoliationP3 {
    pub fn omega(&self) -> &PolyForm {
        &self.omega
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &RingRef {
        self.omega.ring()
    }

    pub fn d_omega(&self) -> PolyForm {
        self.omega.ext_d().expect("1-form in 4 variables")
    }

    pub fn coefficient_ideal(&self) -> Ideal {
        Ideal::new(self.ring(), self.omega.coefficients())
    }

    /// Dehomogenize at `x_chart = 1`, dropping `dx_chart`.
    pub fn chart_restrict(&self, chart: usize) -> PolyForm {
        chart_restrict(&self.omega, chart)
    }
}

/// The affine ring of the chart `x_chart = 1`.
pub fn chart_ring(ring: &RingRef, chart: usize) -> RingRef {
    let names: Vec<&str> = (0..ring.nvars()).filter(|&i| i != chart).map(|i| ring.name(i)).collect();
    Ring::new(&names)
}

/// Images of the homogeneous variables in the chart ring.
pub fn chart_images(ring: &RingRef, chart: usize, affine: &RingRef) -> Vec<MPoly> {
    let mut k = 0;
    (0..ring.nvars())
        .map(|i| {
            if i == chart {
                MPoly::one(affine)
            } else {
                k += 1;
                MPoly::var(affine, k - 1)
            }
        })
        .collect()
}

pub fn chart_restrict(omega: &PolyForm, chart: usize) -> PolyForm {
    let ring = omega.ring();
    assert!(chart < ring.nvars(), "chart index out of range");
    let affine = chart_ring(ring, chart);
    let images = chart_images(ring, chart, &affine);
    let comps = omega.components().filter(|(idx, _)| !idx.contains(&chart)).map(|(idx, c)| {
        let shifted: Vec<usize> = idx.iter().map(|&i| if i > chart { i - 1 } else { i }).collect();
        (shifted, c.substitute(&images).expect("images share the chart ring"))
    });
    PolyForm::from_components(&affine, omega.grade(), comps.collect::<Vec<_>>())
}

/// Inverse of [`chart_restrict`] for 1-forms: homogenize the coefficients and
/// recover the `dx_chart` coefficient from the Euler condition. The result
/// agrees with the original form up to a power of `x_chart`.
pub fn rehomogenize(affine_form: &PolyForm, chart: usize, ring: &RingRef) -> PolyForm {
    assert_eq!(affine_form.grade(), 1, "rehomogenize expects a 1-form");
    let n = ring.nvars();
    let map: Vec<usize> = (0..n).filter(|&i| i != chart).collect();
    let coeffs: Vec<MPoly> = affine_form.coefficients().iter().map(|c| c.embed(ring, &map)).collect();
    let top = coeffs.iter().filter_map(|c| c.degree().finite()).max().unwrap_or(0);
    let mut full: Vec<MPoly> = vec![MPoly::zero(ring); n];
    for (k, c) in coeffs.iter().enumerate() {
        full[map[k]] = c.homogenize_with(chart, top);
    }
    let mut euler = MPoly::zero(ring);
    for (i, c) in full.iter().enumerate() {
        euler = &euler + &(&MPoly::var(ring, i) * c);
    }
    if euler.var_content(chart) >= 1 {
        full[chart] = -euler.div_mono(&Mono::var(n, chart, 1));
    } else {
        let xc = MPoly::var(ring, chart);
        for c in full.iter_mut() {
            *c = &*c * &xc;
        }
        full[chart] = -euler;
    }
    let content = full.iter().filter(|c| !c.is_zero()).map(|c| c.var_content(chart)).min().unwrap_or(0);
    let strip = Mono::var(n, chart, content);
    PolyForm::one_form(ring, full.iter().map(|c| c.div_mono(&strip)).collect())
}
