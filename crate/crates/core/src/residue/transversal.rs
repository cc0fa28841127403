//! Planar transversal models of a foliation along a curve of singularities.

use num_traits::Zero;

use super::error::ResidueError;
use super::local::LocalModel2D;
use crate::algebra::{linalg, MPoly, Rat, Ring};
use crate::forms::{chart_images, chart_ring, FoliationP3};
use crate::ideal::Ideal;

/// The model obtained by slicing the foliation at a smooth point of a curve
/// component with a coordinate plane transverse to the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalSlice {
    pub chart: usize,
    /// Homogeneous index of the coordinate held fixed on the slice.
    pub fixed: usize,
    /// Homogeneous indices of the slice coordinates `(x, y)`.
    pub plane: (usize, usize),
    pub model: LocalModel2D,
}

/// Slice at `point`, a rational point of the component given by `component`.
pub fn transversal_model(f: &FoliationP3, component: &Ideal, point: &[Rat]) -> Result<TransversalSlice, ResidueError> {
    let ring = f.ring().clone();
    for g in component.generators() {
        if !g.eval(point).is_zero() {
            return Err(ResidueError::PointOffComponent(g.to_string()));
        }
    }
    let chart = (0..4).find(|&i| !point[i].is_zero()).expect("projective point has a nonzero coordinate");
    let scale = point[chart].recip();
    let affine_point: Vec<Rat> = (0..4).filter(|&i| i != chart).map(|i| &point[i] * &scale).collect();
    let affine = chart_ring(&ring, chart);
    let images = chart_images(&ring, chart, &affine);
    let hom_index: Vec<usize> = (0..4).filter(|&i| i != chart).collect();

    // Tangent line: kernel of the Jacobian of the dehomogenized generators.
    let rows: Vec<Vec<Rat>> = component
        .generators()
        .iter()
        .map(|g| {
            let ga = g.substitute(&images).expect("chart images");
            (0..3).map(|j| ga.partial(j).eval(&affine_point)).collect()
        })
        .collect();
    let kernel = linalg::null_space(&rows, 3);
    if kernel.len() != 1 {
        return Err(ResidueError::SingularComponentPoint);
    }
    let tangent = &kernel[0];
    let c = (0..3).find(|&j| !tangent[j].is_zero()).expect("nonzero kernel vector");
    let (a, b) = match c {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };

    let omega = f.chart_restrict(chart).translate(&affine_point);
    let plane_ring = Ring::new(&[affine.name(a), affine.name(b)]);
    let mut slice_images = vec![MPoly::zero(&plane_ring); 3];
    slice_images[a] = MPoly::var(&plane_ring, 0);
    slice_images[b] = MPoly::var(&plane_ring, 1);
    let coeff_a = omega.component(&[a]).substitute(&slice_images)?;
    let coeff_b = omega.component(&[b]).substitute(&slice_images)?;
    // ω|plane = A_a dx + A_b dy = P dy - Q dx.
    let model = LocalModel2D::new(coeff_b, -coeff_a)?;
    Ok(TransversalSlice { chart, fixed: hom_index[c], plane: (hom_index[a], hom_index[b]), model })
}
