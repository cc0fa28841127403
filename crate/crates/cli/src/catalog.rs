//! Constructors for logarithmic foliations and pencils.

use num_traits::Zero;
use thiserror::Error;

use folia_core::algebra::{MPoly, Rat};
use folia_core::forms::{validate_foliation, FoliationError, FoliationP3, PolyForm};
use folia_core::ideal::{hilbert_data, Ideal, IdealError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("hypersurface {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("need as many weights as hypersurfaces ({hypersurfaces} vs {weights})")]
    WeightCount { hypersurfaces: usize, weights: usize },
    #[error("weights fail the descent condition: sum of weight*degree is {0}, expected 0")]
    WeightSum(String),
    #[error("exponents fail the descent condition: {p}*{deg_f} != {q}*{deg_g}")]
    Exponents { p: u32, deg_f: u32, q: u32, deg_g: u32 },
    #[error("{0} is not reduced")]
    NotReduced(String),
    #[error("{0} and {1} have a common factor")]
    NotCoprime(String, String),
    #[error("need at least two hypersurfaces")]
    TooFew,
    #[error(transparent)]
    Foliation(#[from] FoliationError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn degree_of(f: &MPoly) -> Result<u32, CatalogError> {
    if f.is_zero() || !f.is_homogeneous() {
        return Err(CatalogError::NotHomogeneous(f.to_string()));
    }
    Ok(f.degree().finite().unwrap_or(0))
}

fn dim_proj(gens: Vec<MPoly>) -> Result<i64, CatalogError> {
    let ring = gens[0].ring().clone();
    Ok(hilbert_data(&Ideal::new(&ring, gens), true)?.dim_proj)
}

/// A hypersurface is reduced when its singular locus is smaller than itself.
fn check_reduced(f: &MPoly) -> Result<(), CatalogError> {
    let n = f.nvars() as i64;
    let mut gens = vec![f.clone()];
    gens.extend((0..f.nvars()).map(|i| f.partial(i)));
    if dim_proj(gens)? >= n - 2 {
        return Err(CatalogError::NotReduced(f.to_string()));
    }
    Ok(())
}

fn check_coprime(f: &MPoly, g: &MPoly) -> Result<(), CatalogError> {
    if dim_proj(vec![f.clone(), g.clone()])? >= f.nvars() as i64 - 2 {
        return Err(CatalogError::NotCoprime(f.to_string(), g.to_string()));
    }
    Ok(())
}

fn differential(f: &MPoly) -> PolyForm {
    PolyForm::function(f.clone()).ext_d().expect("functions have differentials")
}

/// `(∏ F_j) Σ λ_i dF_i / F_i`.
pub fn build_logarithmic(hypersurfaces: &[MPoly], weights: &[Rat]) -> Result<FoliationP3, CatalogError> {
    if hypersurfaces.len() != weights.len() {
        return Err(CatalogError::WeightCount { hypersurfaces: hypersurfaces.len(), weights: weights.len() });
    }
    if hypersurfaces.len() < 2 {
        return Err(CatalogError::TooFew);
    }
    let degrees: Vec<u32> = hypersurfaces.iter().map(degree_of).collect::<Result<_, _>>()?;
    let sum = weights.iter().zip(&degrees).fold(Rat::zero(), |acc, (w, &d)| acc + w * Rat::from_integer(d.into()));
    if !sum.is_zero() {
        return Err(CatalogError::WeightSum(folia_core::algebra::rat::to_plain_string(&sum)));
    }
    for (i, f) in hypersurfaces.iter().enumerate() {
        check_reduced(f)?;
        for g in &hypersurfaces[i + 1..] {
            check_coprime(f, g)?;
        }
    }
    let ring = hypersurfaces[0].ring().clone();
    let mut omega = PolyForm::zero(&ring, 1);
    for (i, f) in hypersurfaces.iter().enumerate() {
        let others = hypersurfaces
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(MPoly::one(&ring), |acc, (_, g)| &acc * g);
        omega = omega.add(&differential(f).mul_function(&others).scale(&weights[i])).expect("same ring");
    }
    let d = degrees.iter().sum::<u32>() - 2;
    Ok(validate_foliation(omega, d)?)
}

/// `p G dF - q F dG`, the foliation with first integral `F^p / G^q`.
pub fn build_pencil(f: &MPoly, g: &MPoly, p: u32, q: u32) -> Result<FoliationP3, CatalogError> {
    let (deg_f, deg_g) = (degree_of(f)?, degree_of(g)?);
    if p * deg_f != q * deg_g || p == 0 {
        return Err(CatalogError::Exponents { p, deg_f, q, deg_g });
    }
    check_reduced(f)?;
    check_reduced(g)?;
    check_coprime(f, g)?;
    let pr = Rat::from_integer(p.into());
    let qr = Rat::from_integer(q.into());
    let omega = differential(f).mul_function(&g.scale(&pr)).sub(&differential(g).mul_function(&f.scale(&qr))).expect("same ring");
    Ok(validate_foliation(omega, deg_f + deg_g - 2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_core::algebra::{int, Ring, RingRef};

    fn p(r: &RingRef, s: &str) -> MPoly {
        MPoly::parse(r, s).unwrap()
    }

    #[test]
    fn logarithmic_examples() {
        let r = Ring::indexed("x", 4);
        let planes: Vec<MPoly> = (0..4).map(|i| MPoly::var(&r, i)).collect();
        let tetra = build_logarithmic(&planes, &[int(1), int(2), int(-1), int(-2)]).unwrap();
        assert_eq!(tetra.degree(), 2);
        let l112 = build_logarithmic(&[p(&r, "x0"), p(&r, "x1"), p(&r, "x2^2 + x0*x3")], &[int(1), int(1), int(-1)]).unwrap();
        assert_eq!(l112.degree(), 2);
        let pencil = build_logarithmic(&planes[..2], &[int(1), int(-1)]).unwrap();
        assert_eq!(pencil.degree(), 0);
        let err = build_logarithmic(&planes[..2], &[int(1), int(1)]).unwrap_err();
        assert_eq!(err, CatalogError::WeightSum("2".into()));
        let err = build_logarithmic(&[p(&r, "x0"), p(&r, "x0*x1")], &[int(2), int(-1)]).unwrap_err();
        assert!(matches!(err, CatalogError::NotCoprime(..)));
    }

    #[test]
    fn pencil_examples() {
        let r = Ring::indexed("x", 4);
        let planes = build_pencil(&p(&r, "x0"), &p(&r, "x1"), 1, 1).unwrap();
        assert_eq!(planes.degree(), 0);
        let branched = build_pencil(&p(&r, "x0"), &p(&r, "x0*x3 - x1*x2"), 2, 1).unwrap();
        assert_eq!(branched.degree(), 1);
        let err = build_pencil(&p(&r, "x0"), &p(&r, "x1^2"), 2, 1).unwrap_err();
        assert!(matches!(err, CatalogError::NotReduced(_)));
        let err = build_pencil(&p(&r, "x0"), &p(&r, "x1^2 + x2*x3"), 1, 1).unwrap_err();
        assert!(matches!(err, CatalogError::Exponents { .. }));
    }
}
