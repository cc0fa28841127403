//! Residues of meromorphic forms at the origin.

use std::fmt;

use num_traits::Zero;

use super::error::ResidueError;
use crate::algebra::series::truncated_product;
use crate::algebra::{poly::same_ring, MPoly, Mono, MonomialOrder, Rat, TruncSeries};
use crate::ideal::{lift, saturation, zero_dim_degree, Ideal, IdealError};

/// Exponent bound for the transformation law.
pub const MAX_RESIDUE_EXPONENT: u32 = 24;

/// Coefficient of `t^-1` in the Laurent expansion of `num / den` at `t = 0`.
pub fn univariate_residue(num: &MPoly, den: &MPoly) -> Result<Rat, ResidueError> {
    for p in [num, den] {
        if p.nvars() != 1 {
            return Err(ResidueError::WrongVariableCount { expected: 1, got: p.nvars() });
        }
    }
    if den.is_zero() {
        return Err(ResidueError::ZeroDenominator);
    }
    let k = den.var_content(0);
    if k == 0 {
        return Ok(Rat::zero());
    }
    let unit = den.div_mono(&Mono::var(1, 0, k));
    let cap = k - 1;
    let inv = TruncSeries::new(&unit, cap).inverse()?;
    let prod = truncated_product(&num.truncate(cap), inv.body(), cap);
    Ok(prod.coeff(&Mono::var(1, 0, cap)))
}

/// A planar model `ω = P dy - Q dx`; its tangent field is `P ∂x + Q ∂y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalModel2D {
    pub p: MPoly,
    pub q: MPoly,
}

impl LocalModel2D {
    pub fn new(p: MPoly, q: MPoly) -> Result<Self, ResidueError> {
        if p.nvars() != 2 || !same_ring(p.ring(), q.ring()) {
            return Err(ResidueError::WrongVariableCount { expected: 2, got: p.nvars() });
        }
        Ok(LocalModel2D { p, q })
    }

    /// `tr DX` as a polynomial.
    pub fn trace(&self) -> MPoly {
        &self.p.partial(0) + &self.q.partial(1)
    }

    /// `det DX` as a polynomial.
    pub fn det(&self) -> MPoly {
        &(&self.p.partial(0) * &self.q.partial(1)) - &(&self.p.partial(1) * &self.q.partial(0))
    }
}

impl fmt::Display for LocalModel2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(P, Q) = ({}, {})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueMethod {
    Nondegenerate,
    Grothendieck,
    Univariate,
}

impl fmt::Display for ResidueMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResidueMethod::Nondegenerate => "nondegenerate",
            ResidueMethod::Grothendieck => "grothendieck",
            ResidueMethod::Univariate => "univariate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBResidue {
    pub value: Rat,
    pub method: ResidueMethod,
    pub location: String,
}

/// `tr(DX(p))^2 / det(DX(p))`.
pub fn bb_nondegenerate(model: &LocalModel2D, point: &[Rat]) -> Result<BBResidue, ResidueError> {
    let tr = model.trace().eval(point);
    let det = model.det().eval(point);
    if det.is_zero() {
        return Err(ResidueError::Degenerate);
    }
    Ok(BBResidue {
        value: &tr * &tr / det,
        method: ResidueMethod::Nondegenerate,
        location: format!("[{}]", point.iter().map(crate::algebra::rat::to_fraction_string).collect::<Vec<_>>().join(", ")),
    })
}

/// `Res_0 [ h dx∧dy / (P, Q) ]` by the transformation law.
pub fn grothendieck_residue_2d(h: &MPoly, p: &MPoly, q: &MPoly) -> Result<Rat, ResidueError> {
    if p.nvars() != 2 || !same_ring(p.ring(), q.ring()) || !same_ring(p.ring(), h.ring()) {
        return Err(ResidueError::WrongVariableCount { expected: 2, got: p.nvars() });
    }
    if !p.constant_term().is_zero() || !q.constant_term().is_zero() {
        return Err(ResidueError::NotAZero);
    }
    let ring = p.ring().clone();
    let ideal = Ideal::new(&ring, vec![p.clone(), q.clone()]);
    match zero_dim_degree(&ideal) {
        Ok(_) => {}
        Err(IdealError::NotZeroDimensional(_)) => return Err(ResidueError::NotZeroDimensional),
        Err(e) => return Err(e.into()),
    }
    // The other zeros: g is a unit at the origin that kills them.
    let rest = saturation(&ideal, &Ideal::maximal_at_origin(&ring))?;
    let g = rest
        .grevlex()?
        .basis()
        .iter()
        .find(|g| !g.constant_term().is_zero())
        .cloned()
        .expect("the saturation does not vanish at the origin");
    let gb = ideal.grevlex()?;
    let x = MPoly::var(&ring, 0);
    let y = MPoly::var(&ring, 1);
    let mut exponent = None;
    for n in 1..=MAX_RESIDUE_EXPONENT {
        if gb.contains(&(&g * &x.pow(n))) && gb.contains(&(&g * &y.pow(n))) {
            exponent = Some(n);
            break;
        }
    }
    let n = exponent.ok_or(ResidueError::ExponentCapExceeded(MAX_RESIDUE_EXPONENT))?;
    let order = MonomialOrder::grevlex(2);
    let row_x = lift(&ideal, &(&g * &x.pow(n)), &order)?.expect("membership checked");
    let row_y = lift(&ideal, &(&g * &y.pow(n)), &order)?.expect("membership checked");
    let det = &(&row_x[0] * &row_y[1]) - &(&row_x[1] * &row_y[0]);
    let cap = 2 * (n - 1);
    let g_inv = TruncSeries::new(&g, cap).inverse()?;
    let g_inv2 = truncated_product(g_inv.body(), g_inv.body(), cap);
    let num = truncated_product(&(h * &det).truncate(cap), &g_inv2, cap);
    Ok(num.coeff(&Mono::from_exps(vec![n - 1, n - 1])))
}

/// Baum-Bott residue at the origin with numerator `tr(DX)^2`.
pub fn bb_grothendieck(model: &LocalModel2D) -> Result<BBResidue, ResidueError> {
    let tr = model.trace();
    let value = grothendieck_residue_2d(&(&tr * &tr), &model.p, &model.q)?;
    Ok(BBResidue { value, method: ResidueMethod::Grothendieck, location: "origin".to_string() })
}

/// Nondegenerate closed form when `det DX(0) != 0`, else the Grothendieck residue.
pub fn bb_residue(model: &LocalModel2D) -> Result<BBResidue, ResidueError> {
    let origin = vec![Rat::zero(); 2];
    match bb_nondegenerate(model, &origin) {
        Ok(r) => Ok(BBResidue { location: "origin".to_string(), ..r }),
        Err(ResidueError::Degenerate) => bb_grothendieck(model),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumCheck {
    pub degree: u32,
    pub expected: Rat,
    pub total: Rat,
    pub equal: bool,
}

/// Compare `Σ BB · deg Z` with `(d + 2)^2`.
pub fn bb_sum_check(d: u32, entries: &[(BBResidue, u64)]) -> SumCheck {
    let expected = Rat::from_integer(((d + 2) * (d + 2)).into());
    let total = entries.iter().fold(Rat::zero(), |acc, (r, deg)| acc + &r.value * Rat::from_integer((*deg).into()));
    SumCheck { degree: d, equal: total == expected, expected, total }
}
