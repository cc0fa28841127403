//! Local multiplicities through Mora's tangent-cone algorithm.

use std::fmt;

use super::cancel::checkpoint;
use super::error::IdealError;
use super::ops::count_standard_monomials;
use super::spoly::{s_poly, SortedPoly};
use super::Ideal;
use crate::algebra::{Mono, MonomialOrder, Rat};

pub const DEFAULT_MORA_CAP: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalMultiplicity {
    Finite(u64),
    /// The point is not isolated in the zero set.
    Infinite,
    /// Intermediate degrees exceeded the cap.
    Inconclusive { cap: u32 },
}

impl LocalMultiplicity {
    pub fn finite(&self) -> Option<u64> {
        match self {
            LocalMultiplicity::Finite(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for LocalMultiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalMultiplicity::Finite(v) => write!(f, "{v}"),
            LocalMultiplicity::Infinite => write!(f, "infinite"),
            LocalMultiplicity::Inconclusive { cap } => write!(f, "inconclusive (degree cap {cap})"),
        }
    }
}

struct CapExceeded;

/// Mora normal form with ecart-driven choice of reducer.
fn mora_nf(
    f: SortedPoly,
    basis: &[SortedPoly],
    order: &MonomialOrder,
    limit: u32,
    corner: Option<u32>,
) -> Result<Result<SortedPoly, CapExceeded>, IdealError> {
    let mut h = truncate(f, corner);
    let mut t: Vec<SortedPoly> = basis.to_vec();
    while !h.is_zero() {
        checkpoint()?;
        if h.degree() > limit {
            return Ok(Err(CapExceeded));
        }
        let lm = h.lm().clone();
        let reducer = t
            .iter()
            .enumerate()
            .filter(|(_, g)| g.lm().divides(&lm))
            .min_by_key(|(i, g)| (g.ecart(), *i))
            .map(|(i, _)| i);
        let Some(i) = reducer else { break };
        let g = t[i].clone();
        if g.ecart() > h.ecart() {
            t.push(h.clone());
        }
        let m = g.lm().quotient_of(&lm);
        let c = h.lc() / g.lc();
        h = truncate(h.sub_mul(&c, &m, &g, order), corner);
    }
    h.make_monic();
    Ok(Ok(h))
}

/// Drop terms of degree `> bound`; they lie in the ideal once `m^bound` does.
fn truncate(mut p: SortedPoly, bound: Option<u32>) -> SortedPoly {
    if let Some(b) = bound {
        p.terms.retain(|(m, _)| m.degree() <= b);
    }
    p
}

/// Smallest `k` with every monomial of degree `k` in the monomial ideal, when
/// the ideal has finite colength.
fn corner_bound(lms: &[Mono], n: usize) -> Option<u32> {
    let mut bounds = vec![None::<u32>; n];
    for m in lms {
        if m.is_one() {
            return Some(0);
        }
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
    let mut best = 0;
    let mut exps = vec![0u32; n];
    loop {
        let m = Mono::from_exps(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            best = best.max(m.degree() + 1);
        }
        let mut k = 0;
        loop {
            if k == n {
                return Some(best);
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Standard basis of the localization at the origin, or `None` on cap overflow.
fn standard_basis(gens: Vec<SortedPoly>, order: &MonomialOrder, limit: u32) -> Result<Option<Vec<SortedPoly>>, IdealError> {
    let mut basis: Vec<SortedPoly> = Vec::new();
    for mut g in gens.into_iter().filter(|g| !g.is_zero()) {
        g.make_monic();
        basis.push(g);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let n = order.nvars();
    let mut corner = corner_bound(&basis.iter().map(|g| g.lm().clone()).collect::<Vec<_>>(), n);
    while !pairs.is_empty() {
        // Smallest lcm degree first, ties by index.
        let k = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                (basis[i].lm().lcm(basis[j].lm()).degree(), j, i)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let (s, _, _) = s_poly(&basis[i], &basis[j], order);
        if s.is_zero() {
            continue;
        }
        match mora_nf(s, &basis, order, limit, corner)? {
            Err(CapExceeded) => return Ok(None),
            Ok(h) if h.is_zero() => {}
            Ok(h) => {
                if h.lm().is_one() {
                    return Ok(Some(vec![h]));
                }
                let k = basis.len();
                basis.push(h);
                for i in 0..k {
                    pairs.push((i, k));
                }
                corner = corner_bound(&basis.iter().map(|g| g.lm().clone()).collect::<Vec<_>>(), n);
                if corner.is_some() {
                    for g in basis.iter_mut() {
                        let t = truncate(g.clone(), corner);
                        if !t.is_zero() {
                            *g = t;
                        }
                    }
                }
            }
        }
    }
    Ok(Some(basis))
}

/// `dim O_p / I O_p` using a standard basis for the local antigraded order.
pub fn local_multiplicity(ideal: &Ideal, point: &[Rat]) -> Result<LocalMultiplicity, IdealError> {
    local_multiplicity_with_cap(ideal, point, DEFAULT_MORA_CAP)
}

pub fn local_multiplicity_with_cap(ideal: &Ideal, point: &[Rat], cap: u32) -> Result<LocalMultiplicity, IdealError> {
    let n = ideal.ring().nvars();
    assert_eq!(point.len(), n, "point dimension must match the ring");
    let order = MonomialOrder::local(n);
    let gens: Vec<SortedPoly> =
        ideal.generators().iter().map(|g| SortedPoly::from_mpoly(&g.translate(point), &order)).collect();
    let input_degree = gens.iter().map(|g| g.degree()).max().unwrap_or(0);
    let Some(basis) = standard_basis(gens, &order, input_degree + cap)? else {
        return Ok(LocalMultiplicity::Inconclusive { cap });
    };
    let lms: Vec<Mono> = basis.iter().map(|g| g.lm().clone()).collect();
    Ok(match count_standard_monomials(&lms, n) {
        Some(v) => LocalMultiplicity::Finite(v),
        None => LocalMultiplicity::Infinite,
    })
}
