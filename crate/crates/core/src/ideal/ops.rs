use super::error::IdealError;
use super::groebner::groebner;
use super::hilbert::monomial_krull_dim;
use super::spoly::SortedPoly;
use super::Ideal;
use crate::algebra::{MPoly, Mono, MonomialOrder, OrderKind, Ring, RingRef};

fn front_extended(ring: &RingRef, name: &str) -> RingRef {
    let mut fresh = name.to_string();
    while ring.index_of(&fresh).is_some() {
        fresh.push('_');
    }
    ring.with_front_vars(&[fresh])
}

fn shift_up(p: &MPoly, target: &RingRef, k: usize) -> MPoly {
    let map: Vec<usize> = (0..p.nvars()).map(|i| i + k).collect();
    p.embed(target, &map)
}

fn drop_front(p: &MPoly, k: usize, target: &RingRef) -> MPoly {
    MPoly::from_terms(
        target,
        p.terms().map(|(m, c)| {
            debug_assert!(m.exps()[..k].iter().all(|&e| e == 0));
            (Mono::from_exps(m.exps()[k..].to_vec()), c.clone())
        }),
    )
}

/// `I ∩ k[x_k, ..., x_{n-1}]`, returned in the ring of the remaining variables.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let gb = groebner(ideal, &MonomialOrder::elimination(k, n))?;
    let target: RingRef = Ring::new(&ring.names()[k..]);
    let gens = gb
        .basis()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
        .map(|g| drop_front(g, k, &target))
        .collect();
    Ok(Ideal::new(&target, gens))
}

fn eliminate_into(ideal: &Ideal, k: usize, original: &RingRef) -> Result<Ideal, IdealError> {
    let e = eliminate(ideal, k)?;
    // Same variable names; rebuild in the caller's ring handle.
    let gens = e.generators().iter().map(|g| MPoly::from_terms(original, g.terms().map(|(m, c)| (m.clone(), c.clone())))).collect();
    Ok(Ideal::new(original, gens))
}

pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, IdealError> {
    if !crate::algebra::poly::same_ring(a.ring(), b.ring()) {
        return Err(IdealError::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::new(ring, vec![]));
    }
    let ext = front_extended(ring, "_t");
    let t = MPoly::var(&ext, 0);
    let one_minus_t = &MPoly::one(&ext) - &t;
    let mut gens: Vec<MPoly> = a.generators().iter().map(|g| &t * &shift_up(g, &ext, 1)).collect();
    gens.extend(b.generators().iter().map(|g| &one_minus_t * &shift_up(g, &ext, 1)));
    eliminate_into(&Ideal::new(&ext, gens), 1, ring)
}

/// Exact division `h / f` (panics if `f` does not divide `h`).
pub(crate) fn exact_div(h: &MPoly, f: &MPoly) -> MPoly {
    let order = MonomialOrder::grevlex(h.nvars());
    let fs = SortedPoly::from_mpoly(f, &order);
    let mut p = SortedPoly::from_mpoly(h, &order);
    let mut q = MPoly::zero(h.ring());
    while !p.is_zero() {
        let (m, c) = p.terms.last().unwrap().clone();
        assert!(fs.lm().divides(&m), "inexact polynomial division");
        let qm = fs.lm().quotient_of(&m);
        let qc = &c / fs.lc();
        q = &q + &MPoly::monomial(h.ring(), qm.clone(), qc.clone());
        p = p.sub_mul(&qc, &qm, &fs, &order);
    }
    q
}

/// Ideal quotient `I : f`, computed as `(I ∩ (f)) / f`.
pub fn quotient_by_element(ideal: &Ideal, f: &MPoly) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    if f.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    let inter = intersect(ideal, &Ideal::new(ring, vec![f.clone()]))?;
    Ok(Ideal::new(ring, inter.generators().iter().map(|g| exact_div(g, f)).collect()))
}

/// `I : J = ∩ (I : g)` over the generators of `J`.
pub fn quotient(ideal: &Ideal, by: &Ideal) -> Result<Ideal, IdealError> {
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let q = quotient_by_element(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())))
}

fn single_variable(f: &MPoly) -> Option<usize> {
    if f.num_terms() != 1 {
        return None;
    }
    let (m, _) = f.terms().next().unwrap();
    m.pure_power().map(|(i, _)| i)
}

/// `I : x_v^∞` for homogeneous `I`: grevlex basis with `x_v` last, then strip
/// powers of `x_v` from every element.
fn saturate_homogeneous_by_var(ideal: &Ideal, v: usize) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut priority: Vec<usize> = (0..n).filter(|&i| i != v).collect();
    priority.push(v);
    let gb = groebner(ideal, &MonomialOrder::with_priority(OrderKind::Grevlex, priority))?;
    let gens = gb
        .basis()
        .iter()
        .map(|g| {
            let k = g.var_content(v);
            g.div_mono(&Mono::var(n, v, k))
        })
        .collect();
    Ok(Ideal::new(ring, gens))
}

/// `I : f^∞ = (I + (1 - w f)) ∩ k[x]`.
pub fn saturate_by_element(ideal: &Ideal, f: &MPoly) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    if f.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    if ideal.is_homogeneous() {
        if let Some(v) = single_variable(f) {
            return saturate_homogeneous_by_var(ideal, v);
        }
    }
    let ext = front_extended(ring, "_w");
    let w = MPoly::var(&ext, 0);
    let mut gens: Vec<MPoly> = ideal.generators().iter().map(|g| shift_up(g, &ext, 1)).collect();
    gens.push(&MPoly::one(&ext) - &(&w * &shift_up(f, &ext, 1)));
    eliminate_into(&Ideal::new(&ext, gens), 1, ring)
}

/// `I : J^∞ = ∩ (I : g^∞)` over the generators of `J`.
pub fn saturation(ideal: &Ideal, by: &Ideal) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    let gens: Vec<&MPoly> = by.generators().iter().collect();
    if gens.iter().any(|g| g.is_constant()) {
        return Ok(ideal.clone());
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let s = saturate_by_element(ideal, g)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s)?,
        });
    }
    let out = acc.unwrap_or_else(|| Ideal::unit(ring));
    // Return a reduced generating set.
    Ok(out.grevlex()?.to_ideal())
}

/// Saturation by iterating `I_{k+1} = I_k : J` until it stabilizes.
pub fn saturation_by_quotients(ideal: &Ideal, by: &Ideal) -> Result<Ideal, IdealError> {
    let mut current = ideal.grevlex()?.to_ideal();
    loop {
        let next = quotient(&current, by)?.grevlex()?.to_ideal();
        if next.same_as(&current)? {
            return Ok(current);
        }
        current = next;
    }
}

/// Radical membership through the Rabinowitsch trick: `f ∈ √I` iff
/// `1 ∈ I + (1 - w f)`.
pub fn radical_contains(ideal: &Ideal, f: &MPoly) -> Result<bool, IdealError> {
    let ring = ideal.ring();
    let ext = front_extended(ring, "_w");
    let w = MPoly::var(&ext, 0);
    let mut gens: Vec<MPoly> = ideal.generators().iter().map(|g| shift_up(g, &ext, 1)).collect();
    gens.push(&MPoly::one(&ext) - &(&w * &shift_up(f, &ext, 1)));
    Ok(Ideal::new(&ext, gens).grevlex()?.is_unit())
}

/// Krull dimension of `k[x]/I`, `-1` for the unit ideal.
pub fn affine_dimension(ideal: &Ideal) -> Result<i64, IdealError> {
    let gb = ideal.grevlex()?;
    Ok(monomial_krull_dim(&gb.leading_monomials(), ideal.ring().nvars()))
}

/// Vector-space dimension of `k[x]/I` for a zero-dimensional affine ideal.
pub fn zero_dim_degree(ideal: &Ideal) -> Result<u64, IdealError> {
    let gb = ideal.grevlex()?;
    if gb.is_unit() {
        return Ok(0);
    }
    let lms = gb.leading_monomials();
    let n = ideal.ring().nvars();
    let dim = monomial_krull_dim(&lms, n);
    if dim != 0 {
        return Err(IdealError::NotZeroDimensional(dim));
    }
    Ok(count_standard_monomials(&lms, n).expect("zero-dimensional lead ideal"))
}

/// Number of monomials outside the monomial ideal, when finite.
pub(crate) fn count_standard_monomials(lms: &[Mono], n: usize) -> Option<u64> {
    let mut bounds = vec![None; n];
    for m in lms {
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    if lms.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<_>>>()?;
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    loop {
        let m = Mono::from_exps(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                return Some(count);
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

