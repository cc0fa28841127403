//! Buchberger's algorithm with sugar-degree pair selection and the
//! Gebauer-Moeller criteria.

use super::cancel::checkpoint;
use super::error::IdealError;
use super::spoly::{s_poly, SortedPoly};
use super::Ideal;
use crate::algebra::{MPoly, Mono, MonomialOrder, Rat, RingRef};

/// A reduced Groebner basis: monic, auto-reduced, sorted ascending by leading
/// monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    order: MonomialOrder,
    basis: Vec<MPoly>,
    sorted: Vec<SortedPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[MPoly] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.sorted.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.basis.clone())
    }

    /// The unique remainder of `p` modulo the basis.
    pub fn normal_form(&self, p: &MPoly) -> MPoly {
        let sp = SortedPoly::from_mpoly(p, &self.order);
        let refs: Vec<&SortedPoly> = self.sorted.iter().collect();
        full_reduce(sp, &refs, &self.order, None).0.to_mpoly(&self.ring)
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Every S-polynomial of basis pairs reduces to zero.
    pub fn verify_certificate(&self) -> bool {
        let refs: Vec<&SortedPoly> = self.sorted.iter().collect();
        for i in 0..self.sorted.len() {
            for j in (i + 1)..self.sorted.len() {
                let (s, _, _) = s_poly(&self.sorted[i], &self.sorted[j], &self.order);
                if !full_reduce(s, &refs, &self.order, None).0.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Cofactor vectors, one polynomial per original generator.
pub(crate) type Cofactors = Vec<MPoly>;

fn cof_sub_mul(a: &Cofactors, c: &Rat, m: &Mono, b: &Cofactors, ring: &RingRef) -> Cofactors {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            debug_assert!(x.ring().as_ref() == ring.as_ref());
            x - &y.mul_mono(m, c)
        })
        .collect()
}

/// Fully reduce `f` by `basis`; also returns the updated cofactors when
/// tracking is requested (`tracked = Some((cof_f, cof_basis))`).
pub(crate) fn full_reduce(
    f: SortedPoly,
    basis: &[&SortedPoly],
    order: &MonomialOrder,
    tracked: Option<(Cofactors, &[&Cofactors], &RingRef)>,
) -> (SortedPoly, Option<Cofactors>) {
    let mut rem: Vec<(Mono, Rat)> = Vec::new();
    let mut p = f;
    let (mut cof, cof_basis, ring) = match tracked {
        Some((c, b, r)) => (Some(c), Some(b), Some(r)),
        None => (None, None, None),
    };
    while !p.is_zero() {
        let (m, c) = p.terms.last().unwrap().clone();
        match basis.iter().position(|g| g.lm().divides(&m)) {
            Some(k) => {
                let g = basis[k];
                let q = g.lm().quotient_of(&m);
                let coef = &c / g.lc();
                p = p.sub_mul(&coef, &q, g, order);
                if let (Some(cf), Some(cb), Some(r)) = (cof.as_mut(), cof_basis, ring) {
                    *cf = cof_sub_mul(cf, &coef, &q, cb[k], r);
                }
            }
            None => {
                rem.push(p.terms.pop().unwrap());
            }
        }
    }
    rem.reverse();
    (SortedPoly { terms: rem }, cof)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

struct Engine<'a> {
    order: &'a MonomialOrder,
    ring: RingRef,
    polys: Vec<SortedPoly>,
    sugars: Vec<u32>,
    cofs: Option<Vec<Cofactors>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn active_refs(&self) -> (Vec<&SortedPoly>, Vec<usize>) {
        let idx: Vec<usize> = (0..self.polys.len()).filter(|&k| self.active[k]).collect();
        (idx.iter().map(|&k| &self.polys[k]).collect(), idx)
    }

    fn reduce(&self, f: SortedPoly, cof: Option<Cofactors>) -> (SortedPoly, Option<Cofactors>) {
        let (refs, idx) = self.active_refs();
        match (&self.cofs, cof) {
            (Some(all), Some(c)) => {
                let cb: Vec<&Cofactors> = idx.iter().map(|&k| &all[k]).collect();
                full_reduce(f, &refs, self.order, Some((c, &cb, &self.ring)))
            }
            _ => full_reduce(f, &refs, self.order, None),
        }
    }

    /// Insert a new (reduced, nonzero) element and update the pair set.
    fn insert(&mut self, mut h: SortedPoly, sugar: u32, cof: Option<Cofactors>) {
        let lc = h.lc().clone();
        h.make_monic();
        let cof = cof.map(|c| {
            let inv = lc.recip();
            c.iter().map(|p| p.scale(&inv)).collect::<Vec<_>>()
        });
        let hn = self.polys.len();
        let hlm = h.lm().clone();

        // Candidate pairs with active elements.
        let mut cands: Vec<Pair> = Vec::new();
        for g in 0..hn {
            if !self.active[g] {
                continue;
            }
            let glm = self.polys[g].lm();
            let lcm = hlm.lcm(glm);
            let sugar_pair = (sugar + hlm.quotient_of(&lcm).degree())
                .max(self.sugars[g] + glm.quotient_of(&lcm).degree());
            cands.push(Pair { i: g, j: hn, lcm, sugar: sugar_pair });
        }
        // Criterion M/F: drop a candidate whose lcm is a proper multiple of
        // another candidate's lcm, or equal to an earlier one.
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].lcm.divides(&cands[a].lcm) && (cands[b].lcm != cands[a].lcm || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // Product criterion.
        let mut fresh = Vec::new();
        for (k, p) in cands.into_iter().enumerate() {
            if keep[k] && !self.polys[p.i].lm().is_coprime(&hlm) {
                fresh.push(p);
            }
        }
        // Criterion B on old pairs.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = polys[p.i].lm().lcm(&hlm);
            let lj = polys[p.j].lm().lcm(&hlm);
            !(hlm.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        self.pairs.extend(fresh);

        for g in 0..hn {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.sugars.push(sugar);
        self.active.push(true);
        if let Some(all) = self.cofs.as_mut() {
            all.push(cof.expect("cofactors tracked"));
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }
}

pub(crate) struct RawBasis {
    pub polys: Vec<SortedPoly>,
    pub cofs: Option<Vec<Cofactors>>,
}

pub(crate) fn buchberger(
    ring: &RingRef,
    gens: &[MPoly],
    order: &MonomialOrder,
    track: bool,
) -> Result<RawBasis, IdealError> {
    let n = gens.len();
    let mut engine = Engine {
        order,
        ring: ring.clone(),
        polys: Vec::new(),
        sugars: Vec::new(),
        cofs: if track { Some(Vec::new()) } else { None },
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut inputs: Vec<(usize, SortedPoly)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(k, g)| (k, SortedPoly::from_mpoly(g, order)))
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.1.lm(), b.1.lm()).then(a.0.cmp(&b.0)));
    for (k, f) in inputs {
        checkpoint()?;
        let sugar = f.degree();
        let cof = track.then(|| {
            (0..n)
                .map(|i| if i == k { MPoly::one(ring) } else { MPoly::zero(ring) })
                .collect::<Vec<_>>()
        });
        let (h, cof) = engine.reduce(f, cof);
        if !h.is_zero() {
            engine.insert(h, sugar, cof);
        }
    }
    while let Some(pair) = engine.pop_pair() {
        checkpoint()?;
        let (s, (cf, mf), (cg, mg)) = s_poly(&engine.polys[pair.i], &engine.polys[pair.j], order);
        let cof = engine.cofs.as_ref().map(|all| {
            all[pair.i]
                .iter()
                .zip(&all[pair.j])
                .map(|(a, b)| &a.mul_mono(&mf, &cf) - &b.mul_mono(&mg, &cg))
                .collect::<Vec<_>>()
        });
        let (h, cof) = engine.reduce(s, cof);
        if !h.is_zero() {
            engine.insert(h, pair.sugar, cof);
        }
    }
    // Minimal basis from the active elements, then inter-reduce.
    let idx: Vec<usize> = (0..engine.polys.len()).filter(|&k| engine.active[k]).collect();
    let mut polys: Vec<SortedPoly> = idx.iter().map(|&k| engine.polys[k].clone()).collect();
    let mut cofs: Option<Vec<Cofactors>> = engine.cofs.as_ref().map(|all| idx.iter().map(|&k| all[k].clone()).collect());
    let mut perm: Vec<usize> = (0..polys.len()).collect();
    perm.sort_by(|&a, &b| order.cmp(polys[a].lm(), polys[b].lm()));
    polys = perm.iter().map(|&k| polys[k].clone()).collect();
    cofs = cofs.map(|c| perm.iter().map(|&k| c[k].clone()).collect());

    for k in 0..polys.len() {
        checkpoint()?;
        let mut head = SortedPoly { terms: vec![polys[k].terms.last().unwrap().clone()] };
        let tail = SortedPoly { terms: polys[k].terms[..polys[k].terms.len() - 1].to_vec() };
        let others: Vec<&SortedPoly> = (0..polys.len()).filter(|&o| o != k).map(|o| &polys[o]).collect();
        let (tail_red, new_cof) = match &cofs {
            Some(all) => {
                let cb: Vec<&Cofactors> = (0..polys.len()).filter(|&o| o != k).map(|o| &all[o]).collect();
                full_reduce(tail, &others, order, Some((all[k].clone(), &cb, ring)))
            }
            None => full_reduce(tail, &others, order, None),
        };
        let mut terms = tail_red.terms;
        terms.append(&mut head.terms);
        let mut p = SortedPoly { terms };
        let lc = p.lc().clone();
        p.make_monic();
        polys[k] = p;
        if let (Some(all), Some(c)) = (cofs.as_mut(), new_cof) {
            let inv = lc.recip();
            all[k] = c.iter().map(|x| x.scale(&inv)).collect();
        }
    }
    Ok(RawBasis { polys, cofs })
}

/// Reduced Groebner basis of `ideal` with respect to `order`.
pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, IdealError> {
    assert!(order.is_global(), "Buchberger requires a global order; use local::standard_basis");
    assert_eq!(order.nvars(), ideal.ring().nvars(), "order and ring sizes differ");
    let raw = buchberger(ideal.ring(), ideal.generators(), order, false)?;
    Ok(from_sorted(ideal.ring(), order, raw.polys))
}

pub(crate) fn from_sorted(ring: &RingRef, order: &MonomialOrder, sorted: Vec<SortedPoly>) -> GroebnerBasis {
    let basis = sorted.iter().map(|p| p.to_mpoly(ring)).collect();
    GroebnerBasis { ring: ring.clone(), order: order.clone(), basis, sorted }
}

/// Express `f` as a combination of the generators of `ideal`, if it is a
/// member.
pub fn lift(ideal: &Ideal, f: &MPoly, order: &MonomialOrder) -> Result<Option<Vec<MPoly>>, IdealError> {
    let ring = ideal.ring();
    let gens = ideal.generators();
    let raw = buchberger(ring, gens, order, true)?;
    let cofs = raw.cofs.expect("tracked");
    let refs: Vec<&SortedPoly> = raw.polys.iter().collect();
    let cb: Vec<&Cofactors> = cofs.iter().collect();
    let start: Cofactors = vec![MPoly::zero(ring); gens.len()];
    let (rem, cof) = full_reduce(SortedPoly::from_mpoly(f, order), &refs, order, Some((start, &cb, ring)));
    if !rem.is_zero() {
        return Ok(None);
    }
    // Reduction tracked f - sum(q_k g_k) = 0 as cof = -sum(q_k cof_k).
    Ok(Some(cof.unwrap().iter().map(|p| -p).collect()))
}
