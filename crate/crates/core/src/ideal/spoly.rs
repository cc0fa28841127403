//! Order-sorted polynomial representation used by the reduction engines.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::algebra::{MPoly, Mono, MonomialOrder, Rat, RingRef};

/// Terms sorted ascending by the monomial order, so the leading term is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Mono, Rat)>,
}

impl SortedPoly {
    pub fn from_mpoly(p: &MPoly, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Mono, Rat)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub fn to_mpoly(&self, ring: &RingRef) -> MPoly {
        MPoly::from_terms(ring, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms.last().expect("leading monomial of zero polynomial").0
    }

    pub fn lc(&self) -> &Rat {
        &self.terms.last().expect("leading coefficient of zero polynomial").1
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Total degree minus the degree of the leading monomial.
    pub fn ecart(&self) -> u32 {
        self.degree() - self.lm().degree()
    }

    pub fn scale(&mut self, c: &Rat) {
        for (_, a) in self.terms.iter_mut() {
            *a *= c;
        }
    }

    pub fn make_monic(&mut self) {
        if self.is_zero() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        self.scale(&inv);
    }

    /// `self - c * m * g`.
    pub fn sub_mul(&self, c: &Rat, m: &Mono, g: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<Mono> = None;
        while i < a.len() || j < b.len() {
            if j < b.len() && shifted.is_none() {
                shifted = Some(b[j].0.mul(m));
            }
            let ord = match (i < a.len(), j < b.len()) {
                (true, true) => order.cmp(&a[i].0, shifted.as_ref().unwrap()),
                (true, false) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((shifted.take().unwrap(), -(c * &b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].1 - c * &b[j].1;
                    let mono = shifted.take().unwrap();
                    if !v.is_zero() {
                        out.push((mono, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SortedPoly { terms: out }
    }

    pub fn mul_term(&self, c: &Rat, m: &Mono) -> SortedPoly {
        SortedPoly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }
}

/// S-polynomial of `f` and `g`, with the multipliers `(1/lc, lcm/lm)` used on
/// each side.
pub(crate) fn s_poly(
    f: &SortedPoly,
    g: &SortedPoly,
    order: &MonomialOrder,
) -> (SortedPoly, (Rat, Mono), (Rat, Mono)) {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l);
    let mg = g.lm().quotient_of(&l);
    let cf = f.lc().recip();
    let cg = g.lc().recip();
    let left = f.mul_term(&cf, &mf);
    let s = left.sub_mul(&cg, &mg, g, order);
    (s, (cf, mf), (cg, mg))
}
