//! Hilbert series of monomial ideals and the derived projective invariants.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::error::IdealError;
use super::ops::saturation;
use super::Ideal;
use crate::algebra::{Mono, Rat, UPoly};

/// Invariants of the projective scheme `Proj k[x]/I`.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertData {
    /// Projective dimension; `-1` for the empty scheme.
    pub dim_proj: i64,
    pub degree: u64,
    /// Hilbert polynomial in `s`.
    pub hilbert_poly: UPoly,
    /// Arithmetic genus, present only for curves.
    pub p_a: Option<i64>,
    /// Numerator of the Hilbert series over `(1 - t)^n`, ascending powers of `t`.
    pub numerator: Vec<BigInt>,
}

fn minimalize(gens: &[Mono]) -> Vec<Mono> {
    let mut sorted: Vec<Mono> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    sorted.dedup();
    let mut out: Vec<Mono> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Numerator `N(t)` with `HS(k[x]/M) = N(t) / (1 - t)^n`, by pivoting on a
/// variable of a mixed generator.
pub fn hilbert_numerator(gens: &[Mono], n: usize) -> Vec<BigInt> {
    trim(numerator_rec(minimalize(gens), n))
}

fn numerator_rec(gens: Vec<Mono>, n: usize) -> Vec<BigInt> {
    if gens.iter().any(|m| m.is_one()) {
        return vec![BigInt::zero()];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![BigInt::one()];
        for m in &gens {
            let mut f = vec![BigInt::zero(); m.degree() as usize + 1];
            f[0] = BigInt::one();
            f[m.degree() as usize] -= BigInt::one();
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // Pivot on the variable occurring in the most non-pure generators.
    let mut counts = vec![0usize; n];
    for m in gens.iter().filter(|m| m.pure_power().is_none()) {
        for v in m.support() {
            counts[v] += 1;
        }
    }
    let v = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let pivot = Mono::var(n, v, 1);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let mut result = numerator_rec(minimalize(&with_pivot), n);

    let colon: Vec<Mono> = gens
        .iter()
        .map(|m| {
            let mut e = m.exps().to_vec();
            e[v] = e[v].saturating_sub(1);
            Mono::from_exps(e)
        })
        .collect();
    let colon_part = numerator_rec(minimalize(&colon), n);
    poly_add_shifted(&mut result, &colon_part, 1);
    result
}

/// Krull dimension of `k[x]/M` for a monomial ideal `M`.
pub(crate) fn monomial_krull_dim(gens: &[Mono], n: usize) -> i64 {
    let num = hilbert_numerator(gens, n);
    if num.iter().all(|c| c.is_zero()) {
        return -1;
    }
    let (_, k) = divide_out_one_minus_t(num);
    n as i64 - k as i64
}

/// Returns `(Q, k)` with `N = (1 - t)^k Q` and `Q(1) != 0`.
fn divide_out_one_minus_t(mut num: Vec<BigInt>) -> (Vec<BigInt>, usize) {
    let mut k = 0;
    loop {
        let at_one: BigInt = num.iter().sum();
        if !at_one.is_zero() || num.len() <= 1 {
            return (num, k);
        }
        // Synthetic division by (t - 1), then negate.
        let deg = num.len() - 1;
        let mut q = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..deg).rev() {
            carry += &num[i + 1];
            q[i] = -carry.clone();
        }
        num = trim(q);
        k += 1;
    }
}

/// Binomial `C(s + a, r)` as a polynomial in `s`.
fn shifted_binomial(a: i64, r: usize) -> UPoly {
    let mut acc = UPoly::one();
    for j in 0..r {
        let factor = UPoly::new(vec![Rat::from_integer(BigInt::from(a - j as i64)), Rat::one()]);
        acc = acc.mul(&factor);
    }
    let mut fact = BigInt::one();
    for j in 1..=r {
        fact *= j;
    }
    acc.scale(&Rat::new(BigInt::one(), fact))
}

/// Hilbert data from the lead-term ideal of a grevlex basis. With `saturate`
/// the ideal is first saturated by the irrelevant ideal.
pub fn hilbert_data(ideal: &Ideal, saturate: bool) -> Result<HilbertData, IdealError> {
    if !ideal.is_homogeneous() {
        return Err(IdealError::NotHomogeneous);
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let work = if saturate { saturation(ideal, &Ideal::maximal_at_origin(ring))? } else { ideal.clone() };
    let gb = work.grevlex()?;
    let numerator = hilbert_numerator(&gb.leading_monomials(), n);
    Ok(from_numerator(numerator, n))
}

pub(crate) fn from_numerator(numerator: Vec<BigInt>, n: usize) -> HilbertData {
    if numerator.iter().all(|c| c.is_zero()) {
        return HilbertData { dim_proj: -1, degree: 0, hilbert_poly: UPoly::zero(), p_a: None, numerator };
    }
    let (q, k) = divide_out_one_minus_t(numerator.clone());
    let r = n - k;
    let degree: BigInt = q.iter().sum();
    let mut hp = UPoly::zero();
    if r > 0 {
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            // C(s - i + r - 1, r - 1)
            let term = shifted_binomial(r as i64 - 1 - i as i64, r - 1);
            hp = hp.add(&term.scale(&Rat::from_integer(qi.clone())));
        }
    }
    let dim_proj = r as i64 - 1;
    let p_a = if dim_proj == 1 {
        let v = Rat::one() - hp.eval(&Rat::zero());
        Some(v.to_integer().to_i64().expect("genus fits in i64"))
    } else {
        None
    };
    HilbertData {
        dim_proj,
        degree: degree.abs().to_u64().expect("degree fits in u64"),
        hilbert_poly: hp,
        p_a,
        numerator,
    }
}

impl HilbertData {
    /// Value of the Hilbert function at `t` read off the series.
    pub fn series_coefficient(&self, t: usize, n: usize) -> BigInt {
        // coefficient of t^t in N(t) / (1 - t)^n
        let mut acc = BigInt::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            if i > t {
                break;
            }
            acc += c * binomial(t - i + n - 1, n.saturating_sub(1));
        }
        acc
    }
}

fn binomial(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for j in 0..b {
        r = r * (a - j) / (j + 1);
    }
    r
}
