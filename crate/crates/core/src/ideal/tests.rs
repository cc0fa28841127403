use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hilbert::hilbert_numerator;
use super::*;
use crate::algebra::{int, MPoly, Mono, MonomialOrder, Rat, Ring, RingRef};

fn ideal(ring: &RingRef, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| MPoly::parse(ring, g).unwrap()).collect())
}

fn p(ring: &RingRef, s: &str) -> MPoly {
    MPoly::parse(ring, s).unwrap()
}

fn xyz() -> RingRef {
    Ring::new(&["x", "y", "z"])
}

fn p3() -> RingRef {
    Ring::indexed("x", 4)
}

// Naive completion: add every nonzero remainder of every S-polynomial, no
// criteria, plain division with an arbitrary reducer choice.
fn naive_remainder(f: &MPoly, basis: &[MPoly], order: &MonomialOrder) -> MPoly {
    let mut f = f.clone();
    let mut rem = MPoly::zero(f.ring());
    while !f.is_zero() {
        let (m, c) = {
            let (m, c) = f.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        match basis.iter().find(|g| g.leading_term(order).unwrap().0.divides(&m)) {
            Some(g) => {
                let (gm, gc) = g.leading_term(order).unwrap();
                f = &f - &g.mul_mono(&gm.quotient_of(&m), &(&c / gc));
            }
            None => {
                let t = MPoly::monomial(f.ring(), m, c);
                rem = &rem + &t;
                f = &f - &t;
            }
        }
    }
    rem
}

fn naive_groebner(gens: &[MPoly], order: &MonomialOrder) -> Vec<MPoly> {
    let mut basis: Vec<MPoly> = gens.to_vec();
    loop {
        let mut added = false;
        let snapshot = basis.clone();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let (a, b) = (&snapshot[i], &snapshot[j]);
                let (am, ac) = a.leading_term(order).unwrap();
                let (bm, bc) = b.leading_term(order).unwrap();
                let l = am.lcm(bm);
                let s = &a.mul_mono(&am.quotient_of(&l), &ac.recip()) - &b.mul_mono(&bm.quotient_of(&l), &bc.recip());
                let r = naive_remainder(&s, &basis, order);
                if !r.is_zero() {
                    basis.push(r);
                    added = true;
                }
            }
        }
        if !added {
            return basis;
        }
    }
}

#[test]
fn groebner_examples() {
    let r = xyz();
    let gb = ideal(&r, &["x", "y"]).grevlex().unwrap();
    assert_eq!(gb.basis(), &[p(&r, "y"), p(&r, "x")]);
    let gb = ideal(&r, &["x", "1 + x"]).grevlex().unwrap();
    assert!(gb.is_unit());
    assert_eq!(gb.basis(), &[MPoly::one(&r)]);
}

#[test]
fn lex_basis_matches_naive_completion() {
    let r = xyz();
    let lex = MonomialOrder::lex(3);
    let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
    let gb = groebner(&i, &lex).unwrap();
    for want in ["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"] {
        assert!(gb.basis().contains(&p(&r, want)), "missing {want}");
    }
    let naive = naive_groebner(i.generators(), &lex);
    for g in &naive {
        assert!(gb.contains(g));
    }
    for g in gb.basis() {
        assert!(naive_remainder(g, &naive, &lex).is_zero());
    }
    assert!(gb.verify_certificate());
}

#[test]
fn normal_form_examples() {
    let r = xyz();
    let gb = ideal(&r, &["x", "y"]).grevlex().unwrap();
    assert!(gb.normal_form(&p(&r, "x^2*y")).is_zero());
    let gb1 = ideal(&r, &["x"]).grevlex().unwrap();
    assert_eq!(gb1.normal_form(&p(&r, "x + 1")), MPoly::one(&r));
    let lex = groebner(&ideal(&r, &["x^2 - y", "x^3 - z"]), &MonomialOrder::lex(3)).unwrap();
    assert_eq!(lex.normal_form(&p(&r, "y^3")), p(&r, "z^2"));
}

#[test]
fn lift_recovers_membership_certificate() {
    let r = xyz();
    let i = ideal(&r, &["x^2 - y", "x*y - z"]);
    let f = &(&p(&r, "x*y") * &i.generators()[0]) + &(&p(&r, "y + 1") * &i.generators()[1]);
    let cof = lift(&i, &f, &MonomialOrder::grevlex(3)).unwrap().expect("member");
    let mut acc = MPoly::zero(&r);
    for (c, g) in cof.iter().zip(i.generators()) {
        acc = &acc + &(c * g);
    }
    assert_eq!(acc, f);
    assert!(lift(&i, &p(&r, "x"), &MonomialOrder::grevlex(3)).unwrap().is_none());
}

#[test]
fn saturation_examples() {
    let r = Ring::new(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    let by_x = saturation(&i, &ideal(&r, &["x"])).unwrap();
    assert!(by_x.is_unit().unwrap());
    let by_y = saturation(&i, &ideal(&r, &["y"])).unwrap();
    assert!(by_y.same_as(&ideal(&r, &["x"])).unwrap());
    assert!(saturation_by_quotients(&i, &ideal(&r, &["y"])).unwrap().same_as(&by_y).unwrap());

    let r = xyz();
    let i = ideal(&r, &["x*z", "y*z"]);
    let m = Ideal::maximal_at_origin(&r);
    assert!(saturation(&i, &m).unwrap().same_as(&i).unwrap());
    let s = saturation(&i, &ideal(&r, &["z"])).unwrap();
    assert!(s.same_as(&ideal(&r, &["x", "y"])).unwrap());
    let s2 = saturation(&i, &ideal(&r, &["x", "y"])).unwrap();
    assert!(s2.same_as(&ideal(&r, &["z"])).unwrap());
    assert!(saturation_by_quotients(&i, &ideal(&r, &["x", "y"])).unwrap().same_as(&s2).unwrap());
}

#[test]
fn saturation_non_homogeneous_matches_iterated_quotients() {
    let r = xyz();
    let i = ideal(&r, &["x*(y - 1)^2", "x^2*z - x*z", "y*z^2 - z^2"]);
    let j = ideal(&r, &["y - 1", "z"]);
    let a = saturation(&i, &j).unwrap();
    let b = saturation_by_quotients(&i, &j).unwrap();
    assert!(a.same_as(&b).unwrap());
    assert!(i.is_subset_of(&a).unwrap());
    assert!(saturation(&a, &j).unwrap().same_as(&a).unwrap());
}

#[test]
fn affine_example_scheme() {
    // ω = y²z-type example: singular ideal (xy, xz, y^2... ) style check of
    // I = (x, y) ∩ (x, z, y^2).
    let r = xyz();
    let a = ideal(&r, &["x", "y"]);
    let b = ideal(&r, &["x", "z", "y^2"]);
    let i = intersect(&a, &b).unwrap();
    assert!(i.same_as(&ideal(&r, &["x", "y^2", "y*z"])).unwrap());
    assert!(quotient(&i, &a).unwrap().same_as(&ideal(&r, &["x", "y", "z"])).unwrap());
    assert!(quotient_by_element(&i, &p(&r, "z")).unwrap().same_as(&a).unwrap());
}

#[test]
fn intersection_and_radical() {
    let r = Ring::new(&["x", "y"]);
    let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert!(i.same_as(&ideal(&r, &["x*y"])).unwrap());
    let sq = ideal(&r, &["x^2", "y^3"]);
    assert!(radical_contains(&sq, &p(&r, "x + y")).unwrap());
    assert!(!radical_contains(&sq, &p(&r, "x + 1")).unwrap());
}

#[test]
fn elimination_projects() {
    let r = Ring::new(&["t", "x", "y"]);
    let e = eliminate(&ideal(&r, &["x - t^2", "y - t^3"]), 1).unwrap();
    assert_eq!(e.ring().names(), &["x".to_string(), "y".to_string()]);
    let rr = e.ring().clone();
    assert!(e.same_as(&ideal(&rr, &["x^3 - y^2"])).unwrap());
}

// Hilbert function by counting monomials of degree t outside the lead ideal.
fn brute_hilbert(lms: &[Mono], n: usize, t: u32) -> u64 {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, lms: &[Mono], count: &mut u64) {
        if prefix.len() == n - 1 {
            prefix.push(left);
            let m = Mono::from_exps(prefix.clone());
            if !lms.iter().any(|l| l.divides(&m)) {
                *count += 1;
            }
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, lms, count);
            prefix.pop();
        }
    }
    let mut count = 0;
    rec(n, t, &mut Vec::new(), lms, &mut count);
    count
}

fn check_against_brute(i: &Ideal) -> HilbertData {
    let n = i.ring().nvars();
    let hd = hilbert_data(i, false).unwrap();
    let lms = i.grevlex().unwrap().leading_monomials();
    for t in 0..=8u32 {
        assert_eq!(hd.series_coefficient(t as usize, n), BigInt::from(brute_hilbert(&lms, n, t)), "degree {t}");
    }
    hd
}

#[test]
fn hilbert_examples() {
    let r = p3();
    let line = check_against_brute(&ideal(&r, &["x0", "x1"]));
    assert_eq!((line.dim_proj, line.degree, line.p_a), (1, 1, Some(0)));

    let six = check_against_brute(&ideal(&r, &["x0*x1*x2", "x0*x1*x3", "x0*x2*x3", "x1*x2*x3"]));
    assert_eq!((six.dim_proj, six.degree, six.p_a), (1, 6, Some(3)));

    let cubic = ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
    let hd = check_against_brute(&cubic);
    assert_eq!((hd.dim_proj, hd.degree, hd.p_a), (1, 3, Some(0)));
    // Interpolate P(t) = a t + b from brute counts at t = 5, 6.
    let lms = cubic.grevlex().unwrap().leading_monomials();
    let h5 = brute_hilbert(&lms, 4, 5) as i64;
    let h6 = brute_hilbert(&lms, 4, 6) as i64;
    let (a, b) = (h6 - h5, h5 - 5 * (h6 - h5));
    assert_eq!(hd.hilbert_poly.coeffs(), &[int(b), int(a)]);

    let point = check_against_brute(&ideal(&r, &["x0", "x1", "x2"]));
    assert_eq!((point.dim_proj, point.degree, point.p_a), (0, 1, None));
}

#[test]
fn hilbert_saturates_on_request() {
    let r = p3();
    let line_with_embedded = ideal(&r, &["x0", "x1^2", "x1*x2", "x1*x3"]);
    let hd = hilbert_data(&line_with_embedded, true).unwrap();
    assert_eq!((hd.dim_proj, hd.degree, hd.p_a), (1, 1, Some(0)));
}

#[test]
fn numerator_of_complete_intersection() {
    // (x^2, y^3) in 2 variables: (1 - t^2)(1 - t^3).
    let n = hilbert_numerator(&[Mono::from_exps(vec![2, 0]), Mono::from_exps(vec![0, 3])], 2);
    let want: Vec<BigInt> = [1, 0, -1, -1, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(n, want);
}

#[test]
fn zero_dim_degree_examples() {
    let r = xyz();
    assert_eq!(zero_dim_degree(&ideal(&r, &["x", "y^2", "z"])).unwrap(), 2);
    let r2 = Ring::new(&["x", "y"]);
    assert_eq!(zero_dim_degree(&ideal(&r2, &["x^2 - 1", "y"])).unwrap(), 2);
    assert_eq!(zero_dim_degree(&ideal(&r2, &["x^2", "y^2"])).unwrap(), 4);
    assert!(matches!(zero_dim_degree(&ideal(&r, &["x", "y"])), Err(IdealError::NotZeroDimensional(1))));
}

// dim k[x]/(I + m^N) as N grows; equals the local multiplicity once stable.
fn truncation_oracle(i: &Ideal, n_max: u32) -> Option<u64> {
    let r = i.ring();
    let n = r.nvars();
    let mut prev = None;
    for big_n in 1..=n_max {
        let mut gens = i.generators().to_vec();
        let mut stack = vec![(0usize, vec![0u32; n], big_n)];
        while let Some((k, exps, left)) = stack.pop() {
            if k == n - 1 {
                let mut e = exps.clone();
                e[k] = left;
                gens.push(MPoly::monomial(r, Mono::from_exps(e), Rat::from_integer(1.into())));
                continue;
            }
            for a in 0..=left {
                let mut e = exps.clone();
                e[k] = a;
                stack.push((k + 1, e, left - a));
            }
        }
        let v = zero_dim_degree(&Ideal::new(r, gens)).unwrap();
        if prev == Some(v) && big_n >= 4 {
            return Some(v);
        }
        prev = Some(v);
    }
    None
}

#[test]
fn local_multiplicity_examples() {
    let r = xyz();
    let zero = vec![Rat::from_integer(0.into()); 3];
    assert_eq!(local_multiplicity(&ideal(&r, &["x", "y", "z^3"]), &zero).unwrap(), LocalMultiplicity::Finite(3));
    assert_eq!(local_multiplicity(&ideal(&r, &["x", "y"]), &zero).unwrap(), LocalMultiplicity::Infinite);
    let r2 = Ring::new(&["x", "y"]);
    let z2 = vec![Rat::from_integer(0.into()); 2];
    let i = ideal(&r2, &["x^2 - y^3", "y"]);
    assert_eq!(local_multiplicity(&i, &z2).unwrap(), LocalMultiplicity::Finite(2));
    assert_eq!(truncation_oracle(&i, 8), Some(2));
}

#[test]
fn local_multiplicities_sum_to_global_degree() {
    let r = Ring::new(&["x", "y"]);
    // points: (0,0) with multiplicity 3 on y = x^3 meeting y = 0, and (1, 0).
    let i = ideal(&r, &["y", "x^3*(x - 1)"]);
    let at0 = local_multiplicity(&i, &[int(0), int(0)]).unwrap();
    let at1 = local_multiplicity(&i, &[int(1), int(0)]).unwrap();
    assert_eq!((at0.clone(), at1.clone()), (LocalMultiplicity::Finite(3), LocalMultiplicity::Finite(1)));
    assert_eq!(zero_dim_degree(&i).unwrap(), 4);
    assert_eq!(local_multiplicity(&i, &[int(2), int(0)]).unwrap(), LocalMultiplicity::Finite(0));
}

#[test]
fn local_multiplicity_matches_truncation_oracle() {
    let r = Ring::new(&["x", "y"]);
    for gens in [["x^2 + y^3", "x*y^2"], ["x^3 - y^2 + x*y^3", "x*y + y^4"], ["x^2*y + y^5", "x^3 - x*y^2"]] {
        let i = ideal(&r, &gens);
        let mora = local_multiplicity(&i, &[int(0), int(0)]).unwrap();
        assert_eq!(mora.finite(), truncation_oracle(&i, 12), "{gens:?}");
    }
}

fn random_linear_change(rng: &mut ChaCha8Rng, r: &RingRef) -> Vec<MPoly> {
    let n = r.nvars();
    loop {
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let det = if n == 2 {
            m[0][0] * m[1][1] - m[0][1] * m[1][0]
        } else {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        };
        if det != 0 {
            return m
                .iter()
                .map(|row| {
                    row.iter().enumerate().fold(MPoly::zero(r), |acc, (j, &c)| &acc + &MPoly::var(r, j).scale(&int(c)))
                })
                .collect();
        }
    }
}

#[test]
fn local_multiplicity_is_coordinate_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let r = xyz();
    let zero = vec![int(0); 3];
    let cases = [ideal(&r, &["x*y", "y*z", "x*z + y^2", "x^2 + z^3"]), ideal(&r, &["x^2 + y^2 + z^2", "x*y*z", "y^3 - z^2"])];
    for i in &cases {
        let base = local_multiplicity(i, &zero).unwrap();
        assert!(base.finite().is_some());
        for _ in 0..10 {
            let change = random_linear_change(&mut rng, &r);
            let moved = i.map(&r, &change).unwrap();
            assert_eq!(local_multiplicity(&moved, &zero).unwrap(), base);
        }
    }
}

#[test]
fn cancellation_stops_buchberger() {
    let r = p3();
    let token = CancelToken::new();
    token.cancel();
    let i = ideal(&r, &["x0^3 - x1*x2*x3", "x1^3 - x0*x2^2", "x2^3 - x0^2*x3"]);
    let res = token.scope(|| i.grevlex());
    assert!(matches!(res, Err(IdealError::Cancelled)));
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..=3), 1..5)
}

fn build(r: &RingRef, terms: &[(Vec<u32>, i64)]) -> MPoly {
    MPoly::from_terms(r, terms.iter().map(|(e, c)| (Mono::from_exps(e.clone()), int(*c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn buchberger_certificate_and_membership(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3), u in arb_poly(3), v in arb_poly(3)) {
        let r = xyz();
        let gens: Vec<MPoly> = [&a, &b, &c].iter().map(|t| build(&r, t)).collect();
        let i = Ideal::new(&r, gens.clone());
        prop_assume!(!i.is_zero());
        let gb = i.grevlex().unwrap();
        prop_assert!(gb.verify_certificate());
        let member = &(&build(&r, &u) * &gens[0]) + &(&build(&r, &v) * &gens[1]);
        prop_assert!(gb.normal_form(&member).is_zero());
        let nf = gb.normal_form(&build(&r, &u));
        prop_assert_eq!(gb.normal_form(&nf), nf);
    }

    #[test]
    fn hilbert_matches_brute_force(gens in prop::collection::vec(prop::collection::vec(0u32..4, 4), 1..5)) {
        let lms: Vec<Mono> = gens.into_iter().map(Mono::from_exps).filter(|m| !m.is_one()).collect();
        prop_assume!(!lms.is_empty());
        let num = hilbert_numerator(&lms, 4);
        let hd = super::hilbert::from_numerator(num, 4);
        for t in 0..=8u32 {
            prop_assert_eq!(hd.series_coefficient(t as usize, 4), BigInt::from(brute_hilbert(&lms, 4, t)));
        }
    }
}

#[test]
fn random_ideals_keep_deterministic_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = xyz();
    for _ in 0..5 {
        let gens: Vec<MPoly> = (0..3)
            .map(|_| {
                MPoly::from_terms(
                    &r,
                    (0..3).map(|_| (Mono::from_exps((0..3).map(|_| rng.gen_range(0..3)).collect()), int(rng.gen_range(-3..=3)))),
                )
            })
            .collect();
        let a = Ideal::new(&r, gens.clone()).grevlex().unwrap();
        let mut rev = gens;
        rev.reverse();
        let b = Ideal::new(&r, rev).grevlex().unwrap();
        assert_eq!(a, b);
    }
}
