use proptest::prelude::*;

use super::*;
use crate::algebra::{int, MPoly, Mono, Rat, Ring, RingRef};

fn p(r: &RingRef, s: &str) -> MPoly {
    MPoly::parse(r, s).unwrap()
}

fn xyz() -> RingRef {
    Ring::new(&["x", "y", "z"])
}

fn p3() -> RingRef {
    Ring::indexed("x", 4)
}

fn one_form(r: &RingRef, cs: &[&str]) -> PolyForm {
    PolyForm::one_form(r, cs.iter().map(|c| p(r, c)).collect())
}

fn tetra(l: [i64; 4]) -> PolyForm {
    let r = p3();
    let all = p(&r, "x0*x1*x2*x3");
    let coeffs = (0..4).map(|i| all.div_mono(&Mono::var(4, i, 1)).scale(&int(l[i]))).collect();
    PolyForm::one_form(&r, coeffs)
}

#[test]
fn wedge_examples() {
    let r = xyz();
    let dx = PolyForm::dx(&r, 0);
    assert!(dx.wedge(&dx).unwrap().is_zero());
    let xdy = PolyForm::dx(&r, 1).mul_function(&p(&r, "x"));
    let dz = PolyForm::dx(&r, 2);
    assert_eq!(xdy.wedge(&dz).unwrap().to_string(), "x*dy^dz");
    let a = dz.add(&xdy).unwrap();
    let dxdy = PolyForm::dx(&r, 0).wedge(&PolyForm::dx(&r, 1)).unwrap();
    assert_eq!(a.wedge(&dxdy).unwrap(), PolyForm::volume(&r));
    let vol = PolyForm::volume(&r);
    assert!(matches!(vol.wedge(&dx), Err(FormError::GradeOverflow { grade: 4, n: 3 })));
}

#[test]
fn ext_d_examples() {
    let r = xyz();
    let xdy = PolyForm::dx(&r, 1).mul_function(&p(&r, "x"));
    assert_eq!(xdy.ext_d().unwrap().to_string(), "dx^dy");
    assert!(one_form(&r, &["x", "y", "z"]).ext_d().unwrap().is_zero());
    let (l0, l1, l2, l3) = (1, 2, -1, -2);
    let dw = tetra([l0, l1, l2, l3]).ext_d().unwrap();
    let c23 = dw.component(&[2, 3]);
    assert_eq!(c23, p(&p3(), "x0*x1").scale(&int(l3 - l2)));
}

#[test]
fn contract_examples() {
    let r = xyz();
    let dz_field = PolyVectorField::new(&r, vec![MPoly::zero(&r), MPoly::zero(&r), MPoly::one(&r)]);
    let dxdy = PolyForm::dx(&r, 0).wedge(&PolyForm::dx(&r, 1)).unwrap();
    assert_eq!(PolyForm::volume(&r).contract(&dz_field).unwrap(), dxdy);
    let rr = p3();
    let pencil = one_form(&rr, &["-x1", "x0", "0", "0"]);
    assert!(pencil.contract(&PolyVectorField::radial(&rr)).unwrap().is_zero());
    let rad = PolyVectorField::radial(&rr);
    let lhs = pencil.ext_d().unwrap().contract(&rad).unwrap();
    assert_eq!(lhs, pencil.scale(&int(2)));
    assert!(matches!(PolyForm::function(p(&r, "x")).contract(&dz_field), Err(FormError::GradeZero)));
}

#[test]
fn rot_examples() {
    let r = xyz();
    assert!(rot(&one_form(&r, &["x", "y", "z"])).unwrap().is_zero());
    let x = rot(&one_form(&r, &["0", "x", "0"])).unwrap();
    assert_eq!(x.components(), &[MPoly::zero(&r), MPoly::zero(&r), MPoly::one(&r)]);
    let (l1, l2, l3) = (3, -1, 5);
    let w = PolyForm::one_form(&r, vec![p(&r, "y*z").scale(&int(l1)), p(&r, "x*z").scale(&int(l2)), p(&r, "x*y").scale(&int(l3))]);
    let x = rot(&w).unwrap();
    assert_eq!(
        x.components(),
        &[p(&r, "x").scale(&int(l3 - l2)), p(&r, "y").scale(&int(l1 - l3)), p(&r, "z").scale(&int(l2 - l1))]
    );
    assert!(matches!(rot(&tetra([1, 1, 1, -3])), Err(FormError::WrongVariableCount { .. })));
}

#[test]
fn validation_examples() {
    let r = p3();
    let pencil = one_form(&r, &["-x1", "x0", "0", "0"]);
    assert_eq!(validate_foliation(pencil, 0).unwrap().degree(), 0);
    assert!(matches!(validate_foliation(one_form(&r, &["0", "x0", "0", "0"]), 0), Err(FoliationError::EulerFails(_))));
    assert!(validate_foliation(tetra([1, 2, -1, -2]), 2).is_ok());
    assert!(matches!(validate_foliation(tetra([1, 2, -1, -2]), 1), Err(FoliationError::NotHomogeneous { .. })));
    // Euler-compatible but not integrable: x1 dx0 - x0 dx1 + x3 dx2 - x2 dx3.
    let bad = one_form(&r, &["x1", "-x0", "x3", "-x2"]);
    assert!(matches!(validate_foliation(bad, 0), Err(FoliationError::NotIntegrable(_))));
    // x2 * (pencil) has a common factor.
    let fat = one_form(&r, &["-x1*x2", "x0*x2", "0", "0"]);
    assert!(matches!(validate_foliation(fat, 1), Err(FoliationError::CodimensionOne(2))));
}

#[test]
fn chart_examples() {
    let r = p3();
    let pencil = validate_foliation(one_form(&r, &["-x1", "x0", "0", "0"]), 0).unwrap();
    let c2 = pencil.chart_restrict(2);
    assert_eq!(c2.ring().names(), &["x0", "x1", "x3"]);
    assert_eq!(c2.to_string(), "-x1*dx0 + x0*dx1");

    let l = [1, 2, -1, -2];
    let t = validate_foliation(tetra(l), 2).unwrap();
    let c0 = t.chart_restrict(0);
    let a = c0.ring().clone();
    let want = PolyForm::one_form(&a, vec![p(&a, "x2*x3").scale(&int(l[1])), p(&a, "x1*x3").scale(&int(l[2])), p(&a, "x1*x2").scale(&int(l[3]))]);
    assert_eq!(c0, want);
    for chart in 0..4 {
        let back = rehomogenize(&t.chart_restrict(chart), chart, &r);
        assert_eq!(back, *t.omega(), "chart {chart}");
    }
    let back = rehomogenize(&pencil.chart_restrict(0), 0, &r);
    assert_eq!(back, *pencil.omega());
}

#[test]
fn pullback_is_chain_rule() {
    let r = Ring::new(&["x", "t"]);
    let eta = one_form(&r, &["x", "1 + x*t"]);
    let s = xyz();
    let phi = vec![p(&s, "x"), p(&s, "y^2*z")];
    let omega = eta.pullback(&phi).unwrap();
    let f = p(&s, "y^2*z");
    let df = PolyForm::function(f.clone()).ext_d().unwrap();
    let want = PolyForm::dx(&s, 0).mul_function(&p(&s, "x")).add(&df.mul_function(&p(&s, "1 + x*y^2*z"))).unwrap();
    assert_eq!(omega, want);
}

#[test]
fn display_is_stable() {
    let r = xyz();
    let w = one_form(&r, &["x^2 + 1", "-y", "0"]);
    assert_eq!(w.to_string(), "(x^2 + 1)*dx - y*dy");
    assert_eq!(PolyForm::zero(&r, 2).to_string(), "0");
}

fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..=3), 0..4)
}

fn build(r: &RingRef, t: &[(Vec<u32>, i64)]) -> MPoly {
    MPoly::from_terms(r, t.iter().map(|(e, c)| (Mono::from_exps(e.clone()), int(*c))))
}

fn arb_form(n: usize, grade: usize) -> impl Strategy<Value = Vec<Vec<(Vec<u32>, i64)>>> {
    prop::collection::vec(arb_poly(n), combinations(n, grade).len())
}

fn form_from(r: &RingRef, grade: usize, data: &[Vec<(Vec<u32>, i64)>]) -> PolyForm {
    let keys = combinations(r.nvars(), grade);
    PolyForm::from_components(r, grade, keys.into_iter().zip(data).map(|(k, t)| (k, build(r, t))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d_squared_vanishes(grade in 0usize..3, seed in arb_form(4, 2)) {
        let r = p3();
        let keys = combinations(4, grade).len();
        let a = form_from(&r, grade, &seed[..keys.min(seed.len())]);
        prop_assert!(a.ext_d().unwrap().ext_d().unwrap().is_zero());
    }

    #[test]
    fn wedge_anticommutes_and_leibniz(a in arb_form(4, 1), b in arb_form(4, 2)) {
        let r = p3();
        let a = form_from(&r, 1, &a);
        let b = form_from(&r, 2, &b);
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        let lhs = a.wedge(&b).unwrap().ext_d().unwrap();
        let rhs = a.ext_d().unwrap().wedge(&b).unwrap().sub(&a.wedge(&b.ext_d().unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let aa = a.wedge(&a).unwrap();
        prop_assert!(aa.is_zero());
    }

    #[test]
    fn contraction_is_an_antiderivation(a in arb_form(3, 1), b in arb_form(3, 1), x in prop::collection::vec(arb_poly(3), 3)) {
        let r = xyz();
        let a = form_from(&r, 1, &a);
        let b = form_from(&r, 1, &b);
        let x = PolyVectorField::new(&r, x.iter().map(|t| build(&r, t)).collect());
        let ab = a.wedge(&b).unwrap();
        prop_assert!(ab.contract(&x).unwrap().contract(&x).unwrap().is_zero());
        let lhs = ab.contract(&x).unwrap();
        let rhs = b.mul_function(&a.contract(&x).unwrap().as_function())
            .sub(&a.mul_function(&b.contract(&x).unwrap().as_function())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integrability_through_rot(w in arb_form(3, 1)) {
        let r = xyz();
        let w = form_from(&r, 1, &w);
        let lhs = w.wedge(&w.ext_d().unwrap()).unwrap();
        let x = rot(&w).unwrap();
        let rhs = PolyForm::volume(&r).mul_function(&w.contract(&x).unwrap().as_function());
        prop_assert_eq!(lhs, rhs);
        let dw = w.ext_d().unwrap();
        prop_assert_eq!(PolyForm::volume(&r).contract(&x).unwrap(), dw);
    }

    #[test]
    fn euler_identity_on_logarithmic_forms(l in prop::collection::vec(-5i64..=5, 3)) {
        let last = -(l[0] + l[1] + l[2]);
        let w = tetra([l[0], l[1], l[2], last]);
        if let Ok(f) = validate_foliation(w.clone(), 2) {
            let r = f.ring().clone();
            let lhs = f.d_omega().contract(&PolyVectorField::radial(&r)).unwrap();
            prop_assert_eq!(lhs, w.scale(&Rat::from_integer(4.into())));
        }
    }
}
