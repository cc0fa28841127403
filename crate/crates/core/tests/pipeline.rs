use folia_core::algebra::{int, rat, MPoly, Ring, RingRef};
use folia_core::forms::{validate_foliation, FoliationP3, PolyForm};
use folia_core::ideal::Ideal;
use folia_core::lab::{isolated_count, nk_divisor, singular_scheme, CurveComponent};
use folia_core::residue::{bb_residue, bb_sum_check, transversal_model};

fn p(r: &RingRef, s: &str) -> MPoly {
    MPoly::parse(r, s).unwrap()
}

fn branched() -> (RingRef, FoliationP3) {
    let r = Ring::indexed("x", 4);
    let f = p(&r, "x0");
    let g = p(&r, "x0^2 + x1^2 + x2*x3");
    let df = PolyForm::function(f.clone()).ext_d().unwrap();
    let dg = PolyForm::function(g.clone()).ext_d().unwrap();
    let omega = df.mul_function(&g.scale(&int(2))).sub(&dg.mul_function(&f)).unwrap();
    (r.clone(), validate_foliation(omega, 1).unwrap())
}

#[test]
fn branched_pencil_end_to_end() {
    let (r, fol) = branched();
    let st = Ring::new(&["s", "t"]);
    let conic = CurveComponent::new(
        "conic",
        Ideal::new(&r, vec![p(&r, "x0"), p(&r, "x1^2 + x2*x3")]),
        Some(vec![MPoly::zero(&st), p(&st, "s*t"), p(&st, "-s^2"), p(&st, "t^2")]),
        true,
    )
    .unwrap();
    let scheme = singular_scheme(&fol, vec![conic.clone()]).unwrap();
    assert_eq!(scheme.hilbert.dim_proj, 1);
    assert_eq!(conic.hilbert.degree, 2);

    assert!(nk_divisor(&fol, &conic).unwrap().points.is_empty());

    let slice = transversal_model(&fol, &conic.ideal, &[int(0), int(0), int(1), int(0)]).unwrap();
    let bb = bb_residue(&slice.model).unwrap();
    assert_eq!(bb.value, rat(9, 2));
    let sc = bb_sum_check(fol.degree(), &[(bb, conic.hilbert.degree)]);
    assert!(sc.equal);
    assert_eq!(sc.total, int(9));

    let iso = isolated_count(&fol, &conic.ideal).unwrap();
    assert_eq!(iso.count, 1);
}
