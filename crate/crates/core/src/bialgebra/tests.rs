use super::*;
use crate::affine::{AffineAlgebra, AffineSym};
use crate::algebra::{cybe_defect, symmetric_part, tensor};
use crate::finite::{ChevalleyAlgebra, FiniteSym};
use crate::scalar::{frac, int};

fn sl(name: &str) -> Bialgebra<ChevalleyAlgebra> {
    Bialgebra::new(ChevalleyAlgebra::named(name).unwrap())
}

fn fs(b: &Bialgebra<ChevalleyAlgebra>, name: &str) -> LieElement<FiniteSym> {
    LieElement::basis(b.algebra().symbol(name).unwrap())
}

#[test]
fn sl2_generator_values() {
    let b = sl("A1");
    let (e, f, h) = (fs(&b, "E1"), fs(&b, "F1"), fs(&b, "H1"));
    assert_eq!(b.cobracket(&e).unwrap(), wedge(&e, &h).scaled(&frac(1, 2)));
    assert_eq!(b.cobracket(&f).unwrap(), wedge(&f, &h).scaled(&frac(1, 2)));
    assert!(b.cobracket(&h).unwrap().is_zero());
}

#[test]
fn sl2_tensor_examples() {
    let b = sl("A1");
    let alg = b.algebra();
    let (e, f, h) = (fs(&b, "E1"), fs(&b, "F1"), fs(&b, "H1"));
    assert!(ad_tensor(alg, &h, &tensor(&e, &f)).is_zero());
    let mut r = tensor(&e, &f);
    r.add_scaled(&tensor(&h, &h), &frac(1, 4));
    assert_eq!(ad_tensor(alg, &e, &r), wedge(&e, &h).scaled(&frac(1, 2)));
    assert_eq!(ad_tensor(alg, &f, &r), wedge(&f, &h).scaled(&frac(1, 2)));
    assert!(ad_tensor(alg, &h, &r).is_zero());
    assert!(cybe_defect(alg, &r).is_zero());
    assert!(!cybe_defect(alg, &tensor(&e, &f)).is_zero());
    let mut sym = (&tensor(&e, &f) + &tensor(&f, &e)).scaled(&frac(1, 2));
    sym.add_scaled(&tensor(&h, &h), &frac(1, 4));
    assert_eq!(symmetric_part(&r), sym);
    for k in [int(2), int(-3), frac(5, 7)] {
        assert_eq!(
            cybe_defect(alg, &tensor(&e, &f).scaled(&k)),
            cybe_defect(alg, &tensor(&e, &f)).scaled(&(&k * &k))
        );
    }
}

#[test]
fn a2_certificates() {
    let b = sl("A2");
    b.build_certificates(0, 0);
    let e12 = b.algebra().symbol("E12").unwrap();
    let c = b.certificate(&e12).unwrap();
    assert_eq!(
        c.terms,
        vec![(
            int(1),
            b.algebra().symbol("E1").unwrap(),
            b.algebra().symbol("E2").unwrap()
        )]
    );
    for s in b.algebra().basis() {
        if let Some(c) = b.certificate(&s) {
            assert_eq!(b.replay(&c), LieElement::basis(s));
            assert!(c.rank > 0);
        } else {
            assert!(b.is_generator(&s));
        }
    }
}

#[test]
fn sl_axioms() {
    for name in ["A1", "A2", "A3", "B2", "G2"] {
        let b = sl(name);
        let rep = verify_lie_bialgebra(&b, 0, 0).unwrap();
        assert!(rep.passed(), "{name}: {:?}", rep.failures);
    }
}

#[test]
fn fault_injection_is_caught() {
    let b = sl("A2");
    let e1 = b.algebra().symbol("E1").unwrap();
    let flipped = -b.cobracket_symbol(&e1).unwrap();
    let b = b.with_generator_override(e1, flipped);
    let rep = verify_lie_bialgebra(&b, 0, 0).unwrap();
    assert!(!rep.passed());
    assert!(!rep.failures.is_empty());
}

#[test]
fn canonical_scales_are_universal() {
    for name in ["A1", "A3", "B2", "G2"] {
        let q = canonical_r(&sl(name)).unwrap();
        assert_eq!((q.a, q.b), (int(1), frac(1, 2)), "{name}");
    }
}

#[test]
fn canonical_r_of_sl2() {
    let b = sl("A1");
    let q = canonical_r(&b).unwrap();
    let (e, f, h) = (fs(&b, "E1"), fs(&b, "F1"), fs(&b, "H1"));
    let mut r = tensor(&e, &f);
    r.add_scaled(&tensor(&h, &h), &frac(1, 4));
    assert_eq!(q.r, r);
    assert_eq!((q.a, q.b), (int(1), frac(1, 2)));
}

fn quasitriangular_passes(name: &str) {
    let b = sl(name);
    let q = canonical_r(&b).unwrap();
    let alg = b.algebra();
    let delta = |s: &FiniteSym| b.cobracket_symbol(s).unwrap();
    let rep = verify_quasitriangular(name, alg, &alg.basis(), &q.r, &delta);
    assert!(rep.passed(), "{name}: {:?}", rep.failures);
}

#[test]
fn quasitriangular_structures() {
    for name in ["A1", "A2", "A3", "B2", "G2"] {
        quasitriangular_passes(name);
    }
}

#[test]
fn bare_ef_fails_cybe() {
    let b = sl("A1");
    let r = tensor(&fs(&b, "E1"), &fs(&b, "F1"));
    let delta = |s: &FiniteSym| b.cobracket_symbol(s).unwrap();
    let rep = verify_quasitriangular("A1", b.algebra(), &b.algebra().basis(), &r, &delta);
    assert!(rep.failures.iter().any(|f| f.check == "cybe"));
}

#[test]
fn symmetrizer_weights_on_b2() {
    // C·diag(d) symmetric weights put the larger scale on the short root
    let b = Bialgebra::with_convention(
        ChevalleyAlgebra::named("B2").unwrap(),
        WeightConvention::Symmetrizer,
    );
    assert_eq!(b.weights(), &[int(2), int(1)]);
    let rep = verify_lie_bialgebra(&b, 0, 0).unwrap();
    assert!(rep.failures.iter().any(|f| f.check == "cocycle"));
    assert!(matches!(
        canonical_r(&b),
        Err(BialgebraError::NormalizationFailure(_))
    ));
    let b = sl("B2");
    assert_eq!(b.weights(), &[frac(1, 2), int(1)]);
    assert_eq!(sl("G2").weights(), &[int(1), frac(1, 3)]);
}

fn affine(name: &str) -> Bialgebra<AffineAlgebra> {
    Bialgebra::new(AffineAlgebra::named(name).unwrap())
}

fn asym(b: &Bialgebra<AffineAlgebra>, degree: i64, name: &str) -> LieElement<AffineSym> {
    let alg = b.algebra();
    LieElement::basis(alg.loop_sym(degree, alg.finite().symbol(name).unwrap()))
}

#[test]
fn affine_a2_examples() {
    let b = affine("A2");
    let c = LieElement::basis(AffineSym::C);
    let s = |d, n| asym(&b, d, n);
    // δ(t⊗E1)
    let mut expect = wedge(&s(1, "E1"), &(&c + &s(0, "H1"))).scaled(&frac(1, 2));
    expect += &wedge(&s(0, "E1"), &s(1, "H1"));
    expect -= &wedge(&s(0, "E12"), &s(1, "F2"));
    assert_eq!(b.cobracket(&s(1, "E1")).unwrap(), expect);
    // δ(t²⊗H1)
    let mut expect = wedge(&s(2, "H1"), &c.scaled(&int(2))).scaled(&frac(1, 2));
    expect.add_scaled(&wedge(&s(0, "E1"), &s(2, "F1")), &int(-2));
    expect.add_scaled(&wedge(&s(1, "E1"), &s(1, "F1")), &int(-2));
    expect += &wedge(&s(0, "E2"), &s(2, "F2"));
    expect += &wedge(&s(1, "E2"), &s(1, "F2"));
    expect -= &wedge(&s(0, "E12"), &s(2, "F21"));
    expect -= &wedge(&s(1, "E12"), &s(1, "F21"));
    assert_eq!(b.cobracket(&s(2, "H1")).unwrap(), expect);
    assert!(b.cobracket(&s(0, "H1")).unwrap().is_zero());
    // δe₀ = ½ e₀ ∧ h₀
    let g = b.algebra().serre_generators();
    assert_eq!(
        b.cobracket(&g[0].e).unwrap(),
        wedge(&g[0].e, &g[0].h).scaled(&frac(1, 2))
    );
}

#[test]
fn affine_certificates_replay() {
    let b = affine("A2");
    b.build_certificates(-3, 3);
    for s in KacMoody::basis_window(b.algebra(), -3, 3) {
        match b.certificate(&s) {
            Some(c) => assert_eq!(b.replay(&c), LieElement::basis(s)),
            None => assert!(b.is_generator(&s), "{s:?}"),
        }
    }
}

#[test]
fn certificate_independence() {
    let b = affine("A2");
    b.prefill(-3, 3).unwrap();
    let mut tested = 0;
    for s in KacMoody::basis_window(b.algebra(), -2, 2) {
        if b.is_generator(&s) {
            continue;
        }
        let primary = b.cobracket_symbol(&s).unwrap();
        for c in b.alternate_certificates(&s, 3) {
            assert_eq!(b.replay(&c), LieElement::basis(s));
            assert_eq!(b.cobracket_along(&c).unwrap(), primary, "{s:?}");
            tested += 1;
        }
    }
    assert!(tested >= 10);
}

#[test]
fn memo_is_linear() {
    let b = affine("A2");
    let x = &asym(&b, 2, "E1").scaled(&frac(3, 2)) - &asym(&b, -1, "F21");
    let mut sum = b
        .cobracket_symbol(
            &b.algebra()
                .loop_sym(2, b.algebra().finite().symbol("E1").unwrap()),
        )
        .unwrap()
        .scaled(&frac(3, 2));
    sum -= &b.cobracket(&asym(&b, -1, "F21")).unwrap();
    assert_eq!(b.cobracket(&x).unwrap(), sum);
}

#[test]
fn affine_axioms_small_window() {
    for name in ["A1", "A2"] {
        let rep = verify_lie_bialgebra(&affine(name), -1, 1).unwrap();
        assert!(rep.passed(), "{name}: {:?}", rep.failures);
    }
}
