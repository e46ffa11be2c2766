use proptest::prelude::*;

use super::*;
use crate::algebra::{tensor, wedge, LieAlgebra};
use crate::scalar::{frac, int};

fn view(name: &str) -> BraidedLieBialgebra<AffineAlgebra> {
    current_algebra_view(&CartanMatrix::named(name).unwrap()).unwrap()
}

fn s(b: &BraidedLieBialgebra<AffineAlgebra>, degree: i64, name: &str) -> LieElement<AffineSym> {
    let alg = b.algebra();
    LieElement::basis(alg.loop_sym(degree, alg.finite().symbol(name).unwrap()))
}

#[test]
fn degree_one_is_primitive() {
    let b = view("A2");
    for x in b.carrier_window(1, 1) {
        assert!(b.braided_cobracket_symbol(&x).unwrap().is_zero());
    }
}

#[test]
fn degree_two_rows() {
    let b = view("A2");
    let mut e1 = wedge(&s(&b, 1, "E1"), &s(&b, 1, "H1"));
    e1 -= &wedge(&s(&b, 1, "E12"), &s(&b, 1, "F2"));
    assert_eq!(b.braided_cobracket(&s(&b, 2, "E1")).unwrap(), e1);
    let mut h1 = wedge(&s(&b, 1, "E2"), &s(&b, 1, "F2"));
    h1.add_scaled(&wedge(&s(&b, 1, "E1"), &s(&b, 1, "F1")), &int(-2));
    h1 -= &wedge(&s(&b, 1, "E12"), &s(&b, 1, "F21"));
    assert_eq!(b.braided_cobracket(&s(&b, 2, "H1")).unwrap(), h1);
}

#[test]
fn removed_terms_touch_degree_zero() {
    let b = view("A2");
    for x in b.carrier_window(1, 3) {
        let d = b.bialgebra().cobracket_symbol(&x).unwrap();
        let rest = &d - &b.braided_cobracket_symbol(&x).unwrap();
        assert!(rest
            .keys()
            .all(|(p, q)| b.degree(p) == 0 || b.degree(q) == 0));
    }
}

#[test]
fn projection() {
    let b = view("A2");
    let pi = b.projection();
    let c = LieElement::basis(AffineSym::C);
    let x = &(&s(&b, 2, "E1") + &s(&b, 0, "H1")) + &c;
    assert_eq!(pi.project(&x), &s(&b, 0, "H1") + &c);
    assert_eq!(pi.degree_zero_basis().len(), 10);
}

#[test]
fn projection_is_a_lie_map_on_the_negative_part() {
    let b = view("A2");
    let alg = b.algebra();
    let pi = b.projection();
    let basis = KacMoody::basis_window(alg, -2, 0);
    for x in &basis {
        for y in &basis {
            let (xe, ye) = (LieElement::basis(*x), LieElement::basis(*y));
            assert_eq!(
                pi.project(&alg.bracket(&xe, &ye)),
                alg.bracket(&pi.project(&xe), &pi.project(&ye))
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn projection_splits_inclusion(coeffs in proptest::collection::vec(-6i64..=6, 10)) {
        let b = view("A2");
        let pi = b.projection();
        let mut x = LieElement::zero();
        for (sym, c) in pi.degree_zero_basis().iter().zip(&coeffs) {
            x.add_term(*sym, int(*c));
        }
        prop_assert_eq!(pi.project(&pi.include(&x)), x);
    }
}

#[test]
fn coaction_of_t_e1() {
    let b = view("A2");
    let c = LieElement::basis(AffineSym::C);
    let mut expect = tensor(&(&c + &s(&b, 0, "H1")), &s(&b, 1, "E1")).scaled(&frac(-1, 2));
    expect += &tensor(&s(&b, 0, "E1"), &s(&b, 1, "H1"));
    expect -= &tensor(&s(&b, 0, "E12"), &s(&b, 1, "F2"));
    assert_eq!(b.coaction(&s(&b, 1, "E1")).unwrap(), expect);
    assert!(b.coaction(&s(&b, 0, "H2")).unwrap().is_zero());
    let pi = b.projection();
    for x in b.carrier_window(1, 3) {
        let d = b.braided_cobracket_symbol(&x).unwrap();
        assert!(d
            .keys()
            .all(|(p, q)| pi.degree(p) != 0 && pi.degree(q) != 0));
    }
}

#[test]
fn psi_basics() {
    let b = view("A1");
    let (e, f) = (s(&b, 1, "E1"), s(&b, 1, "F1"));
    assert!(b.infinitesimal_braiding(&e, &e).is_zero());
    let h2 = b.braided_cobracket(&s(&b, 2, "H1")).unwrap();
    assert!(!h2.is_zero());
    assert_eq!(b.infinitesimal_braiding(&e, &f), -h2);
    let b = b.with_side(CarrierSide::Negative);
    let (e, f) = (s(&b, -1, "E1"), s(&b, -1, "F1"));
    let h2 = b.braided_cobracket(&s(&b, -2, "H1")).unwrap();
    assert_eq!(b.infinitesimal_braiding(&e, &f), -h2);
}

#[test]
fn psi_is_cartan_covariant() {
    let b = view("A2");
    let alg = b.algebra();
    let basis = b.carrier_window(1, 2);
    for h in alg.cartan_symbols() {
        let h = LieElement::basis(h);
        for x in basis.iter().step_by(3) {
            for y in basis.iter().step_by(2) {
                let (x, y) = (LieElement::basis(*x), LieElement::basis(*y));
                let mut lhs = b.infinitesimal_braiding(&alg.bracket(&h, &x), &y);
                lhs += &b.infinitesimal_braiding(&x, &alg.bracket(&h, &y));
                let rhs = ad_tensor(alg, &h, &b.infinitesimal_braiding(&x, &y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn current_algebra_carrier() {
    let b = view("A2");
    assert_eq!(b.carrier_window(1, 2).len(), 16);
    let alg = b.algebra();
    for x in alg.finite().basis() {
        for y in alg.finite().basis() {
            let xy = alg.bracket(
                &LieElement::basis(alg.loop_sym(1, x)),
                &LieElement::basis(alg.loop_sym(1, y)),
            );
            assert!(xy.coeff(&AffineSym::C).is_zero());
            let fin = alg.finite().bracket_basis(&x, &y);
            assert_eq!(xy, alg.embed(2, &fin));
        }
    }
}

#[test]
fn carriers_satisfy_the_braided_axioms() {
    for name in ["A1", "A2"] {
        let b = view(name);
        let rep = b.verify(1, 3).unwrap();
        assert!(rep.passed(), "{name}: {:?}", rep.failures);
        let b = b.with_side(CarrierSide::Negative);
        let rep = b.verify(-2, -1).unwrap();
        assert!(rep.passed(), "{name} negative: {:?}", rep.failures);
    }
}

#[test]
fn dropping_the_factor_two_is_caught() {
    let b = view("A1").with_psi_scale(frac(1, 2));
    let rep = b.verify(1, 2).unwrap();
    assert!(rep.failures.iter().any(|f| f.check == "braided_cocycle"));
}

#[test]
fn node_deletion_carrier() {
    let b = node_deletion_view(&CartanMatrix::named("A2").unwrap(), "2").unwrap();
    let names: Vec<String> = b
        .carrier_window(-1, -1)
        .iter()
        .map(|x| b.algebra().symbol_name(x))
        .collect();
    assert_eq!(names, ["F2", "F21"]);
    assert_eq!(b.degree_zero_basis().len(), 4);
    let rep = b.verify(-1, -1).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
}

#[test]
fn side_flip() {
    let b = view("A2");
    let x = &s(&b, 2, "E1") - &LieElement::basis(AffineSym::C);
    let y = flip_loop_degree(&x);
    assert_eq!(y, &s(&b, -2, "E1") - &LieElement::basis(AffineSym::C));
    assert_eq!(flip_loop_degree(&y), x);
}

#[test]
fn non_simply_laced_deletions() {
    for (name, node) in [
        ("B2", "1"),
        ("B2", "2"),
        ("G2", "1"),
        ("G2", "2"),
        ("A3", "2"),
    ] {
        let b = node_deletion_view(&CartanMatrix::named(name).unwrap(), node).unwrap();
        let rep = b.verify(-3, -1).unwrap();
        assert!(rep.passed(), "{name}/{node}: {:?}", rep.failures);
    }
}
