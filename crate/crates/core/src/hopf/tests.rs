use super::*;
use crate::pbw::Mode;

fn ubar(d: i64) -> &'static AlgebraSpec {
    AlgebraSpec::ubar(d).unwrap()
}

fn g(spec: &'static AlgebraSpec, x: Gen) -> Element {
    Element::gen(spec, x).unwrap()
}

fn w(spec: &'static AlgebraSpec, word: &[(Gen, i64)]) -> Element {
    Element::word(spec, word).unwrap()
}

fn q(spec: &AlgebraSpec, n: i64) -> Scalar {
    Scalar::q_power(spec.ctx(), n)
}

fn t(a: &Element, b: &Element) -> TensorElement {
    TensorElement::pure(&[a, b]).unwrap()
}

#[test]
fn tensor_signs() {
    let u = ubar(3);
    let one = Element::one(u);
    let (e2, f2) = (g(u, Gen::E2), g(u, Gen::F2));
    assert_eq!(&t(&one, &f2) * &t(&e2, &one), -&t(&e2, &f2));
    assert_eq!(&t(&e2, &one) * &t(&one, &f2), t(&e2, &f2));
    assert!((&t(&one, &e2) * &t(&one, &e2)).is_zero());
    // three legs: (1 ⊗ e2 ⊗ 1)(f2 ⊗ 1 ⊗ e3) picks one crossing
    let a = TensorElement::pure(&[&one, &e2, &one]).unwrap();
    let b = TensorElement::pure(&[&f2, &one, &g(u, Gen::E3)]).unwrap();
    assert_eq!(&a * &b, -&TensorElement::pure(&[&f2, &e2, &g(u, Gen::E3)]).unwrap());
    assert!(t(&e2, &f2).is_even());
    assert!(!t(&e2, &one).is_even());
}

#[test]
fn flip_and_place() {
    let u = ubar(5);
    let (e2, f3, k1) = (g(u, Gen::E2), g(u, Gen::F3), g(u, Gen::K1));
    assert_eq!(t(&e2, &f3).flip(), -&t(&f3, &e2));
    assert_eq!(t(&e2, &k1).flip(), t(&k1, &e2));
    let one = Element::one(u);
    let placed = t(&e2, &f3).place(3, &[0, 2]);
    assert_eq!(placed, TensorElement::pure(&[&e2, &one, &f3]).unwrap());
    // cyclic permutation of three odd legs is even
    let x = TensorElement::pure(&[&e2, &f3, &e2]).unwrap();
    assert_eq!(x.permute(&[1, 2, 0]), TensorElement::pure(&[&f3, &e2, &e2]).unwrap());
}

#[test]
fn generator_coproducts() {
    let u = ubar(5);
    let h = Hopf::get(u).unwrap();
    let one = Element::one(u);
    let k1 = g(u, Gen::K1);
    assert_eq!(h.coproduct(&k1).unwrap(), t(&k1, &k1));
    assert_eq!(h.coproduct(&one).unwrap(), TensorElement::one(u, 2));
    let f3 = g(u, Gen::F3);
    let expected = &(&t(&g(u, Gen::F2), &w(u, &[(Gen::F1, 1), (Gen::K2, -1)])).scale(&(&q(u, -1) - &q(u, 1)))
        + &t(&one, &f3))
        + &t(&f3, &w(u, &[(Gen::K1, -1), (Gen::K2, -1)]));
    assert_eq!(h.coproduct(&f3).unwrap(), expected);
}

#[test]
fn counit_and_antipode_examples() {
    let u = ubar(3);
    let h = Hopf::get(u).unwrap();
    for a in 0..3 {
        for b in 0..3 {
            assert!(h.counit(&w(u, &[(Gen::K1, a), (Gen::K2, b)])).is_one());
        }
    }
    assert!(h.counit(&g(u, Gen::E1)).is_zero());
    let s = h.antipode(&g(u, Gen::F3)).unwrap();
    let f1f2kk = w(u, &[(Gen::F1, 1), (Gen::F2, 1), (Gen::K1, 1), (Gen::K2, 1)]);
    let f3kk = w(u, &[(Gen::F3, 1), (Gen::K1, 1), (Gen::K2, 1)]);
    assert_eq!(s, &f1f2kk.scale(&(&q(u, 1) - &q(u, 3))) - &f3kk.scale(&q(u, 2)));
    let e2 = g(u, Gen::E2);
    assert_eq!(h.antipode_inv(&h.antipode(&e2).unwrap()).unwrap(), e2);
}

#[test]
fn antipode_is_graded_antimultiplicative() {
    let u = ubar(5);
    let h = Hopf::get(u).unwrap();
    for a in Gen::ALL {
        for b in Gen::ALL {
            let (x, y) = (g(u, a), g(u, b));
            let lhs = h.antipode(&(&x * &y)).unwrap();
            let mut rhs = &h.antipode(&y).unwrap() * &h.antipode(&x).unwrap();
            if a.parity() == 1 && b.parity() == 1 {
                rhs = -&rhs;
            }
            assert_eq!(lhs, rhs, "{a:?} {b:?}");
        }
    }
}

#[test]
fn coproduct_respects_the_e1_f1_relation() {
    let u = ubar(3);
    let h = Hopf::get(u).unwrap();
    let (e1, f1) = (g(u, Gen::E1), g(u, Gen::F1));
    let lhs = &h.coproduct(&e1).unwrap() * &h.coproduct(&f1).unwrap();
    let rhs = h.coproduct(&(&e1 * &f1)).unwrap();
    assert_eq!(lhs, rhs);
    // hand expansion of Δ(e3) at d = 3 against the definition e1 e2 - q^-1 e2 e1
    let (e2, one) = (g(u, Gen::E2), Element::one(u));
    let de1 = &t(&e1, &one) + &t(&g(u, Gen::K1), &e1);
    let de2 = &t(&e2, &one) + &t(&g(u, Gen::K2), &e2);
    let de3 = &(&de1 * &de2) - &(&de2 * &de1).scale(&q(u, -1));
    assert_eq!(de3, h.coproduct(&g(u, Gen::E3)).unwrap());
}

#[test]
fn axioms_on_generators_and_samples() {
    for d in [3, 5] {
        let u = ubar(d);
        let h = Hopf::get(u).unwrap();
        let gens: Vec<Mono> = Gen::ALL.iter().map(|x| g(u, *x).terms()[0].0).collect();
        let r = check_hopf_axioms(h, &gens).unwrap();
        assert!(r.pass(), "{:?}", r.first_failure());
        let r = check_hopf_axioms(h, &sample_basis(u, 40, 3)).unwrap();
        assert!(r.pass(), "{:?}", r.first_failure());
        let r = check_antipode_anticomultiplicative(h).unwrap();
        assert!(r.pass(), "{:?}", r.first_failure());
    }
}

#[test]
fn borel_and_dual_axioms_exhaustive() {
    for kind in [AlgebraKind::BPlus, AlgebraKind::BMinus, AlgebraKind::X] {
        let r = verify(kind, 3, None, 0).unwrap();
        assert!(r.pass(), "{kind:?}: {:?}", r.first_failure());
        assert_eq!(r.get("coassociativity").unwrap().cases, 108);
    }
}

#[test]
fn borel_coproducts_stay_inside() {
    let bp = AlgebraSpec::get(AlgebraKind::BPlus, 5).unwrap();
    let h = Hopf::get(bp).unwrap();
    let u = ubar(5);
    let hu = Hopf::get(u).unwrap();
    for x in [Gen::K1, Gen::E1, Gen::E3, Gen::E2] {
        let inside = h.coproduct(&g(bp, x)).unwrap();
        assert_eq!(inside.embed(u).unwrap(), hu.coproduct(&g(u, x)).unwrap());
    }
}

#[test]
fn e1_power_coproduct_before_quotient() {
    for d in [3i64, 5] {
        let amb = AlgebraSpec::with_mode(AlgebraKind::Ubar, Mode::Ambient { bound: d as u16 }, d).unwrap();
        let (e1, k1, one) = (g(amb, Gen::E1), g(amb, Gen::K1), Element::one(amb));
        let de1 = &t(&e1, &one) + &t(&k1, &e1);
        let mut p = TensorElement::one(amb, 2);
        for _ in 0..d {
            p = &p * &de1;
        }
        let e1d = Element::gen_pow(amb, Gen::E1, d).unwrap();
        let k1d = Element::gen_pow(amb, Gen::K1, d).unwrap();
        assert_eq!(p, &t(&e1d, &one) + &t(&k1d, &e1d));
    }
    assert!(Hopf::get(AlgebraSpec::with_mode(AlgebraKind::Ubar, Mode::Ambient { bound: 4 }, 3).unwrap()).is_err());
}

#[test]
fn iterated_coproduct_is_coassociative_on_k() {
    let u = ubar(3);
    let h = Hopf::get(u).unwrap();
    let k = g(u, Gen::K2);
    let t3 = h.iterated_coproduct(&k, 3).unwrap();
    assert_eq!(t3, TensorElement::pure(&[&k, &k, &k]).unwrap());
}

#[test]
fn tensor_json_round_trip() {
    let u = ubar(3);
    let h = Hopf::get(u).unwrap();
    let x = h.coproduct(&g(u, Gen::E3)).unwrap();
    let json = serde_json::to_string(&x.to_json()).unwrap();
    let back: TensorJson = serde_json::from_str(&json).unwrap();
    assert_eq!(TensorElement::from_json(&back).unwrap(), x);
}
