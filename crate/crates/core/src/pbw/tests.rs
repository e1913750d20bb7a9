use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::scalar::q_int;

fn ubar(d: i64) -> &'static AlgebraSpec {
    AlgebraSpec::ubar(d).unwrap()
}

fn g(spec: &'static AlgebraSpec, x: Gen) -> Element {
    Element::gen(spec, x).unwrap()
}

fn gp(spec: &'static AlgebraSpec, x: Gen, n: i64) -> Element {
    Element::gen_pow(spec, x, n).unwrap()
}

fn q(spec: &AlgebraSpec, n: i64) -> Scalar {
    Scalar::q_power(spec.ctx(), n)
}

fn word(spec: &'static AlgebraSpec, w: &[(Gen, i64)]) -> Element {
    Element::word(spec, w).unwrap()
}

#[test]
fn basis_dimensions() {
    for d in [3, 5] {
        for kind in [AlgebraKind::Ubar, AlgebraKind::BPlus, AlgebraKind::BMinus, AlgebraKind::X] {
            let spec = AlgebraSpec::get(kind, d).unwrap();
            let b = spec.basis();
            assert_eq!(b.len(), spec.dim());
            assert!(b.windows(2).all(|w| w[0] < w[1]));
        }
    }
    assert_eq!(ubar(3).basis().len(), 1296);
    assert_eq!(AlgebraSpec::get(AlgebraKind::BPlus, 3).unwrap().basis().len(), 108);
    assert_eq!(AlgebraSpec::get(AlgebraKind::X, 5).unwrap().basis().len(), 500);
}

#[test]
fn listed_products() {
    let u = ubar(5);
    // e1 f1 = f1 e1 + [k1; 0]
    let lhs = &g(u, Gen::E1) * &g(u, Gen::F1);
    let rhs = &word(u, &[(Gen::F1, 1), (Gen::E1, 1)]) + &bracket_k1(u, 0).unwrap();
    assert_eq!(lhs, rhs);
    // f2 f1 = q f1 f2 + f3
    let lhs = &g(u, Gen::F2) * &g(u, Gen::F1);
    let rhs = &word(u, &[(Gen::F1, 1), (Gen::F2, 1)]).scale(&q(u, 1)) + &g(u, Gen::F3);
    assert_eq!(lhs, rhs);
    assert!((&g(u, Gen::E2) * &g(u, Gen::E2)).is_zero());
    assert!((&g(u, Gen::K1) * &gp(u, Gen::K1, 4)).terms() == Element::one(u).terms());
}

#[test]
fn listed_pair_rules() {
    let u = ubar(3);
    let inv = u.inv_qq().clone();
    // e3 f3
    let lhs = &g(u, Gen::E3) * &g(u, Gen::F3);
    let rhs = &(&(-&word(u, &[(Gen::F3, 1), (Gen::E3, 1)])) + &word(u, &[(Gen::K1, 1), (Gen::K2, 1)]).scale(&inv))
        - &word(u, &[(Gen::K1, -1), (Gen::K2, -1)]).scale(&inv);
    assert_eq!(lhs, rhs);
    // e2 e1 = q e1 e2 - q e3
    let lhs = &g(u, Gen::E2) * &g(u, Gen::E1);
    let rhs = &word(u, &[(Gen::E1, 1), (Gen::E2, 1)]).scale(&q(u, 1)) - &g(u, Gen::E3).scale(&q(u, 1));
    assert_eq!(lhs, rhs);
    assert_eq!(&g(u, Gen::E2) * &g(u, Gen::F1), word(u, &[(Gen::F1, 1), (Gen::E2, 1)]));
}

#[test]
fn bracket_examples() {
    let u = ubar(3);
    let b0 = bracket_k1(u, 0).unwrap();
    assert_eq!(b0, bracket_k1(u, 3).unwrap());
    assert_eq!(b0.coefficient(&Mono([0, 0, 0, 2, 0, 0, 0, 0])), -u.inv_qq().clone());
    // (q k1 - q^2 k1^2) / (q - q^2)
    let b1 = bracket_k1(u, 1).unwrap();
    let den = q(u, 1) - q(u, 2);
    assert_eq!(b1.coefficient(&Mono([0, 0, 0, 1, 0, 0, 0, 0])), q(u, 1).try_div(&den).unwrap());
    assert_eq!(b1.coefficient(&Mono([0, 0, 0, 2, 0, 0, 0, 0])), (-q(u, 2)).try_div(&den).unwrap());
}

/// The defining relations, with e3 and f3 only entering through their definitions.
fn defining_relations_hold(spec: &'static AlgebraSpec) {
    let (e1, e2, f1, f2) = (g(spec, Gen::E1), g(spec, Gen::E2), g(spec, Gen::F1), g(spec, Gen::F2));
    let (k1, k2) = (g(spec, Gen::K1), g(spec, Gen::K2));
    let k1i = gp(spec, Gen::K1, -1);
    let k2i = gp(spec, Gen::K2, -1);
    let one = Element::one(spec);
    assert_eq!(&k1 * &k1i, one);
    assert_eq!(&k2 * &k1, &k1 * &k2);
    let qs = |n: i64| q(spec, n);
    assert_eq!(&e1 * &k1, (&k1 * &e1).scale(&qs(-2)));
    assert_eq!(&e2 * &k1, (&k1 * &e2).scale(&qs(1)));
    assert_eq!(&e1 * &k2, (&k2 * &e1).scale(&qs(1)));
    assert_eq!(&e2 * &k2, &k2 * &e2);
    assert_eq!(&k1 * &f1, (&f1 * &k1).scale(&qs(-2)));
    assert_eq!(&k1 * &f2, (&f2 * &k1).scale(&qs(1)));
    assert_eq!(&k2 * &f1, (&f1 * &k2).scale(&qs(1)));
    assert_eq!(&k2 * &f2, &f2 * &k2);
    let inv = spec.inv_qq();
    assert_eq!(&e1 * &f1, &(&f1 * &e1) + &(&k1 - &k1i).scale(inv));
    assert_eq!(&e2 * &f2, &(-&(&f2 * &e2)) + &(&k2 - &k2i).scale(inv));
    assert_eq!(&e1 * &f2, &f2 * &e1);
    assert_eq!(&e2 * &f1, &f1 * &e2);
    assert!((&e2 * &e2).is_zero());
    assert!((&f2 * &f2).is_zero());
    let qq = &qs(1) + &qs(-1);
    let serre_e = &(&(&(&e1 * &e1) * &e2) - &(&(&e1 * &e2) * &e1).scale(&qq)) + &(&(&e2 * &e1) * &e1);
    assert!(serre_e.is_zero());
    let serre_f = &(&(&(&f1 * &f1) * &f2) - &(&(&f1 * &f2) * &f1).scale(&qq)) + &(&(&f2 * &f1) * &f1);
    assert!(serre_f.is_zero());
    // definitions of the odd root vectors
    let e3 = &(&e1 * &e2) - &(&e2 * &e1).scale(&qs(-1));
    assert_eq!(e3, g(spec, Gen::E3));
    let f3 = &(&f2 * &f1) - &(&f1 * &f2).scale(&qs(1));
    assert_eq!(f3, g(spec, Gen::F3));
    assert_eq!(&e3 * &e1, (&e1 * &e3).scale(&qs(-1)));
    assert_eq!(&f3 * &f1, (&f1 * &f3).scale(&qs(-1)));
}

#[test]
fn defining_relations() {
    for d in [3, 5, 7] {
        defining_relations_hold(ubar(d));
        for r in super::defining_relations(ubar(d).ctx()) {
            assert!(r.evaluate(ubar(d)).unwrap().is_zero(), "{}", r.name);
        }
    }
    defining_relations_hold(AlgebraSpec::with_mode(AlgebraKind::Ubar, Mode::Ambient { bound: 12 }, 5).unwrap());
}

/// Rebuild every pair rule with its composite e3/f3 definitions and compare.
#[test]
fn derived_rules_match_definitions() {
    for d in [3, 5] {
        let u = ubar(d);
        let e3 = &(&g(u, Gen::E1) * &g(u, Gen::E2)) - &(&g(u, Gen::E2) * &g(u, Gen::E1)).scale(&q(u, -1));
        let f3 = &(&g(u, Gen::F2) * &g(u, Gen::F1)) - &(&g(u, Gen::F1) * &g(u, Gen::F2)).scale(&q(u, 1));
        for x in Gen::ALL {
            let gx = g(u, x);
            assert_eq!(&g(u, Gen::E3) * &gx, &e3 * &gx, "e3 * {x:?}");
            assert_eq!(&gx * &g(u, Gen::E3), &gx * &e3, "{x:?} * e3");
            assert_eq!(&g(u, Gen::F3) * &gx, &f3 * &gx, "f3 * {x:?}");
            assert_eq!(&gx * &g(u, Gen::F3), &gx * &f3, "{x:?} * f3");
        }
    }
}

#[test]
fn closed_forms_match_repeated_steps() {
    for d in [3, 5] {
        let u = ubar(d);
        for (hi, lo) in [(Gen::E1, Gen::F1), (Gen::E2, Gen::E1), (Gen::E1, Gen::F3), (Gen::E3, Gen::F1), (Gen::F2, Gen::F1), (Gen::E1, Gen::K1)] {
            for a in 1..d {
                for b in 1..d {
                    let ea = if hi.parity() == 1 { 1 } else { a };
                    let eb = if lo.parity() == 1 { 1 } else { b };
                    let closed = &gp(u, hi, ea) * &gp(u, lo, eb);
                    let mut stepwise = gp(u, hi, ea);
                    for _ in 0..eb {
                        stepwise = &stepwise * &g(u, lo);
                    }
                    let mut stepwise2 = gp(u, lo, eb);
                    for _ in 0..ea {
                        stepwise2 = &g(u, hi) * &stepwise2;
                    }
                    assert_eq!(closed, stepwise, "{hi:?}^{ea} {lo:?}^{eb}");
                    assert_eq!(closed, stepwise2, "{hi:?}^{ea} {lo:?}^{eb} (left)");
                }
            }
        }
    }
}

#[test]
fn e1_f1_closed_form_small_case() {
    // e1^2 f1 = f1 e1^2 + [2] [k1; -1] e1 from the closed-form sum at r=2, w=1
    let u = ubar(7);
    let lhs = &gp(u, Gen::E1, 2) * &g(u, Gen::F1);
    let b = bracket_k1(u, -1).unwrap();
    let rhs = &word(u, &[(Gen::F1, 1), (Gen::E1, 2)]) + &(&b * &g(u, Gen::E1)).scale(&q_int(u.ctx(), 2));
    assert_eq!(lhs, rhs);
}

fn random_mono(rng: &mut ChaCha8Rng, spec: &AlgebraSpec) -> Mono {
    let d = spec.d() as i16;
    let mut m = [0i16; 8];
    for s in spec.kind().slots() {
        m[s] = rng.gen_range(0..if SLOT_PARITY[s] == 1 { 2 } else { d });
    }
    Mono(m)
}

#[test]
fn associativity_and_unit() {
    let u = ubar(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let a = Element::from_mono(u, random_mono(&mut rng, u));
        let b = Element::from_mono(u, random_mono(&mut rng, u));
        let c = Element::from_mono(u, random_mono(&mut rng, u));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&Element::one(u) * &a, a);
        assert_eq!(&a * &Element::one(u), a);
        let ab = &a * &b;
        let p = (a.parity().unwrap() + b.parity().unwrap()) % 2;
        assert!(ab.terms().iter().all(|(m, _)| m.parity() == p));
    }
}

#[test]
fn left_and_right_folds_agree() {
    let u = ubar(5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let len = rng.gen_range(2..8);
        let gens: Vec<Element> = (0..len).map(|_| g(u, Gen::ALL[rng.gen_range(0..8)])).collect();
        let left = gens.iter().fold(Element::one(u), |acc, x| &acc * x);
        let right = gens.iter().rev().fold(Element::one(u), |acc, x| x * &acc);
        assert_eq!(left, right);
    }
}

#[test]
fn borel_and_dual_products() {
    let x = AlgebraSpec::get(AlgebraKind::X, 5).unwrap();
    // a_e2 a_e1 = q a_e1 a_e2 + a_e3
    let lhs = &g(x, Gen::F2) * &g(x, Gen::F1);
    let rhs = &word(x, &[(Gen::F1, 1), (Gen::F2, 1)]).scale(&q(x, 1)) + &g(x, Gen::F3);
    assert_eq!(lhs, rhs);
    assert!(gp(x, Gen::F1, 5).is_zero());
    assert_eq!(x.fmt_mono(&Mono([1, 0, 1, 2, 0, 0, 0, 0])), "a_e1 a_e2 a_k1^2");
    assert!(Element::gen(x, Gen::E1).is_err());
    let bp = AlgebraSpec::get(AlgebraKind::BPlus, 5).unwrap();
    let prod = &g(bp, Gen::E2) * &g(bp, Gen::E1);
    let u = ubar(5);
    assert_eq!(prod.embed(u).unwrap(), &g(u, Gen::E2) * &g(u, Gen::E1));
    assert!(g(u, Gen::F1).try_mul(&g(bp, Gen::E1)).is_err());
}

#[test]
fn central_elements_before_quotient() {
    for d in [3, 5] {
        let amb = AlgebraSpec::with_mode(AlgebraKind::Ubar, Mode::Ambient { bound: 2 * d as u16 + 2 }, d).unwrap();
        let central = [gp(amb, Gen::F1, d), gp(amb, Gen::K1, d), gp(amb, Gen::K2, d), gp(amb, Gen::E1, d)];
        for c in &central {
            for x in Gen::ALL {
                let gx = g(amb, x);
                assert_eq!(&gx * c, c * &gx, "{c} vs {x:?}");
            }
        }
        // f1^(d-1) is not central
        let f = gp(amb, Gen::F1, d - 1);
        assert_ne!(&g(amb, Gen::E1) * &f, &f * &g(amb, Gen::E1));
    }
}

#[test]
fn json_round_trip() {
    let u = ubar(3);
    let x = &(&g(u, Gen::E2) * &g(u, Gen::E1)) + &bracket_k1(u, 1).unwrap();
    let j = serde_json::to_string(&x.to_json().unwrap()).unwrap();
    let back: ElementJson = serde_json::from_str(&j).unwrap();
    assert_eq!(Element::from_json(&back).unwrap(), x);
    let bp = AlgebraSpec::get(AlgebraKind::BPlus, 3).unwrap();
    let y = g(bp, Gen::E3);
    let json = y.to_json().unwrap();
    assert_eq!(json.terms[0].m, vec![0, 0, 0, 1, 0]);
    assert_eq!(Element::from_json(&json).unwrap(), y);
}
