use super::*;
use crate::pbw::{Element, Gen};
use crate::scalar::q_int;

fn col(m: &RepMatrix, j: usize) -> Vec<(usize, Scalar)> {
    m.transpose().row(j).clone()
}

#[test]
fn invalid_mu_rejected() {
    assert!(matches!(RepContext::new(5, 0), Err(Error::InvalidMu { d: 5, mu: 0 })));
    assert!(matches!(RepContext::new(5, 4), Err(Error::InvalidMu { d: 5, mu: 4 })));
    assert!(matches!(RepContext::new(5, -1), Err(Error::InvalidMu { .. })));
    assert!(RepContext::new(5, 1).is_ok());
}

#[test]
fn k2_and_f1_actions() {
    let rc = RepContext::new(5, 2).unwrap();
    let ctx = rc.ctx();
    for s in 0..2u8 {
        for r in 0..2u8 {
            let i = weight_index(s, r);
            let want = vec![(i, Scalar::q_power(ctx, 2 + s as i64))];
            assert_eq!(col(rc.gen_action(Gen::K2), i), want);
            let f1 = col(rc.gen_action(Gen::F1), i);
            if (s, r) == (0, 1) {
                assert_eq!(f1, vec![(weight_index(1, 0), -&Scalar::q_power(ctx, -1))]);
            } else {
                assert!(f1.is_empty());
            }
        }
    }
}

#[test]
fn e1_to_the_d_is_zero() {
    let rc = RepContext::new(7, 3).unwrap();
    assert!(rc.word_action(&vec![(Gen::E1, 7)]).is_zero());
    assert!(rc.word_action(&vec![(Gen::F1, 7)]).is_zero());
    assert!(!rc.word_action(&vec![(Gen::E1, 1)]).is_zero());
}

#[test]
fn rho_small_cases() {
    let rc = RepContext::new(5, 1).unwrap();
    let k1 = Element::gen(rc.ubar(), Gen::K1).unwrap();
    assert_eq!(&rc.rho_n(&k1, 1).unwrap(), rc.gen_action(Gen::K1));
    let g = rc.gen_action(Gen::K1);
    assert_eq!(rc.rho_n(&k1, 2).unwrap(), g.kron(g));
    assert_eq!(rc.rho_n(&k1, 3).unwrap(), g.kron(g).kron(g));
}

#[test]
fn rho2_e2_on_odd_pair() {
    // (e2 ⊗ 1 + k2 ⊗ e2) on an odd ⊗ odd pair: the second leg picks up a sign and [μ] from e2.
    for (d, mu) in [(5, 1), (7, 4)] {
        let rc = RepContext::new(d, mu).unwrap();
        let ctx = rc.ctx();
        let e2 = Element::gen(rc.ubar(), Gen::E2).unwrap();
        let m = rc.rho_n(&e2, 2).unwrap();
        let (w00, w01) = (weight_index(0, 0), weight_index(0, 1));
        let mut want = vec![
            (tensor_index(&[w00, w01]), q_int(ctx, mu)),
            (tensor_index(&[w01, w00]), -&(&Scalar::q_power(ctx, mu) * &q_int(ctx, mu))),
        ];
        want.sort_by_key(|e| e.0);
        assert_eq!(col(&m, tensor_index(&[w01, w01])), want);
    }
}

#[test]
fn c_matrix_examples() {
    let rc = RepContext::new(5, 1).unwrap();
    let ctx = rc.ctx();
    let c = c_matrix(&rc).unwrap();
    let (o, a, t) = (weight_index(0, 0), weight_index(1, 0), weight_index(1, 1));
    let oo = tensor_index(&[o, o]);
    assert_eq!(col(&c, oo), vec![(oo, Scalar::one(ctx))]);
    let tt = tensor_index(&[t, t]);
    assert_eq!(col(&c, tt), vec![(tt, Scalar::q_power(ctx, 6))]);
    let qq = &Scalar::q(ctx) - &Scalar::q_power(ctx, -1);
    let mut want = vec![
        (tensor_index(&[o, a]), Scalar::q(ctx)),
        (tensor_index(&[a, o]), -&(&Scalar::q(ctx) * &qq)),
    ];
    want.sort_by_key(|e| e.0);
    assert_eq!(col(&c, tensor_index(&[a, o])), want);
}

#[test]
fn tau_is_an_involution() {
    let rc = RepContext::new(5, 1).unwrap();
    let t = tau(&rc);
    assert_eq!(t.mul(&t), rc.identity(2));
}

#[test]
fn matrix_json_and_csv_round_trip() {
    let rc = RepContext::new(5, 2).unwrap();
    let c = c_matrix(&rc).unwrap();
    let json = serde_json::to_string(&MatrixJson::from_matrix(&c)).unwrap();
    let back: MatrixJson = serde_json::from_str(&json).unwrap();
    assert_eq!(back.dim, 16);
    assert_eq!(back.to_matrix().unwrap(), c);
    assert_eq!(from_csv(rc.ctx(), 16, &to_csv(&c)).unwrap(), c);
}

#[test]
fn full_check_all_mu() {
    for d in [5, 7] {
        for mu in 1..d - 1 {
            let r = check(d, mu).unwrap();
            for c in r.checks.iter().filter(|c| !c.pass) {
                eprintln!("d={d} mu={mu}: {c:?}");
            }
            assert!(r.pass());
        }
    }
}
