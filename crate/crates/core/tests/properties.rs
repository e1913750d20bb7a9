use proptest::prelude::*;
use superq::centralizer::{BraidWord, Centralizer};
use superq::hopf::Hopf;
use superq::rep::RepContext;
use superq::{AlgebraSpec, Element, Gen};

fn basis_element(d: i64, idx: usize) -> Element {
    let u = AlgebraSpec::ubar(d).unwrap();
    let basis = u.basis();
    Element::from_mono(u, basis[idx % basis.len()])
}

fn word_strategy() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..8, 1i64..3), 1..5)
}

fn word_element(d: i64, w: &[(usize, i64)]) -> Element {
    let u = AlgebraSpec::ubar(d).unwrap();
    let w: Vec<(Gen, i64)> = w.iter().map(|&(g, n)| (Gen::ALL[g], n)).collect();
    Element::word(u, &w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_associative(a in 0usize..1296, b in 0usize..1296, c in 0usize..1296) {
        let (a, b, c) = (basis_element(3, a), basis_element(3, b), basis_element(3, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn products_add_parities(a in 0usize..10000, b in 0usize..10000) {
        let (a, b) = (basis_element(5, a), basis_element(5, b));
        let p = (a.parity().unwrap() + b.parity().unwrap()) % 2;
        prop_assert!((&a * &b).terms().iter().all(|(m, _)| m.parity() == p));
    }

    #[test]
    fn coproduct_is_multiplicative(x in word_strategy(), y in word_strategy()) {
        let hopf = Hopf::get(AlgebraSpec::ubar(3).unwrap()).unwrap();
        let (x, y) = (word_element(3, &x), word_element(3, &y));
        let lhs = hopf.coproduct(&(&x * &y)).unwrap();
        let rhs = hopf.coproduct(&x).unwrap().try_mul(&hopf.coproduct(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho2_is_a_morphism(mu in 1i64..4, x in word_strategy(), y in word_strategy()) {
        let rc = RepContext::new(5, mu).unwrap();
        let (x, y) = (word_element(5, &x), word_element(5, &y));
        let lhs = rc.rho_n(&(&x * &y), 2).unwrap();
        let rhs = rc.rho_n(&x, 2).unwrap().mul(&rc.rho_n(&y, 2).unwrap());
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn braid_words_print_and_parse(letters in prop::collection::vec(1u8..5, 1..9)) {
        let w = BraidWord(letters);
        prop_assert_eq!(BraidWord::parse(&w.to_string()), Some(w));
    }
}

#[test]
fn braid_generators_commute_with_the_action() {
    for mu in 1..4 {
        let cz = Centralizer::new(5, mu, 3).unwrap();
        for x in cz.rho_generators().unwrap() {
            for i in 1..3 {
                let c = cz.generator(i).unwrap();
                assert!(c.mul(x) == x.mul(c), "mu = {mu}, g{i}");
            }
        }
    }
}
