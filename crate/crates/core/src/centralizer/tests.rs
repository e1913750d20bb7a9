use super::*;
use crate::linalg::inverse;
use crate::report::Report;

fn words(b: &SpanBasis) -> Vec<String> {
    b.words.iter().map(|w| w.to_string()).collect()
}

fn assert_pass(r: &Report) {
    if let Some(c) = r.first_failure() {
        panic!("{} failed on {}: {:?} vs {:?}", c.check, c.input, c.lhs, c.rhs);
    }
}

#[test]
fn generator_padding() {
    let rc = RepContext::new(5, 1).unwrap();
    assert_eq!(braid_generator(2, 1, &rc).unwrap(), c_matrix(&rc).unwrap());
    assert!(matches!(braid_generator(3, 3, &rc), Err(Error::IndexError(_))));
    assert!(matches!(braid_generator(3, 0, &rc), Err(Error::IndexError(_))));
    assert_eq!(braid_generator(4, 2, &rc).unwrap().rows(), 256);
}

#[test]
fn caps() {
    assert!(matches!(Centralizer::with_cap(5, 1, 5, 4), Err(Error::CapExceeded { n: 5, cap: 4 })));
    assert!(matches!(Centralizer::new(5, 0, 3), Err(Error::InvalidMu { .. })));
    assert!(Centralizer::with_cap(5, 1, 3, 3).is_ok());
}

#[test]
fn basis_small_n() {
    let cz = Centralizer::new(5, 1, 1).unwrap();
    assert_eq!(words(&cz.basis().unwrap()), ["1"]);
    assert_eq!(cz.commutant_dimension().unwrap().dim, 1);
    let cz = Centralizer::new(5, 2, 2).unwrap();
    assert_eq!(words(&cz.basis().unwrap()), ["1", "g1", "g1^2"]);
    assert_eq!(cz.commutant_dimension().unwrap().dim, 3);
}

#[test]
fn basis_n3_is_the_listed_one() {
    let listed = [
        "1", "g1", "g2", "g1^2", "g1 g2", "g2 g1", "g2^2", "g1^2 g2", "g1 g2 g1", "g1 g2^2", "g2 g1^2", "g2^2 g1",
        "g1^2 g2 g1", "g1^2 g2^2", "g1 g2 g1^2", "g1 g2^2 g1", "g2 g1^2 g2", "g2^2 g1^2", "g1^2 g2 g1^2", "g1^2 g2^2 g1",
    ];
    for (d, mu) in [(5, 1), (5, 3), (7, 2)] {
        let cz = Centralizer::new(d, mu, 3).unwrap();
        let b = cz.basis().unwrap();
        assert_eq!(words(&b), listed);
        assert!(b.verify_witness());
        let dim = cz.commutant_dimension().unwrap();
        assert_eq!((dim.dim, dim.method.as_str()), (20, "exact_elimination"));
    }
}

#[test]
fn basis_n4_size_and_certificate() {
    let cz = Centralizer::new(5, 1, 4).unwrap();
    let b = cz.basis().unwrap();
    assert_eq!(b.len(), 175);
    assert_eq!(b.stop, StopReason::ModularBound);
    let dim = cz.commutant_dimension().unwrap();
    assert_eq!((dim.dim, dim.method.as_str(), dim.modular_bound), (175, "exact_elimination", 175));
    assert!(b.words.windows(2).all(|w| w[0] < w[1]));
    assert!(b.words.iter().all(|w| !is_filtered(w, 4, Exclusion::default())));
}

#[test]
fn listed_subwords_alone_pick_other_representatives() {
    let cz = Centralizer::new(5, 1, 4).unwrap();
    let default = cz.basis().unwrap();
    let listed = enumerate_basis_with(&cz, Exclusion::ListedSubwords).unwrap();
    assert_eq!(listed.len(), 175);
    let extra: Vec<String> = listed.words.iter().filter(|w| !default.words.contains(w)).map(|w| w.to_string()).collect();
    assert_eq!(extra, ["g1 g2 g3 g2^2 g3", "g3 g2 g1^2 g2 g3", "g1^2 g2 g3 g2^2 g3"]);
    assert_eq!(span_rank(&cz, &listed.words).unwrap().rank, 175);
}

#[test]
fn commutant_matches_basis_size() {
    for (d, mu, n) in [(5, 1, 2), (5, 2, 2), (5, 1, 3), (7, 1, 3), (7, 4, 3)] {
        let rc = RepContext::new(d, mu).unwrap();
        let cz = Centralizer::new(d, mu, n).unwrap();
        assert_eq!(commutant_dimension(n, &rc).unwrap(), cz.basis().unwrap().len());
    }
}

#[test]
fn braid_image_is_smaller_when_roots_collide() {
    // mu = (d-1)/2 makes q^(4mu+2) = 1, a double root of the cubic.
    for (d, mu) in [(5, 2), (7, 3)] {
        let cz = Centralizer::new(d, mu, 3).unwrap();
        let b = cz.basis().unwrap();
        assert_eq!((b.len(), b.stop), (15, StopReason::Exhausted));
        assert_eq!(cz.commutant_dimension().unwrap().dim, 20);
        let rep = decomposition_check(&cz).unwrap();
        assert!(rep.get("induction_span").unwrap().pass);
        assert!(rep.get("bimodule_inclusion").unwrap().pass);
        assert!(!rep.get("commutant").unwrap().pass);
        assert_pass(&braid_check(&cz).unwrap());
        assert_pass(&l3_relations_check(d, mu).unwrap());
    }
}

#[test]
fn determining_set_is_injective_on_words() {
    // Two words with equal coordinates must have equal matrices.
    let cz = Centralizer::new(5, 1, 3).unwrap();
    let a = BraidWord::new(&[1, 2, 1]);
    let b = BraidWord::new(&[2, 1, 2]);
    assert_eq!(cz.word_vector(&a).unwrap(), cz.word_vector(&b).unwrap());
    assert_eq!(cz.word_matrix(&a).unwrap(), cz.word_matrix(&b).unwrap());
    let c = BraidWord::new(&[2, 1, 1]);
    assert_ne!(cz.word_vector(&a).unwrap(), cz.word_vector(&c).unwrap());
}

#[test]
fn relations_at_n2_and_n3() {
    for (d, mu) in [(5, 1), (5, 3), (7, 1), (7, 2)] {
        let rc = RepContext::new(d, mu).unwrap();
        assert_pass(&minimal_relation_check(&rc).unwrap());
        assert_pass(&l3_relations_check(d, mu).unwrap());
        let cz = Centralizer::new(d, mu, 3).unwrap();
        assert_pass(&braid_check(&cz).unwrap());
        assert_pass(&decomposition_check(&cz).unwrap());
        assert_pass(&closure_check(&cz, 0, 0).unwrap());
    }
}

#[test]
fn expansion_of_g2_g1sq_g2sq_at_d7() {
    assert_pass(&l3_relations_check(7, 2).unwrap());
}

#[test]
fn spectrum_at_d3() {
    // Oracle: g1 - lambda is singular iff Gauss-Jordan inversion fails.
    let rc = RepContext::new(3, 1).unwrap();
    let g = braid_generator(2, 1, &rc).unwrap();
    let ctx = rc.ctx();
    let dense = |m: &RepMatrix| -> Vec<Vec<Scalar>> {
        (0..16).map(|i| (0..16).map(|j| m.get(i, j).cloned().unwrap_or_else(|| Scalar::zero(ctx))).collect()).collect()
    };
    let shift = |l: &Scalar| g.sub(&RepMatrix::identity(16, l));
    let roots = [Scalar::one(ctx), -&Scalar::q_power(ctx, 2), Scalar::q_power(ctx, 6)];
    assert_eq!(roots[2], roots[0]);
    for l in &roots {
        assert!(inverse(&dense(&shift(l))).is_none());
    }
    for l in [Scalar::q(ctx), -&Scalar::one(ctx), Scalar::q_power(ctx, 2)] {
        assert!(inverse(&dense(&shift(&l))).is_some());
    }
    assert_pass(&minimal_relation_check(&rc).unwrap());
}

#[test]
fn basis_json_round_trip() {
    let cz = Centralizer::new(5, 1, 2).unwrap();
    let json = serde_json::to_value(cz.basis().unwrap().to_json()).unwrap();
    assert_eq!(json, serde_json::json!({"n": 2, "d": 5, "mu": 1, "words": [[], [1], [1, 1]], "dim": 3}));
    let back: BasisJson = serde_json::from_value(json).unwrap();
    assert_eq!(back.dim, 3);
}

