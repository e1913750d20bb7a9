use super::{AlgebraSpec, Element, Gen};
use crate::error::Result;
use crate::scalar::{FieldContext, Scalar};

/// A word in the generators; negative exponents only on `k1`, `k2`.
pub type Word = Vec<(Gen, i64)>;

/// `Σ c · word = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub terms: Vec<(Scalar, Word)>,
}

impl Relation {
    /// Evaluate in a PBW algebra.
    pub fn evaluate(&self, spec: &'static AlgebraSpec) -> Result<Element> {
        let mut acc = Element::zero(spec);
        for (c, w) in &self.terms {
            acc = acc.try_add(&Element::word(spec, w)?.scale(c))?;
        }
        Ok(acc)
    }
}

/// Defining relations of `Ū` at the order of `ctx`, including the definitions
/// of `e3`, `f3` and the quotient by the central elements.
pub fn defining_relations(ctx: &'static FieldContext) -> Vec<Relation> {
    use Gen::*;
    let q = |n: i64| Scalar::q_power(ctx, n);
    let one = Scalar::one(ctx);
    let neg = -&one;
    let inv = (&q(1) - &q(-1)).invert().expect("q^2 != 1");
    let qq = &q(1) + &q(-1);
    let d = ctx.d() as i64;
    let w = |parts: &[(Gen, i64)]| parts.to_vec();
    let commute = |name, a: Gen, b: Gen, c: Scalar| Relation {
        name,
        terms: vec![(one.clone(), w(&[(a, 1), (b, 1)])), (-&c, w(&[(b, 1), (a, 1)]))],
    };
    vec![
        Relation { name: "k1 k1^-1 = 1", terms: vec![(one.clone(), w(&[(K1, 1), (K1, -1)])), (neg.clone(), vec![])] },
        Relation { name: "k2 k2^-1 = 1", terms: vec![(one.clone(), w(&[(K2, 1), (K2, -1)])), (neg.clone(), vec![])] },
        commute("k1 k2 = k2 k1", K1, K2, one.clone()),
        commute("e1 k1 = q^-2 k1 e1", E1, K1, q(-2)),
        commute("e2 k1 = q k1 e2", E2, K1, q(1)),
        commute("e1 k2 = q k2 e1", E1, K2, q(1)),
        commute("e2 k2 = k2 e2", E2, K2, one.clone()),
        commute("k1 f1 = q^-2 f1 k1", K1, F1, q(-2)),
        commute("k1 f2 = q f2 k1", K1, F2, q(1)),
        commute("k2 f1 = q f1 k2", K2, F1, q(1)),
        commute("k2 f2 = f2 k2", K2, F2, one.clone()),
        Relation {
            name: "e1 f1 - f1 e1 = (k1 - k1^-1)/(q - q^-1)",
            terms: vec![
                (one.clone(), w(&[(E1, 1), (F1, 1)])),
                (neg.clone(), w(&[(F1, 1), (E1, 1)])),
                (-&inv, w(&[(K1, 1)])),
                (inv.clone(), w(&[(K1, -1)])),
            ],
        },
        Relation {
            name: "e2 f2 + f2 e2 = (k2 - k2^-1)/(q - q^-1)",
            terms: vec![
                (one.clone(), w(&[(E2, 1), (F2, 1)])),
                (one.clone(), w(&[(F2, 1), (E2, 1)])),
                (-&inv, w(&[(K2, 1)])),
                (inv.clone(), w(&[(K2, -1)])),
            ],
        },
        commute("e1 f2 = f2 e1", E1, F2, one.clone()),
        commute("e2 f1 = f1 e2", E2, F1, one.clone()),
        Relation { name: "e2^2 = 0", terms: vec![(one.clone(), w(&[(E2, 2)]))] },
        Relation { name: "f2^2 = 0", terms: vec![(one.clone(), w(&[(F2, 2)]))] },
        Relation {
            name: "e1^2 e2 - [2] e1 e2 e1 + e2 e1^2 = 0",
            terms: vec![
                (one.clone(), w(&[(E1, 2), (E2, 1)])),
                (-&qq, w(&[(E1, 1), (E2, 1), (E1, 1)])),
                (one.clone(), w(&[(E2, 1), (E1, 2)])),
            ],
        },
        Relation {
            name: "f1^2 f2 - [2] f1 f2 f1 + f2 f1^2 = 0",
            terms: vec![
                (one.clone(), w(&[(F1, 2), (F2, 1)])),
                (-&qq, w(&[(F1, 1), (F2, 1), (F1, 1)])),
                (one.clone(), w(&[(F2, 1), (F1, 2)])),
            ],
        },
        Relation {
            name: "e3 = e1 e2 - q^-1 e2 e1",
            terms: vec![
                (one.clone(), w(&[(E3, 1)])),
                (neg.clone(), w(&[(E1, 1), (E2, 1)])),
                (q(-1), w(&[(E2, 1), (E1, 1)])),
            ],
        },
        Relation {
            name: "f3 = f2 f1 - q f1 f2",
            terms: vec![
                (one.clone(), w(&[(F3, 1)])),
                (neg.clone(), w(&[(F2, 1), (F1, 1)])),
                (q(1), w(&[(F1, 1), (F2, 1)])),
            ],
        },
        Relation { name: "e1^d = 0", terms: vec![(one.clone(), w(&[(E1, d)]))] },
        Relation { name: "f1^d = 0", terms: vec![(one.clone(), w(&[(F1, d)]))] },
        Relation { name: "k1^d = 1", terms: vec![(one.clone(), w(&[(K1, d)])), (neg.clone(), vec![])] },
        Relation { name: "k2^d = 1", terms: vec![(one.clone(), w(&[(K2, d)])), (neg, vec![])] },
    ]
}
