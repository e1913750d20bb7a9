use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use smallvec::smallvec;

use super::dual::Dual;
use super::quantum_double::{chi, DoubleElement};
use crate::error::{Error, Result};
use crate::hopf::{Hopf, Key, TensorElement, TensorJson};
use crate::pbw::{AlgebraSpec, Element, Gen, Mono};
use crate::report::Report;
use crate::scalar::{q_factorial, q_paren_factorial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RForm {
    Mult,
    Coeff,
}

impl RForm {
    pub fn name(self) -> &'static str {
        match self {
            RForm::Mult => "mult",
            RForm::Coeff => "coeff",
        }
    }
}

/// The universal R-matrix of `Ū` as an even element of `Ū ⊗ Ū`.
pub struct RMatrix {
    form: RForm,
    r: TensorElement,
    inverse: OnceLock<TensorElement>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RMatrixJson {
    pub d: i64,
    pub form: RForm,
    pub terms: usize,
    pub tensor: TensorJson,
}

impl RMatrix {
    pub fn new(form: RForm, r: TensorElement) -> RMatrix {
        RMatrix { form, r, inverse: OnceLock::new() }
    }

    pub fn d(&self) -> i64 {
        self.r.spec().d()
    }

    pub fn form(&self) -> RForm {
        self.form
    }

    pub fn tensor(&self) -> &TensorElement {
        &self.r
    }

    /// `R^{-1} = (S ⊗ id)(R)`, computed once.
    pub fn inverse(&self) -> Result<&TensorElement> {
        if let Some(x) = self.inverse.get() {
            return Ok(x);
        }
        let inv = r_inverse(&self.r)?;
        Ok(self.inverse.get_or_init(|| inv))
    }

    pub fn to_json(&self) -> RMatrixJson {
        RMatrixJson { d: self.d(), form: self.form, terms: self.r.len(), tensor: self.r.to_json() }
    }

    pub fn from_json(json: &RMatrixJson) -> Result<RMatrix> {
        let r = TensorElement::from_json(&json.tensor)?;
        if r.arity() != 2 || r.spec().d() != json.d || r.len() != json.terms {
            return Err(Error::Parse("R-matrix metadata does not match its terms".into()));
        }
        Ok(RMatrix::new(json.form, r))
    }
}

fn word(u: &'static AlgebraSpec, w: &[(Gen, i64)]) -> Result<Element> {
    Element::word(u, w)
}

/// `exp_{q^2}(x) = Σ x^n / (n)_{q^2}!`, truncated once `x^n` vanishes.
pub fn exp_q2(x: &TensorElement) -> Result<TensorElement> {
    let spec = x.spec();
    let ctx = spec.ctx();
    let d = spec.d();
    let mut acc = TensorElement::one(spec, x.arity());
    let mut power = TensorElement::one(spec, x.arity());
    for n in 1..=d {
        power = power.try_mul(x)?;
        if power.is_zero() {
            return Ok(acc);
        }
        if n == d {
            break;
        }
        let denom = q_paren_factorial(ctx, n as u32, 2).invert()?;
        acc = acc.try_add(&power.scale(&denom))?;
    }
    Err(Error::NotNilpotent(d as u32))
}

/// `R̃`, the product of the four `q^2`-exponentials.
pub fn r_tilde(d: i64) -> Result<TensorElement> {
    use Gen::*;
    let u = AlgebraSpec::ubar(d)?;
    let ctx = u.ctx();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let qq = &q(1) - &q(-1);
    let pair = |a: &[(Gen, i64)], b: &[(Gen, i64)]| -> Result<TensorElement> {
        TensorElement::pure(&[&word(u, a)?, &word(u, b)?])
    };
    let e3 = exp_q2(&pair(&[(E3, 1)], &[(F3, 1)])?.scale(&qq))?;
    let e2 = exp_q2(&pair(&[(E2, 1)], &[(F2, 1)])?.scale(&qq))?;
    let e1 = exp_q2(&pair(&[(E1, 1)], &[(F1, 1)])?.scale(&-&qq))?;
    let c32 = -&(&(&q(2) - &q(0)) * &qq.square());
    let e32 = exp_q2(&pair(&[(E3, 1), (E2, 1)], &[(F3, 1), (F2, 1)])?.scale(&c32))?;
    e3.try_mul(&e2)?.try_mul(&e1)?.try_mul(&e32)
}

/// `K = d^{-2} Σ q^{i1(2i2-j2) - j1 i2} k1^{i2} k2^{j2} ⊗ k1^{i1} k2^{j1}`.
pub fn k_factor(d: i64) -> Result<TensorElement> {
    let u = AlgebraSpec::ubar(d)?;
    let ctx = u.ctx();
    let norm = Scalar::from_ratio(ctx, 1, d * d)?;
    let mut terms = Vec::with_capacity((d * d * d * d) as usize);
    for i1 in 0..d {
        for j1 in 0..d {
            for i2 in 0..d {
                for j2 in 0..d {
                    let left = Mono([0, 0, 0, i2 as i16, j2 as i16, 0, 0, 0]);
                    let right = Mono([0, 0, 0, i1 as i16, j1 as i16, 0, 0, 0]);
                    let c = &norm * &Scalar::q_power(ctx, i1 * (2 * i2 - j2) - j1 * i2);
                    terms.push((smallvec![left, right] as Key, c));
                }
            }
        }
    }
    Ok(TensorElement::from_terms(u, 2, terms))
}

/// `R̄ = R̃ K`.
pub fn r_multiplicative(d: i64) -> Result<RMatrix> {
    Ok(RMatrix::new(RForm::Mult, r_tilde(d)?.try_mul(&k_factor(d)?)?))
}

/// The six coefficient families summed over `i1, j1, i2, j2, r`.
pub fn r_coefficient(d: i64) -> Result<RMatrix> {
    let u = AlgebraSpec::ubar(d)?;
    let ctx = u.ctx();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let qq = &q(1) - &q(-1);
    let norm = Scalar::from_ratio(ctx, 1, d * d)?;
    let sign = |n: i64| if n % 2 == 0 { Scalar::one(ctx) } else { -&Scalar::one(ctx) };
    let facts: Vec<Scalar> = (0..d).map(|r| q_factorial(ctx, r as u32).invert()).collect::<Result<_>>()?;
    // (leading sign, power of (q - q^-1), factorial index) per family, exponent added below
    let mut terms = Vec::new();
    for r in 0..d {
        for i2 in 0..d {
            for j2 in 0..d {
                for i1 in 0..d {
                    for j1 in 0..d {
                        let base = -r * (2 * i2 - j2) - r * (r - 1) / 2 + i1 * (2 * i2 - j2) - j1 * i2;
                        let coef = |s: i64, pw: i64, fact: &Scalar, e: i64| -> Scalar {
                            &(&(&sign(s) * &qq.pow(pw as u64)) * &(&norm * fact)) * &q(e)
                        };
                        let left = |h: i16, t: i16| Mono([0, 0, 0, i2 as i16, j2 as i16, r as i16, h, t]);
                        let right = |r1: i64, h: i16, t: i16| Mono([r1 as i16, h, t, i1 as i16, j1 as i16, 0, 0, 0]);
                        let f = &facts[r as usize];
                        terms.push((smallvec![left(0, 0), right(r, 0, 0)] as Key, coef(r, r, f, base)));
                        terms.push((smallvec![left(1, 1), right(r, 1, 1)], coef(r + 1, r + 2, f, base + j2 + 2)));
                        terms.push((smallvec![left(1, 0), right(r, 1, 0)], coef(r, r + 1, f, base - i2 + j2 + 2)));
                        if r + 1 < d {
                            terms.push((smallvec![left(1, 0), right(r + 1, 0, 1)], coef(r, r + 2, f, base - i2 + j2 + 2)));
                        }
                        let e01 = -r * (2 * i2 - j2 - 2) - r * (r - 1) / 2 + i1 * (2 * i2 - j2) - j1 * i2 + i2;
                        terms.push((smallvec![left(0, 1), right(r, 0, 1)], coef(r, r + 1, f, e01)));
                        if r >= 1 {
                            let e = -r * (2 * i2 - j2 - 1) - r * (r - 1) / 2 + i1 * (2 * i2 - j2) - j1 * i2 + i2;
                            let f = &facts[r as usize - 1];
                            terms.push((smallvec![left(0, 1), right(r - 1, 1, 0)], coef(r, r + 1, f, e)));
                        }
                    }
                }
            }
        }
    }
    Ok(RMatrix::new(RForm::Coeff, TensorElement::from_terms(u, 2, terms)))
}

/// `R = Σ_b b ⊗ χ(b^* ⊗ 1)` over the basis of `B+`, with `b^*` the dual basis in `X`.
pub fn r_canonical(d: i64) -> Result<TensorElement> {
    let dual = Dual::get(d)?;
    let u = AlgebraSpec::ubar(d)?;
    let ctx = u.ctx();
    let n = dual.basis().len();
    let mut terms = Vec::new();
    for (j, b) in dual.basis().iter().enumerate() {
        let mut e = vec![Scalar::zero(ctx); n];
        e[j] = Scalar::one(ctx);
        let right = chi(&DoubleElement::from_x(&dual.to_x(&e))?)?;
        for (m, c) in right.terms() {
            terms.push((smallvec![*b, *m] as Key, c.clone()));
        }
    }
    Ok(TensorElement::from_terms(u, 2, terms))
}

/// `(S ⊗ id)(R)`.
pub fn r_inverse(r: &TensorElement) -> Result<TensorElement> {
    let hopf = Hopf::get(r.spec())?;
    r.map_leg(0, |m| hopf.antipode_mono(m))
}

/// Checks of the braided structure. `full` adds the identities in `Ū^{⊗3}` and
/// the inverse/antipode identities; `ybe` adds the abstract Yang-Baxter equation.
pub fn verify_quasitriangular(d: i64, full: bool, ybe: bool) -> Result<Report> {
    let u = AlgebraSpec::ubar(d)?;
    let hopf = Hopf::get(u)?;
    let mut report = Report::new();
    let mult = r_multiplicative(d)?;
    let coeff = r_coefficient(d)?;
    let r = mult.tensor();
    let label = |what: &str| format!("{what}, d = {d}");
    report.describe("forms_agree", label(&format!("{} terms", r.len())));
    report.expect_eq("forms_agree", || "mult vs coeff".into(), r, coeff.tensor());
    report.describe("even", label("every term"));
    report.expect("even", || "R".into(), r.is_even());

    let gens: Vec<Element> = Gen::ALL.iter().map(|g| Element::gen(u, *g)).collect::<Result<_>>()?;
    report.describe("quasi_cocommutative", label("R Δ(g) = Δ^op(g) R for 8 generators"));
    for g in &gens {
        let lhs = r.try_mul(&hopf.coproduct(g)?)?;
        let rhs = hopf.coproduct_op(g)?.try_mul(r)?;
        report.expect_eq("quasi_cocommutative", || g.to_string(), &lhs, &rhs);
    }
    if !full {
        return Ok(report);
    }

    let one2 = TensorElement::one(u, 2);
    let inv = mult.inverse()?;
    report.describe("inverse", label("R (S ⊗ id)(R) = (S ⊗ id)(R) R = 1 ⊗ 1"));
    report.expect_eq("inverse", || "R (S ⊗ id)R".into(), &r.try_mul(inv)?, &one2);
    report.expect_eq("inverse", || "(S ⊗ id)R R".into(), &inv.try_mul(r)?, &one2);
    report.describe("inverse_antipodes", label("(S ⊗ id)(R) = (id ⊗ S^-1)(R)"));
    let inv2 = r.map_leg(1, |m| hopf.antipode_inv_mono(m))?;
    report.expect_eq("inverse_antipodes", || "R".into(), inv, &inv2);

    report.describe("antipode_invariance", label("(S ⊗ S)(R) = R"));
    let ss = r.map_leg(0, |m| hopf.antipode_mono(m))?.map_leg(1, |m| hopf.antipode_mono(m))?;
    report.expect_eq("antipode_invariance", || "R".into(), &ss, r);

    report.describe("counit", label("(ε ⊗ id)(R) = (id ⊗ ε)(R) = 1"));
    let one1 = TensorElement::one(u, 1);
    report.expect_eq("counit", || "(ε ⊗ id)R".into(), &r.contract_leg(0, |m| hopf.counit_mono(m)), &one1);
    report.expect_eq("counit", || "(id ⊗ ε)R".into(), &r.contract_leg(1, |m| hopf.counit_mono(m)), &one1);

    let r12 = r.place(3, &[0, 1]);
    let r13 = r.place(3, &[0, 2]);
    let r23 = r.place(3, &[1, 2]);
    report.describe("coproduct_left", label("(Δ ⊗ id)(R) = R13 R23"));
    report.expect_eq("coproduct_left", || "R".into(), &hopf.coproduct_leg(r, 0)?, &r13.try_mul(&r23)?);
    report.describe("coproduct_right", label("(id ⊗ Δ)(R) = R13 R12"));
    report.expect_eq("coproduct_right", || "R".into(), &hopf.coproduct_leg(r, 1)?, &r13.try_mul(&r12)?);

    if ybe {
        report.describe("yang_baxter", label("R12 R13 R23 = R23 R13 R12"));
        let lhs = r12.try_mul(&r13)?.try_mul(&r23)?;
        let rhs = r23.try_mul(&r13)?.try_mul(&r12)?;
        report.expect_eq("yang_baxter", || "R".into(), &lhs, &rhs);
    }
    Ok(report)
}
