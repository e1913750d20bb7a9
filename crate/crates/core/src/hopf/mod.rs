//! Coproduct, counit and antipodes on the PBW algebras, and the axiom checks.

mod tensor;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use parking_lot::RwLock;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::pbw::{AlgebraKind, AlgebraSpec, Element, Gen, Mode, Mono, SLOT_PARITY};
use crate::report::Report;
use crate::scalar::Scalar;

pub use tensor::{Key, TensorElement, TensorJson, TensorTermJson};

const DELTA_CACHE_LIMIT: usize = 1 << 16;

/// Hopf structure maps of a quotient PBW algebra. On `X` the tables coincide
/// with those of `B-` under `alpha_e1, alpha_e3, alpha_e2, alpha_k1, alpha_k2`
/// `<-> f1, f3, f2, k1, k2`.
pub struct Hopf {
    spec: &'static AlgebraSpec,
    /// `delta[slot][n] = Δ(g^n)`
    delta: Vec<Vec<TensorElement>>,
    antipode: Vec<Vec<Element>>,
    antipode_inv: Vec<Vec<Element>>,
    delta_cache: RwLock<FxHashMap<Mono, Arc<TensorElement>>>,
}

static HOPFS: OnceLock<Mutex<HashMap<usize, &'static Hopf>>> = OnceLock::new();

fn el(spec: &'static AlgebraSpec, word: &[(Gen, i64)]) -> Result<Element> {
    Element::word(spec, word)
}

fn t2(a: &Element, b: &Element) -> Result<TensorElement> {
    TensorElement::pure(&[a, b])
}

impl Hopf {
    pub fn get(spec: &'static AlgebraSpec) -> Result<&'static Hopf> {
        if spec.mode() != Mode::Quotient {
            return Err(Error::SpecMismatch("Hopf maps are defined on the quotient algebras".into()));
        }
        let key = spec as *const AlgebraSpec as usize;
        let registry = HOPFS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(h) = registry.lock().expect("hopf registry poisoned").get(&key) {
            return Ok(h);
        }
        let built: &'static Hopf = Box::leak(Box::new(Hopf::build(spec)?));
        let mut map = registry.lock().expect("hopf registry poisoned");
        Ok(*map.entry(key).or_insert(built))
    }

    fn generator_tables(spec: &'static AlgebraSpec, g: Gen) -> Result<(TensorElement, Element, Element)> {
        use Gen::*;
        let ctx = spec.ctx();
        let q = |n: i64| Scalar::q_power(ctx, n);
        let one = Element::one(spec);
        let x = Element::gen(spec, g)?;
        let qq = &q(1) - &q(-1);
        Ok(match g {
            K1 | K2 => {
                let inv = Element::gen_pow(spec, g, -1)?;
                (t2(&x, &x)?, inv.clone(), inv)
            }
            E1 | E2 => {
                let k = if g == E1 { K1 } else { K2 };
                let kx = Element::gen(spec, k)?;
                let delta = &t2(&x, &one)? + &t2(&kx, &x)?;
                let s = -&el(spec, &[(k, -1), (g, 1)])?;
                let sinv = if g == E1 { s.scale(&q(2)) } else { s.clone() };
                (delta, s, sinv)
            }
            F1 | F2 => {
                let k = if g == F1 { K1 } else { K2 };
                let kinv = Element::gen_pow(spec, k, -1)?;
                let delta = &t2(&x, &kinv)? + &t2(&one, &x)?;
                let s = -&el(spec, &[(g, 1), (k, 1)])?;
                let sinv = if g == F1 { s.scale(&q(-2)) } else { s.clone() };
                (delta, s, sinv)
            }
            E3 => {
                let delta = &(&t2(&el(spec, &[(K2, 1), (E1, 1)])?, &Element::gen(spec, E2)?)?.scale(&qq)
                    + &t2(&x, &one)?)
                    + &t2(&el(spec, &[(K1, 1), (K2, 1)])?, &x)?;
                let kk_e1e2 = el(spec, &[(K1, -1), (K2, -1), (E1, 1), (E2, 1)])?;
                let kk_e3 = el(spec, &[(K1, -1), (K2, -1), (E3, 1)])?;
                let s = &kk_e1e2.scale(&(&q(0) - &q(-2))) - &kk_e3;
                let sinv = &kk_e1e2.scale(&(&q(2) - &q(0))) - &kk_e3.scale(&q(2));
                (delta, s, sinv)
            }
            F3 => {
                let delta = &(&t2(&Element::gen(spec, F2)?, &el(spec, &[(F1, 1), (K2, -1)])?)?.scale(&-&qq)
                    + &t2(&one, &x)?)
                    + &t2(&x, &el(spec, &[(K1, -1), (K2, -1)])?)?;
                let f1f2kk = el(spec, &[(F1, 1), (F2, 1), (K1, 1), (K2, 1)])?;
                let f3kk = el(spec, &[(F3, 1), (K1, 1), (K2, 1)])?;
                let s = &f1f2kk.scale(&(&q(1) - &q(3))) - &f3kk.scale(&q(2));
                let sinv = &f1f2kk.scale(&(&q(-1) - &q(1))) - &f3kk;
                (delta, s, sinv)
            }
        })
    }

    fn build(spec: &'static AlgebraSpec) -> Result<Hopf> {
        let d = spec.d();
        let mut delta = vec![Vec::new(); 8];
        let mut antipode = vec![Vec::new(); 8];
        let mut antipode_inv = vec![Vec::new(); 8];
        for s in spec.kind().slots() {
            let g = Gen::from_slot(s);
            let (dg, sg, sig) = Hopf::generator_tables(spec, g)?;
            let cap = if SLOT_PARITY[s] == 1 { 2 } else { d };
            let mut dp = vec![TensorElement::one(spec, 2)];
            let mut sp = vec![Element::one(spec)];
            let mut sip = vec![Element::one(spec)];
            for n in 1..cap as usize {
                dp.push(dp[n - 1].try_mul(&dg)?);
                sp.push(sp[n - 1].try_mul(&sg)?);
                sip.push(sip[n - 1].try_mul(&sig)?);
            }
            delta[s] = dp;
            antipode[s] = sp;
            antipode_inv[s] = sip;
        }
        Ok(Hopf { spec, delta, antipode, antipode_inv, delta_cache: RwLock::new(FxHashMap::default()) })
    }

    pub fn spec(&self) -> &'static AlgebraSpec {
        self.spec
    }

    pub fn coproduct_mono(&self, m: &Mono) -> Result<Arc<TensorElement>> {
        if let Some(hit) = self.delta_cache.read().get(m) {
            return Ok(hit.clone());
        }
        let mut acc: Option<TensorElement> = None;
        for s in 0..8 {
            let n = m.0[s];
            if n == 0 {
                continue;
            }
            let f = &self.delta[s][n as usize];
            acc = Some(match acc {
                None => f.clone(),
                Some(a) => a.try_mul(f)?,
            });
        }
        let result = Arc::new(acc.unwrap_or_else(|| TensorElement::one(self.spec, 2)));
        let mut cache = self.delta_cache.write();
        if cache.len() >= DELTA_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(*m, result.clone());
        Ok(result)
    }

    pub fn coproduct(&self, x: &Element) -> Result<TensorElement> {
        let mut terms = Vec::new();
        for (m, c) in x.terms() {
            for (k, v) in self.coproduct_mono(m)?.terms() {
                terms.push((k.clone(), c * v));
            }
        }
        Ok(TensorElement::from_terms(self.spec, 2, terms))
    }

    /// `Δ` applied to leg `i` of a tensor.
    pub fn coproduct_leg(&self, t: &TensorElement, i: usize) -> Result<TensorElement> {
        t.expand_leg(i, |m| Ok((*self.coproduct_mono(m)?).clone()))
    }

    pub fn counit_mono(&self, m: &Mono) -> Scalar {
        let grouplike = (0..8).all(|s| s == 3 || s == 4 || m.0[s] == 0);
        if grouplike {
            Scalar::one(self.spec.ctx())
        } else {
            Scalar::zero(self.spec.ctx())
        }
    }

    pub fn counit(&self, x: &Element) -> Scalar {
        let mut acc = Scalar::zero(self.spec.ctx());
        for (m, c) in x.terms() {
            if !self.counit_mono(m).is_zero() {
                acc += c;
            }
        }
        acc
    }

    fn anti(&self, m: &Mono, table: &[Vec<Element>]) -> Result<Element> {
        let mut acc = Element::one(self.spec);
        for s in (0..8).rev() {
            let n = m.0[s];
            if n != 0 {
                acc = acc.try_mul(&table[s][n as usize])?;
            }
        }
        let odd = m.parity_count();
        Ok(if (odd * odd.saturating_sub(1) / 2) % 2 == 1 { -&acc } else { acc })
    }

    pub fn antipode_mono(&self, m: &Mono) -> Result<Element> {
        self.anti(m, &self.antipode)
    }

    pub fn antipode_inv_mono(&self, m: &Mono) -> Result<Element> {
        self.anti(m, &self.antipode_inv)
    }

    fn linear(&self, x: &Element, f: impl Fn(&Mono) -> Result<Element>) -> Result<Element> {
        let mut acc = Element::zero(self.spec);
        for (m, c) in x.terms() {
            acc = acc.try_add(&f(m)?.scale(c))?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &Element) -> Result<Element> {
        self.linear(x, |m| self.antipode_mono(m))
    }

    pub fn antipode_inv(&self, x: &Element) -> Result<Element> {
        self.linear(x, |m| self.antipode_inv_mono(m))
    }

    /// `Δ^op = τ ∘ Δ` with the graded flip.
    pub fn coproduct_op(&self, x: &Element) -> Result<TensorElement> {
        Ok(self.coproduct(x)?.flip())
    }

    /// `Δ^{(n-1)}(x)`, the iterated coproduct into `n` legs.
    pub fn iterated_coproduct(&self, x: &Element, n: usize) -> Result<TensorElement> {
        let mut t = TensorElement::from_element(x);
        for k in 1..n {
            t = self.coproduct_leg(&t, k - 1)?;
        }
        Ok(t)
    }
}

trait ParityCount {
    fn parity_count(&self) -> usize;
}

impl ParityCount for Mono {
    fn parity_count(&self) -> usize {
        (0..8).filter(|&s| SLOT_PARITY[s] == 1 && self.0[s] != 0).count()
    }
}

/// `n` distinct basis monomials drawn with a fixed seed.
pub fn sample_basis(spec: &AlgebraSpec, n: usize, seed: u64) -> Vec<Mono> {
    let mut basis = spec.basis();
    if n >= basis.len() {
        return basis;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (chosen, _) = basis.partial_shuffle(&mut rng, n);
    let mut v = chosen.to_vec();
    v.sort();
    v
}

/// The Hopf axioms on each sample monomial, plus multiplicativity of `Δ`
/// against every generator of the algebra.
pub fn check_hopf_axioms(hopf: &Hopf, sample: &[Mono]) -> Result<Report> {
    let spec = hopf.spec;
    let mut report = Report::new();
    let label = format!("{} {} monomials, d = {}", sample.len(), spec.kind().name(), spec.d());
    for name in [
        "coassociativity",
        "counit_left",
        "counit_right",
        "antipode_left",
        "antipode_right",
        "coproduct_morphism",
        "antipode_inverse",
        "counit_antipode",
    ] {
        report.describe(name, label.clone());
    }
    let gens: Vec<Element> = spec.kind().slots().map(|s| Element::gen(spec, Gen::from_slot(s))).collect::<Result<_>>()?;
    let gen_deltas: Vec<TensorElement> = gens.iter().map(|g| hopf.coproduct(g)).collect::<Result<_>>()?;
    for m in sample {
        let x = Element::from_mono(spec, *m);
        let input = || spec.fmt_mono(m);
        let dx = hopf.coproduct(&x)?;
        let left = hopf.coproduct_leg(&dx, 0)?;
        let right = hopf.coproduct_leg(&dx, 1)?;
        report.expect_eq("coassociativity", input, &left, &right);

        let xt = TensorElement::from_element(&x);
        let cl = dx.contract_leg(0, |m| hopf.counit_mono(m));
        let cr = dx.contract_leg(1, |m| hopf.counit_mono(m));
        report.expect_eq("counit_left", input, &cl, &xt);
        report.expect_eq("counit_right", input, &cr, &xt);

        let unit = Element::scalar(spec, hopf.counit_mono(m));
        let sl = dx.map_leg(0, |a| hopf.antipode_mono(a))?.multiply_legs(0)?.to_element()?;
        let sr = dx.map_leg(1, |a| hopf.antipode_mono(a))?.multiply_legs(0)?.to_element()?;
        report.expect_eq("antipode_left", input, &sl, &unit);
        report.expect_eq("antipode_right", input, &sr, &unit);

        for (g, dg) in gens.iter().zip(&gen_deltas) {
            let lhs = hopf.coproduct(&x.try_mul(g)?)?;
            let rhs = dx.try_mul(dg)?;
            report.expect_eq("coproduct_morphism", || format!("{} * {}", spec.fmt_mono(m), g), &lhs, &rhs);
        }

        let sx = hopf.antipode_mono(m)?;
        report.expect_eq("antipode_inverse", input, &hopf.antipode_inv(&sx)?, &x);
        report.expect_eq("antipode_inverse", input, &hopf.antipode(&hopf.antipode_inv_mono(m)?)?, &x);
        report.expect_eq("counit_antipode", input, &hopf.counit(&sx), &hopf.counit_mono(m));
    }
    Ok(report)
}

/// `(S ⊗ S) ∘ τ ∘ Δ = Δ ∘ S` on the generators.
pub fn check_antipode_anticomultiplicative(hopf: &Hopf) -> Result<Report> {
    let spec = hopf.spec;
    let mut report = Report::new();
    report.describe("antipode_anticomultiplicative", format!("generators of {}", spec.kind().name()));
    for s in spec.kind().slots() {
        let g = Element::gen(spec, Gen::from_slot(s))?;
        let lhs = hopf
            .coproduct(&g)?
            .flip()
            .map_leg(0, |m| hopf.antipode_mono(m))?
            .map_leg(1, |m| hopf.antipode_mono(m))?;
        let rhs = hopf.coproduct(&hopf.antipode(&g)?)?;
        report.expect_eq("antipode_anticomultiplicative", || g.to_string(), &lhs, &rhs);
    }
    Ok(report)
}

/// Convenience: the full axiom suite for `kind` at order `d`.
pub fn verify(kind: AlgebraKind, d: i64, samples: Option<usize>, seed: u64) -> Result<Report> {
    let spec = AlgebraSpec::get(kind, d)?;
    let hopf = Hopf::get(spec)?;
    let sample = match samples {
        None => spec.basis(),
        Some(n) => sample_basis(spec, n, seed),
    };
    let mut r = check_hopf_axioms(hopf, &sample)?;
    r.merge(check_antipode_anticomultiplicative(hopf)?);
    Ok(r)
}

#[cfg(test)]
mod tests;
