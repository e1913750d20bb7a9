use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use super::dual::{Dual, Functional};
use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::pbw::{AlgebraKind, AlgebraSpec, Element, Gen, Mono};
use crate::report::Report;
use crate::scalar::Scalar;

type Pair = (Mono, Mono);

/// Sparse element of `D = X ⋈ B+` in the basis `alpha-monomial ⊗ B+-monomial`.
#[derive(Clone, PartialEq, Eq)]
pub struct DoubleElement {
    d: i64,
    terms: Vec<(Pair, Scalar)>,
}

fn collect(acc: FxHashMap<Pair, Scalar>) -> Vec<(Pair, Scalar)> {
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

fn add_to(acc: &mut FxHashMap<Pair, Scalar>, k: Pair, c: Scalar) {
    match acc.get_mut(&k) {
        Some(v) => *v += &c,
        None => {
            acc.insert(k, c);
        }
    }
}

impl DoubleElement {
    pub fn zero(d: i64) -> DoubleElement {
        DoubleElement { d, terms: Vec::new() }
    }

    pub fn one(d: i64) -> Result<DoubleElement> {
        let ctx = AlgebraSpec::get(AlgebraKind::X, d)?.ctx();
        Ok(DoubleElement { d, terms: vec![((Mono::ONE, Mono::ONE), Scalar::one(ctx))] })
    }

    /// `f ⊗ a`.
    pub fn tensor(f: &Element, a: &Element) -> Result<DoubleElement> {
        let d = f.spec().d();
        if f.spec().kind() != AlgebraKind::X || a.spec().kind() != AlgebraKind::BPlus || a.spec().d() != d {
            return Err(Error::SpecMismatch("a double element is X ⊗ B+ at one order".into()));
        }
        let mut acc = FxHashMap::default();
        for (m, c) in f.terms() {
            for (n, v) in a.terms() {
                add_to(&mut acc, (*m, *n), c * v);
            }
        }
        Ok(DoubleElement { d, terms: collect(acc) })
    }

    /// `f ⊗ 1`.
    pub fn from_x(f: &Element) -> Result<DoubleElement> {
        DoubleElement::tensor(f, &Element::one(AlgebraSpec::get(AlgebraKind::BPlus, f.spec().d())?))
    }

    /// `1 ⊗ a`.
    pub fn from_b(a: &Element) -> Result<DoubleElement> {
        DoubleElement::tensor(&Element::one(AlgebraSpec::get(AlgebraKind::X, a.spec().d())?), a)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn terms(&self) -> &[(Pair, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> DoubleElement {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            self.terms.iter().map(|(k, v)| (*k, v * c)).collect()
        };
        DoubleElement { d: self.d, terms }
    }

    pub fn try_add(&self, other: &DoubleElement) -> Result<DoubleElement> {
        if self.d != other.d {
            return Err(Error::SpecMismatch("double elements at different orders".into()));
        }
        let mut acc = FxHashMap::default();
        for (k, c) in self.terms.iter().chain(&other.terms) {
            add_to(&mut acc, *k, c.clone());
        }
        Ok(DoubleElement { d: self.d, terms: collect(acc) })
    }

    pub fn try_sub(&self, other: &DoubleElement) -> Result<DoubleElement> {
        self.try_add(&other.scale(&-&Scalar::one(AlgebraSpec::get(AlgebraKind::X, self.d)?.ctx())))
    }

    pub fn try_mul(&self, other: &DoubleElement) -> Result<DoubleElement> {
        double_mul(self, other)
    }
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let x = AlgebraSpec::get(AlgebraKind::X, self.d).map_err(|_| fmt::Error)?;
        let b = AlgebraSpec::get(AlgebraKind::BPlus, self.d).map_err(|_| fmt::Error)?;
        for (i, ((m, n), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{} ⊗ {}", x.fmt_mono(m), b.fmt_mono(n))?;
        }
        Ok(())
    }
}

impl fmt::Debug for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Cross = Arc<Vec<(Pair, Scalar)>>;

static CROSS: std::sync::OnceLock<Mutex<HashMap<(i64, Mono, Mono), Cross>>> = std::sync::OnceLock::new();

/// `(1 ⊗ a)(g ⊗ 1) = Σ (-1)^{|g||a| + |x3|(|x1|+|x2|)} g(S^{-1}(x3) ? x1) ⊗ x2`
/// with `(Δ ⊗ id)Δ(a) = Σ x1 ⊗ x2 ⊗ x3`, where the functional
/// `g(u ? v)` is `x ↦ (-1)^{|x||v|} g(u x v)`.
fn cross(d: i64, a: &Mono, g: &Mono) -> Result<Cross> {
    let key = (d, *a, *g);
    let cache = CROSS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cross cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let dual = Dual::get(d)?;
    let bplus = dual.bplus();
    let ctx = bplus.ctx();
    let hopf = Hopf::get(bplus)?;
    let gf: Functional = dual.functional(&Element::from_mono(dual.x(), *g))?;
    let delta2 = hopf.coproduct_leg(&(*hopf.coproduct_mono(a)?).clone(), 0)?;
    let ga = g.parity() & a.parity();
    let mut acc = FxHashMap::default();
    let mut h_cache: FxHashMap<(Mono, Mono), Element> = FxHashMap::default();
    for (k, c) in delta2.terms() {
        let (x1, x2, x3) = (k[0], k[1], k[2]);
        let odd = (ga + x3.parity() * (x1.parity() + x2.parity())) % 2 == 1;
        let c = if odd { -c } else { c.clone() };
        if !h_cache.contains_key(&(x1, x3)) {
            let left = hopf.antipode_inv_mono(&x3)?;
            let right = Element::from_mono(bplus, x1);
            let mut h = vec![Scalar::zero(ctx); dual.basis().len()];
            for (j, x) in dual.basis().iter().enumerate() {
                let y = left.try_mul(&Element::from_mono(bplus, *x))?.try_mul(&right)?;
                let mut v = Scalar::zero(ctx);
                for (m, ym) in y.terms() {
                    let gv = &gf[dual.index_of(m).expect("B+ basis")];
                    if !gv.is_zero() {
                        v += &(ym * gv);
                    }
                }
                h[j] = if x.parity() & x1.parity() == 1 { -&v } else { v };
            }
            h_cache.insert((x1, x3), dual.to_x(&h));
        }
        for (m, v) in h_cache[&(x1, x3)].terms() {
            add_to(&mut acc, (*m, x2), &c * v);
        }
    }
    let out: Cross = Arc::new(collect(acc));
    cache.lock().expect("cross cache poisoned").insert(key, out.clone());
    Ok(out)
}

/// Product in `D`: `(f ⊗ a)(g ⊗ b) = (f ⊗ 1) [(1 ⊗ a)(g ⊗ 1)] (1 ⊗ b)`.
pub fn double_mul(x: &DoubleElement, y: &DoubleElement) -> Result<DoubleElement> {
    if x.d != y.d {
        return Err(Error::SpecMismatch("double elements at different orders".into()));
    }
    let d = x.d;
    let xs = AlgebraSpec::get(AlgebraKind::X, d)?;
    let bs = AlgebraSpec::get(AlgebraKind::BPlus, d)?;
    let mut acc = FxHashMap::default();
    for ((f, a), c1) in &x.terms {
        for ((g, b), c2) in &y.terms {
            let c12 = c1 * c2;
            for ((h, x2), c3) in cross(d, a, g)?.iter() {
                let c = &c12 * c3;
                for (fh, v1) in xs.mul_mono(f, h)? {
                    for (xb, v2) in bs.mul_mono(x2, b)? {
                        add_to(&mut acc, (fh, xb), &(&c * &v1) * &v2);
                    }
                }
            }
        }
    }
    Ok(DoubleElement { d, terms: collect(acc) })
}

/// `χ(alpha_e1^w alpha_e3^s alpha_e2^l alpha_k1^i1 alpha_k2^j1 ⊗ k1^i2 k2^j2 e1^r e3^h e2^t)
/// = f1^w f3^s f2^l k1^{i1+i2} k2^{j1+j2} e1^r e3^h e2^t`.
pub fn chi(x: &DoubleElement) -> Result<Element> {
    let u = AlgebraSpec::ubar(x.d)?;
    let mut terms = Vec::with_capacity(x.terms.len());
    for ((f, a), c) in &x.terms {
        let mut e = [0i64; 8];
        for (s, v) in e.iter_mut().enumerate() {
            *v = f.0[s] as i64 + a.0[s] as i64;
        }
        if let Some(m) = u.make_mono(e)? {
            terms.push((m, c.clone()));
        }
    }
    Ok(Element::from_terms(u, terms))
}

/// The generators of `X` in the order `alpha_k1, alpha_k2, alpha_e1, alpha_e2, alpha_e3`
/// and of `B+` in the order `k1, k2, e1, e2, e3`.
const X_GENS: [(Gen, &str); 5] =
    [(Gen::K1, "a_k1"), (Gen::K2, "a_k2"), (Gen::F1, "a_e1"), (Gen::F2, "a_e2"), (Gen::F3, "a_e3")];
const B_GENS: [Gen; 5] = [Gen::K1, Gen::K2, Gen::E1, Gen::E2, Gen::E3];

/// Right-hand side of `(1 ⊗ a)(g ⊗ 1)` for generators, as a sum of
/// `coefficient * X-word ⊗ B+-word`.
#[allow(clippy::type_complexity)]
fn df_table(d: i64, a: Gen, g: Gen) -> Result<DoubleElement> {
    use Gen::*;
    let xs = AlgebraSpec::get(AlgebraKind::X, d)?;
    let bs = AlgebraSpec::get(AlgebraKind::BPlus, d)?;
    let ctx = xs.ctx();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let inv = xs.inv_qq().clone();
    let one = Scalar::one(ctx);
    let t = |c: Scalar, xw: &[(Gen, i64)], bw: &[(Gen, i64)]| -> Result<DoubleElement> {
        Ok(DoubleElement::tensor(&Element::word(xs, xw)?, &Element::word(bs, bw)?)?.scale(&c))
    };
    let sum = |parts: Vec<DoubleElement>| -> Result<DoubleElement> {
        parts.iter().try_fold(DoubleElement::zero(d), |acc, p| acc.try_add(p))
    };
    let gw = [(g, 1)];
    let aw = [(a, 1)];
    Ok(match (g, a) {
        (K1 | K2, K1 | K2) => t(one, &gw, &aw)?,
        (K1, E1) => t(q(-2), &gw, &aw)?,
        (K1, E2) => t(q(1), &gw, &aw)?,
        (K1, E3) => t(q(-1), &gw, &aw)?,
        (K2, E1) => t(q(1), &gw, &aw)?,
        (K2, E2) => t(one, &gw, &aw)?,
        (K2, E3) => t(q(1), &gw, &aw)?,
        (F1, K1) => t(q(-2), &gw, &aw)?,
        (F1, K2) => t(q(1), &gw, &aw)?,
        (F1, E1) => sum(vec![
            t(-&inv, &[(K1, -1)], &[])?,
            t(one, &gw, &aw)?,
            t(inv.clone(), &[], &[(K1, 1)])?,
        ])?,
        (F1, E2) => t(one, &gw, &aw)?,
        (F1, E3) => sum(vec![t(-&q(-1), &[(K1, -1)], &[(E2, 1)])?, t(one, &gw, &aw)?])?,
        (F2, K1) => t(q(1), &gw, &aw)?,
        (F2, K2) => t(one, &gw, &aw)?,
        (F2, E2) => sum(vec![
            t(-&inv, &[(K2, -1)], &[])?,
            t(-&one, &gw, &aw)?,
            t(inv.clone(), &[], &[(K2, 1)])?,
        ])?,
        (F2, E3) => sum(vec![t(one.clone(), &[], &[(K2, 1), (E1, 1)])?, t(-&one, &gw, &aw)?])?,
        (F2, E1) => t(one, &gw, &aw)?,
        (F3, K1) => t(q(-1), &gw, &aw)?,
        (F3, K2) => t(q(1), &gw, &aw)?,
        (F3, E1) => sum(vec![t(one, &gw, &aw)?, t(-&q(1), &[(F2, 1)], &[(K1, 1)])?])?,
        (F3, E2) => sum(vec![t(one.clone(), &[(F1, 1), (K2, -1)], &[])?, t(-&one, &gw, &aw)?])?,
        (F3, E3) => sum(vec![
            t(-&inv, &[(K1, -1), (K2, -1)], &[])?,
            t(-&one, &gw, &aw)?,
            t(inv.clone(), &[], &[(K1, 1), (K2, 1)])?,
        ])?,
        _ => return Err(Error::UnknownPair(g.name(), a.name())),
    })
}

/// The 25 cross relations `(1 ⊗ a)(g ⊗ 1)` for generators `a` of `B+` and `g` of `X`,
/// and multiplicativity of `χ` on each of them.
pub fn double_check(d: i64) -> Result<Report> {
    let xs = AlgebraSpec::get(AlgebraKind::X, d)?;
    let bs = AlgebraSpec::get(AlgebraKind::BPlus, d)?;
    let mut report = Report::new();
    report.describe("cross_relations", format!("25 generator pairs, d = {d}"));
    report.describe("chi_multiplicative", format!("25 generator pairs, d = {d}"));
    report.describe("unit", format!("(f ⊗ 1)(1 ⊗ a) = f ⊗ a on generators, d = {d}"));
    for (g, gname) in X_GENS {
        let ge = Element::gen(xs, g)?;
        let gd = DoubleElement::from_x(&ge)?;
        for a in B_GENS {
            let ae = Element::gen(bs, a)?;
            let ad = DoubleElement::from_b(&ae)?;
            let input = || format!("(1 ⊗ {})({gname} ⊗ 1)", a.name());
            let lhs = double_mul(&ad, &gd)?;
            report.expect_eq("cross_relations", input, &lhs, &df_table(d, a, g)?);
            let chi_lhs = chi(&lhs)?;
            let chi_rhs = chi(&ad)?.try_mul(&chi(&gd)?)?;
            report.expect_eq("chi_multiplicative", input, &chi_lhs, &chi_rhs);
            let fa = double_mul(&gd, &ad)?;
            report.expect_eq("unit", || format!("({gname} ⊗ 1)(1 ⊗ {})", a.name()), &fa, &DoubleElement::tensor(&ge, &ae)?);
        }
    }
    Ok(report)
}
