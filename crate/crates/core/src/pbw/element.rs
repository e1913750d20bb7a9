use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{accumulate, finish, AlgebraKind, AlgebraSpec, Gen, Mode, Mono};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarJson};

/// A sparse combination of PBW monomials, sorted by monomial.
#[derive(Clone)]
pub struct Element {
    spec: &'static AlgebraSpec,
    terms: Vec<(Mono, Scalar)>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same(other.spec) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(spec: &'static AlgebraSpec) -> Element {
        Element { spec, terms: Vec::new() }
    }

    pub fn one(spec: &'static AlgebraSpec) -> Element {
        Element::scalar(spec, Scalar::one(spec.ctx()))
    }

    pub fn scalar(spec: &'static AlgebraSpec, c: Scalar) -> Element {
        Element::from_terms(spec, vec![(Mono::ONE, c)])
    }

    pub fn gen(spec: &'static AlgebraSpec, g: Gen) -> Result<Element> {
        Element::gen_pow(spec, g, 1)
    }

    /// `g^n`; negative `n` is allowed for `k1, k2`.
    pub fn gen_pow(spec: &'static AlgebraSpec, g: Gen, n: i64) -> Result<Element> {
        let mut e = [0i64; 8];
        e[g.slot()] = n;
        Ok(match spec.make_mono(e)? {
            Some(m) => Element { spec, terms: vec![(m, Scalar::one(spec.ctx()))] },
            None => Element::zero(spec),
        })
    }

    /// A monomial given by raw exponents; the quotient relations are applied.
    pub fn monomial(spec: &'static AlgebraSpec, exps: [i64; 8]) -> Result<Element> {
        Ok(match spec.make_mono(exps)? {
            Some(m) => Element { spec, terms: vec![(m, Scalar::one(spec.ctx()))] },
            None => Element::zero(spec),
        })
    }

    pub fn from_mono(spec: &'static AlgebraSpec, m: Mono) -> Element {
        Element { spec, terms: vec![(m, Scalar::one(spec.ctx()))] }
    }

    /// Collect terms, merging duplicates and dropping zeros. Monomials must already be normal.
    pub fn from_terms(spec: &'static AlgebraSpec, terms: impl IntoIterator<Item = (Mono, Scalar)>) -> Element {
        let mut acc: FxHashMap<Mono, Scalar> = FxHashMap::default();
        for (m, c) in terms {
            accumulate(&mut acc, m, &c);
        }
        Element { spec, terms: finish(acc) }
    }

    /// Product of words of generators, e.g. `[(Gen::E1, 1), (Gen::E2, 1)]`.
    pub fn word(spec: &'static AlgebraSpec, word: &[(Gen, i64)]) -> Result<Element> {
        let mut acc = Element::one(spec);
        for &(g, n) in word {
            acc = acc.try_mul(&Element::gen_pow(spec, g, n)?)?;
        }
        Ok(acc)
    }

    pub fn spec(&self) -> &'static AlgebraSpec {
        self.spec
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Mono) -> Scalar {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::zero(self.spec.ctx()),
        }
    }

    /// Parity if the element is homogeneous; zero counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for (m, _) in &self.terms {
            match p {
                None => p = Some(m.parity()),
                Some(x) if x != m.parity() => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.spec);
        }
        Element { spec: self.spec, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    fn check_spec(&self, other: &Element) -> Result<()> {
        if self.spec.same(other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!("{:?} vs {:?}", self.spec, other.spec)))
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_spec(other)?;
        Ok(self.merge(other, false))
    }

    fn merge(&self, other: &Element, negate: bool) -> Element {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Element { spec: self.spec, terms: out }
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_spec(other)?;
        let spec = self.spec;
        let mut acc: FxHashMap<Mono, Scalar> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, v) in spec.mul_mono(ma, mb)? {
                    accumulate(&mut acc, m, &(&c * &v));
                }
            }
        }
        Ok(Element { spec, terms: finish(acc) })
    }

    pub fn pow(&self, n: u32) -> Result<Element> {
        let mut acc = Element::one(self.spec);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Graded commutator `xy - (-1)^{|x||y|} yx` of homogeneous elements.
    pub fn supercommutator(&self, other: &Element) -> Result<Element> {
        let sign = match (self.parity(), other.parity()) {
            (Some(1), Some(1)) => true,
            _ => false,
        };
        let xy = self.try_mul(other)?;
        let yx = other.try_mul(self)?;
        Ok(if sign { xy.merge(&yx, false) } else { xy.merge(&yx, true) })
    }

    /// Reinterpret in another algebra with the same slots, e.g. `B+` inside `U`.
    pub fn embed(&self, target: &'static AlgebraSpec) -> Result<Element> {
        if target.d() != self.spec.d() {
            return Err(Error::SpecMismatch("different orders".into()));
        }
        for (m, _) in &self.terms {
            for s in 0..8 {
                if m.0[s] != 0 && !target.has_slot(s) {
                    return Err(Error::SpecMismatch(format!(
                        "{} does not contain {}",
                        target.kind().name(),
                        self.spec.fmt_mono(m)
                    )));
                }
            }
        }
        Ok(Element { spec: target, terms: self.terms.clone() })
    }

    pub fn to_json(&self) -> Result<ElementJson> {
        if self.spec.mode() != Mode::Quotient {
            return Err(Error::SpecMismatch("only quotient algebras are serializable".into()));
        }
        let slots = self.spec.kind().slots();
        Ok(ElementJson {
            algebra: self.spec.kind().name().to_string(),
            d: self.spec.d() as u32,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { m: m.0[slots.clone()].iter().map(|&e| e as i64).collect(), c: c.to_json() })
                .collect(),
        })
    }

    pub fn from_json(json: &ElementJson) -> Result<Element> {
        let kind = AlgebraKind::from_name(&json.algebra)?;
        let spec = AlgebraSpec::get(kind, json.d as i64)?;
        let slots = kind.slots();
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.m.len() != slots.len() {
                return Err(Error::Parse(format!("monomial of length {} for {}", t.m.len(), json.algebra)));
            }
            let mut e = [0i64; 8];
            for (k, s) in slots.clone().enumerate() {
                e[s] = t.m[k];
            }
            let m = spec
                .make_mono(e)?
                .filter(|m| m.0.iter().zip(e.iter()).all(|(&a, &b)| a as i64 == b))
                .ok_or_else(|| Error::Parse(format!("monomial {:?} is not in normal form", t.m)))?;
            let c = Scalar::from_json(&t.c)?;
            if c.d() != json.d {
                return Err(Error::Parse("coefficient from a different field".into()));
            }
            terms.push((m, c));
        }
        Ok(Element::from_terms(spec, terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub m: Vec<i64>,
    pub c: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: String,
    pub d: u32,
    pub terms: Vec<TermJson>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}", self.spec.fmt_mono(m))?;
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.check_spec(rhs).expect("subtracting elements of different algebras");
        self.merge(rhs, true)
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("element product failed")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { spec: self.spec, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}
