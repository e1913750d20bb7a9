use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::pbw::{AlgebraSpec, Element, Mono};
use crate::scalar::{Scalar, ScalarJson};

pub type Key = SmallVec<[Mono; 3]>;

/// Sparse element of a tensor power of one PBW algebra, with the graded product
/// `(a1 ⊗ ... ⊗ ak)(b1 ⊗ ... ⊗ bk) = (-1)^{sum_{i>j} |a_i||b_j|} a1 b1 ⊗ ... ⊗ ak bk`.
#[derive(Clone)]
pub struct TensorElement {
    spec: &'static AlgebraSpec,
    arity: usize,
    terms: Vec<(Key, Scalar)>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same(other.spec) && self.arity == other.arity && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

fn acc_key(acc: &mut FxHashMap<Key, Scalar>, k: Key, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(v) => *v += &c,
        None => {
            acc.insert(k, c);
        }
    }
}

fn finish(acc: FxHashMap<Key, Scalar>) -> Vec<(Key, Scalar)> {
    let mut v: Vec<(Key, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    v
}

/// Koszul sign for moving the legs of `b` past the legs of `a` to their right.
pub(crate) fn product_sign(a: &[Mono], b: &[Mono]) -> bool {
    let mut odd_a_right = 0u32;
    let mut total = 0u32;
    for i in (0..a.len()).rev() {
        // legs a_{i+1..} have been counted when we look at b_i
        total += odd_a_right * b[i].parity() as u32;
        odd_a_right += a[i].parity() as u32;
    }
    total % 2 == 1
}

impl TensorElement {
    pub fn zero(spec: &'static AlgebraSpec, arity: usize) -> TensorElement {
        TensorElement { spec, arity, terms: Vec::new() }
    }

    pub fn one(spec: &'static AlgebraSpec, arity: usize) -> TensorElement {
        TensorElement {
            spec,
            arity,
            terms: vec![(smallvec![Mono::ONE; arity], Scalar::one(spec.ctx()))],
        }
    }

    /// `x1 ⊗ x2 ⊗ ... ⊗ xk`.
    pub fn pure(parts: &[&Element]) -> Result<TensorElement> {
        let spec = parts.first().ok_or(Error::ArityMismatch(0, 1))?.spec();
        let mut terms: Vec<(Key, Scalar)> = vec![(Key::new(), Scalar::one(spec.ctx()))];
        for p in parts {
            if !p.spec().same(spec) {
                return Err(Error::SpecMismatch("tensor legs from different algebras".into()));
            }
            let mut next = Vec::with_capacity(terms.len() * p.len());
            for (k, c) in &terms {
                for (m, v) in p.terms() {
                    let mut k2 = k.clone();
                    k2.push(*m);
                    next.push((k2, c * v));
                }
            }
            terms = next;
        }
        Ok(TensorElement::from_terms(spec, parts.len(), terms))
    }

    pub fn from_terms(spec: &'static AlgebraSpec, arity: usize, terms: impl IntoIterator<Item = (Key, Scalar)>) -> TensorElement {
        let mut acc = FxHashMap::default();
        for (k, c) in terms {
            debug_assert_eq!(k.len(), arity);
            acc_key(&mut acc, k, c);
        }
        TensorElement { spec, arity, terms: finish(acc) }
    }

    pub fn from_element(x: &Element) -> TensorElement {
        TensorElement {
            spec: x.spec(),
            arity: 1,
            terms: x.terms().iter().map(|(m, c)| (smallvec![*m], c.clone())).collect(),
        }
    }

    pub fn to_element(&self) -> Result<Element> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch(self.arity, 1));
        }
        Ok(Element::from_terms(self.spec, self.terms.iter().map(|(k, c)| (k[0], c.clone()))))
    }

    pub fn spec(&self) -> &'static AlgebraSpec {
        self.spec
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(Key, Scalar)] {
        &self.terms
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

    pub fn coefficient(&self, key: &[Mono]) -> Scalar {
        match self.terms.binary_search_by(|t| t.0.as_slice().cmp(key)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::zero(self.spec.ctx()),
        }
    }

    /// True when every term has even total parity.
    pub fn is_even(&self) -> bool {
        self.terms.iter().all(|(k, _)| k.iter().map(|m| m.parity() as u32).sum::<u32>() % 2 == 0)
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.spec, self.arity);
        }
        TensorElement {
            spec: self.spec,
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn check(&self, other: &TensorElement) -> Result<()> {
        if !self.spec.same(other.spec) {
            return Err(Error::SpecMismatch("tensor elements over different algebras".into()));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    fn merge(&self, other: &TensorElement, negate: bool) -> TensorElement {
        use std::cmp::Ordering::*;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Greater
            } else if j == b.len() {
                Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Greater => {
                    out.push((b[j].0.clone(), if negate { -&b[j].1 } else { b[j].1.clone() }));
                    j += 1;
                }
                Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        TensorElement { spec: self.spec, arity: self.arity, terms: out }
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check(other)?;
        let spec = self.spec;
        let mut acc: FxHashMap<Key, Scalar> = FxHashMap::default();
        let mut legs: Vec<Vec<(Mono, Scalar)>> = Vec::with_capacity(self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                legs.clear();
                let mut zero = false;
                for i in 0..self.arity {
                    let p = spec.mul_mono(&ka[i], &kb[i])?;
                    if p.is_empty() {
                        zero = true;
                        break;
                    }
                    legs.push(p);
                }
                if zero {
                    continue;
                }
                let mut c = ca * cb;
                if product_sign(ka, kb) {
                    c = -c;
                }
                expand_product(&legs, &c, &mut acc);
            }
        }
        Ok(TensorElement { spec, arity: self.arity, terms: finish(acc) })
    }

    /// Replace leg `i` by the image of an even linear map.
    pub fn map_leg(&self, i: usize, mut f: impl FnMut(&Mono) -> Result<Element>) -> Result<TensorElement> {
        let mut acc = FxHashMap::default();
        let mut cache: FxHashMap<Mono, Element> = FxHashMap::default();
        for (k, c) in &self.terms {
            if !cache.contains_key(&k[i]) {
                cache.insert(k[i], f(&k[i])?);
            }
            for (m, v) in cache[&k[i]].terms() {
                let mut k2 = k.clone();
                k2[i] = *m;
                acc_key(&mut acc, k2, c * v);
            }
        }
        Ok(TensorElement { spec: self.spec, arity: self.arity, terms: finish(acc) })
    }

    /// Replace leg `i` by an even map into a tensor of arity `extra + 1`.
    pub fn expand_leg(&self, i: usize, mut f: impl FnMut(&Mono) -> Result<TensorElement>) -> Result<TensorElement> {
        let mut acc = FxHashMap::default();
        let mut cache: FxHashMap<Mono, TensorElement> = FxHashMap::default();
        let mut new_arity = None;
        for (k, c) in &self.terms {
            if !cache.contains_key(&k[i]) {
                cache.insert(k[i], f(&k[i])?);
            }
            let img = &cache[&k[i]];
            new_arity = Some(self.arity - 1 + img.arity);
            for (ki, v) in &img.terms {
                let mut k2: Key = SmallVec::with_capacity(self.arity - 1 + ki.len());
                k2.extend_from_slice(&k[..i]);
                k2.extend_from_slice(ki);
                k2.extend_from_slice(&k[i + 1..]);
                acc_key(&mut acc, k2, c * v);
            }
        }
        let arity = new_arity.unwrap_or(self.arity + 1);
        Ok(TensorElement { spec: self.spec, arity, terms: finish(acc) })
    }

    /// Apply a scalar-valued even functional to leg `i`.
    pub fn contract_leg(&self, i: usize, f: impl Fn(&Mono) -> Scalar) -> TensorElement {
        let mut acc = FxHashMap::default();
        for (k, c) in &self.terms {
            let v = f(&k[i]);
            if v.is_zero() {
                continue;
            }
            let mut k2 = k.clone();
            k2.remove(i);
            acc_key(&mut acc, k2, c * &v);
        }
        TensorElement { spec: self.spec, arity: self.arity - 1, terms: finish(acc) }
    }

    /// Multiply legs `i` and `i + 1` together.
    pub fn multiply_legs(&self, i: usize) -> Result<TensorElement> {
        let mut acc = FxHashMap::default();
        for (k, c) in &self.terms {
            for (m, v) in self.spec.mul_mono(&k[i], &k[i + 1])? {
                let mut k2 = k.clone();
                k2.remove(i + 1);
                k2[i] = m;
                acc_key(&mut acc, k2, c * &v);
            }
        }
        Ok(TensorElement { spec: self.spec, arity: self.arity - 1, terms: finish(acc) })
    }

    /// Reorder legs so that new leg `j` is old leg `perm[j]`, with the Koszul sign.
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        assert_eq!(perm.len(), self.arity);
        let mut acc = FxHashMap::default();
        for (k, c) in &self.terms {
            let mut odd = 0u32;
            for a in 0..perm.len() {
                for b in (a + 1)..perm.len() {
                    if perm[a] > perm[b] {
                        odd += (k[perm[a]].parity() * k[perm[b]].parity()) as u32;
                    }
                }
            }
            let k2: Key = perm.iter().map(|&p| k[p]).collect();
            acc_key(&mut acc, k2, if odd % 2 == 1 { -c } else { c.clone() });
        }
        TensorElement { spec: self.spec, arity: self.arity, terms: finish(acc) }
    }

    /// The graded flip of a 2-tensor.
    pub fn flip(&self) -> TensorElement {
        self.permute(&[1, 0])
    }

    /// Place the legs into positions `slots` of a tensor of arity `arity`, units elsewhere.
    pub fn place(&self, arity: usize, slots: &[usize]) -> TensorElement {
        assert_eq!(slots.len(), self.arity);
        let terms = self.terms.iter().map(|(k, c)| {
            let mut k2: Key = smallvec![Mono::ONE; arity];
            for (j, &s) in slots.iter().enumerate() {
                k2[s] = k[j];
            }
            (k2, c.clone())
        });
        TensorElement::from_terms(self.spec, arity, terms)
    }

    /// Move to another algebra with the same slots.
    pub fn embed(&self, target: &'static AlgebraSpec) -> Result<TensorElement> {
        for (k, _) in &self.terms {
            for m in k.iter() {
                if (0..8).any(|s| m.0[s] != 0 && !target.has_slot(s)) {
                    return Err(Error::SpecMismatch(format!("{} not in {}", m, target.kind().name())));
                }
            }
        }
        Ok(TensorElement { spec: target, arity: self.arity, terms: self.terms.clone() })
    }

    pub fn to_json(&self) -> TensorJson {
        let slots = self.spec.kind().slots();
        TensorJson {
            algebra: self.spec.kind().name().to_string(),
            d: self.spec.d() as u32,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TensorTermJson {
                    m: k.iter().map(|m| m.0[slots.clone()].iter().map(|&e| e as i64).collect()).collect(),
                    c: c.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TensorJson) -> Result<TensorElement> {
        let kind = crate::pbw::AlgebraKind::from_name(&json.algebra)?;
        let spec = AlgebraSpec::get(kind, json.d as i64)?;
        let slots = kind.slots();
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.m.len() != json.arity {
                return Err(Error::ArityMismatch(t.m.len(), json.arity));
            }
            let mut key = Key::new();
            for leg in &t.m {
                if leg.len() != slots.len() {
                    return Err(Error::Parse("monomial length does not match the algebra".into()));
                }
                let mut e = [0i64; 8];
                for (k, s) in slots.clone().enumerate() {
                    e[s] = leg[k];
                }
                let m = spec
                    .make_mono(e)?
                    .filter(|m| m.0.iter().zip(e.iter()).all(|(&a, &b)| a as i64 == b))
                    .ok_or_else(|| Error::Parse(format!("monomial {leg:?} is not in normal form")))?;
                key.push(m);
            }
            terms.push((key, Scalar::from_json(&t.c)?));
        }
        Ok(TensorElement::from_terms(spec, json.arity, terms))
    }
}

fn expand_product(legs: &[Vec<(Mono, Scalar)>], c: &Scalar, acc: &mut FxHashMap<Key, Scalar>) {
    fn rec(legs: &[Vec<(Mono, Scalar)>], i: usize, key: &mut Key, c: &Scalar, acc: &mut FxHashMap<Key, Scalar>) {
        if i == legs.len() {
            acc_key(acc, key.clone(), c.clone());
            return;
        }
        for (m, v) in &legs[i] {
            key.push(*m);
            let cv = if v.is_one() { c.clone() } else { c * v };
            rec(legs, i + 1, key, &cv, acc);
            key.pop();
        }
    }
    let mut key = Key::new();
    rec(legs, 0, &mut key, c, acc);
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub m: Vec<Vec<i64>>,
    pub c: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub algebra: String,
    pub d: u32,
    pub arity: usize,
    pub terms: Vec<TensorTermJson>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*")?;
            for (i, m) in k.iter().enumerate() {
                if i > 0 {
                    write!(f, " ⊗ ")?;
                }
                write!(f, "{}", self.spec.fmt_mono(m))?;
            }
        }
        Ok(())
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("incompatible tensor elements")
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.try_sub(rhs).expect("incompatible tensor elements")
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.try_mul(rhs).expect("tensor product failed")
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            spec: self.spec,
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}
