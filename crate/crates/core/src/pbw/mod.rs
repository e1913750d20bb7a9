//! PBW normal forms for the small quantum supergroup, its Borel halves and
//! the dual algebra `X`.
//!
//! Every element is a sparse sum of ordered monomials
//! `f1^w f3^s f2^l k1^i k2^j e1^r e3^h e2^t`. Products are straightened with
//! closed-form commutation rules for powers of adjacent generators, and the
//! quotient relations are applied as soon as exponents combine.

mod element;
mod relations;
mod rules;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::scalar::{FieldContext, Scalar};

pub use element::{Element, ElementJson, TermJson};
pub use relations::{defining_relations, Relation, Word};

pub const F1: usize = 0;
pub const F3: usize = 1;
pub const F2: usize = 2;
pub const K1: usize = 3;
pub const K2: usize = 4;
pub const E1: usize = 5;
pub const E3: usize = 6;
pub const E2: usize = 7;

const SLOT_NAMES: [&str; 8] = ["f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2"];
const X_NAMES: [&str; 5] = ["a_e1", "a_e3", "a_e2", "a_k1", "a_k2"];

/// Parity of each PBW slot.
pub const SLOT_PARITY: [u8; 8] = [0, 1, 1, 0, 0, 0, 1, 1];

/// The eight generators in PBW order. On `X` the first five play the role of
/// `alpha_e1, alpha_e3, alpha_e2, alpha_k1, alpha_k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    F1,
    F3,
    F2,
    K1,
    K2,
    E1,
    E3,
    E2,
}

impl Gen {
    pub const ALL: [Gen; 8] = [Gen::F1, Gen::F3, Gen::F2, Gen::K1, Gen::K2, Gen::E1, Gen::E3, Gen::E2];

    pub fn slot(self) -> usize {
        self as usize
    }

    pub fn from_slot(slot: usize) -> Gen {
        Gen::ALL[slot]
    }

    pub fn parity(self) -> u8 {
        SLOT_PARITY[self.slot()]
    }

    pub fn name(self) -> &'static str {
        SLOT_NAMES[self.slot()]
    }
}

/// Exponent vector `(w, s, l, i, j, r, h, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(pub [i16; 8]);

impl Mono {
    pub const ONE: Mono = Mono([0; 8]);

    pub fn exp(&self, slot: usize) -> i16 {
        self.0[slot]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 8]
    }

    pub fn parity(&self) -> u8 {
        ((self.0[F3] + self.0[F2] + self.0[E3] + self.0[E2]) & 1) as u8
    }

    pub fn top_slot(&self) -> Option<usize> {
        (0..8).rev().find(|&s| self.0[s] != 0)
    }

    pub fn low_slot(&self) -> Option<usize> {
        (0..8).find(|&s| self.0[s] != 0)
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, names: &[&str]) -> fmt::Result {
        let mut first = true;
        for (s, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = names.get(s).copied().unwrap_or(SLOT_NAMES[s]);
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &SLOT_NAMES)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Ubar,
    BPlus,
    BMinus,
    X,
}

impl AlgebraKind {
    pub fn slots(self) -> std::ops::Range<usize> {
        match self {
            AlgebraKind::Ubar => 0..8,
            AlgebraKind::BPlus => 3..8,
            AlgebraKind::BMinus | AlgebraKind::X => 0..5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Ubar => "ubar",
            AlgebraKind::BPlus => "bplus",
            AlgebraKind::BMinus => "bminus",
            AlgebraKind::X => "x",
        }
    }

    pub fn from_name(name: &str) -> Result<AlgebraKind> {
        match name {
            "ubar" => Ok(AlgebraKind::Ubar),
            "bplus" => Ok(AlgebraKind::BPlus),
            "bminus" => Ok(AlgebraKind::BMinus),
            "x" => Ok(AlgebraKind::X),
            other => Err(Error::Parse(format!("unknown algebra `{other}`"))),
        }
    }
}

/// `Quotient` is the finite-dimensional algebra. `Ambient` keeps Laurent
/// exponents on `k1, k2` and lets `f1, e1` grow up to `bound`, which is
/// enough to observe central elements of the algebra before the quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Quotient,
    Ambient { bound: u16 },
}

type Terms = Arc<[(Mono, Scalar)]>;

const CACHE_LIMIT: usize = 1 << 19;

pub struct AlgebraSpec {
    kind: AlgebraKind,
    mode: Mode,
    ctx: &'static FieldContext,
    /// `(q - q^-1)^-1`
    inv_qq: Scalar,
    cache: RwLock<FxHashMap<(Mono, u8, i16), Terms>>,
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraSpec")
            .field("kind", &self.kind)
            .field("mode", &self.mode)
            .field("d", &self.ctx.d())
            .finish()
    }
}

type SpecKey = (AlgebraKind, Mode, u32);
static SPECS: OnceLock<Mutex<HashMap<SpecKey, &'static AlgebraSpec>>> = OnceLock::new();

impl AlgebraSpec {
    pub fn get(kind: AlgebraKind, d: i64) -> Result<&'static AlgebraSpec> {
        Self::with_mode(kind, Mode::Quotient, d)
    }

    pub fn ubar(d: i64) -> Result<&'static AlgebraSpec> {
        Self::get(AlgebraKind::Ubar, d)
    }

    pub fn with_mode(kind: AlgebraKind, mode: Mode, d: i64) -> Result<&'static AlgebraSpec> {
        let ctx = FieldContext::get(d)?;
        let key = (kind, mode, ctx.d());
        let registry = SPECS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = registry.lock().expect("spec registry poisoned");
        if let Some(spec) = map.get(&key) {
            return Ok(spec);
        }
        let qq = Scalar::q(ctx) - Scalar::q_power(ctx, -1);
        let spec: &'static AlgebraSpec = Box::leak(Box::new(AlgebraSpec {
            kind,
            mode,
            ctx,
            inv_qq: qq.invert()?,
            cache: RwLock::new(FxHashMap::default()),
        }));
        map.insert(key, spec);
        Ok(spec)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ctx(&self) -> &'static FieldContext {
        self.ctx
    }

    pub fn d(&self) -> i64 {
        self.ctx.d() as i64
    }

    pub fn same(&self, other: &AlgebraSpec) -> bool {
        std::ptr::eq(self, other)
    }

    pub fn has_slot(&self, slot: usize) -> bool {
        self.kind.slots().contains(&slot)
    }

    pub fn slot_name(&self, slot: usize) -> &'static str {
        match self.kind {
            AlgebraKind::X => X_NAMES[slot],
            _ => SLOT_NAMES[slot],
        }
    }

    pub fn fmt_mono(&self, m: &Mono) -> String {
        struct W<'a>(&'a Mono, &'a [&'static str]);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write_with(f, self.1)
            }
        }
        match self.kind {
            AlgebraKind::X => W(m, &X_NAMES).to_string(),
            _ => m.to_string(),
        }
    }

    /// `(q - q^-1)^-1`
    pub fn inv_qq(&self) -> &Scalar {
        &self.inv_qq
    }

    /// Canonical representative of `k^e`.
    pub(crate) fn norm_k(&self, e: i64) -> Result<i16> {
        match self.mode {
            Mode::Quotient => Ok(e.rem_euclid(self.d()) as i16),
            Mode::Ambient { .. } => {
                i16::try_from(e).map_err(|_| Error::BoundExceeded(format!("k exponent {e}")))
            }
        }
    }

    /// Build a monomial from raw exponents, applying the quotient relations.
    /// `Ok(None)` means the monomial is zero.
    pub(crate) fn make_mono(&self, exps: [i64; 8]) -> Result<Option<Mono>> {
        let mut out = [0i16; 8];
        for s in 0..8 {
            let e = exps[s];
            if e != 0 && !self.has_slot(s) {
                return Err(Error::SpecMismatch(format!(
                    "{} has no generator in slot {}",
                    self.kind.name(),
                    SLOT_NAMES[s]
                )));
            }
            match s {
                K1 | K2 => out[s] = self.norm_k(e)?,
                F3 | F2 | E3 | E2 => {
                    if !(0..=1).contains(&e) {
                        if e >= 2 {
                            return Ok(None);
                        }
                        return Err(Error::IndexError(format!("negative exponent on {}", SLOT_NAMES[s])));
                    }
                    out[s] = e as i16;
                }
                _ => {
                    if e < 0 {
                        return Err(Error::IndexError(format!("negative exponent on {}", SLOT_NAMES[s])));
                    }
                    match self.mode {
                        Mode::Quotient => {
                            if e >= self.d() {
                                return Ok(None);
                            }
                        }
                        Mode::Ambient { bound } => {
                            if e > bound as i64 {
                                return Err(Error::BoundExceeded(format!(
                                    "{}^{e} above bound {bound}",
                                    SLOT_NAMES[s]
                                )));
                            }
                        }
                    }
                    out[s] = e as i16;
                }
            }
        }
        Ok(Some(Mono(out)))
    }

    /// PBW basis in lexicographic exponent order.
    pub fn basis(&self) -> Vec<Mono> {
        let d = self.d() as i16;
        let caps: Vec<i16> = (0..8)
            .map(|s| if !self.has_slot(s) { 1 } else if SLOT_PARITY[s] == 1 { 2 } else { d })
            .collect();
        let mut out = Vec::new();
        let mut cur = [0i16; 8];
        loop {
            out.push(Mono(cur));
            let mut s = 8;
            loop {
                if s == 0 {
                    return out;
                }
                s -= 1;
                cur[s] += 1;
                if cur[s] < caps[s] {
                    break;
                }
                cur[s] = 0;
            }
        }
    }

    pub fn dim(&self) -> usize {
        let d = self.d() as usize;
        match self.kind {
            AlgebraKind::Ubar => 16 * d.pow(4),
            _ => 4 * d.pow(3),
        }
    }

    pub fn clear_cache(&self) {
        self.cache.write().clear();
    }

    /// `m * g^n` in normal form.
    pub(crate) fn mul_mono_genpow(&self, m: &Mono, g: usize, n: i16) -> Result<Terms> {
        let key = (*m, g as u8, n);
        if let Some(hit) = self.cache.read().get(&key) {
            return Ok(hit.clone());
        }
        let result: Terms = self.mul_mono_genpow_uncached(m, g, n)?.into();
        let mut cache = self.cache.write();
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, result.clone());
        Ok(result)
    }

    fn mul_mono_genpow_uncached(&self, m: &Mono, g: usize, n: i16) -> Result<Vec<(Mono, Scalar)>> {
        let one = Scalar::one(self.ctx);
        match m.top_slot() {
            None => {
                let mut e = [0i64; 8];
                e[g] = n as i64;
                Ok(self.make_mono(e)?.map(|x| vec![(x, one)]).unwrap_or_default())
            }
            Some(h) if h <= g => {
                let mut e = m.0.map(|x| x as i64);
                e[g] += n as i64;
                Ok(self.make_mono(e)?.map(|x| vec![(x, one)]).unwrap_or_default())
            }
            Some(h) => {
                let a = m.0[h] as i64;
                let mut rest = *m;
                rest.0[h] = 0;
                let swapped = rules::swap(self, h, a, g, n as i64)?;
                let mut acc: FxHashMap<Mono, Scalar> = FxHashMap::default();
                for (c, coef) in swapped {
                    for (mono, v) in self.mul_mono(&rest, &c)? {
                        accumulate(&mut acc, mono, &(&coef * &v));
                    }
                }
                Ok(finish(acc))
            }
        }
    }

    /// Product of two monomials in normal form.
    pub(crate) fn mul_mono(&self, a: &Mono, b: &Mono) -> Result<Vec<(Mono, Scalar)>> {
        let one = Scalar::one(self.ctx);
        match (a.top_slot(), b.low_slot()) {
            (_, None) => return Ok(vec![(*a, one)]),
            (None, _) => return Ok(vec![(*b, one)]),
            (Some(h), Some(l)) if h < l => {
                let mut e = [0i64; 8];
                for s in 0..8 {
                    e[s] = a.0[s] as i64 + b.0[s] as i64;
                }
                return Ok(self.make_mono(e)?.map(|x| vec![(x, one)]).unwrap_or_default());
            }
            _ => {}
        }
        let mut cur: Vec<(Mono, Scalar)> = vec![(*a, one)];
        for s in 0..8 {
            let n = b.0[s];
            if n == 0 {
                continue;
            }
            if cur.len() == 1 {
                let (m, c) = &cur[0];
                let t = self.mul_mono_genpow(m, s, n)?;
                cur = t.iter().map(|(x, v)| (*x, c * v)).collect();
                continue;
            }
            let mut acc: FxHashMap<Mono, Scalar> = FxHashMap::default();
            for (m, c) in &cur {
                for (x, v) in self.mul_mono_genpow(m, s, n)?.iter() {
                    accumulate(&mut acc, *x, &(c * v));
                }
            }
            cur = finish(acc);
        }
        Ok(cur)
    }
}

pub(crate) fn accumulate(acc: &mut FxHashMap<Mono, Scalar>, m: Mono, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(v) => *v += c,
        None => {
            acc.insert(m, c.clone());
        }
    }
}

pub(crate) fn finish(acc: FxHashMap<Mono, Scalar>) -> Vec<(Mono, Scalar)> {
    let mut v: Vec<(Mono, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    v
}

/// `[k1; n] = (q^n k1 - q^-n k1^-1) / (q - q^-1)` in the quotient algebra.
pub fn bracket_k1(spec: &'static AlgebraSpec, n: i64) -> Result<Element> {
    rules::bracket(spec, K1, n)
}

#[cfg(test)]
mod tests;
