//! Exact arithmetic in `F = Q[q]/(Phi_d(q))`.
//!
//! A [`Scalar`] is stored as an integer coefficient vector over a common
//! positive denominator, in lowest terms. Values whose numerators and
//! denominator fit in `i64` stay on an allocation-free path with checked
//! `i128` intermediates; anything larger is promoted to `BigInt` and
//! demoted again as soon as it fits. The representation is canonical, so
//! structural equality is field equality.

mod field;
mod format;
mod qnum;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

pub use field::FieldContext;
pub(crate) use field::Coeffs;
pub use format::ScalarJson;
pub use qnum::{gauss_binomial, q_factorial, q_int, q_paren, q_paren_factorial};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: Coeffs, den: i64 },
    Big(Box<BigRepr>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BigRepr {
    num: Vec<BigInt>,
    den: BigInt,
}

#[derive(Clone)]
pub struct Scalar {
    ctx: &'static FieldContext,
    repr: Repr,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.d() == other.ctx.d() && self.repr == other.repr
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.d().hash(state);
        self.repr.hash(state);
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// Normalize an `i128` numerator vector over `den`. `None` on overflow.
fn normalize_small(num: &mut [i128], mut den: i128) -> Option<Repr> {
    if den == 0 {
        return None;
    }
    if den < 0 {
        den = den.checked_neg()?;
        for c in num.iter_mut() {
            *c = c.checked_neg()?;
        }
    }
    if num.iter().all(|c| *c == 0) {
        let mut z: Coeffs = SmallVec::from_elem(0, num.len());
        z[0] = 0;
        return Some(Repr::Small { num: z, den: 1 });
    }
    if den != 1 {
        let mut g = den;
        for &c in num.iter() {
            if c != 0 {
                g = gcd_i128(g, c);
                if g == 1 {
                    break;
                }
            }
        }
        if g != 1 {
            den /= g;
            for c in num.iter_mut() {
                *c /= g;
            }
        }
    }
    let den64 = i64::try_from(den).ok()?;
    let mut out: Coeffs = SmallVec::with_capacity(num.len());
    for &c in num.iter() {
        out.push(i64::try_from(c).ok()?);
    }
    Some(Repr::Small { num: out, den: den64 })
}

fn normalize_big(mut num: Vec<BigInt>, mut den: BigInt) -> Repr {
    if den.is_negative() {
        den = -den;
        for c in num.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    if num.iter().all(|c| c.is_zero()) {
        let z: Coeffs = SmallVec::from_elem(0, num.len());
        return Repr::Small { num: z, den: 1 };
    }
    let mut g = den.clone();
    for c in num.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    if !g.is_one() {
        den /= &g;
        for c in num.iter_mut() {
            *c /= &g;
        }
    }
    if let Some(den64) = den.to_i64() {
        let mut out: Coeffs = SmallVec::with_capacity(num.len());
        let mut fits = true;
        for c in num.iter() {
            match c.to_i64() {
                Some(v) => out.push(v),
                None => {
                    fits = false;
                    break;
                }
            }
        }
        if fits {
            return Repr::Small { num: out, den: den64 };
        }
    }
    Repr::Big(Box::new(BigRepr { num, den }))
}

impl Repr {
    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Repr::Small { num, den } => (num.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den)),
            Repr::Big(b) => (b.num.clone(), b.den.clone()),
        }
    }
}

impl Scalar {
    pub fn zero(ctx: &'static FieldContext) -> Scalar {
        Scalar {
            ctx,
            repr: Repr::Small { num: SmallVec::from_elem(0, ctx.degree()), den: 1 },
        }
    }

    pub fn one(ctx: &'static FieldContext) -> Scalar {
        Scalar::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &'static FieldContext, v: i64) -> Scalar {
        let mut num: Coeffs = SmallVec::from_elem(0, ctx.degree());
        num[0] = v;
        Scalar { ctx, repr: Repr::Small { num, den: 1 } }
    }

    pub fn from_ratio(ctx: &'static FieldContext, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut num = vec![0i128; ctx.degree()];
        num[0] = n as i128;
        let repr = normalize_small(&mut num, d as i128).expect("i64 ratio always fits");
        Ok(Scalar { ctx, repr })
    }

    /// Build from rational coefficients `(numerator, denominator)` of `1, q, q^2, ...`.
    /// Longer inputs are reduced modulo `Phi_d`.
    pub fn from_rational_coeffs(ctx: &'static FieldContext, coeffs: &[(BigInt, BigInt)]) -> Result<Scalar> {
        let mut acc = Scalar::zero(ctx);
        for (k, (n, d)) in coeffs.iter().enumerate() {
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if n.is_zero() {
                continue;
            }
            let mut num = vec![BigInt::zero(); ctx.degree()];
            num[0] = n.clone();
            let c = Scalar { ctx, repr: normalize_big(num, d.clone()) };
            acc += &(&c * &Scalar::q_power(ctx, k as i64));
        }
        Ok(acc)
    }

    /// `q^n`, with the exponent reduced modulo `d`.
    pub fn q_power(ctx: &'static FieldContext, n: i64) -> Scalar {
        let k = ctx.reduce_exp(n);
        Scalar { ctx, repr: Repr::Small { num: ctx.power_table(k).clone(), den: 1 } }
    }

    pub fn q(ctx: &'static FieldContext) -> Scalar {
        Scalar::q_power(ctx, 1)
    }

    pub fn ctx(&self) -> &'static FieldContext {
        self.ctx
    }

    pub fn d(&self) -> u32 {
        self.ctx.d()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num.iter().all(|c| *c == 0),
            Repr::Big(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small { num, den } => *den == 1 && num[0] == 1 && num[1..].iter().all(|c| *c == 0),
            Repr::Big(_) => false,
        }
    }

    /// Rational coefficients of `1, q, ..., q^(phi(d)-1)` as `(numerator, denominator)` in lowest terms.
    pub fn coefficients(&self) -> Vec<(BigInt, BigInt)> {
        let (num, den) = self.repr.to_big();
        num.into_iter()
            .map(|n| {
                let g = n.gcd(&den);
                if n.is_zero() {
                    (BigInt::zero(), BigInt::one())
                } else {
                    (&n / &g, &den / &g)
                }
            })
            .collect()
    }

    /// The value as a rational number if it lies in `Q`.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        let coeffs = self.coefficients();
        if coeffs[1..].iter().all(|(n, _)| n.is_zero()) {
            Some(coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_ctx(&self, other: &Scalar) {
        assert_eq!(
            self.ctx.d(),
            other.ctx.d(),
            "scalars from different cyclotomic fields"
        );
    }

    fn add_impl(&self, other: &Scalar, negate_other: bool) -> Scalar {
        self.check_ctx(other);
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) = (&self.repr, &other.repr) {
            if *d1 == 1 && *d2 == 1 {
                let mut out: Coeffs = SmallVec::with_capacity(n1.len());
                let mut ok = true;
                for (a, b) in n1.iter().zip(n2.iter()) {
                    let r = if negate_other { a.checked_sub(*b) } else { a.checked_add(*b) };
                    match r {
                        Some(v) => out.push(v),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    return Scalar { ctx: self.ctx, repr: Repr::Small { num: out, den: 1 } };
                }
            } else {
                let (d1, d2) = (*d1 as i128, *d2 as i128);
                let g = gcd_i128(d1, d2);
                let f1 = d2 / g;
                let f2 = d1 / g;
                let den = d1 * f1;
                let mut work = [0i128; 32];
                let len = n1.len();
                let mut ok = len <= 32;
                if ok {
                    for k in 0..len {
                        let a = n1[k] as i128 * f1;
                        let b = n2[k] as i128 * f2;
                        let r = if negate_other { a.checked_sub(b) } else { a.checked_add(b) };
                        match r {
                            Some(v) => work[k] = v,
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                }
                if ok {
                    if let Some(repr) = normalize_small(&mut work[..len], den) {
                        return Scalar { ctx: self.ctx, repr };
                    }
                }
            }
        }
        let (n1, d1) = self.repr.to_big();
        let (n2, d2) = other.repr.to_big();
        let num: Vec<BigInt> = n1
            .iter()
            .zip(n2.iter())
            .map(|(a, b)| {
                if negate_other {
                    a * &d2 - b * &d1
                } else {
                    a * &d2 + b * &d1
                }
            })
            .collect();
        Scalar { ctx: self.ctx, repr: normalize_big(num, d1 * d2) }
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        self.check_ctx(other);
        let ctx = self.ctx;
        let deg = ctx.degree();
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) = (&self.repr, &other.repr) {
            if let Some(repr) = mul_small(ctx, n1, *d1, n2, *d2) {
                return Scalar { ctx, repr };
            }
        }
        let (n1, d1) = self.repr.to_big();
        let (n2, d2) = other.repr.to_big();
        let mut conv = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in n1.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in n2.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = conv[..deg].to_vec();
        for k in deg..(2 * deg - 1) {
            if conv[k].is_zero() {
                continue;
            }
            for (j, t) in ctx.power_table(k).iter().enumerate() {
                if *t != 0 {
                    num[j] += &conv[k] * BigInt::from(*t);
                }
            }
        }
        Scalar { ctx, repr: normalize_big(num, d1 * d2) }
    }

    pub fn square(&self) -> Scalar {
        self.mul_impl(self)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Image under the Galois automorphism `q -> q^k` (`gcd(k, d) = 1`).
    pub fn galois(&self, k: i64) -> Scalar {
        let ctx = self.ctx;
        let mut acc = Scalar::zero(ctx);
        for (i, (n, d)) in self.coefficients().into_iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let mut num = vec![BigInt::zero(); ctx.degree()];
            num[0] = n;
            let c = Scalar { ctx, repr: normalize_big(num, d) };
            acc += &(&c * &Scalar::q_power(ctx, k * i as i64));
        }
        acc
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn invert(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ctx = self.ctx;
        let d = ctx.d() as i64;
        let mut conj = Scalar::one(ctx);
        for k in 2..d {
            if num_integer::gcd(k, d) == 1 {
                conj = &conj * &self.galois(k);
            }
        }
        let norm = self * &conj;
        let (n, den) = norm.as_rational().expect("field norm is rational");
        debug_assert!(!n.is_zero());
        let mut num = vec![BigInt::zero(); ctx.degree()];
        num[0] = den;
        let inv_norm = Scalar { ctx, repr: normalize_big(num, n) };
        Ok(&conj * &inv_norm)
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.invert()?)
    }

    pub(crate) fn small_parts(&self) -> Option<(&[i64], i64)> {
        match &self.repr {
            Repr::Small { num, den } => Some((num, *den)),
            Repr::Big(_) => None,
        }
    }
}

fn mul_small(ctx: &'static FieldContext, n1: &[i64], d1: i64, n2: &[i64], d2: i64) -> Option<Repr> {
    let deg = n1.len();
    if deg > 16 {
        return None;
    }
    let mut conv = [0i128; 32];
    for (i, &a) in n1.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let a = a as i128;
        for (j, &b) in n2.iter().enumerate() {
            if b != 0 {
                conv[i + j] = conv[i + j].checked_add(a * b as i128)?;
            }
        }
    }
    for k in deg..(2 * deg - 1) {
        let c = conv[k];
        if c == 0 {
            continue;
        }
        for (j, &t) in ctx.power_table(k).iter().enumerate() {
            if t != 0 {
                conv[j] = conv[j].checked_add(c.checked_mul(t as i128)?)?;
            }
        }
    }
    let den = d1 as i128 * d2 as i128;
    if den == 1 {
        let mut out: Coeffs = SmallVec::with_capacity(deg);
        for &c in conv[..deg].iter() {
            out.push(i64::try_from(c).ok()?);
        }
        return Some(Repr::Small { num: out, den: 1 });
    }
    normalize_small(&mut conv[..deg], den)
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Small { num, den } if num.iter().all(|c| *c != i64::MIN) => {
                Repr::Small { num: num.iter().map(|c| -c).collect(), den: *den }
            }
            other => {
                let (n, d) = other.to_big();
                normalize_big(n.into_iter().map(|c| -c).collect(), d)
            }
        };
        Scalar { ctx: self.ctx, repr }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
