//! Closed-form straightening of `h^a * g^b` for PBW slots `h > g`.

use super::{AlgebraSpec, Element, Mono, E1, E2, E3, F1, F2, F3, K1, K2};
use crate::error::{Error, Result};
use crate::scalar::{gauss_binomial, q_int, Scalar};

struct Out<'a> {
    spec: &'a AlgebraSpec,
    terms: Vec<(Mono, Scalar)>,
}

impl Out<'_> {
    fn push(&mut self, slots: &[(usize, i64)], coef: Scalar) -> Result<()> {
        if coef.is_zero() {
            return Ok(());
        }
        let mut e = [0i64; 8];
        for &(s, x) in slots {
            e[s] += x;
        }
        if let Some(m) = self.spec.make_mono(e)? {
            self.terms.push((m, coef));
        }
        Ok(())
    }
}

fn qp(spec: &AlgebraSpec, n: i64) -> Scalar {
    Scalar::q_power(spec.ctx(), n)
}

/// Laurent polynomial `prod_m [k1; n_m]` as `(exponent, coefficient)` pairs.
fn bracket_product(spec: &AlgebraSpec, shifts: impl Iterator<Item = i64>) -> Vec<(i64, Scalar)> {
    let mut poly: Vec<(i64, Scalar)> = vec![(0, Scalar::one(spec.ctx()))];
    for n in shifts {
        let up = &qp(spec, n) * spec.inv_qq();
        let down = -(&qp(spec, -n) * spec.inv_qq());
        let mut next: Vec<(i64, Scalar)> = Vec::with_capacity(poly.len() + 1);
        for (e, c) in &poly {
            for (de, f) in [(1, &up), (-1, &down)] {
                let v = c * f;
                match next.iter_mut().find(|(x, _)| *x == e + de) {
                    Some((_, acc)) => *acc += &v,
                    None => next.push((e + de, v)),
                }
            }
        }
        poly = next;
    }
    poly
}

pub(super) fn swap(spec: &AlgebraSpec, h: usize, a: i64, g: usize, b: i64) -> Result<Vec<(Mono, Scalar)>> {
    let ctx = spec.ctx();
    let one = Scalar::one(ctx);
    let mut out = Out { spec, terms: Vec::with_capacity(4) };
    let qint = |n: i64| q_int(ctx, n);
    match (h, g) {
        (F3, F1) => out.push(&[(F1, b), (F3, a)], qp(spec, -a * b))?,
        (F2, F1) => {
            out.push(&[(F1, b), (F2, a)], qp(spec, a * b))?;
            if a == 1 {
                out.push(&[(F1, b - 1), (F3, 1)], qint(b))?;
            }
        }
        (F2, F3) => out.push(&[(F3, b), (F2, a)], sign_q(spec, a * b))?,
        (K1, F1) => out.push(&[(F1, b), (K1, a)], qp(spec, -2 * a * b))?,
        (K1, F3) => out.push(&[(F3, b), (K1, a)], qp(spec, -a * b))?,
        (K1, F2) => out.push(&[(F2, b), (K1, a)], qp(spec, a * b))?,
        (K2, F1) => out.push(&[(F1, b), (K2, a)], qp(spec, a * b))?,
        (K2, F3) => out.push(&[(F3, b), (K2, a)], qp(spec, a * b))?,
        (K2, F2) | (K2, K1) => out.push(&[(g, b), (h, a)], one)?,
        (E1, F1) => {
            let (r, w) = (a, b);
            out.push(&[(F1, w), (E1, r)], one.clone())?;
            for u in 1..=r.min(w) {
                let mut coef = gauss_binomial(ctx, r, u)?;
                for m in (w - u + 1)..=w {
                    coef *= &qint(m);
                }
                if coef.is_zero() {
                    continue;
                }
                let poly = bracket_product(spec, (0..u).map(|m| 2 * u - r - w - m));
                for (ke, c) in poly {
                    out.push(&[(F1, w - u), (K1, ke), (E1, r - u)], &coef * &c)?;
                }
            }
        }
        (E1, F3) => {
            let r = a;
            out.push(&[(F3, b), (E1, r)], one)?;
            out.push(&[(F2, 1), (K1, 1), (E1, r - 1)], -(&qp(spec, 2 - r) * &qint(r)))?;
        }
        (E1, F2) => out.push(&[(F2, b), (E1, a)], one)?,
        (E1, K1) => out.push(&[(K1, b), (E1, a)], qp(spec, -2 * a * b))?,
        (E1, K2) => out.push(&[(K2, b), (E1, a)], qp(spec, a * b))?,
        (E3, F1) => {
            let w = b;
            out.push(&[(F1, w), (E3, 1)], one)?;
            out.push(&[(F1, w - 1), (K1, -1), (E2, 1)], -(&qp(spec, w - 2) * &qint(w)))?;
        }
        (E3, F3) => {
            out.push(&[(F3, 1), (E3, 1)], -one)?;
            out.push(&[(K1, 1), (K2, 1)], spec.inv_qq().clone())?;
            out.push(&[(K1, -1), (K2, -1)], -spec.inv_qq().clone())?;
        }
        (E3, F2) => {
            out.push(&[(F2, 1), (E3, 1)], -one.clone())?;
            out.push(&[(K2, 1), (E1, 1)], one)?;
        }
        (E3, K1) => out.push(&[(K1, b), (E3, a)], qp(spec, -a * b))?,
        (E3, K2) => out.push(&[(K2, b), (E3, a)], qp(spec, a * b))?,
        (E3, E1) => out.push(&[(E1, b), (E3, a)], qp(spec, -a * b))?,
        (E2, F1) => out.push(&[(F1, b), (E2, a)], one)?,
        (E2, F3) => {
            out.push(&[(F3, 1), (E2, 1)], -one.clone())?;
            out.push(&[(F1, 1), (K2, -1)], one)?;
        }
        (E2, F2) => {
            out.push(&[(F2, 1), (E2, 1)], -one)?;
            out.push(&[(K2, 1)], spec.inv_qq().clone())?;
            out.push(&[(K2, -1)], -spec.inv_qq().clone())?;
        }
        (E2, K1) => out.push(&[(K1, b), (E2, a)], qp(spec, a * b))?,
        (E2, K2) => out.push(&[(K2, b), (E2, a)], one)?,
        (E2, E1) => {
            let r = b;
            out.push(&[(E1, r), (E2, 1)], qp(spec, r))?;
            out.push(&[(E1, r - 1), (E3, 1)], -(&qp(spec, 1) * &qint(r)))?;
        }
        (E2, E3) => out.push(&[(E3, 1), (E2, 1)], -qp(spec, 1))?,
        _ => return Err(Error::UnknownPair(super::SLOT_NAMES[h], super::SLOT_NAMES[g])),
    }
    Ok(out.terms)
}

/// `(-q)^n`
fn sign_q(spec: &AlgebraSpec, n: i64) -> Scalar {
    let v = qp(spec, n);
    if n % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `[k; n]` for `k = k1` or `k2`.
pub(super) fn bracket(spec: &'static AlgebraSpec, slot: usize, n: i64) -> Result<Element> {
    let mut up = [0i64; 8];
    up[slot] = 1;
    let mut down = [0i64; 8];
    down[slot] = -1;
    let mut terms = Vec::new();
    if let Some(m) = spec.make_mono(up)? {
        terms.push((m, &qp(spec, n) * spec.inv_qq()));
    }
    if let Some(m) = spec.make_mono(down)? {
        terms.push((m, -(&qp(spec, -n) * spec.inv_qq())));
    }
    Ok(Element::from_terms(spec, terms))
}
