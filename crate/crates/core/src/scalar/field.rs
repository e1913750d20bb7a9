use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Coeffs = SmallVec<[i64; 6]>;

/// The cyclotomic field `Q[q]/(Phi_d(q))` for a fixed odd order `d`.
///
/// Contexts are interned: [`FieldContext::get`] hands out a `'static`
/// reference, so scalars can carry their field by pointer.
#[derive(Debug)]
pub struct FieldContext {
    d: u32,
    phi: Vec<i64>,
    degree: usize,
    /// `q^k mod Phi_d` for `0 <= k < max(d, 2*degree - 1)`.
    powers: Vec<Coeffs>,
}

static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static FieldContext>>> = OnceLock::new();

impl FieldContext {
    pub fn get(d: i64) -> Result<&'static FieldContext> {
        if d < 3 || d % 2 == 0 || d > 255 {
            return Err(Error::InvalidOrder(d));
        }
        let d = d as u32;
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = registry.lock().expect("field registry poisoned");
        if let Some(ctx) = map.get(&d) {
            return Ok(ctx);
        }
        let ctx: &'static FieldContext = Box::leak(Box::new(FieldContext::build(d)));
        map.insert(d, ctx);
        Ok(ctx)
    }

    fn build(d: u32) -> FieldContext {
        let phi = cyclotomic_polynomial(d as usize);
        let degree = phi.len() - 1;
        let count = (d as usize).max(2 * degree);
        let mut powers: Vec<Coeffs> = Vec::with_capacity(count);
        let mut cur: Coeffs = SmallVec::from_elem(0, degree);
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by q, then fold the overflow coefficient back with Phi_d (monic)
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] -= top * phi[j];
                }
            }
        }
        FieldContext {
            d,
            phi,
            degree,
            powers,
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Euler totient of `d`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Integer coefficients of `Phi_d`, lowest degree first.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub(crate) fn power_table(&self, k: usize) -> &Coeffs {
        &self.powers[k]
    }

    pub(crate) fn reduce_exp(&self, n: i64) -> usize {
        n.rem_euclid(self.d as i64) as usize
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    let mut result = num;
    for m in 1..n {
        if n % m == 0 {
            let phi_m = cyclotomic_polynomial(m);
            result = poly_div_exact(&result, &phi_m);
        }
    }
    result
}

#[cfg(test)]
pub(crate) fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn phi_has_totient_degree_and_divides() {
        for d in [3u32, 5, 7, 9, 15, 21] {
            let ctx = FieldContext::get(d as i64).unwrap();
            assert_eq!(ctx.degree() as u32, totient(d));
            // (q^d - 1) mod Phi_d == 0
            let mut big = vec![0i64; d as usize + 1];
            big[0] = -1;
            big[d as usize] = 1;
            let quot = poly_div_exact(&big, ctx.phi());
            assert_eq!(quot.len(), d as usize + 1 - ctx.degree());
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(FieldContext::get(4).unwrap_err(), Error::InvalidOrder(4));
        assert_eq!(FieldContext::get(1).unwrap_err(), Error::InvalidOrder(1));
    }
}
