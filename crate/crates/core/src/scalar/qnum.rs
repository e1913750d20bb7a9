//! q-integers, q-factorials and Gaussian binomials, all computed without
//! division so that they stay meaningful where `[d]` vanishes.

use super::{FieldContext, Scalar};
use crate::error::{Error, Result};

/// `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`, with `[-n] = -[n]`.
pub fn q_int(ctx: &'static FieldContext, n: i64) -> Scalar {
    let m = n.abs();
    let mut acc = Scalar::zero(ctx);
    for j in 0..m {
        acc += &Scalar::q_power(ctx, m - 1 - 2 * j);
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

/// `[n]! = [1][2]...[n]`; `[0]! = 1`.
pub fn q_factorial(ctx: &'static FieldContext, n: u32) -> Scalar {
    let mut acc = Scalar::one(ctx);
    for k in 1..=n as i64 {
        acc *= &q_int(ctx, k);
    }
    acc
}

/// Gaussian binomial via `[n k] = q^k [n-1 k] + q^(k-n) [n-1 k-1]`.
pub fn gauss_binomial(ctx: &'static FieldContext, n: i64, k: i64) -> Result<Scalar> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::IndexError(format!("gauss_binomial({n}, {k})")));
    }
    let mut row = vec![Scalar::one(ctx)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut v = Scalar::zero(ctx);
            if j < m {
                v += &(&Scalar::q_power(ctx, j) * &row[j as usize]);
            }
            if j > 0 {
                v += &(&Scalar::q_power(ctx, j - m) * &row[j as usize - 1]);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// `(k)_{q^e} = 1 + q^e + ... + q^(e(k-1))`.
pub fn q_paren(ctx: &'static FieldContext, k: u32, e: i64) -> Scalar {
    let mut acc = Scalar::zero(ctx);
    for j in 0..k as i64 {
        acc += &Scalar::q_power(ctx, e * j);
    }
    acc
}

/// `(n)_{q^e}! = (1)_{q^e} (2)_{q^e} ... (n)_{q^e}`.
pub fn q_paren_factorial(ctx: &'static FieldContext, n: u32, e: i64) -> Scalar {
    let mut acc = Scalar::one(ctx);
    for k in 1..=n {
        acc *= &q_paren(ctx, k, e);
    }
    acc
}
