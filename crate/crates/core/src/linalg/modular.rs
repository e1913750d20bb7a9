use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::Field;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An element of Z/p with the modulus carried along.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for s in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % s == 0 {
            return n == s;
        }
    }
    let (mut dd, mut r) = (n - 1, 0);
    while dd % 2 == 0 {
        dd /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, dd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Fp {
        Fp { v: v.rem_euclid(p as i64) as u64, p }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp { v: (self.v + o.v) % self.p, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: (self.v + self.p - o.v) % self.p, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: mulmod(self.v, o.v, self.p), p: self.p }
    }
    fn inv(&self) -> Self {
        Fp { v: powmod(self.v, self.p - 2, self.p), p: self.p }
    }
}

/// Reduction Q(q) -> F_p sending q to a primitive d-th root of unity mod p.
#[derive(Clone, Debug)]
pub struct ModularImage {
    pub p: u64,
    pub zeta: u64,
    d: u32,
    zeta_pows: Vec<u64>,
}

impl ModularImage {
    /// Uses the smallest prime p = 1 mod d with p > `above`.
    pub fn new(d: u32, above: u64) -> ModularImage {
        let d64 = d as u64;
        let mut p = above + 1;
        p += (d64 + 1 - p % d64) % d64;
        while !is_prime(p) {
            p += d64;
        }
        let facs = prime_factors(d64);
        let zeta = (2..p)
            .map(|g| powmod(g, (p - 1) / d64, p))
            .find(|&z| z != 1 && facs.iter().all(|&f| powmod(z, d64 / f, p) != 1))
            .expect("a primitive root exists");
        let zeta_pows = (0..d64).map(|k| powmod(zeta, k, p)).collect();
        ModularImage { p, zeta, d, zeta_pows }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    fn reduce_big(&self, b: &BigInt) -> u64 {
        let m = b % BigInt::from(self.p);
        let m = if m < BigInt::zero() { m + BigInt::from(self.p) } else { m };
        m.to_u64().expect("fits")
    }

    /// Image of a scalar; fails if a denominator vanishes mod p.
    pub fn map(&self, s: &Scalar) -> Result<Fp> {
        if s.d() != self.d {
            return Err(Error::SpecMismatch(format!("scalar for d={} mapped mod d={}", s.d(), self.d)));
        }
        let p = self.p;
        let (acc, den) = if let Some((num, den)) = s.small_parts() {
            let mut acc = 0u64;
            for (i, &c) in num.iter().enumerate() {
                acc = (acc + mulmod(Fp::new(c, p).v, self.zeta_pows[i], p)) % p;
            }
            (acc, Fp::new(den, p).v)
        } else {
            let mut acc = 0u64;
            for (i, (n, dd)) in s.coefficients().iter().enumerate() {
                let dv = self.reduce_big(dd);
                if dv == 0 {
                    return Err(Error::DivisionByZero);
                }
                let t = mulmod(self.reduce_big(n), powmod(dv, p - 2, p), p);
                acc = (acc + mulmod(t, self.zeta_pows[i], p)) % p;
            }
            (acc, 1)
        };
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Fp { v: mulmod(acc, powmod(den, p - 2, p), p), p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldContext;

    #[test]
    fn image_is_a_ring_map() {
        let ctx = FieldContext::get(7).unwrap();
        let img = ModularImage::new(7, 1 << 20);
        assert_eq!(img.p % 7, 1);
        assert!(is_prime(img.p));
        let a = Scalar::parse(ctx, "3/5 - q + 2*q^3").unwrap();
        let b = Scalar::parse(ctx, "q^5 + 1/7").unwrap();
        let ma = img.map(&a).unwrap();
        let mb = img.map(&b).unwrap();
        assert_eq!(img.map(&(&a * &b)).unwrap(), ma.mul(&mb));
        assert_eq!(img.map(&(&a + &b)).unwrap(), ma.add(&mb));
        assert_eq!(img.map(&a.invert().unwrap()).unwrap(), ma.inv());
        assert_eq!(img.map(&Scalar::q_power(ctx, 7)).unwrap().v, 1);
        assert_ne!(img.map(&Scalar::q(ctx)).unwrap().v, 1);
    }
}
