//! Dense and sparse elimination over the exact field and over prime fields.

mod matrix;
mod modular;

use std::fmt;

use crate::scalar::Scalar;

pub use matrix::SparseMatrix;
pub use modular::{Fp, ModularImage};

/// The few field operations elimination needs.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Caller guarantees nonzero.
    fn inv(&self) -> Self;
}

impl Field for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero(self.ctx())
    }
    fn one_like(&self) -> Self {
        Scalar::one(self.ctx())
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.invert().expect("pivot is nonzero")
    }
}

/// Inverse of a square matrix by Gauss-Jordan; `None` if singular.
pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let zero = m[0][0].zero_like();
    let one = zero.one_like();
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].inv();
        for x in a[col].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = x.sub(&f.mul(p));
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A sparse vector with strictly increasing indices and nonzero entries.
pub type SparseVec<F> = Vec<(usize, F)>;

fn axpy<F: Field>(x: &SparseVec<F>, f: &F, y: &SparseVec<F>) -> SparseVec<F> {
    // x - f*y
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let t = f.mul(&y[j].1);
            out.push((y[j].0, t.zero_like().sub(&t)));
            j += 1;
        } else {
            let v = x[i].1.sub(&f.mul(&y[j].1));
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon form: rows are kept reduced against each other's pivots
/// (pivot = first nonzero index, normalized to one).
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    rows: Vec<SparseVec<F>>,
    pivots: std::collections::BTreeMap<usize, usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: Default::default() }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut v = v.clone();
        let mut k = 0;
        while k < v.len() {
            let idx = v[k].0;
            if let Some(&r) = self.pivots.get(&idx) {
                let f = v[k].1.clone();
                v = axpy(&v, &f, &self.rows[r]);
            } else {
                k += 1;
            }
        }
        v
    }

    pub fn is_independent(&self, v: &SparseVec<F>) -> bool {
        !self.reduce(v).is_empty()
    }

    /// Insert `v`; returns false when it lies in the span.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv();
        let r: SparseVec<F> = r.into_iter().map(|(i, x)| (i, x.mul(&inv))).collect();
        self.pivots.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }
}

/// Rank of a list of sparse rows.
pub fn rank<F: Field>(rows: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldContext;

    #[test]
    fn inverse_of_small_cyclotomic_matrix() {
        let c = FieldContext::get(5).unwrap();
        let q = |n| Scalar::q_power(c, n);
        let m = vec![vec![q(1), q(2)], vec![Scalar::one(c), q(4)]];
        let inv = inverse(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Scalar::zero(c);
                for k in 0..2 {
                    s += &(&m[i][k] * &inv[k][j]);
                }
                assert_eq!(s.is_one(), i == j);
                assert_eq!(s.is_zero(), i != j);
            }
        }
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(3)]];
        assert!(inverse(&sing).is_none());
    }

    #[test]
    fn echelon_rank() {
        let c = FieldContext::get(3).unwrap();
        let s = |v: i64| Scalar::from_int(c, v);
        let rows = vec![
            vec![(0, s(1)), (2, s(2))],
            vec![(1, s(1)), (2, s(1))],
            vec![(0, s(2)), (1, s(3)), (2, s(7))],
            vec![(2, Scalar::q(c))],
        ];
        assert_eq!(rank(&rows), 3);
        let mut e = Echelon::new();
        assert!(e.insert(&rows[0]));
        assert!(e.insert(&rows[1]));
        assert!(!e.insert(&rows[2]));
        assert!(e.is_independent(&rows[3]));
        assert_eq!(e.rank(), 2);
    }
}
