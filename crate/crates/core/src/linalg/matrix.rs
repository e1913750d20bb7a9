use rustc_hash::FxHashMap;

use super::{Field, SparseVec};

/// Row-major sparse matrix; each row is a [`SparseVec`].
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize, one: &F) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, one.clone())]).collect() }
    }

    /// Duplicate positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut acc: Vec<FxHashMap<usize, F>> = vec![FxHashMap::default(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i}, {j}) outside {rows}x{cols}");
            match acc[i].get_mut(&j) {
                Some(x) => *x = x.add(&v),
                None => {
                    acc[i].insert(j, v);
                }
            }
        }
        let data = acc
            .into_iter()
            .map(|m| {
                let mut r: SparseVec<F> = m.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                r.sort_by_key(|t| t.0);
                r
            })
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec<F> {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        let r = &self.data[i];
        r.binary_search_by_key(&j, |t| t.0).ok().map(|k| &r[k].1)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn map<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> SparseMatrix<G> {
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|v| v.mul(c))
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                        out.push(a[i].clone());
                        i += 1;
                    } else if i == a.len() || b[j].0 < a[i].0 {
                        let v = if sign { b[j].1.zero_like().sub(&b[j].1) } else { b[j].1.clone() };
                        out.push((b[j].0, v));
                        j += 1;
                    } else {
                        let v = if sign { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                        if !v.is_zero() {
                            out.push((a[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: FxHashMap<usize, F> = FxHashMap::default();
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        let t = a.mul(b);
                        match acc.get_mut(j) {
                            Some(x) => *x = x.add(&t),
                            None => {
                                acc.insert(*j, t);
                            }
                        }
                    }
                }
                let mut out: SparseVec<F> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                out.sort_by_key(|t| t.0);
                out
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, data }
    }

    /// `self ⊗ other` with `self`'s index most significant.
    pub fn kron(&self, other: &Self) -> Self {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * other.cols + jb, a.mul(b)));
                    }
                }
                data.push(row);
            }
        }
        SparseMatrix { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix::from_triplets(self.cols, self.rows, self.entries().map(|(i, j, v)| (j, i, v.clone())))
    }

    /// Row-major flattening `(i, j) -> i * cols + j`.
    pub fn vectorize(&self) -> SparseVec<F> {
        self.entries().map(|(i, j, v)| (i * self.cols + j, v.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;

    fn m(rows: usize, cols: usize, v: &[i64]) -> SparseMatrix<Fp> {
        SparseMatrix::from_triplets(rows, cols, v.iter().enumerate().map(|(k, x)| (k / cols, k % cols, Fp::new(*x, 101))))
    }

    #[test]
    fn products_and_kron() {
        let a = m(2, 2, &[1, 2, 0, 3]);
        let b = m(2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&b), m(2, 2, &[2, 1, 3, 0]));
        assert_eq!(a.add(&b).sub(&b), a);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0, 1), Some(&Fp::new(1, 101)));
        assert_eq!(k.get(1, 2), Some(&Fp::new(2, 101)));
        assert_eq!(k.get(3, 2), Some(&Fp::new(3, 101)));
        assert_eq!(k.nnz(), 6);
        assert_eq!(a.transpose().get(1, 0), Some(&Fp::new(2, 101)));
        assert!(a.sub(&a).is_zero());
        assert_eq!(SparseMatrix::identity(2, &Fp::new(1, 101)).mul(&a), a);
    }
}
