use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::linalg::{Echelon, Field, Fp, ModularImage, SparseMatrix, SparseVec};
use crate::pbw::{Element, Gen};
use crate::rep::{tensor_digits, weight_of, RepContext, RepMatrix};
use crate::scalar::Scalar;

/// Matrix entries that determine every element of the commutant, certified by a
/// full-rank elimination modulo a prime.
#[derive(Clone, Debug)]
pub struct DeterminingSet {
    /// Positions `(row, col)`, in the order used for coordinates.
    pub entries: Vec<(usize, usize)>,
    /// Distinct columns among `entries`.
    pub cols: Vec<usize>,
    /// For each entry, its column slot in `cols` and its row.
    pub(crate) slots: Vec<(usize, usize)>,
    /// Upper bound on the commutant dimension: `entries.len()`.
    pub prime: u64,
    pub unknowns: usize,
}

/// Basis vectors grouped by their `(k1, k2)` eigenvalue exponents.
fn classes(d: i64, n: usize) -> Vec<Vec<usize>> {
    let dim = 4usize.pow(n as u32);
    let mut groups: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for v in 0..dim {
        let (mut s, mut r) = (0i64, 0i64);
        for digit in tensor_digits(v, n) {
            let (a, b) = weight_of(digit);
            s += a as i64;
            r += b as i64;
        }
        groups.entry((s.rem_euclid(d), (r - s).rem_euclid(d))).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Unknown entries of a `k`-commuting matrix, numbered so that low columns come last
/// and are therefore preferred as free variables.
fn unknowns(d: i64, n: usize) -> Vec<(usize, usize)> {
    let dim = 4usize.pow(n as u32);
    let mut out = Vec::new();
    for class in classes(d, n) {
        for &i in &class {
            for &j in &class {
                out.push((i, j));
            }
        }
    }
    out.sort_by_key(|&(i, j)| (dim - 1 - j, i));
    out
}

pub(crate) fn rho_generators(rc: &RepContext, n: usize) -> Result<Vec<RepMatrix>> {
    Gen::ALL.iter().map(|g| rc.rho_n(&Element::gen(rc.ubar(), *g)?, n)).collect()
}

/// Rows of the linear system `X G - G X = 0` over the given unknowns.
fn equations<F: Field>(gens: &[SparseMatrix<F>], unk: &[(usize, usize)]) -> Vec<SparseVec<F>> {
    let index: FxHashMap<(usize, usize), usize> = unk.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut out = Vec::new();
    for g in gens {
        let gt = g.transpose();
        let mut eqs: FxHashMap<(usize, usize), BTreeMap<usize, F>> = FxHashMap::default();
        for (&(i, k), &u) in &index {
            // (X G)_{ij} gets X_{ik} G_{kj}
            for (j, c) in g.row(k) {
                let e = eqs.entry((i, *j)).or_default();
                let slot = e.entry(u).or_insert_with(|| c.zero_like());
                *slot = slot.add(c);
            }
            // (G X)_{lk} gets G_{li} X_{ik}
            for (l, c) in gt.row(i) {
                let e = eqs.entry((*l, k)).or_default();
                let slot = e.entry(u).or_insert_with(|| c.zero_like());
                *slot = slot.sub(c);
            }
        }
        let mut keys: Vec<_> = eqs.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let row: SparseVec<F> = eqs.remove(&key).unwrap().into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !row.is_empty() {
                out.push(row);
            }
        }
    }
    out
}

pub(crate) fn to_modular(m: &RepMatrix, img: &ModularImage) -> Result<SparseMatrix<Fp>> {
    let mut t = Vec::with_capacity(m.nnz());
    for (i, j, v) in m.entries() {
        t.push((i, j, img.map(v)?));
    }
    Ok(SparseMatrix::from_triplets(m.rows(), m.cols(), t))
}

/// Prime used for all modular eliminations.
pub const PRIME_FLOOR: u64 = 1 << 30;

pub(crate) fn modular_image(d: i64) -> ModularImage {
    ModularImage::new(d as u32, PRIME_FLOOR)
}

pub(crate) fn determining_set(rc: &RepContext, n: usize, gens: &[RepMatrix]) -> Result<DeterminingSet> {
    let img = modular_image(rc.d());
    let unk = unknowns(rc.d(), n);
    let mg: Vec<SparseMatrix<Fp>> = gens.iter().map(|g| to_modular(g, &img)).collect::<Result<_>>()?;
    let mut ech: Echelon<Fp> = Echelon::new();
    for row in equations(&mg, &unk) {
        ech.insert(&row);
        if ech.rank() == unk.len() {
            break;
        }
    }
    let pivots: std::collections::HashSet<usize> = ech.pivot_columns().collect();
    let entries: Vec<(usize, usize)> = (0..unk.len()).filter(|u| !pivots.contains(u)).map(|u| unk[u]).collect();
    let mut cols: Vec<usize> = entries.iter().map(|e| e.1).collect();
    cols.sort_unstable();
    cols.dedup();
    let slots = entries.iter().map(|&(i, j)| (cols.binary_search(&j).unwrap(), i)).collect();
    Ok(DeterminingSet { entries, cols, slots, prime: img.p, unknowns: unk.len() })
}

/// Exact nullity of the commutator system over the cyclotomic field.
pub(crate) fn exact_nullity(rc: &RepContext, n: usize, gens: &[RepMatrix]) -> usize {
    let unk = unknowns(rc.d(), n);
    let mut ech: Echelon<Scalar> = Echelon::new();
    for row in equations(gens, &unk) {
        ech.insert(&row);
        if ech.rank() == unk.len() {
            break;
        }
    }
    unk.len() - ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_are_weights_below_d() {
        let c = classes(5, 2);
        assert_eq!(c.iter().map(|v| v.len() * v.len()).sum::<usize>(), 36);
        assert_eq!(unknowns(5, 3).len(), 400);
    }

    #[test]
    fn modular_and_exact_agree_small() {
        let rc = RepContext::new(5, 1).unwrap();
        for n in 1..=2 {
            let gens = rho_generators(&rc, n).unwrap();
            let det = determining_set(&rc, n, &gens).unwrap();
            assert_eq!(det.entries.len(), exact_nullity(&rc, n, &gens));
        }
    }
}
