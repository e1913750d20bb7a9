//! Centralizer algebras `L_{n,μ}` generated by the braiding operators on `V_μ^{⊗n}`.

mod basis;
mod commutant;
mod relations;

mod words;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use parking_lot::Mutex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Fp, SparseMatrix, SparseVec};
use crate::rep::{c_matrix, RepContext, RepMatrix};
use crate::scalar::Scalar;

pub use basis::{enumerate_basis, enumerate_basis_with, span_rank, BasisJson, SpanBasis, SpanRank, StopReason};
pub use commutant::{DeterminingSet, PRIME_FLOOR};
pub use relations::{braid_check, closure_check, decomposition_check, l3_relations_check, minimal_relation_check};

pub use words::{is_filtered, BraidWord, Exclusion, EXCLUDED_SUBWORDS};

pub const DEFAULT_CAP_N: usize = 4;

/// Largest admissible `n`: `SUPERQ_CAP_N` if set, else 5 with `enable_n5`, else 4.
pub fn cap_n(enable_n5: bool) -> usize {
    match std::env::var("SUPERQ_CAP_N").ok().and_then(|v| v.trim().parse().ok()) {
        Some(cap) => cap,
        None if enable_n5 => 5,
        None => DEFAULT_CAP_N,
    }
}

/// `id^{⊗(i-1)} ⊗ c ⊗ id^{⊗(n-i-1)}` on `V^{⊗n}`.
pub fn braid_generator(n: usize, i: usize, rc: &RepContext) -> Result<RepMatrix> {
    if i == 0 || i >= n {
        return Err(Error::IndexError(format!("braid generator g{i} needs 1 <= i <= n-1 = {}", n.saturating_sub(1))));
    }
    Ok(rc.identity(i - 1).kron(&c_matrix(rc)?).kron(&rc.identity(n - i - 1)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutantDimension {
    pub dim: usize,
    /// `exact_elimination`, or `modular_bound_attained` when independent words reach the
    /// nullity modulo a prime.
    pub method: String,
    pub modular_bound: usize,
    pub unknowns: usize,
}

/// Limit on unknowns for the exact commutator elimination.
const EXACT_UNKNOWNS: usize = 20_000;

/// `L_{n,μ}` realized on `V_μ^{⊗n}`.
pub struct Centralizer {
    rc: RepContext,
    n: usize,
    gens: Vec<RepMatrix>,
    gens_t: Vec<RepMatrix>,
    gens_mod: OnceLock<Vec<SparseMatrix<Fp>>>,
    rho: OnceLock<Vec<RepMatrix>>,
    det: Mutex<Option<Arc<DeterminingSet>>>,
    dim: Mutex<Option<CommutantDimension>>,
    basis: Mutex<Option<Arc<SpanBasis>>>,
}

impl Centralizer {
    pub fn new(d: i64, mu: i64, n: usize) -> Result<Centralizer> {
        Centralizer::with_cap(d, mu, n, cap_n(false))
    }

    pub fn with_cap(d: i64, mu: i64, n: usize, cap: usize) -> Result<Centralizer> {
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        if n == 0 {
            return Err(Error::IndexError("n must be at least 1".into()));
        }
        let rc = RepContext::new(d, mu)?;
        let gens: Vec<RepMatrix> = (1..n).map(|i| braid_generator(n, i, &rc)).collect::<Result<_>>()?;
        let gens_t = gens.iter().map(|g| g.transpose()).collect();
        Ok(Centralizer {
            rc,
            n,
            gens,
            gens_t,
            gens_mod: OnceLock::new(),
            rho: OnceLock::new(),
            det: Mutex::new(None),
            dim: Mutex::new(None),
            basis: Mutex::new(None),
        })
    }

    pub fn rep(&self) -> &RepContext {
        &self.rc
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.rc.d()
    }

    pub fn mu(&self) -> i64 {
        self.rc.mu()
    }

    pub fn dim(&self) -> usize {
        4usize.pow(self.n as u32)
    }

    /// `g_i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<&RepMatrix> {
        if i == 0 || i > self.gens.len() {
            return Err(Error::IndexError(format!("g{i} with n = {}", self.n)));
        }
        Ok(&self.gens[i - 1])
    }

    pub fn identity(&self) -> RepMatrix {
        self.rc.identity(self.n)
    }

    pub fn word_matrix(&self, w: &BraidWord) -> Result<RepMatrix> {
        let mut acc = self.identity();
        for &i in w.letters() {
            acc = acc.mul(self.generator(i as usize)?);
        }
        Ok(acc)
    }

    /// `ρ_{n,μ}` of the eight generators.
    pub fn rho_generators(&self) -> Result<&[RepMatrix]> {
        if let Some(r) = self.rho.get() {
            return Ok(r);
        }
        let r = commutant::rho_generators(&self.rc, self.n)?;
        Ok(self.rho.get_or_init(|| r))
    }

    pub fn determining_set(&self) -> Result<Arc<DeterminingSet>> {
        let mut slot = self.det.lock();
        if let Some(d) = slot.as_ref() {
            return Ok(d.clone());
        }
        let d = Arc::new(commutant::determining_set(&self.rc, self.n, self.rho_generators()?)?);
        *slot = Some(d.clone());
        Ok(d)
    }

    pub(crate) fn apply_letter(&self, i: u8, v: &SparseVec<Scalar>) -> SparseVec<Scalar> {
        apply(&self.gens_t[i as usize - 1], v)
    }

    pub(crate) fn unit_columns(&self, det: &DeterminingSet) -> Vec<SparseVec<Scalar>> {
        det.cols.iter().map(|&j| vec![(j, Scalar::one(self.rc.ctx()))]).collect()
    }

    /// Columns `W e_j` for the columns of the determining set, applying letters right to left.
    pub(crate) fn left_multiply(&self, w: &BraidWord, cols: &[SparseVec<Scalar>]) -> Result<Vec<SparseVec<Scalar>>> {
        let mut cols = cols.to_vec();
        for &i in w.letters().iter().rev() {
            self.generator(i as usize)?;
            cols = cols.iter().map(|v| self.apply_letter(i, v)).collect();
        }
        Ok(cols)
    }

    fn modular_gens_t(&self) -> Result<&[SparseMatrix<Fp>]> {
        if let Some(m) = self.gens_mod.get() {
            return Ok(m);
        }
        let img = commutant::modular_image(self.d());
        let m = self.gens_t.iter().map(|g| commutant::to_modular(g, &img)).collect::<Result<Vec<_>>>()?;
        Ok(self.gens_mod.get_or_init(|| m))
    }

    /// [`Centralizer::word_vector`] reduced modulo the prime of the determining set.
    pub fn word_vector_mod(&self, w: &BraidWord) -> Result<SparseVec<Fp>> {
        let det = self.determining_set()?;
        let gt = self.modular_gens_t()?;
        let mut cols: Vec<SparseVec<Fp>> = det.cols.iter().map(|&j| vec![(j, Fp::new(1, det.prime))]).collect();
        for &i in w.letters().iter().rev() {
            self.generator(i as usize)?;
            cols = cols.iter().map(|v| apply(&gt[i as usize - 1], v)).collect();
        }
        Ok(Self::restrict(&det, &cols))
    }

    pub(crate) fn restrict<F: Field>(det: &DeterminingSet, cols: &[SparseVec<F>]) -> SparseVec<F> {
        let mut out = Vec::new();
        for (k, &(slot, row)) in det.slots.iter().enumerate() {
            let col = &cols[slot];
            if let Ok(pos) = col.binary_search_by_key(&row, |e| e.0) {
                out.push((k, col[pos].1.clone()));
            }
        }
        out
    }

    /// Coordinates of a word on the determining set; injective on the commutant.
    pub fn word_vector(&self, w: &BraidWord) -> Result<SparseVec<Scalar>> {
        let det = self.determining_set()?;
        let cols = self.left_multiply(w, &self.unit_columns(&det))?;
        Ok(Self::restrict(&det, &cols))
    }

    /// Dimension of the commutant of `ρ_{n,μ}(Ū)`, exact.
    pub fn commutant_dimension(&self) -> Result<CommutantDimension> {
        if let Some(d) = self.dim.lock().as_ref() {
            return Ok(d.clone());
        }
        let det = self.determining_set()?;
        let bound = det.entries.len();
        let out = if det.unknowns <= EXACT_UNKNOWNS {
            let dim = commutant::exact_nullity(&self.rc, self.n, self.rho_generators()?);
            CommutantDimension { dim, method: "exact_elimination".into(), modular_bound: bound, unknowns: det.unknowns }
        } else {
            let basis = self.basis()?;
            if basis.words.len() == bound {
                CommutantDimension { dim: bound, method: "modular_bound_attained".into(), modular_bound: bound, unknowns: det.unknowns }
            } else {
                let dim = commutant::exact_nullity(&self.rc, self.n, self.rho_generators()?);
                CommutantDimension { dim, method: "exact_elimination".into(), modular_bound: bound, unknowns: det.unknowns }
            }
        };
        *self.dim.lock() = Some(out.clone());
        Ok(out)
    }

    /// The greedy deglex basis, cached.
    pub fn basis(&self) -> Result<Arc<SpanBasis>> {
        if let Some(b) = self.basis.lock().as_ref() {
            return Ok(b.clone());
        }
        let b = Arc::new(enumerate_basis(self)?);
        *self.basis.lock() = Some(b.clone());
        Ok(b)
    }
}

/// `M v` with `M` given by its transpose.
fn apply<F: Field>(mt: &SparseMatrix<F>, v: &SparseVec<F>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (c, x) in v {
        for (r, g) in mt.row(*c) {
            let t = g.mul(x);
            match acc.get_mut(r) {
                Some(s) => *s = s.add(&t),
                None => {
                    acc.insert(*r, t);
                }
            }
        }
    }
    acc.into_iter().filter(|(_, s)| !s.is_zero()).collect()
}

/// `dim End_{ρ_n(Ū)}(V_μ^{⊗n})`.
pub fn commutant_dimension(n: usize, rc: &RepContext) -> Result<usize> {
    Ok(Centralizer::new(rc.d(), rc.mu(), n)?.commutant_dimension()?.dim)
}

#[cfg(test)]
mod tests;
