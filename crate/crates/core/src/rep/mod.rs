//! The typical module `V_μ`, the actions `ρ_{n,μ}` on its tensor powers, and the
//! braiding `c = q^{-2μ²} τ ∘ R̄` on `V_μ ⊗ V_μ`.

mod braiding;
mod io;

use std::sync::Arc;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::hopf::{Hopf, TensorElement};
use crate::linalg::SparseMatrix;
use crate::pbw::{AlgebraSpec, Element, Gen, Mono, Word, SLOT_PARITY};
use crate::scalar::{q_int, FieldContext, Scalar};

pub use braiding::{c_matrix, c_table, check, rbar_on_vv, rbar_table, tau};
pub use io::{from_csv, to_csv, MatrixEntryJson, MatrixJson};

pub type RepMatrix = SparseMatrix<Scalar>;

/// Index of `w_{0,σ,ρ}` in the order `(0,0) < (1,0) < (0,1) < (1,1)`.
pub fn weight_index(sigma: u8, rho: u8) -> usize {
    (sigma + 2 * rho) as usize
}

/// `(σ, ρ)` of a basis index.
pub fn weight_of(i: usize) -> (u8, u8) {
    ((i % 2) as u8, (i / 2) as u8)
}

/// Parity `σ + ρ` of a basis vector.
pub fn vector_parity(i: usize) -> u8 {
    let (s, r) = weight_of(i);
    (s + r) % 2
}

/// Index of a tuple of basis vectors in `V^{⊗n}`, first factor most significant.
pub fn tensor_index(parts: &[usize]) -> usize {
    parts.iter().fold(0, |acc, p| acc * 4 + p)
}

pub fn tensor_digits(mut idx: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % 4;
        idx /= 4;
    }
    out
}

/// `V_μ` at order `d`; `μ` is an integer residue with `[μ][μ+1] != 0`.
pub struct RepContext {
    d: i64,
    mu: i64,
    ubar: &'static AlgebraSpec,
    gens: Vec<RepMatrix>,
    k_inv: [RepMatrix; 2],
    mono_cache: RwLock<FxHashMap<Mono, Arc<RepMatrix>>>,
}

impl RepContext {
    pub fn new(d: i64, mu: i64) -> Result<RepContext> {
        let ubar = AlgebraSpec::ubar(d)?;
        let ctx = ubar.ctx();
        let mu = mu.rem_euclid(d);
        if q_int(ctx, mu).is_zero() || q_int(ctx, mu + 1).is_zero() {
            return Err(Error::InvalidMu { d: d as u32, mu });
        }
        let gens = Gen::ALL.iter().map(|g| generator_matrix(ctx, mu, *g)).collect();
        let k_inv = [
            diagonal(|s, r| Scalar::q_power(ctx, s as i64 - r as i64)),
            diagonal(|s, _| Scalar::q_power(ctx, -mu - s as i64)),
        ];
        Ok(RepContext { d, mu, ubar, gens, k_inv, mono_cache: RwLock::new(FxHashMap::default()) })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn ctx(&self) -> &'static FieldContext {
        self.ubar.ctx()
    }

    pub fn ubar(&self) -> &'static AlgebraSpec {
        self.ubar
    }

    pub fn identity(&self, n: usize) -> RepMatrix {
        RepMatrix::identity(4usize.pow(n as u32), &Scalar::one(self.ctx()))
    }

    /// The 4×4 matrix of a generator.
    pub fn gen_action(&self, g: Gen) -> &RepMatrix {
        &self.gens[g.slot()]
    }

    fn gen_power(&self, g: Gen, n: i64) -> RepMatrix {
        let base = match (g, n < 0) {
            (Gen::K1, true) => &self.k_inv[0],
            (Gen::K2, true) => &self.k_inv[1],
            _ => &self.gens[g.slot()],
        };
        let mut acc = self.identity(1);
        for _ in 0..n.abs() {
            acc = acc.mul(base);
        }
        acc
    }

    /// Matrix of a word in the generators.
    pub fn word_action(&self, w: &Word) -> RepMatrix {
        w.iter().fold(self.identity(1), |acc, (g, n)| acc.mul(&self.gen_power(*g, *n)))
    }

    pub fn mono_action(&self, m: &Mono) -> Arc<RepMatrix> {
        if let Some(hit) = self.mono_cache.read().get(m) {
            return hit.clone();
        }
        let w: Word = (0..8).filter(|&s| m.0[s] != 0).map(|s| (Gen::from_slot(s), m.0[s] as i64)).collect();
        let out = Arc::new(self.word_action(&w));
        self.mono_cache.write().insert(*m, out.clone());
        out
    }

    /// Action of an element of `Ū` on `V_μ`.
    pub fn element_action(&self, x: &Element) -> Result<RepMatrix> {
        self.act_tensor(&TensorElement::from_element(x))
    }

    /// Action of `Σ c m1 ⊗ ... ⊗ mn` on `V^{⊗n}`:
    /// `(m1 ⊗ ... ⊗ mn)(v1 ⊗ ... ⊗ vn) = (-1)^{Σ_k |m_k| Σ_{j<k} |v_j|} m1 v1 ⊗ ... ⊗ mn vn`.
    pub fn act_tensor(&self, t: &TensorElement) -> Result<RepMatrix> {
        if !t.spec().same(self.ubar) {
            return Err(Error::SpecMismatch(format!("expected a tensor over Ū at d = {}", self.d)));
        }
        let n = t.arity();
        let dim = 4usize.pow(n as u32);
        let mut triplets = Vec::new();
        for (key, c) in t.terms() {
            let cols: Vec<Vec<Vec<(usize, Scalar)>>> = key
                .iter()
                .map(|m| {
                    let mat = self.mono_action(m);
                    let mut cols = vec![Vec::new(); 4];
                    for (i, j, v) in mat.entries() {
                        cols[j].push((i, v.clone()));
                    }
                    cols
                })
                .collect();
            let par: Vec<u8> = key.iter().map(|m| m.parity()).collect();
            for col in 0..dim {
                let digits = tensor_digits(col, n);
                let mut odd = 0u32;
                let mut seen = 0u32;
                for k in 0..n {
                    odd += par[k] as u32 * seen;
                    seen += vector_parity(digits[k]) as u32;
                }
                let start = if odd % 2 == 1 { -c } else { c.clone() };
                let mut partial: Vec<(usize, Scalar)> = vec![(0, start)];
                for k in 0..n {
                    let column = &cols[k][digits[k]];
                    let mut next = Vec::with_capacity(partial.len() * column.len());
                    for (r, v) in &partial {
                        for (i, w) in column {
                            next.push((r * 4 + i, v * w));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                triplets.extend(partial.into_iter().map(|(r, v)| (r, col, v)));
            }
        }
        Ok(RepMatrix::from_triplets(dim, dim, triplets))
    }

    /// `ρ_{n,μ}(x)`, the action of `Δ^{(n-1)}(x)` on `V^{⊗n}`.
    pub fn rho_n(&self, x: &Element, n: usize) -> Result<RepMatrix> {
        if n == 0 {
            return Err(Error::IndexError("rho_n needs n >= 1".into()));
        }
        let hopf = Hopf::get(self.ubar)?;
        self.act_tensor(&hopf.iterated_coproduct(x, n)?)
    }
}

fn diagonal(f: impl Fn(u8, u8) -> Scalar) -> RepMatrix {
    RepMatrix::from_triplets(
        4,
        4,
        (0..4).map(|i| {
            let (s, r) = weight_of(i);
            (i, i, f(s, r))
        }),
    )
}

fn generator_matrix(ctx: &'static FieldContext, mu: i64, g: Gen) -> RepMatrix {
    let q = |n: i64| Scalar::q_power(ctx, n);
    let one = Scalar::one(ctx);
    let w = weight_index;
    let mut t: Vec<(usize, usize, Scalar)> = Vec::new();
    for s in 0..2u8 {
        for r in 0..2u8 {
            let (si, ri) = (s as i64, r as i64);
            let col = w(s, r);
            match g {
                Gen::K1 => t.push((col, col, q(ri - si))),
                Gen::K2 => t.push((col, col, q(mu + si))),
                Gen::F1 if s == 0 && r == 1 => t.push((w(1, 0), col, -&q(-1))),
                Gen::F2 if r == 0 => t.push((w(s, 1), col, one.clone())),
                Gen::F3 if s == 0 => {
                    let sign = if r == 1 { -&one } else { one.clone() };
                    t.push((w(1, r), col, &sign * &q(-ri)));
                }
                Gen::E1 if s == 1 && r == 0 => t.push((w(0, 1), col, -&q(1))),
                Gen::E2 if r == 1 => t.push((w(s, 0), col, q_int(ctx, mu + si))),
                Gen::E3 if s == 1 => {
                    let sign = if r == 1 { -&one } else { one.clone() };
                    t.push((w(0, r), col, &(&sign * &q(ri)) * &q_int(ctx, mu + ri)));
                }
                _ => {}
            }
        }
    }
    debug_assert!(t.iter().all(|(i, j, _)| (vector_parity(*i) + vector_parity(*j)) % 2 == SLOT_PARITY[g.slot()]));
    RepMatrix::from_triplets(4, 4, t)
}

/// Display adaptor so matrices can be compared through [`Report`].
pub(crate) struct MatrixView<'a>(pub &'a RepMatrix);

impl PartialEq for MatrixView<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl std::fmt::Display for MatrixView<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.entries().take(32).map(|(i, j, v)| format!("[{i},{j}]={v}")).collect();
        let more = if self.0.nnz() > 32 { format!(" ... ({} nonzero)", self.0.nnz()) } else { String::new() };
        write!(f, "{}{more}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests;
