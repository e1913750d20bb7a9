use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::hopf::{sample_basis, Hopf};
use crate::linalg::{self, SparseVec};
use crate::pbw::{AlgebraKind, AlgebraSpec, Element, Gen, Mono};
use crate::report::Report;
use crate::scalar::{q_factorial, Scalar};

/// A functional on `B+`, dense over the basis order of [`Dual::basis`].
pub type Functional = Vec<Scalar>;

/// Slots of the `X` generators inside a monomial.
pub const A_E1: usize = 0;
pub const A_E3: usize = 1;
pub const A_E2: usize = 2;
pub const A_K1: usize = 3;
pub const A_K2: usize = 4;

/// `X = ((B+)^op)^*` realised twice: as the PBW algebra on the `alpha` generators
/// and as functionals on `B+`. The pairing between the two is the matrix whose row
/// for an `alpha`-monomial is its functional; it is block diagonal in the `e`-weight
/// and its block inverse expresses the dual basis in `alpha`-monomials.
pub struct Dual {
    bplus: &'static AlgebraSpec,
    x: &'static AlgebraSpec,
    basis: Vec<Mono>,
    index: FxHashMap<Mono, usize>,
    /// `Δ(b)` as `(b', b'', c)` with the Koszul sign `(-1)^{|b'||b''|}` folded into `c`
    delta: Vec<Vec<(u32, u32, Scalar)>>,
    gens: Vec<Functional>,
    x_basis: Vec<Mono>,
    x_index: FxHashMap<Mono, usize>,
    rows: Vec<SparseVec<Scalar>>,
    dual_basis: Vec<SparseVec<Scalar>>,
}

static DUALS: OnceLock<Mutex<HashMap<i64, &'static Dual>>> = OnceLock::new();

fn weight_x(m: &Mono) -> (i16, i16) {
    (m.0[A_E1] + m.0[A_E3], m.0[A_E2] + m.0[A_E3])
}

fn weight_b(m: &Mono) -> (i16, i16) {
    (m.0[5] + m.0[6], m.0[7] + m.0[6])
}

/// Values of the five generating functionals on one `B+` monomial, with the
/// `e1 e2` part of `alpha_e3` weighted by `e3_mixed`.
fn generator_values(spec: &AlgebraSpec, m: &Mono, e3_mixed: &Scalar) -> [Scalar; 5] {
    let ctx = spec.ctx();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let inv = spec.inv_qq();
    let (v, p) = (m.0[3] as i64, m.0[4] as i64);
    let e = (m.0[5], m.0[6], m.0[7]);
    let zero = Scalar::zero(ctx);
    let mut out = [zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero];
    match e {
        (0, 0, 0) => {
            out[A_K1] = q(-2 * v + p);
            out[A_K2] = q(v);
        }
        (1, 0, 0) => out[A_E1] = -&(inv * &q(2 * v - p)),
        (0, 0, 1) => out[A_E2] = inv * &q(-v),
        (1, 0, 1) => out[A_E3] = &(inv * &q(v - p)) * e3_mixed,
        (0, 1, 0) => out[A_E3] = inv * &q(v - p),
        _ => {}
    }
    out
}

impl Dual {
    pub fn get(d: i64) -> Result<&'static Dual> {
        let registry = DUALS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(x) = registry.lock().expect("dual registry poisoned").get(&d) {
            return Ok(x);
        }
        let ctx = AlgebraSpec::get(AlgebraKind::BPlus, d)?.ctx();
        let built: &'static Dual = Box::leak(Box::new(Dual::build(d, &Scalar::one(ctx))?));
        let mut map = registry.lock().expect("dual registry poisoned");
        Ok(*map.entry(d).or_insert(built))
    }

    /// Build with a nonstandard weight on the `(k1^v k2^p e1 e2)^*` part of `alpha_e3`.
    /// Only the weight one is consistent with the relations of `X`; other values
    /// exist to demonstrate that.
    pub fn with_e3_weight(d: i64, e3_mixed: &Scalar) -> Result<Dual> {
        Dual::build(d, e3_mixed)
    }

    fn build(d: i64, e3_mixed: &Scalar) -> Result<Dual> {
        let bplus = AlgebraSpec::get(AlgebraKind::BPlus, d)?;
        let x = AlgebraSpec::get(AlgebraKind::X, d)?;
        let hopf = Hopf::get(bplus)?;
        let basis = bplus.basis();
        let index: FxHashMap<Mono, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut delta = Vec::with_capacity(basis.len());
        for m in &basis {
            let dm = hopf.coproduct_mono(m)?;
            let mut terms = Vec::with_capacity(dm.len());
            for (k, c) in dm.terms() {
                let c = if k[0].parity() & k[1].parity() == 1 { -c } else { c.clone() };
                terms.push((index[&k[0]] as u32, index[&k[1]] as u32, c));
            }
            delta.push(terms);
        }
        let ctx = bplus.ctx();
        let mut gens = vec![vec![Scalar::zero(ctx); basis.len()]; 5];
        for (i, m) in basis.iter().enumerate() {
            for (g, v) in generator_values(bplus, m, e3_mixed).into_iter().enumerate() {
                gens[g][i] = v;
            }
        }
        let mut dual = Dual {
            bplus,
            x,
            basis,
            index,
            delta,
            gens,
            x_basis: x.basis(),
            x_index: FxHashMap::default(),
            rows: Vec::new(),
            dual_basis: Vec::new(),
        };
        dual.x_index = dual.x_basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        dual.build_rows()?;
        dual.build_dual_basis()?;
        Ok(dual)
    }

    fn build_rows(&mut self) -> Result<()> {
        let ctx = self.bplus.ctx();
        let n = self.basis.len();
        let mut unit = vec![Scalar::zero(ctx); n];
        for (i, m) in self.basis.iter().enumerate() {
            if weight_b(m) == (0, 0) {
                unit[i] = Scalar::one(ctx);
            }
        }
        let mut rows: Vec<SparseVec<Scalar>> = Vec::with_capacity(self.x_basis.len());
        for m in &self.x_basis {
            let row = match m.top_slot() {
                None => sparse(&unit),
                Some(s) => {
                    let mut prev = *m;
                    prev.0[s] -= 1;
                    let prev = dense(&rows[self.x_index[&prev]], n, ctx);
                    sparse(&self.convolve(&prev, &self.gens[s]))
                }
            };
            rows.push(row);
        }
        self.rows = rows;
        Ok(())
    }

    fn build_dual_basis(&mut self) -> Result<()> {
        let mut xb: BTreeMap<(i16, i16), Vec<usize>> = BTreeMap::new();
        let mut bb: BTreeMap<(i16, i16), Vec<usize>> = BTreeMap::new();
        for (i, m) in self.x_basis.iter().enumerate() {
            xb.entry(weight_x(m)).or_default().push(i);
        }
        for (j, m) in self.basis.iter().enumerate() {
            bb.entry(weight_b(m)).or_default().push(j);
        }
        let mut dual_basis = vec![Vec::new(); self.basis.len()];
        for (w, xs) in &xb {
            let bs = bb.get(w).ok_or_else(|| Error::SpecMismatch(format!("no B+ monomials of weight {w:?}")))?;
            let col: FxHashMap<usize, usize> = bs.iter().enumerate().map(|(c, &j)| (j, c)).collect();
            let zero = Scalar::zero(self.bplus.ctx());
            let mut block = vec![vec![zero; bs.len()]; xs.len()];
            for (r, &i) in xs.iter().enumerate() {
                for (j, v) in &self.rows[i] {
                    let c = col.get(j).ok_or_else(|| Error::SpecMismatch("pairing is not weight-homogeneous".into()))?;
                    block[r][*c] = v.clone();
                }
            }
            if xs.len() != bs.len() {
                return Err(Error::SpecMismatch(format!("pairing block {w:?} is not square")));
            }
            let inv = linalg::inverse(&block).ok_or_else(|| Error::SpecMismatch(format!("pairing block {w:?} is singular")))?;
            for (c, &j) in bs.iter().enumerate() {
                dual_basis[j] = xs
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| !inv[c][*r].is_zero())
                    .map(|(r, &i)| (i, inv[c][r].clone()))
                    .collect();
            }
        }
        self.dual_basis = dual_basis;
        Ok(())
    }

    pub fn d(&self) -> i64 {
        self.bplus.d()
    }

    pub fn bplus(&self) -> &'static AlgebraSpec {
        self.bplus
    }

    pub fn x(&self) -> &'static AlgebraSpec {
        self.x
    }

    /// Basis of `B+`, the index set of every [`Functional`].
    pub fn basis(&self) -> &[Mono] {
        &self.basis
    }

    pub fn index_of(&self, m: &Mono) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// The defining functional of the `X` generator in `slot` (see `A_E1` ...).
    pub fn generator(&self, slot: usize) -> &Functional {
        &self.gens[slot]
    }

    /// The counit of `B+`, the unit of `X`.
    pub fn unit(&self) -> Functional {
        dense(&self.rows[self.x_index[&Mono::ONE]], self.basis.len(), self.bplus.ctx())
    }

    /// `(fg)(b) = Σ (-1)^{|g||b'|} f(b') g(b'')`.
    pub fn convolve(&self, f: &[Scalar], g: &[Scalar]) -> Functional {
        let ctx = self.bplus.ctx();
        self.delta
            .iter()
            .map(|terms| {
                let mut acc = Scalar::zero(ctx);
                for (a, b, c) in terms {
                    let (fa, gb) = (&f[*a as usize], &g[*b as usize]);
                    if !fa.is_zero() && !gb.is_zero() {
                        acc += &(&(fa * gb) * c);
                    }
                }
                acc
            })
            .collect()
    }

    /// Expansion of an `alpha`-monomial in the dual basis.
    pub fn row(&self, m: &Mono) -> Result<&SparseVec<Scalar>> {
        let i = self.x_index.get(m).ok_or_else(|| Error::IndexError(format!("{m} is not an X basis monomial")))?;
        Ok(&self.rows[*i])
    }

    /// The functional of an element of `X`.
    pub fn functional(&self, f: &Element) -> Result<Functional> {
        if !f.spec().same(self.x) {
            return Err(Error::SpecMismatch(format!("expected an element of X at d = {}", self.d())));
        }
        let ctx = self.bplus.ctx();
        let mut out = vec![Scalar::zero(ctx); self.basis.len()];
        for (m, c) in f.terms() {
            for (j, v) in self.row(m)? {
                out[*j] += &(c * v);
            }
        }
        Ok(out)
    }

    /// The element of `X` with the given functional.
    pub fn to_x(&self, h: &[Scalar]) -> Element {
        let mut acc: FxHashMap<usize, Scalar> = FxHashMap::default();
        for (j, v) in h.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (i, c) in &self.dual_basis[j] {
                let t = v * c;
                match acc.get_mut(i) {
                    Some(x) => *x += &t,
                    None => {
                        acc.insert(*i, t);
                    }
                }
            }
        }
        Element::from_terms(self.x, acc.into_iter().map(|(i, c)| (self.x_basis[i], c)))
    }

    /// `f(b)`, through the closed-form expansion of each `alpha`-monomial.
    pub fn eval(&self, f: &Element, b: &Element) -> Result<Scalar> {
        if !b.spec().same(self.bplus) || !f.spec().same(self.x) {
            return Err(Error::SpecMismatch(format!("expected X and B+ elements at d = {}", self.d())));
        }
        let ctx = self.bplus.ctx();
        let mut acc = Scalar::zero(ctx);
        for (m, c) in f.terms() {
            let row = mulx_expansion(self.x, m)?;
            for (bm, bc) in b.terms() {
                if let Ok(k) = row.binary_search_by(|(i, _)| i.cmp(bm)) {
                    acc += &(&(c * bc) * &row[k].1);
                }
            }
        }
        Ok(acc)
    }

    /// `f` as a functional, through the closed-form expansion.
    pub fn eval_all(&self, f: &Element) -> Result<Functional> {
        let ctx = self.bplus.ctx();
        let mut out = vec![Scalar::zero(ctx); self.basis.len()];
        for (m, c) in f.terms() {
            for (bm, v) in mulx_expansion(self.x, m)? {
                out[self.index[&bm]] += &(c * &v);
            }
        }
        Ok(out)
    }
}

/// Closed-form expansion of the `alpha`-monomial
/// `alpha_e1^r1 alpha_e3^h1 alpha_e2^t1 alpha_k1^i1 alpha_k2^j1` in the dual basis
/// `(k1^v k2^p e1^r e3^h e2^t)^*` of `B+`.
pub fn mulx_expansion(x: &AlgebraSpec, m: &Mono) -> Result<Vec<(Mono, Scalar)>> {
    if x.kind() != AlgebraKind::X {
        return Err(Error::SpecMismatch("expected a monomial of X".into()));
    }
    let d = x.d();
    let ctx = x.ctx();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let inv = x.inv_qq();
    let inv_pow = |n: i64| inv.pow(n as u64);
    let sign = |n: i64| if n % 2 == 0 { Scalar::one(ctx) } else { -&Scalar::one(ctx) };
    let fact = |n: i64| q_factorial(ctx, n as u32);
    let [r1, h1, t1, i1, j1] = [0, 1, 2, 3, 4].map(|s| m.0[s] as i64);
    let tri = r1 * (r1 - 1) / 2;
    let b = |v: i64, p: i64, r: i64, h: i64, t: i64| Mono([0, 0, 0, v as i16, p as i16, r as i16, h as i16, t as i16]);
    let mut out = Vec::new();
    for v in 0..d {
        for p in 0..d {
            let k = i1 * (p - 2 * v) + j1 * v;
            let base = r1 * (2 * v - p) + tri + k;
            let lead = &sign(r1) * &inv_pow(r1 + h1 + t1);
            match (h1, t1) {
                (0, 0) => out.push((b(v, p, r1, 0, 0), &lead * &(&q(base) * &fact(r1)))),
                (1, 0) => {
                    if r1 + 1 < d {
                        let e = base + r1 + v - p;
                        out.push((b(v, p, r1 + 1, 0, 1), &lead * &(&q(e) * &fact(r1 + 1))));
                    }
                    let e = base + 2 * r1 + v - p;
                    out.push((b(v, p, r1, 1, 0), &lead * &(&q(e) * &fact(r1))));
                }
                (0, 1) => {
                    out.push((b(v, p, r1, 0, 1), &lead * &(&q(base - v) * &fact(r1))));
                    if r1 >= 1 {
                        let c = &(&lead * &(&q(1) - &q(-1))) * &(&q(base - v - 1) * &fact(r1));
                        out.push((b(v, p, r1 - 1, 1, 0), c));
                    }
                }
                _ => out.push((b(v, p, r1, 1, 1), -&(&lead * &(&q(base - p - 2) * &fact(r1))))),
            }
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Evaluation of an element of `X` on an element of `B+`.
pub fn dual_eval(f: &Element, b: &Element) -> Result<Scalar> {
    Dual::get(f.spec().d())?.eval(f, b)
}

fn sparse(v: &[Scalar]) -> SparseVec<Scalar> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn dense(v: &SparseVec<Scalar>, n: usize, ctx: &'static crate::scalar::FieldContext) -> Functional {
    let mut out = vec![Scalar::zero(ctx); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `X`-side PBW products against convolution of functionals: every ordered pair
/// of generators and, for each sampled `alpha`-monomial, its product with every
/// generator; all compared on every `B+` basis monomial.
pub fn dual_consistency_check(d: i64, samples: Option<usize>, seed: u64) -> Result<Report> {
    let dual = Dual::get(d)?;
    let x = dual.x;
    let ctx = x.ctx();
    let mut report = Report::new();
    let n = dual.basis.len();
    let gens: Vec<Element> = (0..5).map(|s| Element::gen(x, Gen::from_slot(s))).collect::<Result<_>>()?;
    let label = |what: &str| format!("{what}, {n} B+ monomials, d = {d}");
    report.describe("generator_pairs", label("25 generator pairs"));
    for a in 0..5 {
        for b in 0..5 {
            let lhs = dual.eval_all(&gens[a].try_mul(&gens[b])?)?;
            let rhs = dual.convolve(&dual.gens[a], &dual.gens[b]);
            compare(&mut report, "generator_pairs", dual, &format!("{} * {}", gens[a], gens[b]), &lhs, &rhs);
        }
    }

    let monos = match samples {
        None => dual.x_basis.clone(),
        Some(k) => sample_basis(x, k, seed),
    };
    report.describe("monomial_times_generator", label(&format!("{} X monomials x 5 generators", monos.len())));
    for m in &monos {
        let f = dense(dual.row(m)?, n, ctx);
        let fm = Element::from_mono(x, *m);
        for (s, g) in gens.iter().enumerate() {
            let lhs = dual.eval_all(&fm.try_mul(g)?)?;
            let rhs = dual.convolve(&f, &dual.gens[s]);
            compare(&mut report, "monomial_times_generator", dual, &format!("{} * {}", x.fmt_mono(m), g), &lhs, &rhs);
        }
    }

    report.describe("closed_form_expansion", label(&format!("{} X monomials", monos.len())));
    for m in &monos {
        let fm = Element::from_mono(x, *m);
        compare(&mut report, "closed_form_expansion", dual, &x.fmt_mono(m), &dual.eval_all(&fm)?, &dense(dual.row(m)?, n, ctx));
    }

    let unit = dual.unit();
    report.describe("counit_is_unit", label("5 generators, both sides"));
    for (s, g) in gens.iter().enumerate() {
        let input = format!("eps * {g}");
        compare(&mut report, "counit_is_unit", dual, &input, &dual.convolve(&unit, &dual.gens[s]), &dual.gens[s]);
        compare(&mut report, "counit_is_unit", dual, &input, &dual.convolve(&dual.gens[s], &unit), &dual.gens[s]);
    }

    report.describe("alpha_k_order", label("alpha_k1^d, alpha_k2^d"));
    for s in [A_K1, A_K2] {
        let mut p = unit.clone();
        for _ in 0..d {
            p = dual.convolve(&p, &dual.gens[s]);
        }
        compare(&mut report, "alpha_k_order", dual, &format!("{}^{d}", gens[s]), &p, &unit);
    }

    report.describe("alpha_e3_relation", label("alpha_e2 alpha_e1 = q alpha_e1 alpha_e2 + alpha_e3"));
    let lhs = dual.convolve(&dual.gens[A_E2], &dual.gens[A_E1]);
    let q = Scalar::q(ctx);
    let rhs: Functional = dual
        .convolve(&dual.gens[A_E1], &dual.gens[A_E2])
        .iter()
        .zip(&dual.gens[A_E3])
        .map(|(a, b)| &(&q * a) + b)
        .collect();
    compare(&mut report, "alpha_e3_relation", dual, "alpha_e2 alpha_e1", &lhs, &rhs);

    report.describe("dual_basis", label("pairing block inverse"));
    for j in 0..n {
        let mut e = vec![Scalar::zero(ctx); n];
        e[j] = Scalar::one(ctx);
        let back = dual.functional(&dual.to_x(&e))?;
        compare(&mut report, "dual_basis", dual, &format!("({})^*", dual.bplus.fmt_mono(&dual.basis[j])), &back, &e);
    }
    Ok(report)
}

fn compare(report: &mut Report, check: &str, dual: &Dual, input: &str, lhs: &[Scalar], rhs: &[Scalar]) {
    for (j, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        report.expect_eq(check, || format!("{input} on {}", dual.bplus.fmt_mono(&dual.basis[j])), a, b);
    }
}
