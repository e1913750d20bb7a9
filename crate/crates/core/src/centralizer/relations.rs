use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::basis::span_rank;
use super::words::BraidWord;
use super::{braid_generator, Centralizer};
use crate::error::Result;
use crate::linalg::{Echelon, SparseMatrix};
use crate::rep::{MatrixView, RepContext, RepMatrix};
use crate::report::Report;
use crate::scalar::Scalar;

/// `q^{a μ + b}`.
fn qe(rc: &RepContext, a: i64, b: i64) -> Scalar {
    Scalar::q_power(rc.ctx(), a * rc.mu() + b)
}

fn shifted(g: &RepMatrix, c: &Scalar) -> RepMatrix {
    g.add(&SparseMatrix::identity(g.rows(), c))
}

fn product(factors: &[RepMatrix]) -> RepMatrix {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.mul(f);
    }
    acc
}

/// `(g - 1)(g + q^{2μ})(g - q^{4μ+2})`.
fn cubic(rc: &RepContext, g: &RepMatrix) -> RepMatrix {
    let one = Scalar::one(rc.ctx());
    product(&[shifted(g, &-&one), shifted(g, &qe(rc, 2, 0)), shifted(g, &-&qe(rc, 4, 2))])
}

/// The closed form of `g^{-1}`.
fn inverse_formula(rc: &RepContext, g: &RepMatrix) -> RepMatrix {
    let one = Scalar::one(rc.ctx());
    let a = -&qe(rc, -6, -2);
    let b = &(&qe(rc, -2, 0) - &qe(rc, -4, -2)) + &qe(rc, -6, -2);
    let c = &(&one - &qe(rc, -2, 0)) + &qe(rc, -4, -2);
    g.mul(g).scale(&a).add(&g.scale(&b)).add(&SparseMatrix::identity(g.rows(), &c))
}

/// Nullity of a square matrix by exact elimination.
fn nullity(m: &RepMatrix) -> usize {
    let mut e: Echelon<Scalar> = Echelon::new();
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    m.rows() - e.rank()
}

/// The cubic relation, the inverse formula and the spectrum of `g1` on `V ⊗ V`.
pub fn minimal_relation_check(rc: &RepContext) -> Result<Report> {
    let mut report = Report::new();
    let g = braid_generator(2, 1, rc)?;
    let id = rc.identity(2);
    let zero = RepMatrix::zeros(16, 16);
    let label = format!("d = {}, mu = {}", rc.d(), rc.mu());
    report.describe("cubic", format!("(g1-1)(g1+q^(2mu))(g1-q^(4mu+2)) = 0, {label}"));
    report.expect_eq("cubic", || label.clone(), &MatrixView(&cubic(rc, &g)), &MatrixView(&zero));
    let h = inverse_formula(rc, &g);
    report.describe("inverse_formula", format!("g1 times the closed form of g1^-1 is the identity, {label}"));
    report.expect_eq("inverse_formula", || "g1 h".into(), &MatrixView(&g.mul(&h)), &MatrixView(&id));
    report.expect_eq("inverse_formula", || "h g1".into(), &MatrixView(&h.mul(&g)), &MatrixView(&id));
    report.describe("eigenvalues", format!("g1 - lambda is singular for each root of the cubic, {label}"));
    let one = Scalar::one(rc.ctx());
    for lambda in [one, -&qe(rc, 2, 0), qe(rc, 4, 2)] {
        let k = nullity(&shifted(&g, &-&lambda));
        report.expect("eigenvalues", || format!("lambda = {lambda}: nullity {k}"), k > 0);
    }
    Ok(report)
}

/// Braid and far-commutation relations, the cubic and inverse formula for every `g_i`,
/// the intertwiner property and the Yang-Baxter equation on `V^{⊗3}`.
pub fn braid_check(cz: &Centralizer) -> Result<Report> {
    let rc = cz.rep();
    let n = cz.n();
    let mut report = Report::new();
    let label = format!("n = {n}, d = {}, mu = {}", cz.d(), cz.mu());
    let id = cz.identity();
    let zero = RepMatrix::zeros(id.rows(), id.cols());
    report.describe("braid", format!("g_i g_j g_i = g_j g_i g_j for |i-j| = 1, {label}"));
    report.describe("far_commutation", format!("g_i g_j = g_j g_i for |i-j| >= 2, {label}"));
    report.describe("cubic", format!("cubic relation for every g_i, {label}"));
    report.describe("inverse_formula", format!("closed form of g_i^-1, {label}"));
    report.describe("intertwiner", format!("g_i commutes with rho_n of the 8 generators, {label}"));
    for i in 1..n {
        for j in i + 1..n {
            let (a, b) = (cz.generator(i)?, cz.generator(j)?);
            if j == i + 1 {
                let lhs = a.mul(b).mul(a);
                let rhs = b.mul(a).mul(b);
                report.expect_eq("braid", || format!("g{i} g{j} g{i}"), &MatrixView(&lhs), &MatrixView(&rhs));
            } else {
                report.expect_eq("far_commutation", || format!("g{i} g{j}"), &MatrixView(&a.mul(b)), &MatrixView(&b.mul(a)));
            }
        }
    }
    for i in 1..n {
        let g = cz.generator(i)?;
        report.expect_eq("cubic", || format!("g{i}"), &MatrixView(&cubic(rc, g)), &MatrixView(&zero));
        let h = inverse_formula(rc, g);
        report.expect_eq("inverse_formula", || format!("g{i}"), &MatrixView(&g.mul(&h)), &MatrixView(&id));
        for (k, x) in cz.rho_generators()?.iter().enumerate() {
            report.expect_eq(
                "intertwiner",
                || format!("g{i} with generator {k}"),
                &MatrixView(&g.mul(x)),
                &MatrixView(&x.mul(g)),
            );
        }
    }
    let c1 = braid_generator(3, 1, rc)?;
    let c2 = braid_generator(3, 2, rc)?;
    report.describe("yang_baxter", format!("(c⊗1)(1⊗c)(c⊗1) = (1⊗c)(c⊗1)(1⊗c) on V^⊗3, d = {}, mu = {}", cz.d(), cz.mu()));
    report.expect_eq(
        "yang_baxter",
        || "V^⊗3".into(),
        &MatrixView(&c1.mul(&c2).mul(&c1)),
        &MatrixView(&c2.mul(&c1).mul(&c2)),
    );
    Ok(report)
}

type Poly<'a> = Vec<(Scalar, &'a [u8])>;

fn combination(cz: &Centralizer, terms: &Poly) -> Result<RepMatrix> {
    let mut acc = RepMatrix::zeros(cz.dim(), cz.dim());
    for (c, w) in terms {
        acc = acc.add(&cz.word_matrix(&BraidWord::new(w))?.scale(c));
    }
    Ok(acc)
}

/// The generating relations of `L_{3,μ}` and the three auxiliary identities, as
/// `64 × 64` matrix equations.
pub fn l3_relations_check(d: i64, mu: i64) -> Result<Report> {
    let cz = Centralizer::new(d, mu, 3)?;
    let rc = cz.rep();
    let mut report = Report::new();
    let label = format!("d = {d}, mu = {}", cz.mu());
    let g1 = cz.generator(1)?.clone();
    let g2 = cz.generator(2)?.clone();
    let one = Scalar::one(rc.ctx());
    let zero = RepMatrix::zeros(64, 64);
    let s = |g: &RepMatrix, c: Scalar| shifted(g, &c);

    report.describe("braid", format!("g1 g2 g1 = g2 g1 g2, {label}"));
    report.expect_eq("braid", || label.clone(), &MatrixView(&g1.mul(&g2).mul(&g1)), &MatrixView(&g2.mul(&g1).mul(&g2)));
    report.describe("cubic", format!("cubic relation for g1 and g2, {label}"));
    for (i, g) in [(1, &g1), (2, &g2)] {
        report.expect_eq("cubic", || format!("g{i}"), &MatrixView(&cubic(rc, g)), &MatrixView(&zero));
    }

    report.describe("quintic_1", format!("first five-factor relation, {label}"));
    let lhs = product(&[s(&g1, qe(rc, 2, 0)), s(&g2, qe(rc, 4, 0)), s(&g1, -&qe(rc, 4, 2)), g1.clone(), s(&g2, qe(rc, 2, 0))]);
    let rhs = product(&[s(&g1, qe(rc, 2, 0)), s(&g2, -&qe(rc, 4, 2)), g2.clone(), s(&g1, qe(rc, 4, 0)), s(&g2, qe(rc, 2, 0))]);
    report.expect_eq("quintic_1", || label.clone(), &MatrixView(&lhs), &MatrixView(&rhs));

    report.describe("quintic_2", format!("second five-factor relation, {label}"));
    let t = &(&qe(rc, 2, 0) - &qe(rc, 4, 2)) + &qe(rc, 2, 2);
    let lhs = product(&[
        s(&g1, qe(rc, 2, 0)),
        s(&g2, t.clone()),
        s(&g2, -&one),
        s(&g1, qe(rc, 2, 0)),
        s(&g1, qe(rc, -2, 0)),
    ]);
    let rhs = product(&[s(&g1, qe(rc, 2, 0)), s(&g1, qe(rc, -2, 0)), s(&g2, t), s(&g2, -&one), s(&g1, qe(rc, 2, 0))]);
    report.expect_eq("quintic_2", || label.clone(), &MatrixView(&lhs), &MatrixView(&rhs));

    report.describe("auxiliary", format!("g2g1^2g2g1 = g1g2g1^2g2 and the expansions of g2g1^2g2^2, g2^2g1^2g2, {label}"));
    let w = |x: &[u8]| cz.word_matrix(&BraidWord::new(x));
    report.expect_eq("auxiliary", || "g2 g1^2 g2 g1".into(), &MatrixView(&w(&[2, 1, 1, 2, 1])?), &MatrixView(&w(&[1, 2, 1, 1, 2])?));

    let sum = |xs: &[Scalar]| xs.iter().fold(Scalar::zero(rc.ctx()), |a, b| &a + b);
    let aux2: Poly = vec![
        (sum(&[qe(rc, 2, 0), -&qe(rc, 4, 2), qe(rc, 6, 2)]), &[2, 1, 1]),
        (sum(&[qe(rc, 4, 2), -&qe(rc, 2, 0), -&qe(rc, 6, 2)]), &[2, 2, 1]),
        (sum(&[qe(rc, 2, 0), -&qe(rc, 4, 2), -&one]), &[1, 2, 2, 1]),
        (sum(&[qe(rc, 4, 2), -&qe(rc, 2, 0), one.clone()]), &[2, 1, 1, 2]),
        (one.clone(), &[1, 1, 2, 2, 1]),
    ];
    report.expect_eq("auxiliary", || "g2 g1^2 g2^2".into(), &MatrixView(&w(&[2, 1, 1, 2, 2])?), &MatrixView(&combination(&cz, &aux2)?));

    let aux3: Poly = vec![
        (sum(&[qe(rc, 6, 0), -&qe(rc, 4, 0), qe(rc, 6, 2), -&qe(rc, 8, 2)]), &[1, 2]),
        (sum(&[qe(rc, 4, 0), -&qe(rc, 6, 0), -&qe(rc, 6, 2), qe(rc, 8, 2)]), &[2, 1]),
        (qe(rc, 4, 0), &[1, 1, 2]),
        (sum(&[qe(rc, 4, 0), -&qe(rc, 2, 0), qe(rc, 4, 2), -&qe(rc, 6, 2)]), &[1, 2, 2]),
        (sum(&[qe(rc, 2, 0), -&qe(rc, 4, 0), -&qe(rc, 4, 2), qe(rc, 6, 2)]), &[2, 1, 1]),
        (-&qe(rc, 4, 0), &[2, 2, 1]),
        (sum(&[qe(rc, 2, 0), qe(rc, 2, 2), -&qe(rc, 4, 2), -&one]), &[1, 1, 2, 1]),
        (qe(rc, 2, 0), &[1, 1, 2, 2]),
        (sum(&[qe(rc, 4, 2), -&qe(rc, 2, 2), -&qe(rc, 2, 0), one.clone()]), &[1, 2, 1, 1]),
        (sum(&[qe(rc, 2, 0), -&qe(rc, 4, 2), -&one]), &[1, 2, 2, 1]),
        (sum(&[qe(rc, 4, 2), -&qe(rc, 2, 0), one.clone()]), &[2, 1, 1, 2]),
        (-&qe(rc, 2, 0), &[2, 2, 1, 1]),
        (one.clone(), &[1, 1, 2, 2, 1]),
    ];
    report.expect_eq("auxiliary", || "g2^2 g1^2 g2".into(), &MatrixView(&w(&[2, 2, 1, 1, 2])?), &MatrixView(&combination(&cz, &aux3)?));
    Ok(report)
}

fn cross(a: &[BraidWord], mid: &BraidWord, b: &[BraidWord]) -> Vec<BraidWord> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.concat(mid).concat(y));
        }
    }
    out
}

/// `L_n = Σ_{i=0}^{2} L_{n-1} g_{n-1}^i L_{n-1} + L_{n-3} g_{n-1} g_{n-2}^2 g_{n-1}` and the
/// inclusion `L_{n-1} g_{n-1} g_{n-2}^2 g_{n-1} L_{n-1} ⊂` right-hand side, as span equalities.
pub fn decomposition_check(cz: &Centralizer) -> Result<Report> {
    let n = cz.n();
    let mut report = Report::new();
    let label = format!("n = {n}, d = {}, mu = {}", cz.d(), cz.mu());
    if n < 3 {
        report.expect("induction_span", || format!("needs n >= 3, {label}"), false);
        return Ok(report);
    }
    let basis = cz.basis()?;
    let sub = Centralizer::new(cz.d(), cz.mu(), n - 1)?;
    let lower = sub.basis()?.words.clone();
    let far: Vec<BraidWord> = if n <= 4 {
        vec![BraidWord::empty()]
    } else {
        Centralizer::new(cz.d(), cz.mu(), n - 3)?.basis()?.words.clone()
    };
    let t = (n - 1) as u8;
    let special = BraidWord::new(&[t, t - 1, t - 1, t]);

    let mut rhs = Vec::new();
    for i in 0..3 {
        rhs.extend(cross(&lower, &BraidWord(vec![t; i]), &lower));
    }
    rhs.extend(far.iter().map(|a| a.concat(&special)));
    rhs.sort();
    rhs.dedup();

    let dim = cz.commutant_dimension()?;
    let r_basis = span_rank(cz, &basis.words)?;
    let r_rhs = span_rank(cz, &rhs)?;
    let mut union = rhs.clone();
    union.extend(basis.words.iter().cloned());
    let r_union = span_rank(cz, &union)?;
    report.describe(
        "induction_span",
        format!(
            "rank B = {}, rank rhs = {} ({} words), rank union = {}, dim C = {} ({}), {label}",
            r_basis.rank,
            r_rhs.rank,
            rhs.len(),
            r_union.rank,
            dim.dim,
            r_rhs.method
        ),
    );
    report.expect_eq("induction_span", || label.clone(), &r_rhs.rank, &r_basis.rank);
    report.expect_eq("induction_span", || label.clone(), &r_union.rank, &r_basis.rank);

    let lemma = cross(&lower, &special, &lower);
    let mut both = rhs.clone();
    both.extend(lemma.iter().cloned());
    let r_both = span_rank(cz, &both)?;
    report.describe("bimodule_inclusion", format!("{} products added, rank stays {}, {label}", lemma.len(), r_both.rank));
    report.expect_eq("bimodule_inclusion", || label.clone(), &r_both.rank, &r_rhs.rank);

    report.describe("basis_independent", format!("{} words, echelon witness recomputed, {label}", basis.len()));
    report.expect("basis_independent", || label.clone(), basis.verify_witness());
    report.describe("commutant", format!("|B| = dim of the commutant ({}), {label}", dim.method));
    report.expect_eq("commutant", || label.clone(), &basis.len(), &dim.dim);
    Ok(report)
}

/// `span(B_n)` is closed under left and right multiplication by each `g_i`: exhaustive for
/// `n <= 3`, `samples` random basis words otherwise.
pub fn closure_check(cz: &Centralizer, samples: usize, seed: u64) -> Result<Report> {
    let basis = cz.basis()?;
    let mut ech: Echelon<Scalar> = Echelon::new();
    for v in &basis.vectors {
        ech.insert(v);
    }
    let mut words: Vec<&BraidWord> = basis.words.iter().collect();
    if cz.n() > 3 && samples < words.len() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        words.shuffle(&mut rng);
        words.truncate(samples);
        words.sort();
    }
    let mut report = Report::new();
    report.describe(
        "closure",
        format!("b g_i and g_i b lie in span(B) for {} basis words, n = {}, d = {}, mu = {}", words.len(), cz.n(), cz.d(), cz.mu()),
    );
    for w in words {
        for i in 1..cz.n() as u8 {
            let g = BraidWord::new(&[i]);
            for prod in [w.concat(&g), g.concat(w)] {
                let v = cz.word_vector(&prod)?;
                report.expect("closure", || format!("{prod}"), ech.reduce(&v).iter().all(|(_, x)| x.is_zero()));
            }
        }
    }
    Ok(report)
}
