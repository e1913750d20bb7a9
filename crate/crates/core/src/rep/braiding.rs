use super::{tensor_index, vector_parity, weight_index as w, MatrixView, RepContext, RepMatrix};
use crate::double::r_multiplicative;
use crate::error::Result;
use crate::hopf::Hopf;
use crate::pbw::{defining_relations, Element, Gen};
use crate::report::Report;
use crate::scalar::{q_int, Scalar};

/// Image of `R̄` on `V ⊗ V`.
pub fn rbar_on_vv(rc: &RepContext) -> Result<RepMatrix> {
    rc.act_tensor(r_multiplicative(rc.d())?.tensor())
}

/// The graded flip `v ⊗ w ↦ (-1)^{|v||w|} w ⊗ v`.
pub fn tau(rc: &RepContext) -> RepMatrix {
    let one = Scalar::one(rc.ctx());
    RepMatrix::from_triplets(
        16,
        16,
        (0..4).flat_map(|a| {
            let one = one.clone();
            (0..4).map(move |b| {
                let c = if vector_parity(a) & vector_parity(b) == 1 { -&one } else { one.clone() };
                (tensor_index(&[b, a]), tensor_index(&[a, b]), c)
            })
        }),
    )
}

/// `c = q^{-2μ²} τ ∘ R̄`.
pub fn c_matrix(rc: &RepContext) -> Result<RepMatrix> {
    Ok(tau(rc).mul(&rbar_on_vv(rc)?).scale(&Scalar::q_power(rc.ctx(), -2 * rc.mu() * rc.mu())))
}

fn pair(a: (u8, u8), b: (u8, u8)) -> usize {
    tensor_index(&[w(a.0, a.1), w(b.0, b.1)])
}

/// The sixteen listed values `c(w_a ⊗ w_b)`, as a matrix.
pub fn c_table(rc: &RepContext) -> RepMatrix {
    let ctx = rc.ctx();
    let m = rc.mu();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let qq = &q(1) - &q(-1);
    let br = |n: i64| q_int(ctx, n);
    let one = Scalar::one(ctx);
    let (o, a, b, t) = ((0, 0), (1, 0), (0, 1), (1, 1));
    let mut e: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut put = |input: ((u8, u8), (u8, u8)), pre: Scalar, out: Vec<(((u8, u8), (u8, u8)), Scalar)>| {
        for ((x, y), c) in out {
            e.push((pair(x, y), pair(input.0, input.1), &pre * &c));
        }
    };
    put((o, o), one.clone(), vec![((o, o), one.clone())]);
    put((a, o), q(m), vec![((o, a), one.clone()), ((a, o), -&(&qq * &br(m)))]);
    put((b, o), q(m), vec![((o, b), one.clone()), ((b, o), -&(&qq * &br(m)))]);
    put(
        (t, o),
        q(2 * m),
        vec![
            ((o, t), one.clone()),
            ((t, o), &(&q(1) * &qq.square()) * &(&br(m + 1) * &br(m))),
            ((b, a), -&(&qq * &br(m + 1))),
            ((a, b), &(&q(1) * &qq) * &br(m + 1)),
        ],
    );
    put((o, a), q(m), vec![((a, o), one.clone())]);
    put((a, a), -&q(2 * m), vec![((a, a), one.clone())]);
    put((b, a), q(2 * m + 1), vec![((a, b), -&one), ((t, o), -&(&qq * &br(m)))]);
    put((t, a), q(3 * m + 1), vec![((a, t), one.clone()), ((t, a), &qq * &br(m + 1))]);
    put((o, b), q(m), vec![((b, o), one.clone())]);
    put(
        (a, b),
        q(2 * m + 1),
        vec![((b, a), -&one), ((t, o), &(&q(1) * &qq) * &br(m)), ((a, b), qq.clone())],
    );
    put((b, b), -&q(2 * m), vec![((b, b), one.clone())]);
    put((t, b), q(3 * m + 1), vec![((b, t), one.clone()), ((t, b), &qq * &br(m + 1))]);
    put((o, t), q(2 * m), vec![((t, o), one.clone())]);
    put((a, t), q(3 * m + 1), vec![((t, a), one.clone())]);
    put((b, t), q(3 * m + 1), vec![((t, b), one.clone())]);
    put((t, t), q(4 * m + 2), vec![((t, t), one)]);
    RepMatrix::from_triplets(16, 16, e)
}

/// The closed form of `R̄` on `w_{0,σ1,ρ1} ⊗ w_{0,σ2,ρ2}`.
pub fn rbar_table(rc: &RepContext) -> RepMatrix {
    let ctx = rc.ctx();
    let m = rc.mu();
    let q = |n: i64| Scalar::q_power(ctx, n);
    let qq = &q(1) - &q(-1);
    let br = |n: i64| q_int(ctx, n);
    let one = Scalar::one(ctx);
    let sign = |n: i64| if n % 2 == 0 { one.clone() } else { -&one };
    let mut e = Vec::new();
    for (s1, r1) in [(0u8, 0u8), (1, 0), (0, 1), (1, 1)] {
        for (s2, r2) in [(0u8, 0u8), (1, 0), (0, 1), (1, 1)] {
            let (s1i, r1i, s2i, r2i) = (s1 as i64, r1 as i64, s2 as i64, r2 as i64);
            let col = pair((s1, r1), (s2, r2));
            let pre = q(2 * m * m + s1i * (r2i + m) + r1i * (s2i + m) + m * (s2i + r2i));
            let mut out = vec![(col, one.clone())];
            if (s1, r1, s2, r2) == (1, 1, 0, 0) {
                out.push((pair((0, 0), (1, 1)), &(&q(1) * &qq.square()) * &(&br(m + 1) * &br(m))));
            }
            if (s1, r1, s2, r2) == (1, 0, 0, 1) {
                out.push((pair((0, 1), (1, 0)), -&qq));
                out.push((pair((0, 0), (1, 1)), &qq.square() * &br(m)));
            }
            if r1 == 1 && r2 == 0 {
                out.push((pair((s1, 0), (s2, 1)), &(&sign(s1i + 1) * &qq) * &br(m + s1i)));
            }
            if s1 == 1 && s2 == 0 {
                let c = &(&sign(1 + r2i) * &qq) * &(&q(r1i - r2i) * &br(m + r1i));
                out.push((pair((0, r1), (1, r2)), c));
            }
            e.extend(out.into_iter().map(|(row, c)| (row, col, &pre * &c)));
        }
    }
    RepMatrix::from_triplets(16, 16, e)
}

/// Module relations, the listed action table, the braiding table and the
/// intertwiner property for one `(d, μ)`.
pub fn check(d: i64, mu: i64) -> Result<Report> {
    let rc = RepContext::new(d, mu)?;
    let ctx = rc.ctx();
    let u = rc.ubar();
    let mut report = Report::new();
    let label = |what: &str| format!("{what}, d = {d}, mu = {}", rc.mu());
    let zero4 = RepMatrix::zeros(4, 4);

    report.describe("relations", label("defining relations as 4x4 identities"));
    report.describe("central_elements", label("k1^d - 1, k2^d - 1, e1^d, f1^d act as zero"));
    for r in defining_relations(ctx) {
        let mut acc = RepMatrix::zeros(4, 4);
        for (c, word) in &r.terms {
            acc = acc.add(&rc.word_action(word).scale(c));
        }
        let name = if r.name.contains("^d") { "central_elements" } else { "relations" };
        report.expect_eq(name, || r.name.to_string(), &MatrixView(&acc), &MatrixView(&zero4));
    }

    report.describe("composite_actions", label("f3 f2 and e3 e2 on V"));
    let f3f2 = rc.gen_action(Gen::F3).mul(rc.gen_action(Gen::F2));
    let e3e2 = rc.gen_action(Gen::E3).mul(rc.gen_action(Gen::E2));
    let want_f = RepMatrix::from_triplets(4, 4, [(w(1, 1), w(0, 0), -&Scalar::q_power(ctx, -1))]);
    let want_e = RepMatrix::from_triplets(4, 4, [(w(0, 0), w(1, 1), &q_int(ctx, rc.mu() + 1) * &q_int(ctx, rc.mu()))]);
    report.expect_eq("composite_actions", || "f3 f2".into(), &MatrixView(&f3f2), &MatrixView(&want_f));
    report.expect_eq("composite_actions", || "e3 e2".into(), &MatrixView(&e3e2), &MatrixView(&want_e));

    report.describe("parity", label("odd generators flip the parity sigma + rho"));
    for g in Gen::ALL {
        let ok = rc.gen_action(g).entries().all(|(i, j, _)| (vector_parity(i) + vector_parity(j)) % 2 == g.parity());
        report.expect("parity", || g.name().to_string(), ok);
    }

    let rbar = rbar_on_vv(&rc)?;
    report.describe("rbar_image", label("R̄ on V ⊗ V against its closed form"));
    report.expect_eq("rbar_image", || "R̄".into(), &MatrixView(&rbar), &MatrixView(&rbar_table(&rc)));

    let c = tau(&rc).mul(&rbar).scale(&Scalar::q_power(ctx, -2 * rc.mu() * rc.mu()));
    let table = c_table(&rc);
    report.describe("c_equations", label("16 listed values of c"));
    for col in 0..16 {
        let got: Vec<(usize, Scalar)> = c.transpose().row(col).clone();
        let want: Vec<(usize, Scalar)> = table.transpose().row(col).clone();
        report.expect_eq("c_equations", || format!("c on basis tensor {col}"), &RowView(&got), &RowView(&want));
    }

    report.describe("intertwiner", label("c ρ2(g) = ρ2(g) c for 8 generators"));
    let hopf = Hopf::get(u)?;
    let gens: Vec<Element> = Gen::ALL.iter().map(|g| Element::gen(u, *g)).collect::<Result<_>>()?;
    let rho2: Vec<RepMatrix> = gens.iter().map(|g| rc.act_tensor(&hopf.coproduct(g)?)).collect::<Result<_>>()?;
    for (g, r) in gens.iter().zip(&rho2) {
        report.expect_eq("intertwiner", || g.to_string(), &MatrixView(&c.mul(r)), &MatrixView(&r.mul(&c)));
    }

    report.describe("rho_morphism", label("ρ2(xy) = ρ2(x) ρ2(y) on generator pairs"));
    for (x, rx) in gens.iter().zip(&rho2) {
        for (y, ry) in gens.iter().zip(&rho2) {
            let lhs = rc.rho_n(&x.try_mul(y)?, 2)?;
            report.expect_eq("rho_morphism", || format!("{x} * {y}"), &MatrixView(&lhs), &MatrixView(&rx.mul(ry)));
        }
    }
    Ok(report)
}

struct RowView<'a>(&'a [(usize, Scalar)]);

impl PartialEq for RowView<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl std::fmt::Display for RowView<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(i, v)| format!("{v} e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
