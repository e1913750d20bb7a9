use std::path::Path;
use std::process::ExitCode;

use serde_json::{json, Map, Value};
use superq::centralizer::{
    braid_check, cap_n, closure_check, decomposition_check, l3_relations_check, minimal_relation_check, Centralizer,
};
use superq::double::{double_check, dual_consistency_check, r_coefficient, r_multiplicative, verify_quasitriangular};
use superq::hopf;
use superq::rep::{self, c_matrix, c_table, MatrixJson, RepContext};
use superq::report::Report;
use superq::{AlgebraKind, Error, Result};

use crate::output::{write_or_print, Envelope};
use crate::{
    Algebra, BraidAction, CentralizerAction, Command, Common, Form, HopfAction, MatrixFormat, RepAction, RepArgs,
    RmatrixAction, TensorArgs, VerifyOnly,
};

const DEFAULT_SAMPLES: usize = 500;

fn params(common: &Common, extra: &[(&str, Value)]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("d".into(), json!(common.d));
    m.insert("seed".into(), json!(common.seed));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m
}

/// Exhaustive at `d = 3`, sampled above.
fn default_samples(d: i64, samples: Option<usize>) -> Option<usize> {
    samples.or(if d == 3 { None } else { Some(DEFAULT_SAMPLES) })
}

fn finish(out: Option<&Path>, env: Envelope) -> Result<ExitCode> {
    write_or_print(out, &env.to_json())?;
    if !env.pass {
        if let Some(c) = env.checks.iter().find(|c| !c.pass) {
            eprintln!("check `{}` failed on {}", c.check, c.input);
        }
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Hopf { action: HopfAction::Verify { common, algebra, samples } } => {
            let kind = match algebra {
                Algebra::Ubar => AlgebraKind::Ubar,
                Algebra::Bplus => AlgebraKind::BPlus,
                Algebra::Bminus => AlgebraKind::BMinus,
                Algebra::X => AlgebraKind::X,
            };
            let samples = default_samples(common.d, samples);
            let report = hopf::verify(kind, common.d, samples, common.seed)?;
            let p = params(&common, &[("algebra", json!(kind.name())), ("samples", json!(samples))]);
            finish(common.out.as_deref(), Envelope::new("hopf verify", p, report, None))
        }
        Command::Dual { action: VerifyOnly::Verify { common, samples } } => {
            let samples = default_samples(common.d, samples);
            let report = dual_consistency_check(common.d, samples, common.seed)?;
            let p = params(&common, &[("samples", json!(samples))]);
            finish(common.out.as_deref(), Envelope::new("dual verify", p, report, None))
        }
        Command::Double { action: VerifyOnly::Verify { common, .. } } => {
            let report = double_check(common.d)?;
            finish(common.out.as_deref(), Envelope::new("double verify", params(&common, &[]), report, None))
        }
        Command::Rmatrix { action: Some(RmatrixAction::Verify { common, full, enable_abstract_ybe }), .. } => {
            let full = full || common.d == 3 || enable_abstract_ybe;
            let report = verify_quasitriangular(common.d, full, enable_abstract_ybe)?;
            let p = params(&common, &[("full", json!(full)), ("ybe", json!(enable_abstract_ybe))]);
            finish(common.out.as_deref(), Envelope::new("rmatrix verify", p, report, None))
        }
        Command::Rmatrix { action: None, export } => {
            let (Some(d), Some(form)) = (export.d, export.form) else {
                return Err(Error::Parse("rmatrix needs --d and --form, or the `verify` subcommand".into()));
            };
            let r = match form {
                Form::Mult => r_multiplicative(d)?,
                Form::Coeff => r_coefficient(d)?,
            };
            let mut report = Report::new();
            report.describe("even", format!("{} terms, d = {d}", r.tensor().len()));
            report.expect("even", || "R".into(), r.tensor().is_even());
            let mut p = Map::new();
            p.insert("d".into(), json!(d));
            p.insert("form".into(), json!(r.form().name()));
            let artifact = serde_json::to_value(r.to_json()).expect("R-matrix is serializable");
            export_artifact("rmatrix", p, report, artifact, export.out.as_deref())
        }
        Command::Rep { action } => rep_command(action),
        Command::Braid { action: BraidAction::Verify { args } } => {
            let cz = centralizer(&args)?;
            let mut report = braid_check(&cz)?;
            report.merge(minimal_relation_check(cz.rep())?);
            finish(args.rep.common.out.as_deref(), Envelope::new("braid verify", tensor_params(&args), report, None))
        }
        Command::Centralizer { action } => centralizer_command(action),
    }
}

fn export_artifact(command: &str, p: Map<String, Value>, report: Report, artifact: Value, out: Option<&Path>) -> Result<ExitCode> {
    match out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&artifact).expect("artifact is serializable") + "\n";
            write_or_print(Some(path), &text)?;
            let note = json!({ "path": path.display().to_string() });
            finish(None, Envelope::new(command, p, report, Some(note)))
        }
        None => finish(None, Envelope::new(command, p, report, Some(artifact))),
    }
}

fn rep_params(args: &RepArgs) -> Map<String, Value> {
    params(&args.common, &[("mu", json!(args.mu))])
}

fn rep_command(action: RepAction) -> Result<ExitCode> {
    match action {
        RepAction::Check { args } => {
            let report = rep::check(args.common.d, args.mu)?;
            finish(args.common.out.as_deref(), Envelope::new("rep check", rep_params(&args), report, None))
        }
        RepAction::CMatrix { args, format } => {
            let rc = RepContext::new(args.common.d, args.mu)?;
            let c = c_matrix(&rc)?;
            let mut report = Report::new();
            report.describe("c_equations", format!("16 x 16 against the closed form, d = {}, mu = {}", rc.d(), rc.mu()));
            report.expect("c_equations", || "c".into(), c == c_table(&rc));
            let out = args.common.out.as_deref();
            let csv = match (format, out) {
                (Some(f), _) => f == MatrixFormat::Csv,
                (None, Some(p)) => p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")),
                (None, None) => false,
            };
            let mut p = rep_params(&args);
            p.insert("format".into(), json!(if csv { "csv" } else { "json" }));
            match (out, csv) {
                (Some(path), true) => {
                    write_or_print(Some(path), &rep::to_csv(&c))?;
                    let note = json!({ "path": path.display().to_string() });
                    finish(None, Envelope::new("rep c-matrix", p, report, Some(note)))
                }
                (None, true) => {
                    print!("{}", rep::to_csv(&c));
                    Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
                }
                (_, false) => {
                    let artifact = serde_json::to_value(MatrixJson::from_matrix(&c)).expect("matrix is serializable");
                    export_artifact("rep c-matrix", p, report, artifact, out)
                }
            }
        }
    }
}

fn tensor_params(args: &TensorArgs) -> Map<String, Value> {
    let mut p = rep_params(&args.rep);
    p.insert("n".into(), json!(args.n));
    p
}

fn centralizer(args: &TensorArgs) -> Result<Centralizer> {
    Centralizer::with_cap(args.rep.common.d, args.rep.mu, args.n, cap_n(args.enable_n5))
}

fn centralizer_command(action: CentralizerAction) -> Result<ExitCode> {
    match action {
        CentralizerAction::Basis { args } => {
            let cz = centralizer(&args)?;
            let basis = cz.basis()?;
            let dim = cz.commutant_dimension()?;
            let mut report = Report::new();
            report.describe("basis_independent", format!("{} words, {} tested", basis.len(), basis.tested));
            report.expect("basis_independent", || "echelon witness".into(), basis.verify_witness());
            report.describe("commutant", format!("dim of the commutant = {} ({})", dim.dim, dim.method));
            report.expect_eq("commutant", || format!("|B| vs dim, stop = {:?}", basis.stop), &basis.len(), &dim.dim);
            let artifact = serde_json::to_value(basis.to_json()).expect("basis is serializable");
            finish(args.rep.common.out.as_deref(), Envelope::new("centralizer basis", tensor_params(&args), report, Some(artifact)))
        }
        CentralizerAction::Relations { args } => {
            let cz = centralizer(&args)?;
            let mut report = braid_check(&cz)?;
            report.merge(minimal_relation_check(cz.rep())?);
            if args.n >= 3 {
                let l3 = l3_relations_check(cz.d(), args.rep.mu)?;
                let mut renamed = Report::new();
                for mut c in l3.checks {
                    c.check = format!("l3_{}", c.check);
                    renamed.checks.push(c);
                }
                report.merge(renamed);
            }
            finish(args.rep.common.out.as_deref(), Envelope::new("centralizer relations", tensor_params(&args), report, None))
        }
        CentralizerAction::Decomposition { args, samples } => {
            let cz = centralizer(&args)?;
            let mut report = decomposition_check(&cz)?;
            report.merge(closure_check(&cz, samples, args.rep.common.seed)?);
            let mut p = tensor_params(&args);
            p.insert("samples".into(), json!(samples));
            finish(args.rep.common.out.as_deref(), Envelope::new("centralizer decomposition", p, report, None))
        }
        CentralizerAction::Commutant { args } => {
            let cz = centralizer(&args)?;
            let dim = cz.commutant_dimension()?;
            let basis = cz.basis()?;
            let mut report = Report::new();
            report.describe("commutant", format!("dim = {} ({}), |B| = {}", dim.dim, dim.method, basis.len()));
            report.expect_eq("commutant", || "dim vs |B|".into(), &dim.dim, &basis.len());
            let artifact = json!({ "dim": dim, "basis_size": basis.len() });
            finish(args.rep.common.out.as_deref(), Envelope::new("centralizer commutant", tensor_params(&args), report, Some(artifact)))
        }
    }
}
