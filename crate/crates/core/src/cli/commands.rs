//! The subcommands, as functions from parsed arguments to a report plus
//! human-readable text.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde_json::json;

use crate::bider::{
    biderivation_space, check_center_annihilation, check_cyclic_identity, skew_factorization, super_biderivation_space,
    verify_identities, BilinearSolutionSpace, Mode,
};
use crate::cli::format::{format_rational, parse_algebra_file, render_algebra_file};
use crate::cli::registry::Instance;
use crate::cli::report::{CheckRecord, ReportDocument};
use crate::cli::suites::{reference as r, run_suite};
use crate::error::{Error, Result};
use crate::lie::{Parity, Violation};
use crate::rep::{derivation_space, Representation};

/// Loads `--builtin` or `--file`; exactly one must be given.
pub fn load(builtin: Option<&str>, file: Option<&Path>) -> Result<Instance> {
    match (builtin, file) {
        (Some(name), None) => Instance::builtin(name),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
            Ok(Instance::from_file(parse_algebra_file(&text)?))
        }
        _ => Err(Error::InvalidArgument("give exactly one of --builtin and --file".into())),
    }
}

fn describe(inst: &Instance, v: Violation) -> String {
    let l = |i: usize| inst.algebra.label(i).to_string();
    match v {
        Violation::Antisymmetry { i, j, k } => format!("antisymmetry ({}, {}) in {}", l(i), l(j), l(k)),
        Violation::Grading { i, j, k } => format!("grading [{}, {}] has {}", l(i), l(j), l(k)),
        Violation::Jacobi { i, j, k } => format!("Jacobi ({}, {}, {})", l(i), l(j), l(k)),
    }
}

pub fn cmd_validate(inst: &Instance) -> ReportDocument {
    let start = Instant::now();
    let report = inst.algebra.validate();
    let names: Vec<String> = report.violations.iter().map(|v| describe(inst, *v)).collect();
    let mut checks =
        vec![CheckRecord::equal("algebra axioms", "antisymmetry, grading and Jacobi identity", 0, names.len())
            .with_detail(json!({"violations": names, "raw": report.violations}))];
    for (name, rep) in &inst.file_reps {
        let bad = rep.invariant_violations();
        checks.push(
            CheckRecord::equal(format!("representation {name}"), "rho([x,y]) = [rho(x), rho(y)]", 0, bad.len())
                .with_detail(json!({"pairs": bad})),
        );
    }
    ReportDocument::new(format!("validate {}", inst.name), checks, start.elapsed())
}

fn target_labels(inst: &Instance, rep_name: &str, rep: &Representation) -> Vec<String> {
    if rep_name == "adjoint" {
        inst.algebra.labels().to_vec()
    } else {
        (1..=rep.dim()).map(|k| format!("v{k}")).collect()
    }
}

/// Lists `δ(x, y) = Σ c·v` for every basis solution.
pub fn render_basis(space: &BilinearSolutionSpace, target: &[String]) -> String {
    let g = space.algebra();
    let n = g.dim();
    let mut out = String::new();
    for s in 0..space.dim() {
        writeln!(out, "solution {}:", s + 1).unwrap();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<String> = space
                    .value(s, i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| format!("{} {}", format_rational(c), target[k]))
                    .collect();
                if !terms.is_empty() {
                    writeln!(out, "  d({}, {}) = {}", g.label(i), g.label(j), terms.join(" + ")).unwrap();
                }
            }
        }
    }
    out
}

/// Solves one biderivation space and runs the checks that apply to its mode.
/// Graded algebras need a parity and the adjoint target; ungraded ones take no parity.
pub fn cmd_bider(
    inst: &Instance,
    rep_name: &str,
    mode: Mode,
    parity: Option<Parity>,
) -> Result<(ReportDocument, String)> {
    let start = Instant::now();
    let g = &inst.algebra;
    let space = if g.is_graded() {
        let Some(p) = parity else {
            return Err(Error::InvalidArgument("a graded algebra needs --parity even|odd".into()));
        };
        if rep_name != "adjoint" {
            return Err(Error::InvalidArgument("super-biderivations are computed into the adjoint module only".into()));
        }
        match mode {
            Mode::Full => super_biderivation_space(g, p, false)?,
            Mode::SuperSymmetric => super_biderivation_space(g, p, true)?,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "mode {other} needs an ungraded algebra; use full or super-symmetric"
                )))
            }
        }
    } else {
        if parity.is_some() {
            return Err(Error::InvalidArgument("--parity applies to graded algebras only".into()));
        }
        biderivation_space(g, &inst.rep(rep_name)?, mode)?
    };

    let tag = match parity {
        Some(p) => format!("{}/{rep_name}/{mode}/{p}", inst.name),
        None => format!("{}/{rep_name}/{mode}", inst.name),
    };
    let mut checks = vec![
        CheckRecord::info("dimension", "solution space of the biderivation identities", space.dim())
            .with_detail(json!({"unknowns": space.unknowns()})),
        CheckRecord::holds("identities", r::IDENTITIES, verify_identities(&space).is_ok()),
    ];
    let mut notes = String::new();
    match mode {
        Mode::Symmetric => {
            checks.push(CheckRecord::holds("cyclic identity", r::CYCLIC, check_cyclic_identity(&space)?));
            checks.push(CheckRecord::holds("center annihilation", r::CENTER, check_center_annihilation(&space)?));
        }
        Mode::Skew => match skew_factorization(&space) {
            Ok(f) => {
                let residual: usize = f.iter().map(|x| x.residual).sum();
                checks.push(CheckRecord::equal("factorization residual", r::SKEW, 0, residual));
            }
            Err(Error::HypothesesViolated(why)) => {
                writeln!(notes, "skew factorization skipped: {why}").unwrap();
            }
            Err(e) => checks.push(CheckRecord::failed("factorization residual", r::SKEW, 0, e)),
        },
        _ => {}
    }
    let target = target_labels(inst, rep_name, space.target());
    let text = format!("dimension: {}\n{}{}", space.dim(), render_basis(&space, &target), notes);
    Ok((ReportDocument::new(format!("bider {tag}"), checks, start.elapsed()), text))
}

pub fn cmd_der(inst: &Instance, rep_name: &str) -> Result<(ReportDocument, String)> {
    let start = Instant::now();
    let der = derivation_space(&inst.rep(rep_name)?);
    let checks = vec![
        CheckRecord::info("der dim", "derivations g -> V", der.der_dim()),
        CheckRecord::info("inner dim", "inner derivations x -> x.v", der.inner_dim()),
        CheckRecord::info("h1 dim", r::WHITEHEAD, der.h1_dim),
    ];
    let text = format!("der: {}\ninner: {}\nh1: {}\n", der.der_dim(), der.inner_dim(), der.h1_dim);
    Ok((ReportDocument::new(format!("der {}/{rep_name}", inst.name), checks, start.elapsed()), text))
}

pub fn cmd_h1(inst: &Instance, rep_name: &str) -> Result<(ReportDocument, String)> {
    let start = Instant::now();
    let der = derivation_space(&inst.rep(rep_name)?);
    let checks = vec![CheckRecord::info("h1 dim", r::WHITEHEAD, der.h1_dim)];
    Ok((
        ReportDocument::new(format!("h1 {}/{rep_name}", inst.name), checks, start.elapsed()),
        format!("{}\n", der.h1_dim),
    ))
}

pub fn cmd_suite(name: &str, jobs: usize) -> Result<ReportDocument> {
    run_suite(name, jobs)
}

/// The instance in file format, including representations read from a file.
pub fn cmd_export(inst: &Instance) -> String {
    render_algebra_file(&inst.name, &inst.algebra, &inst.file_reps)
}
