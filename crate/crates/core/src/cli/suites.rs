//! Named batches of checks. Jobs run on a bounded thread pool; records come
//! out in the order the suite lists them.

use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use crate::bider::{
    biderivation_space, bracket_as_bilinear, check_center_annihilation, check_centralizer_conditions,
    check_cyclic_identity, check_mode, check_odd_centralizer_conditions, check_sl2_restriction, skew_factorization,
    super_biderivation_space, verify_identities, BilinearSolutionSpace, Mode,
};
use crate::cli::registry::Instance;
use crate::cli::report::{CheckRecord, ReportDocument};
use crate::error::{Error, Result};
use crate::lie::{Parity, Subspace};
use crate::linalg::{in_span, unit_vec};
use crate::oracle::{brute_force_biderivation_space, ORACLE_LIMIT};
use crate::rep::{adjoint, derivation_space, module_hom_space};

pub const SUITES: &[&str] = &["whitehead", "theorem31", "skew", "applications", "super", "oracle", "properties", "all"];

pub mod reference {
    pub const WHITEHEAD: &str = "derivations of a semisimple Lie algebra into a finite-dimensional module are inner";
    pub const SYMMETRIC_SIMPLE: &str =
        "symmetric biderivations of a simple Lie algebra into a finite-dimensional module vanish";
    pub const SCHUR: &str = "module endomorphisms of a simple algebra's adjoint module are scalars";
    pub const SKEW: &str =
        "skew biderivations of a perfect algebra into a module without invariants factor through the bracket";
    pub const REDUCTIVE: &str = "symmetric biderivations of sl2 + Cc are multiples of (c, c) -> c";
    pub const CENTRALIZER: &str =
        "symmetric biderivations vanish if g is faithful over a semisimple g0, or perfect with Z_g(g0) = Z(g)";
    pub const SUPER: &str = "super-symmetric super-biderivations of sl(m|n), m != n, vanish";
    pub const INNER_SUPER: &str = "the bracket is an even super-biderivation";
    pub const IDENTITIES: &str = "every solution satisfies both biderivation identities";
    pub const MODE: &str = "every solution satisfies its symmetry and parity constraints";
    pub const SPLIT: &str = "a bilinear map is the sum of its symmetric and skew parts";
    pub const CYCLIC: &str = "symmetric biderivations satisfy d(x,[y,z]) + d(y,[z,x]) + d(z,[x,y]) = 0";
    pub const CENTER: &str = "symmetric biderivations vanish on [g,g] x Z(g)";
    pub const SL2: &str = "symmetric biderivations vanish on every sl2-triple";
    pub const ORACLE: &str = "dense brute-force solver agrees with the sparse solver";
}

use reference as r;

type Job = Box<dyn Fn() -> Result<Vec<CheckRecord>> + Send + Sync>;

struct Named {
    label: String,
    run: Job,
}

fn job(label: impl Into<String>, run: impl Fn() -> Result<Vec<CheckRecord>> + Send + Sync + 'static) -> Named {
    Named { label: label.into(), run: Box::new(run) }
}

fn solve(builtin: &str, rep: &str, mode: Mode) -> Result<(Instance, BilinearSolutionSpace)> {
    let inst = Instance::builtin(builtin)?;
    let v = inst.rep(rep)?;
    let space = biderivation_space(&inst.algebra, &v, mode)?;
    Ok((inst, space))
}

fn whitehead() -> Vec<Named> {
    let mut cases: Vec<(&str, String)> = (0..=6).map(|m| ("sl2", format!("irrep:{m}"))).collect();
    cases.push(("sl3", "adjoint".into()));
    cases.push(("sp4", "adjoint".into()));
    cases
        .into_iter()
        .map(|(g, v)| {
            job(format!("h1({g}, {v})"), move || {
                let inst = Instance::builtin(g)?;
                let der = derivation_space(&inst.rep(&v)?);
                Ok(vec![CheckRecord::equal(format!("h1({g}, {v})"), r::WHITEHEAD, 0, der.h1_dim)
                    .with_detail(json!({"der": der.der_dim(), "inner": der.inner_dim()}))])
            })
        })
        .collect()
}

fn theorem31() -> Vec<Named> {
    let mut cases: Vec<(&str, String)> = vec![("sl2", "adjoint".into())];
    cases.extend((1..=4).map(|m| ("sl2", format!("irrep:{m}"))));
    cases.push(("sl3", "adjoint".into()));
    cases.push(("sp4", "adjoint".into()));
    cases
        .into_iter()
        .map(|(g, v)| {
            job(format!("symmetric({g}, {v})"), move || {
                let (_, s) = solve(g, &v, Mode::Symmetric)?;
                Ok(vec![CheckRecord::equal(format!("symmetric dim ({g}, {v})"), r::SYMMETRIC_SIMPLE, 0, s.dim())
                    .with_detail(json!({"unknowns": s.unknowns()}))])
            })
        })
        .collect()
}

fn skew() -> Vec<Named> {
    ["sl2", "sl3"]
        .into_iter()
        .map(|g| {
            job(format!("skew({g}, adjoint)"), move || {
                let (inst, s) = solve(g, "adjoint", Mode::Skew)?;
                let ad = adjoint(&inst.algebra);
                let hom = module_hom_space(&ad, &ad)?.len();
                let mut out = vec![
                    CheckRecord::equal(format!("hom dim ({g}, adjoint)"), r::SCHUR, 1, hom),
                    CheckRecord::equal(format!("skew dim ({g}, adjoint)"), r::SKEW, hom, s.dim()),
                ];
                out.push(match skew_factorization(&s) {
                    Ok(f) => {
                        let residual: usize = f.iter().map(|x| x.residual).sum();
                        CheckRecord::equal(format!("factorization residual ({g}, adjoint)"), r::SKEW, 0, residual)
                            .with_detail(json!({"factored": f.len()}))
                    }
                    Err(e) => CheckRecord::failed(format!("factorization residual ({g}, adjoint)"), r::SKEW, 0, e),
                });
                Ok(out)
            })
        })
        .collect()
}

fn applications() -> Vec<Named> {
    vec![
        job("reductive-sl2", || {
            let (inst, s) = solve("reductive-sl2", "adjoint", Mode::Symmetric)?;
            let g = &inst.algebra;
            let c = g.index_of("c").expect("central element is labelled c");
            let n = g.dim();
            let supported =
                s.basis().iter().all(|b| b.iter().enumerate().all(|(u, x)| x.is_zero() || u == s.index(c, c, c)));
            let nonzero = s.dim() == 1 && !s.value(0, c, c)[c].is_zero();
            Ok(vec![
                CheckRecord::equal("symmetric dim (reductive-sl2, adjoint)", r::REDUCTIVE, 1, s.dim()),
                CheckRecord::holds("support is (c, c) -> span(c)", r::REDUCTIVE, supported && nonzero)
                    .with_detail(json!({"center": g.center() == Subspace::span(n, &[unit_vec(n, c)])})),
            ])
        }),
        job("takiff:sl2", || {
            let (inst, s) = solve("takiff:sl2", "adjoint", Mode::Symmetric)?;
            let cond = check_centralizer_conditions(&inst.algebra, &Subspace::coordinate_range(6, 0..3))?;
            Ok(vec![
                CheckRecord::equal("symmetric dim (takiff:sl2, adjoint)", r::CENTRALIZER, 0, s.dim()),
                CheckRecord::holds("takiff:sl2 faithful over sl2", r::CENTRALIZER, cond.faithful)
                    .with_detail(serde_json::to_value(cond).expect("serializes")),
            ])
        }),
        job("oscillator:1", || {
            let (inst, s) = solve("oscillator:1", "adjoint", Mode::Symmetric)?;
            let g = &inst.algebra;
            let n = g.dim();
            let cond = check_centralizer_conditions(g, &Subspace::coordinate_range(n, 0..3))?;
            let z = g.index_of("z").expect("central element is labelled z");
            let center_is_z = g.center() == Subspace::span(n, &[unit_vec(n, z)]);
            Ok(vec![
                CheckRecord::equal("symmetric dim (oscillator:1, adjoint)", r::CENTRALIZER, 0, s.dim()),
                CheckRecord::holds("oscillator:1 perfect", r::CENTRALIZER, cond.perfect),
                CheckRecord::holds("oscillator:1 Z_g(sp2) = Z(g)", r::CENTRALIZER, cond.centralizer_is_center)
                    .with_detail(serde_json::to_value(cond).expect("serializes")),
                CheckRecord::holds("oscillator:1 Z(g) = span(z)", r::CENTRALIZER, center_is_z),
            ])
        }),
    ]
}

fn super_suite() -> Vec<Named> {
    let mut jobs: Vec<Named> = [Parity::Even, Parity::Odd]
        .into_iter()
        .map(|p| {
            job(format!("super-symmetric({p})"), move || {
                let g = Instance::builtin("sl21")?.algebra;
                let s = super_biderivation_space(&g, p, true)?;
                Ok(vec![CheckRecord::equal(format!("super-symmetric dim (sl21, {p})"), r::SUPER, 0, s.dim())
                    .with_detail(json!({"unknowns": s.unknowns()}))])
            })
        })
        .collect();
    jobs.push(job("super inner family", || {
        let g = Instance::builtin("sl21")?.algebra;
        let s = super_biderivation_space(&g, Parity::Even, false)?;
        let inner = in_span(&bracket_as_bilinear(&g), s.basis())?;
        let cond = check_odd_centralizer_conditions(&g, &g.even_derived_subalgebra())?;
        Ok(vec![
            CheckRecord::holds("bracket in even super-biderivations (sl21)", r::INNER_SUPER, inner)
                .with_detail(json!({"dim": s.dim()})),
            CheckRecord::holds("sl21 perfect", r::SUPER, cond.perfect),
            CheckRecord::holds(
                "sl21 odd centralizer of [g0, g0] has dim <= 1",
                r::SUPER,
                cond.odd_centralizer_at_most_one,
            )
            .with_detail(serde_json::to_value(cond).expect("serializes")),
        ])
    }));
    jobs
}

/// Instances with at most [`ORACLE_LIMIT`] unknowns compared against the dense solver.
pub const ORACLE_CASES: &[(&str, &str, Mode)] = &[
    ("sl2", "adjoint", Mode::Full),
    ("sl2", "adjoint", Mode::Symmetric),
    ("sl2", "adjoint", Mode::Skew),
    ("sl2", "natural", Mode::Full),
    ("sl2", "irrep:2", Mode::Symmetric),
    ("sl2", "irrep:3", Mode::Skew),
    ("sl2", "irrep:4", Mode::Symmetric),
    ("heisenberg:1", "adjoint", Mode::Full),
    ("heisenberg:1", "adjoint", Mode::Symmetric),
    ("heisenberg:1", "adjoint", Mode::Skew),
    ("heisenberg:1", "trivial", Mode::Full),
    ("abelian:1", "trivial", Mode::Full),
    ("abelian:2", "adjoint", Mode::Full),
    ("abelian:2", "trivial:2", Mode::Full),
    ("abelian:2", "trivial:2", Mode::Symmetric),
    ("abelian:2", "trivial:2", Mode::Skew),
    ("abelian:3", "trivial", Mode::Symmetric),
    ("reductive-sl2", "adjoint", Mode::Full),
    ("reductive-sl2", "adjoint", Mode::Symmetric),
];

fn oracle() -> Vec<Named> {
    let mut jobs: Vec<Named> = ORACLE_CASES
        .iter()
        .map(|&(g, v, mode)| {
            job(format!("oracle({g}, {v}, {mode})"), move || {
                let (inst, main) = solve(g, v, mode)?;
                let brute = brute_force_biderivation_space(&inst.algebra, main.target(), mode)?;
                let spans = brute.basis().iter().all(|b| in_span(b, main.basis()).unwrap_or(false))
                    && main.basis().iter().all(|b| in_span(b, brute.basis()).unwrap_or(false));
                let tag = format!("({g}, {v}, {mode})");
                Ok(vec![
                    CheckRecord::equal(format!("oracle dim {tag}"), r::ORACLE, brute.dim(), main.dim())
                        .with_detail(json!({"unknowns": main.unknowns()})),
                    CheckRecord::holds(format!("oracle mutual span {tag}"), r::ORACLE, spans),
                ])
            })
        })
        .collect();
    jobs.push(job("oracle size guard", || {
        let inst = Instance::builtin("sl3")?;
        let err = brute_force_biderivation_space(&inst.algebra, &adjoint(&inst.algebra), Mode::Full).err();
        let expected = Error::SizeGuard { unknowns: 512, limit: ORACLE_LIMIT };
        Ok(vec![CheckRecord::holds("oracle refuses sl3 adjoint (512 unknowns)", r::ORACLE, err == Some(expected))])
    }));
    jobs
}

/// Every instance solved by the other suites, in every applicable mode.
pub const PROPERTY_CASES: &[(&str, &str)] = &[
    ("sl2", "adjoint"),
    ("sl2", "irrep:1"),
    ("sl2", "irrep:2"),
    ("sl2", "irrep:3"),
    ("sl2", "irrep:4"),
    ("sl3", "adjoint"),
    ("sp4", "adjoint"),
    ("reductive-sl2", "adjoint"),
    ("takiff:sl2", "adjoint"),
    ("oscillator:1", "adjoint"),
];

/// Identity, constraint and structural checks on one solved space.
pub fn space_properties(tag: &str, s: &BilinearSolutionSpace) -> Vec<CheckRecord> {
    let mut out = vec![
        match verify_identities(s) {
            Ok(()) => CheckRecord::holds(format!("identities {tag}"), r::IDENTITIES, true),
            Err(v) => CheckRecord::holds(format!("identities {tag}"), r::IDENTITIES, false)
                .with_detail(serde_json::to_value(v).expect("serializes")),
        },
        CheckRecord::holds(format!("mode constraint {tag}"), r::MODE, check_mode(s)),
    ];
    if s.mode() == Mode::Symmetric {
        let triples = s.algebra().basis_sl2_triples();
        let checks = [
            ("cyclic identity", r::CYCLIC, check_cyclic_identity(s)),
            ("center annihilation", r::CENTER, check_center_annihilation(s)),
            ("sl2-triple restriction", r::SL2, check_sl2_restriction(s, &triples)),
        ];
        for (name, reference, result) in checks {
            out.push(match result {
                Ok(ok) => CheckRecord::holds(format!("{name} {tag}"), reference, ok),
                Err(e) => CheckRecord::failed(format!("{name} {tag}"), reference, true, e),
            });
        }
        out.last_mut().expect("just pushed").detail = json!({"triples": triples.len()});
    }
    out
}

fn properties() -> Vec<Named> {
    let mut jobs: Vec<Named> = PROPERTY_CASES
        .iter()
        .map(|&(g, v)| {
            job(format!("properties({g}, {v})"), move || {
                let inst = Instance::builtin(g)?;
                let rep = inst.rep(v)?;
                let mut out = Vec::new();
                let mut dims = Vec::new();
                for mode in [Mode::Full, Mode::Symmetric, Mode::Skew] {
                    let s = biderivation_space(&inst.algebra, &rep, mode)?;
                    out.extend(space_properties(&format!("({g}, {v}, {mode})"), &s));
                    dims.push(s.dim());
                }
                out.push(CheckRecord::equal(
                    format!("full = symmetric + skew ({g}, {v})"),
                    r::SPLIT,
                    dims[0],
                    dims[1] + dims[2],
                ));
                Ok(out)
            })
        })
        .collect();
    jobs.push(job("properties(sl21)", || {
        let g = Instance::builtin("sl21")?.algebra;
        let mut out = Vec::new();
        for p in [Parity::Even, Parity::Odd] {
            for sym in [true, false] {
                let s = super_biderivation_space(&g, p, sym)?;
                out.extend(space_properties(&format!("(sl21, {}, {p})", s.mode()), &s));
            }
        }
        Ok(out)
    }));
    jobs
}

fn suite_jobs(name: &str) -> Result<Vec<Named>> {
    Ok(match name {
        "whitehead" => whitehead(),
        "theorem31" => theorem31(),
        "skew" => skew(),
        "applications" => applications(),
        "super" => super_suite(),
        "oracle" => oracle(),
        "properties" => properties(),
        "all" => {
            let mut all = Vec::new();
            for s in &SUITES[..SUITES.len() - 1] {
                all.extend(suite_jobs(s)?);
            }
            all
        }
        other => return Err(Error::Unknown { kind: "suite", name: other.into() }),
    })
}

/// Runs a suite on at most `jobs` threads (`0` picks the machine default).
pub fn run_suite(name: &str, jobs: usize) -> Result<ReportDocument> {
    let named = suite_jobs(name)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start thread pool: {e}")))?;
    let start = Instant::now();
    let records: Vec<Vec<CheckRecord>> = pool.install(|| {
        named
            .par_iter()
            .map(|j| (j.run)().unwrap_or_else(|e| vec![CheckRecord::failed(j.label.clone(), "-", "completion", e)]))
            .collect()
    });
    Ok(ReportDocument::new(format!("suite {name}"), records.concat(), start.elapsed()))
}
