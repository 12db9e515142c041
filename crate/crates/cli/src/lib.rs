//! Command-line front end for `serre-core`.
//!
//! [`run`] parses arguments, computes one command and returns the rendered
//! output with an exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | input error |
//! | 2 | cross-check failure |
//! | 3 | degree-class budget exceeded |

pub mod cache;
pub mod output;
pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serre_core::decompose::{assoc_primes, classify_components, irreducible_decomposition};
use serre_core::powers::{power_table, stabilization_report};
use serre_core::skeleton::{skeleton_ideal, verify_skeleton_theorem};
use serre_core::verify::verify_ideal;
use serre_core::{
    cohomology::strata_length, Analyzer, Check, Error, Exponent, FieldSpec, MonomialIdeal, PrimeFace, SerreMode,
    StabilizationReport,
};

use cache::{Cache, Request};
use output::{
    Analysis, CheckRecord, Decomposition, Format, Indexed, Output, Piece, PowerRecord, Powers, Profile, SerreVerdict,
    SkeletonDepthRecord, SkeletonEntry, Skeletons, Verification,
};
use parse::{format_ideal, parse_ideal, parse_vars};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "serre",
    version,
    about = "Serre depths and related invariants of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Comma-separated variable names; defaults to x1, ..., xn.
    #[arg(long, global = true)]
    pub vars: Option<String>,
    /// Generators, e.g. "x^2, x*y".
    #[arg(long, global = true)]
    pub ideal: Option<String>,
    /// Characteristic of the coefficient field: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    /// Worker threads for the degree-class sweep (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Ceiling on the number of degree classes per profile.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached JSON results.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, depth, Serre depths, associated primes and (S_r) verdicts.
    Analyze {
        /// Report (S_r) for this r only.
        #[arg(long)]
        r: Option<usize>,
        /// Report (S_r) for r = 1, ..., rmax (default max(1, dim)).
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// Dimension of one graded piece of the dual of a local cohomology module.
    Piece {
        /// Degree, comma-separated; negative entries allowed.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Cohomological degree.
        #[arg(long)]
        j: usize,
    },
    /// Dual dimensions of all local cohomology modules with witness classes.
    Profile,
    /// Skeleton ideals and the skeleton characterization of Serre depth.
    Skeletons {
        /// Grading vector, at least the bounding multidegree (the default).
        #[arg(long)]
        g: Option<String>,
        /// List only this skeleton.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Depth strata of the powers I^k and a stabilization verdict.
    Powers {
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        /// Trailing rows that must agree for a stable verdict.
        #[arg(long, default_value_t = serre_core::powers::DEFAULT_WINDOW)]
        window: usize,
    },
    /// Irreducible decomposition and component classification.
    Decompose,
    /// Every cross-check on the given ideal.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Piece { .. } => "piece",
            Command::Profile => "profile",
            Command::Skeletons { .. } => "skeletons",
            Command::Powers { .. } => "powers",
            Command::Decompose => "decompose",
            Command::Verify => "verify",
        }
    }

    /// Parameters that affect the result, in a fixed order.
    fn params(&self) -> Vec<(&'static str, String)> {
        let opt = |v: &Option<usize>| v.map_or_else(String::new, |v| v.to_string());
        match self {
            Command::Analyze { r, rmax } => vec![("r", opt(r)), ("rmax", opt(rmax))],
            Command::Piece { a, j } => vec![("a", a.replace(' ', "")), ("j", j.to_string())],
            Command::Skeletons { g, i } => {
                vec![("g", g.as_deref().unwrap_or("").replace(' ', "")), ("i", opt(i))]
            }
            Command::Powers { kmax, window } => vec![("kmax", kmax.to_string()), ("window", window.to_string())],
            Command::Profile | Command::Decompose | Command::Verify => Vec::new(),
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Context {
    vars: Vec<String>,
    gens: Vec<String>,
    ideal: MonomialIdeal,
    analyzer: Analyzer,
    char: u32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut stderr = String::new();
    match execute(&cli, &mut stderr) {
        Ok(output) => {
            let stdout = match output.render(cli.common.format) {
                Ok(text) => text,
                Err(message) => {
                    stderr.push_str(&format!("error: {message}\n"));
                    return Outcome {
                        code: EXIT_INPUT,
                        stdout: String::new(),
                        stderr,
                    };
                }
            };
            let failures = output.failed_checks();
            for check in &failures {
                stderr.push_str(&format!("cross-check failed: {}: {}\n", check.name, check.witness));
            }
            Outcome {
                code: if failures.is_empty() { EXIT_OK } else { EXIT_CHECK },
                stdout,
                stderr,
            }
        }
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Budget(m) => (EXIT_BUDGET, m),
            };
            stderr.push_str(&format!("error: {message}\n"));
            Outcome {
                code,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn execute(cli: &Cli, stderr: &mut String) -> Result<Output, Failure> {
    let common = &cli.common;
    let text = common
        .ideal
        .as_deref()
        .ok_or_else(|| Failure::Input("--ideal is required".into()))?;
    let declared = common
        .vars
        .as_deref()
        .map(parse_vars)
        .transpose()
        .map_err(|e| Failure::Input(format!("--vars {e}")))?;
    let parsed = parse_ideal(text, declared.as_deref()).map_err(|e| Failure::Input(format!("--ideal {e}")))?;
    for warning in &parsed.warnings {
        stderr.push_str(&format!("warning: {warning}\n"));
    }
    let field = FieldSpec::new(common.characteristic)?;
    let ctx = Context {
        gens: format_ideal(&parsed.vars, &parsed.ideal),
        vars: parsed.vars,
        ideal: parsed.ideal,
        analyzer: Analyzer::new(field).with_budget(common.budget),
        char: field.characteristic(),
    };

    let request = Request {
        command: cli.command.name(),
        vars: ctx.vars.clone(),
        gens: ctx.gens.clone(),
        char: ctx.char,
        params: cli.command.params(),
    };
    let cache = match &common.cache {
        Some(dir) => Some(Cache::open(dir).map_err(|e| Failure::Input(format!("--cache {}: {e}", dir.display())))?),
        None => None,
    };
    if let Some(hit) = cache.as_ref().and_then(|c| c.load(&request)) {
        return Ok(hit);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Input(format!("--jobs: {e}")))?;
    let output = pool.install(|| compute(&cli.command, &ctx))?;

    if let Some(cache) = &cache {
        if let Err(e) = cache.store(&request, &output) {
            stderr.push_str(&format!("warning: cache write failed: {e}\n"));
        }
    }
    Ok(output)
}

fn names(vars: &[String], set: impl IntoIterator<Item = usize>) -> Vec<String> {
    set.into_iter().map(|i| vars[i].clone()).collect()
}

fn prime_names(vars: &[String], primes: &[PrimeFace]) -> Vec<Vec<String>> {
    primes
        .iter()
        .map(|p| names(vars, p.variables(vars.len()).iter()))
        .collect()
}

fn parse_vector(flag: &str, text: &str, n: usize) -> Result<Exponent, Failure> {
    let entries: Vec<i32> = text
        .split(',')
        .map(|s| s.trim().parse::<i32>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Input(format!("--{flag} '{text}': {e}")))?;
    if entries.len() != n {
        return Err(Failure::Input(format!(
            "--{flag} has {} entries, expected {n}",
            entries.len()
        )));
    }
    Ok(Exponent::new(entries))
}

fn records(checks: Vec<Check>) -> Vec<CheckRecord> {
    checks
        .into_iter()
        .map(|c| CheckRecord {
            name: c.name,
            passed: c.passed,
            witness: c.witness,
        })
        .collect()
}

fn compute(command: &Command, ctx: &Context) -> Result<Output, Failure> {
    let an = &ctx.analyzer;
    let ideal = &ctx.ideal;
    let vars = &ctx.vars;
    let n = ideal.n();
    match command {
        Command::Analyze { r, rmax } => {
            let profile = an.profile(ideal)?;
            let dim = ideal.dim_quotient().finite().ok_or(Error::NotProper)?;
            let classification = classify_components(ideal)?;
            let rs: Vec<usize> = match (r, rmax) {
                (Some(r), _) => vec![*r],
                (None, Some(m)) => (1..=*m).collect(),
                (None, None) => (1..=strata_length(ideal)).collect(),
            };
            let mut serre = Vec::with_capacity(rs.len());
            for r in rs {
                let theorem = an.is_serre_condition(ideal, r, SerreMode::Theorem)?;
                let literal_s1 = if r == 1 {
                    an.is_serre_condition(ideal, 1, SerreMode::LiteralS1)?
                } else {
                    theorem
                };
                serre.push((r, SerreVerdict { theorem, literal_s1 }));
            }
            Ok(Output::Analysis(Analysis {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                char: ctx.char,
                dim,
                depth: profile.depth().expect("nonzero module"),
                strata: an.depth_strata_point(ideal)?,
                dual_dims: Indexed(profile.dual_dims().iter().map(|d| d.finite()).enumerate().collect()),
                ass: prime_names(vars, &assoc_primes(ideal)?),
                unmixed: classification.unmixed,
                equidimensional: classification.equidimensional,
                serre: Indexed(serre),
            }))
        }
        Command::Piece { a, j } => {
            let degree = parse_vector("a", a, n)?;
            let dim = an.dual_piece_dim(ideal, &degree, *j)?;
            Ok(Output::Piece(Piece {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                char: ctx.char,
                a: degree.into_entries(),
                j: *j,
                dim,
            }))
        }
        Command::Profile => {
            let profile = an.profile(ideal)?;
            Ok(Output::Profile(Profile {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                char: ctx.char,
                classes: ideal.degree_class_count(),
                dual_dims: Indexed(profile.dual_dims().iter().map(|d| d.finite()).enumerate().collect()),
                witnesses: Indexed(
                    (0..=n)
                        .map(|j| (j, profile.witness(j).map(|c| c.to_string())))
                        .collect(),
                ),
                depth: profile.depth().expect("nonzero module"),
                strata: an.depth_strata_point(ideal)?,
            }))
        }
        Command::Skeletons { g, i } => {
            let grading = match g {
                Some(text) => parse_vector("g", text, n)?,
                None => ideal.bounding_multidegree(),
            };
            let report = verify_skeleton_theorem(an, ideal, &grading)?;
            let dim = ideal.dim_quotient().finite().ok_or(Error::NotProper)?;
            let indices: Vec<usize> = match i {
                Some(i) => vec![*i],
                None => (0..=dim).collect(),
            };
            let mut skeletons = Vec::with_capacity(indices.len());
            for i in indices {
                let sigma = skeleton_ideal(ideal, &grading, i)?;
                skeletons.push(SkeletonEntry {
                    i,
                    gens: format_ideal(vars, &sigma),
                    dim: sigma.dim_quotient().finite(),
                });
            }
            let serre_depths = report
                .direct
                .iter()
                .zip(&report.via_skeletons)
                .enumerate()
                .map(|(k, (&direct, via))| SkeletonDepthRecord {
                    r: k + 1,
                    direct,
                    via_skeletons: via.value,
                    passes: via.passes.clone(),
                    vacuous: via.vacuous.clone(),
                })
                .collect();
            Ok(Output::Skeletons(Skeletons {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                char: ctx.char,
                g: grading.into_entries(),
                skeletons,
                serre_depths,
                s1_divergences: report.s1_divergences.clone(),
                passed: report.passed(),
                checks: records(report.checks.checks),
            }))
        }
        Command::Powers { kmax, window } => {
            let table = power_table(an, ideal, *kmax)?;
            let verdict = stabilization_report(&table, *window)?;
            Ok(Output::Powers(Powers {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                char: ctx.char,
                rows: table
                    .rows
                    .into_iter()
                    .map(|r| PowerRecord {
                        k: r.k,
                        dim: r.dim,
                        depth: r.depth,
                        strata: r.strata,
                    })
                    .collect(),
                stable: verdict.stable,
                onset: verdict.onset,
                window: verdict.window,
                note: StabilizationReport::NOTE.to_string(),
            }))
        }
        Command::Decompose => {
            let components = irreducible_decomposition(ideal)?;
            let classification = classify_components(ideal)?;
            Ok(Output::Decomposition(Decomposition {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                components: components.iter().map(|c| format_ideal(vars, c)).collect(),
                ass: prime_names(vars, &assoc_primes(ideal)?),
                min_primes: prime_names(vars, &classification.min_primes),
                unmixed: classification.unmixed,
                equidimensional: classification.equidimensional,
                has_embedded: classification.has_embedded,
            }))
        }
        Command::Verify => {
            let report = verify_ideal(an, ideal)?;
            Ok(Output::Verification(Verification {
                vars: vars.clone(),
                gens: ctx.gens.clone(),
                char: ctx.char,
                passed: report.passed(),
                checks: records(report.checks),
            }))
        }
    }
}
