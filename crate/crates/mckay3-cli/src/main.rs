//! Command-line workbench over the `mckay3` library: exact Cartan-type data,
//! eta tables, the verification chain, intersection predictions, and the
//! numerical stability/moment-map side.
//!
//! Reports go to stdout, diagnostics to stderr.  Exit status 0 means success
//! (an instability certificate is a successful answer), 1 means a verification
//! or solver failure with the witness printed, 2 means a usage error.

mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mckay3::correspondence::{predicted_intersection_matrix, verify_chain};
use mckay3::eta::eta_table;
use mckay3::group::{GroupAction, parse_rational};
use mckay3::kempf_ness::{SolveOutcome, SolverConfig, kempf_ness_solve};
use mckay3::mckay::cartan_matrices;
use mckay3::quiver::{
    Arrow, FixedPointCandidates, Genericity, StabilityParam, enumerate_fixed_points,
    invariant_subsets, is_theta_semistable, is_theta_stable, random_constellation,
    relation_residual,
};
use mckay3::{CorrespondenceError, EtaError, GroupError, KempfNessError, MckayError, QuiverError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(
    name = "mckay3",
    version,
    about = "Workbench for cyclic SL(3,C) orbifold invariants and quiver moduli"
)]
struct Cli {
    /// Report format written to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cartan-type matrices, the exact inverse, and the determinant.
    Cartan {
        /// Group literal like "1/7(1,2,4)".
        group: String,
    },
    /// Print the eta-invariant table, indexed by character difference.
    Eta {
        /// Group literal like "1/7(1,2,4)".
        group: String,
    },
    /// Run the full verification chain; any failing check exits with status 1.
    Verify {
        /// Group literal like "1/7(1,2,4)".
        group: String,
    },
    /// Print the predicted intersection matrix with its pairing interpretation.
    Intersection {
        /// Group literal like "1/7(1,2,4)".
        group: String,
    },
    /// Draw a random relation-satisfying representation and report its stability.
    Stability {
        /// Group literal like "1/7(1,2,4)".
        group: String,
        /// Stability parameter: comma-separated rationals summing to zero.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Seed for the random draw.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Arrows to zero out, as "tail:flavor" pairs, e.g. "0:2,3:1".
        #[arg(long)]
        zero: Option<String>,
    },
    /// Flow one orbit to the moment-map level set or certify instability.
    Solve {
        /// Group literal like "1/7(1,2,4)".
        group: String,
        /// Stability parameter: comma-separated rationals summing to zero.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Seed for the random draw.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Arrows to zero out, as "tail:flavor" pairs, e.g. "0:2,3:1".
        #[arg(long)]
        zero: Option<String>,
        /// Convergence tolerance on the moment-map residual.
        #[arg(long, default_value_t = SolverConfig::default().tol)]
        tol: f64,
        /// Iteration budget before giving up.
        #[arg(long, default_value_t = SolverConfig::default().max_iter)]
        max_iter: usize,
    },
    /// Enumerate the isolated torus-fixed points for a generic theta.
    FixedPoints {
        /// Group literal like "1/7(1,2,4)".
        group: String,
        /// Stability parameter: comma-separated rationals summing to zero.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Sample random stability parameters and classify the chambers they hit.
    Chambers {
        /// Group literal like "1/7(1,2,4)".
        group: String,
        /// Number of random parameters to draw.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Base seed; sample i is drawn from seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

/// Everything needed to replay one invocation; round-trips through JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct RunConfig {
    group: String,
    command: String,
    theta: Option<String>,
    seed: Option<u64>,
    zero: Option<String>,
    format: String,
    tol: Option<f64>,
    max_iter: Option<usize>,
    samples: Option<usize>,
}

impl RunConfig {
    fn new(command: &str, group: &str, format: Format) -> RunConfig {
        RunConfig {
            group: group.to_string(),
            command: command.to_string(),
            theta: None,
            seed: None,
            zero: None,
            format: format.name().to_string(),
            tol: None,
            max_iter: None,
            samples: None,
        }
    }
}

/// A failed run: usage errors exit 2, verification/solver failures exit 1.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<QuiverError> for Failure {
    fn from(e: QuiverError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<MckayError> for Failure {
    fn from(e: MckayError) -> Failure {
        Failure::Verification(e.to_string())
    }
}

impl From<EtaError> for Failure {
    fn from(e: EtaError) -> Failure {
        Failure::Verification(e.to_string())
    }
}

impl From<CorrespondenceError> for Failure {
    fn from(e: CorrespondenceError) -> Failure {
        Failure::Verification(e.to_string())
    }
}

impl From<KempfNessError> for Failure {
    fn from(e: KempfNessError) -> Failure {
        match e {
            KempfNessError::Quiver(q) => q.into(),
            other => Failure::Verification(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Verification(format!("cannot serialize report: {e}"))
    }
}

fn main() -> ExitCode {
    // Die silently on a closed pipe (`mckay3 ... | head`) like other unix
    // filters instead of panicking mid-report.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Cartan { group } => cmd_cartan(group, format),
        Command::Eta { group } => cmd_eta(group, format),
        Command::Verify { group } => cmd_verify(group, format),
        Command::Intersection { group } => cmd_intersection(group, format),
        Command::Stability {
            group,
            theta,
            seed,
            zero,
        } => cmd_stability(group, theta, *seed, zero.as_deref(), format),
        Command::Solve {
            group,
            theta,
            seed,
            zero,
            tol,
            max_iter,
        } => cmd_solve(
            group,
            theta,
            *seed,
            zero.as_deref(),
            *tol,
            *max_iter,
            format,
        ),
        Command::FixedPoints { group, theta } => cmd_fixed_points(group, theta, format),
        Command::Chambers {
            group,
            samples,
            seed,
        } => cmd_chambers(group, *samples, *seed, format),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn matrix_csv_rows<T: std::fmt::Display>(name: &str, m: &[Vec<T>]) {
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            println!("{name},{i},{j},{v}");
        }
    }
}

fn rational_strings(m: &[Vec<mckay3::Rational>]) -> Vec<Vec<String>> {
    m.iter()
        .map(|row| row.iter().map(|q| q.to_string()).collect())
        .collect()
}

#[derive(Serialize)]
struct CartanReport {
    group: String,
    full: Vec<Vec<i64>>,
    reduced: Vec<Vec<i64>>,
    inverse: Vec<Vec<String>>,
    determinant: String,
}

fn cmd_cartan(group: &str, format: Format) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let m = cartan_matrices(&g)?;
    let report = CartanReport {
        group: g.to_string(),
        full: m.full.clone(),
        reduced: m.reduced.clone(),
        inverse: rational_strings(&m.inverse),
        determinant: m.determinant.to_string(),
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("matrix,row,col,value");
            matrix_csv_rows("full", &report.full);
            matrix_csv_rows("reduced", &report.reduced);
            matrix_csv_rows("inverse", &report.inverse);
            println!("determinant,,,{}", report.determinant);
        }
        Format::Text => {
            let r = g.order();
            println!("group {}", report.group);
            println!("full ({r} x {r}):");
            println!("{}", render::matrix_text(&report.full));
            println!("reduced ({} x {}):", r - 1, r - 1);
            println!("{}", render::matrix_text(&report.reduced));
            println!("inverse of reduced (exact):");
            println!("{}", render::matrix_text(&report.inverse));
            println!("determinant: {}", report.determinant);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EtaReport {
    group: String,
    eta_by_difference: Vec<String>,
}

fn cmd_eta(group: &str, format: Format) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let table = eta_table(&g)?;
    let report = EtaReport {
        group: g.to_string(),
        eta_by_difference: table
            .by_difference()
            .iter()
            .map(|q| q.to_string())
            .collect(),
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("difference,eta");
            for (d, v) in report.eta_by_difference.iter().enumerate() {
                println!("{d},{v}");
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            println!(
                "eta(rho, sigma) depends only on d = rho - sigma mod {}",
                g.order()
            );
            for (d, v) in report.eta_by_difference.iter().enumerate() {
                println!("eta[{d}] = {v}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckReport {
    name: String,
    statement: String,
    pass: bool,
    lhs: String,
    rhs: String,
    witness: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    group: String,
    checks: Vec<CheckReport>,
    overall: bool,
}

fn cmd_verify(group: &str, format: Format) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let chain = verify_chain(&g)?;
    let report = VerifyReport {
        group: chain.group.to_string(),
        checks: chain
            .checks
            .iter()
            .map(|c| CheckReport {
                name: c.name.clone(),
                statement: c.statement.clone(),
                pass: c.pass,
                lhs: c.lhs.clone(),
                rhs: c.rhs.clone(),
                witness: c.witness.clone(),
            })
            .collect(),
        overall: chain.overall,
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("check,pass,statement,lhs,rhs,witness");
            for c in &report.checks {
                let fields = [
                    c.name.clone(),
                    c.pass.to_string(),
                    c.statement.clone(),
                    c.lhs.clone(),
                    c.rhs.clone(),
                    c.witness.clone().unwrap_or_default(),
                ];
                println!("{}", render::csv_row(&fields));
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            for c in &report.checks {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                println!("{verdict} {}: {}", c.name, c.statement);
                if !c.pass {
                    println!("  lhs: {}", c.lhs);
                    println!("  rhs: {}", c.rhs);
                    if let Some(w) = &c.witness {
                        println!("  witness: {w}");
                    }
                }
            }
            println!("overall: {}", if report.overall { "PASS" } else { "FAIL" });
        }
    }
    if report.overall {
        Ok(())
    } else {
        let failing: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| match &c.witness {
                Some(w) => format!("{} ({w})", c.name),
                None => c.name.clone(),
            })
            .collect();
        Err(Failure::Verification(format!(
            "verification failed for {}: {}",
            report.group,
            failing.join("; ")
        )))
    }
}

#[derive(Serialize)]
struct IntersectionReport {
    group: String,
    matrix: Vec<Vec<String>>,
    interpretation: String,
}

fn cmd_intersection(group: &str, format: Format) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let prediction = predicted_intersection_matrix(&g)?;
    let report = IntersectionReport {
        group: prediction.group.to_string(),
        matrix: rational_strings(&prediction.matrix),
        interpretation: prediction.interpretation.clone(),
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("row,col,value");
            for (i, row) in report.matrix.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    println!("{i},{j},{v}");
                }
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            println!("predicted intersection matrix:");
            println!("{}", render::matrix_text(&report.matrix));
            println!("{}", report.interpretation);
        }
    }
    Ok(())
}

fn parse_zero(s: &str) -> Result<Vec<Arrow>, Failure> {
    s.split(',')
        .map(|part| {
            let bad = || {
                Failure::Usage(format!(
                    "cannot parse arrow {:?}; expected \"tail:flavor\" like \"0:2,3:1\"",
                    part.trim()
                ))
            };
            let (tail, flavor) = part.trim().split_once(':').ok_or_else(bad)?;
            Ok(Arrow {
                tail: tail.trim().parse::<usize>().map_err(|_| bad())?,
                flavor: flavor.trim().parse::<usize>().map_err(|_| bad())?,
            })
        })
        .collect()
}

fn arrow_pairs(arrows: &[Arrow]) -> Vec<[usize; 2]> {
    arrows.iter().map(|a| [a.tail, a.flavor]).collect()
}

#[derive(Serialize)]
struct StabilityReport {
    config: RunConfig,
    group: String,
    theta: String,
    generic: bool,
    degenerate_witness: Option<Vec<usize>>,
    relation_residual: f64,
    support: Vec<[usize; 2]>,
    invariant_subsets: Vec<Vec<usize>>,
    stable: bool,
    stable_witness: Option<Vec<usize>>,
    semistable: bool,
    semistable_witness: Option<Vec<usize>>,
}

fn cmd_stability(
    group: &str,
    theta: &str,
    seed: u64,
    zero: Option<&str>,
    format: Format,
) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let param = StabilityParam::parse(theta)?;
    let pattern = zero.map(parse_zero).transpose()?;
    let b = random_constellation(&g, seed, pattern.as_deref())?;
    let tol = b.support_tolerance();
    let stable = is_theta_stable(&b, &param, tol)?;
    let semistable = is_theta_semistable(&b, &param, tol)?;
    let genericity = param.genericity()?;
    let subsets = invariant_subsets(&b, tol)?;
    let mut config = RunConfig::new("stability", group, format);
    config.theta = Some(theta.to_string());
    config.seed = Some(seed);
    config.zero = zero.map(str::to_string);
    let report = StabilityReport {
        config,
        group: g.to_string(),
        theta: param.to_string(),
        generic: matches!(genericity, Genericity::Generic),
        degenerate_witness: match &genericity {
            Genericity::Degenerate { witness } => Some(witness.vertices()),
            Genericity::Generic => None,
        },
        relation_residual: relation_residual(&b),
        support: arrow_pairs(&b.support(tol)),
        invariant_subsets: subsets
            .iter()
            .filter(|s| s.is_proper_nonempty(g.order()))
            .map(|s| s.vertices())
            .collect(),
        stable: stable.holds,
        stable_witness: stable.witness.map(|w| w.vertices()),
        semistable: semistable.holds,
        semistable_witness: semistable.witness.map(|w| w.vertices()),
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("key,value");
            let subsets_text = report
                .invariant_subsets
                .iter()
                .map(|s| render::vertex_list(s))
                .collect::<Vec<String>>()
                .join(" ");
            let rows = [
                ("group", report.group.clone()),
                ("theta", report.theta.clone()),
                ("generic", report.generic.to_string()),
                ("relation_residual", report.relation_residual.to_string()),
                ("support", render::support_list(&report.support)),
                ("invariant_subsets", subsets_text),
                ("stable", report.stable.to_string()),
                (
                    "stable_witness",
                    report
                        .stable_witness
                        .as_ref()
                        .map(|w| render::vertex_list(w))
                        .unwrap_or_default(),
                ),
                ("semistable", report.semistable.to_string()),
                (
                    "semistable_witness",
                    report
                        .semistable_witness
                        .as_ref()
                        .map(|w| render::vertex_list(w))
                        .unwrap_or_default(),
                ),
            ];
            for (k, v) in rows {
                println!("{}", render::csv_row(&[k.to_string(), v]));
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            let tag = if report.generic {
                "generic".to_string()
            } else {
                let w = report.degenerate_witness.as_deref().unwrap_or(&[]);
                format!("degenerate on {}", render::vertex_list(w))
            };
            println!("theta {} ({tag})", report.theta);
            println!("relation residual: {:e}", report.relation_residual);
            println!(
                "support ({} arrows): {}",
                report.support.len(),
                render::support_list(&report.support)
            );
            if report.invariant_subsets.is_empty() {
                println!("invariant subsets: none");
            } else {
                let joined = report
                    .invariant_subsets
                    .iter()
                    .map(|s| render::vertex_list(s))
                    .collect::<Vec<String>>()
                    .join(" ");
                println!("invariant subsets: {joined}");
            }
            match &report.stable_witness {
                Some(w) => println!("stable: no (theta <= 0 on {})", render::vertex_list(w)),
                None => println!("stable: yes"),
            }
            match &report.semistable_witness {
                Some(w) => println!("semistable: no (theta < 0 on {})", render::vertex_list(w)),
                None => println!("semistable: yes"),
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveReport {
    config: RunConfig,
    group: String,
    theta: String,
    outcome: String,
    iterations: usize,
    residual: Option<f64>,
    gauge: Option<Vec<f64>>,
    certificate: Option<Vec<usize>>,
    certificate_value: Option<String>,
}

fn cmd_solve(
    group: &str,
    theta: &str,
    seed: u64,
    zero: Option<&str>,
    tol: f64,
    max_iter: usize,
    format: Format,
) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let param = StabilityParam::parse(theta)?;
    let pattern = zero.map(parse_zero).transpose()?;
    let b = random_constellation(&g, seed, pattern.as_deref())?;
    let solver = SolverConfig {
        tol,
        max_iter,
        ..SolverConfig::default()
    };
    let outcome = kempf_ness_solve(&b, &param, &solver)?;
    let mut config = RunConfig::new("solve", group, format);
    config.theta = Some(theta.to_string());
    config.seed = Some(seed);
    config.zero = zero.map(str::to_string);
    config.tol = Some(tol);
    config.max_iter = Some(max_iter);
    let report = match outcome {
        SolveOutcome::Solved {
            x,
            residual,
            iterations,
            ..
        } => SolveReport {
            config,
            group: g.to_string(),
            theta: param.to_string(),
            outcome: "solved".to_string(),
            iterations,
            residual: Some(residual),
            gauge: Some(x),
            certificate: None,
            certificate_value: None,
        },
        SolveOutcome::Unstable {
            certificate,
            theta_value,
            iterations,
        } => SolveReport {
            config,
            group: g.to_string(),
            theta: param.to_string(),
            outcome: "unstable".to_string(),
            iterations,
            residual: None,
            gauge: None,
            certificate: Some(certificate.vertices()),
            certificate_value: Some(theta_value.to_string()),
        },
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("key,value");
            println!("group,{}", report.group);
            println!(
                "{}",
                render::csv_row(&["theta".to_string(), report.theta.clone()])
            );
            println!("outcome,{}", report.outcome);
            println!("iterations,{}", report.iterations);
            if let Some(res) = report.residual {
                println!("residual,{res:e}");
            }
            if let Some(gauge) = &report.gauge {
                for (k, x) in gauge.iter().enumerate() {
                    println!("gauge_{k},{x:e}");
                }
            }
            if let Some(cert) = &report.certificate {
                println!("certificate,{}", render::vertex_list(cert));
            }
            if let Some(v) = &report.certificate_value {
                println!("certificate_value,{v}");
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            println!("theta {}", report.theta);
            if report.outcome == "solved" {
                println!(
                    "solved in {} iterations, residual {:.3e}",
                    report.iterations,
                    report.residual.unwrap_or(f64::NAN)
                );
                let gauge = report
                    .gauge
                    .as_deref()
                    .unwrap_or(&[])
                    .iter()
                    .map(|x| format!("{x:.6e}"))
                    .collect::<Vec<String>>()
                    .join(" ");
                println!("gauge: {gauge}");
            } else {
                println!("unstable after {} iterations", report.iterations);
                println!(
                    "certificate: {} with theta value {} (<= 0)",
                    render::vertex_list(report.certificate.as_deref().unwrap_or(&[])),
                    report.certificate_value.as_deref().unwrap_or("?")
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FixedPointsReport {
    group: String,
    theta: String,
    count: usize,
    points: Vec<Vec<[usize; 2]>>,
}

fn cmd_fixed_points(group: &str, theta: &str, format: Format) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    let param = StabilityParam::parse(theta)?;
    let points = enumerate_fixed_points(&g, &param)?;
    let report = FixedPointsReport {
        group: g.to_string(),
        theta: param.to_string(),
        count: points.len(),
        points: points.iter().map(|p| arrow_pairs(&p.support)).collect(),
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("point,tail,flavor");
            for (i, point) in report.points.iter().enumerate() {
                for [tail, flavor] in point {
                    println!("{i},{tail},{flavor}");
                }
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            println!("theta {}", report.theta);
            println!("{} fixed points:", report.count);
            for point in &report.points {
                println!("  {}", render::support_list(point));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ChamberClass {
    count: usize,
    example_theta: String,
    fixed_points: Vec<Vec<[usize; 2]>>,
}

#[derive(Serialize)]
struct ChambersReport {
    config: RunConfig,
    group: String,
    samples: usize,
    seed: u64,
    generic: usize,
    degenerate: usize,
    genericity_rate: String,
    classes: Vec<ChamberClass>,
}

enum Sample {
    Generic {
        fingerprint: Vec<Vec<[usize; 2]>>,
        theta: String,
    },
    Degenerate,
}

fn sample_chamber(candidates: &FixedPointCandidates, seed: u64) -> Result<Sample, QuiverError> {
    let r = candidates.group().order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tails: Vec<i64> = (1..r).map(|_| rng.random_range(-9..=9)).collect();
    let head: i64 = -tails.iter().sum::<i64>();
    let mut parts = vec![head.to_string()];
    parts.extend(tails.iter().map(|t| t.to_string()));
    let literal = parts.join(",");
    let theta = StabilityParam::parse(&literal)?;
    match theta.genericity()? {
        Genericity::Degenerate { .. } => Ok(Sample::Degenerate),
        Genericity::Generic => {
            let points = candidates.for_theta(&theta)?;
            let mut fingerprint: Vec<Vec<[usize; 2]>> =
                points.iter().map(|p| arrow_pairs(&p.support)).collect();
            fingerprint.sort();
            Ok(Sample::Generic {
                fingerprint,
                theta: literal,
            })
        }
    }
}

fn thread_count(samples: usize, cap: Option<usize>) -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let capped = match cap {
        Some(n) if n > 0 => available.min(n),
        _ => available,
    };
    capped.clamp(1, samples.max(1))
}

fn cmd_chambers(group: &str, samples: usize, seed: u64, format: Format) -> Result<(), Failure> {
    let g = GroupAction::parse(group)?;
    if samples == 0 {
        return Err(Failure::Usage("samples must be at least 1".to_string()));
    }
    let candidates = FixedPointCandidates::new(&g)?;
    let env_cap = std::env::var("MCKAY3_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    let threads = thread_count(samples, env_cap);
    let per_thread = samples.div_ceil(threads);
    let drawn: Result<Vec<Vec<Sample>>, QuiverError> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in 0..threads {
            let lo = chunk * per_thread;
            let hi = ((chunk + 1) * per_thread).min(samples);
            if lo >= hi {
                break;
            }
            let candidates = &candidates;
            handles.push(scope.spawn(move || {
                (lo..hi)
                    .map(|i| sample_chamber(candidates, seed.wrapping_add(i as u64)))
                    .collect::<Result<Vec<Sample>, QuiverError>>()
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("sampling thread panicked"))
            .collect()
    });
    let outcomes: Vec<Sample> = drawn?.into_iter().flatten().collect();
    let mut generic = 0usize;
    let mut degenerate = 0usize;
    let mut by_fingerprint: BTreeMap<Vec<Vec<[usize; 2]>>, ChamberClass> = BTreeMap::new();
    for outcome in &outcomes {
        match outcome {
            Sample::Generic { fingerprint, theta } => {
                generic += 1;
                by_fingerprint
                    .entry(fingerprint.clone())
                    .or_insert_with(|| ChamberClass {
                        count: 0,
                        example_theta: theta.clone(),
                        fixed_points: fingerprint.clone(),
                    })
                    .count += 1;
            }
            Sample::Degenerate => degenerate += 1,
        }
    }
    let rate = parse_rational(&format!("{generic}/{samples}"))
        .expect("counts form a valid rational")
        .to_string();
    let mut config = RunConfig::new("chambers", group, format);
    config.seed = Some(seed);
    config.samples = Some(samples);
    let report = ChambersReport {
        config,
        group: g.to_string(),
        samples,
        seed,
        generic,
        degenerate,
        genericity_rate: rate,
        classes: by_fingerprint.into_values().collect(),
    };
    match format {
        Format::Json => print_json(&report)?,
        Format::Csv => {
            println!("class,count,example_theta,fixed_points");
            for (i, class) in report.classes.iter().enumerate() {
                let points = class
                    .fixed_points
                    .iter()
                    .map(|p| render::support_list(p))
                    .collect::<Vec<String>>()
                    .join("|");
                let fields = [
                    i.to_string(),
                    class.count.to_string(),
                    class.example_theta.clone(),
                    points,
                ];
                println!("{}", render::csv_row(&fields));
            }
        }
        Format::Text => {
            println!("group {}", report.group);
            println!(
                "samples {} (seed {}): {} generic, {} degenerate (rate {})",
                report.samples,
                report.seed,
                report.generic,
                report.degenerate,
                report.genericity_rate
            );
            println!("{} chamber classes:", report.classes.len());
            for (i, class) in report.classes.iter().enumerate() {
                println!(
                    "  class {}: {} samples, example theta {}",
                    i + 1,
                    class.count,
                    class.example_theta
                );
                for point in &class.fixed_points {
                    println!("    point: {}", render::support_list(point));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn run_config_round_trips_through_json() {
        let full = RunConfig {
            group: "1/7(1,2,4)".to_string(),
            command: "solve".to_string(),
            theta: Some("-6,1,1,1,1,1,1".to_string()),
            seed: Some(42),
            zero: Some("0:2,3:1".to_string()),
            format: "json".to_string(),
            tol: Some(1e-10),
            max_iter: Some(500),
            samples: None,
        };
        let encoded = serde_json::to_string(&full).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&encoded).unwrap(), full);

        let sparse = RunConfig::new("cartan", "1/3(1,1,1)", Format::Text);
        let encoded = serde_json::to_string(&sparse).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&encoded).unwrap(), sparse);
    }

    #[test]
    fn zero_pattern_literals_parse_to_arrows() {
        assert_eq!(
            parse_zero("0:1, 2:3").unwrap(),
            vec![Arrow { tail: 0, flavor: 1 }, Arrow { tail: 2, flavor: 3 }]
        );
        assert!(matches!(parse_zero("0-1"), Err(Failure::Usage(_))));
        assert!(matches!(parse_zero("a:b"), Err(Failure::Usage(_))));
    }

    #[test]
    fn thread_count_is_capped_and_clamped() {
        assert_eq!(thread_count(1, Some(64)), 1);
        assert_eq!(thread_count(1000, Some(1)), 1);
        let n = thread_count(5, None);
        assert!((1..=5).contains(&n));
    }
}
