//! Command-line front end: exact-rational problem files in, deterministic
//! JSON reports out.
//!
//! Problem files carry a matrix, a polynomial (coefficients ascending by
//! power), and a mode. All scalars are strings `"a"` or `"a/b"`; numeric
//! JSON literals are rejected so nothing is ever silently rounded. Exit
//! codes: 0 = computed (whatever the decision), 1 = input error, 2 =
//! precondition violation, 3 = internal assertion failure.

use crate::factor::{factor_over_q_with, FactorConfig, FactorError, Factorization};
use crate::matrix::RatMatrix;
use crate::poly::UniPoly;
use crate::rational::{parse_rational, Rational};
use crate::solver::{
    decide_with, enumerate_solutions_with, verify_solution, Decision, SolveError, SolveReport,
};
use crate::structured::{
    is_nonderogatory, nondero_report_with, solve_simple_with, NonderoReport, NonderoVerdict,
    StructuredError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

/// Which solver family a problem is routed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Route by the characteristic polynomial: irreducible → core solver,
    /// squarefree → blockwise, nonderogatory → sufficient-condition report.
    #[default]
    Auto,
    Irreducible,
    Simple,
    Nonderogatory,
}

/// On-disk problem description. Field order is the canonical emit order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub matrix: Vec<Vec<String>>,
    pub poly: Vec<String>,
    #[serde(default)]
    pub mode: Mode,
}

/// Candidate matrix for `verify --candidate`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateFile {
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed file or argument; exit 1.
    Input(String),
    /// Well-formed input outside a command's precondition; exit 2.
    Precondition(String),
    /// A library invariant failed; exit 3.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) | CliError::Internal(m) => m,
        }
    }
}

fn map_solve_error(e: SolveError) -> CliError {
    match e {
        SolveError::ReducibleCharPoly | SolveError::ConstantPolynomial => {
            CliError::Precondition(e.to_string())
        }
        SolveError::DimensionMismatch => CliError::Input(e.to_string()),
        SolveError::Factor(f) => map_factor_error(f),
        other => CliError::Internal(other.to_string()),
    }
}

fn map_factor_error(e: FactorError) -> CliError {
    match e {
        FactorError::TooManyModularFactors { .. } => CliError::Precondition(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn map_structured_error(e: StructuredError) -> CliError {
    match e {
        StructuredError::NotSimple | StructuredError::Derogatory => {
            CliError::Precondition(e.to_string())
        }
        StructuredError::Solve(s) => map_solve_error(s),
        StructuredError::Factor(f) => map_factor_error(f),
        StructuredError::Internal(m) => CliError::Internal(m),
    }
}

fn validate_matrix(rows: &[Vec<String>], what: &str) -> Result<RatMatrix, CliError> {
    let n = rows.len();
    if n == 0 {
        return Err(CliError::Input(format!(
            "{what} must have at least one row"
        )));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::Input(format!(
                "{what} row {i} has {} entries, expected {n} (matrix must be square)",
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (j, entry) in row.iter().enumerate() {
            let value = parse_rational(entry)
                .map_err(|e| CliError::Input(format!("{what}[{i}][{j}]: {e}")))?;
            out.push(value);
        }
        parsed.push(out);
    }
    RatMatrix::from_rows(parsed).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn validate_poly(coeffs: &[String]) -> Result<UniPoly, CliError> {
    if coeffs.is_empty() {
        return Err(CliError::Input("poly must be nonempty".into()));
    }
    let mut out = Vec::with_capacity(coeffs.len());
    for (k, entry) in coeffs.iter().enumerate() {
        let value =
            parse_rational(entry).map_err(|e| CliError::Input(format!("poly[{k}]: {e}")))?;
        out.push(value);
    }
    Ok(UniPoly::new(out))
}

/// Parses and fully validates a problem file. Every scalar must be an
/// exact rational string; floating-point literals fail either as a JSON
/// type error or in rational parsing, with the offending field named.
pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let problem: ProblemFile = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("problem file: {e}")))?;
    validate_matrix(&problem.matrix, "matrix")?;
    validate_poly(&problem.poly)?;
    Ok(problem)
}

/// Canonical serialization; `emit_problem(parse_problem(text))` is
/// byte-identical to `text` for files written by this emitter.
pub fn emit_problem(problem: &ProblemFile) -> String {
    let mut text = serde_json::to_string_pretty(problem).expect("problem files serialize");
    text.push('\n');
    text
}

fn problem_inputs(problem: &ProblemFile) -> Result<(RatMatrix, UniPoly), CliError> {
    let a = validate_matrix(&problem.matrix, "matrix")?;
    let p = validate_poly(&problem.poly)?;
    Ok((a, p))
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn poly_strings(p: &UniPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(fmt_rational).collect()
}

fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| fmt_rational(m.at(i, j))).collect())
        .collect()
}

#[derive(Debug, Serialize)]
struct JsonFactor {
    poly: Vec<String>,
    multiplicity: usize,
}

fn factor_list(f: &Factorization) -> Vec<JsonFactor> {
    f.factors
        .iter()
        .map(|(poly, multiplicity)| JsonFactor {
            poly: poly_strings(poly),
            multiplicity: *multiplicity,
        })
        .collect()
}

/// Solve-family report. Key order is fixed; `null` means "not computed by
/// this command", never "empty result".
#[derive(Debug, Serialize)]
struct JsonReport {
    decision: Option<&'static str>,
    char_poly: Option<Vec<String>>,
    composition: Option<Vec<String>>,
    factors: Option<Vec<JsonFactor>>,
    admissible: Option<Vec<Vec<String>>>,
    solutions: Option<Vec<Vec<Vec<String>>>>,
    count: Option<usize>,
    verifications: Option<Vec<bool>>,
}

impl JsonReport {
    fn empty() -> JsonReport {
        JsonReport {
            decision: None,
            char_poly: None,
            composition: None,
            factors: None,
            admissible: None,
            solutions: None,
            count: None,
            verifications: None,
        }
    }
}

fn decision_str(d: Decision) -> &'static str {
    match d {
        Decision::Solvable => "SOLVABLE",
        Decision::Unsolvable => "UNSOLVABLE",
    }
}

/// Renders a solver report. When `inputs` is given the solutions are
/// included and re-verified here, one boolean per solution.
fn render_solve_report(
    report: &SolveReport,
    inputs: Option<(&RatMatrix, &UniPoly)>,
) -> Result<JsonReport, CliError> {
    let mut json = JsonReport::empty();
    json.decision = Some(decision_str(report.decision));
    json.char_poly = Some(poly_strings(&report.char_poly));
    json.composition = Some(poly_strings(&report.composition));
    json.factors = Some(factor_list(&report.factors));
    json.admissible = Some(
        report
            .admissible
            .iter()
            .map(|g| poly_strings(g.rep()))
            .collect(),
    );
    json.count = Some(report.count);
    if let Some((a, p)) = inputs {
        let solutions = report
            .solutions
            .as_ref()
            .ok_or_else(|| CliError::Internal("solve produced no solution list".into()))?;
        let mut verifications = Vec::with_capacity(solutions.len());
        for x in solutions {
            verifications.push(verify_solution(a, p, x).map_err(map_solve_error)?);
        }
        json.solutions = Some(solutions.iter().map(matrix_strings).collect());
        json.verifications = Some(verifications);
    }
    Ok(json)
}

#[derive(Debug, Serialize)]
struct JsonPerFactor {
    admissible_count: usize,
    condition13: bool,
}

/// Report for the nonderogatory sufficient-condition check.
#[derive(Debug, Serialize)]
struct NonderoJson {
    factors: Vec<JsonFactor>,
    per_factor: Vec<JsonPerFactor>,
    verdict: &'static str,
}

fn render_nondero_report(report: &NonderoReport) -> NonderoJson {
    NonderoJson {
        factors: report
            .factors
            .iter()
            .map(|(poly, multiplicity)| JsonFactor {
                poly: poly_strings(poly),
                multiplicity: *multiplicity,
            })
            .collect(),
        per_factor: report
            .per_factor
            .iter()
            .map(|&(admissible_count, condition13)| JsonPerFactor {
                admissible_count,
                condition13,
            })
            .collect(),
        verdict: match report.verdict {
            NonderoVerdict::Sufficient => "SUFFICIENT",
            NonderoVerdict::NoSolution => "NO_SOLUTION",
            NonderoVerdict::NotEstablished => "NOT_ESTABLISHED",
        },
    }
}

fn to_json_text<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))
}

#[derive(Debug, Parser)]
#[command(
    name = "matroots",
    version,
    about = "Exact rational solutions of polynomial matrix equations p(X) = A"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Problem file (JSON).
    file: PathBuf,
    /// Override the mode recorded in the problem file.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Factor-recombination budget (number of modular factors).
    #[arg(long)]
    max_recombination: Option<usize>,
    /// Seed for equal-degree splitting; fixed seed, fixed output.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct PlainArgs {
    /// Problem file (JSON).
    file: PathBuf,
    /// Factor-recombination budget (number of modular factors).
    #[arg(long)]
    max_recombination: Option<usize>,
    /// Seed for equal-degree splitting; fixed seed, fixed output.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Problem file (JSON).
    file: PathBuf,
    /// Candidate solution: JSON file with a "matrix" field.
    #[arg(long)]
    candidate: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether p(X) = A has a rational solution, without
    /// constructing one.
    Decide(SolveArgs),
    /// Decide and construct every rational solution.
    Solve(SolveArgs),
    /// Count the rational solutions.
    Count(SolveArgs),
    /// Factor char_poly(A)(p(λ)) into irreducibles over ℚ.
    Factor(PlainArgs),
    /// Check whether a candidate matrix satisfies p(X) = A exactly.
    Verify(VerifyArgs),
    /// Solve blockwise; requires a simple matrix (squarefree
    /// characteristic polynomial).
    Simple(PlainArgs),
    /// Sufficient-condition report; requires a nonderogatory matrix.
    Nondero(PlainArgs),
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<(ProblemFile, RatMatrix, UniPoly), CliError> {
    let text = read_file(path)?;
    let problem = parse_problem(&text)?;
    let (a, p) = problem_inputs(&problem)?;
    Ok((problem, a, p))
}

fn config_of(max_recombination: Option<usize>, seed: Option<u64>) -> FactorConfig {
    let mut config = FactorConfig::default();
    if let Some(r) = max_recombination {
        config.max_recombination = r;
    }
    if let Some(s) = seed {
        config.seed = s;
    }
    config
}

/// Resolves mode=auto against the factored characteristic polynomial.
fn route_auto(
    a: &RatMatrix,
    config: &FactorConfig,
) -> Result<Mode, CliError> {
    let f = a.char_poly();
    let factorization = factor_over_q_with(&f, config).map_err(map_factor_error)?;
    if factorization.is_irreducible() {
        return Ok(Mode::Irreducible);
    }
    if factorization.factors.iter().all(|(_, e)| *e == 1) {
        return Ok(Mode::Simple);
    }
    if is_nonderogatory(a) {
        return Ok(Mode::Nonderogatory);
    }
    Err(CliError::Precondition("derogatory input unsupported".into()))
}

/// Runs decide/solve/count through the routed solver family.
/// `construct` controls whether solutions appear in the report.
fn run_solve_family(
    args: &SolveArgs,
    construct: bool,
) -> Result<String, CliError> {
    let (problem, a, p) = load_problem(&args.file)?;
    let config = config_of(args.max_recombination, args.seed);
    let mut mode = args.mode.unwrap_or(problem.mode);
    if mode == Mode::Auto {
        mode = route_auto(&a, &config)?;
    }
    match mode {
        Mode::Auto => unreachable!("auto mode was just resolved"),
        Mode::Irreducible => {
            if construct {
                let report = enumerate_solutions_with(&a, &p, &config).map_err(map_solve_error)?;
                to_json_text(&render_solve_report(&report, Some((&a, &p)))?)
            } else {
                let report = decide_with(&a, &p, &config).map_err(map_solve_error)?;
                to_json_text(&render_solve_report(&report, None)?)
            }
        }
        Mode::Simple => {
            let report = solve_simple_with(&a, &p, &config).map_err(map_structured_error)?;
            let inputs = if construct { Some((&a, &p)) } else { None };
            to_json_text(&render_solve_report(&report, inputs)?)
        }
        Mode::Nonderogatory => {
            let report = nondero_report_with(&a, &p, &config).map_err(map_structured_error)?;
            to_json_text(&render_nondero_report(&report))
        }
    }
}

fn run_factor(args: &PlainArgs) -> Result<String, CliError> {
    let (_, a, p) = load_problem(&args.file)?;
    let config = config_of(args.max_recombination, args.seed);
    let f = a.char_poly();
    let composition = f.compose(&p);
    let factorization = factor_over_q_with(&composition, &config).map_err(map_factor_error)?;
    let mut json = JsonReport::empty();
    json.char_poly = Some(poly_strings(&f));
    json.composition = Some(poly_strings(&composition));
    json.factors = Some(factor_list(&factorization));
    to_json_text(&json)
}

fn run_verify(args: &VerifyArgs) -> Result<String, CliError> {
    let (_, a, p) = load_problem(&args.file)?;
    let text = read_file(&args.candidate)?;
    let candidate: CandidateFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("candidate file: {e}")))?;
    let x = validate_matrix(&candidate.matrix, "candidate matrix")?;
    let ok = verify_solution(&a, &p, &x).map_err(map_solve_error)?;
    let mut json = JsonReport::empty();
    json.verifications = Some(vec![ok]);
    to_json_text(&json)
}

fn run_simple(args: &PlainArgs) -> Result<String, CliError> {
    let (_, a, p) = load_problem(&args.file)?;
    let config = config_of(args.max_recombination, args.seed);
    let report = solve_simple_with(&a, &p, &config).map_err(map_structured_error)?;
    to_json_text(&render_solve_report(&report, Some((&a, &p)))?)
}

fn run_nondero(args: &PlainArgs) -> Result<String, CliError> {
    let (_, a, p) = load_problem(&args.file)?;
    let config = config_of(args.max_recombination, args.seed);
    let report = nondero_report_with(&a, &p, &config).map_err(map_structured_error)?;
    to_json_text(&render_nondero_report(&report))
}

fn dispatch(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Decide(args) | Command::Count(args) => run_solve_family(args, false),
        Command::Solve(args) => run_solve_family(args, true),
        Command::Factor(args) => run_factor(args),
        Command::Verify(args) => run_verify(args),
        Command::Simple(args) => run_simple(args),
        Command::Nondero(args) => run_nondero(args),
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".to_string()
    }
}

/// Full command entry point: parses argv, dispatches, writes the report to
/// `out` and diagnostics to `err`, and returns the process exit code.
/// Library panics are caught and reported as exit code 3.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 1;
        }
    };
    match catch_unwind(AssertUnwindSafe(|| dispatch(&cli.command))) {
        Ok(Ok(report)) => {
            let _ = writeln!(out, "{report}");
            0
        }
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
        Err(payload) => {
            let _ = writeln!(err, "internal error: {}", panic_message(payload));
            3
        }
    }
}
