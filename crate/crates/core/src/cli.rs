//! Command implementations behind the `realbott` binary.
//!
//! Each command takes its input as data and returns the rendered output with
//! an exit status, so everything here runs without a process boundary.
//! Exit statuses: 0 success, 1 verification failure, 2 input error.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott_matrix::{enumerate_with_cap, BottMatrix, DEFAULT_ENUMERATION_BITS};
use crate::cohomology::Z2Polynomial;
use crate::error::BottError;
use crate::reference::{staircase_matrix, STAIRCASE_COMPONENTS, STAIRCASE_W4};
use crate::stiefel_whitney::{
    failing_degrees, sw_class, total_sw, verify_decomposition, w1_from_rows, DecompositionReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    InputError = 2,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn ok(stdout: String, passed: bool) -> Self {
        let status = if passed { ExitStatus::Success } else { ExitStatus::VerificationFailed };
        Self { stdout, stderr: String::new(), status }
    }

    fn input_error(message: impl Into<String>) -> Self {
        Self { stdout: String::new(), stderr: message.into(), status: ExitStatus::InputError }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub json: bool,
    /// Degrees to report. For `compute` these are the `k` of `w_k`; for
    /// `verify` the `k` of the `w_{2k}` decomposition. Empty means all.
    pub k: Vec<usize>,
}

impl Options {
    fn wants(&self, k: usize) -> bool {
        self.k.is_empty() || self.k.contains(&k)
    }
}

/// Machine-readable output of `compute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub n: usize,
    pub orientable: bool,
    pub holonomy_rank: usize,
    pub classes: Vec<ClassEntry>,
    pub total: Z2Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub k: usize,
    pub w: Z2Polynomial,
}

impl ComputeReport {
    pub fn new(matrix: &BottMatrix, options: &Options) -> Self {
        let total = total_sw(matrix);
        let classes = total
            .components
            .iter()
            .enumerate()
            .filter(|(k, _)| options.wants(*k))
            .map(|(k, w)| ClassEntry { k, w: w.clone() })
            .collect();
        Self {
            n: matrix.dim(),
            orientable: matrix.is_orientable(),
            holonomy_rank: matrix.holonomy_rank(),
            classes,
            total: total.total(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "orientable = {}", self.orientable).unwrap();
        writeln!(out, "holonomy rank = {}", self.holonomy_rank).unwrap();
        for c in &self.classes {
            writeln!(out, "w{} = {}", c.k, c.w).unwrap();
        }
        writeln!(out, "w = {}", self.total).unwrap();
        out
    }
}

fn parse_matrix(input: &str) -> Result<BottMatrix, CommandOutput> {
    BottMatrix::parse_any(input).map_err(|e| CommandOutput::input_error(format!("error: {e}\n")))
}

/// `compute`: all Stiefel-Whitney classes with orientability and holonomy
/// rank.
pub fn compute(input: &str, options: &Options) -> CommandOutput {
    let matrix = match parse_matrix(input) {
        Ok(m) => m,
        Err(e) => return e,
    };
    let report = ComputeReport::new(&matrix, options);
    let stdout = if options.json { report.to_json() } else { report.to_text() };
    CommandOutput::ok(stdout, true)
}

/// `verify`: decomposition reports for every even degree.
pub fn verify(input: &str, options: &Options) -> CommandOutput {
    let matrix = match parse_matrix(input) {
        Ok(m) => m,
        Err(e) => return e,
    };
    let reports: Vec<DecompositionReport> =
        verify_decomposition(&matrix).into_iter().filter(|r| options.wants(r.k)).collect();
    render_reports(&matrix, &reports, options.json)
}

/// Renders reports; the status is success only if every report holds.
pub fn render_reports(matrix: &BottMatrix, reports: &[DecompositionReport], json: bool) -> CommandOutput {
    let failing = failing_degrees(reports);
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(reports).expect("report serialization cannot fail");
        s.push('\n');
        s
    } else {
        let mut out = String::new();
        writeln!(
            out,
            "n = {}, orientable = {}, holonomy rank = {}",
            matrix.dim(),
            matrix.is_orientable(),
            matrix.holonomy_rank()
        )
        .unwrap();
        for r in reports {
            writeln!(out, "{r}").unwrap();
        }
        if failing.is_empty() {
            writeln!(out, "decomposition holds for {} degree(s)", reports.len()).unwrap();
        } else {
            writeln!(out, "DECOMPOSITION FAILED for k = {failing:?}").unwrap();
        }
        out
    };
    CommandOutput::ok(stdout, failing.is_empty())
}

/// A matrix where the two sides of some decomposition differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub matrix: BottMatrix,
    pub k: usize,
    pub lhs: Z2Polynomial,
    pub rhs: Z2Polynomial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub n: usize,
    pub total: u64,
    pub orientable: u64,
    pub decomposition_failures: Vec<SweepFailure>,
    /// Matrices where `w_1` disagrees with the row-sum criterion.
    pub orientability_failures: Vec<BottMatrix>,
    pub elapsed: f64,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.decomposition_failures.is_empty() && self.orientability_failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "total = {}", self.total).unwrap();
        writeln!(out, "orientable = {}", self.orientable).unwrap();
        writeln!(out, "decomposition failures = {}", self.decomposition_failures.len()).unwrap();
        for f in &self.decomposition_failures {
            writeln!(out, "  k = {}: w{}(A) = {}, sum = {}", f.k, 2 * f.k, f.lhs, f.rhs).unwrap();
            for line in f.matrix.to_text().lines() {
                writeln!(out, "    {line}").unwrap();
            }
        }
        writeln!(out, "orientability failures = {}", self.orientability_failures.len()).unwrap();
        for m in &self.orientability_failures {
            writeln!(out, "  {}", m.to_json()).unwrap();
        }
        writeln!(out, "elapsed = {:.3}s", self.elapsed).unwrap();
        out
    }
}

struct MatrixOutcome {
    index: u64,
    orientable: bool,
    failures: Vec<SweepFailure>,
    orientation_mismatch: bool,
}

fn check_one(index: u64, matrix: BottMatrix) -> MatrixOutcome {
    let orientable = matrix.is_orientable();
    let w1 = sw_class(&matrix, 1);
    let orientation_mismatch = w1 != w1_from_rows(&matrix) || w1.is_zero() != orientable;
    let failures = verify_decomposition(&matrix)
        .into_iter()
        .filter(|r| !r.holds())
        .map(|r| SweepFailure { matrix: matrix.clone(), k: r.k, lhs: r.lhs, rhs: r.rhs })
        .collect();
    MatrixOutcome { index, orientable, failures, orientation_mismatch }
}

/// Checks the decomposition and the orientability criterion on every Bott
/// matrix of dimension `n`.
///
/// `jobs` fixes the worker count (default: all cores). Results do not depend
/// on it: outcomes are merged in enumeration order.
pub fn run_sweep(n: usize, jobs: Option<usize>, cap_bits: Option<u32>) -> Result<SweepSummary, BottError> {
    let cap = cap_bits.unwrap_or(DEFAULT_ENUMERATION_BITS);
    let total = enumerate_with_cap(n, cap)?.total();
    let start = Instant::now();
    let work = || {
        let mut outcomes: Vec<MatrixOutcome> = (0..total)
            .into_par_iter()
            .map(|idx| check_one(idx, BottMatrix::from_upper_bits(n, idx).expect("index below total")))
            .collect();
        outcomes.sort_by_key(|o| o.index);
        outcomes
    };
    let outcomes = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };
    let mut summary = SweepSummary {
        n,
        total,
        orientable: 0,
        decomposition_failures: Vec::new(),
        orientability_failures: Vec::new(),
        elapsed: 0.0,
    };
    for o in outcomes {
        summary.orientable += o.orientable as u64;
        if o.orientation_mismatch {
            summary
                .orientability_failures
                .push(BottMatrix::from_upper_bits(n, o.index).expect("index below total"));
        }
        summary.decomposition_failures.extend(o.failures);
    }
    summary.elapsed = start.elapsed().as_secs_f64();
    Ok(summary)
}

/// `sweep`: exhaustive check over all matrices of dimension `n`.
pub fn sweep(n: usize, jobs: Option<usize>, cap_bits: Option<u32>, json: bool) -> CommandOutput {
    match run_sweep(n, jobs, cap_bits) {
        Ok(summary) => {
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&summary).expect("summary serialization cannot fail");
                s.push('\n');
                s
            } else {
                summary.to_text()
            };
            CommandOutput::ok(stdout, summary.passed())
        }
        Err(e) => CommandOutput::input_error(format!("error: {e}\n")),
    }
}

/// `example`: recomputes the built-in 7-dimensional example and compares
/// every value against the recorded answers.
pub fn example() -> CommandOutput {
    let a = staircase_matrix();
    let mut out = String::new();
    let mut all_match = true;
    let mut check = |out: &mut String, label: &str, got: &Z2Polynomial, expected: &str| {
        let want: Z2Polynomial = expected.parse().expect("embedded polynomial is valid");
        let ok = *got == want;
        all_match &= ok;
        writeln!(out, "{label} = {got}  [{}]", if ok { "ok" } else { "MISMATCH" }).unwrap();
        if !ok {
            writeln!(out, "    expected {want}").unwrap();
        }
    };
    writeln!(out, "A =").unwrap();
    for line in a.to_text().lines() {
        writeln!(out, "  {line}").unwrap();
    }
    let w4 = sw_class(&a, 4);
    check(&mut out, "w4(A)", &w4, STAIRCASE_W4);
    let mut sum = Z2Polynomial::zero();
    for (rows, expected) in STAIRCASE_COMPONENTS {
        let sub = a.row_submatrix(rows).expect("rows in range");
        let w = sw_class(&sub, 4);
        let label: String = rows.iter().map(usize::to_string).collect();
        check(&mut out, &format!("w4(A_{label})"), &w, expected);
        sum += &w;
    }
    let report = crate::stiefel_whitney::decomposition_sum(&a, 2).expect("k = 2 is valid");
    let sum_ok = sum == w4 && report.holds() && report.rhs == w4;
    writeln!(out, "sum of components = {sum}  [{}]", if sum_ok { "ok" } else { "MISMATCH" }).unwrap();
    let matched = all_match && sum_ok;
    writeln!(out, "{}", if matched { "all values match" } else { "EXAMPLE FAILED" }).unwrap();
    CommandOutput::ok(out, matched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::STAIRCASE_TEXT;

    #[test]
    fn compute_klein_bottle() {
        let out = compute("01\n00\n", &Options::default());
        assert_eq!(out.status, ExitStatus::Success);
        assert_eq!(
            out.stdout,
            "n = 2\norientable = false\nholonomy rank = 1\nw0 = 1\nw1 = x1\nw2 = 0\nw = 1 + x1\n"
        );
    }

    #[test]
    fn compute_torus() {
        let out = compute("000\n000\n000\n", &Options::default());
        assert!(out.stdout.lines().any(|l| l == "w = 1"), "{}", out.stdout);
    }

    #[test]
    fn compute_restricts_degrees() {
        let opts = Options { json: false, k: vec![4] };
        let out = compute(STAIRCASE_TEXT, &opts);
        assert!(out.stdout.contains("w4 = x1*x2*x3*x4 + x1*x2*x3*x5 + x1*x3*x4*x5 + x2*x3*x4*x5\n"));
        assert!(!out.stdout.contains("w2 ="));
    }

    #[test]
    fn parse_errors_are_input_errors() {
        let out = compute("01\n0x\n", &Options::default());
        assert_eq!(out.status, ExitStatus::InputError);
        assert_eq!(out.stderr, "error: line 2, column 2: unexpected character 'x', expected '0' or '1'\n");
        assert_eq!(verify("", &Options::default()).status, ExitStatus::InputError);
    }

    #[test]
    fn verify_passes_and_fails() {
        let out = verify(STAIRCASE_TEXT, &Options::default());
        assert_eq!(out.status, ExitStatus::Success);
        let a = staircase_matrix();
        let mut reports = verify_decomposition(&a);
        reports[1].rhs += &"x1*x2*x3*x4".parse().unwrap();
        let out = render_reports(&a, &reports, false);
        assert_eq!(out.status, ExitStatus::VerificationFailed);
        assert!(out.stdout.contains("DECOMPOSITION FAILED for k = [2]"));
    }

    #[test]
    fn sweep_small() {
        let s = run_sweep(2, Some(1), None).unwrap();
        assert_eq!((s.total, s.orientable), (2, 1));
        assert!(s.passed());
        assert_eq!(sweep(9, None, None, false).status, ExitStatus::InputError);
    }

    #[test]
    fn example_matches() {
        let out = example();
        assert_eq!(out.status, ExitStatus::Success, "{}", out.stdout);
        assert!(out.stdout.contains("w4(A_1245) = 0  [ok]"));
    }
}
