//! Command dispatch and report rendering for the `polymat` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::activity::{activity_polynomials, exterior_by_recursion};
use crate::document::{parse, BuildError, DocumentKind, InputDocument, Instance};
use crate::frontends::DEFAULT_MAX_EDGES;
use crate::poly::{CoeffPolynomial, Variable};
use crate::polymatroid::{Polymatroid, DEFAULT_MAX_GROUND, HARD_MAX_GROUND};
use crate::structure::{FormulaRange, Side, StructureSummary};
use crate::subset::Subset;
use crate::verify::{instance_checks, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Bases,
    Poly,
    Structure,
    Coeffs,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Bases => "bases",
            Command::Poly => "poly",
            Command::Structure => "structure",
            Command::Coeffs => "coeffs",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PolyKind {
    Interior,
    Exterior,
    #[default]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Direct,
    Recursion,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub kind: PolyKind,
    pub method: Method,
    /// 1-based element for the recursion; defaults to the last element.
    pub element: Option<usize>,
    pub machine: bool,
    pub max_n: Option<usize>,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub name: String,
    pub variable: String,
    pub method: String,
    pub coefficients: Vec<u64>,
    pub pretty: String,
}

impl PolyReport {
    fn new(name: &str, method: &str, poly: &CoeffPolynomial) -> Self {
        PolyReport {
            name: name.into(),
            variable: poly.var().symbol().to_string(),
            method: method.into(),
            coefficients: poly.coeffs().to_vec(),
            pretty: poly.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub g: i64,
    pub flats: Vec<Vec<usize>>,
    /// Keyed by complement size `j`; empty classes omitted.
    pub hyperplanes: BTreeMap<usize, Vec<Vec<usize>>>,
    /// Keyed by size `j`; empty classes omitted.
    pub circuits: BTreeMap<usize, Vec<Vec<usize>>>,
    pub r: Vec<usize>,
    pub r_prime: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub i: usize,
    pub formula: i128,
    pub enumerated: i128,
    pub in_range: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffTable {
    pub side: String,
    /// Rows below this index are guaranteed; absent when unbounded.
    pub range_bound: Option<usize>,
    pub rows: Vec<CoeffRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub kind: String,
    pub n: usize,
    pub total_rank: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bases: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub polynomials: Vec<PolyReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub structure: Option<StructureReport>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub coefficients: Vec<CoeffTable>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<Verdict>,
}

impl Report {
    /// Exit status implied by the verdicts and the in-range formula rows.
    pub fn status(&self) -> u8 {
        let failed_check = self.checks.iter().any(Verdict::failed);
        let failed_row = self
            .coefficients
            .iter()
            .flat_map(|t| &t.rows)
            .any(|r| r.in_range && r.formula != r.enumerated);
        if failed_check || failed_row {
            EXIT_VERIFICATION
        } else {
            EXIT_OK
        }
    }
}

fn labels(s: Subset) -> Vec<usize> {
    s.labels()
}

fn label_map(map: &BTreeMap<usize, Vec<Subset>>) -> BTreeMap<usize, Vec<Vec<usize>>> {
    map.iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(&j, v)| (j, v.iter().map(|&s| labels(s)).collect()))
        .collect()
}

fn structure_report(summary: &StructureSummary) -> StructureReport {
    StructureReport {
        g: summary.g,
        flats: summary.flats.iter().map(|&s| labels(s)).collect(),
        hyperplanes: label_map(&summary.hyperplanes),
        circuits: label_map(&summary.circuits),
        r: summary.thresholds.r_values().to_vec(),
        r_prime: summary.thresholds.r_prime_values().to_vec(),
    }
}

fn coeff_table(summary: &StructureSummary, side: Side, poly: &CoeffPolynomial) -> CoeffTable {
    let range = summary.range(side);
    let last = match range {
        FormulaRange::Below(b) => poly.degree().max(b.saturating_sub(1)),
        FormulaRange::Unbounded => poly.degree(),
    };
    CoeffTable {
        side: match side {
            Side::Exterior => "exterior".into(),
            Side::Interior => "interior".into(),
        },
        range_bound: match range {
            FormulaRange::Below(b) => Some(b),
            FormulaRange::Unbounded => None,
        },
        rows: summary
            .formula_table(side, poly, last)
            .into_iter()
            .map(|r| CoeffRow {
                i: r.i,
                formula: r.formula,
                enumerated: r.enumerated,
                in_range: r.in_range,
            })
            .collect(),
    }
}

struct Failure {
    message: String,
    status: u8,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        status: EXIT_INPUT,
    }
}

fn polynomials(p: &Polymatroid, opts: &Options) -> Result<Vec<PolyReport>, Failure> {
    let t = match opts.element {
        None => p.n() - 1,
        Some(e) if (1..=p.n()).contains(&e) => e - 1,
        Some(e) => {
            return Err(input_error(format!(
                "--element {e} is outside 1..={}",
                p.n()
            )))
        }
    };
    let (interior, exterior) = match opts.method {
        Method::Direct => activity_polynomials(p),
        Method::Recursion => {
            let x = exterior_by_recursion(p, t).map_err(|e| input_error(e.to_string()))?;
            // I_P = X_{P*}
            let i = exterior_by_recursion(&p.dual(), t)
                .map_err(|e| input_error(e.to_string()))?
                .renamed(Variable::X);
            (i, x)
        }
    };
    let method = match opts.method {
        Method::Direct => "direct".to_string(),
        Method::Recursion => format!("recursion at element {}", t + 1),
    };
    let mut out = Vec::new();
    if opts.kind != PolyKind::Exterior {
        out.push(PolyReport::new("interior", &method, &interior));
    }
    if opts.kind != PolyKind::Interior {
        out.push(PolyReport::new("exterior", &method, &exterior));
    }
    Ok(out)
}

fn default_limit(kind: DocumentKind) -> usize {
    match kind {
        DocumentKind::RankTable => DEFAULT_MAX_GROUND,
        _ => DEFAULT_MAX_EDGES,
    }
}

fn build_report(
    command: Command,
    text: &str,
    opts: &Options,
    warnings: &mut Vec<String>,
) -> Result<Report, Failure> {
    let doc: InputDocument = parse(text).map_err(|e| input_error(format!("parse error: {e}")))?;
    let default = default_limit(doc.kind());
    let limit = match opts.max_n {
        Some(m) if m > HARD_MAX_GROUND => {
            return Err(input_error(format!(
                "--max-n may not exceed {HARD_MAX_GROUND}"
            )));
        }
        Some(m) => {
            if m > default {
                warnings.push(format!(
                    "warning: size guard raised from {default} to {m}; work grows as 2^n"
                ));
            }
            m
        }
        None => default,
    };
    let instance: Instance = match doc.build(limit) {
        Ok(i) => i,
        Err(BuildError::Validation(e)) if command == Command::Validate => {
            return Err(Failure {
                message: format!("invalid rank function: {e}"),
                status: EXIT_VERIFICATION,
            });
        }
        Err(e) => return Err(input_error(e.to_string())),
    };
    let p = instance.polymatroid();
    let mut report = Report {
        command: command.name().into(),
        kind: doc.kind().name().into(),
        n: p.n(),
        total_rank: p.total_rank(),
        bases: None,
        polynomials: Vec::new(),
        structure: None,
        coefficients: Vec::new(),
        checks: Vec::new(),
    };
    match command {
        Command::Validate => {
            report.checks.push(Verdict {
                name: "rank axioms".into(),
                status: Status::Pass,
                detail: format!("normalized, monotone and submodular on {} elements", p.n()),
            });
        }
        Command::Bases => {
            report.bases = Some(p.bases().into_iter().map(|b| b.into_inner()).collect());
        }
        Command::Poly => report.polynomials = polynomials(p, opts)?,
        Command::Structure => report.structure = Some(structure_report(&StructureSummary::of(p))),
        Command::Coeffs => {
            let summary = StructureSummary::of(p);
            let (interior, exterior) = activity_polynomials(p);
            if opts.kind != PolyKind::Interior {
                report
                    .coefficients
                    .push(coeff_table(&summary, Side::Exterior, &exterior));
            }
            if opts.kind != PolyKind::Exterior {
                report
                    .coefficients
                    .push(coeff_table(&summary, Side::Interior, &interior));
            }
        }
        Command::Verify => report.checks = instance_checks(&instance),
    }
    Ok(report)
}

fn render_sets(sets: &[Vec<usize>]) -> String {
    sets.iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_thresholds(name: &str, values: &[usize]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(k, v)| format!("{name}_{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Human-readable rendering; byte-identical for identical reports.
pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} on a {} document: n = {}, f(E) = {}",
        report.command, report.kind, report.n, report.total_rank
    );
    if let Some(bases) = &report.bases {
        let _ = writeln!(out, "{} bases", bases.len());
        for b in bases {
            let coords: Vec<String> = b.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "({})", coords.join(","));
        }
    }
    for p in &report.polynomials {
        let upper = if p.name == "interior" { 'I' } else { 'X' };
        let _ = writeln!(out, "{} polynomial ({})", p.name, p.method);
        let _ = writeln!(out, "  {upper}({}) = {}", p.variable, p.pretty);
        let coeffs: Vec<String> = p.coefficients.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "  coefficients: {}", coeffs.join(" "));
    }
    if let Some(s) = &report.structure {
        let _ = writeln!(out, "g = {}", s.g);
        let _ = writeln!(out, "flats ({}): {}", s.flats.len(), render_sets(&s.flats));
        for (j, sets) in &s.hyperplanes {
            let _ = writeln!(out, "H_{j}: {}", render_sets(sets));
        }
        for (j, sets) in &s.circuits {
            let _ = writeln!(out, "C_{j}: {}", render_sets(sets));
        }
        let _ = writeln!(out, "{}", render_thresholds("r", &s.r));
        let _ = writeln!(out, "{}", render_thresholds("r'", &s.r_prime));
    }
    for t in &report.coefficients {
        match t.range_bound {
            Some(b) => {
                let _ = writeln!(
                    out,
                    "{} coefficients, formula guaranteed for i < {b}",
                    t.side
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{} coefficients, formula guaranteed for every i",
                    t.side
                );
            }
        }
        let _ = writeln!(
            out,
            "{:>4} {:>9} {:>11}  status",
            "i", "formula", "enumerated"
        );
        for r in &t.rows {
            let status = match (r.in_range, r.formula == r.enumerated) {
                (true, true) => "ok",
                (true, false) => "MISMATCH",
                (false, true) => "beyond range, agrees",
                (false, false) => "beyond range, differs",
            };
            let _ = writeln!(
                out,
                "{:>4} {:>9} {:>11}  {status}",
                r.i, r.formula, r.enumerated
            );
        }
    }
    if !report.checks.is_empty() {
        for c in &report.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
        }
        let failed = report.checks.iter().filter(|c| c.failed()).count();
        if failed == 0 {
            let _ = writeln!(out, "all {} checks passed", report.checks.len());
        } else {
            let _ = writeln!(out, "{failed} of {} checks failed", report.checks.len());
        }
    }
    out
}

/// Runs one command on document text. Never panics on bad input.
pub fn run(command: Command, text: &str, opts: &Options) -> Outcome {
    let mut warnings = Vec::new();
    let result = build_report(command, text, opts, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("{w}\n")).collect();
    match result {
        Ok(report) => {
            let stdout = if opts.machine {
                let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                s.push('\n');
                s
            } else {
                render(&report)
            };
            Outcome {
                stdout,
                stderr,
                status: report.status(),
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            Outcome {
                stdout: String::new(),
                stderr,
                status: f.status,
            }
        }
    }
}
