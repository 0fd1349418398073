//! Command-line front end.
//!
//! Every subcommand writes to the supplied writer and reports an exit
//! status: 0 success, 1 a failed check, 2 a usage or configuration error.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::binet::{binet_seq, make_context, BinetError};
use crate::error::{ArithError, ParamError};
use crate::genfunc::check_expansion;
use crate::hybrid::{render_unit_combination, BasisTable, HybridNumber, NormClass, Unit};
use crate::identities::{run_suite, GridConfig, GridError, SuiteSelection, SuiteSummary, VerificationReport};
use crate::rational::Rational;
use crate::sequences::{hybrid_seq, scalar_seq, HoradamParams, SeqKind};

#[derive(Debug, Parser)]
#[command(name = "hybridfib", version, about = "Exact hybrid Fibonacci/Lucas/Horadam arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the multiplication table of the units 1, i, ε, h.
    Table(TableArgs),
    /// Emit sequence terms from the recurrence.
    Seq(SeqArgs),
    /// Emit hybrid terms from the closed form, checked against the recurrence.
    Binet(BinetArgs),
    /// Character and norm of a hybrid number given as "a,b,c,d".
    Char(CharArgs),
    /// Expand the generating function and compare with the recurrence.
    Expand(ExpandArgs),
    /// Check the identity suite over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TermKind {
    Scalar,
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqChoice {
    Fib,
    Lucas,
    Horadam,
}

impl From<SeqChoice> for SeqKind {
    fn from(c: SeqChoice) -> Self {
        match c {
            SeqChoice::Fib => SeqKind::Fib,
            SeqChoice::Lucas => SeqKind::Lucas,
            SeqChoice::Horadam => SeqKind::Horadam,
        }
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub q: i64,
    /// Seed J_0 (horadam only).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub a: i64,
    /// Seed J_1 (horadam only).
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub b: i64,
    #[arg(long = "seq", value_enum, default_value = "horadam")]
    pub seq: SeqChoice,
}

impl ParamArgs {
    fn resolve(&self) -> Result<(HoradamParams, SeqKind), CliError> {
        let kind = SeqKind::from(self.seq);
        let params = HoradamParams::new(self.p, self.q, self.a, self.b)?;
        Ok((kind.params(&params), kind))
    }
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub from: i64,
    #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
    pub to: i64,
}

impl RangeArgs {
    fn indices(&self) -> Result<std::ops::RangeInclusive<i64>, CliError> {
        if self.from > self.to {
            return Err(CliError::Usage(format!("--from {} exceeds --to {}", self.from, self.to)));
        }
        Ok(self.from..=self.to)
    }
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long, value_enum, default_value = "hybrid")]
    pub kind: TermKind,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BinetArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CharArgs {
    /// Four comma-separated rationals: scalar, i, ε, h.
    #[arg(allow_hyphen_values = true)]
    pub z: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Highest power of t to expand.
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name or "all".
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Include printed and corrected right sides with their outcomes.
    #[arg(long)]
    pub audit: bool,
    /// Grid file; the built-in default grid is used when absent.
    #[arg(long)]
    pub grid: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Result of a completed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    CheckFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::CheckFailed => 1,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::CheckFailed
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Table(args) => cmd_table(args, out),
        Command::Seq(args) => cmd_seq(args, out),
        Command::Binet(args) => cmd_binet(args, out, err),
        Command::Char(args) => cmd_char(args, out),
        Command::Expand(args) => cmd_expand(args, out),
        Command::Verify(args) => cmd_verify(args, out, err),
    }
}

/// Parses arguments, runs, reports errors on `err`, and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli, out, err) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_hybrid(z: &HybridNumber<Rational>) -> String {
    format!("{},{},{},{}", z.s, z.i, z.e, z.h)
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let table = BasisTable::standard();
    match args.format {
        TableFormat::Text => {
            let width = 8;
            let mut line = format!("{:<width$}", "×");
            for col in Unit::ALL {
                line.push_str(&format!("{:<width$}", col.symbol()));
            }
            writeln!(out, "{}", line.trim_end())?;
            for row in Unit::ALL {
                let mut line = format!("{:<width$}", row.symbol());
                for col in Unit::ALL {
                    line.push_str(&format!("{:<width$}", render_unit_combination(table.product(row, col))));
                }
                writeln!(out, "{}", line.trim_end())?;
            }
        }
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Cell<'a> {
                row: &'a str,
                col: &'a str,
                product: String,
                value: HybridNumber<Rational>,
            }
            for row in Unit::ALL {
                for col in Unit::ALL {
                    let cell = table.product(row, col);
                    json_line(out, &Cell {
                        row: row.symbol(),
                        col: col.symbol(),
                        product: render_unit_combination(cell),
                        value: cell.map(|c| Rational::from(*c)),
                    })?;
                }
            }
        }
        TableFormat::Csv => {
            writeln!(out, "row,col,product,s,i,e,h")?;
            for row in Unit::ALL {
                for col in Unit::ALL {
                    let cell = table.product(row, col);
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        row.symbol(),
                        col.symbol(),
                        render_unit_combination(cell),
                        cell.s,
                        cell.i,
                        cell.e,
                        cell.h
                    )?;
                }
            }
        }
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct ScalarLine<'a> {
    n: i64,
    value: &'a Rational,
}

#[derive(Serialize)]
struct HybridLine<'a> {
    n: i64,
    hybrid: &'a HybridNumber<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'static str>,
}

pub fn cmd_seq(args: &SeqArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let (params, _) = args.params.resolve()?;
    let range = args.range.indices()?;
    if args.format == OutputFormat::Csv {
        match args.kind {
            TermKind::Scalar => writeln!(out, "n,value")?,
            TermKind::Hybrid => writeln!(out, "n,s,i,e,h")?,
        }
    }
    for n in range {
        match (args.kind, args.format) {
            (TermKind::Scalar, OutputFormat::Json) => {
                json_line(out, &ScalarLine { n, value: &scalar_seq(&params, SeqKind::Horadam, n) })?
            }
            (TermKind::Scalar, OutputFormat::Csv) => {
                writeln!(out, "{},{}", n, scalar_seq(&params, SeqKind::Horadam, n))?
            }
            (TermKind::Hybrid, OutputFormat::Json) => json_line(out, &HybridLine {
                n,
                hybrid: &hybrid_seq(&params, SeqKind::Horadam, n),
                method: None,
            })?,
            (TermKind::Hybrid, OutputFormat::Csv) => {
                writeln!(out, "{},{}", n, csv_hybrid(&hybrid_seq(&params, SeqKind::Horadam, n)))?
            }
        }
    }
    Ok(Outcome::Success)
}

pub fn cmd_binet(args: &BinetArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let (params, kind) = args.params.resolve()?;
    let range = args.range.indices()?;
    let ctx = make_context(&params).map_err(|e| match e {
        BinetError::Params(p) => CliError::Params(p),
        other => CliError::Usage(other.to_string()),
    })?;
    if args.format == OutputFormat::Csv {
        writeln!(out, "n,s,i,e,h,method")?;
    }
    let mut ok = true;
    for n in range {
        let closed = match binet_seq(&ctx, kind, n) {
            Ok(z) => z,
            Err(e @ ArithError::IrrationalResidue(_)) | Err(e) => {
                writeln!(err, "n={n}: {e}")?;
                ok = false;
                continue;
            }
        };
        let recurrence = hybrid_seq(&params, SeqKind::Horadam, n);
        if closed != recurrence {
            writeln!(err, "n={n}: closed form {closed} differs from recurrence {recurrence}")?;
            ok = false;
        }
        match args.format {
            OutputFormat::Json => json_line(out, &HybridLine { n, hybrid: &closed, method: Some("binet") })?,
            OutputFormat::Csv => writeln!(out, "{},{},binet", n, csv_hybrid(&closed))?,
        }
    }
    Ok(Outcome::from_ok(ok))
}

pub fn parse_hybrid(text: &str) -> Result<HybridNumber<Rational>, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!("expected four comma-separated rationals, got {text:?}")));
    }
    let mut comps = Vec::with_capacity(4);
    for part in parts {
        comps.push(part.parse::<Rational>().map_err(|e| CliError::Usage(e.to_string()))?);
    }
    let comps: [Rational; 4] = comps.try_into().expect("four parts");
    Ok(HybridNumber::from_components(comps))
}

#[derive(Serialize)]
struct CharLine {
    character: Rational,
    norm_value: f64,
    norm_class: NormClass,
}

pub fn cmd_char(args: &CharArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let z = parse_hybrid(&args.z)?;
    let norm = z.norm();
    let line = CharLine { character: z.character(), norm_value: norm.value, norm_class: norm.class };
    match args.format {
        OutputFormat::Json => json_line(out, &line)?,
        OutputFormat::Csv => {
            writeln!(out, "character,norm_value,norm_class")?;
            writeln!(out, "{},{},{}", line.character, line.norm_value, line.norm_class)?;
        }
    }
    Ok(Outcome::Success)
}

pub fn cmd_expand(args: &ExpandArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let (params, _) = args.params.resolve()?;
    let report = check_expansion(&params, args.terms);
    #[derive(Serialize)]
    struct Line<'a> {
        r: usize,
        coeff: &'a HybridNumber<Rational>,
        matches_seq: bool,
    }
    if args.format == OutputFormat::Csv {
        writeln!(out, "r,s,i,e,h,matches_seq")?;
    }
    for entry in &report.entries {
        match args.format {
            OutputFormat::Json => {
                json_line(out, &Line { r: entry.r, coeff: &entry.coeff, matches_seq: entry.matches_seq })?
            }
            OutputFormat::Csv => writeln!(out, "{},{},{}", entry.r, csv_hybrid(&entry.coeff), entry.matches_seq)?,
        }
    }
    Ok(Outcome::from_ok(report.all_match()))
}

#[derive(Serialize)]
struct VariantLine<'a> {
    label: &'a str,
    role: crate::identities::VariantRole,
    value: &'a HybridNumber<Rational>,
    pass: bool,
}

#[derive(Serialize)]
struct CaseLine<'a> {
    identity: &'a str,
    params: &'a HoradamParams,
    indices: &'a [i64],
    extended: bool,
    lhs: &'a HybridNumber<Rational>,
    rhs: &'a HybridNumber<Rational>,
    pass: bool,
    verdict: crate::identities::Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs_printed: Option<&'a HybridNumber<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    printed_pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    variants: Option<Vec<VariantLine<'a>>>,
}

impl<'a> CaseLine<'a> {
    fn new(rep: &'a VerificationReport, audit: bool) -> Self {
        CaseLine {
            identity: rep.case.identity.name(),
            params: &rep.case.params,
            indices: &rep.case.indices,
            extended: rep.case.extended_domain,
            lhs: &rep.lhs,
            rhs: rep.reference_rhs(),
            pass: rep.reference_pass(),
            verdict: rep.verdict,
            rhs_printed: audit.then_some(&rep.rhs_printed),
            printed_pass: audit.then_some(rep.printed_pass),
            variants: audit.then(|| {
                rep.rhs_variants
                    .iter()
                    .map(|v| VariantLine { label: v.label, role: v.role, value: &v.value, pass: v.pass })
                    .collect()
            }),
        }
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SuiteSummary,
    success: bool,
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let selection: SuiteSelection = args.suite.parse().map_err(CliError::Usage)?;
    let grid = match &args.grid {
        Some(path) => GridConfig::load(path)?,
        None => GridConfig::default(),
    };
    let report = run_suite(&grid, selection)?;
    let summary = report.summary();
    let success = report.success();
    let cases = report.reports.iter().chain(&report.extended);
    match args.format {
        OutputFormat::Json => {
            for rep in cases {
                json_line(out, &CaseLine::new(rep, args.audit))?;
            }
            json_line(out, &SummaryLine { summary: &summary, success })?;
        }
        OutputFormat::Csv => {
            write!(out, "identity,p,q,a,b,indices,extended,pass,verdict,")?;
            write!(out, "lhs_s,lhs_i,lhs_e,lhs_h,rhs_s,rhs_i,rhs_e,rhs_h")?;
            if args.audit {
                write!(out, ",printed_pass,printed_s,printed_i,printed_e,printed_h")?;
            }
            writeln!(out)?;
            for rep in cases {
                let p = &rep.case.params;
                let indices: Vec<String> = rep.case.indices.iter().map(i64::to_string).collect();
                let verdict = serde_json::to_value(rep.verdict)?;
                write!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    rep.case.identity,
                    p.p,
                    p.q,
                    p.a,
                    p.b,
                    indices.join(";"),
                    rep.case.extended_domain,
                    rep.reference_pass(),
                    verdict.as_str().unwrap_or_default(),
                    csv_hybrid(&rep.lhs),
                    csv_hybrid(rep.reference_rhs())
                )?;
                if args.audit {
                    write!(out, ",{},{}", rep.printed_pass, csv_hybrid(&rep.rhs_printed))?;
                }
                writeln!(out)?;
            }
            serde_json::to_writer(&mut *err, &SummaryLine { summary: &summary, success })?;
            writeln!(err)?;
        }
    }
    Ok(Outcome::from_ok(success))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(std::iter::once("hybridfib").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_cells() {
        let (code, out, _) = run_args(&["table"]);
        assert_eq!(code, 0);
        let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(rows[2], vec!["i", "i", "\u{2212}1", "1\u{2212}h", "ε+i"]);
        assert_eq!(rows[3], vec!["ε", "ε", "1+h", "0", "\u{2212}ε"]);
        assert_eq!(rows[4], vec!["h", "h", "\u{2212}(ε+i)", "ε", "1"]);
    }

    #[test]
    fn seq_lines() {
        let (code, out, _) = run_args(&["seq", "--p", "1", "--q", "1", "--a", "0", "--b", "1", "--from", "0", "--to", "1"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"n\":0,\"hybrid\":{\"s\":\"0\",\"i\":\"1\",\"e\":\"1\",\"h\":\"2\"}}\n\
             {\"n\":1,\"hybrid\":{\"s\":\"1\",\"i\":\"1\",\"e\":\"2\",\"h\":\"3\"}}\n"
        );
        let (_, out, _) = run_args(&["seq", "--from", "0", "--to", "0", "--kind", "scalar"]);
        assert_eq!(out, "{\"n\":0,\"value\":\"0\"}\n");
    }

    #[test]
    fn negative_flags_parse() {
        let (code, out, _) = run_args(&["seq", "--q", "-2", "--from", "-1", "--to", "-1", "--kind", "scalar", "--seq", "fib"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"n\":-1,\"value\":\"-1/2\"}\n");
    }

    #[test]
    fn binet_rejects_zero_q() {
        let (code, _, err) = run_args(&["binet", "--q", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("q must be nonzero"));
    }

    #[test]
    fn binet_tags_method() {
        let (code, out, _) = run_args(&["binet", "--seq", "lucas", "--from", "0", "--to", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"n\":0,\"hybrid\":{\"s\":\"2\",\"i\":\"1\",\"e\":\"3\",\"h\":\"4\"},\"method\":\"binet\"}\n");
    }

    #[test]
    fn char_examples() {
        let (_, out, _) = run_args(&["char", "0,0,1,0"]);
        assert_eq!(out, "{\"character\":\"0\",\"norm_value\":0.0,\"norm_class\":\"null\"}\n");
        let (_, out, _) = run_args(&["char", "1,0,0,0"]);
        assert_eq!(out, "{\"character\":\"1\",\"norm_value\":1.0,\"norm_class\":\"positive\"}\n");
        let (_, out, _) = run_args(&["char", "0,2,1,1"]);
        assert!(out.contains("\"character\":\"-1\"") && out.contains("\"negative\""));
        let (code, _, _) = run_args(&["char", "1,2,x,4"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["char", "1,2,3"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["seq", "--from", "3", "--to", "1"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(run_args(&["verify", "--grid", "/nonexistent/grid.txt"]).0, 2);
        assert_eq!(run_args(&["seq", "--p", "2", "--q", "-1"]).0, 2);
    }

    #[test]
    fn expand_lines() {
        let (code, out, _) = run_args(&["expand", "--terms", "2", "--seq", "fib"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
        assert!(out.lines().all(|l| l.ends_with("\"matches_seq\":true}")));
    }
}
