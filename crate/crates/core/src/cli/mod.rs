//! Command-line front end. [`run`] does all the work and returns the rendered
//! output with an exit code, so it can be driven directly from tests.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid parameters,
//! non-L-space input where one is required, a failed identity check), 2 on
//! syntax errors in expressions or slopes.

pub mod census;
mod parse;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::knots::KnotExpr;
use crate::lspace::{invariant_report, is_lspace_knot, s_invariant, HfkRanks};
use crate::staircase::{a_hat_complex, build_staircase, homology_rank_gf2, s_from_staircase};
use crate::surgery::{
    cable_surgery_decomposition, h1_order, rank_surgery, torsion_t, verify_main_identity,
    IdentityReport, Slope,
};

pub use parse::parse_expression;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lspace",
    about = "Heegaard Floer invariants and L-space criteria for iterated torus knots"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial, genus, tau, s and knot Floer ranks.
    Invariants { expr: String },
    /// Decide whether the knot admits a positive L-space surgery.
    IsLspace { expr: String },
    /// Rank of HF-hat of a positive rational surgery.
    Surgery {
        expr: String,
        /// `A/B` or `A`.
        #[arg(allow_negative_numbers = true)]
        slope: String,
    },
    /// Knot Floer ranks per Alexander grading (L-space knots only).
    Hfk { expr: String },
    /// Staircase complex and its A-hat slices.
    Staircase {
        expr: String,
        #[arg(long, allow_negative_numbers = true)]
        s_min: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        s_max: Option<i64>,
    },
    /// Check the cable surgery identities.
    Verify { expr: String },
    /// Tabulate all knots within the given bounds.
    Census {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_genus: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_param: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Output {
    match execute(&cli.command, cli.format) {
        Ok(Rendered { text, ok: true }) => Output {
            stdout: text,
            stderr: String::new(),
            code: 0,
        },
        Ok(Rendered { text, ok: false }) => Output {
            stdout: text,
            stderr: "error: identity check failed\n".into(),
            code: 1,
        },
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: if e.is_parse_error() { 2 } else { 1 },
        },
    }
}

struct Rendered {
    text: String,
    ok: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn execute(cmd: &Command, format: Format) -> Result<Rendered> {
    match cmd {
        Command::Invariants { expr } => {
            let record = KnotRecord::compute(&parse_expression(expr)?)?;
            let ok = record.checks.as_ref().is_none_or(|c| c.holds);
            let text = match format {
                Format::Table => record.table(),
                Format::Json => json_text(&record),
            };
            Ok(Rendered { text, ok })
        }
        Command::IsLspace { expr } => is_lspace_cmd(&parse_expression(expr)?, format),
        Command::Surgery { expr, slope } => {
            surgery_cmd(&parse_expression(expr)?, slope.parse()?, format)
        }
        Command::Hfk { expr } => hfk_cmd(&parse_expression(expr)?, format),
        Command::Staircase { expr, s_min, s_max } => {
            staircase_cmd(&parse_expression(expr)?, *s_min, *s_max, format)
        }
        Command::Verify { expr } => verify_cmd(&parse_expression(expr)?, format),
        Command::Census {
            max_genus,
            max_param,
        } => census_cmd(*max_genus, *max_param, format),
    }
}

/// Identity checks attached to cable records.
#[derive(Debug, Clone, Serialize)]
pub struct Checks {
    pub torsion: bool,
    pub rank: bool,
    pub s: bool,
    pub holds: bool,
    #[serde(flatten)]
    pub report: IdentityReport,
}

impl From<IdentityReport> for Checks {
    fn from(report: IdentityReport) -> Self {
        Self {
            torsion: report.torsion_ok(),
            rank: report.rank_ok(),
            s: report.s_ok(),
            holds: report.holds(),
            report,
        }
    }
}

/// Flat per-knot record shared by `invariants` and `census`.
#[derive(Debug, Clone, Serialize)]
pub struct KnotRecord {
    pub expr: String,
    pub alexander: String,
    pub genus: i64,
    pub tau: i64,
    pub s: i64,
    pub lspace: bool,
    /// Smallest positive integer L-space surgery slope.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_lspace_slope: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hfk_ranks: Option<HfkRanks>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
}

impl KnotRecord {
    pub fn compute(expr: &KnotExpr) -> Result<Self> {
        let report = invariant_report(expr)?;
        let checks = if expr.is_cable() {
            Some(verify_main_identity(expr)?.into())
        } else {
            None
        };
        Ok(Self {
            expr: expr.to_string(),
            alexander: report.alexander.to_string(),
            genus: report.genus,
            tau: report.tau,
            s: report.s_invariant,
            lspace: report.is_lspace,
            min_lspace_slope: report.is_lspace.then(|| (2 * report.genus - 1).max(1)),
            hfk_ranks: report.hfk_ranks,
            checks,
        })
    }

    fn table(&self) -> String {
        let mut rows = vec![
            ("expression", self.expr.clone()),
            ("alexander", self.alexander.clone()),
            ("genus", self.genus.to_string()),
            ("tau", self.tau.to_string()),
            ("s", self.s.to_string()),
            ("L-space", yes_no(self.lspace).into()),
            ("min slope", opt(self.min_lspace_slope)),
            (
                "hfk ranks",
                self.hfk_ranks.as_ref().map_or("-".into(), ranks_inline),
            ),
        ];
        if let Some(c) = &self.checks {
            rows.push(("checks", checks_inline(c)));
        }
        kv_table(&rows)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ok_fail(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

fn ranks_inline(r: &HfkRanks) -> String {
    r.iter()
        .rev()
        .map(|(s, n)| format!("{s}:{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn checks_inline(c: &Checks) -> String {
    format!(
        "torsion {}, rank {} ({} = {}), s {}",
        ok_fail(c.torsion),
        ok_fail(c.rank),
        c.report.rank_direct,
        c.report.rank_decomposed,
        ok_fail(c.s)
    )
}

fn kv_table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}").unwrap();
    }
    out
}

fn is_lspace_cmd(expr: &KnotExpr, format: Format) -> Result<Rendered> {
    let lspace = is_lspace_knot(expr)?;
    let genus = expr.genus()?;
    let reason = match expr {
        KnotExpr::Unknot => "unknot".to_string(),
        KnotExpr::Torus(p, q) => format!("torus knot: {}-surgery is a lens space", p * q - 1),
        KnotExpr::Cable(p, q, j) => {
            if !is_lspace_knot(j)? {
                format!("companion {j} is not an L-space knot")
            } else {
                let bound = 2 * j.genus()? - 1;
                let cmp = if q >= &(p * bound) { ">=" } else { "<" };
                format!("q/p = {q}/{p} {cmp} 2g({j}) - 1 = {bound}")
            }
        }
    };
    let text = match format {
        Format::Table => kv_table(&[
            ("expression", expr.to_string()),
            ("genus", genus.to_string()),
            ("L-space", yes_no(lspace).into()),
            ("reason", reason),
        ]),
        Format::Json => json_text(&json!({
            "expr": expr.to_string(),
            "genus": genus,
            "lspace": lspace,
            "reason": reason,
        })),
    };
    Ok(Rendered::ok(text))
}

fn surgery_cmd(expr: &KnotExpr, slope: Slope, format: Format) -> Result<Rendered> {
    let rank = rank_surgery(expr, slope)?;
    let s = s_invariant(expr)?;
    let t = torsion_t(expr.genus()?, slope);
    let h1 = h1_order(slope);
    let lspace = rank == h1;
    let text = match format {
        Format::Table => kv_table(&[
            ("knot", expr.to_string()),
            ("slope", slope.to_string()),
            ("rank", rank.to_string()),
            ("|H1|", h1.to_string()),
            ("s", s.to_string()),
            ("t", t.to_string()),
            ("L-space", yes_no(lspace).into()),
        ]),
        Format::Json => json_text(&json!({
            "expr": expr.to_string(),
            "slope": slope,
            "rank": rank,
            "h1_order": h1,
            "s": s,
            "t": t,
            "lspace": lspace,
        })),
    };
    Ok(Rendered::ok(text))
}

fn hfk_cmd(expr: &KnotExpr, format: Format) -> Result<Rendered> {
    let ranks = crate::lspace::hfk_ranks(expr)?;
    let total: u64 = ranks.values().sum();
    let text = match format {
        Format::Table => {
            let mut out = format!("expression  {expr}\ngrading  rank\n");
            for (s, n) in ranks.iter().rev() {
                writeln!(out, "{s:>7}  {n}").unwrap();
            }
            writeln!(out, "total    {total}").unwrap();
            out
        }
        Format::Json => json_text(&json!({
            "expr": expr.to_string(),
            "hfk_ranks": ranks,
            "total": total,
        })),
    };
    Ok(Rendered::ok(text))
}

#[derive(Serialize)]
struct SliceJson {
    s: i64,
    placements: Vec<(i64, i64)>,
    arrows: Vec<(usize, usize)>,
    rank: usize,
}

fn staircase_cmd(
    expr: &KnotExpr,
    s_min: Option<i64>,
    s_max: Option<i64>,
    format: Format,
) -> Result<Rendered> {
    if !is_lspace_knot(expr)? {
        return Err(Error::NotLSpaceKnot(expr.to_string()));
    }
    let st = build_staircase(&expr.alexander()?)?;
    let g = st.genus();
    let range = s_min.unwrap_or(-g)..=s_max.unwrap_or(g);
    let s_total = s_from_staircase(expr)?;

    let mut slices = Vec::new();
    for s in range {
        let c = a_hat_complex(&st, s);
        let rank = homology_rank_gf2(&c.complex)?;
        slices.push((c, rank));
    }

    let join = |v: &[i64]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let text = match format {
        Format::Table => {
            let mut out = kv_table(&[
                ("expression", expr.to_string()),
                ("gradings", join(st.gradings())),
                ("steps", join(&st.step_lengths())),
            ]);
            for (c, rank) in &slices {
                write!(out, "{c}").unwrap();
                writeln!(out, "  rank H = {rank}").unwrap();
            }
            writeln!(out, "s_K  {s_total}").unwrap();
            out
        }
        Format::Json => {
            let slices: Vec<_> = slices
                .into_iter()
                .map(|(c, rank)| SliceJson {
                    s: c.s,
                    arrows: c.arrows.iter().map(|a| (a.source, a.target)).collect(),
                    placements: c.placements,
                    rank,
                })
                .collect();
            json_text(&json!({
                "expr": expr.to_string(),
                "gradings": st.gradings(),
                "steps": st.step_lengths(),
                "slices": slices,
                "s": s_total,
            }))
        }
    };
    Ok(Rendered::ok(text))
}

fn verify_cmd(expr: &KnotExpr, format: Format) -> Result<Rendered> {
    let KnotExpr::Cable(p, q, companion) = expr else {
        return Err(Error::NotACable(expr.to_string()));
    };
    let checks = Checks::from(verify_main_identity(expr)?);
    let decomposition = cable_surgery_decomposition(expr)?;
    let r = &checks.report;
    let text = match format {
        Format::Table => {
            let summands = decomposition
                .summands
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" # ");
            kv_table(&[
                ("cable", expr.to_string()),
                ("companion", companion.to_string()),
                (
                    "decomposition",
                    format!(
                        "S^3_{}({expr}) = {summands}, |H1| = {}",
                        p * q,
                        decomposition.h1_order
                    ),
                ),
                (
                    "torsion",
                    format!(
                        "t_K^({q}/{p}) = {}, t^({}) on cable = {}  {}",
                        r.torsion_companion,
                        p * q,
                        r.torsion_cable,
                        ok_fail(checks.torsion)
                    ),
                ),
                (
                    "rank",
                    format!(
                        "direct {}, decomposed {}  {}",
                        r.rank_direct,
                        r.rank_decomposed,
                        ok_fail(checks.rank)
                    ),
                ),
                (
                    "s",
                    format!(
                        "cable {}, p^2 s_K + (p-1) t_K = {}  {}",
                        r.s_cable,
                        r.s_recursion,
                        ok_fail(checks.s)
                    ),
                ),
                (
                    "result",
                    if checks.holds { "holds" } else { "FAILED" }.into(),
                ),
            ])
        }
        Format::Json => json_text(&json!({
            "expr": expr.to_string(),
            "companion": companion.to_string(),
            "p": p,
            "q": q,
            "decomposition": decomposition,
            "checks": checks,
        })),
    };
    Ok(Rendered {
        text,
        ok: checks.holds,
    })
}

fn census_cmd(max_genus: i64, max_param: i64, format: Format) -> Result<Rendered> {
    let records = census::enumerate(max_genus, max_param)?
        .iter()
        .map(KnotRecord::compute)
        .collect::<Result<Vec<_>>>()?;
    let ok = records
        .iter()
        .all(|r| r.checks.as_ref().is_none_or(|c| c.holds) && (r.s == 0) == r.lspace);

    let text = match format {
        Format::Table => {
            let width = records.iter().map(|r| r.expr.len()).max().unwrap_or(4).max(4);
            let mut out = String::new();
            writeln!(
                out,
                "{:<width$}  {:>5}  {:>5}  {:>5}  {:<7}  {:>9}  checks",
                "expr", "genus", "tau", "s", "L-space", "min slope"
            )
            .unwrap();
            for r in &records {
                let checks = r
                    .checks
                    .as_ref()
                    .map_or("-", |c| if c.holds { "ok" } else { "FAIL" });
                writeln!(
                    out,
                    "{:<width$}  {:>5}  {:>5}  {:>5}  {:<7}  {:>9}  {}",
                    r.expr,
                    r.genus,
                    r.tau,
                    r.s,
                    yes_no(r.lspace),
                    opt(r.min_lspace_slope),
                    checks
                )
                .unwrap();
            }
            let lspace = records.iter().filter(|r| r.lspace).count();
            writeln!(
                out,
                "{} knots, {} L-space knots, {} not",
                records.len(),
                lspace,
                records.len() - lspace
            )
            .unwrap();
            out
        }
        Format::Json => json_text(&records),
    };
    Ok(Rendered { text, ok })
}

/// Parsed form of the `expr` field of every record in a JSON report, for
/// round-trip checks.
pub fn expressions_in_json(text: &str) -> Result<Vec<KnotExpr>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    let mut out = Vec::new();
    let mut stack = vec![&value];
    while let Some(v) = stack.pop() {
        match v {
            serde_json::Value::Array(items) => stack.extend(items.iter().rev()),
            serde_json::Value::Object(map) => {
                if let Some(serde_json::Value::String(s)) = map.get("expr") {
                    out.push(parse_expression(s)?);
                }
            }
            _ => {}
        }
    }
    Ok(out)
}
