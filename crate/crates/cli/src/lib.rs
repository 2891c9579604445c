//! Query parsing, dispatch and formatting for the `hocalc` binary.

use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use hocalc_core::functor::{evaluate, FUNCTOR_NAMES};
use hocalc_core::homology::{homology, DEFAULT_CUTOFF};
use hocalc_core::homotopy::StandardRules;
use hocalc_core::homotopy::{pi_target, PiResult};
use hocalc_core::parse::{parse_group, parse_space, SpaceTarget};
use hocalc_core::space::{expand_sigma_k_smash, hilton_milnor_pi, FormMultiset};
use hocalc_core::verify::{verify_corpus, verify_groups_with, CheckReport, Status, Summary};
use hocalc_core::{Error, FgAbGroup};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "hocalc", version, about = "Homotopy groups of suspended Eilenberg-MacLane spaces")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Run one query per line of FILE; lines starting with # are skipped.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub verb: Option<Verb>,
}

fn space_arg(s: &str) -> Result<SpaceTarget, String> {
    parse_space(s).map_err(|e| e.to_string())
}

fn group_arg(s: &str) -> Result<FgAbGroup, String> {
    parse_group(s).map_err(|e| e.to_string())
}

fn functor_arg(s: &str) -> Result<String, String> {
    if FUNCTOR_NAMES.iter().any(|(n, _)| *n == s) {
        Ok(s.to_string())
    } else {
        let names: Vec<&str> = FUNCTOR_NAMES.iter().map(|(n, _)| *n).collect();
        Err(format!("expected one of {}", names.join(", ")))
    }
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Verb {
    /// Homotopy group pi_n of a space.
    Pi {
        #[arg(long, value_parser = space_arg)]
        space: SpaceTarget,
        #[arg(long)]
        n: u32,
    },
    /// Reduced integral homology up to degree k.
    Homology {
        #[arg(long, value_parser = space_arg)]
        space: SpaceTarget,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        k: u32,
    },
    /// Evaluate a functor on one or two groups.
    Functor {
        #[arg(long, value_parser = functor_arg)]
        name: String,
        #[arg(long, value_parser = group_arg, required = true)]
        group: Vec<FgAbGroup>,
    },
    /// Split Sigma K(A,1) /\ K(A,1) into smash forms, optionally with the
    /// Hilton-Milnor summands for pi_n.
    Expand {
        #[arg(long, value_parser = group_arg)]
        group: FgAbGroup,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run the cross-checks, on one group or on the standard corpus.
    Verify {
        #[arg(long, value_parser = group_arg)]
        group: Option<FgAbGroup>,
    },
}

fn quote(s: &str) -> String {
    shlex::try_quote(s).map(|q| q.into_owned()).unwrap_or_else(|_| s.to_string())
}

/// Canonical command-line form; parsing it back gives the same verb.
impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verb::Pi { space, n } => write!(f, "pi --space {} --n {n}", quote(&space.to_string())),
            Verb::Homology { space, k } => write!(f, "homology --space {} --k {k}", quote(&space.to_string())),
            Verb::Functor { name, group } => {
                write!(f, "functor --name {name}")?;
                for g in group {
                    write!(f, " --group {}", quote(&g.to_string()))?;
                }
                Ok(())
            }
            Verb::Expand { group, n } => {
                write!(f, "expand --group {}", quote(&group.to_string()))?;
                if let Some(n) = n {
                    write!(f, " --n {n}")?;
                }
                Ok(())
            }
            Verb::Verify { group: Some(g) } => write!(f, "verify --group {}", quote(&g.to_string())),
            Verb::Verify { group: None } => write!(f, "verify"),
        }
    }
}

/// A single parsed query.
#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub verb: Verb,
    pub format: Format,
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verb)?;
        if self.format == Format::Json {
            write!(f, " --format json")?;
        }
        Ok(())
    }
}

impl Query {
    /// Parses a query line such as `pi --space "Sigma K(Z/2,1)" --n 4`.
    pub fn parse_line(line: &str, default_format: Format) -> Result<Query, String> {
        let words = shlex::split(line).ok_or_else(|| format!("unbalanced quotes in {line:?}"))?;
        let cli = Cli::try_parse_from(std::iter::once("hocalc".to_string()).chain(words)).map_err(|e| e.to_string())?;
        let format = if line.contains("--format") { cli.format } else { default_format };
        match (cli.verb, cli.batch) {
            (Some(verb), None) => Ok(Query { verb, format }),
            (_, Some(_)) => Err("--batch cannot be nested".into()),
            (None, None) => Err("missing verb".into()),
        }
    }
}

/// What a query printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }

    pub fn usage(message: impl fmt::Display) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {message}\n"), code: EXIT_USAGE }
    }
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serialises");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PiJson<'a> {
    query: String,
    group: &'a FgAbGroup,
    rules: &'a [String],
    flags: Vec<String>,
    citations: &'a [String],
}

fn pi_output(q: &Query, space: &SpaceTarget, n: u32, r: &PiResult) -> String {
    match q.format {
        Format::Json => to_json(&PiJson {
            query: q.verb.to_string(),
            group: &r.group,
            rules: &r.rules_used,
            flags: r.notes.iter().map(|n| n.to_string()).collect(),
            citations: &r.citations,
        }),
        Format::Text => {
            let mut s = format!("pi_{n}({space}) = {}\n", r.group);
            s += &format!("rules: {}\n", r.rules_used.join(", "));
            if !r.notes.is_empty() {
                let flags: Vec<String> = r.notes.iter().map(|n| n.to_string()).collect();
                s += &format!("flags: {}\n", flags.join(", "));
            }
            s
        }
    }
}

fn forms_json(w: &FormMultiset) -> Vec<serde_json::Value> {
    w.iter().map(|(f, k)| json!({ "form": f.to_string(), "count": k, "bottom": f.bottom() })).collect()
}

fn report_json(r: &CheckReport) -> serde_json::Value {
    json!({
        "id": r.id,
        "inputs": r.inputs,
        "expected": r.expected,
        "actual": r.actual,
        "status": r.status,
        "citation": r.citation,
    })
}

fn verify_output(q: &Query, summary: &Summary, all: bool) -> Output {
    let shown: Vec<&CheckReport> = summary.reports.iter().filter(|r| all || r.status != Status::Pass).collect();
    let stdout = match q.format {
        Format::Json => to_json(&json!({
            "query": q.verb.to_string(),
            "checks": summary.reports.len(),
            "passed": summary.passed,
            "flagged": summary.flagged,
            "failed": summary.failed,
            "reports": shown.iter().map(|r| report_json(r)).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for r in &shown {
                s += &format!("{r}\n");
            }
            s + &format!("{summary}\n")
        }
    };
    Output { stdout, stderr: String::new(), code: summary.exit_code() }
}

/// Library errors are range or input problems, so they share the usage exit code.
fn fail(e: Error) -> Output {
    Output::usage(e)
}

/// Runs one query.
pub fn run(q: &Query) -> Output {
    match &q.verb {
        Verb::Pi { space, n } => match pi_target(space, *n) {
            Ok(r) => Output::ok(pi_output(q, space, *n, &r)),
            Err(e) => fail(e),
        },
        Verb::Homology { space, k } => {
            let h = space.to_expr().and_then(|x| homology(&x, *k));
            match h {
                Ok(h) => Output::ok(match q.format {
                    Format::Json => to_json(&json!({
                        "query": q.verb.to_string(),
                        "reduced": h.degrees().map(|(d, g)| json!({ "degree": d, "group": g })).collect::<Vec<_>>(),
                    })),
                    Format::Text => h.degrees().map(|(d, g)| format!("H~_{d}({space}) = {g}\n")).collect(),
                }),
                Err(e) => fail(e),
            }
        }
        Verb::Functor { name, group } => match evaluate(name, group) {
            Ok(v) => Output::ok(match q.format {
                Format::Json => to_json(&json!({
                    "query": q.verb.to_string(),
                    "group": v.group,
                    "method": v.method,
                })),
                Format::Text => {
                    let args: Vec<String> = group.iter().map(|g| g.to_string()).collect();
                    format!("{name}({}) = {}\n", args.join(", "), v.group)
                }
            }),
            Err(e) => fail(e),
        },
        Verb::Expand { group, n } => {
            let w = expand_sigma_k_smash(group);
            let summands = match n.map(|n| hilton_milnor_pi(&w, n)).transpose() {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            Output::ok(match q.format {
                Format::Json => {
                    let mut v = json!({ "query": q.verb.to_string(), "forms": forms_json(&w) });
                    if let Some(s) = &summands {
                        v["summands"] = serde_json::Value::Array(forms_json(s));
                    }
                    to_json(&v)
                }
                Format::Text => {
                    let mut s = format!("Sigma K({group},1) /\\ K({group},1) splits as:\n{w}");
                    if let (Some(t), Some(n)) = (&summands, n) {
                        s += &format!("Hilton-Milnor summands for pi_{n}:\n{t}");
                    }
                    s
                }
            })
        }
        Verb::Verify { group: Some(g) } => {
            verify_output(q, &verify_groups_with(&StandardRules, std::slice::from_ref(g)), true)
        }
        Verb::Verify { group: None } => verify_output(q, &verify_corpus(), false),
    }
}

/// Runs every non-empty, non-comment line; results come back in input order.
pub fn run_batch(text: &str, format: Format) -> Vec<Output> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    lines
        .par_iter()
        .map(|line| match Query::parse_line(line, format) {
            Ok(q) => run(&q),
            Err(e) => Output::usage(format!("{line}: {}", e.trim_end())),
        })
        .collect()
}
