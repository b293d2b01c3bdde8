use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use superschur::format::{expansion_json, expansion_lines, matrix_text, tableau_json};
use superschur::verify::{self, VerificationReport};
use superschur_core::dual_tableaux::{dual_schur_comb, dual_schur_expand, enumerate_dual, kostka};
use superschur_core::pieri::{pieri_expansion, StripSpec};
use superschur_core::superpoly::product;
use superschur_core::tableaux::{enumerate, kostka_bar, schur_comb, schur_expand, Query, SuperTableau};
use superschur_core::{Expansion, SuperPartition};

#[derive(Parser)]
#[command(name = "superschur", version, about = "Schur superpolynomials, super tableaux and super Pieri rules")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Schur,
    DualSchur,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial expansion of s_Λ or of the dual s̄_Λ
    Expand {
        family: Family,
        #[arg(value_parser = parse_label)]
        label: SuperPartition,
    },
    /// A single Kostka number (K̄ by default, the dual K with --dual)
    Kostka {
        #[arg(long)]
        dual: bool,
        #[arg(long, value_parser = parse_label)]
        shape: SuperPartition,
        #[arg(long, value_parser = parse_label)]
        content: SuperPartition,
    },
    /// Kostka matrix of degree (n|m), rows indexed by shape
    KostkaMatrix {
        #[arg(long)]
        dual: bool,
        n: usize,
        m: usize,
    },
    /// Enumerate tableaux
    Tableaux {
        #[command(subcommand)]
        action: TableauxAction,
    },
    /// Product s_Λ · s_strip by the Pieri rule
    Pieri {
        #[arg(value_parser = parse_label)]
        label: SuperPartition,
        #[arg(value_parser = parse_strip)]
        strip: StripSpec,
    },
    /// Product of two basis elements, expanded back in the same basis
    Product {
        #[arg(value_parser = parse_label)]
        left: SuperPartition,
        #[arg(value_parser = parse_label)]
        right: SuperPartition,
        #[arg(long, value_enum, default_value = "schur")]
        basis: Family,
    },
    /// Run a verification sweep; exits with 1 if a counterexample is found
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum TableauxAction {
    /// List the tableaux of a shape
    List {
        #[arg(long)]
        dual: bool,
        #[arg(long, value_parser = parse_label)]
        shape: SuperPartition,
        /// Fix the content; circles are then labelled 1..m top to bottom
        #[arg(long, value_parser = parse_label)]
        content: Option<SuperPartition>,
        /// Number of labels when no content is given
        #[arg(long)]
        n_vars: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Pieri,
    Duality,
    HBasis,
    Bilinear,
    KostkaPieri,
    Triangularity,
}

#[derive(Args)]
struct VerifyArgs {
    check: Check,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    max_r: Option<usize>,
}

fn parse_label(s: &str) -> Result<SuperPartition, String> {
    s.parse::<SuperPartition>().map_err(|e| e.to_string())
}

fn parse_strip(s: &str) -> Result<StripSpec, String> {
    StripSpec::from_superpartition(&parse_label(s)?).map_err(|e| e.to_string())
}

enum Outcome {
    Done(String),
    Counterexample(String),
}

fn render(json: bool, text: String, value: Value) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("serializable") + "\n"
    } else {
        text
    }
}

fn expansion_output(json: bool, e: &Expansion, extra: &[(&str, Value)]) -> String {
    render(json, expansion_lines(e), expansion_json(e, extra))
}

fn tableaux_output(json: bool, dual: bool, q: &Query, list: &[SuperTableau]) -> String {
    let mut text: String = list.iter().map(|t| format!("{t}\n\n")).collect();
    text.push_str(&format!("{} tableaux\n", list.len()));
    let value = json!({
        "mode": if dual { "dual" } else { "standard" },
        "shape": q.shape.to_string(),
        "n_vars": q.n_vars,
        "count": list.len(),
        "tableaux": list.iter().map(tableau_json).collect::<Vec<_>>(),
    });
    render(json, text, value)
}

fn report_output(json: bool, r: &VerificationReport) -> Outcome {
    let s = render(json, r.to_text(), serde_json::to_value(r).expect("serializable"));
    if r.passed() {
        Outcome::Done(s)
    } else {
        Outcome::Counterexample(s)
    }
}

fn run(cli: &Cli) -> Result<Outcome, superschur_core::Error> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Expand { family, label } => {
            let (e, name) = match family {
                Family::Schur => (schur_comb(label)?, "schur"),
                Family::DualSchur => (dual_schur_comb(label)?, "dual-schur"),
            };
            let of = json!({"basis": name, "label": label.to_string()});
            expansion_output(json, &e, &[("of", of), ("dual", json!(matches!(family, Family::DualSchur)))])
        }
        Command::Kostka { dual, shape, content } => {
            let v = if *dual { kostka(shape, content)? } else { kostka_bar(shape, content)? };
            let value = json!({"dual": dual, "shape": shape.to_string(), "content": content.to_string(), "value": v});
            render(json, format!("{v}\n"), value)
        }
        Command::KostkaMatrix { dual, n, m } => {
            let labels = SuperPartition::all(*n, *m);
            let mut rows = Vec::with_capacity(labels.len());
            for a in &labels {
                let row: Result<Vec<u64>, _> = labels.iter().map(|b| if *dual { kostka(a, b) } else { kostka_bar(a, b) }).collect();
                rows.push(row?);
            }
            let value = json!({
                "dual": dual,
                "degree": [n, m],
                "labels": labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                "matrix": rows,
            });
            render(json, matrix_text(&labels, &rows), value)
        }
        Command::Tableaux { action: TableauxAction::List { dual, shape, content, n_vars } } => {
            let q = match content {
                Some(c) => Query::with_content(shape, c)?,
                None => Query::all(shape, n_vars.unwrap_or(shape.len().max(shape.m()).max(1))),
            };
            let list = if *dual { enumerate_dual(&q)? } else { enumerate(&q)? };
            tableaux_output(json, *dual, &q, &list)
        }
        Command::Pieri { label, strip } => {
            let e = pieri_expansion(label, *strip);
            let extra = [("product", json!([label.to_string(), strip.to_string()]))];
            expansion_output(json, &e, &extra)
        }
        Command::Product { left, right, basis } => {
            let e = match basis {
                Family::Schur => schur_expand(&product(&schur_comb(left)?, &schur_comb(right)?)?)?,
                Family::DualSchur => dual_schur_expand(&product(&dual_schur_comb(left)?, &dual_schur_comb(right)?)?)?,
            };
            let extra = [("product", json!([left.to_string(), right.to_string()]))];
            expansion_output(json, &e, &extra)
        }
        Command::Verify(a) => {
            let r = match a.check {
                Check::Pieri => verify::verify_pieri(a.max_n.unwrap_or(4), a.max_m.unwrap_or(2), a.max_r.unwrap_or(3)),
                Check::Duality => verify::verify_duality(a.max_n.unwrap_or(4), a.max_m.unwrap_or(2)),
                Check::HBasis => verify::verify_h_expansion(a.max_n.unwrap_or(4), a.max_m.unwrap_or(2)),
                Check::Bilinear => verify::verify_bilinear(a.max_k.unwrap_or(3), a.max_n.unwrap_or(3)),
                Check::KostkaPieri => verify::verify_kostka_pieri(a.max_n.unwrap_or(4), a.max_m.unwrap_or(2)),
                Check::Triangularity => verify::verify_triangularity(a.max_n.unwrap_or(5), a.max_m.unwrap_or(2)),
            };
            return Ok(report_output(json, &r));
        }
    };
    Ok(Outcome::Done(out))
}

fn emit(cli: &Cli, s: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, s),
        None => std::io::stdout().write_all(s.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(Outcome::Done(s)) => (s, ExitCode::SUCCESS),
        Ok(Outcome::Counterexample(s)) => (s, ExitCode::from(1)),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    code
}
