//! Text and JSON renderings of expansions, tableaux and Kostka matrices.

use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::{json, Value};
use superschur_core::tableaux::SuperTableau;
use superschur_core::{Coeff, Expansion, SuperPartition};

/// One signed term, e.g. `+(2,1,0;2)`, `-2(3;1)` or `+1/2(;1,1)`.
pub fn term_text(label: &SuperPartition, c: &Coeff) -> String {
    let sign = if c.is_negative() { '-' } else { '+' };
    let a = c.abs();
    if a.is_one() {
        format!("{sign}{label}")
    } else {
        format!("{sign}{a}{label}")
    }
}

/// Terms in listing order separated by spaces; `0` when empty.
pub fn expansion_text(e: &Expansion) -> String {
    if e.is_empty() {
        return "0".to_string();
    }
    e.terms().map(|(l, c)| term_text(l, c)).collect::<Vec<_>>().join(" ")
}

/// Terms in listing order, one per line.
pub fn expansion_lines(e: &Expansion) -> String {
    if e.is_empty() {
        return "0\n".to_string();
    }
    e.terms().map(|(l, c)| term_text(l, c) + "\n").collect()
}

#[derive(Serialize)]
struct TermJson {
    label: String,
    coeff: String,
}

/// `{"basis", "degree", "terms": [{"label", "coeff"}]}` plus any extra fields.
pub fn expansion_json(e: &Expansion, extra: &[(&str, Value)]) -> Value {
    let terms: Vec<TermJson> = e.terms().map(|(l, c)| TermJson { label: l.to_string(), coeff: c.to_string() }).collect();
    let mut v = json!({
        "basis": e.basis().name(),
        "degree": e.degree().map(|(n, m)| vec![n, m]),
        "terms": terms,
    });
    for (k, x) in extra {
        v[*k] = x.clone();
    }
    v
}

/// Rows of a tableau as entry lists with the circle label last, as in the text rendering.
pub fn tableau_json(t: &SuperTableau) -> Value {
    json!({
        "circle_labels": t.circle_labels,
        "rows": t.rows,
        "ascii": t.to_string(),
    })
}

/// Square matrix with rows and columns in listing order.
pub fn matrix_text(labels: &[SuperPartition], rows: &[Vec<u64>]) -> String {
    let names: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    let width = names.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (name, row) in names.iter().zip(rows) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{name:<width$}  {}\n", cells.join(" ")));
    }
    out
}
