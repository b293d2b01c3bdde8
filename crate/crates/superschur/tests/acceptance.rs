//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::One;
use superschur::verify::{self, VerificationReport};
use superschur_core::dual_tableaux::kostka;
use superschur_core::pieri::{kostka_via_ptilde, pieri_product, signed_kostka_via_pieri, Orientation, StripSpec};
use superschur_core::superpoly::int;
use superschur_core::tableaux::{kostka_bar, schur_comb};
use superschur_core::SuperPartition;

fn sp(s: &str) -> SuperPartition {
    s.parse().unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
    /// The failure is exactly the recorded deviation and nothing else.
    known_deviation: bool,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into(), known_deviation: false }
}

fn from_report(r: &VerificationReport) -> Outcome {
    let mut detail = format!("{} checked, {} counterexamples", r.checked, r.counterexamples.len());
    for c in r.counterexamples.iter().take(3) {
        detail.push_str(&format!("\n      {}: expected {} got {}", c.inputs, c.expected, c.got));
    }
    if r.counterexamples.len() > 3 {
        detail.push_str(&format!("\n      ... {} more", r.counterexamples.len() - 3));
    }
    for n in &r.notes {
        detail.push_str(&format!("\n      note: {n}"));
    }
    check(r.passed(), detail)
}

// The stated conventions give <s*_Λ, s_Ω> = (-1)^{m(m-1)/2} δ; every
// mismatch must be a diagonal entry equal to -1.
fn duality() -> Outcome {
    let r = verify::verify_duality(4, 2);
    let mut o = from_report(&r);
    o.known_deviation = !r.passed() && r.notes.len() == 1 && r.counterexamples.iter().all(|c| c.expected == "1" && c.got == "-1");
    o
}

// SBila fails with the stated sign and SBilb mixes degrees; their amended
// forms must hold and nothing else may fail.
fn bilinear() -> Outcome {
    let r = verify::verify_bilinear(3, 3);
    let mut o = from_report(&r);
    let only_ab = r.counterexamples.iter().all(|c| c.inputs.starts_with("SBila[") || c.inputs.starts_with("SBilb["));
    let amended_hold = !r.notes.is_empty() && r.notes.iter().all(|n| n.ends_with(" holds"));
    o.known_deviation = !r.passed() && only_ab && r.counterexamples.len() == 8 && amended_hold;
    o
}

fn golden_expansions() -> Outcome {
    let a = schur_comb(&sp("(1;4)")).unwrap();
    let want_a = ["(1;4)", "(1;3,1)", "(1;2,2)", "(1;2,1,1)", "(1;1,1,1,1)", "(2;3)", "(2;2,1)", "(2;1,1,1)", "(3;2)", "(3;1,1)"];
    let ok_a = a.len() == want_a.len() && want_a.iter().all(|l| a.coefficient(&sp(l)).is_one());
    let b = schur_comb(&sp("(3,0;4,1)")).unwrap();
    let want_b = [
        ("(3,0;4,1)", 1),
        ("(3,0;3,2)", 1),
        ("(3,0;3,1,1)", 2),
        ("(3,0;2,2,1)", 2),
        ("(3,0;2,1,1,1)", 3),
        ("(3,0;1,1,1,1,1)", 4),
        ("(3,1;3,1)", 1),
        ("(3,1;2,2)", 1),
        ("(3,1;2,1,1)", 2),
        ("(3,1;1,1,1,1)", 3),
        ("(3,2;2,1)", 1),
        ("(3,2;1,1,1)", 2),
    ];
    let ok_b = b.len() == want_b.len() && want_b.iter().all(|(l, c)| b.coefficient(&sp(l)) == int(*c));
    check(ok_a && ok_b, format!("s(1;4): {} terms, s(3,0;4,1): {} terms", a.len(), b.len()))
}

fn golden_kostka() -> Outcome {
    let a = kostka(&sp("(8,4;1,1)"), &sp("(6,3;1^5)")).unwrap();
    let b = kostka(&sp("(3,2;1)"), &sp("(2,1;1^3)")).unwrap();
    check(a == 30 && b == 3, format!("K((8,4;1,1),(6,3;1^5)) = {a}, K((3,2;1),(2,1;1^3)) = {b}"))
}

fn golden_pieri() -> Outcome {
    type Case = (&'static str, &'static str, &'static [(i8, &'static str)]);
    let cases: [Case; 6] = [
        ("(2,0;1)", "(;3)", &[(1, "(5,0;1)"), (1, "(4,0;2)"), (1, "(4,0;1,1)"), (1, "(3,0;2,1)"), (1, "(2,0;3,1)"), (1, "(2,0;4)")]),
        ("(2,0;1)", "(3;)", &[(1, "(4,2,0;)"), (1, "(3,2,0;1)")]),
        ("(2,0;1)", "(;1^2)", &[(1, "(2,0;1,1,1)"), (1, "(3,0;1,1)"), (1, "(2,0;2,1)"), (1, "(3,0;2)"), (1, "(2,1;2)")]),
        ("(2,0;1)", "(0;1^2)", &[(1, "(2,1,0;2)")]),
        ("(4,0;3)", "(3;)", &[(1, "(6,4,0;)"), (1, "(5,4,1;)"), (1, "(5,4,0;1)"), (-1, "(4,3,0;3)")]),
        (
            "(1;2,1)",
            "(0;1^3)",
            &[(1, "(1,0;2,1^4)"), (1, "(1,0;3,1^3)"), (1, "(1,0;2^2,1^2)"), (1, "(1,0;3,2,1)"), (1, "(2,0;3,1^2)"), (1, "(2,0;3,2)")],
        ),
    ];
    let mut bad = Vec::new();
    for (l, s, want) in cases {
        let strip = StripSpec::from_superpartition(&sp(s)).unwrap();
        let got: BTreeMap<SuperPartition, i8> = pieri_product(&sp(l), strip).into_iter().map(|t| (t.label, t.sign)).collect();
        let want: BTreeMap<SuperPartition, i8> = want.iter().map(|(c, w)| (sp(w), *c)).collect();
        if got != want {
            bad.push(format!("{l} x {s}"));
        }
    }
    check(bad.is_empty(), if bad.is_empty() { "6 products".to_string() } else { format!("mismatch: {}", bad.join(", ")) })
}

fn kostka_triple() -> Outcome {
    let anchor = (
        kostka(&sp("(3,2;1)"), &sp("(2,1;1^3)")).unwrap(),
        signed_kostka_via_pieri(&sp("(3,2;1)"), &sp("(2,1;1^3)")).unwrap(),
        kostka_via_ptilde(&sp("(3,2;1)"), &sp("(2,1;1^3)")).unwrap(),
    );
    let r = verify::verify_kostka_pieri(4, 2);
    let mut o = from_report(&r);
    o.ok &= anchor == (3, 3, 3);
    o.detail.push_str(&format!("; anchor {anchor:?}"));
    o
}

// Independent classical routines for m = 0.

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Semistandard fillings of `shape` with content `content`, counted by brute force.
fn ssyt_count(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut left = content.to_vec();
    fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            left[v - 1] -= 1;
            grid[r][c] = v;
            total += go(i + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

fn classical_pieri(lambda: &[usize], r: usize, vertical: bool) -> Vec<Vec<usize>> {
    let n: usize = lambda.iter().sum();
    partitions(n + r, n + r)
        .into_iter()
        .filter(|mu| {
            let at = |p: &[usize], i: usize| p.get(i).copied().unwrap_or(0);
            (0..mu.len()).all(|i| {
                let (a, b) = (at(lambda, i), mu[i]);
                b >= a && if vertical { b - a <= 1 } else { i == 0 || b <= at(lambda, i - 1) }
            }) && lambda.len() <= mu.len()
        })
        .collect()
}

fn classical_reduction() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 0..=6 {
        let parts = partitions(n, n);
        for l in &parts {
            let big_l = SuperPartition::new(vec![], l.clone()).unwrap();
            for mu in &parts {
                let big_mu = SuperPartition::new(vec![], mu.clone()).unwrap();
                let want = ssyt_count(l, mu);
                let got = (kostka_bar(&big_l, &big_mu).unwrap(), kostka(&big_l, &big_mu).unwrap());
                checked += 1;
                if got != (want, want) {
                    bad.push(format!("K[{big_l}, {big_mu}] = {got:?}, classical {want}"));
                }
            }
            for r in 1..=3 {
                for vertical in [false, true] {
                    let o = if vertical { Orientation::Column } else { Orientation::Row };
                    let strip = StripSpec::new(r, o, false).unwrap();
                    let mut got: Vec<(i8, SuperPartition)> = pieri_product(&big_l, strip).into_iter().map(|t| (t.sign, t.label)).collect();
                    got.sort();
                    let mut want: Vec<(i8, SuperPartition)> =
                        classical_pieri(l, r, vertical).into_iter().map(|mu| (1, SuperPartition::new(vec![], mu).unwrap())).collect();
                    want.sort();
                    checked += 1;
                    if got != want {
                        bad.push(format!("{big_l} x {strip}"));
                    }
                }
            }
        }
    }
    let mut detail = format!("{checked} checked, {} mismatches", bad.len());
    for b in bad.iter().take(3) {
        detail.push_str(&format!("\n      {b}"));
    }
    check(bad.is_empty(), detail)
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (1, "golden expansions", Duration::from_secs(1), golden_expansions),
        (2, "golden Kostka numbers", Duration::from_secs(5), golden_kostka),
        (3, "golden Pieri products", Duration::from_secs(5), golden_pieri),
        (4, "Pieri vs polynomial product, n<=4 m<=2 r<=3", Duration::from_secs(300), || from_report(&verify::verify_pieri(4, 2, 3))),
        (5, "triangularity and symmetry, n<=5 m<=2", Duration::from_secs(300), || from_report(&verify::verify_triangularity(5, 2))),
        (6, "duality <s*, s> = delta, n<=4 m<=2", Duration::from_secs(600), duality),
        (7, "Kostka triple agreement, n<=4 m<=2", Duration::from_secs(600), kostka_triple),
        (8, "bilinear identities, 2<=k<=3 2<=n<=3", Duration::from_secs(600), bilinear),
        (9, "classical reduction at m=0, n<=6", Duration::from_secs(60), classical_reduction),
    ];
    let mut failed = Vec::new();
    let mut deviations = Vec::new();
    let mut out = std::io::stdout();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = o.ok && in_time;
        let tag = if ok { "PASS" } else { "FAIL" };
        let time_note = match (in_time, !o.ok && o.known_deviation) {
            (false, _) => " [over time limit]",
            (true, true) => " [recorded deviation]",
            (true, false) => "",
        };
        writeln!(out, "[{tag}] {id}. {name}: {} ({:.3}s, limit {}s){time_note}", o.detail, elapsed.as_secs_f64(), limit.as_secs()).unwrap();
        out.flush().unwrap();
        if !ok {
            if in_time && o.known_deviation {
                deviations.push(id);
            } else {
                failed.push(id);
            }
        }
    }
    let passed = 9 - failed.len() - deviations.len();
    writeln!(out, "acceptance: {passed} of 9 criteria pass; recorded deviations {deviations:?}; unexpected failures {failed:?}").unwrap();
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
