//! The super Pieri rule: multiplying a diagram by a one-row or one-column
//! strip (Rule 6), and the iterated row products `P°(Λ)` and `P̃°(Λ)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::superpartition::{Diagram, DiagramRow, SuperPartition};
use crate::superpoly::{int, Basis, Expansion};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

/// One of the four strips `(;r)`, `(r;)`, `(;1^r)`, `(0;1^r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StripSpec {
    pub length: usize,
    pub orientation: Orientation,
    pub fermionic: bool,
}

impl StripSpec {
    pub fn new(length: usize, orientation: Orientation, fermionic: bool) -> Result<Self> {
        if !fermionic && length == 0 {
            return Err(Error::NotAStrip(String::from("(;)")));
        }
        Ok(StripSpec { length, orientation, fermionic })
    }

    /// Reads a strip from its superpartition. A single box `(;1)` is taken as a row.
    pub fn from_superpartition(l: &SuperPartition) -> Result<Self> {
        let bad = || Error::NotAStrip(l.to_string());
        match (l.fermionic(), l.bosonic()) {
            ([], [r]) => Ok(StripSpec { length: *r, orientation: Orientation::Row, fermionic: false }),
            ([], b) if !b.is_empty() && b.iter().all(|&p| p == 1) => {
                Ok(StripSpec { length: b.len(), orientation: Orientation::Column, fermionic: false })
            }
            ([r], []) => Ok(StripSpec { length: *r, orientation: Orientation::Row, fermionic: true }),
            ([0], b) if b.iter().all(|&p| p == 1) => Ok(StripSpec { length: b.len(), orientation: Orientation::Column, fermionic: true }),
            _ => Err(bad()),
        }
    }

    pub fn superpartition(&self) -> SuperPartition {
        let (f, b) = match (self.orientation, self.fermionic) {
            (Orientation::Row, false) => (vec![], vec![self.length]),
            (Orientation::Row, true) => (vec![self.length], vec![]),
            (Orientation::Column, false) => (vec![], vec![1; self.length]),
            (Orientation::Column, true) => (vec![0], vec![1; self.length]),
        };
        SuperPartition::new(f, b).expect("strip labels are valid")
    }
}

impl fmt::Display for StripSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.length;
        match (self.orientation, self.fermionic) {
            (Orientation::Row, false) => write!(f, "(;{r})"),
            (Orientation::Row, true) => write!(f, "({r};)"),
            (Orientation::Column, false) => write!(f, "(;1^{r})"),
            (Orientation::Column, true) => write!(f, "(0;1^{r})"),
        }
    }
}

/// A signed term `±s_Ω` of a Pieri product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PieriTerm {
    pub sign: i8,
    pub label: SuperPartition,
}

/// One way of inserting a row strip into a diagram.
#[derive(Clone, Debug)]
struct RowInsertion {
    /// new row lengths (squares only), trailing empty rows trimmed
    star: Vec<usize>,
    /// new row of each old circle, old circles listed top to bottom
    moved: Vec<usize>,
    new_circle: Option<usize>,
    added: Vec<(usize, usize)>,
}

impl RowInsertion {
    fn circle_rows(&self) -> Vec<usize> {
        let mut rows = self.moved.clone();
        rows.extend(self.new_circle);
        rows.sort_unstable();
        rows
    }

    fn diagram(&self) -> Diagram {
        let circles = self.circle_rows();
        let len = self.star.len().max(circles.last().map_or(0, |r| r + 1));
        let rows = (0..len).map(|i| DiagramRow { boxes: self.star.get(i).copied().unwrap_or(0), circle: circles.contains(&i) }).collect();
        Diagram { rows }
    }

    /// Number of circles strictly below the added one.
    fn circles_below_new(&self) -> usize {
        self.new_circle.map_or(0, |n| self.moved.iter().filter(|&&r| r > n).count())
    }
}

/// All insertions of a row strip of `r` squares (plus a circle if `fermionic`)
/// into the diagram with square rows `star` and circles in rows `circles`.
fn row_insertions(star: &[usize], circles: &[usize], r: usize, fermionic: bool) -> Vec<RowInsertion> {
    let len = star.len().max(circles.last().map_or(0, |c| c + 1)) + 2;
    let old: Vec<usize> = (0..len).map(|i| star.get(i).copied().unwrap_or(0)).collect();
    let mut out = Vec::new();
    let mut new = old.clone();
    horizontal_strips(&old, 0, r, &mut new, &mut |new| {
        let added: Vec<(usize, usize)> = (0..len).flat_map(|i| (old[i]..new[i]).map(move |c| (i, c))).collect();
        let top_square = added.iter().map(|&(i, _)| i).min();
        // choices for each old circle: stay in its row or drop one row
        let options: Vec<Vec<usize>> = circles
            .iter()
            .map(|&i| {
                let mut o = Vec::new();
                let grown = new[i] > old[i];
                if !grown || i == 0 || new[i] < old[i - 1] {
                    o.push(i);
                }
                if new[i + 1] == old[i] {
                    o.push(i + 1);
                }
                o
            })
            .collect();
        let mut moved = Vec::new();
        choose(&options, &mut moved, &mut |moved| {
            let new_positions: Vec<Option<usize>> =
                if fermionic { (0..len).filter(|&i| top_square.is_none_or(|t| i <= t)).map(Some).collect() } else { vec![None] };
            for nc in new_positions {
                let ins = RowInsertion { star: new.to_vec(), moved: moved.to_vec(), new_circle: nc, added: added.clone() };
                if admissible(&ins.star, &ins.circle_rows()) {
                    out.push(ins);
                }
            }
        });
    });
    for ins in &mut out {
        while ins.star.last() == Some(&0) {
            ins.star.pop();
        }
    }
    out
}

fn horizontal_strips(old: &[usize], i: usize, left: usize, new: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == old.len() {
        if left == 0 {
            f(new);
        }
        return;
    }
    let cap = if i == 0 { old[0] + left } else { old[i - 1] };
    for v in old[i]..=cap.min(old[i] + left) {
        new[i] = v;
        horizontal_strips(old, i + 1, left - (v - old[i]), new, f);
    }
    new[i] = old[i];
}

fn choose(options: &[Vec<usize>], cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == options.len() {
        f(cur);
        return;
    }
    for &o in &options[cur.len()] {
        cur.push(o);
        choose(options, cur, f);
        cur.pop();
    }
}

/// At most one circle per row and column, with `Ω⊛` a partition.
fn admissible(star: &[usize], circle_rows: &[usize]) -> bool {
    if circle_rows.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    circle_rows.iter().all(|&i| i == 0 || star[i - 1] > star[i])
}

fn split_diagram(d: &Diagram) -> (Vec<usize>, Vec<usize>) {
    let star = d.rows.iter().map(|r| r.boxes).collect();
    let circles = (0..d.rows.len()).filter(|&i| d.rows[i].circle).collect();
    (star, circles)
}

/// `Λ ⊗ Γ` for a one-row or one-column strip `Γ`, as signed terms in listing order.
pub fn pieri_product(lambda: &SuperPartition, strip: StripSpec) -> Vec<PieriTerm> {
    let mut terms: BTreeMap<SuperPartition, i8> = BTreeMap::new();
    match strip.orientation {
        Orientation::Row => {
            let (star, circles) = split_diagram(&lambda.diagram());
            for ins in row_insertions(&star, &circles, strip.length, strip.fermionic) {
                let label = ins.diagram().to_superpartition();
                let sign = if ins.circles_below_new() % 2 == 0 { 1 } else { -1 };
                let prev = terms.insert(label, sign);
                debug_assert!(prev.is_none_or(|p| p == sign));
            }
        }
        Orientation::Column => {
            let (star, circles) = split_diagram(&lambda.diagram().conjugate());
            for ins in row_insertions(&star, &circles, strip.length, strip.fermionic) {
                let conj = ins.diagram();
                let omega = conj.conjugate();
                let sign = match ins.new_circle {
                    Some(row) => {
                        // the added circle sits in column `row` of Ω, at row conj[row].boxes
                        let new_row = conj.rows[row].boxes;
                        let below = omega.rows.iter().skip(new_row + 1).filter(|r| r.circle).count();
                        if below % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                    None => 1,
                };
                let prev = terms.insert(omega.to_superpartition(), sign);
                debug_assert!(prev.is_none_or(|p| p == sign));
            }
        }
    }
    terms.into_iter().rev().map(|(label, sign)| PieriTerm { sign, label }).collect()
}

/// [`pieri_product`] as an expansion in the Schur basis.
pub fn pieri_expansion(lambda: &SuperPartition, strip: StripSpec) -> Expansion {
    let (n, m) = lambda.degree();
    let extra = if strip.fermionic { 1 } else { 0 };
    let mut e = Expansion::with_degree(Basis::Schur, (n + strip.length, m + extra));
    for t in pieri_product(lambda, strip) {
        e.add_term(t.label, int(t.sign as i64)).expect("degree matches");
    }
    e
}

/// A diagram built by successive row multiplications: each square carries the
/// mark of the strip that added it and each circle the label of its strip.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieriTableau {
    /// marks of the squares, row by row
    pub marks: Vec<Vec<u32>>,
    /// circle label per row (`None` for rows without a circle)
    pub circles: Vec<Option<u32>>,
    /// product of the Pieri signs met along the way
    pub sign: i8,
}

impl PieriTableau {
    pub fn empty() -> Self {
        PieriTableau { marks: Vec::new(), circles: Vec::new(), sign: 1 }
    }

    pub fn diagram(&self) -> Diagram {
        let rows = self.marks.iter().zip(&self.circles).map(|(m, c)| DiagramRow { boxes: m.len(), circle: c.is_some() }).collect();
        Diagram { rows }
    }

    pub fn shape(&self) -> SuperPartition {
        self.diagram().to_superpartition()
    }

    /// Circle labels read top to bottom.
    pub fn circle_labels(&self) -> Vec<u32> {
        self.circles.iter().flatten().copied().collect()
    }

    /// Multiplies by the row strip `(;r)` or `(r;)` whose cells get `mark`.
    pub fn insert_row(&self, r: usize, fermionic: bool, mark: u32) -> Vec<PieriTableau> {
        let (star, circle_rows) = split_diagram(&self.diagram());
        let labels = self.circle_labels();
        let mut out = Vec::new();
        for ins in row_insertions(&star, &circle_rows, r, fermionic) {
            let len = ins.diagram().rows.len();
            let mut marks: Vec<Vec<u32>> = (0..len).map(|i| self.marks.get(i).cloned().unwrap_or_default()).collect();
            for &(i, _) in &ins.added {
                marks[i].push(mark);
            }
            let mut circles = vec![None; len];
            for (k, &row) in ins.moved.iter().enumerate() {
                circles[row] = Some(labels[k]);
            }
            if let Some(row) = ins.new_circle {
                circles[row] = Some(mark);
            }
            let step = if ins.circles_below_new() % 2 == 0 { 1 } else { -1 };
            out.push(PieriTableau { marks, circles, sign: self.sign * step });
        }
        out
    }

    /// ASCII rendering in the tableau style: marks, then `(k)` for a circle.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for (m, c) in self.marks.iter().zip(&self.circles) {
            let mut parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            if let Some(c) = c {
                parts.push(format!("({c})"));
            }
            lines.push(parts.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for PieriTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Iterated product of row strips `(part, fermionic, mark)` from left to right.
pub fn multi_row_product(rows: &[RowFactor]) -> Vec<PieriTableau> {
    let mut layer: BTreeSet<PieriTableau> = BTreeSet::new();
    layer.insert(PieriTableau::empty());
    for &(r, fermionic, mark) in rows {
        let mut next = BTreeSet::new();
        for t in &layer {
            next.extend(t.insert_row(r, fermionic, mark));
        }
        layer = next;
    }
    layer.into_iter().collect()
}

/// A row strip `(part, fermionic, mark)`.
type RowFactor = (usize, bool, u32);

fn row_factors(lambda: &SuperPartition) -> (Vec<RowFactor>, Vec<RowFactor>) {
    let m = lambda.m();
    let fermionic = lambda.fermionic().iter().enumerate().map(|(k, &a)| (a, true, k as u32 + 1)).collect();
    let bosonic = lambda.bosonic().iter().enumerate().map(|(j, &s)| (s, false, (m + j) as u32 + 1)).collect();
    (fermionic, bosonic)
}

/// `P°(Λ)`: bosonic rows `(;Λ_{m+1})…(;Λ_ℓ)` first, then `(Λ_1;)…(Λ_m;)`.
/// The strip of part `Λ_i` is marked `i`.
pub fn pieri_multi_p(lambda: &SuperPartition) -> Vec<PieriTableau> {
    let (f, b) = row_factors(lambda);
    multi_row_product(&[b, f].concat())
}

/// `P̃°(Λ)`: fermionic rows first, then bosonic rows.
pub fn pieri_multi_ptilde(lambda: &SuperPartition) -> Vec<PieriTableau> {
    let (f, b) = row_factors(lambda);
    multi_row_product(&[f, b].concat())
}

/// `(-1)^{inv}` for the top-to-bottom sequence of circle labels.
pub fn inv_sign(t: &PieriTableau) -> i8 {
    let labels = t.circle_labels();
    let mut inv = 0;
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if labels[i] > labels[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn same_degree(a: &SuperPartition, b: &SuperPartition) -> Result<()> {
    if a.degree() != b.degree() {
        let (x, y) = a.degree();
        let (z, w) = b.degree();
        return Err(Error::DegreeMismatch(x, y, z, w));
    }
    Ok(())
}

/// `Σ (-1)^{inv(T)}` over the tableaux of `P°(Ω)` whose shape is `Λ`.
pub fn signed_kostka_via_pieri(shape: &SuperPartition, content: &SuperPartition) -> Result<i64> {
    same_degree(shape, content)?;
    Ok(pieri_multi_p(content).iter().filter(|t| t.shape() == *shape).map(|t| inv_sign(t) as i64).sum())
}

/// Number of tableaux of `P̃°(Ω)` whose shape is `Λ`.
pub fn kostka_via_ptilde(shape: &SuperPartition, content: &SuperPartition) -> Result<u64> {
    same_degree(shape, content)?;
    Ok(pieri_multi_ptilde(content).iter().filter(|t| t.shape() == *shape).count() as u64)
}
