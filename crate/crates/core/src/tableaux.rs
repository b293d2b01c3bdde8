//! Super tableaux (Rules 1–5) and the combinatorial Schur superpolynomials `s_Λ`.
//!
//! The filling engine here is shared with [`crate::dual_tableaux`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::superpartition::{Diagram, SuperPartition};
use crate::superpoly::{int, Basis, Expansion, SuperMonomial, SuperPolynomial};
use crate::{Error, Result};

/// Which set of filling rules a tableau obeys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Rules 1–5: fermionic rows are frozen to their circle label.
    Standard,
    /// Rules 1, 7, 8, 9.
    Dual,
}

/// A filled diagram. `rows[i]` lists the box entries of diagram row `i`;
/// `circle_labels[k]` labels the `k`-th circle from the top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperTableau {
    pub shape: SuperPartition,
    pub circle_labels: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

impl SuperTableau {
    /// Number of boxes carrying `label` (circles excluded).
    pub fn count(&self, label: u32) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == label).count()
    }

    /// `ζ^T = θ_{i_1}…θ_{i_m} x^T` as a signed term in `n_vars` variables.
    pub fn monomial(&self, n_vars: usize) -> Option<(i8, SuperMonomial)> {
        let mut exps = vec![0u32; n_vars];
        for &e in self.rows.iter().flatten() {
            exps[e as usize - 1] += 1;
        }
        let thetas = self.circle_labels.iter().map(|&l| (l - 1) as u8).collect();
        SuperMonomial::new(thetas, exps)
    }
}

/// ASCII rendering: one diagram row per line, entries separated by spaces,
/// a circle labelled `k` shown as `(k)` at the end of its row.
impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let diagram = self.shape.diagram();
        let mut k = 0;
        for (i, row) in diagram.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let mut parts: Vec<String> = self.rows[i].iter().map(|e| format!("{e}")).collect();
            if row.circle {
                parts.push(format!("({})", self.circle_labels[k]));
                k += 1;
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

/// Total order on labels induced by a choice of circle labels.
#[derive(Clone, Debug)]
pub struct EffectiveOrder {
    n_vars: usize,
    circles: Vec<u32>,
    mode: Mode,
}

impl EffectiveOrder {
    pub fn new(circles: &[u32], n_vars: usize, mode: Mode) -> Result<Self> {
        check_circles(circles, n_vars)?;
        Ok(EffectiveOrder { n_vars, circles: circles.to_vec(), mode })
    }

    /// Standard: `i_1 > i_2 > … > i_m >` the rest in natural order.
    /// Dual: `i_m > … > i_1 >` the rest in natural order.
    pub fn rank(&self, label: u32) -> u32 {
        let m = self.circles.len() as u32;
        match self.circles.iter().position(|&c| c == label) {
            Some(k) => match self.mode {
                Mode::Standard => self.n_vars as u32 + (m - k as u32),
                Mode::Dual => self.n_vars as u32 + k as u32 + 1,
            },
            None => label,
        }
    }

    /// All labels `1..=N`, largest first.
    pub fn descending(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = (1..=self.n_vars as u32).collect();
        labels.sort_by_key(|&l| core::cmp::Reverse(self.rank(l)));
        labels
    }
}

fn check_circles(circles: &[u32], n_vars: usize) -> Result<()> {
    for (i, &c) in circles.iter().enumerate() {
        if c == 0 || c as usize > n_vars {
            return Err(Error::IndexOutOfRange { index: c as usize, max: n_vars });
        }
        if circles[..i].contains(&c) {
            return Err(Error::InvalidQuery(format!("circle label {c} repeats")));
        }
    }
    Ok(())
}

/// A rule violated by a filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Circle labels repeat or leave `1..=N`, or the filling has the wrong shape.
    Rule1,
    /// A fermionic row holds something other than its circle label.
    Rule3 { row: usize },
    /// `i_k` sits in a bosonic row at or left of its circle's column.
    Rule4a { row: usize, col: usize },
    /// Too many `i_k` in bosonic rows, or too many singlets.
    Rule4b { k: usize },
    /// Rows not weakly increasing or columns not strictly increasing.
    Rule5 { row: usize, col: usize },
    /// Dual: `i_k` sits at or right of its circle's column.
    Rule8a { row: usize, col: usize },
    /// Dual: not enough smaller circle labels above/right of a circle.
    Rule8b { k: usize },
    /// Dual: the right-to-left reading word breaks the counting condition.
    Rule8c,
    /// Dual: rows not weakly increasing or columns not strictly increasing.
    Rule9 { row: usize, col: usize },
}

/// Maximum number of doublets `(i_k above, i_{k-1} strictly below)` in
/// bosonic rows, given the sorted row indices of each label.
fn doublets(upper: &[usize], lower: &[usize]) -> usize {
    let (mut i, mut matched) = (0, 0);
    for &r in lower {
        if i < upper.len() && upper[i] < r {
            i += 1;
            matched += 1;
        }
    }
    matched
}

/// `(doublets, singlets)` of `i_k` (1-based `k`) in a standard tableau.
pub fn doublet_singlet_counts(t: &SuperTableau, k: usize) -> Result<(usize, usize)> {
    let m = t.circle_labels.len();
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, max: m });
    }
    let diagram = t.shape.diagram();
    let rows_of = |label: u32| -> Vec<usize> {
        let mut v = Vec::new();
        for (r, row) in t.rows.iter().enumerate() {
            if !diagram.rows[r].circle {
                v.extend(row.iter().filter(|&&e| e == label).map(|_| r));
            }
        }
        v
    };
    let upper = rows_of(t.circle_labels[k - 1]);
    let d = if k >= 2 { doublets(&upper, &rows_of(t.circle_labels[k - 2])) } else { 0 };
    Ok((d, upper.len() - d))
}

fn shape_matches(t: &SuperTableau, diagram: &Diagram, n_vars: usize) -> bool {
    t.rows.len() == diagram.rows.len()
        && t.rows.iter().zip(&diagram.rows).all(|(r, d)| r.len() == d.boxes)
        && t.rows.iter().flatten().all(|&e| e >= 1 && e as usize <= n_vars)
        && t.circle_labels.len() == t.shape.m()
        && check_circles(&t.circle_labels, n_vars).is_ok()
}

/// Checks a filling against Rules 1–5 and lists every violation found.
pub fn validate(t: &SuperTableau, n_vars: usize) -> Vec<Violation> {
    let diagram = t.shape.diagram();
    if !shape_matches(t, &diagram, n_vars) {
        return vec![Violation::Rule1];
    }
    let order = EffectiveOrder::new(&t.circle_labels, n_vars, Mode::Standard).expect("checked");
    let mut out = Vec::new();
    let circle_rows: Vec<usize> = (0..diagram.rows.len()).filter(|&r| diagram.rows[r].circle).collect();
    for (k, &r) in circle_rows.iter().enumerate() {
        if t.rows[r].iter().any(|&e| e != t.circle_labels[k]) {
            out.push(Violation::Rule3 { row: r + 1 });
        }
    }
    let circle_col: Vec<usize> = t.shape.fermionic().iter().map(|a| a + 1).collect();
    for (r, row) in t.rows.iter().enumerate() {
        if diagram.rows[r].circle {
            continue;
        }
        for (c, &e) in row.iter().enumerate() {
            if let Some(k) = t.circle_labels.iter().position(|&l| l == e) {
                if c < circle_col[k] {
                    out.push(Violation::Rule4a { row: r + 1, col: c + 1 });
                }
            }
            let left_ok = c == 0 || order.rank(row[c - 1]) <= order.rank(e);
            let above = (0..r).rev().find(|&a| !diagram.rows[a].circle);
            let above_ok = above.is_none_or(|a| order.rank(t.rows[a][c]) < order.rank(e));
            if !left_ok || !above_ok {
                out.push(Violation::Rule5 { row: r + 1, col: c + 1 });
            }
        }
    }
    for k in 1..=t.shape.m() {
        let (ck0, ckk1) = t.shape.column_counts(k).expect("k in range");
        let (d, s) = doublet_singlet_counts(t, k).expect("k in range");
        if d + s > ck0 || s > ckk1 {
            out.push(Violation::Rule4b { k });
        }
    }
    out
}

/// What to enumerate: all fillings of `shape` with labels in `1..=n_vars`,
/// optionally with fixed circle labels and a fixed label multiplicity.
#[derive(Clone, Debug)]
pub struct Query {
    pub shape: SuperPartition,
    pub n_vars: usize,
    pub circle_labels: Option<Vec<u32>>,
    /// `content[j]` = number of boxes labelled `j + 1`.
    pub content: Option<Vec<usize>>,
}

impl Query {
    pub fn all(shape: &SuperPartition, n_vars: usize) -> Self {
        Query { shape: shape.clone(), n_vars, circle_labels: None, content: None }
    }

    /// Circles labelled `1..m` top to bottom; label `k ≤ m` fills `Ω^a_k`
    /// boxes and label `m + j` fills `Ω^s_j` boxes.
    pub fn with_content(shape: &SuperPartition, content: &SuperPartition) -> Result<Self> {
        if shape.degree() != content.degree() {
            let (a, b) = shape.degree();
            let (c, d) = content.degree();
            return Err(Error::DegreeMismatch(a, b, c, d));
        }
        let counts: Vec<usize> = content.parts().collect();
        let m = shape.m();
        Ok(Query {
            shape: shape.clone(),
            n_vars: counts.len().max(m),
            circle_labels: Some((1..=m as u32).collect()),
            content: Some(counts),
        })
    }
}

pub(crate) struct Engine {
    mode: Mode,
    n_vars: usize,
    circles: Vec<u32>,
    rank: Vec<u32>,
    circle_of: Vec<Option<usize>>,
    circle_col: Vec<usize>,
    circle_row: Vec<usize>,
    /// cells to fill, row-major: (row, col)
    cells: Vec<(usize, usize)>,
    above: Vec<Option<(usize, usize)>>,
    row_end: Vec<bool>,
    fermionic_row: Vec<bool>,
    limits: Vec<(usize, usize)>,
    budget: Option<Vec<i64>>,
    shape: SuperPartition,
}

impl Engine {
    fn new(mode: Mode, shape: &SuperPartition, n_vars: usize, circles: &[u32], content: Option<&[usize]>) -> Result<Option<Self>> {
        check_circles(circles, n_vars)?;
        if circles.len() != shape.m() {
            return Err(Error::InvalidQuery(format!("{} circle labels for {} circles", circles.len(), shape.m())));
        }
        let diagram = shape.diagram();
        let order = EffectiveOrder::new(circles, n_vars, mode)?;
        let rank = (0..=n_vars as u32).map(|l| if l == 0 { 0 } else { order.rank(l) }).collect();
        let mut circle_of = vec![None; n_vars + 1];
        for (k, &c) in circles.iter().enumerate() {
            circle_of[c as usize] = Some(k);
        }
        let fermionic_row: Vec<bool> = diagram.rows.iter().map(|r| r.circle).collect();
        let circle_row: Vec<usize> = (0..diagram.rows.len()).filter(|&r| fermionic_row[r]).collect();
        let mut cells = Vec::new();
        let mut above = Vec::new();
        let mut row_end = Vec::new();
        for (r, row) in diagram.rows.iter().enumerate() {
            if mode == Mode::Standard && row.circle {
                continue;
            }
            for c in 0..row.boxes {
                cells.push((r, c));
                let a = match mode {
                    Mode::Standard => (0..r).rev().find(|&a| !fermionic_row[a]),
                    Mode::Dual => r.checked_sub(1),
                };
                above.push(a.map(|a| (a, c)));
                row_end.push(c + 1 == row.boxes);
            }
        }
        let limits = (1..=shape.m()).map(|k| shape.column_counts(k).expect("k in range")).collect();
        let mut budget = None;
        if let Some(content) = content {
            let mut b = vec![0i64; n_vars + 1];
            for (j, &c) in content.iter().enumerate() {
                if j + 1 > n_vars {
                    if c > 0 {
                        return Ok(None);
                    }
                    continue;
                }
                b[j + 1] = c as i64;
            }
            if mode == Mode::Standard {
                for (k, &r) in circle_row.iter().enumerate() {
                    b[circles[k] as usize] -= diagram.rows[r].boxes as i64;
                }
            }
            if b.iter().any(|&x| x < 0) || b.iter().sum::<i64>() != cells.len() as i64 {
                return Ok(None);
            }
            budget = Some(b);
        }
        Ok(Some(Engine {
            mode,
            n_vars,
            circles: circles.to_vec(),
            rank,
            circle_of,
            circle_col: shape.fermionic().iter().map(|a| a + 1).collect(),
            circle_row,
            cells,
            above,
            row_end,
            fermionic_row,
            limits,
            budget,
            shape: shape.clone(),
        }))
    }

    fn run(mut self, f: &mut dyn FnMut(&SuperTableau)) {
        let diagram = self.shape.diagram();
        let mut grid: Vec<Vec<u32>> = diagram.rows.iter().map(|r| vec![0; r.boxes]).collect();
        if self.mode == Mode::Standard {
            for (k, &r) in self.circle_row.iter().enumerate() {
                grid[r].fill(self.circles[k]);
            }
        }
        let mut used = vec![0usize; self.shape.m()];
        let mut scans = vec![vec![0usize; self.shape.m()]];
        let mut budget = self.budget.take();
        self.fill(0, &mut grid, &mut used, &mut scans, &mut budget, f);
    }

    fn fill(
        &self,
        i: usize,
        grid: &mut Vec<Vec<u32>>,
        used: &mut Vec<usize>,
        scans: &mut Vec<Vec<usize>>,
        budget: &mut Option<Vec<i64>>,
        f: &mut dyn FnMut(&SuperTableau),
    ) {
        if i == self.cells.len() {
            if self.leaf_ok(grid) {
                f(&SuperTableau { shape: self.shape.clone(), circle_labels: self.circles.clone(), rows: grid.clone() });
            }
            return;
        }
        let (r, c) = self.cells[i];
        let lo_left = if c > 0 { self.rank[grid[r][c - 1] as usize] } else { 0 };
        let lo_above = self.above[i].map(|(a, b)| self.rank[grid[a][b] as usize] + 1).unwrap_or(0);
        let lo = lo_left.max(lo_above);
        for label in 1..=self.n_vars as u32 {
            let rk = self.rank[label as usize];
            if rk < lo {
                continue;
            }
            if let Some(b) = budget.as_ref() {
                if b[label as usize] == 0 {
                    continue;
                }
            }
            let circle = self.circle_of[label as usize];
            if let Some(k) = circle {
                match self.mode {
                    Mode::Standard => {
                        if c < self.circle_col[k] || used[k] >= self.limits[k].0 {
                            continue;
                        }
                    }
                    Mode::Dual => {
                        if c + 1 >= self.circle_col[k] {
                            continue;
                        }
                    }
                }
                used[k] += 1;
            }
            grid[r][c] = label;
            if let Some(b) = budget.as_mut() {
                b[label as usize] -= 1;
            }
            let mut ok = true;
            let mut pushed = false;
            if self.mode == Mode::Dual && self.row_end[i] {
                match self.scan_row(&grid[r], scans.last().expect("nonempty")) {
                    Some(next) => {
                        scans.push(next);
                        pushed = true;
                    }
                    None => ok = false,
                }
            }
            if ok {
                self.fill(i + 1, grid, used, scans, budget, f);
            }
            if pushed {
                scans.pop();
            }
            if let Some(b) = budget.as_mut() {
                b[label as usize] += 1;
            }
            grid[r][c] = 0;
            if let Some(k) = circle {
                used[k] -= 1;
            }
        }
    }

    /// Rule 8c across one completed row, read right to left.
    fn scan_row(&self, row: &[u32], counts: &[usize]) -> Option<Vec<usize>> {
        let mut counts = counts.to_vec();
        for &e in row.iter().rev() {
            if let Some(k) = self.circle_of[e as usize] {
                counts[k] += 1;
                if !reading_ok(&counts) {
                    return None;
                }
            }
        }
        Some(counts)
    }

    fn leaf_ok(&self, grid: &[Vec<u32>]) -> bool {
        match self.mode {
            Mode::Standard => (1..self.circles.len()).all(|k| {
                // k is 0-based here: circle i_{k+1} against i_k
                let rows_of = |label: u32| -> Vec<usize> {
                    let mut v = Vec::new();
                    for (r, row) in grid.iter().enumerate() {
                        if !self.fermionic_row[r] {
                            v.extend(row.iter().filter(|&&e| e == label).map(|_| r));
                        }
                    }
                    v
                };
                let upper = rows_of(self.circles[k]);
                let d = doublets(&upper, &rows_of(self.circles[k - 1]));
                upper.len() - d <= self.limits[k].1
            }),
            Mode::Dual => arm_condition_ok(&self.shape, &self.circles, grid),
        }
    }
}

/// Rule 8c at one reading position: whenever `i_{k+1}` has appeared, `i_k`
/// has appeared strictly more often.
pub(crate) fn reading_ok(counts: &[usize]) -> bool {
    counts.windows(2).all(|w| w[1] == 0 || w[0] > w[1])
}

/// Rule 8b: for each circle `i_k` and each `ℓ` with `1 ≤ ℓ < k`, at least `ℓ`
/// boxes strictly above or strictly right of the circle hold `i_{k-ℓ}`.
pub(crate) fn arm_condition_ok(shape: &SuperPartition, circles: &[u32], grid: &[Vec<u32>]) -> bool {
    let positions = shape.circle_positions();
    for k in 1..circles.len() {
        let (r0, c0) = positions[k];
        for l in 1..=k {
            let label = circles[k - l];
            let mut n = 0;
            for (r, row) in grid.iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if e == label && (r + 1 < r0 || c + 1 > c0) {
                        n += 1;
                    }
                }
            }
            if n < l {
                return false;
            }
        }
    }
    true
}

pub(crate) fn for_each_in(mode: Mode, q: &Query, f: &mut dyn FnMut(&SuperTableau)) -> Result<()> {
    let m = q.shape.m();
    if m > q.n_vars {
        return Ok(());
    }
    match &q.circle_labels {
        Some(c) => {
            if let Some(e) = Engine::new(mode, &q.shape, q.n_vars, c, q.content.as_deref())? {
                e.run(f);
            }
        }
        None => {
            let mut labels = Vec::new();
            let mut err = None;
            arrangements(q.n_vars as u32, m, &mut labels, &mut |c| {
                if err.is_some() {
                    return;
                }
                match Engine::new(mode, &q.shape, q.n_vars, c, q.content.as_deref()) {
                    Ok(Some(e)) => e.run(f),
                    Ok(None) => {}
                    Err(e) => err = Some(e),
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
    }
    Ok(())
}

fn arrangements(n: u32, m: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if cur.len() == m {
        f(cur);
        return;
    }
    for l in 1..=n {
        if !cur.contains(&l) {
            cur.push(l);
            arrangements(n, m, cur, f);
            cur.pop();
        }
    }
}

/// Visits every standard tableau matching the query.
pub fn for_each(q: &Query, f: &mut dyn FnMut(&SuperTableau)) -> Result<()> {
    for_each_in(Mode::Standard, q, f)
}

/// Collects every standard tableau matching the query.
pub fn enumerate(q: &Query) -> Result<Vec<SuperTableau>> {
    let mut out = Vec::new();
    for_each(q, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

/// `K̄_{ΛΩ}`: the number of standard tableaux of shape `Λ` and content `Ω`.
pub fn kostka_bar(shape: &SuperPartition, content: &SuperPartition) -> Result<u64> {
    let mut n = 0u64;
    for_each(&Query::with_content(shape, content)?, &mut |_| n += 1)?;
    Ok(n)
}

/// The tableau sum `Σ_T ζ^T` over all fillings of the given mode.
pub(crate) fn tableau_polynomial(mode: Mode, shape: &SuperPartition, n_vars: usize) -> Result<SuperPolynomial> {
    let mut p = SuperPolynomial::zero(n_vars);
    for_each_in(mode, &Query::all(shape, n_vars), &mut |t| {
        if let Some((sign, term)) = t.monomial(n_vars) {
            p.add_term(term, int(sign as i64));
        }
    })?;
    Ok(p)
}

/// `s_Λ` in `n_vars` variables as the explicit tableau sum.
pub fn schur_polynomial(shape: &SuperPartition, n_vars: usize) -> Result<SuperPolynomial> {
    tableau_polynomial(Mode::Standard, shape, n_vars)
}

/// Monomial expansion of `s_Λ`: coefficient `K̄_{ΛΩ}` on `m_Ω`.
pub fn schur_comb(shape: &SuperPartition) -> Result<Expansion> {
    let (n, m) = shape.degree();
    let mut e = Expansion::with_degree(Basis::Monomial, (n, m));
    for omega in SuperPartition::all(n, m) {
        let k = kostka_bar(shape, &omega)?;
        e.add_term(omega, int(k as i64))?;
    }
    Ok(e)
}

/// Rewrites a monomial expansion in a basis whose elements have unitriangular
/// monomial expansions (leading term `m_Λ` with coefficient 1, all other
/// terms dominated by `Λ`).
pub fn expand_unitriangular(e: &Expansion, target: Basis, row: &mut dyn FnMut(&SuperPartition) -> Result<Expansion>) -> Result<Expansion> {
    if e.basis() != Basis::Monomial {
        return Err(Error::BasisMismatch { expected: "monomial", got: e.basis().name() });
    }
    let mut residual = e.clone();
    let mut out = match e.degree() {
        Some(d) => Expansion::with_degree(target, d),
        None => Expansion::new(target),
    };
    let mut cache: BTreeMap<SuperPartition, Expansion> = BTreeMap::new();
    while let Some((lead, c)) = residual.leading() {
        let (lead, c) = (lead.clone(), c.clone());
        if !cache.contains_key(&lead) {
            let r = row(&lead)?;
            if !r.coefficient(&lead).is_one() {
                return Err(Error::NotInSpan);
            }
            cache.insert(lead.clone(), r);
        }
        residual.add_scaled(&cache[&lead], &-c.clone())?;
        if !residual.coefficient(&lead).is_zero() {
            return Err(Error::NotInSpan);
        }
        out.add_term(lead, c)?;
    }
    Ok(out)
}

/// Expands a monomial-basis expansion in the `s_Λ` basis.
pub fn schur_expand(e: &Expansion) -> Result<Expansion> {
    expand_unitriangular(e, Basis::Schur, &mut |l| schur_comb(l))
}

/// Converts an `s_Λ` expansion back to monomials.
pub fn schur_to_monomial(e: &Expansion) -> Result<Expansion> {
    if e.basis() != Basis::Schur {
        return Err(Error::BasisMismatch { expected: "schur", got: e.basis().name() });
    }
    let mut out = match e.degree() {
        Some(d) => Expansion::with_degree(Basis::Monomial, d),
        None => Expansion::new(Basis::Monomial),
    };
    for (l, c) in e.terms() {
        out.add_scaled(&schur_comb(l)?, c)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn effective_order_example() {
        let o = EffectiveOrder::new(&[3, 1, 5], 14, Mode::Standard).unwrap();
        let d = o.descending();
        assert_eq!(&d[..5], &[3, 1, 5, 14, 13]);
        assert_eq!(*d.last().unwrap(), 2);
        assert!(EffectiveOrder::new(&[3, 3], 5, Mode::Standard).is_err());
        assert!(EffectiveOrder::new(&[0], 5, Mode::Standard).is_err());
    }

    #[test]
    fn golden_expansions() {
        let e = schur_comb(&sp("(1;4)")).unwrap();
        let ones: Vec<String> = e
            .terms()
            .map(|(l, c)| {
                assert!(c.is_one());
                l.to_string()
            })
            .collect();
        assert_eq!(ones.len(), 10);
        assert_eq!(ones[0], "(1;4)");
        let e = schur_comb(&sp("(3,0;4,1)")).unwrap();
        let expected = [
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
        assert_eq!(e.len(), expected.len());
        for (l, c) in expected {
            assert_eq!(e.coefficient(&sp(l)), int(c), "{l}");
        }
    }

    #[test]
    fn small_kostka() {
        assert_eq!(kostka_bar(&sp("(3,0;4,1)"), &sp("(3,0;2,1,1,1)")).unwrap(), 3);
        assert_eq!(kostka_bar(&sp("(1;4)"), &sp("(3;1,1)")).unwrap(), 1);
        assert_eq!(kostka_bar(&sp("(0;)"), &sp("(0;)")).unwrap(), 1);
        assert_eq!(kostka_bar(&sp("(;)"), &sp("(;)")).unwrap(), 1);
        assert!(kostka_bar(&sp("(1;)"), &sp("(;1)")).is_err());
    }

    #[test]
    fn enumerated_tableaux_validate() {
        for l in ["(1;2)", "(2,0;1)", "(1,0;1,1)", "(0;2,1)"] {
            let shape = sp(l);
            let ts = enumerate(&Query::all(&shape, 4)).unwrap();
            assert!(!ts.is_empty());
            for t in &ts {
                assert_eq!(validate(t, 4), Vec::new(), "{t}");
            }
        }
    }

    #[test]
    fn validate_flags_rules() {
        let shape = sp("(1;2)");
        // diagram: row 0 = two boxes, row 1 = one box + circle
        let t = SuperTableau { shape: shape.clone(), circle_labels: vec![1], rows: vec![vec![2, 1], vec![1]] };
        let v = validate(&t, 3);
        assert!(v.contains(&Violation::Rule4a { row: 1, col: 2 }));
        assert!(v.contains(&Violation::Rule4b { k: 1 }));
        let t = SuperTableau { shape, circle_labels: vec![1], rows: vec![vec![3, 2], vec![1]] };
        assert!(validate(&t, 3).contains(&Violation::Rule5 { row: 1, col: 2 }));
    }

    #[test]
    fn rendering() {
        let t = SuperTableau { shape: sp("(1;2)"), circle_labels: vec![1], rows: vec![vec![2, 2], vec![1]] };
        assert_eq!(t.to_string(), "2 2\n1 (1)");
    }
}
