//! Dual super tableaux (Rules 1, 7, 8, 9) and the dual Schur superpolynomials `s̄_Λ`.

use alloc::vec;
use alloc::vec::Vec;

use crate::superpartition::SuperPartition;
use crate::superpoly::{int, omega, to_power_sum, Basis, Expansion, SuperPolynomial};
use crate::tableaux::{
    arm_condition_ok, expand_unitriangular, for_each_in, reading_ok, EffectiveOrder, Mode, Query, SuperTableau, Violation,
};
use crate::Result;

/// `i_m > … > i_1 >` the remaining labels in natural order.
pub fn dual_effective_order(circles: &[u32], n_vars: usize) -> Result<EffectiveOrder> {
    EffectiveOrder::new(circles, n_vars, Mode::Dual)
}

/// Checks a filling against the dual rules and lists every violation found.
pub fn validate_dual(t: &SuperTableau, n_vars: usize) -> Vec<Violation> {
    let diagram = t.shape.diagram();
    let shape_ok = t.rows.len() == diagram.rows.len()
        && t.rows.iter().zip(&diagram.rows).all(|(r, d)| r.len() == d.boxes)
        && t.rows.iter().flatten().all(|&e| e >= 1 && e as usize <= n_vars)
        && t.circle_labels.len() == t.shape.m();
    let Ok(order) = (if shape_ok { dual_effective_order(&t.circle_labels, n_vars) } else { Err(crate::Error::NotInSpan) }) else {
        return vec![Violation::Rule1];
    };
    let mut out = Vec::new();
    let circle_col: Vec<usize> = t.shape.fermionic().iter().map(|a| a + 1).collect();
    for (r, row) in t.rows.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            if let Some(k) = t.circle_labels.iter().position(|&l| l == e) {
                if c + 1 >= circle_col[k] {
                    out.push(Violation::Rule8a { row: r + 1, col: c + 1 });
                }
            }
            let left_ok = c == 0 || order.rank(row[c - 1]) <= order.rank(e);
            let above_ok = r == 0 || order.rank(t.rows[r - 1][c]) < order.rank(e);
            if !left_ok || !above_ok {
                out.push(Violation::Rule9 { row: r + 1, col: c + 1 });
            }
        }
    }
    if !arm_condition_ok(&t.shape, &t.circle_labels, &t.rows) {
        // report the first failing circle
        let k = (2..=t.shape.m()).find(|&k| !arm_condition_ok(&t.shape, &t.circle_labels[..k], &t.rows)).unwrap_or(t.shape.m());
        out.push(Violation::Rule8b { k });
    }
    let mut counts = vec![0usize; t.shape.m()];
    'scan: for row in &t.rows {
        for &e in row.iter().rev() {
            if let Some(k) = t.circle_labels.iter().position(|&l| l == e) {
                counts[k] += 1;
                if !reading_ok(&counts) {
                    out.push(Violation::Rule8c);
                    break 'scan;
                }
            }
        }
    }
    out
}

/// Visits every dual tableau matching the query.
pub fn for_each_dual(q: &Query, f: &mut dyn FnMut(&SuperTableau)) -> Result<()> {
    for_each_in(Mode::Dual, q, f)
}

/// Collects every dual tableau matching the query.
pub fn enumerate_dual(q: &Query) -> Result<Vec<SuperTableau>> {
    let mut out = Vec::new();
    for_each_dual(q, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

/// `K_{ΛΩ}`: the number of dual tableaux of shape `Λ` and content `Ω`.
pub fn kostka(shape: &SuperPartition, content: &SuperPartition) -> Result<u64> {
    let mut n = 0u64;
    for_each_dual(&Query::with_content(shape, content)?, &mut |_| n += 1)?;
    Ok(n)
}

/// `s̄_Λ` in `n_vars` variables as the explicit dual tableau sum.
pub fn dual_schur_polynomial(shape: &SuperPartition, n_vars: usize) -> Result<SuperPolynomial> {
    crate::tableaux::tableau_polynomial(Mode::Dual, shape, n_vars)
}

/// Monomial expansion of `s̄_Λ`: coefficient `K_{ΛΩ}` on `m_Ω`.
pub fn dual_schur_comb(shape: &SuperPartition) -> Result<Expansion> {
    let (n, m) = shape.degree();
    let mut e = Expansion::with_degree(Basis::Monomial, (n, m));
    for omega in SuperPartition::all(n, m) {
        let k = kostka(shape, &omega)?;
        e.add_term(omega, int(k as i64))?;
    }
    Ok(e)
}

/// Expands a monomial-basis expansion in the `s̄_Λ` basis.
pub fn dual_schur_expand(e: &Expansion) -> Result<Expansion> {
    expand_unitriangular(e, Basis::DualSchur, &mut |l| dual_schur_comb(l))
}

/// `s*_Λ = (-1)^{m(m-1)/2} ω(s̄_{Λ'})` as a power-sum expansion.
pub fn schur_star(shape: &SuperPartition) -> Result<Expansion> {
    let m = shape.m();
    let sign = if (m * m.saturating_sub(1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let bar = to_power_sum(&dual_schur_comb(&shape.conjugate())?)?;
    Ok(omega(&bar)?.scale(&int(sign)))
}
