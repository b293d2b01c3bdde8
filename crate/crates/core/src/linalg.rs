//! Exact dense linear solves over the rationals.

use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::superpoly::Coeff;

/// Solves `a · x = b` for a square nonsingular `a` (row-major).
///
/// Returns `None` when `a` is singular or not square.
pub fn solve(mut a: Vec<Vec<Coeff>>, mut b: Vec<Coeff>) -> Option<Vec<Coeff>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return None;
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Coeff::one() / &a[col][col];
        for x in &mut a[col][col..] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            let pivot_row = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * p;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Some(b)
}
