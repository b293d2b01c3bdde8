//! The explicit tableau sums over every circle labelling are symmetric, and
//! their monomial coefficients are the counts with circles labelled `1..m`.

use superschur_core::dual_tableaux::{dual_schur_comb, dual_schur_polynomial};
use superschur_core::superpoly::extract_expansion;
use superschur_core::tableaux::{schur_comb, schur_polynomial};
use superschur_core::SuperPartition;

fn check(max_n: usize, max_m: usize) {
    for m in 0..=max_m {
        for n in 0..=max_n {
            for l in SuperPartition::all(n, m) {
                let vars = n + m;
                let p = schur_polynomial(&l, vars).unwrap();
                assert!(p.is_symmetric(), "s_{l} not symmetric");
                assert_eq!(extract_expansion(&p).unwrap(), schur_comb(&l).unwrap(), "s_{l}");
                let q = dual_schur_polynomial(&l, vars).unwrap();
                assert!(q.is_symmetric(), "dual s_{l} not symmetric");
                assert_eq!(extract_expansion(&q).unwrap(), dual_schur_comb(&l).unwrap(), "dual s_{l}");
            }
        }
    }
}

#[test]
fn tableau_sums_are_symmetric() {
    check(4, 2);
}

#[test]
fn tableau_sums_are_symmetric_m3() {
    check(4, 3);
}
