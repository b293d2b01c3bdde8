use proptest::prelude::*;
use superschur_core::dual_tableaux::kostka;
use superschur_core::pieri::{pieri_product, Orientation, StripSpec};
use superschur_core::superpoly::{int, product, Basis};
use superschur_core::tableaux::kostka_bar;
use superschur_core::{Coeff, Expansion, SuperPartition};

fn superpartition(max_part: usize, max_m: usize, max_bosons: usize) -> impl Strategy<Value = SuperPartition> {
    (proptest::sample::subsequence((0..=max_part).collect::<Vec<_>>(), 0..=max_m), proptest::collection::vec(1..=max_part, 0..=max_bosons))
        .prop_map(|(f, b)| SuperPartition::from_unsorted(f, b).unwrap())
}

fn same_degree_pair() -> impl Strategy<Value = (SuperPartition, SuperPartition)> {
    (1usize..=5, 0usize..=2, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(|(n, m, i, j)| {
        let all = SuperPartition::all(n, m);
        (all[i.index(all.len())].clone(), all[j.index(all.len())].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_roundtrip(l in superpartition(6, 3, 4)) {
        let back: SuperPartition = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn conjugation_is_an_involution(l in superpartition(6, 3, 4)) {
        let c = l.conjugate();
        prop_assert_eq!(c.degree(), l.degree());
        prop_assert_eq!(c.conjugate(), l);
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in same_degree_pair()) {
        prop_assert_eq!(a.dominated_by(&b).unwrap(), b.conjugate().dominated_by(&a.conjugate()).unwrap());
    }

    #[test]
    fn kostka_matrices_are_unitriangular((a, b) in same_degree_pair()) {
        let k = kostka(&a, &b).unwrap();
        let kb = kostka_bar(&a, &b).unwrap();
        if a == b {
            prop_assert_eq!((k, kb), (1, 1));
        }
        if k != 0 {
            prop_assert!(b.dominated_by(&a).unwrap());
        }
        if kb != 0 {
            prop_assert!(b.dominated_by(&a).unwrap());
        }
    }

    #[test]
    fn monomial_product_is_supercommutative(a in superpartition(3, 2, 2), b in superpartition(3, 2, 2)) {
        let ma = Expansion::single(Basis::Monomial, a.clone(), Coeff::from_integer(1.into()));
        let mb = Expansion::single(Basis::Monomial, b.clone(), Coeff::from_integer(1.into()));
        let ab = product(&ma, &mb).unwrap();
        let ba = product(&mb, &ma).unwrap();
        let sign = if a.m() * b.m() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(ab, ba.scale(&int(sign)));
    }

    #[test]
    fn pieri_terms_have_the_product_degree(
        l in superpartition(4, 2, 3),
        r in 1usize..=3,
        column in any::<bool>(),
        fermionic in any::<bool>(),
    ) {
        let orientation = if column { Orientation::Column } else { Orientation::Row };
        let strip = StripSpec::new(r, orientation, fermionic).unwrap();
        let (n, m) = l.degree();
        let (sn, sm) = strip.superpartition().degree();
        for t in pieri_product(&l, strip) {
            prop_assert_eq!(t.label.degree(), (n + sn, m + sm));
            prop_assert!(t.sign == 1 || t.sign == -1);
        }
    }
}
