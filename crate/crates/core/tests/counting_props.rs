use proptest::prelude::*;
use semiclassical::factorizations::{
    count_monotone, count_monotone_unsorted, count_palindromic, count_palindromic_unsorted, enumerate_monotone,
    enumerate_palindromic,
};
use semiclassical::perm::CycleType;
use semiclassical::weingarten::{class_coefficient, v_coe, v_cue, Ensemble, WeingartenTable};

fn parts(max_total: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=max_total, 1..=max_total)
        .prop_filter("total in range", move |p| p.iter().sum::<usize>() <= max_total)
}

fn shuffled_parts(max_total: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    parts(max_total).prop_flat_map(|p| (Just(p.clone()), Just(p).prop_shuffle()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coefficients_depend_on_the_sorted_partition((a, b) in shuffled_parts(5)) {
        let (ca, cb) = (CycleType::new(a), CycleType::new(b));
        prop_assert_eq!(v_cue(&ca), v_cue(&cb));
        prop_assert_eq!(v_coe(&ca), v_coe(&cb));
    }

    #[test]
    fn counts_ignore_which_cycle_is_distinguished((a, b) in shuffled_parts(5), v in 0usize..=5) {
        prop_assert_eq!(count_monotone_unsorted(&a, v), count_monotone_unsorted(&b, v));
        prop_assert_eq!(count_monotone_unsorted(&a, v), count_monotone(&CycleType::new(a.clone()), v));
        if a.iter().sum::<usize>() <= 4 {
            prop_assert_eq!(count_palindromic_unsorted(&a, v), count_palindromic_unsorted(&b, v));
            prop_assert_eq!(count_palindromic_unsorted(&a, v), count_palindromic(&CycleType::new(a), v));
        }
    }

    #[test]
    fn enumerated_factorizations_multiply_out(p in parts(4), v in 0usize..=4) {
        let c = CycleType::new(p);
        let tau = c.canonical_plain();
        for f in enumerate_monotone(&tau, v).unwrap() {
            prop_assert_eq!(&f.product(), &tau);
            prop_assert_eq!(f.len(), v);
        }
        if c.total() <= 3 && v <= 3 {
            let tau = c.canonical_orthogonal();
            for f in enumerate_palindromic(&tau, v).unwrap() {
                prop_assert_eq!(&f.product(), &tau);
            }
        }
    }
}

#[test]
fn fresh_tables_agree_with_the_shared_ones() {
    for ensemble in [Ensemble::Cue, Ensemble::Coe] {
        let table = WeingartenTable::new(ensemble);
        for t in 0..=5 {
            for c in CycleType::partitions_of(t) {
                assert_eq!(table.get(&c), class_coefficient(ensemble, &c), "{ensemble} {c}");
                for first in 0..c.len() {
                    assert!(table.recursion_residual(&c, first).is_zero(), "{ensemble} {c} part {first}");
                }
            }
        }
    }
}
