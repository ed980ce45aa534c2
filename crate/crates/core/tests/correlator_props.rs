use proptest::prelude::*;
use semiclassical::correlator::{correlator, CorrelatorSpec, Element};
use semiclassical::weingarten::Ensemble;

const N: u32 = 4;

fn elements(t: usize) -> impl Strategy<Value = Vec<Element>> {
    prop::collection::vec((1..=N, 1..=N).prop_map(|(row, col)| Element { row, col }), t)
}

/// Conjugated factors that are a shuffle of the unconjugated ones, with
/// optional extra noise so that vanishing cases also occur.
fn balanced() -> impl Strategy<Value = (Vec<Element>, Vec<Element>)> {
    (1usize..=3).prop_flat_map(|t| {
        (elements(t), elements(t), any::<bool>()).prop_flat_map(|(a, noise, echo)| {
            let b = if echo { a.clone() } else { noise };
            (Just(a), Just(b).prop_shuffle())
        })
    })
}

fn value(a: &[Element], b: &[Element], ensemble: Ensemble) -> num_rational::BigRational {
    correlator(&CorrelatorSpec::new(a.to_vec(), b.to_vec(), ensemble, N).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn reordering_factors_changes_nothing(
        (a, b) in balanced(),
        seed in any::<u64>(),
        ensemble in prop_oneof![Just(Ensemble::Cue), Just(Ensemble::Coe)],
    ) {
        let base = value(&a, &b, ensemble);
        let rotate = (seed as usize) % a.len().max(1);
        let mut a2 = a.clone();
        a2.rotate_left(rotate);
        let mut b2 = b.clone();
        b2.reverse();
        prop_assert_eq!(value(&a2, &b2, ensemble), base);
    }

    #[test]
    fn coe_is_blind_to_transposing_a_factor((a, b) in balanced(), which in any::<prop::sample::Index>(), conj in any::<bool>()) {
        let base = value(&a, &b, Ensemble::Coe);
        let (mut a2, mut b2) = (a.clone(), b.clone());
        let target = if conj { &mut b2 } else { &mut a2 };
        let k = which.index(target.len());
        let e = target[k];
        target[k] = Element { row: e.col, col: e.row };
        prop_assert_eq!(value(&a2, &b2, Ensemble::Coe), base);
    }

    #[test]
    fn cue_is_blind_to_relabeling_channels((a, b) in balanced(), rows in Just(vec![1, 2, 3, 4]).prop_shuffle(), cols in Just(vec![1, 2, 3, 4]).prop_shuffle()) {
        let relabel = |xs: &[Element]| -> Vec<Element> {
            xs.iter().map(|e| Element { row: rows[e.row as usize - 1], col: cols[e.col as usize - 1] }).collect()
        };
        prop_assert_eq!(value(&relabel(&a), &relabel(&b), Ensemble::Cue), value(&a, &b, Ensemble::Cue));
    }
}
