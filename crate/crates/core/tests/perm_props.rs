use proptest::prelude::*;
use semiclassical::perm::{halved_cycle_type, is_valid_orthogonal_target, target_orthogonal, GroundSet, Permutation};

fn shuffled(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
}

fn barred(t: u32, images: Vec<u32>) -> Permutation {
    Permutation::from_positions(GroundSet::Barred(t), images).unwrap()
}

/// A random varpi on Z_t with t in 1..=6.
fn varpi() -> impl Strategy<Value = Permutation> {
    (1u32..=6).prop_flat_map(|t| shuffled(2 * t as usize).prop_map(move |images| barred(t, images)))
}

/// A pair of permutations on Z_t sharing t.
fn varpi_and_commuting(t: u32) -> impl Strategy<Value = (Permutation, Permutation)> {
    let n = t as usize;
    (shuffled(2 * n), shuffled(n), prop::collection::vec(any::<bool>(), n)).prop_map(move |(images, pairs, flips)| {
        // rho maps pair k onto pair pairs[k], swapping its halves when flipped
        let mut rho = vec![0u32; 2 * n];
        for k in 0..n {
            let f = flips[k] as u32;
            rho[2 * k] = 2 * pairs[k] + f;
            rho[2 * k + 1] = 2 * pairs[k] + (1 - f);
        }
        (barred(t, images), barred(t, rho))
    })
}

fn commuting() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1u32..=6).prop_flat_map(varpi_and_commuting)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn targets_are_valid(w in varpi()) {
        let tau = target_orthogonal(&w).unwrap();
        prop_assert!(is_valid_orthogonal_target(&tau));
        let bar = Permutation::bar_involution(w.ground().t());
        let t_tau = bar.compose(&tau).unwrap();
        prop_assert!(t_tau.compose(&t_tau).unwrap().is_identity());
        prop_assert!(t_tau.cycles().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn target_cycles_come_in_mirror_pairs(w in varpi()) {
        let tau = target_orthogonal(&w).unwrap();
        let cycles = tau.cycles();
        for c in &cycles {
            let mirrored: Vec<_> = c.iter().map(|l| l.mirror()).collect();
            let start = mirrored[0];
            let partner = cycles.iter().find(|d| d.contains(&start)).unwrap();
            prop_assert_eq!(partner.len(), c.len());
            prop_assert!(mirrored.iter().all(|l| partner.contains(l)));
        }
        prop_assert_eq!(halved_cycle_type(&tau).unwrap().total() as u32, w.ground().t());
    }

    #[test]
    fn left_relabeling_keeps_the_target((w, rho) in commuting()) {
        let moved = rho.compose(&w).unwrap();
        prop_assert_eq!(target_orthogonal(&moved).unwrap(), target_orthogonal(&w).unwrap());
    }

    #[test]
    fn right_relabeling_keeps_the_halved_type((w, rho) in commuting()) {
        let moved = w.compose(&rho).unwrap();
        prop_assert_eq!(
            halved_cycle_type(&target_orthogonal(&moved).unwrap()).unwrap(),
            halved_cycle_type(&target_orthogonal(&w).unwrap()).unwrap()
        );
    }

    #[test]
    fn composition_is_associative(
        (a, b, c) in (1usize..=7).prop_flat_map(|n| (shuffled(n), shuffled(n), shuffled(n)))
    ) {
        let g = GroundSet::Plain(a.len() as u32);
        let [a, b, c] = [a, b, c].map(|p| Permutation::from_positions(g, p).unwrap());
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        prop_assert_eq!(a.compose(&b).unwrap().compose(&b.inverse()).unwrap(), a);
    }

    #[test]
    fn cycle_notation_round_trips(w in varpi()) {
        let text = w.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, Some(w.ground())).unwrap(), w.clone());
        let json = one_line_json(&w);
        prop_assert_eq!(Permutation::parse_one_line_json(&json, true).unwrap(), w);
    }
}

fn one_line_json(p: &Permutation) -> String {
    let parts: Vec<String> = p.one_line().iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}
