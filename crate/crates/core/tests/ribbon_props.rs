use proptest::prelude::*;

use semiclassical::perm::{GroundSet, Label, Permutation};
use semiclassical::ribbon::{RibbonDiagram, Symmetry};

fn label(t: u32, pos: usize) -> Label {
    GroundSet::Barred(t).label(pos % (2 * t as usize))
}

/// A diagram built by random ties from the untied one, plus one more pair of
/// leaves to tie.
fn tied(t: u32, symmetry: Symmetry, steps: &[(usize, usize)]) -> Option<RibbonDiagram> {
    let mut d = RibbonDiagram::untied(t);
    for &(a, b) in steps {
        let (z1, z2) = pick(t, symmetry, a, b)?;
        d = d.tie_leaves(z1, z2, symmetry).ok()?;
    }
    Some(d)
}

fn pick(t: u32, symmetry: Symmetry, a: usize, b: usize) -> Option<(Label, Label)> {
    match symmetry {
        Symmetry::Unitary => {
            let (x, y) = (a % t as usize, b % t as usize);
            (x != y).then(|| (Label::plain(x as u32 + 1), Label::plain(y as u32 + 1)))
        }
        Symmetry::Orthogonal => {
            let (z1, z2) = (label(t, a), label(t, b));
            (z1 != z2).then_some((z1, z2))
        }
    }
}

fn transposition(ground: GroundSet, a: Label, b: Label) -> Permutation {
    Permutation::transposition(ground, a, b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tying_multiplies_the_target(
        t in 2u32..=3,
        orthogonal in any::<bool>(),
        steps in proptest::collection::vec((0usize..6, 0usize..6), 0..3),
        last in (0usize..6, 0usize..6),
    ) {
        let symmetry = if orthogonal { Symmetry::Orthogonal } else { Symmetry::Unitary };
        let Some(d) = tied(t, symmetry, &steps) else { return Ok(()) };
        let Some((z1, z2)) = pick(t, symmetry, last.0, last.1) else { return Ok(()) };
        let tau = d.read_target(symmetry).unwrap();
        let after = d.tie_leaves(z1, z2, symmetry).unwrap();
        prop_assert!(after.validate(symmetry).is_ok());
        let expected = match symmetry {
            Symmetry::Unitary => transposition(GroundSet::Plain(t), z1, z2).compose(&tau).unwrap(),
            Symmetry::Orthogonal => {
                let g = GroundSet::Barred(t);
                transposition(g, z1, z2).compose(&tau).unwrap().compose(&transposition(g, z1.mirror(), z2.mirror())).unwrap()
            }
        };
        prop_assert_eq!(after.read_target(symmetry).unwrap(), expected);
        let c = after.contribution();
        prop_assert_eq!(c.edges, d.contribution().edges + 2);
        prop_assert_eq!(c.internal_vertices, d.contribution().internal_vertices + 1);
    }

    #[test]
    fn boundary_walks_visit_each_flag_once(
        t in 1u32..=3,
        steps in proptest::collection::vec((0usize..6, 0usize..6), 0..4),
    ) {
        let Some(d) = tied(t, Symmetry::Orthogonal, &steps) else { return Ok(()) };
        let mut flags: Vec<(usize, bool)> = d
            .boundary_walks()
            .iter()
            .flat_map(|w| w.steps().iter().map(|&(dart, side)| (dart, side == semiclassical::ribbon::Side::Plus)).collect::<Vec<_>>())
            .collect();
        let n = flags.len();
        flags.sort_unstable();
        flags.dedup();
        prop_assert_eq!(flags.len(), n);
        prop_assert_eq!(n, 2 * d.dart_count());
    }
}
