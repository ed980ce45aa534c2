//! The sign-reversing involution on diagrams with a fixed target.
//!
//! Untie at the smallest leaf while possible, ignoring edges that join two
//! leaves directly. If the diagram unties completely, the recorded
//! transpositions form a factorization of the target. Otherwise contract the
//! edge opposite the smallest leaf (degree 4) or split its vertex (degree ≥
//! 6), then tie everything back in reverse order.

use super::ops::{finish, Editable};
use super::{RibbonDiagram, RibbonError, Side, Symmetry};
use crate::factorizations::{MonotoneFactorization, PalindromicFactorization, Transposition};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedPoint {
    Monotone(MonotoneFactorization),
    Palindromic(PalindromicFactorization),
}

impl FixedPoint {
    pub fn factors(&self) -> &[Transposition] {
        match self {
            FixedPoint::Monotone(f) => f.factors(),
            FixedPoint::Palindromic(f) => f.left_factors(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Partner {
    Partner(RibbonDiagram),
    FixedPoint(FixedPoint),
}

pub fn cancellation_partner(d: &RibbonDiagram, symmetry: Symmetry) -> Result<Partner, RibbonError> {
    let analysis = d.analyze(symmetry)?;
    let ground = d.ground();
    let mut e = Editable::from_diagram(d);
    let mut solid = analysis.solid_side.clone();
    let mut records: Vec<(usize, usize)> = Vec::new();
    loop {
        let candidate = (0..ground.len())
            .filter(|&p| symmetry == Symmetry::Orthogonal || !ground.label(p).is_barred())
            .find(|&p| !e.is_leaf(e.mate[e.leaf_dart[p]]));
        let Some(p) = candidate else {
            let factors = records
                .iter()
                .map(|&(a, b)| Transposition::new(ground.label(a), ground.label(b)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|err| RibbonError::Precondition(err.to_string()))?;
            return fixed_point(factors, analysis.target, symmetry);
        };
        let a = e.mate[e.leaf_dart[p]];
        let k = e.vertex_of_dart(a).expect("internal dart");
        let r = e.rot[k].clone();
        let i = r.iter().position(|&x| x == a).expect("dart at its vertex");
        if r.len() == 4 {
            let opposite = e.mate[r[(i + 2) % 4]];
            if let Some(q) = e.leaf_at(opposite) {
                if symmetry == Symmetry::Unitary && ground.label(q).is_barred() {
                    return Err(RibbonError::Precondition(format!(
                        "leaf {} faces barred leaf {}",
                        ground.label(p),
                        ground.label(q)
                    )));
                }
                let (s1, s2) = e.untie(k, p, q, solid[p], solid[q])?;
                solid[p] = s1;
                solid[q] = s2;
                records.push((p, q));
                continue;
            }
            e.contract(k, a)?;
        } else {
            e.split(k, a)?;
        }
        break;
    }
    for &(p, q) in records.iter().rev() {
        e.tie(p, q, solid[p], solid[q]);
        solid[p] = Side::Plus;
        solid[q] = Side::Plus;
    }
    Ok(Partner::Partner(finish(e, symmetry, solid)))
}

fn fixed_point(factors: Vec<Transposition>, target: Permutation, symmetry: Symmetry) -> Result<Partner, RibbonError> {
    let err = |e: crate::factorizations::FactorizationError| RibbonError::Precondition(e.to_string());
    Ok(Partner::FixedPoint(match symmetry {
        Symmetry::Unitary => FixedPoint::Monotone(MonotoneFactorization::new(factors, target).map_err(err)?),
        Symmetry::Orthogonal => FixedPoint::Palindromic(PalindromicFactorization::new(factors, target).map_err(err)?),
    }))
}

/// The diagram obtained by tying the factors of a factorization onto the
/// untied diagram, last factor first.
pub fn diagram_of_factors(t: u32, factors: &[Transposition], symmetry: Symmetry) -> Result<RibbonDiagram, RibbonError> {
    let mut d = RibbonDiagram::untied(t);
    for f in factors.iter().rev() {
        d = d.tie_leaves(f.smaller(), f.larger(), symmetry)?;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::iso::certificate;
    use super::*;

    #[test]
    fn untied_diagram_is_a_fixed_point() {
        match cancellation_partner(&two_edges(), Symmetry::Unitary).unwrap() {
            Partner::FixedPoint(f) => assert!(f.factors().is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn square_of_transposition_is_a_fixed_point() {
        let t12 = Transposition::new(l(1), l(2)).unwrap();
        let d = diagram_of_factors(2, &[t12, t12], Symmetry::Unitary).unwrap();
        assert!(d.read_target(Symmetry::Unitary).unwrap().is_identity());
        match cancellation_partner(&d, Symmetry::Unitary).unwrap() {
            Partner::FixedPoint(f) => assert_eq!(f.factors(), &[t12, t12]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn six_vertex_and_its_split_are_partners() {
        let chain = RibbonDiagram::untied(3)
            .tie_leaves(l(2), l(3), Symmetry::Unitary)
            .unwrap()
            .tie_leaves(l(1), l(2), Symmetry::Unitary)
            .unwrap();
        let six = (0..2)
            .flat_map(|k| (0..4).map(move |s| (k, s)))
            .find_map(|(k, s)| chain.contract_edge(super::super::VertexId(k), s).ok())
            .unwrap();
        let Partner::Partner(p) = cancellation_partner(&six, Symmetry::Unitary).unwrap() else {
            panic!("a lone 6-vertex must have a partner");
        };
        assert_eq!(p.internal_vertex_count(), 2);
        assert_eq!(p.contribution().order, six.contribution().order);
        assert_eq!(p.read_target(Symmetry::Unitary).unwrap(), six.read_target(Symmetry::Unitary).unwrap());
        let Partner::Partner(back) = cancellation_partner(&p, Symmetry::Unitary).unwrap() else {
            panic!("partner of a partner is not a fixed point");
        };
        assert_eq!(certificate(&back), certificate(&six));
    }
}
