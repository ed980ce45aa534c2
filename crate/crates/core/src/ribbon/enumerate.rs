//! Exhaustive enumeration of valid diagrams at small order.
//!
//! For order `e - v = t + m`, internal vertices have degrees `2(p + 1)` for
//! the parts `p` of a partition of `m`. Every perfect matching of the darts
//! (rotations fixed) is tried; orthogonal diagrams additionally range over
//! twists on the edges outside a spanning forest, the forest edges being
//! untwisted up to vertex flips. Valid diagrams are deduplicated by
//! certificate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::iso::certificate;
use super::{RibbonDiagram, RibbonError, Symmetry};
use crate::perm::{is_valid_orthogonal_target, CycleType, Permutation};
use crate::weingarten::LaurentSeries;

/// Default cap on the number of gluings an enumeration may visit.
pub const DEFAULT_MATCHING_LIMIT: u128 = 5_000_000;

fn double_factorial_odd(n: usize) -> u128 {
    // (n-1)!! for even n
    (1..n).step_by(2).map(|k| k as u128).product::<u128>().max(1)
}

fn degree_lists(m: usize) -> Vec<Vec<usize>> {
    CycleType::partitions_of(m).into_iter().map(|c| c.parts().iter().map(|&p| 2 * (p + 1)).collect()).collect()
}

fn estimate(t: u32, order: i64, symmetry: Symmetry) -> u128 {
    if order < t as i64 {
        return 0;
    }
    let leaves = 2 * t as usize;
    degree_lists((order - t as i64) as usize)
        .iter()
        .map(|degs| {
            let darts = leaves + degs.iter().sum::<usize>();
            let base = double_factorial_odd(darts);
            match symmetry {
                Symmetry::Unitary => base,
                Symmetry::Orthogonal => {
                    let free = (darts / 2 + 1).saturating_sub(leaves + degs.len());
                    base.saturating_mul(1u128 << free.min(100))
                }
            }
        })
        .sum()
}

struct Search<'a> {
    t: u32,
    symmetry: Symmetry,
    target: Option<&'a Permutation>,
    degrees: Vec<usize>,
    starts: Vec<usize>,
    mate: Vec<usize>,
    found: &'a mut BTreeMap<Vec<u32>, (RibbonDiagram, Permutation)>,
}

impl Search<'_> {
    fn leaves(&self) -> usize {
        2 * self.t as usize
    }

    fn run(&mut self) {
        let first = self.mate.iter().position(|&m| m == usize::MAX);
        let Some(d) = first else {
            self.complete();
            return;
        };
        for e in d + 1..self.mate.len() {
            if self.mate[e] != usize::MAX || !self.admissible(d, e) {
                continue;
            }
            self.mate[d] = e;
            self.mate[e] = d;
            self.run();
            self.mate[d] = usize::MAX;
            self.mate[e] = usize::MAX;
        }
    }

    fn admissible(&self, d: usize, e: usize) -> bool {
        let leaves = self.leaves();
        if d < leaves && e < leaves {
            // only (z, z̄), and only where the target fixes z
            if e != (d ^ 1) {
                return false;
            }
            return match (self.target, self.symmetry) {
                (Some(tau), Symmetry::Unitary) => tau.positions()[d / 2] as usize == d / 2,
                (Some(tau), Symmetry::Orthogonal) => tau.positions()[d] as usize == d,
                (None, _) => true,
            };
        }
        if self.symmetry == Symmetry::Unitary && d >= leaves {
            // an untwisted loop between neighbouring darts bounds a leafless face
            let k = match self.starts.binary_search(&d) {
                Ok(k) => k,
                Err(k) => k - 1,
            };
            let (s, n) = (self.starts[k], self.degrees[k]);
            if e >= s && e < s + n && ((e - s) + n - (d - s)) % n == 1 || e >= s && e < s + n && ((d - s) + n - (e - s)) % n == 1 {
                return false;
            }
        }
        true
    }

    fn complete(&mut self) {
        let n = self.mate.len();
        match self.symmetry {
            Symmetry::Unitary => {
                let d = RibbonDiagram::from_layout(self.t, self.degrees.clone(), self.mate.clone(), vec![false; n])
                    .expect("complete matching");
                self.keep(d);
            }
            Symmetry::Orthogonal => {
                let free = self.free_edges();
                for mask in 0u64..(1u64 << free.len()) {
                    let mut twisted = vec![false; n];
                    for (b, &d) in free.iter().enumerate() {
                        if (mask >> b) & 1 == 1 {
                            twisted[d] = true;
                            twisted[self.mate[d]] = true;
                        }
                    }
                    let d = RibbonDiagram::from_layout(self.t, self.degrees.clone(), self.mate.clone(), twisted)
                        .expect("complete matching");
                    self.keep(d);
                }
            }
        }
    }

    /// One dart per edge outside a breadth-first spanning forest.
    fn free_edges(&self) -> Vec<usize> {
        let leaves = self.leaves();
        let nv = leaves + self.degrees.len();
        let owner = |d: usize| -> usize {
            if d < leaves {
                d
            } else {
                match self.starts.binary_search(&d) {
                    Ok(k) => leaves + k,
                    Err(k) => leaves + k - 1,
                }
            }
        };
        let darts_of = |v: usize| -> std::ops::Range<usize> {
            if v < leaves {
                v..v + 1
            } else {
                let k = v - leaves;
                self.starts[k]..self.starts[k] + self.degrees[k]
            }
        };
        let mut seen = vec![false; nv];
        let mut tree = vec![false; self.mate.len()];
        for s in 0..nv {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for d in darts_of(v) {
                    let w = owner(self.mate[d]);
                    if !seen[w] {
                        seen[w] = true;
                        tree[d] = true;
                        tree[self.mate[d]] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        (0..self.mate.len()).filter(|&d| d < self.mate[d] && !tree[d]).collect()
    }

    fn keep(&mut self, d: RibbonDiagram) {
        // Each marked diagram is met once in canonical form.
        let Ok(analysis) = d.analyze(self.symmetry) else {
            return;
        };
        if !analysis.canonical {
            return;
        }
        if let Some(tau) = self.target {
            if &analysis.target != tau {
                return;
            }
        }
        let cert = certificate(&d);
        self.found.entry(cert).or_insert((d, analysis.target));
    }
}

fn search(
    t: u32,
    order: i64,
    symmetry: Symmetry,
    target: Option<&Permutation>,
) -> Vec<(RibbonDiagram, Permutation)> {
    if order < t as i64 {
        return Vec::new();
    }
    let leaves = 2 * t as usize;
    let mut found = BTreeMap::new();
    for degrees in degree_lists((order - t as i64) as usize) {
        let mut starts = Vec::new();
        let mut next = leaves;
        for &k in &degrees {
            starts.push(next);
            next += k;
        }
        let mut s = Search { t, symmetry, target, degrees, starts, mate: vec![usize::MAX; next], found: &mut found };
        s.run();
    }
    let mut out: Vec<(RibbonDiagram, Permutation)> = found.into_values().collect();
    out.sort_by_key(|(d, _)| d.internal_vertex_count());
    out
}

/// All valid diagrams on `Z_t` with `e - v = order`, any target.
pub fn enumerate_all(
    t: u32,
    order: i64,
    symmetry: Symmetry,
    limit: u128,
) -> Result<Vec<(RibbonDiagram, Permutation)>, RibbonError> {
    let est = estimate(t, order, symmetry);
    if est > limit {
        return Err(RibbonError::ResourceGuard { estimate: est, limit });
    }
    Ok(search(t, order, symmetry, None))
}

fn check_target(tau: &Permutation, symmetry: Symmetry) -> Result<u32, RibbonError> {
    let ground = tau.ground();
    match symmetry {
        Symmetry::Unitary if ground.is_barred() => {
            Err(RibbonError::Precondition("unitary targets act on plain labels".into()))
        }
        Symmetry::Orthogonal if !is_valid_orthogonal_target(tau) => {
            Err(RibbonError::Precondition(format!("{tau} is not a valid orthogonal target")))
        }
        _ => Ok(ground.t()),
    }
}

pub fn enumerate_diagrams(tau: &Permutation, max_order: i64, symmetry: Symmetry) -> Result<Vec<RibbonDiagram>, RibbonError> {
    enumerate_diagrams_with_limit(tau, max_order, symmetry, DEFAULT_MATCHING_LIMIT)
}

/// Valid diagrams with target `tau` and `e - v ≤ max_order`, ordered by
/// order, then vertex count.
pub fn enumerate_diagrams_with_limit(
    tau: &Permutation,
    max_order: i64,
    symmetry: Symmetry,
    limit: u128,
) -> Result<Vec<RibbonDiagram>, RibbonError> {
    let t = check_target(tau, symmetry)?;
    if max_order < t as i64 {
        return Err(RibbonError::Precondition(format!("order {max_order} is below the leading order {t}")));
    }
    let est: u128 = (t as i64..=max_order).map(|k| estimate(t, k, symmetry)).sum();
    if est > limit {
        return Err(RibbonError::ResourceGuard { estimate: est, limit });
    }
    let mut out = Vec::new();
    for order in t as i64..=max_order {
        out.extend(search(t, order, symmetry, Some(tau)).into_iter().map(|(d, _)| d));
    }
    Ok(out)
}

pub fn signed_sum(tau: &Permutation, max_order: i64, symmetry: Symmetry) -> Result<LaurentSeries, RibbonError> {
    signed_sum_with_limit(tau, max_order, symmetry, DEFAULT_MATCHING_LIMIT)
}

/// `Σ (-1)^v N^-(e-v)` over the diagrams of [`enumerate_diagrams`].
pub fn signed_sum_with_limit(
    tau: &Permutation,
    max_order: i64,
    symmetry: Symmetry,
    limit: u128,
) -> Result<LaurentSeries, RibbonError> {
    let mut s = LaurentSeries::zero(max_order);
    for d in enumerate_diagrams_with_limit(tau, max_order, symmetry, limit)? {
        let c = d.contribution();
        s.add_term(c.order, &BigRational::from_integer(BigInt::from(c.sign)));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::GroundSet;

    fn plain(text: &str, t: u32) -> Permutation {
        Permutation::parse_cycles(text, Some(GroundSet::Plain(t))).unwrap()
    }

    fn count_at(ds: &[RibbonDiagram], order: i64) -> usize {
        ds.iter().filter(|d| d.contribution().order == order).count()
    }

    #[test]
    fn identity_on_two_labels() {
        let ds = enumerate_diagrams(&plain("()", 2), 4, Symmetry::Unitary).unwrap();
        assert_eq!(count_at(&ds, 2), 1);
        assert_eq!(count_at(&ds, 3), 0);
        // five connected diagrams, plus a 1-1̄ edge beside each of the four
        // genus-one diagrams on {2, 2̄} or {1, 1̄}
        assert_eq!(count_at(&ds, 4), 9);
        let connected = ds.iter().filter(|d| d.contribution().order == 4 && d.component_count() == 1).count();
        assert_eq!(connected, 5);
        assert_eq!(signed_sum(&plain("()", 2), 4, Symmetry::Unitary).unwrap().to_string(), "N^-2 + N^-4 + O(N^-5)");
    }

    #[test]
    fn transposition_leading_order() {
        let ds = enumerate_diagrams(&plain("(1 2)", 2), 3, Symmetry::Unitary).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].contribution().internal_vertices, 1);
    }

    #[test]
    fn orthogonal_single_pair() {
        let id = Permutation::identity(GroundSet::Barred(1));
        let s = signed_sum(&id, 3, Symmetry::Orthogonal).unwrap();
        assert_eq!(s.to_string(), "N^-1 - N^-2 + N^-3 + O(N^-4)");
    }

    #[test]
    fn guard_trips() {
        let err = enumerate_diagrams_with_limit(&plain("()", 2), 5, Symmetry::Unitary, 1000).unwrap_err();
        assert!(matches!(err, RibbonError::ResourceGuard { .. }));
    }
}
