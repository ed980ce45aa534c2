//! Boundary walks, segment marking, validity and target read-off.

use thiserror::Error;

use super::{RibbonDiagram, RibbonError, Side, Symmetry};
use crate::perm::{GroundSet, Label, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationFailure {
    #[error("internal vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },
    #[error("internal vertex {vertex} has degree {degree} < 4")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error("unitary diagram has a twisted edge (not orientable as drawn)")]
    TwistedEdge,
    #[error("boundary walk {walk} passes {leaves} leaves; need a nonzero even number")]
    LeafCount { walk: usize, leaves: usize },
    #[error("leaf labels on boundary walk {walk} do not follow the z, z̄, τ(z), .. pattern")]
    LabelPattern { walk: usize },
    #[error("an edge is traversed in opposite directions by its two sides")]
    Direction,
    #[error("no marking makes every edge solid on one side and dashed on the other")]
    Marking,
    #[error("read-off does not give a permutation: {0}")]
    Target(String),
}

/// One boundary walk: the flags it visits and the leaves it passes, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWalk {
    steps: Vec<(usize, Side)>,
    labels: Vec<Label>,
}

impl BoundaryWalk {
    /// `(dart, side)` flags in traversal order.
    pub fn steps(&self) -> &[(usize, Side)] {
        &self.steps
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }
}

/// A face orbit as alternating edge-side steps `(from flag, to flag)`,
/// rotated so that it ends with a leaf visit whenever it has one.
#[derive(Debug, Clone)]
pub(crate) struct Face {
    pub steps: Vec<(usize, usize)>,
    /// Indices `j` such that `steps[j].1` is a leaf flag.
    pub visits: Vec<usize>,
    pub labels: Vec<Label>,
}

/// The data derived from a valid diagram.
#[derive(Debug, Clone)]
pub(crate) struct Analysis {
    pub target: Permutation,
    /// Per leaf position, the side of the leaf dart lying on its solid segment.
    pub solid_side: Vec<Side>,
    /// Whether every component is solid on the `+` side of its smallest
    /// leaf, the form in which enumerated diagrams are stored.
    pub canonical: bool,
    /// Per flag, whether its side of the edge is marked solid.
    pub solid_flag: Vec<bool>,
}

impl RibbonDiagram {
    pub(crate) fn faces(&self) -> Vec<Face> {
        let nflags = 2 * self.dart_count();
        let mut seen = vec![false; nflags];
        let mut out = Vec::new();
        for f0 in 0..nflags {
            if seen[f0] {
                continue;
            }
            let mut steps = Vec::new();
            let mut f = f0;
            loop {
                let g = self.edge_side(f);
                seen[f] = true;
                seen[g] = true;
                steps.push((f, g));
                f = self.corner(g);
                if f == f0 {
                    break;
                }
            }
            let is_visit = |&(_, g): &(usize, usize)| self.is_leaf_dart(g >> 1);
            if let Some(last) = steps.iter().rposition(is_visit) {
                steps.rotate_left(last + 1);
            }
            let visits: Vec<usize> = (0..steps.len()).filter(|&j| is_visit(&steps[j])).collect();
            let labels = visits.iter().map(|&j| self.leaf_label(steps[j].1 >> 1)).collect();
            out.push(Face { steps, visits, labels });
        }
        out
    }

    pub fn boundary_walks(&self) -> Vec<BoundaryWalk> {
        self.faces()
            .into_iter()
            .map(|face| {
                let steps = face
                    .steps
                    .iter()
                    .flat_map(|&(f, g)| [f, g])
                    .map(|f| (f >> 1, Side::from_bit(f)))
                    .collect();
                BoundaryWalk { steps, labels: face.labels }
            })
            .collect()
    }

    /// For every leaf position, the smallest leaf position in its component.
    pub(crate) fn leaf_components(&self) -> Vec<usize> {
        let mut root = self.dart_components();
        root.truncate(self.leaf_count());
        root
    }

    /// For every dart, the smallest leaf position in its component
    /// (`usize::MAX` in leafless components).
    pub(crate) fn dart_components(&self) -> Vec<usize> {
        let leaves = self.leaf_count();
        let mut root = vec![usize::MAX; self.dart_count()];
        for p in 0..leaves {
            if root[p] != usize::MAX {
                continue;
            }
            root[p] = p;
            let mut stack = vec![p];
            while let Some(d) = stack.pop() {
                let around: Vec<usize> = if self.is_leaf_dart(d) {
                    vec![self.mate[d]]
                } else {
                    self.rotation(self.vertex_of(d)).chain([self.mate[d]]).collect()
                };
                for x in around {
                    if root[x] == usize::MAX {
                        root[x] = p;
                        stack.push(x);
                    }
                }
            }
        }
        root
    }

    /// True iff the flag graph is bipartite under all three involutions.
    pub fn is_orientable(&self) -> bool {
        let n = 2 * self.dart_count();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(f) = stack.pop() {
                for g in [self.corner(f), self.edge_side(f), f ^ 1] {
                    if color[g] == u8::MAX {
                        color[g] = 1 - color[f];
                        stack.push(g);
                    } else if color[g] == color[f] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn validate(&self, symmetry: Symmetry) -> Result<(), ValidationFailure> {
        self.analyze(symmetry).map(|_| ())
    }

    pub fn is_valid(&self, symmetry: Symmetry) -> bool {
        self.analyze(symmetry).is_ok()
    }

    /// The target permutation; on `{1..t}` for unitary diagrams, on `Z_t`
    /// for orthogonal ones.
    pub fn read_target(&self, symmetry: Symmetry) -> Result<Permutation, RibbonError> {
        Ok(self.analyze(symmetry)?.target)
    }

    pub(crate) fn analyze(&self, symmetry: Symmetry) -> Result<Analysis, ValidationFailure> {
        for (vertex, &degree) in self.degrees.iter().enumerate() {
            if degree % 2 == 1 {
                return Err(ValidationFailure::OddDegree { vertex, degree });
            }
            if degree < 4 {
                return Err(ValidationFailure::DegreeTooSmall { vertex, degree });
            }
        }
        let unitary = symmetry == Symmetry::Unitary;
        if unitary && self.has_twists() {
            return Err(ValidationFailure::TwistedEdge);
        }
        let faces = self.faces();
        // Which segment parities may be solid: segment k runs from
        // labels[k-1] to labels[k].
        let mut options = Vec::with_capacity(faces.len());
        for (walk, face) in faces.iter().enumerate() {
            let m = face.labels.len();
            if m == 0 || m % 2 == 1 {
                return Err(ValidationFailure::LeafCount { walk, leaves: m });
            }
            let from = |k: usize| face.labels[(k + m - 1) % m];
            if unitary && (0..m).any(|k| from(k).is_barred() == face.labels[k].is_barred()) {
                return Err(ValidationFailure::LabelPattern { walk });
            }
            let ok = |p: usize| (0..m).filter(|k| k % 2 == p).all(|k| from(k).mirror() == face.labels[k]);
            let opts: Vec<usize> = (0..2).filter(|&p| ok(p)).collect();
            if opts.is_empty() {
                return Err(ValidationFailure::LabelPattern { walk });
            }
            options.push(opts);
        }
        let nflags = 2 * self.dart_count();
        // Segment index of every flag, per face.
        let mut seg_of = vec![(0usize, 0usize); nflags];
        for (fi, face) in faces.iter().enumerate() {
            let mut k = 0;
            for (j, &(f, g)) in face.steps.iter().enumerate() {
                seg_of[f] = (fi, k);
                seg_of[g] = (fi, k);
                if face.visits.get(k) == Some(&j) {
                    k += 1;
                }
            }
        }
        if unitary {
            // Every segment runs from an unbarred to a barred leaf; both sides
            // of an edge must traverse it from the same end.
            let mut from_dart = vec![usize::MAX; nflags];
            for face in &faces {
                let m = face.labels.len();
                let mut k = 0;
                for (j, &(f, g)) in face.steps.iter().enumerate() {
                    let forward = !face.labels[(k + m - 1) % m].is_barred();
                    let d = if forward { f >> 1 } else { g >> 1 };
                    from_dart[f] = d;
                    from_dart[g] = d;
                    if face.visits.get(k) == Some(&j) {
                        k += 1;
                    }
                }
            }
            for d in 0..self.dart_count() {
                if from_dart[2 * d] != from_dart[2 * d + 1] {
                    return Err(ValidationFailure::Direction);
                }
            }
        }
        let ambiguous: Vec<usize> = (0..faces.len()).filter(|&i| options[i].len() == 2).collect();
        if ambiguous.len() > 20 {
            return Err(ValidationFailure::Marking);
        }
        let ground = self.ground();
        let component = self.leaf_components();
        // Solid sides at the leaves and dashed neighbours under a marking.
        let read = |parity: &[usize]| -> (Vec<Side>, Vec<usize>) {
            let mut solid_side = vec![Side::Plus; ground.len()];
            let mut dashed_next = vec![usize::MAX; ground.len()];
            for (fi, face) in faces.iter().enumerate() {
                let m = face.labels.len();
                for k in 0..m {
                    let here = ground.position(face.labels[k]).expect("leaf label");
                    let prev = ground.position(face.labels[(k + m - 1) % m]).expect("leaf label");
                    let next = ground.position(face.labels[(k + 1) % m]).expect("leaf label");
                    let end_flag = face.steps[face.visits[k]].1;
                    if k % 2 == parity[fi] {
                        solid_side[here] = Side::from_bit(end_flag);
                        dashed_next[here] = next;
                    } else {
                        solid_side[here] = Side::from_bit(end_flag ^ 1);
                        dashed_next[here] = prev;
                    }
                }
            }
            (solid_side, dashed_next)
        };
        // A component admits at most two markings, complementary to each
        // other; the canonical one is solid on the `+` side of its smallest leaf.
        let mut parity: Vec<usize> = options.iter().map(|o| o[0]).collect();
        let mut chosen: Option<(Vec<usize>, bool)> = None;
        for mask in 0u32..(1 << ambiguous.len()) {
            for (b, &fi) in ambiguous.iter().enumerate() {
                parity[fi] = ((mask >> b) & 1) as usize;
            }
            let solid = |f: usize| {
                let (fi, k) = seg_of[f];
                k % 2 == parity[fi]
            };
            if !(0..self.dart_count()).all(|d| solid(2 * d) != solid(2 * d + 1)) {
                continue;
            }
            let (sides, _) = read(&parity);
            let canonical = (0..ground.len()).all(|p| component[p] != p || sides[p] == Side::Plus);
            if canonical {
                chosen = Some((parity.clone(), true));
                break;
            }
            if chosen.is_none() {
                chosen = Some((parity.clone(), false));
            }
        }
        let Some((parity, canonical)) = chosen else {
            return Err(ValidationFailure::Marking);
        };
        let (solid_side, dashed_next) = read(&parity);
        let solid_flag = (0..nflags)
            .map(|f| {
                let (fi, k) = seg_of[f];
                k % 2 == parity[fi]
            })
            .collect();
        let target = self.assemble_target(symmetry, &dashed_next)?;
        Ok(Analysis { target, solid_side, canonical, solid_flag })
    }

    fn assemble_target(&self, symmetry: Symmetry, dashed_next: &[usize]) -> Result<Permutation, ValidationFailure> {
        let ground = self.ground();
        let err = |e: crate::perm::PermError| ValidationFailure::Target(e.to_string());
        match symmetry {
            Symmetry::Unitary => {
                let plain = GroundSet::Plain(self.t);
                let images = (0..self.t as usize)
                    .map(|j| {
                        let img = ground.label(dashed_next[2 * j + 1]);
                        if img.is_barred() {
                            Err(ValidationFailure::Target(format!("{} maps to barred {img}", j + 1)))
                        } else {
                            Ok(img)
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Permutation::from_images(plain, &images).map_err(err)
            }
            Symmetry::Orthogonal => {
                let images: Vec<u32> = (0..ground.len()).map(|p| dashed_next[p ^ 1] as u32).collect();
                Permutation::from_positions(ground, images).map_err(err)
            }
        }
    }
}
