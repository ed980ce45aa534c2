//! Diagrams as ribbon graphs: leaves carry the labels of `Z_t`, internal
//! vertices are encounters, and boundary walks carry the trajectories.
//!
//! A diagram is stored in a normalized layout. Dart `p < 2t` is the single
//! dart of the leaf whose label sits at position `p` of `Z_t` (so `p ^ 1` is
//! the mirror leaf). Internal vertex `k` owns a contiguous block of darts,
//! listed in rotation order.
//!
//! Each dart has two sides, giving flags `(d, +)` and `(d, -)`, encoded as
//! `2d` and `2d + 1`. Three involutions act on flags:
//! - corner: `(d, +) ↔ (next(d), -)`, where `next` is the rotation;
//! - edge side: `(d, ±) ↔ (mate(d), ∓)`, or `(mate(d), ±)` on a twisted edge;
//! - side swap: `(d, +) ↔ (d, -)`.
//!
//! Faces are orbits of corner and edge side. Isomorphisms are flag
//! bijections commuting with all three and fixing leaf labels, so mirror
//! images and vertex flips are identified.

mod cancel;
mod dot;
mod enumerate;
mod faces;
mod iso;
mod ops;

use std::fmt;

use thiserror::Error;

use crate::perm::{GroundSet, Label, PermError};

pub use cancel::{cancellation_partner, diagram_of_factors, FixedPoint, Partner};
pub use dot::to_dot;
pub use enumerate::{
    enumerate_all, enumerate_diagrams, enumerate_diagrams_with_limit, signed_sum, signed_sum_with_limit,
    DEFAULT_MATCHING_LIMIT,
};
pub use faces::{BoundaryWalk, ValidationFailure};
pub use iso::certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    Unitary,
    Orthogonal,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Unitary => "unitary",
            Symmetry::Orthogonal => "orthogonal",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    fn bit(self) -> usize {
        match self {
            Side::Plus => 0,
            Side::Minus => 1,
        }
    }

    fn from_bit(b: usize) -> Self {
        if b & 1 == 0 {
            Side::Plus
        } else {
            Side::Minus
        }
    }
}

/// Index of an internal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RibbonError {
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("label {0} is not a leaf of this diagram")]
    NoSuchLeaf(Label),
    #[error("no internal vertex {0}")]
    NoSuchVertex(usize),
    #[error("operation not applicable: {0}")]
    Precondition(String),
    #[error("invalid diagram: {0}")]
    Invalid(ValidationFailure),
    #[error("search would visit about {estimate} gluings, above the limit {limit}")]
    ResourceGuard { estimate: u128, limit: u128 },
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl From<ValidationFailure> for RibbonError {
    fn from(v: ValidationFailure) -> Self {
        RibbonError::Invalid(v)
    }
}

/// Counts that fix the weight `(-1)^v N^-(e-v)` of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagramContribution {
    pub internal_vertices: usize,
    pub edges: usize,
    pub order: i64,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RibbonDiagram {
    t: u32,
    degrees: Vec<usize>,
    starts: Vec<usize>,
    mate: Vec<usize>,
    twisted: Vec<bool>,
}

impl RibbonDiagram {
    /// The diagram of `t` disjoint edges `(z, z̄)`.
    pub fn untied(t: u32) -> Self {
        let n = 2 * t as usize;
        RibbonDiagram {
            t,
            degrees: Vec::new(),
            starts: Vec::new(),
            mate: (0..n).map(|p| p ^ 1).collect(),
            twisted: vec![false; n],
        }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::Barred(self.t)
    }

    pub fn leaf_count(&self) -> usize {
        2 * self.t as usize
    }

    pub fn dart_count(&self) -> usize {
        self.mate.len()
    }

    pub fn internal_vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.degrees.get(v.0).copied()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn contribution(&self) -> DiagramContribution {
        let v = self.internal_vertex_count();
        let e = self.edge_count();
        DiagramContribution {
            internal_vertices: v,
            edges: e,
            order: e as i64 - v as i64,
            sign: if v % 2 == 0 { 1 } else { -1 },
        }
    }

    /// Number of connected components, each holding at least one leaf pair
    /// in a valid diagram.
    pub fn component_count(&self) -> usize {
        let roots = self.dart_components();
        let mut seen: Vec<usize> = roots.into_iter().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn has_twists(&self) -> bool {
        self.twisted.iter().any(|&t| t)
    }

    fn is_leaf_dart(&self, d: usize) -> bool {
        d < self.leaf_count()
    }

    fn leaf_label(&self, d: usize) -> Label {
        self.ground().label(d)
    }

    fn leaf_dart(&self, z: Label) -> Result<usize, RibbonError> {
        self.ground().position(z).ok_or(RibbonError::NoSuchLeaf(z))
    }

    /// Internal vertex owning dart `d` (which must not be a leaf dart).
    fn vertex_of(&self, d: usize) -> usize {
        debug_assert!(!self.is_leaf_dart(d));
        match self.starts.binary_search(&d) {
            Ok(k) => k,
            Err(k) => k - 1,
        }
    }

    fn rotation(&self, k: usize) -> std::ops::Range<usize> {
        self.starts[k]..self.starts[k] + self.degrees[k]
    }

    fn next(&self, d: usize) -> usize {
        if self.is_leaf_dart(d) {
            return d;
        }
        let k = self.vertex_of(d);
        let (s, n) = (self.starts[k], self.degrees[k]);
        s + (d - s + 1) % n
    }

    fn prev(&self, d: usize) -> usize {
        if self.is_leaf_dart(d) {
            return d;
        }
        let k = self.vertex_of(d);
        let (s, n) = (self.starts[k], self.degrees[k]);
        s + (d - s + n - 1) % n
    }

    fn corner(&self, f: usize) -> usize {
        let d = f >> 1;
        if f & 1 == 0 {
            2 * self.next(d) + 1
        } else {
            2 * self.prev(d)
        }
    }

    fn edge_side(&self, f: usize) -> usize {
        let d = f >> 1;
        let m = self.mate[d];
        if self.twisted[d] {
            2 * m + (f & 1)
        } else {
            2 * m + (1 - (f & 1))
        }
    }

    fn from_layout(t: u32, degrees: Vec<usize>, mate: Vec<usize>, twisted: Vec<bool>) -> Result<Self, RibbonError> {
        let leaves = 2 * t as usize;
        let mut starts = Vec::with_capacity(degrees.len());
        let mut next = leaves;
        for &k in &degrees {
            starts.push(next);
            next += k;
        }
        if next != mate.len() || twisted.len() != mate.len() {
            return Err(RibbonError::Malformed("dart count does not match vertex degrees".into()));
        }
        for (d, &m) in mate.iter().enumerate() {
            if m >= mate.len() || m == d || mate[m] != d {
                return Err(RibbonError::Malformed(format!("dart {d} is not properly paired")));
            }
            if twisted[m] != twisted[d] {
                return Err(RibbonError::Malformed(format!("twist flags disagree on edge at dart {d}")));
            }
        }
        Ok(RibbonDiagram { t, degrees, starts, mate, twisted })
    }
}

/// One end of an edge in a [`DiagramBuilder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Leaf(Label),
    Slot(VertexId, usize),
}

/// Assembles a diagram from internal-vertex degrees and edges between
/// leaves and rotation slots.
#[derive(Debug, Clone)]
pub struct DiagramBuilder {
    t: u32,
    degrees: Vec<usize>,
    edges: Vec<(End, End, bool)>,
}

impl DiagramBuilder {
    pub fn new(t: u32) -> Self {
        DiagramBuilder { t, degrees: Vec::new(), edges: Vec::new() }
    }

    pub fn vertex(&mut self, degree: usize) -> VertexId {
        self.degrees.push(degree);
        VertexId(self.degrees.len() - 1)
    }

    pub fn edge(&mut self, a: End, b: End) -> &mut Self {
        self.edges.push((a, b, false));
        self
    }

    pub fn twisted_edge(&mut self, a: End, b: End) -> &mut Self {
        self.edges.push((a, b, true));
        self
    }

    pub fn build(&self) -> Result<RibbonDiagram, RibbonError> {
        let ground = GroundSet::Barred(self.t);
        let leaves = ground.len();
        let mut starts = Vec::new();
        let mut total = leaves;
        for &k in &self.degrees {
            starts.push(total);
            total += k;
        }
        let dart = |e: End| -> Result<usize, RibbonError> {
            match e {
                End::Leaf(z) => ground.position(z).ok_or(RibbonError::NoSuchLeaf(z)),
                End::Slot(v, i) => {
                    let k = *self.degrees.get(v.0).ok_or(RibbonError::NoSuchVertex(v.0))?;
                    if i >= k {
                        return Err(RibbonError::Malformed(format!("slot {i} out of range at vertex {}", v.0)));
                    }
                    Ok(starts[v.0] + i)
                }
            }
        };
        let mut mate = vec![usize::MAX; total];
        let mut twisted = vec![false; total];
        for &(a, b, tw) in &self.edges {
            let (x, y) = (dart(a)?, dart(b)?);
            if x == y || mate[x] != usize::MAX || mate[y] != usize::MAX {
                return Err(RibbonError::Malformed(format!("dart used twice in edge {a:?}-{b:?}")));
            }
            mate[x] = y;
            mate[y] = x;
            twisted[x] = tw;
            twisted[y] = tw;
        }
        if let Some(d) = mate.iter().position(|&m| m == usize::MAX) {
            return Err(RibbonError::Malformed(format!("dart {d} has no edge")));
        }
        RibbonDiagram::from_layout(self.t, self.degrees.clone(), mate, twisted)
    }
}

impl fmt::Display for RibbonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |d: usize| -> String {
            if self.is_leaf_dart(d) {
                format!("{}", self.leaf_label(d))
            } else {
                let k = self.vertex_of(d);
                format!("v{k}.{}", d - self.starts[k])
            }
        };
        let mut first = true;
        for d in 0..self.mate.len() {
            let m = self.mate[d];
            if m < d {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}-{}{}", name(d), name(m), if self.twisted[d] { "~" } else { "" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn l(v: i64) -> Label {
        Label::from_signed(v).unwrap()
    }

    pub fn leaf(v: i64) -> End {
        End::Leaf(l(v))
    }

    /// `(1,1̄)` and `(2,2̄)` as disjoint edges.
    pub fn two_edges() -> RibbonDiagram {
        RibbonDiagram::untied(2)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn builder_matches_untied_layout() {
        let mut b = DiagramBuilder::new(2);
        b.edge(leaf(1), leaf(-1)).edge(leaf(2), leaf(-2));
        assert_eq!(b.build().unwrap(), two_edges());
    }

    #[test]
    fn builder_rejects_unpaired_darts() {
        let mut b = DiagramBuilder::new(1);
        let v = b.vertex(4);
        b.edge(leaf(1), End::Slot(v, 0)).edge(leaf(-1), End::Slot(v, 2));
        assert!(matches!(b.build(), Err(RibbonError::Malformed(_))));
    }

    #[test]
    fn contribution_counts() {
        let c = two_edges().contribution();
        assert_eq!((c.internal_vertices, c.edges, c.order, c.sign), (0, 2, 2, 1));
    }
}
