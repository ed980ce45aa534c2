//! Tying and untying leaves, contracting edges and splitting vertices.
//!
//! Operations run on an editable layout with free dart ids and are
//! renormalized afterwards. Leaf darts keep their side names through every
//! edit except [`Editable::rename_sides`], so solid sides of leaves can be
//! tracked across a sequence of operations.

use super::{RibbonDiagram, RibbonError, Side, Symmetry, VertexId};
use crate::perm::Label;

#[derive(Debug, Clone)]
pub(crate) struct Editable {
    pub t: u32,
    /// Dart of each leaf, by label position.
    pub leaf_dart: Vec<usize>,
    /// Rotation of each internal vertex.
    pub rot: Vec<Vec<usize>>,
    pub mate: Vec<usize>,
    pub twisted: Vec<bool>,
}

impl Editable {
    pub fn from_diagram(d: &RibbonDiagram) -> Self {
        Editable {
            t: d.t,
            leaf_dart: (0..d.leaf_count()).collect(),
            rot: (0..d.degrees.len()).map(|k| d.rotation(k).collect()).collect(),
            mate: d.mate.clone(),
            twisted: d.twisted.clone(),
        }
    }

    pub fn into_diagram(self) -> RibbonDiagram {
        let mut id = vec![usize::MAX; self.mate.len()];
        let mut next = 0;
        for &d in &self.leaf_dart {
            id[d] = next;
            next += 1;
        }
        for r in &self.rot {
            for &d in r {
                id[d] = next;
                next += 1;
            }
        }
        let mut mate = vec![0; next];
        let mut twisted = vec![false; next];
        for (old, &new) in id.iter().enumerate() {
            if new != usize::MAX {
                mate[new] = id[self.mate[old]];
                twisted[new] = self.twisted[old];
            }
        }
        let degrees = self.rot.iter().map(Vec::len).collect();
        RibbonDiagram::from_layout(self.t, degrees, mate, twisted).expect("edits keep the layout consistent")
    }

    fn new_dart(&mut self) -> usize {
        self.mate.push(usize::MAX);
        self.twisted.push(false);
        self.mate.len() - 1
    }

    fn link(&mut self, a: usize, b: usize, twisted: bool) {
        self.mate[a] = b;
        self.mate[b] = a;
        self.twisted[a] = twisted;
        self.twisted[b] = twisted;
    }

    /// Swap the names of the two sides of dart `d`; toggles its edge twist.
    pub fn rename_sides(&mut self, d: usize) {
        let m = self.mate[d];
        let tw = !self.twisted[d];
        self.twisted[d] = tw;
        self.twisted[m] = tw;
    }

    fn leaf_position(&self, d: usize) -> Option<usize> {
        self.leaf_dart.iter().position(|&x| x == d)
    }

    fn locate(&self, d: usize) -> Option<(usize, usize)> {
        self.rot.iter().enumerate().find_map(|(k, r)| r.iter().position(|&x| x == d).map(|i| (k, i)))
    }

    /// Reverse the rotation at vertex `k`, renaming the sides of its darts.
    pub fn flip(&mut self, k: usize) {
        let r = self.rot[k].clone();
        for &d in &r {
            self.rename_sides(d);
        }
        let n = r.len();
        self.rot[k] = (0..n).map(|i| r[(n - i) % n]).collect();
    }

    /// Tie leaves at positions `p1`, `p2` whose solid sides are given.
    /// Afterwards both leaves have solid side `+`.
    pub fn tie(&mut self, p1: usize, p2: usize, solid1: Side, solid2: Side) {
        let (l1, l2) = (self.leaf_dart[p1], self.leaf_dart[p2]);
        if solid1 == Side::Minus {
            self.rename_sides(l1);
        }
        if solid2 == Side::Minus {
            self.rename_sides(l2);
        }
        let (q1, q2, n1, n2) = (self.new_dart(), self.new_dart(), self.new_dart(), self.new_dart());
        self.link(n1, q1, false);
        self.link(n2, q2, false);
        self.rot.push(vec![l1, q1, l2, q2]);
        self.leaf_dart[p1] = n1;
        self.leaf_dart[p2] = n2;
    }

    /// Untie internal vertex `k`, which must have degree 4 with the leaves
    /// at positions `p1`, `p2` on opposite darts. Returns the new solid
    /// sides of the two leaves.
    pub fn untie(&mut self, k: usize, p1: usize, p2: usize, solid1: Side, solid2: Side) -> Result<(Side, Side), RibbonError> {
        let r = self.rot[k].clone();
        if r.len() != 4 {
            return Err(RibbonError::Precondition(format!("vertex {k} has degree {}", r.len())));
        }
        let (n1, n2) = (self.leaf_dart[p1], self.leaf_dart[p2]);
        let (q1, q2) = (self.mate[n1], self.mate[n2]);
        let (i1, i2) = match (r.iter().position(|&x| x == q1), r.iter().position(|&x| x == q2)) {
            (Some(a), Some(b)) if (a + 2) % 4 == b => (a, b),
            _ => return Err(RibbonError::Precondition("leaves are not on opposite darts".into())),
        };
        // Follow each leaf's solid side across its edge and around the corner.
        let follow = |n: usize, i: usize, solid: Side| -> (usize, Side) {
            let crossed = if self.twisted[n] { solid.bit() } else { 1 - solid.bit() };
            if crossed == 0 {
                (r[(i + 1) % 4], Side::Minus)
            } else {
                (r[(i + 3) % 4], Side::Plus)
            }
        };
        let (a1, s1) = follow(n1, i1, solid1);
        let (a2, s2) = follow(n2, i2, solid2);
        if a1 == a2 {
            return Err(RibbonError::Precondition("solid sides of the two leaves meet the same edge".into()));
        }
        self.rot.remove(k);
        self.leaf_dart[p1] = a1;
        self.leaf_dart[p2] = a2;
        Ok((s1, s2))
    }

    /// Contract the edge opposite dart `a` at the degree-4 vertex `k`.
    pub fn contract(&mut self, k: usize, a: usize) -> Result<(), RibbonError> {
        let i = self.rot[k]
            .iter()
            .position(|&x| x == a)
            .ok_or_else(|| RibbonError::Precondition("dart not at vertex".into()))?;
        if self.rot[k].len() != 4 {
            return Err(RibbonError::Precondition(format!("vertex {k} has degree {}", self.rot[k].len())));
        }
        let c = self.rot[k][(i + 2) % 4];
        let c2 = self.mate[c];
        let Some((y, _)) = self.locate(c2) else {
            return Err(RibbonError::Precondition("opposite edge ends in a leaf".into()));
        };
        if y == k {
            return Err(RibbonError::Precondition("opposite edge is a loop".into()));
        }
        if self.twisted[c] {
            self.flip(k);
        }
        let r = &self.rot[k];
        let i = r.iter().position(|&x| x == a).expect("a at k");
        let (b, d) = (r[(i + 1) % 4], r[(i + 3) % 4]);
        let (_, j) = self.locate(c2).expect("c' at y");
        self.rot[y].splice(j..=j, [d, a, b]);
        self.rot.remove(k);
        Ok(())
    }

    /// Split vertex `k` (degree ≥ 6) by moving dart `a` and its two
    /// neighbours onto a new degree-4 vertex.
    pub fn split(&mut self, k: usize, a: usize) -> Result<(), RibbonError> {
        let n = self.rot[k].len();
        if n < 6 {
            return Err(RibbonError::Precondition(format!("vertex {k} has degree {n}")));
        }
        let i = self.rot[k]
            .iter()
            .position(|&x| x == a)
            .ok_or_else(|| RibbonError::Precondition("dart not at vertex".into()))?;
        self.rot[k].rotate_left((i + n - 1) % n);
        let (d, a, b) = (self.rot[k][0], self.rot[k][1], self.rot[k][2]);
        let (c, c2) = (self.new_dart(), self.new_dart());
        self.link(c, c2, false);
        self.rot[k].splice(0..3, [c2]);
        self.rot.push(vec![a, b, c, d]);
        Ok(())
    }

    /// Flip vertices so that every edge is untwisted, if the map is
    /// orientable. Returns whether that succeeded; leaf sides are renamed
    /// for flipped leaves, reported through `renamed`.
    pub fn untwist(&mut self, renamed: &mut [bool]) -> bool {
        let leaves = self.leaf_dart.len();
        // Vertex numbering: leaves 0..leaves, then internal.
        let total = leaves + self.rot.len();
        let mut owner = vec![usize::MAX; self.mate.len()];
        for (p, &d) in self.leaf_dart.iter().enumerate() {
            owner[d] = p;
        }
        for (k, r) in self.rot.iter().enumerate() {
            for &d in r {
                owner[d] = leaves + k;
            }
        }
        let darts_of = |v: usize| -> Vec<usize> {
            if v < leaves {
                vec![self.leaf_dart[v]]
            } else {
                self.rot[v - leaves].clone()
            }
        };
        let mut flip = vec![u8::MAX; total];
        for s in 0..total {
            if flip[s] != u8::MAX {
                continue;
            }
            flip[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for d in darts_of(v) {
                    let w = owner[self.mate[d]];
                    let want = flip[v] ^ self.twisted[d] as u8;
                    if flip[w] == u8::MAX {
                        flip[w] = want;
                        stack.push(w);
                    } else if flip[w] != want {
                        return false;
                    }
                }
            }
        }
        for v in 0..total {
            if flip[v] == 1 {
                if v < leaves {
                    let d = self.leaf_dart[v];
                    self.rename_sides(d);
                    renamed[v] = !renamed[v];
                } else {
                    self.flip(v - leaves);
                }
            }
        }
        debug_assert!(self.twisted.iter().enumerate().all(|(d, &t)| !t || owner[d] == usize::MAX));
        true
    }

    pub fn vertex_of_dart(&self, d: usize) -> Option<usize> {
        self.locate(d).map(|(k, _)| k)
    }

    pub fn is_leaf(&self, d: usize) -> bool {
        self.leaf_position(d).is_some()
    }

    pub fn leaf_at(&self, d: usize) -> Option<usize> {
        self.leaf_position(d)
    }
}

impl RibbonDiagram {
    /// Tie leaves `z1`, `z2` into a new degree-4 vertex.
    pub fn tie_leaves(&self, z1: Label, z2: Label, symmetry: Symmetry) -> Result<RibbonDiagram, RibbonError> {
        let (p1, p2) = (self.leaf_dart(z1)?, self.leaf_dart(z2)?);
        if p1 == p2 {
            return Err(RibbonError::Precondition("cannot tie a leaf to itself".into()));
        }
        if symmetry == Symmetry::Unitary && z1.is_barred() != z2.is_barred() {
            return Err(RibbonError::Precondition("unitary tying needs leaves of one kind".into()));
        }
        let mut solid = self.analyze(symmetry)?.solid_side;
        let mut e = Editable::from_diagram(self);
        e.tie(p1, p2, solid[p1], solid[p2]);
        solid[p1] = Side::Plus;
        solid[p2] = Side::Plus;
        Ok(finish(e, symmetry, solid))
    }

    /// Untie a degree-4 vertex carrying two leaves on opposite darts.
    pub fn untie_vertex(&self, vertex: VertexId, symmetry: Symmetry) -> Result<RibbonDiagram, RibbonError> {
        let k = vertex.0;
        let deg = self.degree(vertex).ok_or(RibbonError::NoSuchVertex(k))?;
        if deg != 4 {
            return Err(RibbonError::Precondition(format!("vertex {k} has degree {deg}")));
        }
        let r: Vec<usize> = self.rotation(k).collect();
        let leafy = |i: usize| self.is_leaf_dart(self.mate[r[i]]);
        let pair = (0..2)
            .filter(|&i| leafy(i) && leafy(i + 2))
            .min_by_key(|&i| self.leaf_label(self.mate[r[i]]).min(self.leaf_label(self.mate[r[i + 2]])))
            .ok_or_else(|| RibbonError::Precondition("no two leaves on opposite darts".into()))?;
        let (p1, p2) = (self.mate[r[pair]], self.mate[r[pair + 2]]);
        let mut solid = self.analyze(symmetry)?.solid_side;
        let mut e = Editable::from_diagram(self);
        (solid[p1], solid[p2]) = e.untie(k, p1, p2, solid[p1], solid[p2])?;
        Ok(finish(e, symmetry, solid))
    }

    /// Contract an edge between two internal vertices, one of which has
    /// degree 4 with a leaf on the opposite dart. The edge is named by
    /// either of its darts' vertex and slot.
    pub fn contract_edge(&self, vertex: VertexId, slot: usize) -> Result<RibbonDiagram, RibbonError> {
        let k = vertex.0;
        let deg = self.degree(vertex).ok_or(RibbonError::NoSuchVertex(k))?;
        if slot >= deg {
            return Err(RibbonError::Precondition(format!("slot {slot} out of range")));
        }
        let c = self.starts[k] + slot;
        let c2 = self.mate[c];
        if self.is_leaf_dart(c2) {
            return Err(RibbonError::Precondition("edge ends in a leaf".into()));
        }
        // Candidate centres: the degree-4 end whose opposite dart holds a leaf.
        let candidate = |x: usize, cx: usize| -> Option<(Label, usize, usize)> {
            if self.degrees[x] != 4 {
                return None;
            }
            let s = self.starts[x];
            let a = s + (cx - s + 2) % 4;
            let leaf = self.mate[a];
            self.is_leaf_dart(leaf).then(|| (self.leaf_label(leaf), x, a))
        };
        let y = self.vertex_of(c2);
        let best = [candidate(k, c), candidate(y, c2)].into_iter().flatten().min();
        let Some((_, x, a)) = best else {
            return Err(RibbonError::Precondition("neither end is a degree-4 vertex opposite a leaf".into()));
        };
        let mut e = Editable::from_diagram(self);
        e.contract(x, a)?;
        Ok(e.into_diagram())
    }

    /// Split a vertex of degree ≥ 6 next to the leaf `leaf`.
    pub fn split_vertex(&self, vertex: VertexId, leaf: Label) -> Result<RibbonDiagram, RibbonError> {
        let k = vertex.0;
        self.degree(vertex).ok_or(RibbonError::NoSuchVertex(k))?;
        let p = self.leaf_dart(leaf)?;
        let a = self.mate[p];
        if self.is_leaf_dart(a) || self.vertex_of(a) != k {
            return Err(RibbonError::Precondition(format!("leaf {leaf} is not attached to vertex {k}")));
        }
        let mut e = Editable::from_diagram(self);
        e.split(k, a)?;
        Ok(e.into_diagram())
    }

    /// Flip vertices until no edge is twisted, when the map is orientable.
    pub fn untwisted(&self) -> Option<RibbonDiagram> {
        let mut e = Editable::from_diagram(self);
        let mut renamed = vec![false; self.leaf_count()];
        e.untwist(&mut renamed).then(|| e.into_diagram())
    }
}

/// Renormalize after edits, given the solid side of every leaf: untwist
/// unitary diagrams, then mirror each component whose smallest leaf is solid
/// on its `-` side, so the tracked marking is the canonical one.
pub(crate) fn finish(mut e: Editable, symmetry: Symmetry, mut solid: Vec<Side>) -> RibbonDiagram {
    if symmetry == Symmetry::Unitary {
        let mut renamed = vec![false; e.leaf_dart.len()];
        e.untwist(&mut renamed);
        for (s, r) in solid.iter_mut().zip(renamed) {
            if r {
                *s = if *s == Side::Plus { Side::Minus } else { Side::Plus };
            }
        }
    }
    let d = e.into_diagram();
    let component = d.dart_components();
    let flipped: Vec<usize> = (0..solid.len()).filter(|&p| component[p] == p && solid[p] == Side::Minus).collect();
    if flipped.is_empty() {
        return d;
    }
    let mut e = Editable::from_diagram(&d);
    for p in 0..solid.len() {
        if flipped.contains(&component[p]) {
            e.rename_sides(e.leaf_dart[p]);
        }
    }
    for k in 0..e.rot.len() {
        if flipped.contains(&component[e.rot[k][0]]) {
            e.flip(k);
        }
    }
    e.into_diagram()
}
