//! Permutations on plain label sets `{1..t}` and barred sets
//! `Z_t = {1, 1̄, .., t, t̄}`, cycle types, and target-permutation extraction.
//!
//! Composition is right-to-left: `p.compose(&q)` maps `x` to `p(q(x))`.
//! Barred labels are written as negative integers in every textual form.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("ground sets differ: {0} vs {1}")]
    MismatchedGroundSets(GroundSet, GroundSet),
    #[error("expected a permutation on a barred set, got {0}")]
    NotBarred(GroundSet),
    #[error("expected a permutation on a plain set, got {0}")]
    NotPlain(GroundSet),
    #[error("image table is not a bijection")]
    NotBijection,
    #[error("label {0} is outside the ground set {1}")]
    LabelOutOfRange(Label, GroundSet),
    #[error("not a valid orthogonal target: {0}")]
    InvalidOrthogonalTarget(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A leaf or trajectory-end label: `k` or `k̄`.
///
/// The derived order is the fixed linear order on `Z_t`:
/// `1 < 1̄ < 2 < 2̄ < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    index: u32,
    barred: bool,
}

impl Label {
    pub fn plain(index: u32) -> Self {
        assert!(index >= 1, "labels start at 1");
        Label { index, barred: false }
    }

    pub fn bar(index: u32) -> Self {
        assert!(index >= 1, "labels start at 1");
        Label { index, barred: true }
    }

    /// Signed-integer encoding: `k ↔ k`, `k̄ ↔ -k`.
    pub fn from_signed(v: i64) -> Option<Self> {
        match v.cmp(&0) {
            Ordering::Greater => u32::try_from(v).ok().map(Label::plain),
            Ordering::Less => u32::try_from(-v).ok().map(Label::bar),
            Ordering::Equal => None,
        }
    }

    pub fn to_signed(self) -> i64 {
        if self.barred {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// The mirror label: `k ↦ k̄`, `k̄ ↦ k`.
    pub fn mirror(self) -> Self {
        Label { index: self.index, barred: !self.barred }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

/// The domain of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundSet {
    /// `{1..t}`
    Plain(u32),
    /// `Z_t = {1, 1̄, .., t, t̄}`
    Barred(u32),
}

impl GroundSet {
    pub fn t(self) -> u32 {
        match self {
            GroundSet::Plain(t) | GroundSet::Barred(t) => t,
        }
    }

    pub fn len(self) -> usize {
        match self {
            GroundSet::Plain(t) => t as usize,
            GroundSet::Barred(t) => 2 * t as usize,
        }
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }

    pub fn is_barred(self) -> bool {
        matches!(self, GroundSet::Barred(_))
    }

    pub fn position(self, l: Label) -> Option<usize> {
        match self {
            GroundSet::Plain(t) => (!l.barred && l.index <= t).then(|| l.index as usize - 1),
            GroundSet::Barred(t) => {
                (l.index <= t).then(|| 2 * (l.index as usize - 1) + l.barred as usize)
            }
        }
    }

    pub fn label(self, pos: usize) -> Label {
        match self {
            GroundSet::Plain(_) => Label::plain(pos as u32 + 1),
            GroundSet::Barred(_) => Label { index: (pos / 2) as u32 + 1, barred: pos % 2 == 1 },
        }
    }

    /// All labels in the linear order.
    pub fn labels(self) -> impl Iterator<Item = Label> {
        (0..self.len()).map(move |p| self.label(p))
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundSet::Plain(t) => write!(f, "{{1..{t}}}"),
            GroundSet::Barred(t) => write!(f, "Z_{t}"),
        }
    }
}

/// A bijection of a [`GroundSet`], stored as an image table over positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    ground: GroundSet,
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(ground: GroundSet) -> Self {
        Permutation { ground, images: (0..ground.len() as u32).collect() }
    }

    /// Build from an image table given in position order.
    pub fn from_positions(ground: GroundSet, images: Vec<u32>) -> Result<Self, PermError> {
        if images.len() != ground.len() {
            return Err(PermError::NotBijection);
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= seen.len() || seen[i] {
                return Err(PermError::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation { ground, images })
    }

    /// Build from the images of the labels, listed in the linear order of the
    /// ground set.
    pub fn from_images(ground: GroundSet, images: &[Label]) -> Result<Self, PermError> {
        let pos = images
            .iter()
            .map(|&l| {
                ground
                    .position(l)
                    .map(|p| p as u32)
                    .ok_or(PermError::LabelOutOfRange(l, ground))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_positions(ground, pos)
    }

    /// Build from a list of cycles; unlisted labels are fixed.
    pub fn from_cycles(ground: GroundSet, cycles: &[Vec<Label>]) -> Result<Self, PermError> {
        let mut images: Vec<Option<u32>> = vec![None; ground.len()];
        for cycle in cycles {
            for (i, &l) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                let p = ground.position(l).ok_or(PermError::LabelOutOfRange(l, ground))?;
                let q = ground.position(next).ok_or(PermError::LabelOutOfRange(next, ground))?;
                if images[p].is_some() {
                    return Err(PermError::NotBijection);
                }
                images[p] = Some(q as u32);
            }
        }
        let images = images.iter().enumerate().map(|(p, im)| im.unwrap_or(p as u32)).collect();
        Self::from_positions(ground, images)
    }

    /// A transposition `(a b)`; `a == b` gives the identity.
    pub fn transposition(ground: GroundSet, a: Label, b: Label) -> Result<Self, PermError> {
        if a == b {
            ground.position(a).ok_or(PermError::LabelOutOfRange(a, ground))?;
            return Ok(Self::identity(ground));
        }
        Self::from_cycles(ground, &[vec![a, b]])
    }

    /// `T = (1 1̄)(2 2̄)..(t t̄)` on `Z_t`.
    pub fn bar_involution(t: u32) -> Self {
        let images = (0..2 * t).map(|p| p ^ 1).collect();
        Permutation { ground: GroundSet::Barred(t), images }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &i)| p as u32 == i)
    }

    pub fn positions(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, l: Label) -> Label {
        let p = self.ground.position(l).expect("label outside ground set");
        self.ground.label(self.images[p] as usize)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.ground != other.ground {
            return Err(PermError::MismatchedGroundSets(self.ground, other.ground));
        }
        let images = other.images.iter().map(|&i| self.images[i as usize]).collect();
        Ok(Permutation { ground: self.ground, images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (p, &i) in self.images.iter().enumerate() {
            images[i as usize] = p as u32;
        }
        Permutation { ground: self.ground, images }
    }

    /// Cycles (fixed points included), each starting at its least label,
    /// ordered by that label.
    pub fn cycles(&self) -> Vec<Vec<Label>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(self.ground.label(p));
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut count = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
            }
        }
        count
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// One-line notation: images of the labels in the ground-set order.
    pub fn one_line(&self) -> Vec<i64> {
        self.images.iter().map(|&i| self.ground.label(i as usize).to_signed()).collect()
    }

    /// Inverse of [`Permutation::one_line`]. A barred ground set is assumed as
    /// soon as any entry is negative or `barred` is set.
    pub fn from_one_line(values: &[i64], barred: bool) -> Result<Self, PermError> {
        let barred = barred || values.iter().any(|&v| v < 0);
        let ground = if barred {
            if values.len() % 2 != 0 {
                return Err(PermError::NotBijection);
            }
            GroundSet::Barred((values.len() / 2) as u32)
        } else {
            GroundSet::Plain(values.len() as u32)
        };
        let labels = values
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                Label::from_signed(v).ok_or(PermError::Parse { pos, msg: "zero label".into() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(ground, &labels)
    }

    /// Parse a JSON array of signed integers, e.g. `[3, 1, 2]`.
    pub fn parse_one_line_json(text: &str, barred: bool) -> Result<Self, PermError> {
        let s = text.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or(PermError::Parse { pos: 0, msg: "expected a JSON array".into() })?;
        let mut values = Vec::new();
        if !inner.trim().is_empty() {
            for (i, tok) in inner.split(',').enumerate() {
                let v: i64 = tok.trim().parse().map_err(|_| PermError::Parse {
                    pos: i,
                    msg: format!("bad integer {:?}", tok.trim()),
                })?;
                values.push(v);
            }
        }
        Self::from_one_line(&values, barred)
    }

    /// Parse cycle notation such as `(1 2)(3 -1)`.
    ///
    /// With `ground = None` the ground set is inferred: barred iff a negative
    /// label occurs, size equal to the largest absolute label.
    pub fn parse_cycles(text: &str, ground: Option<GroundSet>) -> Result<Self, PermError> {
        let cycles = parse_cycle_list(text)?;
        let ground = match ground {
            Some(g) => g,
            None => {
                let labels = cycles.iter().flatten();
                let t = labels.clone().map(|l| l.index).max().unwrap_or(0);
                if labels.clone().any(|l| l.barred) {
                    GroundSet::Barred(t)
                } else {
                    GroundSet::Plain(t)
                }
            }
        };
        Self::from_cycles(ground, &cycles)
    }
}

impl fmt::Display for Permutation {
    /// Full cycle notation with fixed points, e.g. `(1)(2 3)`; the identity
    /// on the empty set prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, l) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<Label>>, PermError> {
    let bytes = text.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| PermError::Parse { pos, msg: msg.to_string() };
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                i += 1;
                let mut cycle = Vec::new();
                loop {
                    while i < bytes.len() && matches!(bytes[i], b' ' | b'\t' | b',') {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(err(i, "unterminated cycle"));
                    }
                    if bytes[i] == b')' {
                        i += 1;
                        break;
                    }
                    let start = i;
                    if bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let tok = &text[start..i];
                    let v: i64 = tok.parse().map_err(|_| err(start, "expected a label"))?;
                    let label = Label::from_signed(v).ok_or_else(|| err(start, "label 0"))?;
                    if label.index > 1 << 20 {
                        return Err(err(start, "label too large"));
                    }
                    if cycle.contains(&label) {
                        return Err(err(start, "repeated label in cycle"));
                    }
                    cycle.push(label);
                }
                cycles.push(cycle);
            }
            _ => return Err(err(i, "expected '('")),
        }
    }
    Ok(cycles)
}

/// Integer partition recording cycle lengths, stored in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn empty() -> Self {
        CycleType(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse `2,1` (empty string gives the empty partition).
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Ok(CycleType::empty());
        }
        let mut parts = Vec::new();
        for (i, tok) in text.split(',').enumerate() {
            let v: usize = tok.trim().parse().map_err(|_| PermError::Parse {
                pos: i,
                msg: format!("bad part {:?}", tok.trim()),
            })?;
            if v == 0 {
                return Err(PermError::Parse { pos: i, msg: "parts must be positive".into() });
            }
            parts.push(v);
        }
        Ok(CycleType::new(parts))
    }

    /// The canonical plain permutation `(1 .. c₁)(c₁+1 ..)..` of this type.
    pub fn canonical_plain(&self) -> Permutation {
        let t = self.total() as u32;
        let mut cycles = Vec::new();
        let mut next = 1;
        for &c in &self.0 {
            cycles.push((next..next + c as u32).map(Label::plain).collect());
            next += c as u32;
        }
        Permutation::from_cycles(GroundSet::Plain(t), &cycles).expect("blocks are disjoint")
    }

    /// The canonical orthogonal target with this halved type: each block
    /// `(a .. b)` together with its mirror `(b̄ .. ā)`.
    pub fn canonical_orthogonal(&self) -> Permutation {
        let t = self.total() as u32;
        let mut cycles = Vec::new();
        let mut next = 1;
        for &c in &self.0 {
            let block: Vec<Label> = (next..next + c as u32).map(Label::plain).collect();
            let mirror: Vec<Label> = block.iter().rev().map(|l| l.mirror()).collect();
            cycles.push(block);
            cycles.push(mirror);
            next += c as u32;
        }
        Permutation::from_cycles(GroundSet::Barred(t), &cycles).expect("blocks are disjoint")
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn partitions_of(n: usize) -> Vec<CycleType> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
            if n == 0 {
                out.push(CycleType(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `σ⁻¹π`.
pub fn target_unitary(sigma: &Permutation, pi: &Permutation) -> Result<Permutation, PermError> {
    if sigma.ground.is_barred() {
        return Err(PermError::NotPlain(sigma.ground));
    }
    sigma.inverse().compose(pi)
}

/// `ϖ⁻¹ T ϖ T`.
pub fn target_orthogonal(varpi: &Permutation) -> Result<Permutation, PermError> {
    let GroundSet::Barred(t) = varpi.ground else {
        return Err(PermError::NotBarred(varpi.ground));
    };
    let bar = Permutation::bar_involution(t);
    varpi.inverse().compose(&bar)?.compose(varpi)?.compose(&bar)
}

/// True iff `T∘τ` is a fixed-point-free involution.
pub fn is_valid_orthogonal_target(tau: &Permutation) -> bool {
    let GroundSet::Barred(t) = tau.ground else {
        return false;
    };
    let t_tau = Permutation::bar_involution(t).compose(tau).expect("same ground set");
    t_tau
        .images
        .iter()
        .enumerate()
        .all(|(p, &i)| p as u32 != i && t_tau.images[i as usize] == p as u32)
}

/// One cycle length per mirror pair of cycles of an orthogonal target.
pub fn halved_cycle_type(tau: &Permutation) -> Result<CycleType, PermError> {
    if !tau.ground.is_barred() {
        return Err(PermError::NotBarred(tau.ground));
    }
    if !is_valid_orthogonal_target(tau) {
        return Err(PermError::InvalidOrthogonalTarget(tau.to_string()));
    }
    let cycles = tau.cycles();
    let mut used = vec![false; cycles.len()];
    let mut parts = Vec::new();
    for i in 0..cycles.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let first_mirror = cycles[i][0].mirror();
        let j = (0..cycles.len())
            .find(|&j| !used[j] && cycles[j].contains(&first_mirror))
            .ok_or_else(|| PermError::InvalidOrthogonalTarget(format!("{tau}: unpaired cycle")))?;
        if cycles[j].len() != cycles[i].len() {
            return Err(PermError::InvalidOrthogonalTarget(format!("{tau}: unequal mirror cycles")));
        }
        used[j] = true;
        parts.push(cycles[i].len());
    }
    Ok(CycleType::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(v: &[i64]) -> Permutation {
        Permutation::from_one_line(v, false).unwrap()
    }

    fn cyc(s: &str) -> Permutation {
        Permutation::parse_cycles(s, None).unwrap()
    }

    #[test]
    fn transposition_squared_is_identity() {
        let p = cyc("(1 2)");
        assert!(p.compose(&p).unwrap().is_identity());
    }

    #[test]
    fn three_trajectory_target() {
        let sigma = plain(&[3, 1, 2]);
        let pi = plain(&[3, 2, 1]);
        let tau = target_unitary(&sigma, &pi).unwrap();
        assert_eq!(tau.to_string(), "(1)(2 3)");
        assert_eq!(sigma.inverse().compose(&pi).unwrap(), tau);
    }

    #[test]
    fn identity_laws() {
        let p = plain(&[2, 3, 1]);
        let id = Permutation::identity(GroundSet::Plain(3));
        assert_eq!(p.compose(&id).unwrap(), p);
        assert!(target_unitary(&p, &p).unwrap().is_identity());
        assert_eq!(target_unitary(&cyc("(1)(2)"), &cyc("(1 2)")).unwrap(), cyc("(1 2)"));
    }

    #[test]
    fn mismatched_ground_sets() {
        let a = cyc("(1 2)");
        let b = cyc("(1 2 3)");
        assert!(matches!(a.compose(&b), Err(PermError::MismatchedGroundSets(..))));
        assert!(target_orthogonal(&a).is_err());
    }

    #[test]
    fn orthogonal_target_from_correlator() {
        // 1→2̄, 1̄→3̄, 2→2, 2̄→1̄, 3→1, 3̄→3
        let varpi = Permutation::from_one_line(&[-2, -3, 2, -1, 1, 3], true).unwrap();
        let tau = target_orthogonal(&varpi).unwrap();
        assert_eq!(tau, cyc("(1 -3 -2)(2 3 -1)"));
        assert!(is_valid_orthogonal_target(&tau));
        assert_eq!(halved_cycle_type(&tau).unwrap(), CycleType::new(vec![3]));
    }

    #[test]
    fn two_varpi_same_target() {
        let a = Permutation::from_one_line(&[2, 1, -1, -2], true).unwrap();
        let b = Permutation::from_one_line(&[-2, 1, -1, 2], true).unwrap();
        let expected = cyc("(1 2)(-2 -1)");
        assert_eq!(target_orthogonal(&a).unwrap(), expected);
        assert_eq!(target_orthogonal(&b).unwrap(), expected);
        assert_eq!(halved_cycle_type(&expected).unwrap(), CycleType::new(vec![2]));
    }

    #[test]
    fn orthogonal_identity() {
        let id = Permutation::identity(GroundSet::Barred(2));
        assert!(target_orthogonal(&id).unwrap().is_identity());
        assert!(is_valid_orthogonal_target(&id));
        assert_eq!(halved_cycle_type(&id).unwrap(), CycleType::new(vec![1, 1]));
    }

    #[test]
    fn bar_swap_is_not_a_target() {
        let p = cyc("(1 -1)");
        assert_eq!(p.ground(), GroundSet::Barred(1));
        assert!(!is_valid_orthogonal_target(&p));
        assert!(matches!(halved_cycle_type(&p), Err(PermError::InvalidOrthogonalTarget(_))));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cyc("(1)(2 3)").cycle_type(), CycleType::new(vec![2, 1]));
        let id = Permutation::identity(GroundSet::Plain(3));
        assert_eq!(id.cycle_type().parts(), &[1, 1, 1]);
        assert_eq!(id.to_string(), "(1)(2)(3)");
    }

    #[test]
    fn parse_errors() {
        for bad in ["(1 2", "1 2)", "(1 1)", "(0)", "(a)", "(1)(1 2)"] {
            assert!(Permutation::parse_cycles(bad, None).is_err(), "{bad}");
        }
        assert!(Permutation::parse_one_line_json("[1, 1]", false).is_err());
        assert!(Permutation::parse_one_line_json("[1, x]", false).is_err());
        assert!(CycleType::parse("2,0").is_err());
        assert_eq!(CycleType::parse("1,2").unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn one_line_json_round_trip() {
        let p = Permutation::parse_one_line_json("[-2, -3, 2, -1, 1, 3]", false).unwrap();
        assert_eq!(p.one_line(), vec![-2, -3, 2, -1, 1, 3]);
        let q = Permutation::parse_cycles(&p.to_string(), Some(p.ground())).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn canonical_representatives() {
        let c = CycleType::new(vec![1, 2]);
        assert_eq!(c.canonical_plain(), cyc("(1 2)(3)"));
        let o = c.canonical_orthogonal();
        assert_eq!(o, cyc("(1 2)(-2 -1)(3)(-3)"));
        assert_eq!(halved_cycle_type(&o).unwrap(), c);
        assert_eq!(CycleType::partitions_of(4).len(), 5);
        assert_eq!(CycleType::partitions_of(0), vec![CycleType::empty()]);
    }

    #[test]
    fn label_order_interleaves_bars() {
        let mut v = vec![Label::bar(2), Label::plain(2), Label::bar(1), Label::plain(1)];
        v.sort();
        assert_eq!(v, vec![Label::plain(1), Label::bar(1), Label::plain(2), Label::bar(2)]);
    }
}
