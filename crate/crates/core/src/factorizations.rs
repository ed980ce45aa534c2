//! Monotone and palindromic factorizations into transpositions, their
//! recursive counts, and the signed generating series in `1/N`.
//!
//! Products are read as compositions: `(a b)(c d)` maps `x` to `(a b)((c d)(x))`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::perm::{halved_cycle_type, is_valid_orthogonal_target, CycleType, GroundSet, Label, PermError, Permutation};
use crate::weingarten::LaurentSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error("monotone factorizations need a target on plain labels, got {0}")]
    NotPlain(GroundSet),
    #[error("palindromic factorizations need a valid target on barred labels: {0}")]
    InvalidTarget(String),
    #[error("transposition needs two distinct labels, got {0} twice")]
    Degenerate(Label),
    #[error("smaller labels of the factors are not non-decreasing")]
    NotMonotone,
    #[error("left factors of a palindromic word need an unbarred smaller label")]
    BarredStart,
    #[error("factors multiply to {product}, not the target {target}")]
    ProductMismatch { product: String, target: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn check_monotone(factors: &[Transposition]) -> Result<(), FactorizationError> {
    if factors.windows(2).all(|w| w[0].s <= w[1].s) {
        Ok(())
    } else {
        Err(FactorizationError::NotMonotone)
    }
}

fn check_product(product: Permutation, target: &Permutation) -> Result<(), FactorizationError> {
    if &product == target {
        Ok(())
    } else {
        Err(FactorizationError::ProductMismatch { product: product.to_string(), target: target.to_string() })
    }
}

/// `(s r)` with `s < r` in the label order `1 < 1̄ < 2 < 2̄ < ..`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    s: Label,
    r: Label,
}

impl Transposition {
    pub fn new(a: Label, b: Label) -> Result<Self, FactorizationError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Transposition { s: a, r: b }),
            std::cmp::Ordering::Greater => Ok(Transposition { s: b, r: a }),
            std::cmp::Ordering::Equal => Err(FactorizationError::Degenerate(a)),
        }
    }

    pub fn smaller(self) -> Label {
        self.s
    }

    pub fn larger(self) -> Label {
        self.r
    }

    /// `(s̄ r̄)`, written with its smaller label first.
    pub fn mirror(self) -> Self {
        Transposition::new(self.s.mirror(), self.r.mirror()).expect("mirror keeps labels distinct")
    }

    pub fn to_permutation(self, ground: GroundSet) -> Result<Permutation, PermError> {
        Permutation::transposition(ground, self.s, self.r)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.s, self.r)
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, factors: &[Transposition]) -> fmt::Result {
    if factors.is_empty() {
        return write!(f, "()");
    }
    for t in factors {
        write!(f, "{t}")?;
    }
    Ok(())
}

/// `target = f₁ f₂ .. f_v` with non-decreasing smaller labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneFactorization {
    factors: Vec<Transposition>,
    target: Permutation,
}

impl MonotoneFactorization {
    pub fn new(factors: Vec<Transposition>, target: Permutation) -> Result<Self, FactorizationError> {
        if target.ground().is_barred() {
            return Err(FactorizationError::NotPlain(target.ground()));
        }
        check_monotone(&factors)?;
        let f = MonotoneFactorization { factors, target };
        check_product(multiply(f.target.ground(), f.factors.iter().copied()), &f.target)?;
        Ok(f)
    }

    pub fn factors(&self) -> &[Transposition] {
        &self.factors
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Permutation {
        multiply(self.target.ground(), self.factors.iter().copied())
    }
}

impl fmt::Display for MonotoneFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(f, &self.factors)
    }
}

/// `target = f₁ .. f_v f̄_v .. f̄₁`, storing only the left half.
///
/// Every left factor has an unbarred smaller label, and the smaller labels are
/// non-decreasing. Requiring the smaller label to be unbarred picks one
/// representative of each factor and its mirror, which commute whenever they
/// are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PalindromicFactorization {
    left: Vec<Transposition>,
    target: Permutation,
}

impl PalindromicFactorization {
    pub fn new(left: Vec<Transposition>, target: Permutation) -> Result<Self, FactorizationError> {
        if !target.ground().is_barred() {
            return Err(FactorizationError::InvalidTarget(target.to_string()));
        }
        check_monotone(&left)?;
        if left.iter().any(|t| t.s.is_barred()) {
            return Err(FactorizationError::BarredStart);
        }
        let f = PalindromicFactorization { left, target };
        check_product(f.product(), &f.target)?;
        Ok(f)
    }

    pub fn left_factors(&self) -> &[Transposition] {
        &self.left
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    /// The full word `f₁ .. f_v f̄_v .. f̄₁`.
    pub fn word(&self) -> Vec<Transposition> {
        let mut w = self.left.clone();
        w.extend(self.left.iter().rev().map(|t| t.mirror()));
        w
    }

    pub fn product(&self) -> Permutation {
        multiply(self.target.ground(), self.word())
    }
}

impl fmt::Display for PalindromicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(f, &self.word())
    }
}

fn multiply(ground: GroundSet, factors: impl IntoIterator<Item = Transposition>) -> Permutation {
    factors.into_iter().fold(Permutation::identity(ground), |acc, t| {
        acc.compose(&t.to_permutation(ground).expect("label in ground set")).expect("same ground set")
    })
}

/// Swap the images at positions `a`, `b` on the right: `p ↦ p ∘ (a b)`.
fn right_swap(p: &mut [u32], a: usize, b: usize) {
    p.swap(a, b);
}

/// Swap values `a`, `b` on the left: `p ↦ (a b) ∘ p`.
fn left_swap(p: &mut [u32], a: u32, b: u32) {
    for x in p.iter_mut() {
        if *x == a {
            *x = b;
        } else if *x == b {
            *x = a;
        }
    }
}

fn cycle_count(p: &[u32]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
        }
    }
    count
}

/// All monotone factorizations of `tau` into exactly `v` transpositions.
pub fn enumerate_monotone(tau: &Permutation, v: usize) -> Result<Vec<MonotoneFactorization>, FactorizationError> {
    let ground = tau.ground();
    if ground.is_barred() {
        return Err(FactorizationError::NotPlain(ground));
    }
    // rest = (f₁..f_k)⁻¹ τ must be a product of the remaining factors, all
    // of which move only positions ≥ the current smaller label.
    fn dfs(rest: &mut Vec<u32>, min_s: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let n = rest.len();
        let dist = n - cycle_count(rest);
        if dist > left || (left - dist) % 2 != 0 {
            return;
        }
        if rest[..min_s].iter().enumerate().any(|(i, &x)| i as u32 != x) {
            return;
        }
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in min_s..n {
            for r in s + 1..n {
                // (s r)⁻¹ ∘ rest
                left_swap(rest, s as u32, r as u32);
                cur.push((s, r));
                dfs(rest, s, left - 1, cur, out);
                cur.pop();
                left_swap(rest, s as u32, r as u32);
            }
        }
    }
    let mut rest = tau.positions().to_vec();
    let mut raw = Vec::new();
    dfs(&mut rest, 0, v, &mut Vec::new(), &mut raw);
    Ok(raw
        .into_iter()
        .map(|fs| {
            let factors = fs
                .into_iter()
                .map(|(s, r)| Transposition::new(ground.label(s), ground.label(r)).expect("distinct"))
                .collect();
            let f = MonotoneFactorization { factors, target: tau.clone() };
            assert_eq!(&f.product(), tau, "monotone factorization does not reproduce its target");
            f
        })
        .collect())
}

/// All palindromic factorizations of `tau` with `v` left factors.
pub fn enumerate_palindromic(tau: &Permutation, v: usize) -> Result<Vec<PalindromicFactorization>, FactorizationError> {
    let ground = tau.ground();
    if !ground.is_barred() || !is_valid_orthogonal_target(tau) {
        return Err(FactorizationError::InvalidTarget(tau.to_string()));
    }
    // With P = f₁..f_k and T the bar involution, the middle part
    // rest = P⁻¹ τ T P T must still be produced by the remaining factors.
    // Positions: label k ↦ 2(k-1), k̄ ↦ 2(k-1)+1, so mirroring flips bit 0.
    fn dfs(rest: &mut Vec<u32>, min_s: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let n = rest.len();
        let dist = n - cycle_count(rest);
        if dist > 2 * left || dist % 2 != 0 {
            return;
        }
        if rest[..min_s].iter().enumerate().any(|(i, &x)| i as u32 != x) {
            return;
        }
        if left == 0 {
            if dist == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for s in (min_s..n).step_by(2) {
            for r in s + 1..n {
                // (s r)⁻¹ ∘ rest ∘ (s̄ r̄)
                left_swap(rest, s as u32, r as u32);
                right_swap(rest, s ^ 1, r ^ 1);
                cur.push((s, r));
                dfs(rest, s, left - 1, cur, out);
                cur.pop();
                right_swap(rest, s ^ 1, r ^ 1);
                left_swap(rest, s as u32, r as u32);
            }
        }
    }
    let mut rest = tau.positions().to_vec();
    let mut raw = Vec::new();
    dfs(&mut rest, 0, v, &mut Vec::new(), &mut raw);
    Ok(raw
        .into_iter()
        .map(|fs| {
            let left = fs
                .into_iter()
                .map(|(s, r)| Transposition::new(ground.label(s), ground.label(r)).expect("distinct"))
                .collect();
            let f = PalindromicFactorization { left, target: tau.clone() };
            assert_eq!(&f.product(), tau, "palindromic factorization does not reproduce its target");
            f
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Monotone,
    Palindromic,
}

type CountMemo = RwLock<HashMap<(Kind, CycleType, usize), BigInt>>;

fn memo() -> &'static CountMemo {
    static MEMO: OnceLock<CountMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// One step of either counting recursion, distinguished part `parts[0]`.
/// `count` is called for the sub-terms.
fn recursion_step(kind: Kind, parts: &[usize], v: usize, count: &mut dyn FnMut(Vec<usize>, usize) -> BigInt) -> BigInt {
    if parts.is_empty() {
        return if v == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let c1 = parts[0];
    let rest = &parts[1..];
    let mut total = BigInt::zero();
    if c1 == 1 {
        total += count(rest.to_vec(), v);
    }
    if v == 0 {
        return total;
    }
    for q in 1..c1 {
        let mut next = vec![q, c1 - q];
        next.extend_from_slice(rest);
        total += count(next, v - 1);
    }
    let merge_weight = match kind {
        Kind::Monotone => 1,
        Kind::Palindromic => 2,
    };
    for j in 0..rest.len() {
        let mut next = vec![c1 + rest[j]];
        next.extend(rest.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &p)| p));
        total += count(next, v - 1) * BigInt::from(merge_weight * rest[j]);
    }
    if kind == Kind::Palindromic {
        total += count(parts.to_vec(), v - 1) * BigInt::from(c1);
    }
    total
}

fn count_memo(kind: Kind, c: &CycleType, v: usize) -> BigInt {
    let key = (kind, c.clone(), v);
    if let Some(x) = memo().read().expect("poisoned memo").get(&key) {
        return x.clone();
    }
    let value = recursion_step(kind, c.parts(), v, &mut |p, w| count_memo(kind, &CycleType::new(p), w));
    memo().write().expect("poisoned memo").insert(key, value.clone());
    value
}

fn count_raw(kind: Kind, parts: &[usize], v: usize) -> BigInt {
    recursion_step(kind, parts, v, &mut |p, w| count_raw(kind, &p, w))
}

/// Number of monotone factorizations of any permutation of type `c` into `v`
/// transpositions.
pub fn count_monotone(c: &CycleType, v: usize) -> BigInt {
    count_memo(Kind::Monotone, c, v)
}

/// Number of palindromic factorizations with `v` left factors of any valid
/// target with halved type `c`.
pub fn count_palindromic(c: &CycleType, v: usize) -> BigInt {
    count_memo(Kind::Palindromic, c, v)
}

/// [`count_monotone`] without the memo, using `parts[0]` as the distinguished
/// cycle in the given order.
pub fn count_monotone_unsorted(parts: &[usize], v: usize) -> BigInt {
    count_raw(Kind::Monotone, parts, v)
}

/// [`count_palindromic`] without the memo, distinguished cycle `parts[0]`.
pub fn count_palindromic_unsorted(parts: &[usize], v: usize) -> BigInt {
    count_raw(Kind::Palindromic, parts, v)
}

fn signed_series(c: &CycleType, order: i64, count: impl Fn(&CycleType, usize) -> BigInt) -> LaurentSeries {
    let t = c.total() as i64;
    let coeffs = (0..=(order - t).max(-1))
        .map(|v| {
            let k = count(c, v as usize);
            BigRational::from_integer(if v % 2 == 0 { k } else { -k })
        })
        .collect();
    LaurentSeries::new(t, coeffs, order)
}

/// `Σ_v (-1)^v p_v(c) N^-(t+v)` over monotone counts, through `N^-order`.
pub fn delta_series_u(c: &CycleType, order: i64) -> LaurentSeries {
    signed_series(c, order, count_monotone)
}

/// As [`delta_series_u`] over palindromic counts; `c` is a halved type.
pub fn delta_series_o(c: &CycleType, order: i64) -> LaurentSeries {
    signed_series(c, order, count_palindromic)
}

/// Halved type of a valid orthogonal target, with the error mapped.
pub fn orthogonal_type(tau: &Permutation) -> Result<CycleType, FactorizationError> {
    halved_cycle_type(tau).map_err(|_| FactorizationError::InvalidTarget(tau.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weingarten::{laurent_expand, v_coe, v_cue};

    fn ct(v: &[usize]) -> CycleType {
        CycleType::new(v.to_vec())
    }

    fn plain(text: &str, t: u32) -> Permutation {
        Permutation::parse_cycles(text, Some(GroundSet::Plain(t))).unwrap()
    }

    #[test]
    fn identity_on_two_points() {
        let fs = enumerate_monotone(&plain("()", 2), 2).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].to_string(), "(1 2)(1 2)");
    }

    #[test]
    fn transposition_targets() {
        let tau = plain("(1 2)", 2);
        let one = enumerate_monotone(&tau, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "(1 2)");
        assert!(enumerate_monotone(&tau, 2).unwrap().is_empty());
    }

    #[test]
    fn monotone_counts() {
        for n in 0..4 {
            assert_eq!(count_monotone(&ct(&[1, 1]), 2 * n), BigInt::one());
            assert_eq!(count_monotone(&ct(&[2]), 2 * n + 1), BigInt::one());
        }
        assert_eq!(count_monotone(&ct(&[3]), 2), BigInt::from(2));
        assert_eq!(enumerate_monotone(&ct(&[3]).canonical_plain(), 2).unwrap().len(), 2);
    }

    #[test]
    fn palindromic_on_one_pair() {
        let id = Permutation::identity(GroundSet::Barred(1));
        assert_eq!(enumerate_palindromic(&id, 0).unwrap().len(), 1);
        let one = enumerate_palindromic(&id, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].left_factors()[0].to_string(), "(1 -1)");
        for v in 0..6 {
            assert_eq!(count_palindromic(&ct(&[1]), v), BigInt::one());
        }
    }

    #[test]
    fn palindromic_type_two() {
        let tau = ct(&[2]).canonical_orthogonal();
        assert_eq!(enumerate_palindromic(&tau, 1).unwrap().len(), 1);
        assert_eq!(count_palindromic(&ct(&[2]), 1), BigInt::one());
        assert_eq!(count_palindromic(&ct(&[2]), 2), BigInt::from(4));
        assert_eq!(enumerate_palindromic(&tau, 2).unwrap().len(), 4);
    }

    #[test]
    fn invalid_palindromic_target() {
        let tau = Permutation::parse_cycles("(1 2)", Some(GroundSet::Barred(2))).unwrap();
        assert!(matches!(enumerate_palindromic(&tau, 1), Err(FactorizationError::InvalidTarget(_))));
        assert!(matches!(enumerate_monotone(&tau, 1), Err(FactorizationError::NotPlain(_))));
    }

    #[test]
    fn series_examples() {
        assert_eq!(delta_series_u(&ct(&[1, 1]), 6).to_string(), "N^-2 + N^-4 + N^-6 + O(N^-7)");
        assert_eq!(delta_series_u(&ct(&[2]), 5).to_string(), "-N^-3 - N^-5 + O(N^-6)");
        assert_eq!(delta_series_o(&ct(&[1]), 3).to_string(), "N^-1 - N^-2 + N^-3 + O(N^-4)");
    }

    #[test]
    fn series_match_expansions() {
        for t in 1..=4 {
            for c in CycleType::partitions_of(t) {
                let k = t as i64 + 6;
                assert_eq!(delta_series_u(&c, k), laurent_expand(&v_cue(&c), k).unwrap(), "{c}");
            }
        }
        for t in 1..=3 {
            for c in CycleType::partitions_of(t) {
                let k = t as i64 + 5;
                assert_eq!(delta_series_o(&c, k), laurent_expand(&v_coe(&c), k).unwrap(), "{c}");
            }
        }
    }
}
