//! Exact ensemble averages of products of matrix elements, and transport
//! moments built from them.
//!
//! A correlator `⟨S_{a₁a₁̄} ⋯ S_{a_t a_t̄} S*_{b₁b₁̄} ⋯ S*_{b_s b_s̄}⟩` is a sum of
//! class coefficients over the index matchings it admits. The sum is formed
//! as a rational function of `N` first, so removable poles of individual
//! terms cancel before evaluation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::perm::CycleType;
use crate::weingarten::{class_coefficient, Ensemble, Polynomial, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrelatorError {
    #[error("channel {channel} is outside 1..={n}")]
    ChannelOutOfRange { channel: u32, n: u32 },
    #[error("the average has a pole at N = {0}")]
    Pole(u32),
    #[error("size out of range: {0}")]
    Infeasible(String),
    #[error("cannot parse matrix elements: {0}")]
    Parse(String),
}

/// One matrix element `S_{row,col}`, channels counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub row: u32,
    pub col: u32,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

/// Parse `"1,2;3,4"` into elements `(1,2)` and `(3,4)`. Empty input is the
/// empty product.
pub fn parse_elements(text: &str) -> Result<Vec<Element>, CorrelatorError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|item| {
            let mut parts = item.split(',').map(str::trim);
            let (Some(r), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(CorrelatorError::Parse(format!("expected `row,col`, got `{}`", item.trim())));
            };
            let channel = |s: &str| -> Result<u32, CorrelatorError> {
                match s.parse::<u32>() {
                    Ok(0) | Err(_) => Err(CorrelatorError::Parse(format!("`{s}` is not a positive channel"))),
                    Ok(v) => Ok(v),
                }
            };
            Ok(Element { row: channel(r)?, col: channel(c)? })
        })
        .collect()
}

/// A correlator of unconjugated and conjugated factors at matrix size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelatorSpec {
    pub unconjugated: Vec<Element>,
    pub conjugated: Vec<Element>,
    pub ensemble: Ensemble,
    pub n: u32,
}

impl CorrelatorSpec {
    pub fn new(
        unconjugated: Vec<Element>,
        conjugated: Vec<Element>,
        ensemble: Ensemble,
        n: u32,
    ) -> Result<Self, CorrelatorError> {
        if n == 0 {
            return Err(CorrelatorError::Infeasible("matrix size must be positive".into()));
        }
        for e in unconjugated.iter().chain(&conjugated) {
            for channel in [e.row, e.col] {
                if channel == 0 || channel > n {
                    return Err(CorrelatorError::ChannelOutOfRange { channel, n });
                }
            }
        }
        Ok(CorrelatorSpec { unconjugated, conjugated, ensemble, n })
    }
}

/// Largest number of factors of each kind the exact sums accept.
pub const MAX_CORRELATOR_FACTORS: usize = 6;

/// Bijections `m` of `0..k` with `ok(i, m(i))` for every `i`.
fn matchings(k: usize, ok: impl Fn(usize, usize) -> bool, mut visit: impl FnMut(&[usize])) {
    fn go(i: usize, k: usize, used: &mut [bool], cur: &mut Vec<usize>, ok: &dyn Fn(usize, usize) -> bool, visit: &mut dyn FnMut(&[usize])) {
        if i == k {
            visit(cur);
            return;
        }
        for j in 0..k {
            if !used[j] && ok(i, j) {
                used[j] = true;
                cur.push(j);
                go(i + 1, k, used, cur, ok, visit);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut used = vec![false; k];
    go(0, k, &mut used, &mut Vec::with_capacity(k), &ok, &mut visit);
}

fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for s in 0..p.len() {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
            }
        }
    }
    count
}

/// Halved cycle type of `ϖ⁻¹ T ϖ T` for `ϖ` on positions of `Z_t`.
fn orthogonal_class(varpi: &[usize]) -> CycleType {
    let n = varpi.len();
    let mut inv = vec![0; n];
    for (z, &w) in varpi.iter().enumerate() {
        inv[w] = z;
    }
    let tau: Vec<usize> = (0..n).map(|z| inv[varpi[z ^ 1] ^ 1]).collect();
    // cycles come in mirror pairs; keep one length per pair
    let mut cycle_of = vec![usize::MAX; n];
    let mut lengths = Vec::new();
    for s in 0..n {
        if cycle_of[s] != usize::MAX {
            continue;
        }
        let id = lengths.len();
        let mut x = s;
        let mut len = 0;
        while cycle_of[x] == usize::MAX {
            cycle_of[x] = id;
            x = tau[x];
            len += 1;
        }
        lengths.push(len);
    }
    let mut paired = vec![false; lengths.len()];
    let mut parts = Vec::new();
    for s in 0..n {
        let (c, m) = (cycle_of[s], cycle_of[s ^ 1]);
        if !paired[c] {
            paired[c] = true;
            paired[m] = true;
            parts.push(lengths[c]);
        }
    }
    CycleType::new(parts)
}

fn combine(ensemble: Ensemble, weights: HashMap<CycleType, BigInt>) -> RationalFunction {
    let mut classes: Vec<(CycleType, BigInt)> = weights.into_iter().filter(|(_, w)| !w.is_zero()).collect();
    classes.sort_by(|a, b| a.0.parts().cmp(b.0.parts()));
    let mut total = RationalFunction::zero();
    for (c, w) in classes {
        let term = &class_coefficient(ensemble, &c) * &RationalFunction::from_polynomial(Polynomial::constant(w));
        total = &total + &term;
    }
    total
}

fn evaluate_at(f: &RationalFunction, n: u32) -> Result<BigRational, CorrelatorError> {
    f.evaluate(&BigRational::from_integer(BigInt::from(n))).map_err(|_| CorrelatorError::Pole(n))
}

/// The correlator as a rational function of `N`, valid for any `N` at least
/// as large as every channel involved.
pub fn correlator_function(
    unconjugated: &[Element],
    conjugated: &[Element],
    ensemble: Ensemble,
) -> Result<RationalFunction, CorrelatorError> {
    let (a, b) = (unconjugated, conjugated);
    if a.len() != b.len() {
        return Ok(RationalFunction::zero());
    }
    let t = a.len();
    if t > MAX_CORRELATOR_FACTORS {
        return Err(CorrelatorError::Infeasible(format!("{t} factors, at most {MAX_CORRELATOR_FACTORS} supported")));
    }
    let mut weights: HashMap<CycleType, BigInt> = HashMap::new();
    match ensemble {
        Ensemble::Cue => {
            let mut sigmas = Vec::new();
            matchings(t, |j, k| a[j].row == b[k].row, |s| sigmas.push(s.to_vec()));
            let mut pis = Vec::new();
            matchings(t, |j, k| a[j].col == b[k].col, |p| pis.push(p.to_vec()));
            for s in &sigmas {
                let mut inv = vec![0; t];
                for (j, &k) in s.iter().enumerate() {
                    inv[k] = j;
                }
                for p in &pis {
                    let target: Vec<usize> = (0..t).map(|j| inv[p[j]]).collect();
                    *weights.entry(CycleType::new(cycle_lengths(&target))).or_default() += 1;
                }
            }
        }
        Ensemble::Coe => {
            // position 2j is the row of factor j, 2j + 1 its column
            let slot = |e: &[Element], z: usize| if z % 2 == 0 { e[z / 2].row } else { e[z / 2].col };
            matchings(2 * t, |z, w| slot(a, z) == slot(b, w), |varpi| {
                *weights.entry(orthogonal_class(varpi)).or_default() += 1;
            });
        }
    }
    Ok(combine(ensemble, weights))
}

fn correlator_exact(spec: &CorrelatorSpec) -> Result<BigRational, CorrelatorError> {
    let f = correlator_function(&spec.unconjugated, &spec.conjugated, spec.ensemble)?;
    evaluate_at(&f, spec.n)
}

pub fn correlator_cue(spec: &CorrelatorSpec) -> Result<BigRational, CorrelatorError> {
    if spec.ensemble != Ensemble::Cue {
        return Err(CorrelatorError::Infeasible("correlator_cue needs a CUE correlator".into()));
    }
    correlator_exact(spec)
}

pub fn correlator_coe(spec: &CorrelatorSpec) -> Result<BigRational, CorrelatorError> {
    if spec.ensemble != Ensemble::Coe {
        return Err(CorrelatorError::Infeasible("correlator_coe needs a COE correlator".into()));
    }
    correlator_exact(spec)
}

/// Dispatch on the ensemble.
pub fn correlator(spec: &CorrelatorSpec) -> Result<BigRational, CorrelatorError> {
    correlator_exact(spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    /// Rows in lead 1, columns in lead 2.
    Transmission,
    /// Rows and columns in lead 1.
    Reflection,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::Transmission => "transmission",
            Block::Reflection => "reflection",
        })
    }
}

/// `⟨Π_i Tr[(X†X)^{n_i}]⟩` for the block `X` of an `(N₁ + N₂)`-dimensional
/// scattering matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSpec {
    pub traces: Vec<usize>,
    pub n1: u32,
    pub n2: u32,
    pub block: Block,
    pub ensemble: Ensemble,
}

impl MomentSpec {
    pub fn new(traces: Vec<usize>, n1: u32, n2: u32, block: Block, ensemble: Ensemble) -> Result<Self, CorrelatorError> {
        if traces.contains(&0) {
            return Err(CorrelatorError::Infeasible("trace powers must be positive".into()));
        }
        if n1 == 0 || n2 == 0 {
            return Err(CorrelatorError::Infeasible("lead sizes must be positive".into()));
        }
        Ok(MomentSpec { traces, n1, n2, block, ensemble })
    }

    pub fn total(&self) -> usize {
        self.traces.iter().sum()
    }

    pub fn n(&self) -> u32 {
        self.n1 + self.n2
    }

    /// Row and column channel ranges, 0-based, half-open.
    fn ranges(&self) -> ((u32, u32), (u32, u32)) {
        let lead1 = (0, self.n1);
        match self.block {
            Block::Transmission => (lead1, (self.n1, self.n1 + self.n2)),
            Block::Reflection => (lead1, lead1),
        }
    }

    /// Cyclic shift within each trace: `ρ(k)` is the factor after `k`.
    fn shift(&self) -> Vec<usize> {
        let mut rho = Vec::with_capacity(self.total());
        let mut start = 0;
        for &m in &self.traces {
            rho.extend((0..m).map(|i| start + (i + 1) % m));
            start += m;
        }
        rho
    }

    /// Factors of the expanded trace product over free indices `i_k`, `j_k`:
    /// unconjugated `X_{i_k, j_ρ(k)}`, conjugated `X_{i_k, j_k}`.
    fn index_slots(&self) -> (Vec<IndexPair>, Vec<IndexPair>) {
        let n = self.total();
        let rho = self.shift();
        let unconj = (0..n).map(|k| (k, n + rho[k])).collect();
        let conj = (0..n).map(|k| (k, n + k)).collect();
        (unconj, conj)
    }
}

/// Free-index variables `(row, column)` of one factor.
type IndexPair = (usize, usize);

/// Feasibility bounds on `Σ n_i` for [`moment`].
pub const MAX_MOMENT_CUE: usize = 8;
pub const MAX_MOMENT_COE_TRANSMISSION: usize = 6;
pub const MAX_MOMENT_COE_REFLECTION: usize = 5;

fn check_moment_size(spec: &MomentSpec) -> Result<(), CorrelatorError> {
    let limit = match (spec.ensemble, spec.block) {
        (Ensemble::Cue, _) => MAX_MOMENT_CUE,
        (Ensemble::Coe, Block::Transmission) => MAX_MOMENT_COE_TRANSMISSION,
        (Ensemble::Coe, Block::Reflection) => MAX_MOMENT_COE_REFLECTION,
    };
    if spec.total() > limit {
        return Err(CorrelatorError::Infeasible(format!(
            "{} {} moment of total power {} exceeds {limit}",
            spec.ensemble,
            spec.block,
            spec.total()
        )));
    }
    Ok(())
}

/// Lexicographic successor; false after the last arrangement.
fn next_arrangement(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn representative(c: &CycleType) -> Vec<usize> {
    let mut p = Vec::with_capacity(c.total());
    let mut start = 0;
    for &len in c.parts() {
        p.extend((0..len).map(|i| start + (i + 1) % len));
        start += len;
    }
    p
}

fn power(base: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// CUE moment weights per class of `σ⁻¹π`.
///
/// The index sums give `R^{C(σ)} C^{C(πρ⁻¹)}`. With `π = στ` the sum over `σ`
/// is the class function `h(x) = Σ_σ R^{C(σ)} C^{C(σx)}` at `x = τρ⁻¹`.
fn cue_moment_weights(spec: &MomentSpec) -> HashMap<CycleType, BigInt> {
    let n = spec.total();
    let ((r0, r1), (c0, c1)) = spec.ranges();
    let (rows, cols) = (r1 - r0, c1 - c0);
    let mut h: HashMap<CycleType, BigInt> = HashMap::new();
    for class in CycleType::partitions_of(n) {
        let x = representative(&class);
        let mut counts = vec![vec![0u64; n + 1]; n + 1];
        let mut sigma: Vec<usize> = (0..n).collect();
        loop {
            let sx: Vec<usize> = (0..n).map(|k| sigma[x[k]]).collect();
            counts[cycle_count(&sigma)][cycle_count(&sx)] += 1;
            if !next_arrangement(&mut sigma) {
                break;
            }
        }
        let mut sum = BigInt::zero();
        for (a, row) in counts.iter().enumerate() {
            for (b, &m) in row.iter().enumerate() {
                if m > 0 {
                    sum += BigInt::from(m) * power(rows, a) * power(cols, b);
                }
            }
        }
        h.insert(class, sum);
    }
    let rho = spec.shift();
    let mut rho_inv = vec![0; n];
    for (k, &r) in rho.iter().enumerate() {
        rho_inv[r] = k;
    }
    let mut weights: HashMap<CycleType, BigInt> = HashMap::new();
    let mut tau: Vec<usize> = (0..n).collect();
    loop {
        let x: Vec<usize> = (0..n).map(|k| tau[rho_inv[k]]).collect();
        let w = &h[&CycleType::new(cycle_lengths(&x))];
        *weights.entry(CycleType::new(cycle_lengths(&tau))).or_default() += w;
        if !next_arrangement(&mut tau) {
            break;
        }
    }
    weights
}

/// COE moment weights per halved class, summing over matchings `ϖ` of the
/// `2n` index slots the number of channel assignments they allow.
fn coe_moment_weights(spec: &MomentSpec) -> HashMap<CycleType, BigInt> {
    let n = spec.total();
    let (unconj, conj) = spec.index_slots();
    let ((r0, r1), (c0, c1)) = spec.ranges();
    // variables 0..n are rows i_k, n..2n columns j_k
    let range = |v: usize| if v < n { (r0, r1) } else { (c0, c1) };
    let var = |slots: &[IndexPair], z: usize| if z % 2 == 0 { slots[z / 2].0 } else { slots[z / 2].1 };
    let overlaps = |u: usize, v: usize| {
        let (a, b) = (range(u), range(v));
        a.0.max(b.0) < a.1.min(b.1)
    };
    let mut tally: HashMap<(CycleType, Vec<(u32, u32)>), u64> = HashMap::new();
    matchings(
        2 * n,
        |z, w| overlaps(var(&unconj, z), var(&conj, w)),
        |varpi| {
            // the permutation var(a_z) -> var(b_ϖ(z)) on variables; each of
            // its cycles ranges over the intersection of its members' ranges
            let mut next = vec![0; 2 * n];
            for (z, &w) in varpi.iter().enumerate() {
                next[var(&unconj, z)] = var(&conj, w);
            }
            let mut seen = vec![false; 2 * n];
            let mut sizes = Vec::new();
            for s in 0..2 * n {
                if seen[s] {
                    continue;
                }
                let (mut lo, mut hi) = range(s);
                let mut v = s;
                while !seen[v] {
                    seen[v] = true;
                    let (a, b) = range(v);
                    lo = lo.max(a);
                    hi = hi.min(b);
                    v = next[v];
                }
                sizes.push((lo, hi));
            }
            sizes.sort_unstable();
            *tally.entry((orthogonal_class(varpi), sizes)).or_default() += 1;
        },
    );
    let mut weights: HashMap<CycleType, BigInt> = HashMap::new();
    for ((class, sizes), m) in tally {
        let count = sizes.iter().fold(BigInt::one(), |acc, &(lo, hi)| acc * BigInt::from(hi.saturating_sub(lo)));
        *weights.entry(class).or_default() += count * m;
    }
    weights
}

/// The moment, exactly, at `N = N₁ + N₂`.
pub fn moment(spec: &MomentSpec) -> Result<BigRational, CorrelatorError> {
    moment_unchecked(spec, true)
}

/// As [`moment`], optionally skipping the size guard.
pub fn moment_unchecked(spec: &MomentSpec, guard: bool) -> Result<BigRational, CorrelatorError> {
    if guard {
        check_moment_size(spec)?;
    }
    if spec.traces.is_empty() {
        return Ok(BigRational::one());
    }
    let weights = match spec.ensemble {
        Ensemble::Cue => cue_moment_weights(spec),
        Ensemble::Coe => coe_moment_weights(spec),
    };
    evaluate_at(&combine(spec.ensemble, weights), spec.n())
}

/// Bounds of the brute-force oracle.
pub const MAX_BRUTEFORCE_LEAD: u32 = 4;
pub const MAX_BRUTEFORCE_POWER: usize = 3;

/// The literal channel sum of correlators, one per index assignment.
pub fn moment_bruteforce(spec: &MomentSpec) -> Result<BigRational, CorrelatorError> {
    if spec.n1 > MAX_BRUTEFORCE_LEAD || spec.n2 > MAX_BRUTEFORCE_LEAD || spec.total() > MAX_BRUTEFORCE_POWER {
        return Err(CorrelatorError::Infeasible(format!(
            "brute force needs N1, N2 <= {MAX_BRUTEFORCE_LEAD} and total power <= {MAX_BRUTEFORCE_POWER}"
        )));
    }
    let n = spec.total();
    let (unconj, conj) = spec.index_slots();
    let ((r0, r1), (c0, c1)) = spec.ranges();
    let mut values: Vec<u32> = (0..2 * n).map(|k| if k < n { r0 } else { c0 }).collect();
    let mut cache: HashMap<(Vec<Element>, Vec<Element>), BigRational> = HashMap::new();
    let mut total = BigRational::zero();
    loop {
        let element = |&(i, j): &IndexPair| Element { row: values[i] + 1, col: values[j] + 1 };
        let a: Vec<Element> = unconj.iter().map(element).collect();
        let b: Vec<Element> = conj.iter().map(element).collect();
        let value = match cache.get(&(a.clone(), b.clone())) {
            Some(v) => v.clone(),
            None => {
                let v = correlator(&CorrelatorSpec::new(a.clone(), b.clone(), spec.ensemble, spec.n())?)?;
                cache.insert((a, b), v.clone());
                v
            }
        };
        total += value;
        // odometer over rows (first n) and columns (last n)
        let mut k = 0;
        loop {
            if k == 2 * n {
                return Ok(total);
            }
            let (lo, hi) = if k < n { (r0, r1) } else { (c0, c1) };
            values[k] += 1;
            if values[k] < hi {
                break;
            }
            values[k] = lo;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(row: u32, col: u32) -> Element {
        Element { row, col }
    }

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    fn corr(a: &[Element], b: &[Element], ensemble: Ensemble, n: u32) -> BigRational {
        correlator(&CorrelatorSpec::new(a.to_vec(), b.to_vec(), ensemble, n).unwrap()).unwrap()
    }

    #[test]
    fn parse() {
        assert_eq!(parse_elements("1,2;3,4").unwrap(), vec![e(1, 2), e(3, 4)]);
        assert_eq!(parse_elements(" ").unwrap(), vec![]);
        assert!(parse_elements("1,2,3").is_err());
        assert!(parse_elements("0,1").is_err());
        assert!(parse_elements("1;2").is_err());
    }

    #[test]
    fn small_cue_correlators() {
        assert!(corr(&[e(1, 2)], &[e(2, 1)], Ensemble::Cue, 3).is_zero());
        for n in 1..6 {
            assert_eq!(corr(&[e(1, 1)], &[e(1, 1)], Ensemble::Cue, n), q(1, n as i64));
        }
        // V(1,1) + V(2) = 1/(N^2-1) - 1/(N(N^2-1)) = 1/(N(N+1))
        let a = [e(1, 2), e(3, 2)];
        assert_eq!(corr(&a, &a, Ensemble::Cue, 4), q(1, 20));
    }

    #[test]
    fn fourth_moment_of_an_entry_at_n_one() {
        let a = [e(1, 1), e(1, 1)];
        assert_eq!(corr(&a, &a, Ensemble::Cue, 1), q(1, 1));
        assert_eq!(corr(&a, &a, Ensemble::Cue, 3), q(2, 12));
    }

    #[test]
    fn small_coe_correlators() {
        assert_eq!(corr(&[e(1, 2)], &[e(1, 2)], Ensemble::Coe, 4), q(1, 5));
        assert_eq!(corr(&[e(1, 1)], &[e(1, 1)], Ensemble::Coe, 4), q(2, 5));
        assert_eq!(corr(&[e(1, 2)], &[e(2, 1)], Ensemble::Coe, 4), q(1, 5));
        assert!(corr(&[e(1, 1)], &[], Ensemble::Coe, 4).is_zero());
    }

    #[test]
    fn orthogonal_class_of_identity() {
        assert_eq!(orthogonal_class(&[0, 1, 2, 3]), CycleType::new(vec![1, 1]));
        assert_eq!(orthogonal_class(&[1, 0]), CycleType::new(vec![1]));
    }

    #[test]
    fn first_moments() {
        for (n1, n2) in [(1u32, 1u32), (2, 3), (4, 4)] {
            let n = (n1 + n2) as i64;
            let prod = (n1 * n2) as i64;
            let cue = MomentSpec::new(vec![1], n1, n2, Block::Transmission, Ensemble::Cue).unwrap();
            assert_eq!(moment(&cue).unwrap(), q(prod, n));
            let coe = MomentSpec { ensemble: Ensemble::Coe, ..cue };
            assert_eq!(moment(&coe).unwrap(), q(prod, n + 1));
        }
    }

    #[test]
    fn moments_match_the_channel_sum() {
        for ensemble in [Ensemble::Cue, Ensemble::Coe] {
            for block in [Block::Transmission, Block::Reflection] {
                for traces in [vec![1], vec![2], vec![1, 1]] {
                    let spec = MomentSpec::new(traces, 2, 1, block, ensemble).unwrap();
                    assert_eq!(moment(&spec).unwrap(), moment_bruteforce(&spec).unwrap(), "{spec:?}");
                }
            }
        }
    }

    #[test]
    fn empty_product() {
        let spec = MomentSpec::new(vec![], 1, 1, Block::Transmission, Ensemble::Cue).unwrap();
        assert_eq!(moment_bruteforce(&spec).unwrap(), q(1, 1));
        assert_eq!(moment(&spec).unwrap(), q(1, 1));
    }
}
