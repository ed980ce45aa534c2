//! CUE and COE class coefficients `V_N(c)` as exact rational functions of `N`.
//!
//! For a fixed total `t` the class-coefficient recursions couple every
//! partition of `t` to its refinements and coarsenings, so the values of one
//! level are obtained by solving the linear system formed by taking the
//! largest part as the distinguished cycle in each equation. Lower levels only
//! enter through the right-hand side. The system matrix is `N·I + B` with an
//! integer matrix `B`, hence always invertible over `Q(N)`.

pub mod laurent;
pub mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;

pub use laurent::{laurent_expand, LaurentError, LaurentSeries};
pub use poly::{PolyError, Polynomial, RationalFunction};

use crate::perm::CycleType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    Cue,
    Coe,
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ensemble::Cue => "cue",
            Ensemble::Coe => "coe",
        })
    }
}

/// Memo of class coefficients for one ensemble.
///
/// Reads take a shared lock; a missing level is solved under the exclusive
/// lock, so concurrent callers never duplicate work or observe partial levels.
#[derive(Debug)]
pub struct WeingartenTable {
    ensemble: Ensemble,
    inner: RwLock<TableInner>,
}

#[derive(Debug, Default)]
struct TableInner {
    values: HashMap<CycleType, RationalFunction>,
    solved_through: Option<usize>,
}

impl WeingartenTable {
    pub fn new(ensemble: Ensemble) -> Self {
        WeingartenTable { ensemble, inner: RwLock::new(TableInner::default()) }
    }

    pub fn ensemble(&self) -> Ensemble {
        self.ensemble
    }

    pub fn get(&self, c: &CycleType) -> RationalFunction {
        if let Some(v) = self.inner.read().expect("poisoned table").values.get(c) {
            return v.clone();
        }
        let mut inner = self.inner.write().expect("poisoned table");
        let from = inner.solved_through.map_or(0, |s| s + 1);
        for t in from..=c.total() {
            let level = solve_level(self.ensemble, t, &inner.values);
            inner.values.extend(level);
            inner.solved_through = Some(t);
        }
        inner.values[c].clone()
    }

    /// Residual of the recursion at `c` with part `first` as the
    /// distinguished cycle. Zero for every choice once the table is correct.
    pub fn recursion_residual(&self, c: &CycleType, first: usize) -> RationalFunction {
        let lookup = |p: &CycleType| self.get(p);
        let row = recursion_row(self.ensemble, c, first);
        let mut lhs = &row.diagonal * &self.get(c);
        for (coef, p) in &row.terms {
            lhs = &lhs + &lookup(p).scale(*coef);
        }
        let rhs = row.rhs.map(|p| lookup(&p)).unwrap_or_else(RationalFunction::zero);
        &lhs - &rhs
    }
}

struct RecursionRow {
    diagonal: RationalFunction,
    terms: Vec<(i64, CycleType)>,
    rhs: Option<CycleType>,
}

/// One recursion equation for `c`, distinguished part at index `first`.
fn recursion_row(ensemble: Ensemble, c: &CycleType, first: usize) -> RecursionRow {
    let parts = c.parts();
    let c1 = parts[first];
    let rest: Vec<usize> =
        parts.iter().enumerate().filter(|&(i, _)| i != first).map(|(_, &p)| p).collect();
    let (shift, merge_factor) = match ensemble {
        Ensemble::Cue => (0, 1),
        Ensemble::Coe => (c1 as i64, 2),
    };
    let diagonal = RationalFunction::from_polynomial(Polynomial::n_plus(shift));
    let mut terms = Vec::new();
    for p in 1..c1 {
        let mut v = rest.clone();
        v.push(p);
        v.push(c1 - p);
        terms.push((1, CycleType::new(v)));
    }
    for j in 0..rest.len() {
        let mut v: Vec<usize> =
            rest.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &p)| p).collect();
        v.push(c1 + rest[j]);
        terms.push((merge_factor * rest[j] as i64, CycleType::new(v)));
    }
    let rhs = (c1 == 1).then(|| CycleType::new(rest));
    RecursionRow { diagonal, terms, rhs }
}

/// Solve all partitions of `t`, given every lower level in `known`.
fn solve_level(
    ensemble: Ensemble,
    t: usize,
    known: &HashMap<CycleType, RationalFunction>,
) -> HashMap<CycleType, RationalFunction> {
    let parts = CycleType::partitions_of(t);
    if t == 0 {
        return HashMap::from([(CycleType::empty(), RationalFunction::one())]);
    }
    let index: HashMap<&CycleType, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = parts.len();
    let mut m = vec![vec![RationalFunction::zero(); n + 1]; n];
    for (i, c) in parts.iter().enumerate() {
        let row = recursion_row(ensemble, c, 0);
        m[i][i] = &m[i][i] + &row.diagonal;
        for (coef, p) in row.terms {
            let j = index[&p];
            m[i][j] = &m[i][j] + &RationalFunction::from_integer(coef);
        }
        if let Some(r) = row.rhs {
            m[i][n] = known[&r].clone();
        }
    }
    // Gauss-Jordan over Q(N).
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("system is nonsingular");
        m.swap(col, pivot);
        let inv = m[col][col].inverse().expect("nonzero pivot");
        for k in col..=n {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for k in col..=n {
                let d = &factor * &m[col][k];
                m[r][k] = &m[r][k] - &d;
            }
        }
    }
    parts.into_iter().enumerate().map(|(i, p)| (p, m[i][n].clone())).collect()
}

fn global(ensemble: Ensemble) -> &'static WeingartenTable {
    static CUE: OnceLock<WeingartenTable> = OnceLock::new();
    static COE: OnceLock<WeingartenTable> = OnceLock::new();
    match ensemble {
        Ensemble::Cue => CUE.get_or_init(|| WeingartenTable::new(Ensemble::Cue)),
        Ensemble::Coe => COE.get_or_init(|| WeingartenTable::new(Ensemble::Coe)),
    }
}

/// CUE class coefficient `V^U_N(c)`.
pub fn v_cue(c: &CycleType) -> RationalFunction {
    global(Ensemble::Cue).get(c)
}

/// COE class coefficient `V^O_N(c)`; `c` is a halved cycle type.
pub fn v_coe(c: &CycleType) -> RationalFunction {
    global(Ensemble::Coe).get(c)
}

pub fn class_coefficient(ensemble: Ensemble, c: &CycleType) -> RationalFunction {
    global(ensemble).get(c)
}

pub fn evaluate(f: &RationalFunction, n: &BigRational) -> Result<BigRational, PolyError> {
    f.evaluate(n)
}
