//! Truncated expansions in powers of `1/N`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::poly::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("requested order {order} is below the leading order {leading}")]
    OrderBelowLeading { order: i64, leading: i64 },
    #[error("numerator degree exceeds denominator degree; no expansion in 1/N")]
    NotProper,
}

/// `Σ_{k=start}^{max_order} a_k N^{-k}` with exact rational coefficients.
///
/// Coefficients below `start` are zero; those above `max_order` are unknown.
/// Leading zeros are stripped on construction, so two series agree on every
/// known coefficient exactly when they are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    start: i64,
    coeffs: Vec<BigRational>,
    max_order: i64,
}

impl LaurentSeries {
    /// `coeffs[i]` is the coefficient of `N^-(start + i)`; the series is known
    /// through `N^-max_order`. Entries past `max_order` are dropped and
    /// missing ones are zero.
    ///
    /// Canonical form: `start` is the first nonzero order and `coeffs` runs
    /// densely through `max_order`, so derived equality is semantic.
    pub fn new(start: i64, mut coeffs: Vec<BigRational>, max_order: i64) -> Self {
        let keep = (max_order - start + 1).max(0) as usize;
        coeffs.truncate(keep);
        coeffs.resize(keep, BigRational::zero());
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        LaurentSeries { start: start + lead as i64, coeffs, max_order }
    }

    pub fn zero(max_order: i64) -> Self {
        LaurentSeries { start: max_order + 1, coeffs: Vec::new(), max_order }
    }

    /// Order of the first nonzero coefficient, if any is known.
    pub fn leading_order(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    pub fn max_order(&self) -> i64 {
        self.max_order
    }

    /// Coefficient of `N^-k`; `None` past the truncation order.
    pub fn coefficient(&self, k: i64) -> Option<BigRational> {
        if k > self.max_order {
            return None;
        }
        if k < self.start {
            return Some(BigRational::zero());
        }
        Some(self.coeffs[(k - self.start) as usize].clone())
    }

    /// `(order, coefficient)` for every nonzero known coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.start + i as i64, c))
    }

    /// Truncate to a lower order.
    pub fn truncate(&self, max_order: i64) -> Self {
        assert!(max_order <= self.max_order, "cannot extend a truncated series");
        LaurentSeries::new(self.start, self.coeffs.clone(), max_order)
    }

    /// Accumulate `c · N^-k` (for `k ≤ max_order`).
    pub fn add_term(&mut self, k: i64, c: &BigRational) {
        if k > self.max_order || c.is_zero() {
            return;
        }
        if self.coeffs.is_empty() {
            self.start = k;
        }
        if k < self.start {
            let pad = (self.start - k) as usize;
            let mut v = vec![BigRational::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.start = k;
        }
        let idx = (k - self.start) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, BigRational::zero());
        }
        self.coeffs[idx] += c;
        let fixed = LaurentSeries::new(self.start, std::mem::take(&mut self.coeffs), self.max_order);
        *self = fixed;
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "N^-{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(N^-{})", self.max_order + 1)
    }
}

/// Exact long-division expansion of `f` in `1/N`, through `N^-order`.
pub fn laurent_expand(f: &RationalFunction, order: i64) -> Result<LaurentSeries, LaurentError> {
    let num = f.numerator();
    let den = f.denominator();
    let Some(dn) = num.degree() else {
        return Ok(LaurentSeries::zero(order));
    };
    let dd = den.degree().expect("canonical denominator is nonzero");
    if dn > dd {
        return Err(LaurentError::NotProper);
    }
    let leading = (dd - dn) as i64;
    if order < leading {
        return Err(LaurentError::OrderBelowLeading { order, leading });
    }
    // In x = 1/N: f = x^leading · p(x)/q(x) with p_i = num[dn-i], q_i = den[dd-i].
    let rat = |c: BigInt| BigRational::from_integer(c);
    let p: Vec<BigRational> = (0..=dn).map(|i| rat(num.coeff(dn - i))).collect();
    let q: Vec<BigRational> = (0..=dd).map(|i| rat(den.coeff(dd - i))).collect();
    let terms = (order - leading + 1) as usize;
    let mut s: Vec<BigRational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = p.get(k).cloned().unwrap_or_else(BigRational::zero);
        for j in 1..=k.min(dd) {
            acc -= &q[j] * &s[k - j];
        }
        s.push(acc / &q[0]);
    }
    Ok(LaurentSeries::new(leading, s, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weingarten::poly::Polynomial;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
    }

    fn series(start: i64, c: &[i64], max: i64) -> LaurentSeries {
        LaurentSeries::new(start, c.iter().map(|&v| BigRational::from_integer(v.into())).collect(), max)
    }

    #[test]
    fn accumulated_terms_compare_equal_to_built_series() {
        let mut s = LaurentSeries::zero(4);
        s.add_term(3, &BigRational::from_integer((-1).into()));
        assert_eq!(s, series(3, &[-1], 4));
        s.add_term(3, &BigRational::from_integer(1.into()));
        assert_eq!(s, LaurentSeries::zero(4));
    }

    #[test]
    fn expansion_of_one_over_n_squared_minus_one() {
        let s = laurent_expand(&rf(&[1], &[-1, 0, 1]), 6).unwrap();
        assert_eq!(s, series(2, &[1, 0, 1, 0, 1], 6));
        assert_eq!(s.to_string(), "N^-2 + N^-4 + N^-6 + O(N^-7)");
    }

    #[test]
    fn expansion_of_minus_one_over_n_cubed_minus_n() {
        let s = laurent_expand(&rf(&[-1], &[0, -1, 0, 1]), 5).unwrap();
        assert_eq!(s, series(3, &[-1, 0, -1], 5));
    }

    #[test]
    fn geometric_series() {
        let s = laurent_expand(&rf(&[1], &[1, 1]), 3).unwrap();
        assert_eq!(s, series(1, &[1, -1, 1], 3));
    }

    #[test]
    fn order_below_leading_is_rejected() {
        assert_eq!(
            laurent_expand(&rf(&[1], &[-1, 0, 1]), 1),
            Err(LaurentError::OrderBelowLeading { order: 1, leading: 2 })
        );
        assert_eq!(laurent_expand(&rf(&[0, 0, 1], &[1, 1]), 3), Err(LaurentError::NotProper));
    }

    #[test]
    fn leading_zeros_are_normalized() {
        assert_eq!(series(0, &[0, 0, 1, 2], 3), series(2, &[1, 2], 3));
        let mut acc = LaurentSeries::zero(5);
        acc.add_term(4, &BigRational::one());
        acc.add_term(2, &BigRational::one());
        acc.add_term(9, &BigRational::one());
        assert_eq!(acc, series(2, &[1, 0, 1], 5));
        assert_eq!(acc.coefficient(1), Some(BigRational::zero()));
        assert_eq!(acc.coefficient(6), None);
    }
}
