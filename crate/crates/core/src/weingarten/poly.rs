//! Integer polynomials in the channel number `N` and their quotients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("pole at N = {0}")]
    Pole(BigRational),
    #[error("division by the zero rational function")]
    DivisionByZero,
}

/// Polynomial in `N` with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `N`.
    pub fn n() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `N + c`.
    pub fn n_plus(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c), BigInt::one()])
    }

    /// Ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    fn divide_scalar_exact(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) · a mod d`.
    pub fn pseudo_rem(&self, d: &Polynomial) -> Polynomial {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - dd;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|a| a * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] -= &lr * c;
            }
            r = Polynomial::from_coeffs(next);
        }
        r
    }

    /// Exact division in `Z[N]`; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Polynomial {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if self.is_zero() {
            return Self::zero();
        }
        let ds = self.coeffs.len() - 1;
        assert!(ds >= dd, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let (qk, rem) = r[k + dd].div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Polynomial::from_coeffs(q)
    }

    /// Primitive gcd (positive leading coefficient) via the primitive
    /// polynomial remainder sequence.
    pub fn gcd_primitive(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.degree() == Some(0) {
                return Polynomial::one();
            }
            a = b;
            b = r.primitive_part();
        }
    }

    pub fn evaluate(&self, n: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * n + BigRational::from_integer(c.clone()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Polynomial {
    /// Descending-degree form: `N^3 - 2*N + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "N")?,
                _ => write!(f, "N^{k}")?,
            }
        }
        Ok(())
    }
}

/// A quotient of integer polynomials in `N`, kept in canonical form.
///
/// Canonical form: numerator and denominator coprime in `Q[N]`, the integer
/// contents of the two coprime to each other, and a positive leading
/// denominator coefficient. Equal functions are therefore structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd_primitive(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let cn = num.content();
        let cd = den.content();
        let ratio = BigRational::new(cn.clone(), cd.clone());
        let mut num = num.divide_scalar_exact(&cn).scale(ratio.numer());
        let mut den = den.divide_scalar_exact(&cd).scale(ratio.denom());
        if den.leading().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn from_integer(c: i64) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<Self, PolyError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::reduce(self.num.scale(&BigInt::from(c)), self.den.clone())
    }

    /// Exact value at a rational `N`; poles are reported, never resolved by
    /// limits.
    pub fn evaluate(&self, n: &BigRational) -> Result<BigRational, PolyError> {
        let d = self.den.evaluate(n);
        if d.is_zero() {
            return Err(PolyError::Pole(n.clone()));
        }
        Ok(self.num.evaluate(n) / d)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
