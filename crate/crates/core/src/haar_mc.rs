//! Monte Carlo estimates over Haar-random CUE and COE matrices.
//!
//! CUE samples come from the QR decomposition of a complex Ginibre matrix
//! with the phases of `R`'s diagonal moved into `Q`; COE samples are `UUᵀ`.
//! The generator is ChaCha8 seeded from a 64-bit seed, so estimates are
//! reproducible for a fixed seed and sample count.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::correlator::{Block, CorrelatorError, CorrelatorSpec, Element, MomentSpec};
use crate::weingarten::Ensemble;

pub type Matrix = DMatrix<Complex64>;

/// Upper bounds on the sizes the estimators accept.
pub const MAX_MC_FACTORS: usize = 4;
pub const MAX_MC_POWER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: Complex64,
    /// `sqrt((var(re) + var(im)) / samples)`, sample variances.
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// Distance from `exact` in standard errors.
    pub fn deviation(&self, exact: Complex64) -> f64 {
        let d = (self.mean - exact).norm();
        if self.stderr == 0.0 {
            if d == 0.0 { 0.0 } else { f64::INFINITY }
        } else {
            d / self.stderr
        }
    }
}

/// Single-pass mean and variance of a complex stream.
#[derive(Debug, Clone, Default)]
struct Welford {
    n: u64,
    mean: Complex64,
    m2_re: f64,
    m2_im: f64,
}

impl Welford {
    fn push(&mut self, x: Complex64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        let after = x - self.mean;
        self.m2_re += delta.re * after.re;
        self.m2_im += delta.im * after.im;
    }

    fn finish(&self, seed: u64) -> McEstimate {
        let stderr = if self.n > 1 {
            let var = (self.m2_re + self.m2_im) / (self.n - 1) as f64;
            (var / self.n as f64).sqrt()
        } else {
            0.0
        };
        McEstimate { mean: self.mean, stderr, samples: self.n, seed }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Haar-random `n × n` unitary.
pub fn sample_cue<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    assert!(n >= 1, "matrix size must be positive");
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let z = Matrix::from_fn(n, n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    });
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let norm = d.norm();
        // a zero pivot has probability zero; keep the column as is
        if norm > 0.0 {
            let phase = d / norm;
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
    }
    q
}

/// Haar-random symmetric unitary `UUᵀ`.
pub fn sample_coe<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let u = sample_cue(n, rng);
    &u * u.transpose()
}

fn sample<R: Rng + ?Sized>(ensemble: Ensemble, n: usize, rng: &mut R) -> Matrix {
    match ensemble {
        Ensemble::Cue => sample_cue(n, rng),
        Ensemble::Coe => sample_coe(n, rng),
    }
}

fn entry(s: &Matrix, e: &Element) -> Complex64 {
    s[(e.row as usize - 1, e.col as usize - 1)]
}

pub fn mc_correlator(spec: &CorrelatorSpec, samples: u64, seed: u64) -> Result<McEstimate, CorrelatorError> {
    let t = spec.unconjugated.len().max(spec.conjugated.len());
    if t > MAX_MC_FACTORS {
        return Err(CorrelatorError::Infeasible(format!("{t} factors, at most {MAX_MC_FACTORS} supported")));
    }
    let mut rng = rng_from_seed(seed);
    let mut acc = Welford::default();
    for _ in 0..samples {
        let s = sample(spec.ensemble, spec.n as usize, &mut rng);
        let plain = spec.unconjugated.iter().fold(Complex64::new(1.0, 0.0), |p, e| p * entry(&s, e));
        let value = spec.conjugated.iter().fold(plain, |p, e| p * entry(&s, e).conj());
        acc.push(value);
    }
    Ok(acc.finish(seed))
}

/// The block `X` of `S`: rows in lead 1, columns in lead 2 for
/// transmission, lead 1 for reflection.
pub fn block_of(s: &Matrix, n1: usize, block: Block) -> Matrix {
    let n = s.nrows();
    match block {
        Block::Transmission => s.view((0, n1), (n1, n - n1)).into_owned(),
        Block::Reflection => s.view((0, 0), (n1, n1)).into_owned(),
    }
}

pub fn mc_moment(spec: &MomentSpec, samples: u64, seed: u64) -> Result<McEstimate, CorrelatorError> {
    if spec.total() > MAX_MC_POWER {
        return Err(CorrelatorError::Infeasible(format!(
            "total power {}, at most {MAX_MC_POWER} supported",
            spec.total()
        )));
    }
    let top = spec.traces.iter().copied().max().unwrap_or(0);
    let mut rng = rng_from_seed(seed);
    let mut acc = Welford::default();
    for _ in 0..samples {
        let s = sample(spec.ensemble, spec.n() as usize, &mut rng);
        let x = block_of(&s, spec.n1 as usize, spec.block);
        let a = x.adjoint() * &x;
        // traces[k] = Tr[A^(k+1)]
        let mut traces = Vec::with_capacity(top);
        let mut power = a.clone();
        for k in 0..top {
            if k > 0 {
                power = &power * &a;
            }
            traces.push(power.trace());
        }
        let value = spec.traces.iter().fold(Complex64::new(1.0, 0.0), |p, &m| p * traces[m - 1]);
        acc.push(value);
    }
    Ok(acc.finish(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(m: &Matrix) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn samples_are_unitary() {
        let mut rng = rng_from_seed(1);
        for n in [1, 2, 5, 16] {
            let u = sample_cue(n, &mut rng);
            assert!(max_abs(&(u.adjoint() * &u - Matrix::identity(n, n))) < 1e-12);
        }
    }

    #[test]
    fn coe_samples_are_symmetric_unitary() {
        let mut rng = rng_from_seed(2);
        for n in [1, 3, 8] {
            let w = sample_coe(n, &mut rng);
            assert!(max_abs(&(&w - w.transpose())) < 1e-12);
            assert!(max_abs(&(w.adjoint() * &w - Matrix::identity(n, n))) < 1e-12);
        }
    }

    #[test]
    fn one_by_one_is_a_phase() {
        let mut rng = rng_from_seed(3);
        let u = sample_cue(1, &mut rng);
        assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let spec = CorrelatorSpec::new(
            vec![Element { row: 1, col: 1 }],
            vec![Element { row: 1, col: 1 }],
            Ensemble::Cue,
            3,
        )
        .unwrap();
        let a = mc_correlator(&spec, 500, 9).unwrap();
        let b = mc_correlator(&spec, 500, 9).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.mean, mc_correlator(&spec, 500, 10).unwrap().mean);
    }

    #[test]
    fn welford_matches_two_pass() {
        let xs = [1.0, 2.0, 4.0, 7.0].map(|x| Complex64::new(x, -x / 2.0));
        let mut w = Welford::default();
        xs.iter().for_each(|&x| w.push(x));
        let e = w.finish(0);
        let mean = xs.iter().sum::<Complex64>() / 4.0;
        let var: f64 = xs.iter().map(|x| (x - mean).norm_sqr()).sum::<f64>() / 3.0;
        assert!((e.mean - mean).norm() < 1e-12);
        assert!((e.stderr - (var / 4.0).sqrt()).abs() < 1e-12);
    }
}
