//! Exact and Monte Carlo tools for correlators of Haar-random unitary and
//! symmetric unitary matrices.

pub mod perm;
pub mod weingarten;
pub mod factorizations;
pub mod ribbon;
pub mod correlator;
pub mod haar_mc;
