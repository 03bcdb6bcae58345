//! Real root-finding for univariate polynomials via modified matrix sign
//! iterations on the companion matrix.
//!
//! The central idea: the map `M <- 0.5 (M - M^{-1})` applied to the companion
//! matrix of a real polynomial keeps the images of real roots on the real
//! line while driving every nonreal eigenvalue quadratically to `+-i`. After
//! enough steps, `M_k^2 + I` has a dominant eigenspace of exactly the
//! dimension `r` of the real-root set; a randomized range finder recovers a
//! unitary basis `U` of that space, and the `r x r` reduction `U^H C_p U`
//! exposes the real roots at small cost.
//!
//! The crate provides the polynomial toolbox ([`poly`]), dense complex
//! linear algebra ([`linalg`]), companion/Frobenius arithmetic
//! ([`frobenius`]), the randomized eigenspace reducer ([`subspace`]), the
//! sign-iteration flows ([`sign`]), the polynomial-modular dual flow
//! ([`modular`]), complex-plane geometry utilities ([`geometry`]),
//! iterative refiners and the reference root oracle ([`refine`]), and
//! deterministic input generators for the benchmark families
//! ([`generators`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `signroot` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod fft;
pub mod frobenius;
pub mod generators;
pub mod geometry;
pub mod linalg;
pub mod matrix;
pub mod modular;
pub mod poly;
pub mod refine;
pub mod rng;
pub mod sign;
pub mod subspace;

pub use num_complex::Complex64;

/// Convenience constructor for complex scalars.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub use frobenius::{companion, companion_matvec, FrobeniusElement};
pub use matrix::{ComplexMatrix, Matrix, RealMatrix};
pub use poly::Polynomial;
pub use sign::{SignFlowConfig, SignFlowReport};
