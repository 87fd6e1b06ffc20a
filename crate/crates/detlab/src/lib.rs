//! Exact multivariate polynomial algebra — Gröbner bases, ideal
//! operations, Hilbert functions, minimal free resolutions — and on top of
//! it a toolbox for standard and good determinantal ideals: verification,
//! construction, basic double linkage, flat families, and refutation
//! techniques.
//!
//! All arithmetic is exact, over a prime field (default `F_32003`) or the
//! rationals. Every randomized operation takes an explicit 64-bit seed and
//! is reproducible.

#![allow(clippy::needless_range_loop)] // index style keeps parallel row/column arrays in sync

pub mod error;
pub mod ring;
pub mod rng;
pub mod par;
pub mod linalg;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod matrix;
pub mod resolution;
pub mod constructions;
pub mod catalog;
pub mod detcheck;
pub mod io;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use matrix::PolyMatrix;
pub use ring::{Coeff, FieldSpec, Monomial, MonomialOrder, Polynomial, Ring};
