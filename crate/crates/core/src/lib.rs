//! Exact algebra for quadratic forms in characteristic 2.
//!
//! The crate computes the Arf invariant of a nondegenerate quadratic form
//! with values in a binary finite field GF(2ⁿ) or in the rational function
//! field F₂(t), together with the machinery around it:
//!
//! - [`gf2n`]: binary fields, Frobenius, square roots, trace and the
//!   Artin–Schreier map `x ↦ x² + x` with its cokernel `k/P(k)`.
//! - [`poly2`], [`ratfunc`], [`tower`]: F₂(t) and its perfect-closure tower
//!   `F₂(t^{1/2^m})`, with a decision procedure for membership in `P(K)` and
//!   the descent of Artin–Schreier classes down the tower.
//! - [`linalg`], [`quadform`]: exact matrices, quadratic forms stored as
//!   (polar Gram matrix, basis values), symplectic bases.
//! - [`arf`]: Lagrangians, Wu vectors, the Wu-vector class over perfect
//!   fields, the symplectic-basis Arf formula, Witt decomposition.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod arf;
mod error;
pub mod field;
pub mod gf2lin;
pub mod gf2n;
pub mod linalg;
pub mod poly2;
pub mod quadform;
pub mod ratfunc;
pub mod sample;
pub mod tower;

pub use error::Error;
pub use field::{ArtinSchreier, Field, RandomElement, SquareRoots};
pub use gf2n::{AsClass, BinElem, BinaryField};
pub use poly2::Poly2;
pub use quadform::{QuadForm, SymplecticBasis};
pub use ratfunc::RatFunc;
pub use tower::{AsClassFF, TowerElem, TowerField};

pub type Result<T, E = Error> = core::result::Result<T, E>;
