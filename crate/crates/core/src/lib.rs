//! Exact Kazhdan-Lusztig polynomials of matroids, with a focus on uniform
//! matroids and uniform matroids with disjoint bases removed.
//!
//! The [`matroid`] module is a brute-force oracle over the lattice of flats;
//! [`tableaux`] and [`closed_forms`] give the combinatorial formulas that the
//! oracle is checked against.

pub mod arith;
pub mod closed_forms;
pub mod error;
pub mod identities;
pub mod matroid;
pub mod params;
pub mod tableaux;
pub mod verify;

pub use arith::{BigInt, IntPoly, Rational};
pub use closed_forms::{
    build_rho_uniform, char_poly_rho, classify_minor, coeff_rho, coeff_uniform_klum,
    coeff_uniform_tableau, kl_poly_rho, MinorKind, MinorType,
};
pub use error::{Error, Result};
pub use matroid::{char_poly, flats, is_isomorphic, kl_poly, matroid_from_bases, GroundSubset, Matroid};
pub use params::RhoUniformParams;
pub use tableaux::{
    count_overline_skyt, count_skyt, count_skyt_rho_direct, count_syt, enumerate_skyt,
    involution_rotate, iota_action, Filling, SkewShape,
};
