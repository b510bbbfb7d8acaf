//! Rank-metric code-based encryption and cryptanalysis workbench.
//!
//! This crate implements two public-key encryption schemes built on
//! augmented Gabidulin codes (an ideal-structured variant and an
//! unstructured one, each with homogeneous and non-homogeneous error
//! distributions), together with exact attack-cost estimators for the
//! rank-decoding problems their security rests on, and small executable
//! attacks that validate the estimators' probability claims on toy
//! instances.
//!
//! **Do not use this library in production.** It is a research artifact:
//! arithmetic is not constant time and no side-channel hardening is
//! attempted.
//!
//! Layout:
//!
//! * [`field`] - bit-packed GF(2^m) arithmetic, 2 <= m <= 127
//! * [`mat`] - dense vectors/matrices over GF(2^m)
//! * [`f2linalg`] - GF(2) linear algebra, rank weight, support, samplers
//! * [`qpoly`] - linearized (q-)polynomials and their left-Euclidean ring
//! * [`gabidulin`] - augmented Gabidulin codes: encode, decode, DFR model
//! * [`ideal`] - the ring GF(2^m)[X]/(P) and ideal-matrix products
//! * [`scheme`] - parameter sets, key generation, encrypt/decrypt, wire
//!   formats, known-answer tests
//! * [`estimator`] - attack-cost formulas in exact integer arithmetic
//! * [`labattack`] - desk-scale executable attacks on planted instances

pub mod estimator;
pub mod f2linalg;
pub mod field;
pub mod gabidulin;
pub mod ideal;
pub mod labattack;
pub mod mat;
pub mod qpoly;
pub mod scheme;

pub use field::{FieldContext, FieldElement};
pub use mat::ExtMatrix;
