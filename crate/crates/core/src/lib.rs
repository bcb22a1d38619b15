//! Exact Schubert calculus for the classical groups.
//!
//! This crate computes single and double Schubert polynomials of types A, B,
//! C, and D, the Giambelli-type raising operator polynomials (Schur, Q, P,
//! theta, eta), transition trees and their Stanley coefficients, splitting
//! formulas, and Chern class formulas for degeneracy loci.  All arithmetic is
//! exact over the rationals.
//!
//! The main entry points are:
//!
//! * [`weyl::SignedPermutation`] — signed permutation Weyl groups of types
//!   A, B/C, and D, with lengths, reduced words and factorizations;
//! * [`shapes::Shape`] — (typed) k-strict partitions and the bijections with
//!   k-Grassmannian Weyl group elements;
//! * [`formal`] — the raising operator engine over abstract Chern symbols;
//! * [`polyring`] — concrete multivariate polynomials and the symmetric
//!   function families q, theta, eta, (super)Schur;
//! * [`nilcox`] — nilCoxeter algebras and double Schubert polynomials;
//! * [`transition`] — transition trees and (mixed) Stanley coefficients;
//! * [`schubops`] — divided differences, geometrization, ideal equality;
//! * [`split`] — the splitting formulas for double Schubert polynomials;
//! * [`locus`] — degeneracy locus formula emission and evaluation.

pub mod error;
pub mod formal;
pub mod locus;
pub mod mpoly;
pub mod nilcox;
pub mod polyring;
pub mod rational;
pub mod schubops;
pub mod shapes;
pub mod split;
pub mod sym;
pub mod transition;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
