//! Exact-arithmetic representation theory for bound quiver algebras.
//!
//! The crate computes with finite dimensional modules over a path algebra
//! modulo admissible relations: Hom spaces, projective resolutions and Ext
//! groups, characteristic classes of exact sequences, bounded complexes of
//! projectives up to homotopy, torsion pairs, and the certified
//! derived-equivalence verdicts for the heart obtained by tilting a module
//! category at a torsion pair.
//!
//! Everything runs over an exact ground field (arbitrary-precision rationals
//! or a prime field), so rank and vanishing tests are decisions, not
//! approximations. The crate is `no_std` (with `alloc`); parsing of the
//! on-disk file formats and all IO live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod complex;
pub mod ext;
pub mod field;
pub mod indec;
pub mod matrix;
pub mod rep;
pub mod resolution;
pub mod torsion;
pub mod verdict;

#[cfg(test)]
pub(crate) mod testutil;

pub use algebra::{AlgebraElement, BoundQuiverAlgebra, Quiver, Relation};
pub use complex::{ChainMap, EndoAlgebra, ProjComplex, SiltingReport};
pub use rep::{ModMorphism, Representation};
pub use resolution::ProjResolution;
pub use torsion::{TorsionPair, TorsionVerdicts};
pub use verdict::{Conclusion, Verdict};
pub use ext::{ExtClass, ShortExact, Witness};
pub use field::{Field, Scalar};
pub use indec::{AlgebraClass, IndecModule, IndecomposableList};
pub use matrix::Matrix;
