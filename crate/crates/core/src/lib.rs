//! Semi-infinite LS paths, quantum LS paths and graded characters of
//! Demazure submodules for untwisted affine types.
//!
//! Weights are written in fundamental-weight coordinates plus a `delta`
//! coefficient, coweights in simple-coroot coordinates and roots in
//! simple-root coordinates (Bourbaki numbering, node 0 affine).

pub mod cartan;
pub mod characters;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod path;
pub mod peterson;
pub mod qls;
pub mod series;
pub mod sils;
pub mod weyl;

pub use cartan::{AffineRealRoot, CartanDatum, CartanType, Coweight, LevelZeroWeight, Root};
pub use enumerate::{enumerate_demazure, EnumerationConfig};
pub use error::{Error, Result};
pub use path::{Direction, LsPath, Rational};
pub use peterson::{Parabolic, Shape};
pub use qls::{QlsCrystal, QlsData, QlsEntry, QlsPath};
pub use series::{Coefficient, GradedChar, Window};
pub use sils::SilsPath;
pub use weyl::{AffineWeylElt, FiniteWeylElt};

/// Graded character with machine-integer coefficients.
pub type GradedCharacter = GradedChar<i64>;
/// Graded character with arbitrary-precision coefficients.
pub type BigGradedCharacter = GradedChar<num_bigint::BigInt>;
