//! Class functions of unipotent upper-triangular groups over prime fields,
//! the Hopf algebra they form, its Catalan-indexed sub-Hopf algebra on natural
//! unit interval orders, and induction to general linear groups.

pub mod class_fn;
pub mod combinatorics;
pub mod error;
pub mod gl_bridge;
pub mod group;
pub mod hopf;
pub mod laurent;
pub mod matrix;
pub mod report;
pub mod scalar;

pub use class_fn::{ClassFunction, ClassMap, ProductClassFunction, Split, Straightening};
pub use combinatorics::{
    AscEqInv, DyckWord, GroundSet, IncGraph, Label, LabelBijection, Nuio, Pair, PartialOrder,
    SetComposition, TotalOrder,
};
pub use error::{Error, Result};
pub use group::{Engine, GroupTable, PatternDescriptor};
pub use laurent::{LaurentPoly, LinComb};
pub use matrix::{FqMatrix, PrimeField};
pub use report::{Report, ReportEntry, Status};
pub use scalar::Scalar;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials in `t = 1/q` with exact rational coefficients.
pub type Laurent = LaurentPoly<Rational>;
/// Class functions with exact rational values.
pub type ClassFn = ClassFunction<Rational>;
