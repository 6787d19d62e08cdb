//! Hopf structures on class functions of pattern groups.

pub mod monoid;
pub mod scf;
pub mod specialize;
pub mod ut;

pub use monoid::{axiom_suite, AxiomInstance, BlockTensor, MonoidMaps};
pub use scf::{Antipode, ScfElement, ScfTensor, SubsetTerm};
pub use specialize::{delta_indicator, oracle_suite, specialize, specialize_tensor};
pub use ut::{GradedCf, GradedTensor, UtCf, UtHopf, UtTensor};
