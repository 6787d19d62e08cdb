//! Fully enumerated matrix groups over prime fields.

mod engine;
mod gl;
mod pattern;
mod table;

pub use engine::{Engine, DEFAULT_BUDGET};
pub use gl::{coset_rep_w, gl_order, in_levi, in_parabolic, in_radical};
pub use pattern::{semidirect_factorize, PatternDescriptor};
pub use table::{GroupSummary, GroupTable};
