//! Independent brute-force checks used to cross-validate the main engine:
//! a rational-coefficient Buchberger, exhaustive vertex covers and
//! finite-field evaluation.

pub mod cover;
pub mod field;
pub mod generic;

pub use cover::exhaustive_vertex_cover;
pub use field::{check_field, evaluate, evaluate_generic, FieldPoint, SUPPORTED_FIELDS};
pub use generic::{generic_buchberger, GenericPoly};
