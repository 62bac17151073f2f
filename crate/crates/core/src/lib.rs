//! Componentwise exact linear algebra over tuples of pairwise
//! non-embeddable fields: field arithmetic, polynomials, matrices and
//! subspaces, operator canonical forms, and inner products and bilinear
//! forms.

pub mod domain;
pub mod error;
pub mod fields;
pub mod forms;
pub mod linalg;
pub mod operators;
pub mod poly;

pub use error::{Error, Result};
