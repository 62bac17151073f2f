//! Exact matrices, subspaces, coordinates, linear maps and duals.

mod matrix;
mod nspace;
pub mod space;

pub use matrix::Matrix;
pub use nspace::{linear_independence, Independence, NFunctional, NMatrix, NSubspace, NTransform, NVector};
pub use space::{Subspace, Transform, Vector};
