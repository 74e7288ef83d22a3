//! Exact linear algebra over `Z` and `Z/m`: Smith normal form, cokernels,
//! subgroup structure and modular kernels. Everything uses arbitrary
//! precision integers; nothing here touches floating point.

mod group;
mod matrix;
mod modular;
mod snf;

pub use group::{cokernel_group, integer_kernel, reduce_coords, subgroup_structure, AbelianGroup, ModSubgroup};
pub use matrix::IntMatrix;
pub use modular::{hom_kernel, kernel_mod, mod_inverse, solve_mod};
pub use snf::{smith_form, smith_normal_form, SmithForm};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("coordinate vector has length {found}, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("modulus {0} is not allowed here")]
    BadModulus(u64),
}
