//! Exact integer linear algebra: matrices over ℤ, Smith normal form with
//! unimodular witnesses, and kernels/cokernels as abelian groups.

mod group;
mod matrix;
mod minors;
mod snf;

pub use group::{group_pretty, AbelianGroup};
pub use matrix::IntMatrix;
pub use minors::{elementary_divisors_oracle, ORACLE_MAX_DIM};
pub use snf::{cokernel, kernel_basis, smith_normal_form, SmithDecomposition};
