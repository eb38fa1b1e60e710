//! Exact arithmetic in the complex Clifford algebras `ℂCliffₙ`.
//!
//! Elements are expanded on the blade basis `e_{i₁}⋯e_{i_k}` with Gaussian
//! rational coefficients. The algebra is Z₂-graded by blade parity and
//! carries the adjoint `(e_{i₁}⋯e_{i_k} ⊗ z)* = (−1)^k e_{i_k}⋯e_{i₁} ⊗ z̄`.
//! Real Clifford algebras are the real-coefficient elements; there is no
//! separate type for them.

mod element;
mod iso;
mod parse;
mod scalar;
mod tensor;

pub use element::{Blade, CliffordElement, Parity, MAX_GENERATORS};
pub use iso::{
    iso_ccliff1, iso_ccliff1_inverse, iso_ccliff2, iso_ccliff2_inverse, pauli_basis, Matrix2C, PairCC,
};
pub use parse::parse_element;
pub use scalar::GaussianRational;
pub use tensor::{graded_tensor_multiply, GradedTensor};

use crate::ktheory::KGroups;
use crate::linalg::AbelianGroup;

/// Graded K-theory of `ℂCliffₙ`: `(ℤ, 0)` for even `n`, `(0, ℤ)` for odd
/// `n`. Only the parity of `n` matters since `ℂCliff_{n+2} ≅ ℂCliffₙ ⊗ M₂(ℂ)`.
pub fn graded_k_lookup(n: usize) -> KGroups {
    let (k0, k1) = if n.is_multiple_of(2) {
        (AbelianGroup::free(1), AbelianGroup::trivial())
    } else {
        (AbelianGroup::trivial(), AbelianGroup::free(1))
    };
    KGroups::new(k0, k1, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_values() {
        assert_eq!(graded_k_lookup(0).to_string(), "(Z, 0)");
        assert_eq!(graded_k_lookup(1).to_string(), "(0, Z)");
        assert_eq!(graded_k_lookup(2).to_string(), "(Z, 0)");
        assert!(graded_k_lookup(5).graded);
    }
}
