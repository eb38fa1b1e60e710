use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::element::{Blade, CliffordElement};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// An element of the graded tensor product `ℂCliff_p ⊗̂ ℂCliff_q`, expanded
/// on the basis `e_A ⊗ e_B`.
///
/// Multiplication uses the Koszul rule
/// `(a₁ ⊗ b₁)(a₂ ⊗ b₂) = (−1)^{∂b₁·∂a₂} a₁a₂ ⊗ b₁b₂`
/// and the adjoint is `(a ⊗ b)* = (−1)^{∂a·∂b} a* ⊗ b*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedTensor {
    left_n: usize,
    right_n: usize,
    terms: BTreeMap<(Blade, Blade), GaussianRational>,
}

impl GradedTensor {
    pub fn zero(left_n: usize, right_n: usize) -> Self {
        GradedTensor { left_n, right_n, terms: BTreeMap::new() }
    }

    /// The elementary tensor `a ⊗ b`.
    pub fn simple(a: &CliffordElement, b: &CliffordElement) -> Self {
        let mut out = Self::zero(a.n(), b.n());
        for (x, z) in a.terms() {
            for (y, w) in b.terms() {
                out.accumulate((x, y), &(z * w));
            }
        }
        out
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.left_n, self.right_n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((Blade, Blade), &GaussianRational)> {
        self.terms.iter().map(|(k, z)| (*k, z))
    }

    fn accumulate(&mut self, key: (Blade, Blade), z: &GaussianRational) {
        if z.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(GaussianRational::zero);
        *entry += z;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "Cliff_{} (x) Cliff_{} vs Cliff_{} (x) Cliff_{}",
                self.left_n, self.right_n, other.left_n, other.right_n
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, z) in &other.terms {
            out.accumulate(*k, z);
        }
        Ok(out)
    }

    /// Product in the graded tensor product. Basis tensors are homogeneous
    /// in both factors, so bilinear extension over them covers every input.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.left_n, self.right_n);
        for ((a1, b1), x) in &self.terms {
            for ((a2, b2), y) in &other.terms {
                let (a, neg_a) = a1.product(*a2);
                let (b, neg_b) = b1.product(*b2);
                let koszul = b1.parity().is_odd() && a2.parity().is_odd();
                let z = x * y;
                let negative = neg_a ^ neg_b ^ koszul;
                out.accumulate((a, b), &if negative { -z } else { z });
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.left_n, self.right_n);
        for ((a, b), z) in &self.terms {
            let left = CliffordElement::term(self.left_n, *a, GaussianRational::from(1))
                .expect("blade in range")
                .adjoint();
            let right = CliffordElement::term(self.right_n, *b, GaussianRational::from(1))
                .expect("blade in range")
                .adjoint();
            let sign_flip = a.parity().is_odd() && b.parity().is_odd();
            let coeff = if sign_flip { -z.conj() } else { z.conj() };
            // a* and b* are ±(same blade), so each has exactly one term
            let (la, lz) = left.terms().next().expect("nonzero");
            let (rb, rz) = right.terms().next().expect("nonzero");
            out.accumulate((la, rb), &(&(&coeff * lz) * rz));
        }
        out
    }

    /// `(−1)^{∂a + ∂b}` on basis tensors.
    pub fn grading(&self) -> Self {
        let mut out = Self::zero(self.left_n, self.right_n);
        for ((a, b), z) in &self.terms {
            let odd = (a.parity() + b.parity()).is_odd();
            out.accumulate((*a, *b), &if odd { -z } else { z.clone() });
        }
        out
    }

    /// The isomorphism `ℂCliff_p ⊗̂ ℂCliff_q → ℂCliff_{p+q}` sending
    /// `eᵢ ⊗ 1 ↦ eᵢ` and `1 ⊗ eⱼ ↦ e_{p+j}`.
    pub fn to_clifford(&self) -> CliffordElement {
        let n = self.left_n + self.right_n;
        let mut out = CliffordElement::zero(n);
        for ((a, b), z) in &self.terms {
            // e_A · e_{B+p} has no inversions since every index of A is ≤ p
            let blade = Blade::from_sorted(
                &a.indices().into_iter().chain(b.shifted(self.left_n).indices()).collect::<Vec<_>>(),
            )
            .expect("disjoint increasing indices");
            out = &out + &CliffordElement::term(n, blade, z.clone()).expect("blade in range");
        }
        out
    }

    /// Inverse of [`GradedTensor::to_clifford`].
    pub fn from_clifford(x: &CliffordElement, left_n: usize) -> Result<Self> {
        if left_n > x.n() {
            return Err(Error::Input(format!("cannot split Cliff_{} at {left_n}", x.n())));
        }
        let right_n = x.n() - left_n;
        let mut out = Self::zero(left_n, right_n);
        for (blade, z) in x.terms() {
            let left_idx: Vec<usize> = blade.indices().into_iter().filter(|&i| i <= left_n).collect();
            let right_idx: Vec<usize> =
                blade.indices().into_iter().filter(|&i| i > left_n).map(|i| i - left_n).collect();
            out.accumulate((Blade::from_sorted(&left_idx)?, Blade::from_sorted(&right_idx)?), z);
        }
        Ok(out)
    }
}

/// `(a₁ ⊗ b₁)(a₂ ⊗ b₂)` in the graded tensor product.
pub fn graded_tensor_multiply(
    a1: &CliffordElement,
    b1: &CliffordElement,
    a2: &CliffordElement,
    b2: &CliffordElement,
) -> Result<GradedTensor> {
    GradedTensor::simple(a1, b1).multiply(&GradedTensor::simple(a2, b2))
}

impl fmt::Display for GradedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((a, b), z)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{z} * {a} (x) {b}")?;
        }
        Ok(())
    }
}
