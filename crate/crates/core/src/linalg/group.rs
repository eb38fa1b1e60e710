use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::snf::{cokernel_of, smith_normal_form};
use crate::error::{Error, Result};

/// A finitely generated abelian group `ℤ^r ⊕ ℤ_{d₁} ⊕ … ⊕ ℤ_{d_k}` in
/// invariant-factor form: every `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
///
/// Because the form is canonical, `==` decides isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Validates an invariant-factor presentation.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        if let Some(bad) = torsion.iter().find(|d| *d < &BigInt::from(2)) {
            return Err(Error::Input(format!("invariant factor {bad} must be at least 2")));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::Input(format!("invariant factor {} does not divide {}", w[0], w[1])));
        }
        Ok(AbelianGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// The direct sum `ℤ_{n₁} ⊕ ℤ_{n₂} ⊕ …` for arbitrary integers, read
    /// as `ℤ/nℤ`: `0` contributes a copy of `ℤ`, `±1` nothing, and negative
    /// orders are replaced by their absolute value.
    pub fn from_cyclic<I, T>(orders: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let orders: Vec<BigInt> = orders.into_iter().map(Into::into).collect();
        let m = IntMatrix::diagonal(&orders);
        cokernel_of(&smith_normal_form(&m), orders.len())
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Direct sum of two groups, re-normalised.
    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let zeros = std::iter::repeat_n(BigInt::zero(), self.free_rank + other.free_rank);
        AbelianGroup::from_cyclic(zeros.chain(self.torsion.iter().cloned()).chain(other.torsion.iter().cloned()))
    }
}

/// Canonical rendering: `0`, `Z`, `Z^3`, `Z (+) Z_2 (+) Z_6`, `Z_4`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" (+) "))
        }
    }
}

/// Canonical string of a group; see the `Display` impl.
pub fn group_pretty(g: &AbelianGroup) -> String {
    g.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(group_pretty(&AbelianGroup::trivial()), "0");
        assert_eq!(group_pretty(&AbelianGroup::free(2)), "Z^2");
        assert_eq!(group_pretty(&AbelianGroup::free(1)), "Z");
        assert_eq!(group_pretty(&AbelianGroup::new(1, big(&[2])).unwrap()), "Z (+) Z_2");
        assert_eq!(group_pretty(&AbelianGroup::new(0, big(&[2, 6])).unwrap()), "Z_2 (+) Z_6");
    }

    #[test]
    fn validation() {
        assert!(AbelianGroup::new(0, big(&[1])).is_err());
        assert!(AbelianGroup::new(0, big(&[0])).is_err());
        assert!(AbelianGroup::new(0, big(&[-2])).is_err());
        assert!(AbelianGroup::new(0, big(&[4, 6])).is_err());
        assert!(AbelianGroup::new(0, big(&[2, 4])).is_ok());
    }

    #[test]
    fn cyclic_normalisation() {
        // Z_2 ⊕ Z_3 ≅ Z_6
        assert_eq!(AbelianGroup::from_cyclic([2, 3]), AbelianGroup::new(0, big(&[6])).unwrap());
        assert_eq!(AbelianGroup::from_cyclic([1, 0]), AbelianGroup::free(1));
        assert_eq!(AbelianGroup::from_cyclic([-4, 0, 6]), AbelianGroup::new(1, big(&[2, 12])).unwrap());
        assert_eq!(AbelianGroup::from_cyclic(Vec::<i64>::new()), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::from_cyclic([-1]), AbelianGroup::trivial());
    }

    #[test]
    fn direct_sums() {
        let a = AbelianGroup::from_cyclic([0, 2]);
        let b = AbelianGroup::from_cyclic([3]);
        assert_eq!(a.direct_sum(&b), AbelianGroup::from_cyclic([0, 6]));
        assert_eq!(a.direct_sum(&b).torsion_order(), BigInt::from(6));
    }
}
