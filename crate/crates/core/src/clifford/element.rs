use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Largest supported generator count.
pub const MAX_GENERATORS: usize = 64;

/// Z₂-degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k.is_multiple_of(2) { Parity::Even } else { Parity::Odd }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        if self == o { Parity::Even } else { Parity::Odd }
    }
}

/// A basis monomial `e_{i₁} ⋯ e_{i_k}` with `i₁ < ⋯ < i_k`, stored as a
/// bit set (bit `i − 1` for `e_i`). Ordered by grade, then
/// lexicographically by index list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade from strictly increasing 1-based indices.
    pub fn from_sorted(indices: &[usize]) -> Result<Blade> {
        let mut bits = 0u64;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i > MAX_GENERATORS || i <= last {
                return Err(Error::Input(format!("blade indices must increase within 1..={MAX_GENERATORS}")));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(Blade(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn parity(self) -> Parity {
        Parity::of(self.grade())
    }

    /// 1-based indices, increasing.
    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Largest index, 0 for the scalar blade.
    pub fn top(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Shifts every index up by `k`.
    pub fn shifted(self, k: usize) -> Blade {
        Blade(self.0 << k)
    }

    /// `e_S · e_T = ±e_{S △ T}`: one sign flip per pair `s > t` with
    /// `s ∈ S`, `t ∈ T`, and one per shared generator (`eᵢ² = −1`).
    pub fn product(self, other: Blade) -> (Blade, bool) {
        let mut flips = (self.0 & other.0).count_ones();
        let mut t = other.0;
        while t != 0 {
            let bit = t.trailing_zeros();
            flips += (self.0 >> bit >> 1).count_ones();
            t &= t - 1;
        }
        (Blade(self.0 ^ other.0), flips % 2 == 1)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        // equal grades: the smallest index in exactly one blade decides
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

/// An element of the complex Clifford algebra `ℂCliffₙ` on generators
/// `e₁ … eₙ` with `eᵢ² = −1` and `eᵢeⱼ = −eⱼeᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    n: usize,
    terms: BTreeMap<Blade, GaussianRational>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        CliffordElement { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, z: GaussianRational) -> Self {
        Self::term(n, Blade::SCALAR, z).expect("scalar blade fits every n")
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, GaussianRational::one())
    }

    /// `z · e_blade`; fails if the blade uses a generator beyond `n`.
    pub fn term(n: usize, blade: Blade, z: GaussianRational) -> Result<Self> {
        let mut out = Self::zero(n);
        if blade.top() > n {
            return Err(Error::Input(format!("blade {blade} does not live in Cliff_{n}")));
        }
        if !z.is_zero() {
            out.terms.insert(blade, z);
        }
        Ok(out)
    }

    /// The generator `e_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Input(format!("generator e{i} does not exist in Cliff_{n}")));
        }
        Self::term(n, Blade(1 << (i - 1)), GaussianRational::one())
    }

    /// The product `e_{i₁} e_{i₂} ⋯` of generators in the given order.
    pub fn monomial(n: usize, indices: &[usize]) -> Result<Self> {
        indices.iter().try_fold(Self::one(n), |acc, &i| acc.multiply(&Self::generator(n, i)?))
    }

    /// All `2ⁿ` basis blades of `Cliffₙ`, in blade order.
    pub fn basis(n: usize) -> Vec<CliffordElement> {
        assert!(n < 20, "basis enumeration is limited to n < 20");
        let mut blades: Vec<Blade> = (0..1u64 << n).map(Blade).collect();
        blades.sort();
        blades
            .into_iter()
            .map(|b| Self::term(n, b, GaussianRational::one()).expect("in range"))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> GaussianRational {
        self.terms.get(&blade).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &GaussianRational)> {
        self.terms.iter().map(|(b, z)| (*b, z))
    }

    fn accumulate(&mut self, blade: Blade, z: &GaussianRational) {
        if z.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(GaussianRational::zero);
        *entry += z;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    fn map_terms(&self, f: impl Fn(Blade, &GaussianRational) -> GaussianRational) -> Self {
        let mut out = Self::zero(self.n);
        for (b, z) in &self.terms {
            out.accumulate(*b, &f(*b, z));
        }
        out
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(format!("Cliff_{} vs Cliff_{}", self.n, other.n)));
        }
        Ok(())
    }

    /// Bilinear extension of the blade product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (blade, negative) = a.product(*b);
                let z = x * y;
                out.accumulate(blade, &if negative { -z } else { z });
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (b, z) in &other.terms {
            out.accumulate(*b, z);
        }
        Ok(out)
    }

    pub fn scale(&self, z: &GaussianRational) -> Self {
        self.map_terms(|_, x| x * z)
    }

    /// `(e_{i₁}⋯e_{i_k} ⊗ z)* = (−1)^k e_{i_k}⋯e_{i₁} ⊗ z̄`. Reversing `k`
    /// anticommuting generators costs `(−1)^{k(k−1)/2}`, so each blade picks
    /// up `(−1)^{k(k+1)/2}` overall.
    pub fn adjoint(&self) -> Self {
        self.map_terms(|b, z| {
            let k = b.grade();
            if (k * (k + 1) / 2) % 2 == 1 { -z.conj() } else { z.conj() }
        })
    }

    /// The grading automorphism: `(−1)^k` on blades of grade `k`.
    pub fn grading(&self) -> Self {
        self.map_terms(|b, z| if b.parity().is_odd() { -z } else { z.clone() })
    }

    pub fn even_part(&self) -> Self {
        self.map_terms(|b, z| if b.parity().is_odd() { GaussianRational::zero() } else { z.clone() })
    }

    pub fn odd_part(&self) -> Self {
        self.map_terms(|b, z| if b.parity().is_odd() { z.clone() } else { GaussianRational::zero() })
    }

    /// Degree of a homogeneous element. Zero is reported as even; mixed
    /// elements give `None`.
    pub fn parity(&self) -> Option<Parity> {
        let mut parities = self.terms.keys().map(|b| b.parity());
        let first = parities.next().unwrap_or(Parity::Even);
        parities.all(|p| p == first).then_some(first)
    }

    /// Embeds into `Cliff_m` for `m ≥ n`.
    pub fn widen(&self, m: usize) -> Result<Self> {
        if m < self.n || m > MAX_GENERATORS {
            return Err(Error::Input(format!("cannot widen Cliff_{} to Cliff_{m}", self.n)));
        }
        Ok(CliffordElement { n: m, terms: self.terms.clone() })
    }

    /// Smallest `n` the element lives in.
    pub fn min_generators(&self) -> usize {
        self.terms.keys().map(|b| b.top()).max().unwrap_or(0)
    }
}

impl<'a> Mul<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;

    /// Panics if the generator counts differ; see [`CliffordElement::multiply`].
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        self.multiply(rhs).expect("Clifford generator counts differ")
    }
}

impl<'a> Add<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;

    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        self.checked_add(rhs).expect("Clifford generator counts differ")
    }
}

impl<'a> Sub<&'a CliffordElement> for &'a CliffordElement {
    type Output = CliffordElement;

    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self + &-rhs
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;

    fn neg(self) -> CliffordElement {
        self.map_terms(|_, z| -z)
    }
}

/// Terms in blade order: `-1 * e1e2`, `2+3i * e1 + 1`, scalar terms without
/// a blade. The zero element prints as `0`.
impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (b, z)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if *b == Blade::SCALAR {
                write!(f, "{z}")?;
            } else {
                write!(f, "{z} * {b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, idx: &[usize]) -> CliffordElement {
        CliffordElement::monomial(n, idx).unwrap()
    }

    fn c(n: usize, x: i64) -> CliffordElement {
        CliffordElement::scalar(n, GaussianRational::from(x))
    }

    #[test]
    fn fundamental_relations() {
        assert_eq!(&e(2, &[1]) * &e(2, &[1]), c(2, -1));
        assert_eq!(&e(2, &[1]) * &e(2, &[2]), e(2, &[1, 2]));
        assert_eq!(&e(2, &[2]) * &e(2, &[1]), -&e(2, &[1, 2]));
        assert_eq!(&e(2, &[1, 2]) * &e(2, &[1, 2]), c(2, -1));
        // quaternion relations kj = −i, ki = j
        assert_eq!(&e(2, &[1, 2]) * &e(2, &[2]), -&e(2, &[1]));
        assert_eq!(&e(2, &[1, 2]) * &e(2, &[1]), e(2, &[2]));
    }

    #[test]
    fn adjoint_examples() {
        let z = GaussianRational::from_ints(2, 5);
        assert_eq!(CliffordElement::scalar(1, z.clone()).adjoint(), CliffordElement::scalar(1, z.conj()));
        assert_eq!(e(1, &[1]).adjoint(), -&e(1, &[1]));
        assert_eq!(e(2, &[1, 2]).adjoint(), -&e(2, &[1, 2]));
        assert_eq!(e(3, &[1, 2, 3]).adjoint(), e(3, &[1, 2, 3]));
    }

    #[test]
    fn grading_examples() {
        assert_eq!(c(2, 1).grading(), c(2, 1));
        assert_eq!(e(2, &[1]).grading(), -&e(2, &[1]));
        assert_eq!(e(2, &[1, 2]).grading(), e(2, &[1, 2]));
        let mixed = &c(2, 1) + &e(2, &[1]);
        assert_eq!(mixed.parity(), None);
        assert_eq!(mixed.even_part(), c(2, 1));
        assert_eq!(mixed.odd_part(), e(2, &[1]));
    }

    #[test]
    fn mismatched_generator_counts() {
        assert!(e(1, &[1]).multiply(&e(2, &[1])).is_err());
        assert!(CliffordElement::generator(2, 3).is_err());
        assert!(CliffordElement::generator(2, 0).is_err());
    }

    #[test]
    fn display_and_ordering() {
        let x = &(&e(3, &[2, 3]) + &e(3, &[1])) + &c(3, 2);
        assert_eq!(x.to_string(), "2 + 1 * e1 + 1 * e2e3");
        assert_eq!(c(2, 0).to_string(), "0");
        assert_eq!((&e(2, &[1]) - &e(2, &[1])).to_string(), "0");
    }

    #[test]
    fn blade_helpers() {
        let b = Blade::from_sorted(&[1, 3]).unwrap();
        assert_eq!(b.indices(), [1, 3]);
        assert_eq!(b.top(), 3);
        assert_eq!(b.shifted(2).indices(), [3, 5]);
        assert!(Blade::from_sorted(&[3, 1]).is_err());
        assert_eq!(CliffordElement::basis(3).len(), 8);
    }

    #[test]
    fn blade_order_matches_index_lists() {
        for a in 0..64u64 {
            for b in 0..64u64 {
                let (x, y) = (Blade(a), Blade(b));
                let expected = x.grade().cmp(&y.grade()).then_with(|| x.indices().cmp(&y.indices()));
                assert_eq!(x.cmp(&y), expected, "{x} vs {y}");
            }
        }
    }
}
