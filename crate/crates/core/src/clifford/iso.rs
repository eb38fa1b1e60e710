//! Explicit matrix models of `ℂCliff₁ ≅ ℂ ⊕ ℂ` and `ℂCliff₂ ≅ M₂(ℂ)`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::element::{Blade, CliffordElement};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

type Z = GaussianRational;

fn half() -> Z {
    Z::real(BigRational::new(BigInt::one(), BigInt::from(2)))
}

/// An element `(z, w)` of `ℂ ⊕ ℂ` with componentwise operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCC {
    pub first: Z,
    pub second: Z,
}

impl PairCC {
    pub fn new(first: Z, second: Z) -> Self {
        PairCC { first, second }
    }

    pub fn adjoint(&self) -> Self {
        PairCC::new(self.first.conj(), self.second.conj())
    }

    /// The grading transported from `ℂCliff₁`: `β(z, w) = (w, z)`.
    pub fn grading(&self) -> Self {
        PairCC::new(self.second.clone(), self.first.clone())
    }
}

impl Mul for &PairCC {
    type Output = PairCC;
    fn mul(self, o: &PairCC) -> PairCC {
        PairCC::new(&self.first * &o.first, &self.second * &o.second)
    }
}

impl fmt::Display for PairCC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// A 2×2 complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2C(pub [[Z; 2]; 2]);

impl Matrix2C {
    pub fn new(a: Z, b: Z, c: Z, d: Z) -> Self {
        Matrix2C([[a, b], [c, d]])
    }

    pub fn from_ints(m: [[(i64, i64); 2]; 2]) -> Self {
        let z = |(re, im): (i64, i64)| Z::from_ints(re, im);
        Matrix2C::new(z(m[0][0]), z(m[0][1]), z(m[1][0]), z(m[1][1]))
    }

    pub fn zero() -> Self {
        Matrix2C::new(Z::zero(), Z::zero(), Z::zero(), Z::zero())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Matrix2C::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    /// `β([[a, b], [c, d]]) = [[a, −b], [−c, d]]`: diagonal matrices even,
    /// off-diagonal odd.
    pub fn grading(&self) -> Self {
        let m = &self.0;
        Matrix2C::new(m[0][0].clone(), -&m[0][1], -&m[1][0], m[1][1].clone())
    }

    pub fn scale(&self, z: &Z) -> Self {
        let m = &self.0;
        Matrix2C::new(&m[0][0] * z, &m[0][1] * z, &m[1][0] * z, &m[1][1] * z)
    }

    pub fn add(&self, o: &Matrix2C) -> Self {
        let (m, n) = (&self.0, &o.0);
        Matrix2C::new(&m[0][0] + &n[0][0], &m[0][1] + &n[0][1], &m[1][0] + &n[1][0], &m[1][1] + &n[1][1])
    }
}

impl Mul for &Matrix2C {
    type Output = Matrix2C;
    fn mul(self, o: &Matrix2C) -> Matrix2C {
        let (a, b) = (&self.0, &o.0);
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Matrix2C::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }
}

impl fmt::Display for Matrix2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

fn require_n(a: &CliffordElement, n: usize) -> Result<()> {
    if a.n() != n {
        return Err(Error::Input(format!("expected an element of Cliff_{n}, got Cliff_{}", a.n())));
    }
    Ok(())
}

/// `φ(1⊗z + e⊗w) = (z + iw, z − iw)`.
pub fn iso_ccliff1(a: &CliffordElement) -> Result<PairCC> {
    require_n(a, 1)?;
    let z = a.coefficient(Blade::SCALAR);
    let iw = &Z::i() * &a.coefficient(Blade::from_sorted(&[1])?);
    Ok(PairCC::new(&z + &iw, z - iw))
}

/// `φ⁻¹(z, w) = 1⊗(z + w)/2 + e⊗(z − w)/(2i)`.
pub fn iso_ccliff1_inverse(p: &PairCC) -> CliffordElement {
    let scalar = &(&p.first + &p.second) * &half();
    let e = &(p.first.clone() - p.second.clone()) * &(&half() * &(-Z::i()));
    let one = CliffordElement::scalar(1, scalar);
    let gen = CliffordElement::term(1, Blade::from_sorted(&[1]).expect("e1"), e).expect("n = 1");
    &one + &gen
}

/// Images of `1, e₁, e₂, e₁e₂` under the `ℂCliff₂ → M₂(ℂ)` isomorphism.
pub fn pauli_basis() -> [Matrix2C; 4] {
    [
        Matrix2C::from_ints([[(1, 0), (0, 0)], [(0, 0), (1, 0)]]),
        Matrix2C::from_ints([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]),
        Matrix2C::from_ints([[(0, 0), (0, 1)], [(0, 1), (0, 0)]]),
        Matrix2C::from_ints([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
    ]
}

fn cliff2_blades() -> [Blade; 4] {
    [
        Blade::SCALAR,
        Blade::from_sorted(&[1]).expect("e1"),
        Blade::from_sorted(&[2]).expect("e2"),
        Blade::from_sorted(&[1, 2]).expect("e1e2"),
    ]
}

/// Linear extension of `1 ↦ M₁, e₁ ↦ M_i, e₂ ↦ M_j, e₁e₂ ↦ M_k`.
pub fn iso_ccliff2(a: &CliffordElement) -> Result<Matrix2C> {
    require_n(a, 2)?;
    Ok(cliff2_blades()
        .iter()
        .zip(pauli_basis())
        .fold(Matrix2C::zero(), |acc, (b, m)| acc.add(&m.scale(&a.coefficient(*b)))))
}

/// Preimage of `[[a, b], [c, d]]`:
/// `1⊗(a+d)/2 + e₁⊗(b−c)/2 + e₂⊗(−i(b+c)/2) + e₁e₂⊗(i(d−a)/2)`.
pub fn iso_ccliff2_inverse(m: &Matrix2C) -> CliffordElement {
    let [[a, b], [c, d]] = &m.0;
    let h = half();
    let i = Z::i();
    let coeffs = [
        &(a + d) * &h,
        &(b.clone() - c.clone()) * &h,
        &(&(b + c) * &h) * &(-i.clone()),
        &(&(d.clone() - a.clone()) * &h) * &i,
    ];
    cliff2_blades()
        .iter()
        .zip(coeffs)
        .fold(CliffordElement::zero(2), |acc, (bl, z)| {
            &acc + &CliffordElement::term(2, *bl, z).expect("n = 2")
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ccliff1_values() {
        let one = CliffordElement::one(1);
        let e = CliffordElement::generator(1, 1).unwrap();
        assert_eq!(iso_ccliff1(&one).unwrap(), PairCC::new(Z::from(1), Z::from(1)));
        assert_eq!(iso_ccliff1(&e).unwrap(), PairCC::new(Z::i(), -Z::i()));
        let ee = iso_ccliff1(&(&e * &e)).unwrap();
        assert_eq!(ee, PairCC::new(Z::from(-1), Z::from(-1)));
        assert_eq!(ee, &iso_ccliff1(&e).unwrap() * &iso_ccliff1(&e).unwrap());
        assert!(iso_ccliff1(&CliffordElement::one(2)).is_err());
    }

    #[test]
    fn ccliff1_inverse() {
        let p = PairCC::new(Z::from_ints(3, 1), Z::from_ints(-2, 5));
        assert_eq!(iso_ccliff1(&iso_ccliff1_inverse(&p)).unwrap(), p);
    }

    #[test]
    fn ccliff2_values() {
        let e1 = CliffordElement::generator(2, 1).unwrap();
        let e12 = CliffordElement::monomial(2, &[1, 2]).unwrap();
        assert_eq!(iso_ccliff2(&e1).unwrap(), Matrix2C::from_ints([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]));
        assert_eq!(iso_ccliff2(&e12).unwrap(), Matrix2C::from_ints([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]));
        assert!(iso_ccliff2(&CliffordElement::one(1)).is_err());
    }

    #[test]
    fn ccliff2_preimage_coefficients() {
        let (a, b, c, d) = (Z::from_ints(1, 2), Z::from_ints(3, 0), Z::from_ints(0, -1), Z::from_ints(5, 5));
        let m = Matrix2C::new(a.clone(), b, c, d.clone());
        let pre = iso_ccliff2_inverse(&m);
        assert_eq!(pre.coefficient(Blade::SCALAR), &(&a + &d) * &half());
        assert_eq!(
            pre.coefficient(Blade::from_sorted(&[1, 2]).unwrap()),
            &(&(d - a) * &half()) * &Z::i()
        );
        assert_eq!(iso_ccliff2(&pre).unwrap(), m);
    }
}
