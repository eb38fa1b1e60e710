use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::group::AbelianGroup;
use super::matrix::IntMatrix;

/// `u · m · v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// The positive diagonal entries `d[0][0] | d[1][1] | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Checks every structural invariant against the source matrix.
    pub fn verify(&self, m: &IntMatrix) -> Result<(), String> {
        let (r, c) = m.shape();
        if self.u.shape() != (r, r) || self.d.shape() != (r, c) || self.v.shape() != (c, c) {
            return Err("factor shapes do not match the source matrix".into());
        }
        if &(&self.u * m) * &self.v != self.d {
            return Err("U*M*V != D".into());
        }
        for (name, w) in [("U", &self.u), ("V", &self.v)] {
            let det = w.determinant().map_err(|e| e.to_string())?;
            if det.abs() != BigInt::from(1) {
                return Err(format!("{name} is not unimodular (det = {det})"));
            }
        }
        if !self.d.is_diagonal() {
            return Err("D is not diagonal".into());
        }
        for i in 0..r.min(c) {
            let x = &self.d[(i, i)];
            if i < self.rank {
                if !x.is_positive() {
                    return Err(format!("D[{i}][{i}] = {x} should be positive"));
                }
                if i + 1 < self.rank && !self.d[(i + 1, i + 1)].is_multiple_of(x) {
                    return Err(format!("D[{i}][{i}] does not divide D[{}][{}]", i + 1, i + 1));
                }
            } else if !x.is_zero() {
                return Err(format!("D[{i}][{i}] = {x} beyond the rank"));
            }
        }
        Ok(())
    }
}

/// Smith normal form with unimodular witnesses.
///
/// Pivoting always picks the nonzero entry of least absolute value in the
/// remaining block, breaking ties by lowest `(row, col)`, so the output is a
/// deterministic function of the input.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut rank = 0;

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return SmithDecomposition { u, d, v, rank };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a nonzero remainder is now smaller than the pivot
                continue;
            }

            // pivot row and column are clear; enforce divisibility of the rest
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank = t + 1;
    }
    SmithDecomposition { u, d, v, rank }
}

fn min_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// A ℤ-basis of `{ x ∈ ℤ^cols : m·x = 0 }`, given by the trailing columns
/// of the right witness `v`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols()).map(|j| snf.v.column_vec(j)).collect()
}

/// `ℤ^rows / image(m)` in invariant-factor form.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    cokernel_of(&smith_normal_form(m), m.rows())
}

pub(crate) fn cokernel_of(snf: &SmithDecomposition, rows: usize) -> AbelianGroup {
    let torsion = snf
        .invariant_factors()
        .into_iter()
        .filter(|x| *x != BigInt::from(1))
        .collect();
    AbelianGroup::new(rows - snf.rank, torsion).expect("SNF diagonal is a divisibility chain")
}
