use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Largest dimension accepted by [`elementary_divisors_oracle`].
pub const ORACLE_MAX_DIM: usize = 8;

/// Elementary divisors from determinantal divisors: with `g_k` the gcd of
/// all `k × k` minors, returns `(g₁, g₂/g₁, …)` up to the first `k` whose
/// minors all vanish.
///
/// Minors are expanded along their first row, so this shares no code with
/// the elimination-based routines and serves as a check on them. Cost is
/// exponential; dimensions above [`ORACLE_MAX_DIM`] are refused.
pub fn elementary_divisors_oracle(m: &IntMatrix) -> Result<Vec<BigInt>> {
    let (rows, cols) = m.shape();
    if rows > ORACLE_MAX_DIM || cols > ORACLE_MAX_DIM {
        return Err(Error::Input(format!(
            "gcd-of-minors oracle is limited to {ORACLE_MAX_DIM}x{ORACLE_MAX_DIM}, got {rows}x{cols}"
        )));
    }
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor = laplace_det(m, &rs, &cs);
                g = g.gcd(&minor);
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    Ok(out)
}

fn laplace_det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    match rows.len() {
        0 => BigInt::one(),
        1 => m[(rows[0], cols[0])].clone(),
        _ => {
            let r = rows[0];
            let rest = &rows[1..];
            let mut acc = BigInt::zero();
            for (idx, &c) in cols.iter().enumerate() {
                let a = &m[(r, c)];
                if a.is_zero() {
                    continue;
                }
                let sub: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = a * laplace_det(m, rest, &sub);
                if idx % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: Vec<BigInt>) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(ints(elementary_divisors_oracle(&IntMatrix::identity(3)).unwrap()), [1, 1, 1]);
        assert_eq!(ints(elementary_divisors_oracle(&IntMatrix::diagonal(&[2, 3])).unwrap()), [1, 6]);
        assert!(elementary_divisors_oracle(&IntMatrix::zeros(3, 2)).unwrap().is_empty());
        assert_eq!(
            ints(elementary_divisors_oracle(&IntMatrix::from_rows(&[vec![2, 4], vec![4, 8]])).unwrap()),
            [2]
        );
        assert_eq!(ints(elementary_divisors_oracle(&IntMatrix::column(&[-2, 2])).unwrap()), [2]);
    }

    #[test]
    fn oracle_guard() {
        assert!(elementary_divisors_oracle(&IntMatrix::zeros(9, 1)).is_err());
        assert!(elementary_divisors_oracle(&IntMatrix::zeros(8, 8)).is_ok());
    }

    #[test]
    fn laplace_matches_known_determinants() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(laplace_det(&m, &[0, 1, 2], &[0, 1, 2]), BigInt::from(4));
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
