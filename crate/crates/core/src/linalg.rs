//! Exact dense linear algebra on small integer and rational matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-major integer matrix.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Fraction-free Gaussian elimination (Bareiss) in place.
///
/// Returns the rank and the sign accumulated from row swaps. After the call
/// the entry at `(rank-1, pivot column)` of a square nonsingular matrix is
/// its determinant up to that sign.
fn bareiss_in_place(m: &mut IntMatrix) -> (usize, bool, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negated = false;
    let mut last_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negated = !negated;
        }
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&pivot * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot.clone();
        last_pivot = pivot;
        rank += 1;
    }
    (rank, negated, last_pivot)
}

pub fn rank(m: &IntMatrix) -> usize {
    let mut work = m.clone();
    bareiss_in_place(&mut work).0
}

/// Determinant of a square matrix; the empty matrix has determinant one.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut work = m.clone();
    let (rank, negated, last) = bareiss_in_place(&mut work);
    if rank < n {
        return BigInt::zero();
    }
    if negated {
        -last
    } else {
        last
    }
}

/// Rank of a small `i64` matrix stored column-wise, using `i128` Bareiss
/// with overflow detection. `None` when an intermediate overflowed.
pub(crate) fn rank_i128(columns: &[&[i64]], dim: usize, scratch: &mut Vec<i128>) -> Option<usize> {
    let k = columns.len();
    // rows = columns of the input (k rows, dim columns): rank is the same
    scratch.clear();
    for c in columns {
        scratch.extend(c.iter().map(|&x| x as i128));
    }
    let at = |r: usize, c: usize| r * dim + c;
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..dim {
        if rank == k {
            break;
        }
        let Some(p) = (rank..k).find(|&r| scratch[at(r, col)] != 0) else {
            continue;
        };
        if p != rank {
            for c in 0..dim {
                scratch.swap(at(p, c), at(rank, c));
            }
        }
        let pivot = scratch[at(rank, col)];
        for r in rank + 1..k {
            let lead = scratch[at(r, col)];
            for c in col + 1..dim {
                let v = pivot
                    .checked_mul(scratch[at(r, c)])?
                    .checked_sub(lead.checked_mul(scratch[at(rank, c)])?)?;
                scratch[at(r, c)] = v / prev;
            }
            scratch[at(r, col)] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// Unique solution of the square system `a x = b`, or `None` if singular.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "solve needs a square system");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let inv = m[col][col].recip();
        for c in col..=n {
            m[col][c] = &m[col][c] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let v = &m[col][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Leibniz expansion, independent of elimination.
    fn leibniz(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &x)| x).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            total += sign * m[0][c] * leibniz(&minor);
        }
        total
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&mat(&[&[1, 1], &[1, -1]])), BigInt::from(-2));
        assert_eq!(determinant(&mat(&[])), BigInt::one());
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&mat(&[&[2, 4], &[1, 2]])), BigInt::zero());
    }

    #[test]
    fn determinant_matches_leibniz() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=4);
            let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect()).collect();
            let big: IntMatrix = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            assert_eq!(determinant(&big), BigInt::from(leibniz(&m)));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&mat(&[&[1, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
        assert_eq!(rank(&mat(&[&[0, 0]])), 0);
        let cols: [&[i64]; 3] = [&[1, 0], &[0, 1], &[1, 1]];
        assert_eq!(rank_i128(&cols, 2, &mut Vec::new()), Some(2));
        let cols: [&[i64]; 2] = [&[2, 4], &[1, 2]];
        assert_eq!(rank_i128(&cols, 2, &mut Vec::new()), Some(1));
    }

    #[test]
    fn solve_small_system() {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        let a = vec![vec![r(2), r(1)], vec![r(1), r(3)]];
        let x = solve(&a, &[r(3), r(5)]).unwrap();
        assert_eq!(x, vec![BigRational::new(4.into(), 5.into()), BigRational::new(7.into(), 5.into())]);
        assert!(solve(&[vec![r(1), r(2)], vec![r(2), r(4)]], &[r(1), r(1)]).is_none());
    }
}
