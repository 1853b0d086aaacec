//! Descent statistics and the refined Eulerian polynomials.
//!
//! Every family has an enumerative path (walks permutations) and an
//! algebraic path (recurrence or identity). The two never share code so
//! each can check the other.

mod perm;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polycore::{binomial, IntPolynomial, Poly};

pub use perm::{Permutation, Permutations, Sign, SignedPermutation};
use perm::{next_permutation, signed_descents};

/// Largest `d` accepted by the type-A enumerators.
pub const MAX_ENUMERATE_A: usize = 12;
/// Largest `d` accepted by the type-B enumerators.
pub const MAX_ENUMERATE_B: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerianError {
    #[error("{0:?} is not a permutation word")]
    NotAPermutation(Vec<usize>),
    #[error("sign vector has {signs} entries for {letters} letters")]
    SignLength { letters: usize, signs: usize },
    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("d = {d} is too large to enumerate (limit {limit})")]
    EnumerationLimit { d: usize, limit: usize },
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
}

fn check_index(index: usize, min: usize, max: usize) -> Result<(), EulerianError> {
    if index < min || index > max {
        return Err(EulerianError::IndexOutOfRange { index, min, max });
    }
    Ok(())
}

fn check_enumerable(d: usize, limit: usize) -> Result<(), EulerianError> {
    if d > limit {
        return Err(EulerianError::EnumerationLimit { d, limit });
    }
    Ok(())
}

fn histogram_to_poly(counts: Vec<u64>) -> IntPolynomial {
    Poly::new(counts.into_iter().map(BigInt::from).collect())
}

/// `A_j(d, t)` by walking every `σ ∈ S_d` with last letter `d + 1 - j`.
pub fn a_j_polynomial_enumerate(d: usize, j: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(j, 1, d)?;
    check_enumerable(d, MAX_ENUMERATE_A)?;
    let last = d + 1 - j;
    let mut word: Vec<usize> = (1..=d).filter(|&x| x != last).collect();
    let mut counts = vec![0u64; d];
    loop {
        let mut des = word.windows(2).filter(|w| w[0] > w[1]).count();
        if word.last().is_some_and(|&x| x > last) {
            des += 1;
        }
        counts[des] += 1;
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(histogram_to_poly(counts))
}

/// All of `A_1(d, t), ..., A_d(d, t)` via
/// `A_j(d+1) = t Σ_{l<j} A_l(d) + Σ_{l>=j} A_l(d)` starting at `A_1(1) = 1`.
pub fn a_polynomials(d: usize) -> Vec<IntPolynomial> {
    if d == 0 {
        return Vec::new();
    }
    let mut row = vec![IntPolynomial::one()];
    for _ in 1..d {
        let n = row.len();
        // prefix[j] = Σ_{l<j} A_l, suffix[j] = Σ_{l>=j} A_l (0-based l)
        let mut prefix = vec![IntPolynomial::zero(); n + 2];
        for l in 0..n {
            prefix[l + 1] = &prefix[l] + &row[l];
        }
        let total = prefix[n].clone();
        row = (0..=n)
            .map(|j| &prefix[j].shift(1) + &(&total - &prefix[j]))
            .collect();
    }
    row
}

/// `A_j(d, t)` from the recurrence.
pub fn a_j_polynomial(d: usize, j: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(j, 1, d)?;
    Ok(a_polynomials(d).swap_remove(j - 1))
}

/// Eulerian polynomial of `S_d`, read off as `A_1(d + 1, t)`.
pub fn eulerian_a(d: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(d, 1, usize::MAX)?;
    a_j_polynomial(d + 1, 1)
}

/// `Σ_{σ ∈ S_d} t^{des(σ)}` by enumeration.
pub fn eulerian_a_enumerate(d: usize) -> Result<IntPolynomial, EulerianError> {
    check_enumerable(d, MAX_ENUMERATE_A)?;
    let mut counts = vec![0u64; d.max(1)];
    for p in Permutation::all(d) {
        counts[p.descents()] += 1;
    }
    Ok(histogram_to_poly(counts))
}

/// `Σ_{σ ∈ S_d} t^{des_j(σ)}` by enumeration, `0 <= j <= d`.
pub fn j_descent_polynomial(d: usize, j: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(j, 0, d)?;
    check_enumerable(d, MAX_ENUMERATE_A)?;
    let mut counts = vec![0u64; d + 1];
    for p in Permutation::all(d) {
        counts[p.j_descent_set(j)?.len()] += 1;
    }
    Ok(histogram_to_poly(counts))
}

/// `B_l(d, t)` by walking every signed permutation with `ε_d σ_d = d + 1 - l`.
pub fn b_l_polynomial_enumerate(d: usize, l: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(l, 1, d)?;
    check_enumerable(d, MAX_ENUMERATE_B)?;
    let last = (d + 1 - l) as i64;
    let mut word: Vec<usize> = (1..=d).filter(|&x| x as i64 != last).collect();
    let mut counts = vec![0u64; d + 1];
    let mut letters = vec![0i64; d];
    letters[d - 1] = last;
    loop {
        for mask in 0u64..1 << (d - 1) {
            for (i, &x) in word.iter().enumerate() {
                letters[i] = if mask >> i & 1 == 1 { -(x as i64) } else { x as i64 };
            }
            counts[signed_descents(&letters).count()] += 1;
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(histogram_to_poly(counts))
}

/// `B_{l+1}(d+1, t) = 2^l Σ_{j=0}^{d-l} C(d-l, j) A_{j+l+1}(d+1, t)` for
/// `0 <= l <= d`.
pub fn b_l_polynomial_via_a(d: usize, l: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(l, 0, d)?;
    let a = a_polynomials(d + 1);
    Ok(b_via_a_row(&a, d, l))
}

fn b_via_a_row(a: &[IntPolynomial], d: usize, l: usize) -> IntPolynomial {
    let sum = (0..=d - l).fold(IntPolynomial::zero(), |acc, j| {
        &acc + &a[j + l].scale(&binomial((d - l) as i64, j as i64))
    });
    sum.scale(&(BigInt::one() << l))
}

/// All of `B_1(d, t), ..., B_d(d, t)` through the type-A identity.
pub fn b_polynomials(d: usize) -> Vec<IntPolynomial> {
    if d == 0 {
        return Vec::new();
    }
    let a = a_polynomials(d);
    (0..d).map(|l| b_via_a_row(&a, d - 1, l)).collect()
}

/// `B_l(d, t)` for `1 <= l <= d`, through the type-A identity.
pub fn b_l_polynomial(d: usize, l: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(l, 1, d)?;
    b_l_polynomial_via_a(d - 1, l - 1)
}

/// Type-B Eulerian polynomial from `b(d,k) = (2k+1) b(d-1,k) + (2d-2k+1) b(d-1,k-1)`.
pub fn eulerian_b(d: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(d, 1, usize::MAX)?;
    let mut row = vec![BigInt::one()];
    for n in 1..=d {
        let mut next = vec![BigInt::zero(); n + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = row.get(k).map_or_else(BigInt::zero, |b| b * (2 * k + 1));
            let rise = if k == 0 {
                BigInt::zero()
            } else {
                &row[k - 1] * (2 * n + 1 - 2 * k)
            };
            *slot = stay + rise;
        }
        row = next;
    }
    Ok(Poly::new(row))
}

/// `Σ_{(σ,ε) ∈ B_d} t^{des}` by enumeration.
pub fn eulerian_b_enumerate(d: usize) -> Result<IntPolynomial, EulerianError> {
    check_enumerable(d, MAX_ENUMERATE_B)?;
    let mut counts = vec![0u64; d + 1];
    for p in SignedPermutation::all(d) {
        counts[p.descents()] += 1;
    }
    Ok(histogram_to_poly(counts))
}

/// `Σ_{(σ,ε) ∈ B_d} t^{des_l}` by enumeration, `0 <= l <= d`.
pub fn l_descent_polynomial_b(d: usize, l: usize) -> Result<IntPolynomial, EulerianError> {
    check_index(l, 0, d)?;
    check_enumerable(d, MAX_ENUMERATE_B)?;
    let mut counts = vec![0u64; d + 1];
    for p in SignedPermutation::all(d) {
        counts[p.l_descent_set(l)?.len()] += 1;
    }
    Ok(histogram_to_poly(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        Poly::from_i64s(c)
    }

    #[test]
    fn enumerate_small_a() {
        assert_eq!(a_j_polynomial_enumerate(1, 1).unwrap(), ip(&[1]));
        assert_eq!(a_j_polynomial_enumerate(2, 1).unwrap(), ip(&[1]));
        assert_eq!(a_j_polynomial_enumerate(2, 2).unwrap(), ip(&[0, 1]));
        assert_eq!(a_j_polynomial_enumerate(3, 1).unwrap(), ip(&[1, 1]));
        assert_eq!(a_j_polynomial_enumerate(3, 2).unwrap(), ip(&[0, 2]));
        assert_eq!(a_j_polynomial_enumerate(3, 3).unwrap(), ip(&[0, 1, 1]));
    }

    #[test]
    fn recurrence_small_a() {
        assert_eq!(a_j_polynomial(3, 2).unwrap(), ip(&[0, 2]));
        assert_eq!(a_j_polynomial(3, 1).unwrap(), ip(&[1, 1]));
        assert_eq!(a_j_polynomial(2, 2).unwrap(), ip(&[0, 1]));
        assert_eq!(eulerian_a(2).unwrap(), ip(&[1, 1]));
        assert_eq!(eulerian_a(3).unwrap(), ip(&[1, 4, 1]));
    }

    #[test]
    fn guards_and_ranges() {
        assert!(matches!(
            a_j_polynomial_enumerate(13, 1),
            Err(EulerianError::EnumerationLimit { .. })
        ));
        assert!(matches!(
            b_l_polynomial_enumerate(11, 1),
            Err(EulerianError::EnumerationLimit { .. })
        ));
        assert!(a_j_polynomial(3, 0).is_err());
        assert!(a_j_polynomial(3, 4).is_err());
        assert!(b_l_polynomial_via_a(2, 3).is_err());
        assert!(eulerian_b(0).is_err());
    }

    #[test]
    fn small_b() {
        assert_eq!(b_l_polynomial_enumerate(1, 1).unwrap(), ip(&[1]));
        assert_eq!(b_l_polynomial_enumerate(2, 1).unwrap(), ip(&[1, 1]));
        assert_eq!(b_l_polynomial_enumerate(2, 2).unwrap(), ip(&[0, 2]));
        assert_eq!(b_l_polynomial_enumerate(3, 1).unwrap(), ip(&[1, 6, 1]));
        assert_eq!(b_l_polynomial_via_a(1, 0).unwrap(), ip(&[1, 1]));
        assert_eq!(b_l_polynomial_via_a(2, 0).unwrap(), ip(&[1, 6, 1]));
        assert_eq!(b_l_polynomial_via_a(2, 2).unwrap(), ip(&[0, 4, 4]));
        assert_eq!(eulerian_b(1).unwrap(), ip(&[1, 1]));
        assert_eq!(eulerian_b(2).unwrap(), ip(&[1, 6, 1]));
        assert_eq!(eulerian_b_enumerate(2).unwrap(), ip(&[1, 6, 1]));
    }

    #[test]
    fn coefficient_sums() {
        let fact = |n: u64| (1..=n).product::<u64>();
        for d in 1..=7usize {
            for j in 1..=d {
                assert_eq!(
                    a_j_polynomial(d, j).unwrap().coeff_sum(),
                    BigInt::from(fact(d as u64 - 1))
                );
                assert_eq!(
                    b_l_polynomial(d, j).unwrap().coeff_sum(),
                    BigInt::from(fact(d as u64 - 1) << (d - 1))
                );
            }
            assert_eq!(eulerian_b(d).unwrap().coeff_sum(), BigInt::from(fact(d as u64) << d));
        }
    }

    #[test]
    fn last_letter_partition() {
        for d in 1..=8 {
            let sum = a_polynomials(d).iter().fold(IntPolynomial::zero(), |a, b| &a + b);
            assert_eq!(sum, eulerian_a_enumerate(d).unwrap());
        }
    }

    #[test]
    fn symmetry_under_reversal() {
        for d in 1..=10 {
            let row = a_polynomials(d);
            for j in 1..=d {
                assert_eq!(row[j - 1], row[d - j].reversed(d - 1).unwrap(), "d={d} j={j}");
            }
        }
    }

    #[test]
    fn type_b_sign_flip_halves() {
        // the full type-B polynomial splits by the sign of the last letter,
        // and flipping every sign maps des to d - des
        for d in 1..=6 {
            let positive = b_polynomials(d).iter().fold(IntPolynomial::zero(), |a, b| &a + b);
            let negative = positive.reversed(d).unwrap();
            assert_eq!(&positive + &negative, eulerian_b(d).unwrap());
            assert_eq!(eulerian_b_enumerate(d).unwrap(), eulerian_b(d).unwrap());
        }
    }
}
