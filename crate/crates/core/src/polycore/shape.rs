//! Coefficient-shape predicates: unimodality, palindromicity, alternating
//! increase, and the symmetric decomposition `h = a + t b`.

use super::hstar::HStarVector;
use super::poly::Poly;
use super::scalar::Scalar;
use super::PolyError;

/// Outcome of a unimodality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unimodality {
    pub unimodal: bool,
    /// Every index attaining the maximum coefficient.
    pub peaks: Vec<usize>,
    /// First index where the sequence rises again after having fallen.
    pub violation: Option<usize>,
}

pub fn is_unimodal<T: Scalar>(h: &[T]) -> Result<Unimodality, PolyError> {
    let max = h.iter().max().ok_or(PolyError::Empty)?;
    let peaks = h
        .iter()
        .enumerate()
        .filter(|(_, c)| *c == max)
        .map(|(i, _)| i)
        .collect();
    let mut falling = false;
    let mut violation = None;
    for i in 1..h.len() {
        if h[i] < h[i - 1] {
            falling = true;
        } else if h[i] > h[i - 1] && falling {
            violation = Some(i);
            break;
        }
    }
    Ok(Unimodality {
        unimodal: violation.is_none(),
        peaks,
        violation,
    })
}

/// `h_i = h_{d-i}` for all `i`, with `d` the ambient degree.
pub fn is_palindromic<T: Scalar>(h: &HStarVector<T>) -> bool {
    first_asymmetry(h.coeffs()).is_none()
}

/// Smallest `i` with `h_i != h_{d-i}`.
pub fn first_asymmetry<T: Scalar>(h: &[T]) -> Option<usize> {
    let d = h.len().checked_sub(1)?;
    (0..=d / 2).find(|&i| h[i] != h[d - i])
}

/// Index order `0, d, 1, d-1, ...` ending at `floor((d+1)/2)`.
fn alternating_order(d: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(d + 1);
    let mut i = 0;
    while 2 * i <= d {
        order.push(i);
        if d - i != i {
            order.push(d - i);
        }
        i += 1;
    }
    order
}

/// `h_0 <= h_d <= h_1 <= h_{d-1} <= ... <= h_{floor((d+1)/2)}`.
pub fn is_alternatingly_increasing<T: Scalar>(h: &HStarVector<T>) -> bool {
    alternating_violation(h.coeffs()).is_none()
}

/// The first pair `(i, j)` in the alternating chain with `h_i > h_j`.
pub fn alternating_violation<T: Scalar>(h: &[T]) -> Option<(usize, usize)> {
    let d = h.len().checked_sub(1)?;
    alternating_order(d)
        .windows(2)
        .find(|w| h[w[0]] > h[w[1]])
        .map(|w| (w[0], w[1]))
}

/// The unique `h(t) = a(t) + t b(t)` with `t^d a(1/t) = a(t)` and
/// `t^(d-1) b(1/t) = b(t)`.
///
/// Returned as coefficient lists of lengths `d + 1` and `d`.
pub fn symmetric_decomposition<T: Scalar>(h: &HStarVector<T>) -> (Vec<T>, Vec<T>) {
    let c = h.coeffs();
    let d = h.degree();
    let mut a = vec![T::zero(); d + 1];
    let mut b = vec![T::zero(); d];
    // h_i = a_i + b_{i-1} and h_{d-i} = a_i + b_i
    for i in 0..d {
        let prev = if i == 0 { T::zero() } else { b[i - 1].clone() };
        a[i] = c[i].clone() - prev;
        b[i] = c[d - i].clone() - a[i].clone();
    }
    a[d] = c[d].clone() - if d == 0 { T::zero() } else { b[d - 1].clone() };
    (a, b)
}

/// `symmetric_decomposition` returned as polynomials.
pub fn symmetric_decomposition_polys<T: Scalar>(h: &HStarVector<T>) -> (Poly<T>, Poly<T>) {
    let (a, b) = symmetric_decomposition(h);
    (Poly::new(a), Poly::new(b))
}
