use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPolynomial, Poly, RatPolynomial};
use super::scalar::{binomial, Scalar};
use super::PolyError;

/// Coefficients `(h_0, ..., h_d)` of an h*-polynomial together with its
/// ambient degree `d`. Trailing zeros are significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector<T = BigInt> {
    coeffs: Vec<T>,
}

impl<T: Scalar> HStarVector<T> {
    /// The ambient degree is `coeffs.len() - 1`; an empty list is rejected.
    pub fn new(coeffs: Vec<T>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty);
        }
        Ok(HStarVector { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    /// Pads `p` to ambient degree `d`.
    pub fn from_poly(p: &Poly<T>, d: usize) -> Result<Self, PolyError> {
        Ok(HStarVector {
            coeffs: p.padded(d + 1)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(self.coeffs.clone())
    }

    pub fn to_integer(&self) -> Result<HStarVector<BigInt>, PolyError> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.to_bigint().ok_or_else(|| PolyError::NonIntegral {
                    index: i,
                    value: c.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HStarVector { coeffs })
    }

    pub fn to_rational(&self) -> HStarVector<BigRational> {
        HStarVector {
            coeffs: self.coeffs.iter().map(Scalar::to_rational).collect(),
        }
    }
}

impl HStarVector<BigInt> {
    pub fn cast<U: Scalar>(&self) -> HStarVector<U> {
        HStarVector {
            coeffs: self.coeffs.iter().cloned().map(U::from_bigint).collect(),
        }
    }
}

/// h*-vector of degree `r` from an Ehrhart-type polynomial `ehr(n)` with
/// `deg(ehr) <= r`, via `h_k = sum_{i<=k} (-1)^(k-i) C(r+1, k-i) ehr(i)`.
pub fn hstar_from_ehrhart<T: Scalar>(ehr: &Poly<T>, r: usize) -> Result<HStarVector<T>, PolyError> {
    if let Some(deg) = ehr.degree() {
        if deg > r {
            return Err(PolyError::DegreeTooLarge { degree: deg, bound: r });
        }
    }
    let values: Vec<T> = (0..=r).map(|i| ehr.eval(&T::from_i64(i as i64))).collect();
    let mut h = Vec::with_capacity(r + 1);
    for k in 0..=r {
        let mut acc = T::zero();
        for (i, v) in values.iter().enumerate().take(k + 1) {
            let c = T::from_bigint(binomial(r as i64 + 1, (k - i) as i64));
            let term = c * v.clone();
            if (k - i) % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        h.push(acc);
    }
    Ok(HStarVector { coeffs: h })
}

/// Integer h*-vector from a rational Ehrhart polynomial; fails with
/// [`PolyError::NonIntegral`] when the input is not integer-valued.
pub fn integer_hstar_from_ehrhart<T: Scalar>(
    ehr: &Poly<T>,
    r: usize,
) -> Result<HStarVector<BigInt>, PolyError> {
    hstar_from_ehrhart(ehr, r)?.to_integer()
}

/// `C(n + a, r)` as a polynomial in `n` (a may be negative).
fn shifted_binomial_poly(a: i64, r: usize) -> RatPolynomial {
    let mut p = RatPolynomial::one();
    for m in 0..r as i64 {
        p = &p * &Poly::linear(BigRational::from_integer(BigInt::from(a - m)), BigRational::one());
    }
    let fact: BigInt = (1..=r).map(BigInt::from).product();
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// Inverse of [`hstar_from_ehrhart`]: `ehr(n) = sum_i h_i C(n + d - i, d)`.
pub fn ehrhart_from_hstar<T: Scalar>(h: &HStarVector<T>) -> RatPolynomial {
    let d = h.degree();
    h.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(RatPolynomial::zero(), |acc, (i, c)| {
            &acc + &shifted_binomial_poly(d as i64 - i as i64, d).scale(&c.to_rational())
        })
}

/// `n^j (1+n)^(d-j)`
pub fn shifted_power(j: usize, d: usize) -> IntPolynomial {
    assert!(j <= d);
    let n = IntPolynomial::monomial(BigInt::one(), 1);
    let one_plus_n = IntPolynomial::from_i64s(&[1, 1]);
    &n.pow(j as u32) * &one_plus_n.pow((d - j) as u32)
}

/// Coefficients `c_0..c_d` with `p(n) = sum_j c_j n^j (1+n)^(d-j)`.
///
/// The basis element `n^j (1+n)^(d-j)` has lowest term `n^j` with
/// coefficient one, so the system is unit lower-triangular.
pub fn express_in_shifted_power_basis<T: Scalar>(p: &Poly<T>, d: usize) -> Result<Vec<T>, PolyError> {
    let mut rest = p.padded(d + 1)?;
    let mut c = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let cj = rest[j].clone();
        if !cj.is_zero() {
            let basis = shifted_power(j, d);
            for (i, b) in basis.coeffs().iter().enumerate() {
                rest[i] = rest[i].clone() - cj.clone() * T::from_bigint(b.clone());
            }
        }
        c.push(cj);
    }
    debug_assert!(rest.iter().all(Zero::is_zero));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        Poly::from_i64s(c)
    }

    fn h(c: &[i64]) -> HStarVector {
        HStarVector::from_i64s(c).unwrap()
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(hstar_from_ehrhart(&ip(&[1, 2, 1]), 2).unwrap(), h(&[1, 1, 0]));
        assert_eq!(hstar_from_ehrhart(&ip(&[1]), 0).unwrap(), h(&[1]));
        assert_eq!(hstar_from_ehrhart(&ip(&[1, 3, 3]), 2).unwrap(), h(&[1, 4, 1]));
    }

    #[test]
    fn hstar_rejects_degree_overflow() {
        assert!(matches!(
            hstar_from_ehrhart(&ip(&[1, 1, 1]), 1),
            Err(PolyError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn non_integer_valued_input_is_flagged() {
        // n/2 is not integer-valued
        let half = RatPolynomial::new(vec![BigRational::zero(), BigRational::new(1.into(), 2.into())]);
        assert!(matches!(
            integer_hstar_from_ehrhart(&half, 1),
            Err(PolyError::NonIntegral { .. })
        ));
        // n(n+1)/2 is integer-valued with rational coefficients
        let tri = RatPolynomial::new(vec![
            BigRational::zero(),
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
        ]);
        assert_eq!(integer_hstar_from_ehrhart(&tri, 2).unwrap(), h(&[0, 1, 0]));
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(ehrhart_from_hstar(&h(&[1, 1, 0])), ip(&[1, 2, 1]).to_rational());
        assert_eq!(ehrhart_from_hstar(&h(&[1])), ip(&[1]).to_rational());
        assert_eq!(ehrhart_from_hstar(&h(&[1, 4, 1])), ip(&[1, 3, 3]).to_rational());
    }

    #[test]
    fn shifted_power_basis_examples() {
        let d = 3;
        assert_eq!(
            express_in_shifted_power_basis(&ip(&[1, 3, 3, 1]), d).unwrap(),
            vec![1, 0, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        for j in 0..=d {
            let c = express_in_shifted_power_basis(&shifted_power(j, d), d).unwrap();
            for (i, ci) in c.iter().enumerate() {
                assert_eq!(*ci, BigInt::from((i == j) as i64));
            }
        }
        assert_eq!(
            express_in_shifted_power_basis(&ip(&[1, 2, 2]), 2).unwrap(),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]
        );
    }
}
