use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::PolyError;

/// Dense univariate polynomial with exact coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. The stored form is normalized:
/// the last entry is nonzero, and the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Poly<BigInt>;
pub type RatPolynomial = Poly<BigRational>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The linear polynomial `a + b t`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    ///
    /// Fails if the polynomial does not fit.
    pub fn padded(&self, len: usize) -> Result<Vec<T>, PolyError> {
        if self.coeffs.len() > len {
            return Err(PolyError::DegreeTooLarge {
                degree: self.coeffs.len() - 1,
                bound: len.saturating_sub(1),
            });
        }
        let mut out = self.coeffs.clone();
        out.resize(len, T::zero());
        Ok(out)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    /// `t^d p(1/t)`, the coefficient reversal with respect to degree `d`.
    pub fn reversed(&self, d: usize) -> Result<Self, PolyError> {
        let mut coeffs = self.padded(d + 1)?;
        coeffs.reverse();
        Ok(Self::new(coeffs))
    }

    /// `p(c t)`
    pub fn dilate(&self, c: &T) -> Self {
        let mut power = T::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_rational(&self) -> RatPolynomial {
        Poly::new(self.coeffs.iter().map(Scalar::to_rational).collect())
    }

    /// Converts into an integer polynomial if every coefficient is integral.
    pub fn to_integer(&self) -> Result<IntPolynomial, PolyError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.to_bigint().ok_or_else(|| PolyError::NonIntegral {
                    index: i,
                    value: c.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn coeff_sum(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |a, b| a + b)
    }
}

impl IntPolynomial {
    /// Casts into any coefficient ring.
    pub fn cast<U: Scalar>(&self) -> Poly<U> {
        self.map(|c| U::from_bigint(c.clone()))
    }
}

impl RatPolynomial {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor
            .leading_coeff()
            .expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{abs}t")?,
                _ if unit => write!(f, "t^{i}")?,
                _ => write!(f, "{abs}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        Poly::from_i64s(c)
    }

    fn rp(c: &[i64]) -> RatPolynomial {
        Poly::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = ip(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = ip(&[1, 1]);
        assert_eq!(&a * &a, ip(&[1, 2, 1]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), ip(&[1, 3, 3, 1]));
        assert_eq!(a.shift(2), ip(&[0, 0, 1, 1]));
        assert_eq!(ip(&[1, 3, 3, 1]).derivative(), ip(&[3, 6, 3]));
        assert_eq!(ip(&[1, 1]).dilate(&BigInt::from(2)), ip(&[1, 2]));
        assert_eq!(ip(&[3, 2, 1]).eval(&BigInt::from(2)), BigInt::from(11));
    }

    #[test]
    fn reversal_respects_ambient_degree() {
        assert_eq!(ip(&[1, 1]).reversed(2).unwrap(), ip(&[0, 1, 1]));
        assert!(ip(&[1, 1, 1]).reversed(1).is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = rp(&[-1, 0, 1]); // (t-1)(t+1)
        let b = rp(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, rp(&[-1, 1]));
        assert!(r.is_zero());
        let p = rp(&[1, 3, 3, 1]);
        assert_eq!(p.gcd(&p.derivative()), rp(&[1, 2, 1]));
        assert_eq!(rp(&[1, 1]).gcd(&rp(&[2, 1])), rp(&[1]));
    }

    #[test]
    fn display() {
        assert_eq!(ip(&[1, -3, 0, 2]).to_string(), "2t^3 - 3t + 1");
        assert_eq!(ip(&[]).to_string(), "0");
    }
}
