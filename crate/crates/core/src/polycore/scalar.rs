use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact coefficient ring used by polynomials, h*-vectors and box tables.
///
/// Implemented for [`BigInt`] (lattice-point counts, Eulerian numbers) and
/// [`BigRational`] (general valuations, interpolation, Sturm chains).
pub trait Scalar: Clone + Debug + Display + Ord + Signed + Send + Sync + 'static {
    fn from_bigint(n: BigInt) -> Self;

    fn to_rational(&self) -> BigRational;

    /// `Some` when the value is an integer.
    fn to_bigint(&self) -> Option<BigInt>;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl Scalar for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
