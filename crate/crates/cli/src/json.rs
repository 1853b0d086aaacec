//! Exact numbers in JSON: plain numbers up to 53 bits of magnitude, decimal
//! strings beyond, and `"p/q"` strings for non-integers.

use ehrhart_core::{IndexSet, Poly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::CliError;

const SAFE_BITS: u64 = 53;

pub fn int(x: &BigInt) -> Value {
    if x.abs().bits() <= SAFE_BITS {
        Value::from(x.to_i64().expect("fits in 53 bits"))
    } else {
        Value::String(x.to_string())
    }
}

pub fn rational(x: &BigRational) -> Value {
    if x.is_integer() {
        int(x.numer())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn scalar<T: Scalar>(x: &T) -> Value {
    rational(&x.to_rational())
}

pub fn array<T: Scalar>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(scalar).collect())
}

/// Coefficients in ascending degree, trailing zeros dropped; `[0]` for the
/// zero polynomial.
pub fn poly<T: Scalar>(p: &Poly<T>) -> Value {
    if p.is_zero() {
        Value::Array(vec![Value::from(0)])
    } else {
        array(p.coeffs())
    }
}

pub fn set(s: IndexSet) -> Value {
    Value::from(s.to_one_based())
}

/// The key under which `s` appears in a box table: `"[1,3]"`.
pub fn set_key(s: IndexSet) -> String {
    let parts: Vec<String> = s.to_one_based().iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Reads an exact rational from a JSON number or a `"p"`, `"p/q"` string.
pub fn parse_rational(v: &Value) -> Result<BigRational, CliError> {
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => {
            return Err(CliError::usage("InvalidNumber", format!("expected an integer or a \"p/q\" string, got {other}")));
        }
    };
    parse_rational_str(&text)
}

pub fn parse_rational_str(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::usage("InvalidNumber", format!("cannot read {text:?} as an exact rational"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(CliError::usage("InvalidNumber", format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(int(&BigInt::from(1i64 << 53)), Value::String("9007199254740992".into()));
        assert_eq!(int(&BigInt::from((1i64 << 53) - 1)), Value::from((1i64 << 53) - 1));
        assert_eq!(int(&BigInt::from(-5)), Value::from(-5));
    }

    #[test]
    fn rationals_round_trip() {
        for text in ["3", "-7/4", "0", "123456789012345678901234567890/7"] {
            let x = parse_rational_str(text).unwrap();
            assert_eq!(parse_rational(&rational(&x)).unwrap(), x);
        }
        assert_eq!(parse_rational_str("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert!(parse_rational_str("1/0").is_err());
        assert!(parse_rational_str("x").is_err());
    }
}
