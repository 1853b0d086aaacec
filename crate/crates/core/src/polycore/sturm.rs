//! Real-rootedness by Sturm chains over the rationals.

use num_traits::Signed;

use super::poly::{Poly, RatPolynomial};
use super::scalar::Scalar;
use super::PolyError;

/// Sturm chain `p, p', -rem(p, p'), ...` of a nonzero polynomial.
pub fn sturm_chain(p: &RatPolynomial) -> Vec<RatPolynomial> {
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        chain.push(next);
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        next = -&r;
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn lead_sign(p: &RatPolynomial, at_minus_infinity: bool) -> i8 {
    let Some(lead) = p.leading_coeff() else { return 0 };
    let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
    if at_minus_infinity && p.degree().unwrap_or(0) % 2 == 1 {
        s = -s;
    }
    s
}

/// Number of distinct real roots of a nonzero polynomial, counted on the
/// whole real line by comparing chain signs at `-inf` and `+inf`.
pub fn count_distinct_real_roots<T: Scalar>(p: &Poly<T>) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let chain = sturm_chain(&p.to_rational());
    let minus = sign_changes(chain.iter().map(|q| lead_sign(q, true)));
    let plus = sign_changes(chain.iter().map(|q| lead_sign(q, false)));
    Ok(minus - plus)
}

/// True iff every complex root of `p` is real (with multiplicity).
///
/// `p / gcd(p, p')` is squarefree with the same roots; it must have as many
/// distinct real roots as its degree, and the gcd must itself be real-rooted.
pub fn is_real_rooted<T: Scalar>(p: &Poly<T>) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut current = p.to_rational().monic();
    loop {
        let deg = current.degree().unwrap_or(0);
        if deg == 0 {
            return Ok(true);
        }
        let g = current.gcd(&current.derivative());
        let (squarefree, rem) = current.div_rem(&g);
        debug_assert!(rem.is_zero());
        let sf_deg = squarefree.degree().unwrap_or(0);
        if count_distinct_real_roots(&squarefree)? != sf_deg {
            return Ok(false);
        }
        current = g;
    }
}
