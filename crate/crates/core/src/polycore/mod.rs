//! Exact polynomial arithmetic, Ehrhart/h* basis changes and coefficient
//! shape predicates.

mod hstar;
mod poly;
mod scalar;
mod shape;
mod sturm;

use thiserror::Error;

pub use hstar::{
    ehrhart_from_hstar, express_in_shifted_power_basis, hstar_from_ehrhart,
    integer_hstar_from_ehrhart, shifted_power, HStarVector,
};
pub use poly::{IntPolynomial, Poly, RatPolynomial};
pub use scalar::{binomial, Scalar};
pub use shape::{
    alternating_violation, first_asymmetry, is_alternatingly_increasing, is_palindromic, is_unimodal,
    symmetric_decomposition, symmetric_decomposition_polys, Unimodality,
};
pub use sturm::{count_distinct_real_roots, is_real_rooted, sturm_chain};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial of degree {degree} exceeds the declared degree {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("coefficient {index} is not an integer: {value}")]
    NonIntegral { index: usize, value: String },
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("empty coefficient vector")]
    Empty,
}
