//! Exact Ehrhart and h*-polynomials of lattice zonotopes.
//!
//! The crate computes h*-polynomials of zonotopes, half-open
//! parallelepipeds and cubes, and their centrally symmetric (type-B)
//! counterparts through refined Eulerian polynomials and the matroid of the
//! generators. An independent lattice-point oracle counts dilates directly
//! and is used to cross-check every formula.
//!
//! ```
//! use ehrhart_core::{hstar_zonotope, default_box_table, VectorConfiguration, ZonotopeSpec};
//!
//! let hexagon = VectorConfiguration::from_rows(vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
//! let spec = ZonotopeSpec::standard(hexagon);
//! let table = default_box_table(spec.config()).unwrap();
//! let h = hstar_zonotope(&spec, &table).unwrap();
//! assert_eq!(h.coeffs(), &[1.into(), 4.into(), 1.into()]);
//! ```

pub mod eulerian;
pub mod linalg;
pub mod matroid;
pub mod oracle;
pub mod polycore;
pub mod zonotope;

use thiserror::Error;

pub use eulerian::{
    a_j_polynomial, a_polynomials, b_l_polynomial, eulerian_a, eulerian_b, EulerianError,
    Permutation, SignedPermutation,
};
pub use matroid::{GroundOrder, IndexSet, Matroid, MatroidError, VectorConfiguration};
pub use oracle::{
    contains_point, count_lattice_points, hstar_via_oracle, interpolate_ehrhart, CountSeries,
    MembershipTest, OracleError, RationalPoint,
};
pub use polycore::{
    hstar_from_ehrhart, is_alternatingly_increasing, is_palindromic, is_real_rooted, is_unimodal,
    HStarVector, IntPolynomial, Poly, PolyError, RatPolynomial, Scalar,
};
pub use zonotope::{
    default_box_table, ehrhart_zonotope, express_in_a_basis, hstar_typeb_zonotope,
    hstar_zonotope, is_in_zonotope_cone, BoxValuationTable, Mode, ZonotopeError, ZonotopeSpec,
};

/// Any failure raised by the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Eulerian(#[from] EulerianError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Zonotope(#[from] ZonotopeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl Error {
    /// True for refusals caused by size guards rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::Eulerian(EulerianError::EnumerationLimit { .. })
                | Error::Oracle(OracleError::BoxTooLarge { .. })
        )
    }
}
