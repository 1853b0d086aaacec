//! Ehrhart and h*-polynomials of zonotopes and half-open parallelepipeds for
//! translation-invariant valuations given by their values on open boxes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::eulerian::{a_polynomials, b_polynomials};
use crate::linalg;
use crate::matroid::{IndexSet, Matroid, MatroidError, VectorConfiguration};
use crate::polycore::{
    express_in_shifted_power_basis, shifted_power, HStarVector, IntPolynomial, Poly, PolyError,
    Scalar,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZonotopeError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generators span rank {rank} in dimension {dim}; a full-dimensional zonotope is required")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("maximal minor of {0} is not in {{0, 1, -1}}")]
    NotTotallyUnimodular(IndexSet),
    #[error("operation needs a {expected:?} zonotope")]
    WrongMode { expected: Mode },
    #[error("parameter {name} = {value} outside {min}..={max}")]
    OutOfRange { name: &'static str, value: usize, min: usize, max: usize },
    #[error("box table key {0} is not an independent set")]
    DependentKey(IndexSet),
}

/// Coefficient range of the generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `λ_i ∈ [0, 1]`
    #[default]
    Standard,
    /// `λ_i ∈ [-1, 1]`, a lattice translate of the dilate by two.
    TypeB,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZonotopeSpec {
    config: VectorConfiguration,
    mode: Mode,
}

impl ZonotopeSpec {
    pub fn new(config: VectorConfiguration, mode: Mode) -> Self {
        ZonotopeSpec { config, mode }
    }

    pub fn standard(config: VectorConfiguration) -> Self {
        Self::new(config, Mode::Standard)
    }

    pub fn type_b(config: VectorConfiguration) -> Self {
        Self::new(config, Mode::TypeB)
    }

    pub fn config(&self) -> &VectorConfiguration {
        &self.config
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.config.full_rank() == self.config.dim()
    }

    fn require_full_dimensional(&self) -> Result<(), ZonotopeError> {
        let rank = self.config.full_rank();
        if rank != self.dim() {
            return Err(ZonotopeError::NotFullDimensional { rank, dim: self.dim() });
        }
        Ok(())
    }

    fn require_mode(&self, expected: Mode) -> Result<(), ZonotopeError> {
        if self.mode != expected {
            return Err(ZonotopeError::WrongMode { expected });
        }
        Ok(())
    }
}

/// Values `b(I) = φ(□(I))` of a valuation on the open boxes spanned by
/// independent subsets. Missing keys read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxValuationTable<T = BigInt> {
    values: BTreeMap<IndexSet, T>,
}

impl<T: Scalar> Default for BoxValuationTable<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> BoxValuationTable<T> {
    pub fn new() -> Self {
        BoxValuationTable { values: BTreeMap::new() }
    }

    pub fn get(&self, set: IndexSet) -> T {
        self.values.get(&set).cloned().unwrap_or_else(T::zero)
    }

    pub fn insert(&mut self, set: IndexSet, value: T) {
        if value.is_zero() {
            self.values.remove(&set);
        } else {
            self.values.insert(set, value);
        }
    }

    /// Nonzero entries in key order.
    pub fn iter(&self) -> impl Iterator<Item = (IndexSet, &T)> {
        self.values.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `φ(Π(I)) = Σ_{J ⊆ I} b(J)`, the value on the half-open box.
    pub fn halfopen_value(&self, set: IndexSet) -> T {
        self.iter()
            .filter(|(k, _)| k.is_subset(set))
            .fold(T::zero(), |acc, (_, v)| acc + v.clone())
    }

    /// Rejects keys that are dependent or outside the ground set.
    pub fn validate(&self, config: &VectorConfiguration) -> Result<(), ZonotopeError> {
        for (k, _) in self.iter() {
            if !config.is_independent(k)? {
                return Err(ZonotopeError::DependentKey(k));
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::new();
        for (k, v) in self.iter() {
            out.insert(k, v.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.insert(k, out.get(k) + v.clone());
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BoxValuationTable<U> {
        let mut out = BoxValuationTable::new();
        for (k, v) in self.iter() {
            out.insert(k, f(v));
        }
        out
    }
}

impl<T: Scalar> FromIterator<(IndexSet, T)> for BoxValuationTable<T> {
    fn from_iter<I: IntoIterator<Item = (IndexSet, T)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, v) in iter {
            out.insert(k, v);
        }
        out
    }
}

/// `|Π(I) ∩ Z^d|`, the gcd of the maximal minors of `I`.
pub fn box_halfopen_count(config: &VectorConfiguration, set: IndexSet) -> Result<BigInt, ZonotopeError> {
    Ok(config.g(set)?)
}

/// Lattice-point counts of the open boxes, by Möbius inversion of `g` over
/// the subsets of each independent set.
pub fn default_box_table(config: &VectorConfiguration) -> Result<BoxValuationTable, ZonotopeError> {
    let independent = config.independent_sets();
    let mut g = BTreeMap::new();
    for &i in &independent {
        g.insert(i, config.g(i)?);
    }
    let mut table = BoxValuationTable::new();
    for &i in &independent {
        let mut b = BigInt::zero();
        for j in i.subsets() {
            if (i.len() - j.len()) % 2 == 0 {
                b += &g[&j];
            } else {
                b -= &g[&j];
            }
        }
        table.insert(i, b);
    }
    Ok(table)
}

/// `Σ_I φ(Π(I)) n^{|I|}` over independent `I`. A type-B zonotope is a
/// translate of the dilate by two, so its polynomial is `p(2n)`.
pub fn ehrhart_zonotope<T: Scalar>(spec: &ZonotopeSpec, table: &BoxValuationTable<T>) -> Result<Poly<T>, ZonotopeError> {
    table.validate(spec.config())?;
    let mut coeffs = vec![T::zero(); spec.dim() + 1];
    for i in spec.config().independent_sets() {
        coeffs[i.len()] = coeffs[i.len()].clone() + table.halfopen_value(i);
    }
    let p = Poly::new(coeffs);
    Ok(match spec.mode() {
        Mode::Standard => p,
        Mode::TypeB => p.dilate(&T::from_i64(2)),
    })
}

fn check_range(name: &'static str, value: usize, min: usize, max: usize) -> Result<(), ZonotopeError> {
    if value < min || value > max {
        return Err(ZonotopeError::OutOfRange { name, value, min, max });
    }
    Ok(())
}

/// `n^j (1+n)^{d-j}`, the Ehrhart polynomial of the unit cube with `j`
/// facets through the origin removed.
pub fn ehrhart_halfopen_cube(d: usize, j: usize) -> Result<IntPolynomial, ZonotopeError> {
    check_range("j", j, 0, d)?;
    Ok(shifted_power(j, d))
}

/// h* of the same half-open cube, read off as `A_{j+1}(d+1, t)`.
pub fn hstar_halfopen_cube(d: usize, j: usize) -> Result<HStarVector, ZonotopeError> {
    check_range("j", j, 0, d)?;
    let a = a_polynomials(d + 1).swap_remove(j);
    Ok(HStarVector::from_poly(&a, d)?)
}

/// Adds `c * p` into `acc`.
fn accumulate<T: Scalar>(acc: &mut [T], c: &T, p: &IntPolynomial) {
    for (slot, x) in acc.iter_mut().zip(p.coeffs()) {
        *slot = slot.clone() + c.clone() * T::from_bigint(x.clone());
    }
}

/// `Σ_{K ⊆ B} b(K) · family[|I ∪ K|]` with `family[m]` the polynomial of
/// index `m + 1`; `I ⊆ B` are the removed directions.
fn halfopen_sum<T: Scalar>(acc: &mut [T], basis: IndexSet, removed: IndexSet, table: &BoxValuationTable<T>, family: &[IntPolynomial]) {
    for (k, b) in table.iter() {
        if k.is_subset(basis) {
            accumulate(acc, b, &family[removed.union(k).len()]);
        }
    }
}

fn require_independent(config: &VectorConfiguration, removed: IndexSet) -> Result<IndexSet, ZonotopeError> {
    let all = config.ground_set();
    if !removed.is_subset(all) {
        let bad = removed.difference(all).iter().next().unwrap_or(0);
        return Err(MatroidError::IndexOutOfRange { index: bad, n: config.len() }.into());
    }
    if !config.is_independent(all)? {
        return Err(MatroidError::Dependent(all).into());
    }
    Ok(all)
}

/// h* of the parallelepiped of `r` independent vectors with the facets in
/// directions `removed` taken away: `Σ_K b(K) A_{|I ∪ K|+1}(r+1, t)`.
pub fn hstar_halfopen_parallelepiped<T: Scalar>(
    config: &VectorConfiguration,
    removed: IndexSet,
    table: &BoxValuationTable<T>,
) -> Result<HStarVector<T>, ZonotopeError> {
    let all = require_independent(config, removed)?;
    table.validate(config)?;
    let r = config.len();
    let family = a_polynomials(r + 1);
    let mut acc = vec![T::zero(); r + 1];
    halfopen_sum(&mut acc, all, removed, table, &family);
    Ok(HStarVector::new(acc)?)
}

/// Type-B analogue: `Σ_K b(K) B_{|I ∪ K|+1}(d+1, t)` for the `[-1, 1]`
/// parallelepiped, with `b` taken on boxes of the original vectors.
pub fn hstar_typeb_parallelepiped<T: Scalar>(
    config: &VectorConfiguration,
    removed: IndexSet,
    table: &BoxValuationTable<T>,
) -> Result<HStarVector<T>, ZonotopeError> {
    let all = require_independent(config, removed)?;
    table.validate(config)?;
    let r = config.len();
    let family = b_polynomials(r + 1);
    let mut acc = vec![T::zero(); r + 1];
    halfopen_sum(&mut acc, all, removed, table, &family);
    Ok(HStarVector::new(acc)?)
}

fn zonotope_sum<T: Scalar>(spec: &ZonotopeSpec, table: &BoxValuationTable<T>, family: &[IntPolynomial]) -> Result<HStarVector<T>, ZonotopeError> {
    spec.require_full_dimensional()?;
    table.validate(spec.config())?;
    let d = spec.dim();
    let matroid = Matroid::new(spec.config());
    let mut acc = vec![T::zero(); d + 1];
    for (basis, passive) in matroid.bases_with_passive() {
        halfopen_sum(&mut acc, basis, passive, table, family);
    }
    Ok(HStarVector::new(acc)?)
}

/// h* of a full-dimensional zonotope as a sum of half-open parallelepipeds,
/// one for each basis `B` with the facets in `IP(B)` removed.
pub fn hstar_zonotope<T: Scalar>(spec: &ZonotopeSpec, table: &BoxValuationTable<T>) -> Result<HStarVector<T>, ZonotopeError> {
    spec.require_mode(Mode::Standard)?;
    let h = zonotope_sum(spec, table, &a_polynomials(spec.dim() + 1))?;
    debug_assert_eq!(h, hstar_zonotope_by_independent_sets(spec, table)?);
    Ok(h)
}

/// The same sum ordered by independent sets:
/// `Σ_I b(I) Σ_{B ⊇ I} A_{|I ∪ IP(B)|+1}(d+1, t)`.
pub fn hstar_zonotope_by_independent_sets<T: Scalar>(
    spec: &ZonotopeSpec,
    table: &BoxValuationTable<T>,
) -> Result<HStarVector<T>, ZonotopeError> {
    spec.require_mode(Mode::Standard)?;
    spec.require_full_dimensional()?;
    table.validate(spec.config())?;
    let d = spec.dim();
    let family = a_polynomials(d + 1);
    let matroid = Matroid::new(spec.config());
    let mut acc = vec![T::zero(); d + 1];
    for (i, b) in table.iter() {
        for (basis, passive) in matroid.bases_with_passive() {
            if i.is_subset(basis) {
                accumulate(&mut acc, b, &family[i.union(passive).len()]);
            }
        }
    }
    Ok(HStarVector::new(acc)?)
}

/// `Σ_B A_{|IP(B)|+1}(d+1, t)` for configurations whose maximal minors all
/// lie in `{0, ±1}`.
pub fn hstar_totally_unimodular(spec: &ZonotopeSpec) -> Result<HStarVector, ZonotopeError> {
    spec.require_mode(Mode::Standard)?;
    spec.require_full_dimensional()?;
    let config = spec.config();
    let d = spec.dim();
    for s in config.ground_set().subsets().filter(|s| s.len() == d) {
        if linalg::determinant(&config.column_matrix(s)).abs() > BigInt::one() {
            return Err(ZonotopeError::NotTotallyUnimodular(s));
        }
    }
    let family = a_polynomials(d + 1);
    let mut acc = vec![BigInt::zero(); d + 1];
    for (_, passive) in Matroid::new(config).bases_with_passive() {
        accumulate(&mut acc, &BigInt::one(), &family[passive.len()]);
    }
    Ok(HStarVector::new(acc)?)
}

/// h* of the type-B zonotope `{Σ λ_i v_i : -1 <= λ_i <= 1}`:
/// `Σ_B Σ_{K ⊆ B} b(K) B_{|IP(B) ∪ K|+1}(d+1, t)`.
pub fn hstar_typeb_zonotope<T: Scalar>(spec: &ZonotopeSpec, table: &BoxValuationTable<T>) -> Result<HStarVector<T>, ZonotopeError> {
    spec.require_mode(Mode::TypeB)?;
    zonotope_sum(spec, table, &b_polynomials(spec.dim() + 1))
}

/// Coordinates `c_1..c_{d+1}` of `h` in the basis `A_1(d+1), .., A_{d+1}(d+1)`.
pub fn express_in_a_basis<T: Scalar>(h: &HStarVector<T>) -> Vec<BigRational> {
    let d = h.degree();
    let family = a_polynomials(d + 1);
    let matrix: Vec<Vec<BigRational>> = (0..=d)
        .map(|row| family.iter().map(|a| BigRational::from_integer(a.coeff(row))).collect())
        .collect();
    let rhs: Vec<BigRational> = h.coeffs().iter().map(Scalar::to_rational).collect();
    linalg::solve(&matrix, &rhs).expect("refined Eulerian polynomials are linearly independent")
}

/// `c_1 = 1` and `c_j >= 0` for `j >= 2`.
pub fn is_in_zonotope_cone<T: Scalar>(h: &HStarVector<T>) -> bool {
    let c = express_in_a_basis(h);
    c[0].is_one() && c[1..].iter().all(|x| !x.is_negative())
}

fn unit_vector(d: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = scale;
    v
}

fn parallelepiped_with(d: usize, position: usize, m: usize) -> ZonotopeSpec {
    let mut rows: Vec<Vec<i64>> = (0..d).map(|i| unit_vector(d, i, 1)).collect();
    let mut v = unit_vector(d, position, m as i64 + 1);
    v[..position].fill(1);
    rows[position] = v;
    ZonotopeSpec::standard(VectorConfiguration::new(d, rows).expect("rows have length d"))
}

/// A parallelepiped with h* equal to `A_1(d+1) + m A_k(d+1)`, `2 <= k <= d+1`.
///
/// Generator `k-1` is `e_1 + .. + e_{k-2} + (m+1) e_{k-1}`, the others are unit
/// vectors, so the only nonzero box values are `b(∅) = 1` and
/// `b({1, .., k-1}) = m`.
pub fn pkm_parallelepiped(d: usize, k: usize, m: usize) -> Result<ZonotopeSpec, ZonotopeError> {
    check_range("k", k, 2, d + 1)?;
    Ok(parallelepiped_with(d, k - 2, m))
}

/// Generator `k` replaced by `e_1 + .. + e_{k-1} + (m+1) e_k`, `1 <= k <= d`.
/// Its h* is `A_1(d+1) + m A_{k+1}(d+1)`.
pub fn pkm_parallelepiped_literal(d: usize, k: usize, m: usize) -> Result<ZonotopeSpec, ZonotopeError> {
    check_range("k", k, 1, d)?;
    Ok(parallelepiped_with(d, k - 1, m))
}

/// `{(m+1) e_1, e_2, .., e_d}`, with h* equal to `A_1(d+1) + m A_2(d+1)`.
pub fn scaled_generator_parallelepiped(d: usize, m: usize) -> Result<ZonotopeSpec, ZonotopeError> {
    check_range("d", d, 1, usize::MAX)?;
    Ok(parallelepiped_with(d, 0, m))
}

/// Reflexivity test on the Ehrhart polynomial: the coordinates in the
/// basis `n^j (1+n)^{d-j}` are symmetric, `c_j = c_{d-j}`.
pub fn is_reflexive_by_ehrhart<T: Scalar>(ehr: &Poly<T>, d: usize) -> Result<bool, ZonotopeError> {
    let c = express_in_shifted_power_basis(ehr, d)?;
    Ok((0..=d).all(|j| c[j] == c[d - j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eulerian::{a_j_polynomial, b_l_polynomial};
    use crate::polycore::hstar_from_ehrhart;

    fn config(rows: &[&[i64]]) -> VectorConfiguration {
        VectorConfiguration::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn set(one_based: &[usize]) -> IndexSet {
        one_based.iter().map(|i| i - 1).collect()
    }

    fn h(c: &[i64]) -> HStarVector {
        HStarVector::from_i64s(c).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn hexagon() -> VectorConfiguration {
        config(&[&[1, 0], &[0, 1], &[1, 1]])
    }

    fn default_hstar(rows: &[&[i64]]) -> HStarVector {
        let spec = ZonotopeSpec::standard(config(rows));
        hstar_zonotope(&spec, &default_box_table(spec.config()).unwrap()).unwrap()
    }

    #[test]
    fn box_counts() {
        let v = config(&[&[1, 1], &[1, -1]]);
        assert_eq!(box_halfopen_count(&v, IndexSet::EMPTY).unwrap(), BigInt::one());
        assert_eq!(box_halfopen_count(&v, set(&[1, 2])).unwrap(), BigInt::from(2));
        assert_eq!(box_halfopen_count(&hexagon(), set(&[1, 3])).unwrap(), BigInt::one());
    }

    #[test]
    fn default_table_examples() {
        let t = default_box_table(&hexagon()).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![(IndexSet::EMPTY, &BigInt::one())]);

        let t = default_box_table(&config(&[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!(t.get(IndexSet::EMPTY), BigInt::one());
        assert_eq!(t.get(set(&[1])), BigInt::zero());
        assert_eq!(t.get(set(&[1, 2])), BigInt::one());

        let t = default_box_table(&config(&[&[4, 0], &[0, 1]])).unwrap();
        assert_eq!(t.get(set(&[1])), BigInt::from(3));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn ehrhart_examples() {
        let check = |rows: &[&[i64]], expect: &[i64]| {
            let spec = ZonotopeSpec::standard(config(rows));
            let t = default_box_table(spec.config()).unwrap();
            assert_eq!(ehrhart_zonotope(&spec, &t).unwrap(), Poly::from_i64s(expect));
        };
        check(&[&[1, 0], &[0, 1], &[1, 1]], &[1, 3, 3]);
        check(&[&[1, 1], &[1, -1]], &[1, 2, 2]);
        let point = ZonotopeSpec::standard(VectorConfiguration::new(0, vec![]).unwrap());
        assert_eq!(ehrhart_zonotope(&point, &default_box_table(point.config()).unwrap()).unwrap(), Poly::one());
    }

    #[test]
    fn type_b_ehrhart_is_dilated() {
        let spec = ZonotopeSpec::type_b(config(&[&[1, 0], &[0, 1]]));
        let t = default_box_table(spec.config()).unwrap();
        assert_eq!(ehrhart_zonotope(&spec, &t).unwrap(), Poly::from_i64s(&[1, 4, 4]));
    }

    #[test]
    fn halfopen_cube_examples() {
        assert_eq!(ehrhart_halfopen_cube(2, 0).unwrap(), Poly::from_i64s(&[1, 2, 1]));
        assert_eq!(hstar_halfopen_cube(2, 0).unwrap(), h(&[1, 1, 0]));
        assert_eq!(ehrhart_halfopen_cube(2, 2).unwrap(), Poly::from_i64s(&[0, 0, 1]));
        assert_eq!(hstar_halfopen_cube(2, 2).unwrap(), h(&[0, 1, 1]));
        assert_eq!(hstar_halfopen_cube(1, 1).unwrap(), h(&[0, 1]));
        assert!(hstar_halfopen_cube(2, 3).is_err());
        for d in 0..=5 {
            for j in 0..=d {
                let ehr = ehrhart_halfopen_cube(d, j).unwrap();
                assert_eq!(hstar_from_ehrhart(&ehr, d).unwrap(), hstar_halfopen_cube(d, j).unwrap());
            }
        }
    }

    #[test]
    fn halfopen_parallelepiped_examples() {
        let square = config(&[&[1, 0], &[0, 1]]);
        let t = default_box_table(&square).unwrap();
        assert_eq!(hstar_halfopen_parallelepiped(&square, IndexSet::EMPTY, &t).unwrap(), h(&[1, 1, 0]));
        assert_eq!(hstar_halfopen_parallelepiped(&square, set(&[1, 2]), &t).unwrap(), h(&[0, 1, 1]));
        let wide = config(&[&[4, 0], &[0, 1]]);
        let t = default_box_table(&wide).unwrap();
        assert_eq!(hstar_halfopen_parallelepiped(&wide, IndexSet::EMPTY, &t).unwrap(), h(&[1, 7, 0]));
        let dep = config(&[&[1, 0], &[2, 0]]);
        assert!(hstar_halfopen_parallelepiped(&dep, IndexSet::EMPTY, &BoxValuationTable::<BigInt>::new()).is_err());
    }

    #[test]
    fn zonotope_examples() {
        assert_eq!(default_hstar(&[&[1, 0], &[0, 1], &[1, 1]]), h(&[1, 4, 1]));
        assert_eq!(default_hstar(&[&[1, 1], &[1, -1]]), h(&[1, 2, 1]));
        assert_eq!(default_hstar(&[&[4, 0], &[0, 1]]), h(&[1, 7, 0]));
        let flat = ZonotopeSpec::standard(config(&[&[1, 0], &[2, 0]]));
        assert!(matches!(
            hstar_zonotope(&flat, &default_box_table(flat.config()).unwrap()),
            Err(ZonotopeError::NotFullDimensional { rank: 1, dim: 2 })
        ));
    }

    #[test]
    fn totally_unimodular_examples() {
        let spec = ZonotopeSpec::standard(hexagon());
        assert_eq!(hstar_totally_unimodular(&spec).unwrap(), h(&[1, 4, 1]));
        let cube = ZonotopeSpec::standard(config(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(hstar_totally_unimodular(&cube).unwrap(), h(&[1, 4, 1, 0]));
        let repeated = ZonotopeSpec::standard(config(&[&[1, 0], &[0, 1], &[1, 0]]));
        assert_eq!(hstar_totally_unimodular(&repeated).unwrap(), h(&[1, 3, 0]));
        assert_eq!(default_hstar(&[&[1, 0], &[0, 1], &[1, 0]]), h(&[1, 3, 0]));
        let not_tu = ZonotopeSpec::standard(config(&[&[1, 1], &[1, -1]]));
        assert!(matches!(hstar_totally_unimodular(&not_tu), Err(ZonotopeError::NotTotallyUnimodular(_))));
    }

    #[test]
    fn type_b_examples() {
        let seg = config(&[&[1]]);
        let t = default_box_table(&seg).unwrap();
        assert_eq!(hstar_typeb_parallelepiped(&seg, IndexSet::EMPTY, &t).unwrap(), h(&[1, 1]));
        assert_eq!(hstar_typeb_parallelepiped(&seg, set(&[1]), &t).unwrap(), h(&[0, 2]));
        let sq = ZonotopeSpec::type_b(config(&[&[1, 0], &[0, 1]]));
        let t = default_box_table(sq.config()).unwrap();
        assert_eq!(hstar_typeb_zonotope(&sq, &t).unwrap(), h(&[1, 6, 1]));
        let hex = ZonotopeSpec::type_b(hexagon());
        let t = default_box_table(hex.config()).unwrap();
        let expect: Vec<BigInt> = (1..=3)
            .map(|l| b_l_polynomial(3, l).unwrap())
            .fold(IntPolynomial::zero(), |acc, p| &acc + &p)
            .padded(3)
            .unwrap();
        assert_eq!(hstar_typeb_zonotope(&hex, &t).unwrap().coeffs(), expect.as_slice());
        assert!(matches!(hstar_typeb_zonotope(&ZonotopeSpec::standard(hexagon()), &t), Err(ZonotopeError::WrongMode { .. })));
    }

    #[test]
    fn a_basis_examples() {
        let one = BigRational::one;
        assert_eq!(express_in_a_basis(&h(&[1, 4, 1])), vec![one(), one(), one()]);
        assert_eq!(express_in_a_basis(&h(&[1, 7, 0])), vec![one(), rat(3, 1), rat(0, 1)]);
        assert_eq!(express_in_a_basis(&h(&[1, 0, 1])), vec![one(), rat(-1, 1), one()]);
        for d in 1..=5 {
            for j in 1..=d + 1 {
                let a = HStarVector::from_poly(&a_j_polynomial(d + 1, j).unwrap(), d).unwrap();
                let c = express_in_a_basis(&a);
                for (k, x) in c.iter().enumerate() {
                    assert_eq!(x.is_one(), k + 1 == j);
                    assert!(x.is_one() || x.is_zero());
                }
            }
        }
    }

    #[test]
    fn a_basis_agrees_with_shifted_power_route() {
        // hstar of n^j (1+n)^{d-j} is A_{j+1}(d+1), so both coordinate systems coincide
        for hv in [h(&[1, 4, 1]), h(&[3, -2, 5, 7]), h(&[0, 0, 0, 0, 1])] {
            let d = hv.degree();
            let ehr = crate::polycore::ehrhart_from_hstar(&hv);
            let shifted = express_in_shifted_power_basis(&ehr, d).unwrap();
            assert_eq!(express_in_a_basis(&hv), shifted);
        }
    }

    #[test]
    fn cone_examples() {
        assert!(is_in_zonotope_cone(&h(&[1, 4, 1])));
        assert!(!is_in_zonotope_cone(&h(&[2, 0, 0])));
        assert!(!is_in_zonotope_cone(&h(&[1, 0, 1])));
    }

    #[test]
    fn pkm_families() {
        let a3 = a_polynomials(3);
        let expect = |k: usize, m: i64| {
            let p = &a3[0] + &a3[k - 1].scale(&BigInt::from(m));
            HStarVector::from_poly(&p, 2).unwrap()
        };
        for m in [0, 1, 3] {
            for k in 2..=3 {
                let spec = pkm_parallelepiped(2, k, m as usize).unwrap();
                let t = default_box_table(spec.config()).unwrap();
                assert_eq!(hstar_zonotope(&spec, &t).unwrap(), expect(k, m));
            }
            let lit = pkm_parallelepiped_literal(2, 2, m as usize).unwrap();
            let t = default_box_table(lit.config()).unwrap();
            assert_eq!(hstar_zonotope(&lit, &t).unwrap(), expect(3, m));
        }
        let lit = pkm_parallelepiped_literal(2, 2, 3).unwrap();
        assert_eq!(lit.config().vectors(), &[vec![1, 0], vec![1, 4]]);
        let scaled = scaled_generator_parallelepiped(2, 3).unwrap();
        assert_eq!(scaled.config().vectors(), &[vec![4, 0], vec![0, 1]]);
        assert!(pkm_parallelepiped(2, 1, 3).is_err());
        assert!(pkm_parallelepiped(2, 4, 3).is_err());
    }

    #[test]
    fn reflexive_examples() {
        assert!(is_reflexive_by_ehrhart(&IntPolynomial::from_i64s(&[1, 2, 2]), 2).unwrap());
        assert!(!is_reflexive_by_ehrhart(&IntPolynomial::from_i64s(&[1, 2, 1]), 2).unwrap());
        assert!(is_reflexive_by_ehrhart(&IntPolynomial::from_i64s(&[1, 3, 3]), 2).unwrap());
    }

    #[test]
    fn both_orderings_agree_on_rational_tables() {
        let spec = ZonotopeSpec::standard(config(&[&[1, 2], &[3, -1], &[1, 1], &[0, 2]]));
        let mut t = BoxValuationTable::new();
        t.insert(IndexSet::EMPTY, rat(1, 2));
        t.insert(set(&[2]), rat(-3, 4));
        t.insert(set(&[1, 3]), rat(5, 3));
        t.insert(set(&[2, 4]), rat(7, 1));
        assert_eq!(
            hstar_zonotope(&spec, &t).unwrap(),
            hstar_zonotope_by_independent_sets(&spec, &t).unwrap()
        );
    }

    #[test]
    fn dependent_table_key_is_rejected() {
        let spec = ZonotopeSpec::standard(config(&[&[1, 0], &[2, 0], &[0, 1]]));
        let mut t = BoxValuationTable::new();
        t.insert(set(&[1, 2]), BigInt::one());
        assert!(matches!(hstar_zonotope(&spec, &t), Err(ZonotopeError::DependentKey(_))));
    }
}
