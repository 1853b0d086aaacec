//! Brute-force lattice-point counting for zonotope dilates.
//!
//! Membership `∃ λ : V λ = p, λ_i ∈ [lo, hi]` is compiled once per
//! configuration into affine constraints on `(p, n)` by eliminating the
//! equalities and then Fourier–Motzkin over the remaining `λ`. Counting then
//! needs only integer arithmetic. Nothing here uses the matroid or the
//! formula modules.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::polycore::{integer_hstar_from_ehrhart, HStarVector, PolyError, RatPolynomial};
use crate::zonotope::{Mode, ZonotopeSpec};

/// Largest bounding box the counter will enumerate.
pub const MAX_BOX_POINTS: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bounding box has {points} lattice points, limit {limit}")]
    BoxTooLarge { points: String, limit: u64 },
    #[error("count at n = {n} is {got}, the degree-{degree} interpolant predicts {expected}")]
    OffPolynomial { n: usize, degree: usize, expected: String, got: String },
    #[error("{have} counts supplied, {need} needed")]
    TooFewCounts { have: usize, need: usize },
    #[error("generators span rank {rank} in dimension {dim}")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A point of `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint {
            coords: coords.iter().map(|&x| BigRational::from_integer(x.into())).collect(),
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Lattice-point counts of the dilates `n = 0, 1, ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    counts: Vec<BigInt>,
}

impl CountSeries {
    pub fn new(counts: Vec<BigInt>) -> Self {
        CountSeries { counts }
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        CountSeries {
            counts: counts.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Affine form `Σ a_k p_k + a_n n + a_0` with integer coefficients, stored
/// as `[a_1, .., a_d, a_n, a_0]`.
type Form = Vec<BigInt>;

/// A linear constraint over `λ` with a parametric right-hand side:
/// `Σ c_i λ_i + rhs(p, n) >= 0`.
#[derive(Clone)]
struct Row {
    lambda: Vec<BigRational>,
    rhs: Vec<BigRational>,
    history: u128,
}

/// Compiled membership test for one zonotope: `p ∈ nZ` iff every
/// `equalities` form vanishes and every `inequalities` form is nonnegative.
#[derive(Clone, Debug)]
pub struct MembershipTest {
    dim: usize,
    rank: usize,
    lower: Vec<i64>,
    upper: Vec<i64>,
    equalities: Vec<Form>,
    inequalities: Vec<Form>,
    small_eq: Option<Vec<Vec<i128>>>,
    small_ineq: Option<Vec<Vec<i128>>>,
}

fn integer_form(row: &[BigRational]) -> Option<Form> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    Some(ints.into_iter().map(|x| x / &g).collect())
}

fn to_small(forms: &[Form]) -> Option<Vec<Vec<i128>>> {
    // keep headroom so a form evaluated at |p|, n below 2^40 cannot overflow
    forms
        .iter()
        .map(|f| f.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect()
}

impl MembershipTest {
    pub fn compile(spec: &ZonotopeSpec) -> Self {
        let config = spec.config();
        let d = config.dim();
        let m = config.len();
        let params = d + 2;
        let (lo, hi): (i64, i64) = match spec.mode() {
            Mode::Standard => (0, 1),
            Mode::TypeB => (-1, 1),
        };
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));

        // [V | -I_p] with the parameter block tracked as a right-hand side
        let mut eq: Vec<(Vec<BigRational>, Vec<BigRational>)> = (0..d)
            .map(|r| {
                let lambda = (0..m).map(|i| q(config.vectors()[i][r])).collect();
                let mut rhs = vec![BigRational::zero(); params];
                rhs[r] = q(1);
                (lambda, rhs)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let Some(p) = (row..d).find(|&r| !eq[r].0[col].is_zero()) else {
                continue;
            };
            eq.swap(p, row);
            let inv = eq[row].0[col].recip();
            let (lambda, rhs) = &mut eq[row];
            for x in lambda.iter_mut().chain(rhs.iter_mut()) {
                *x *= &inv;
            }
            for r in 0..d {
                if r != row && !eq[r].0[col].is_zero() {
                    let f = eq[r].0[col].clone();
                    let (lp, rp) = (eq[row].0.clone(), eq[row].1.clone());
                    for (x, y) in eq[r].0.iter_mut().zip(&lp) {
                        *x -= &f * y;
                    }
                    for (x, y) in eq[r].1.iter_mut().zip(&rp) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = row;
        let equalities: Vec<Form> = eq[rank..].iter().filter_map(|(_, rhs)| integer_form(rhs)).collect();

        // λ_pivot = rhs - Σ_free c λ_free; bounds lo*n <= λ_i <= hi*n
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        let nf = free.len();
        let mut rows = Vec::new();
        let push_bounds = |lambda: Vec<BigRational>, rhs: Vec<BigRational>, rows: &mut Vec<Row>| {
            let k = rows.len();
            // value - lo*n >= 0
            let mut r1 = rhs.clone();
            r1[d] -= q(lo);
            rows.push(Row { lambda: lambda.clone(), rhs: r1, history: 1 << k });
            // hi*n - value >= 0
            let mut r2: Vec<BigRational> = rhs.iter().map(|x| -x).collect();
            r2[d] += q(hi);
            rows.push(Row { lambda: lambda.iter().map(|x| -x).collect(), rhs: r2, history: 1 << (k + 1) });
        };
        for k in 0..pivots.len() {
            let lambda: Vec<BigRational> = free.iter().map(|&f| -eq[k].0[f].clone()).collect();
            push_bounds(lambda, eq[k].1.clone(), &mut rows);
        }
        for (k, _) in free.iter().enumerate() {
            let mut lambda = vec![BigRational::zero(); nf];
            lambda[k] = q(1);
            push_bounds(lambda, vec![BigRational::zero(); params], &mut rows);
        }

        for var in 0..nf {
            let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
            for r in rows {
                if r.lambda[var].is_positive() {
                    pos.push(r);
                } else if r.lambda[var].is_negative() {
                    neg.push(r);
                } else {
                    rest.push(r);
                }
            }
            for a in &pos {
                for b in &neg {
                    let history = a.history | b.history;
                    // Chernikov: more than var+2 ancestors after var+1 eliminations is redundant
                    if history.count_ones() as usize > var + 2 {
                        continue;
                    }
                    let fa = -b.lambda[var].clone();
                    let fb = a.lambda[var].clone();
                    let lambda = a.lambda.iter().zip(&b.lambda).map(|(x, y)| x * &fa + y * &fb).collect();
                    let rhs = a.rhs.iter().zip(&b.rhs).map(|(x, y)| x * &fa + y * &fb).collect();
                    rest.push(Row { lambda, rhs, history });
                }
            }
            rows = rest;
        }

        let mut seen = BTreeSet::new();
        let mut inequalities = Vec::new();
        for r in rows {
            // None is a constant 0 >= 0 after normalization
            if let Some(f) = integer_form(&r.rhs) {
                if seen.insert(f.clone()) {
                    inequalities.push(f);
                }
            }
        }

        let lower = (0..d)
            .map(|c| config.vectors().iter().map(|v| (lo * v[c]).min(hi * v[c])).sum())
            .collect();
        let upper = (0..d)
            .map(|c| config.vectors().iter().map(|v| (lo * v[c]).max(hi * v[c])).sum())
            .collect();
        MembershipTest {
            dim: d,
            rank,
            lower,
            upper,
            small_eq: to_small(&equalities),
            small_ineq: to_small(&inequalities),
            equalities,
            inequalities,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of the generator matrix found during elimination.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of inequalities left after elimination and deduplication.
    pub fn num_constraints(&self) -> usize {
        self.inequalities.len() + self.equalities.len()
    }

    fn eval(form: &Form, p: &[BigRational], n: &BigRational) -> BigRational {
        let d = p.len();
        let mut acc = BigRational::from_integer(form[d + 1].clone());
        acc += BigRational::from_integer(form[d].clone()) * n;
        for (c, x) in form[..d].iter().zip(p) {
            acc += BigRational::from_integer(c.clone()) * x;
        }
        acc
    }

    pub fn contains_rational(&self, n: u64, p: &RationalPoint) -> Result<bool, OracleError> {
        if p.dim() != self.dim {
            return Err(OracleError::DimensionMismatch { expected: self.dim, got: p.dim() });
        }
        let n = BigRational::from_integer(n.into());
        Ok(self.equalities.iter().all(|f| Self::eval(f, p.coords(), &n).is_zero())
            && self.inequalities.iter().all(|f| !Self::eval(f, p.coords(), &n).is_negative()))
    }

    pub fn contains(&self, n: u64, p: &[i64]) -> Result<bool, OracleError> {
        self.contains_rational(n, &RationalPoint::from_integers(p))
    }

    /// Integer bounding box `[lower, upper]` of the `n`-th dilate.
    pub fn bounding_box(&self, n: u64) -> (Vec<BigInt>, Vec<BigInt>) {
        let n = BigInt::from(n);
        (
            self.lower.iter().map(|&x| &n * x).collect(),
            self.upper.iter().map(|&x| &n * x).collect(),
        )
    }

    /// Lattice points of the `n`-th dilate. The bounding box is walked over
    /// all but the last coordinate; along the last one the constraints cut
    /// out an interval that is counted directly.
    pub fn count(&self, n: u64) -> Result<BigInt, OracleError> {
        let (lo, hi) = self.bounding_box(n);
        let volume: BigInt = lo.iter().zip(&hi).map(|(a, b)| b - a + 1).product();
        if volume > BigInt::from(MAX_BOX_POINTS) {
            return Err(OracleError::BoxTooLarge { points: volume.to_string(), limit: MAX_BOX_POINTS });
        }
        if self.dim == 0 {
            let empty = RationalPoint::new(Vec::new());
            return Ok(BigInt::from(u8::from(self.contains_rational(n, &empty)?)));
        }
        let lo: Vec<i128> = lo.iter().map(|x| x.to_i128().expect("guarded box")).collect();
        let hi: Vec<i128> = hi.iter().map(|x| x.to_i128().expect("guarded box")).collect();
        match (&self.small_eq, &self.small_ineq) {
            (Some(eq), Some(ineq)) => Ok(BigInt::from(count_small(eq, ineq, &lo, &hi, n as i128))),
            _ => self.count_big(n, &lo, &hi),
        }
    }

    fn count_big(&self, n: u64, lo: &[i128], hi: &[i128]) -> Result<BigInt, OracleError> {
        let mut point: Vec<i128> = lo.to_vec();
        let mut total = BigInt::zero();
        loop {
            let p = RationalPoint::new(point.iter().map(|&x| BigRational::from_integer(x.into())).collect());
            if self.contains_rational(n, &p)? {
                total += 1;
            }
            if !advance(&mut point, lo, hi, self.dim) {
                return Ok(total);
            }
        }
    }
}

/// Odometer step over the first `len` coordinates.
fn advance(point: &mut [i128], lo: &[i128], hi: &[i128], len: usize) -> bool {
    for c in (0..len).rev() {
        if point[c] < hi[c] {
            point[c] += 1;
            return true;
        }
        point[c] = lo[c];
    }
    false
}

fn count_small(eq: &[Vec<i128>], ineq: &[Vec<i128>], lo: &[i128], hi: &[i128], n: i128) -> u128 {
    let d = lo.len();
    let last = d - 1;
    let partial = |f: &[i128], prefix: &[i128]| -> i128 {
        f[..last].iter().zip(prefix).map(|(a, x)| a * x).sum::<i128>() + f[d] * n + f[d + 1]
    };
    let mut prefix: Vec<i128> = lo[..last].to_vec();
    let mut total: u128 = 0;
    'outer: loop {
        let (mut a, mut b) = (lo[last], hi[last]);
        for f in eq {
            let (c, r) = (f[last], partial(f, &prefix));
            if c == 0 {
                if r != 0 {
                    a = 1;
                    b = 0;
                }
            } else if r % c != 0 {
                a = 1;
                b = 0;
            } else {
                let x = -r / c;
                a = a.max(x);
                b = b.min(x);
            }
        }
        for f in ineq {
            // c x + r >= 0
            let (c, r) = (f[last], partial(f, &prefix));
            match c.signum() {
                0 => {
                    if r < 0 {
                        a = 1;
                        b = 0;
                    }
                }
                1 => a = a.max(Integer::div_ceil(&-r, &c)),
                _ => b = b.min(Integer::div_floor(&r, &-c)),
            }
            if a > b {
                break;
            }
        }
        if a <= b {
            total += (b - a + 1) as u128;
        }
        if !advance(&mut prefix, lo, hi, last) {
            break 'outer;
        }
    }
    total
}

/// Exact membership of the integer point `p` in the `n`-th dilate.
pub fn contains_point(spec: &ZonotopeSpec, n: u64, p: &[i64]) -> Result<bool, OracleError> {
    MembershipTest::compile(spec).contains(n, p)
}

pub fn count_lattice_points(spec: &ZonotopeSpec, n: u64) -> Result<BigInt, OracleError> {
    MembershipTest::compile(spec).count(n)
}

/// Counts for `n = 0..=max_n`, sharing one compiled membership test.
pub fn count_series(spec: &ZonotopeSpec, max_n: u64) -> Result<CountSeries, OracleError> {
    let test = MembershipTest::compile(spec);
    let counts = (0..=max_n).map(|n| test.count(n)).collect::<Result<_, _>>()?;
    Ok(CountSeries::new(counts))
}

/// Degree-`r` interpolant of the counts by Newton forward differences; any
/// counts beyond the first `r + 1` must lie on it.
pub fn interpolate_ehrhart(counts: &CountSeries, r: usize) -> Result<RatPolynomial, OracleError> {
    if counts.len() < r + 1 {
        return Err(OracleError::TooFewCounts { have: counts.len(), need: r + 1 });
    }
    let mut diffs: Vec<BigInt> = counts.counts()[..=r].to_vec();
    let mut leading = Vec::with_capacity(r + 1);
    for k in 0..=r {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        debug_assert_eq!(diffs.len(), r - k);
    }
    // Σ_k Δ^k f(0) C(n, k)
    let mut p = RatPolynomial::zero();
    let mut falling = RatPolynomial::one();
    let mut fact = BigInt::one();
    for (k, delta) in leading.iter().enumerate() {
        if k > 0 {
            fact *= k;
            let shift = RatPolynomial::linear(BigRational::from_integer(-BigInt::from(k - 1)), BigRational::one());
            falling = &falling * &shift;
        }
        p = &p + &falling.scale(&BigRational::new(delta.clone(), fact.clone()));
    }
    for (n, c) in counts.counts().iter().enumerate().skip(r + 1) {
        let value = p.eval(&BigRational::from_integer(n.into()));
        let got = BigRational::from_integer(c.clone());
        if value != got {
            return Err(OracleError::OffPolynomial {
                n,
                degree: r,
                expected: value.to_string(),
                got: c.to_string(),
            });
        }
    }
    Ok(p)
}

/// h* from direct counts of the dilates `0..=d+1`; the last count checks
/// the degree.
pub fn hstar_via_oracle(spec: &ZonotopeSpec) -> Result<HStarVector, OracleError> {
    let test = MembershipTest::compile(spec);
    let d = test.dim();
    if test.rank() != d {
        return Err(OracleError::NotFullDimensional { rank: test.rank(), dim: d });
    }
    let counts = (0..=d as u64 + 1).map(|n| test.count(n)).collect::<Result<_, _>>()?;
    let ehr = interpolate_ehrhart(&CountSeries::new(counts), d)?;
    Ok(integer_hstar_from_ehrhart(&ehr, d)?)
}

/// Ehrhart polynomial interpolated from counts `0..=d+1`.
pub fn ehrhart_via_oracle(spec: &ZonotopeSpec) -> Result<RatPolynomial, OracleError> {
    let d = spec.dim();
    interpolate_ehrhart(&count_series(spec, d as u64 + 1)?, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::VectorConfiguration;

    fn spec(rows: &[&[i64]], mode: Mode) -> ZonotopeSpec {
        let config = VectorConfiguration::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        ZonotopeSpec::new(config, mode)
    }

    fn hexagon() -> ZonotopeSpec {
        spec(&[&[1, 0], &[0, 1], &[1, 1]], Mode::Standard)
    }

    fn h(c: &[i64]) -> HStarVector {
        HStarVector::from_i64s(c).unwrap()
    }

    /// Direct check over a fine grid of λ, usable only for tiny cases.
    fn membership_by_grid(rows: &[&[i64]], n: i64, p: &[i64], steps: i64) -> bool {
        let m = rows.len();
        let total = (steps * n + 1).pow(m as u32);
        (0..total).any(|mut code| {
            let mut sum = vec![0i64; p.len()];
            for v in rows {
                let k = code % (steps * n + 1);
                code /= steps * n + 1;
                for (s, x) in sum.iter_mut().zip(v.iter()) {
                    *s += k * x;
                }
            }
            sum.iter().zip(p).all(|(s, x)| *s == steps * x)
        })
    }

    #[test]
    fn membership_examples() {
        let z = hexagon();
        assert!(contains_point(&z, 1, &[2, 1]).unwrap());
        assert!(contains_point(&z, 1, &[2, 2]).unwrap());
        assert!(!contains_point(&z, 1, &[3, 0]).unwrap());
        assert!(!contains_point(&z, 1, &[-1, 0]).unwrap());
        assert!(contains_point(&z, 0, &[0, 0]).unwrap());
        assert!(matches!(contains_point(&z, 1, &[1]), Err(OracleError::DimensionMismatch { .. })));
    }

    #[test]
    fn membership_matches_grid_search() {
        // every grid point of λ certifies membership of its image
        let rows: [&[i64]; 3] = [&[2, 1], &[1, -1], &[0, 2]];
        let z = spec(&rows, Mode::Standard);
        let test = MembershipTest::compile(&z);
        for x in -2..=5 {
            for y in -3..=5 {
                let grid = membership_by_grid(&rows, 1, &[x, y], 2);
                if grid {
                    assert!(test.contains(1, &[x, y]).unwrap(), "({x},{y})");
                }
            }
        }
    }

    #[test]
    fn rational_points() {
        let z = hexagon();
        let test = MembershipTest::compile(&z);
        let half = BigRational::new(1.into(), 2.into());
        let p = RationalPoint::new(vec![half.clone(), half.clone() + BigRational::from_integer(2.into())]);
        assert!(!test.contains_rational(1, &p).unwrap());
        let p = RationalPoint::new(vec![half.clone(), half]);
        assert!(test.contains_rational(1, &p).unwrap());
    }

    #[test]
    fn count_examples() {
        let z = hexagon();
        assert_eq!(count_lattice_points(&z, 0).unwrap(), BigInt::one());
        assert_eq!(count_lattice_points(&z, 1).unwrap(), BigInt::from(7));
        assert_eq!(count_lattice_points(&z, 2).unwrap(), BigInt::from(19));
        let diamond = spec(&[&[1, 1], &[1, -1]], Mode::Standard);
        let series = count_series(&diamond, 2).unwrap();
        assert_eq!(series, CountSeries::from_u64s(&[1, 5, 13]));
    }

    #[test]
    fn fast_and_exact_counters_agree() {
        let z = spec(&[&[2, 1, 0], &[1, -1, 3], &[0, 2, 1], &[1, 1, 1]], Mode::Standard);
        let test = MembershipTest::compile(&z);
        for n in 0..3 {
            let (lo, hi) = test.bounding_box(n);
            let lo: Vec<i128> = lo.iter().map(|x| x.to_i128().unwrap()).collect();
            let hi: Vec<i128> = hi.iter().map(|x| x.to_i128().unwrap()).collect();
            assert_eq!(test.count(n).unwrap(), test.count_big(n, &lo, &hi).unwrap());
        }
    }

    #[test]
    fn lower_dimensional_zonotope() {
        let seg = spec(&[&[1, 1], &[2, 2]], Mode::Standard);
        assert_eq!(count_lattice_points(&seg, 1).unwrap(), BigInt::from(4));
        assert!(matches!(hstar_via_oracle(&seg), Err(OracleError::NotFullDimensional { rank: 1, dim: 2 })));
    }

    #[test]
    fn box_guard() {
        let big = spec(&[&[1000, 0, 0], &[0, 1000, 0], &[0, 0, 1000]], Mode::Standard);
        assert!(matches!(count_lattice_points(&big, 1), Err(OracleError::BoxTooLarge { .. })));
    }

    #[test]
    fn interpolation_examples() {
        let p = interpolate_ehrhart(&CountSeries::from_u64s(&[1, 7, 19]), 2).unwrap();
        assert_eq!(p, RatPolynomial::from_i64s(&[1, 3, 3]));
        let p = interpolate_ehrhart(&CountSeries::from_u64s(&[1, 5, 13]), 2).unwrap();
        assert_eq!(p, RatPolynomial::from_i64s(&[1, 2, 2]));
        for r in 0..=2 {
            let p = interpolate_ehrhart(&CountSeries::from_u64s(&[1, 1, 1]), r).unwrap();
            assert_eq!(p, RatPolynomial::one());
        }
        assert!(matches!(
            interpolate_ehrhart(&CountSeries::from_u64s(&[1, 7, 19, 38]), 2),
            Err(OracleError::OffPolynomial { n: 3, .. })
        ));
        assert!(interpolate_ehrhart(&CountSeries::from_u64s(&[1]), 2).is_err());
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(hstar_via_oracle(&hexagon()).unwrap(), h(&[1, 4, 1]));
        assert_eq!(hstar_via_oracle(&spec(&[&[1, 1], &[1, -1]], Mode::Standard)).unwrap(), h(&[1, 2, 1]));
        assert_eq!(hstar_via_oracle(&spec(&[&[1, 0], &[0, 1]], Mode::TypeB)).unwrap(), h(&[1, 6, 1]));
        assert_eq!(hstar_via_oracle(&spec(&[&[1, 0], &[1, 4]], Mode::Standard)).unwrap(), h(&[1, 4, 3]));
        assert_eq!(hstar_via_oracle(&spec(&[&[4, 0], &[0, 1]], Mode::Standard)).unwrap(), h(&[1, 7, 0]));
    }

    #[test]
    fn counts_are_invariant_under_permutation_and_negation() {
        let base: [&[i64]; 3] = [&[2, 1], &[1, -1], &[0, 3]];
        let reference = count_series(&spec(&base, Mode::Standard), 3).unwrap();
        let permuted: [&[i64]; 3] = [&[0, 3], &[2, 1], &[1, -1]];
        assert_eq!(count_series(&spec(&permuted, Mode::Standard), 3).unwrap(), reference);
        let negated: [&[i64]; 3] = [&[-2, -1], &[1, -1], &[0, -3]];
        assert_eq!(count_series(&spec(&negated, Mode::Standard), 3).unwrap(), reference);
        let b = count_series(&spec(&base, Mode::TypeB), 2).unwrap();
        let bn = count_series(&spec(&negated, Mode::TypeB), 2).unwrap();
        assert_eq!(b, bn);
    }

    #[test]
    fn counts_are_monotone() {
        let z = spec(&[&[3, -1], &[1, 2], &[-2, 1]], Mode::Standard);
        let s = count_series(&z, 4).unwrap();
        assert!(s.counts().windows(2).all(|w| w[0] <= w[1]));
        assert!(s.counts().iter().all(|c| c >= &BigInt::one()));
    }
}
