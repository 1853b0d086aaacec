//! Integer vector configurations and the matroid data the h* formula needs:
//! independence, lexicographically ordered bases, gcds of maximal minors,
//! internally passive elements and coloops.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg;

/// Ground sets are limited to this many elements.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("vector {index} has length {len}, expected {dim}")]
    RaggedVector { index: usize, len: usize, dim: usize },
    #[error("{0} vectors exceed the supported ground set size")]
    TooManyVectors(usize),
    #[error("index {index} outside the ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} is not independent")]
    Dependent(IndexSet),
    #[error("{0} is not a basis")]
    NotABasis(IndexSet),
}

/// A subset of the ground set `{0, .., n-1}`, stored as a bitmask.
///
/// Iteration yields indices in ascending order. Displayed 1-based.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Self {
        IndexSet(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Self {
        IndexSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based indices, matching the `[n]` convention of input files.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(IndexSet(cur))
        })
    }

    /// Positions of the members inside `within`: maps a subset of a basis to
    /// a subset of `0..within.len()`.
    pub fn relative_to(self, within: IndexSet) -> IndexSet {
        within
            .iter()
            .enumerate()
            .filter(|&(_, e)| self.contains(e))
            .fold(IndexSet::EMPTY, |acc, (k, _)| acc.insert(k))
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(IndexSet::EMPTY, IndexSet::insert)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// Which order on the ground set drives lex comparisons and passivity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GroundOrder {
    #[default]
    Natural,
    Reversed,
}

/// An ordered list of integer vectors in `Z^d`.
///
/// Duplicates are parallel elements and zero vectors are loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorConfiguration {
    dim: usize,
    vectors: Vec<Vec<i64>>,
    order: GroundOrder,
}

impl VectorConfiguration {
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self, MatroidError> {
        if vectors.len() > MAX_ELEMENTS {
            return Err(MatroidError::TooManyVectors(vectors.len()));
        }
        if let Some((index, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != dim) {
            return Err(MatroidError::RaggedVector { index, len: v.len(), dim });
        }
        Ok(VectorConfiguration {
            dim,
            vectors,
            order: GroundOrder::Natural,
        })
    }

    /// Infers the dimension from the first vector; an empty list needs
    /// [`VectorConfiguration::new`].
    pub fn from_rows(vectors: Vec<Vec<i64>>) -> Result<Self, MatroidError> {
        let dim = vectors.first().map_or(0, Vec::len);
        Self::new(dim, vectors)
    }

    /// The same vectors compared under `order`.
    pub fn with_order(&self, order: GroundOrder) -> Self {
        VectorConfiguration { order, ..self.clone() }
    }

    pub fn order(&self) -> GroundOrder {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn ground_set(&self) -> IndexSet {
        IndexSet::full(self.len())
    }

    /// Rank of the element `i` in the active order (0 = smallest).
    pub fn position(&self, i: usize) -> usize {
        match self.order {
            GroundOrder::Natural => i,
            GroundOrder::Reversed => self.len() - 1 - i,
        }
    }

    /// `i < j` in the active order.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.position(i) < self.position(j)
    }

    /// Elements of `s` sorted by the active order.
    pub fn ordered(&self, s: IndexSet) -> Vec<usize> {
        let mut v = s.to_vec();
        if self.order == GroundOrder::Reversed {
            v.reverse();
        }
        v
    }

    /// Lexicographic comparison of two sets, each read in ascending order.
    pub fn lex_cmp(&self, a: IndexSet, b: IndexSet) -> std::cmp::Ordering {
        let pa: Vec<usize> = self.ordered(a).into_iter().map(|i| self.position(i)).collect();
        let pb: Vec<usize> = self.ordered(b).into_iter().map(|i| self.position(i)).collect();
        pa.cmp(&pb)
    }

    fn check(&self, s: IndexSet) -> Result<(), MatroidError> {
        if let Some(bad) = s.iter().find(|&i| i >= self.len()) {
            return Err(MatroidError::IndexOutOfRange { index: bad, n: self.len() });
        }
        Ok(())
    }

    /// `d x |S|` matrix with the vectors of `s` as columns.
    pub fn column_matrix(&self, s: IndexSet) -> linalg::IntMatrix {
        let cols: Vec<usize> = s.to_vec();
        (0..self.dim)
            .map(|r| cols.iter().map(|&c| BigInt::from(self.vectors[c][r])).collect())
            .collect()
    }

    /// Rank of `{v_i : i ∈ S}` by fraction-free elimination.
    pub fn rank(&self, s: IndexSet) -> Result<usize, MatroidError> {
        self.check(s)?;
        Ok(self.rank_unchecked(s, &mut Vec::new()))
    }

    fn rank_unchecked(&self, s: IndexSet, scratch: &mut Vec<i128>) -> usize {
        if s.is_empty() {
            return 0;
        }
        let cols: Vec<&[i64]> = s.iter().map(|i| self.vectors[i].as_slice()).collect();
        linalg::rank_i128(&cols, self.dim, scratch).unwrap_or_else(|| {
            let rows: linalg::IntMatrix = cols
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            linalg::rank(&rows)
        })
    }

    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(self.ground_set(), &mut Vec::new())
    }

    pub fn is_independent(&self, s: IndexSet) -> Result<bool, MatroidError> {
        Ok(self.rank(s)? == s.len())
    }

    /// Every independent set including `∅`, sorted by size then
    /// lexicographically. Supersets of dependent sets are never visited.
    pub fn independent_sets(&self) -> Vec<IndexSet> {
        let mut out = Vec::new();
        let mut scratch = Vec::new();
        self.extend_independent(IndexSet::EMPTY, 0, &mut out, &mut scratch);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| self.lex_cmp(*a, *b)));
        out
    }

    fn extend_independent(&self, current: IndexSet, from: usize, out: &mut Vec<IndexSet>, scratch: &mut Vec<i128>) {
        out.push(current);
        if current.len() == self.dim {
            return;
        }
        for i in from..self.len() {
            let next = current.insert(i);
            if self.rank_unchecked(next, scratch) == next.len() {
                self.extend_independent(next, i + 1, out, scratch);
            }
        }
    }

    /// Maximal independent sets in lexicographic order.
    pub fn bases(&self) -> Vec<IndexSet> {
        let r = self.full_rank();
        let mut bases: Vec<IndexSet> = self.independent_sets().into_iter().filter(|s| s.len() == r).collect();
        bases.sort_by(|a, b| self.lex_cmp(*a, *b));
        bases
    }

    /// gcd of all maximal minors of the matrix with columns `I`; `g(∅) = 1`.
    pub fn g(&self, set: IndexSet) -> Result<BigInt, MatroidError> {
        self.check(set)?;
        let k = set.len();
        if k == 0 {
            return Ok(BigInt::one());
        }
        let m = self.column_matrix(set);
        let mut acc = BigInt::zero();
        for rows in IndexSet::full(self.dim).subsets().filter(|r| r.len() == k) {
            let minor: linalg::IntMatrix = rows.iter().map(|r| m[r].clone()).collect();
            acc = acc.gcd(&linalg::determinant(&minor));
            if acc.is_one() {
                break;
            }
        }
        if acc.is_zero() {
            return Err(MatroidError::Dependent(set));
        }
        Ok(acc)
    }

    /// True iff removing any single element keeps the full rank.
    pub fn is_coloop_free(&self) -> bool {
        let r = self.full_rank();
        let mut scratch = Vec::new();
        (0..self.len()).all(|i| self.rank_unchecked(self.ground_set().remove(i), &mut scratch) == r)
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> IndexSet {
        let r = self.full_rank();
        let mut scratch = Vec::new();
        (0..self.len())
            .filter(|&i| self.rank_unchecked(self.ground_set().remove(i), &mut scratch) < r)
            .collect()
    }

    /// The lexicographically least basis containing `I`, by greedy completion.
    pub fn min_basis_containing(&self, set: IndexSet) -> Result<IndexSet, MatroidError> {
        if !self.is_independent(set)? {
            return Err(MatroidError::Dependent(set));
        }
        let mut scratch = Vec::new();
        let mut current = set;
        for i in self.ordered(self.ground_set()) {
            if current.contains(i) {
                continue;
            }
            let next = current.insert(i);
            if self.rank_unchecked(next, &mut scratch) == next.len() {
                current = next;
            }
        }
        Ok(current)
    }

    /// Internally passive elements: `i ∈ B` exchangeable for a smaller
    /// `j ∉ B` with `B - i + j` again a basis.
    pub fn internally_passive(&self, basis: IndexSet) -> Result<IndexSet, MatroidError> {
        self.check(basis)?;
        let r = self.full_rank();
        let mut scratch = Vec::new();
        if basis.len() != r || self.rank_unchecked(basis, &mut scratch) != r {
            return Err(MatroidError::NotABasis(basis));
        }
        let outside = self.ground_set().difference(basis);
        Ok(basis
            .iter()
            .filter(|&i| {
                outside.iter().any(|j| {
                    self.precedes(j, i) && self.rank_unchecked(basis.remove(i).insert(j), &mut scratch) == r
                })
            })
            .collect())
    }
}

/// Cached bases and passivity data for repeated queries on one configuration.
#[derive(Clone, Debug)]
pub struct Matroid {
    config: VectorConfiguration,
    rank: usize,
    independent: Vec<IndexSet>,
    bases: Vec<IndexSet>,
    passive: Vec<IndexSet>,
    basis_lookup: HashSet<IndexSet>,
}

impl Matroid {
    pub fn new(config: &VectorConfiguration) -> Self {
        let independent = config.independent_sets();
        let bases = config.bases();
        let passive = bases
            .iter()
            .map(|&b| config.internally_passive(b).expect("enumerated basis"))
            .collect();
        Matroid {
            config: config.clone(),
            rank: config.full_rank(),
            basis_lookup: bases.iter().copied().collect(),
            independent,
            bases,
            passive,
        }
    }

    pub fn config(&self) -> &VectorConfiguration {
        &self.config
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn independent_sets(&self) -> &[IndexSet] {
        &self.independent
    }

    pub fn bases(&self) -> &[IndexSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: IndexSet) -> bool {
        self.basis_lookup.contains(&s)
    }

    /// `(B, IP(B))` pairs in lexicographic basis order.
    pub fn bases_with_passive(&self) -> impl Iterator<Item = (IndexSet, IndexSet)> + '_ {
        self.bases.iter().copied().zip(self.passive.iter().copied())
    }

    /// `⌊I⌋` read off the cached lexicographic basis list.
    pub fn floor(&self, set: IndexSet) -> Option<IndexSet> {
        self.bases.iter().copied().find(|b| set.is_subset(*b))
    }
}
