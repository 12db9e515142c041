//! Exponent vectors and subsets of the variable index set `[n]`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Index;

use crate::error::{Error, Result};

/// Largest supported number of variables.
///
/// Several routines enumerate subsets of `[n]`, so in practice `n` stays far
/// below this bound.
pub const MAX_VARS: usize = 32;

pub(crate) fn check_var_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::VariableCount(n))
    } else {
        Ok(())
    }
}

/// A subset of `{0, ..., n-1}` stored as a bit mask.
///
/// Ordered by cardinality first, then lexicographically on the sorted
/// elements, which is the face order used for boundary matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        VarSet::full(n).difference(self)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, including `∅` and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VarSet(cur))
        })
    }

    /// Subsets of `self` with exactly `k` elements, in canonical order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VarSet> {
        let mut out: Vec<VarSet> = self.subsets().filter(|s| s.len() == k).collect();
        out.sort();
        out
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal if self.0 != other.0 => {
                // The set holding the smallest element of the symmetric
                // difference is lexicographically first.
                let low = (self.0 ^ other.0).trailing_zeros();
                if self.0 >> low & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An integer vector of length `n`.
///
/// Non-negative vectors are monomials `x^a`; signed vectors are `Z^n`-degrees.
/// The derived order is lexicographic, which is the canonical generator order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<i32>);

impl Exponent {
    pub fn new(entries: Vec<i32>) -> Self {
        Exponent(entries)
    }

    /// Validates a monomial of length `n`.
    pub fn monomial(entries: Vec<i32>, n: usize) -> Result<Self> {
        if entries.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: entries.len(),
            });
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeExponent { index, value });
        }
        Ok(Exponent(entries))
    }

    pub fn zeros(n: usize) -> Self {
        Exponent(alloc::vec![0; n])
    }

    /// `x_{i_1}^{e} ... x_{i_k}^{e}` style constructor: `value` on `set`, zero elsewhere.
    pub fn indicator(n: usize, set: VarSet, value: i32) -> Self {
        Exponent((0..n).map(|i| if set.contains(i) { value } else { 0 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i32> {
        self.0
    }

    pub fn is_monomial(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&v| v <= 1)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&v| v as i64).sum()
    }

    /// Coordinates with a nonzero entry.
    pub fn support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `H_a = {i : a(i) > 0}`.
    pub fn positive_support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `G_a = {i : a(i) < 0}`.
    pub fn negative_support(&self) -> VarSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `a⁺(i) = max(a(i), 0)`.
    pub fn positive_part(&self) -> Exponent {
        Exponent(self.0.iter().map(|&v| v.max(0)).collect())
    }

    pub fn negated(&self) -> Exponent {
        Exponent(self.0.iter().map(|&v| -v).collect())
    }

    /// Coordinatewise `self ≤ other`; for monomials, `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Entries at the coordinates in `keep`, in increasing coordinate order.
    pub fn restrict(&self, keep: VarSet) -> Exponent {
        Exponent(keep.iter().map(|i| self.0[i]).collect())
    }

    /// Same vector with the coordinates in `set` replaced by zero.
    pub fn zero_out(&self, set: VarSet) -> Exponent {
        Exponent(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &v)| if set.contains(i) { 0 } else { v })
                .collect(),
        )
    }
}

impl Index<usize> for Exponent {
    type Output = i32;

    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<Vec<i32>> for Exponent {
    fn from(v: Vec<i32>) -> Self {
        Exponent(v)
    }
}
