//! Bounded nondecreasing sequences and the pairs built from them.
//!
//! A [`BoundedSeq`] of length `k + 1` is a nondecreasing tuple of naturals;
//! a [`SymbolPair`] is two such sequences of the same length. Everything else
//! in the crate (family predicates, decompositions, orbit labels) is phrased
//! in terms of these two values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest pair size accepted by the constructors.
pub const MAX_PAIR_SIZE: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BoundedSeq(Vec<u32>);

impl BoundedSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        Self::checked(entries, "a")
    }

    fn checked(entries: Vec<u32>, component: &'static str) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(i) = entries.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotNondecreasing { component, index: i + 1 });
        }
        Ok(BoundedSeq(entries))
    }

    pub fn zeros(len: usize) -> Self {
        BoundedSeq(vec![0; len.max(1)])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// The bound index `k`; the sequence has `k + 1` entries.
    pub fn k(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn padded(&self, m: usize) -> Self {
        let mut v = vec![0; m];
        v.extend_from_slice(&self.0);
        BoundedSeq(v)
    }

    fn plus(&self, other: &Self) -> Self {
        BoundedSeq(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }
}

impl fmt::Display for BoundedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A pair `(a, a')` of equal-length nondecreasing sequences.
///
/// Ordering is lexicographic: `a` first, then `a'`, each entrywise from the
/// left.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct SymbolPair {
    a: BoundedSeq,
    a_prime: BoundedSeq,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    a: Vec<u32>,
    a_prime: Vec<u32>,
}

impl TryFrom<RawPair> for SymbolPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        make_pair(raw.a, raw.a_prime)
    }
}

/// Validated constructor for a [`SymbolPair`].
pub fn make_pair(a: Vec<u32>, a_prime: Vec<u32>) -> Result<SymbolPair> {
    let a = BoundedSeq::checked(a, "a")?;
    let a_prime = BoundedSeq::checked(a_prime, "a_prime")?;
    SymbolPair::from_parts(a, a_prime)
}

impl SymbolPair {
    pub fn from_parts(a: BoundedSeq, a_prime: BoundedSeq) -> Result<Self> {
        if a.len() != a_prime.len() {
            return Err(Error::LengthMismatch { left: a.len(), right: a_prime.len() });
        }
        let size = a.total() + a_prime.total();
        if size > MAX_PAIR_SIZE {
            return Err(Error::SizeOverflow { max: MAX_PAIR_SIZE });
        }
        Ok(SymbolPair { a, a_prime })
    }

    /// Pair with `len` zero entries in each component (`len` is clamped to 1).
    pub fn zero(len: usize) -> Self {
        SymbolPair { a: BoundedSeq::zeros(len), a_prime: BoundedSeq::zeros(len) }
    }

    /// Builds a pair without validation. Callers guarantee both slices are
    /// nondecreasing, nonempty, and of equal length.
    pub(crate) fn from_vecs_unchecked(a: Vec<u32>, a_prime: Vec<u32>) -> Self {
        debug_assert!(!a.is_empty() && a.len() == a_prime.len());
        debug_assert!(a.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(a_prime.windows(2).all(|w| w[0] <= w[1]));
        SymbolPair { a: BoundedSeq(a), a_prime: BoundedSeq(a_prime) }
    }

    pub fn a(&self) -> &[u32] {
        self.a.entries()
    }

    pub fn a_prime(&self) -> &[u32] {
        self.a_prime.entries()
    }

    pub fn first(&self) -> &BoundedSeq {
        &self.a
    }

    pub fn second(&self) -> &BoundedSeq {
        &self.a_prime
    }

    pub fn k(&self) -> usize {
        self.a.k()
    }

    /// Number of entries in each component (`k + 1`).
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|a| + |a'|`.
    pub fn size(&self) -> u64 {
        self.a.total() + self.a_prime.total()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.a_prime.is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        self.a == self.a_prime
    }

    /// True if both components start with 0.
    pub fn has_leading_zero_pair(&self) -> bool {
        self.a()[0] == 0 && self.a_prime()[0] == 0
    }

    /// Canonical length `n + 2` (so `k = n + 1`; `n = 0` gives length 2).
    pub fn canonical_len(size: u64) -> usize {
        size as usize + 2
    }

    pub fn is_normalized(&self) -> bool {
        self.len() == Self::canonical_len(self.size())
    }

    /// Entrywise sum of both components.
    pub fn sum(&self, other: &SymbolPair) -> Result<SymbolPair> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let size = self.size() + other.size();
        if size > MAX_PAIR_SIZE {
            return Err(Error::SizeOverflow { max: MAX_PAIR_SIZE });
        }
        Ok(SymbolPair { a: self.a.plus(&other.a), a_prime: self.a_prime.plus(&other.a_prime) })
    }

    /// Prefixes `m` zeros to both components.
    pub fn pad(&self, m: usize) -> SymbolPair {
        if m == 0 {
            return self.clone();
        }
        SymbolPair { a: self.a.padded(m), a_prime: self.a_prime.padded(m) }
    }

    /// Pads with leading zeros up to `len` entries; never truncates.
    pub fn pad_to(&self, len: usize) -> SymbolPair {
        self.pad(len.saturating_sub(self.len()))
    }

    /// The stable-range representative with `k = n + 1`.
    pub fn normalize(&self) -> Result<SymbolPair> {
        let target = Self::canonical_len(self.size());
        let len = self.len();
        if len <= target {
            return Ok(self.pad(target - len));
        }
        let excess = len - target;
        if self.a()[..excess].iter().chain(&self.a_prime()[..excess]).any(|&x| x != 0) {
            return Err(Error::NotStabilizable);
        }
        Ok(SymbolPair {
            a: BoundedSeq(self.a()[excess..].to_vec()),
            a_prime: BoundedSeq(self.a_prime()[excess..].to_vec()),
        })
    }

    /// Renders each component as a partition (nonzero parts, largest first).
    pub fn partitions(&self) -> (Vec<u32>, Vec<u32>) {
        let parts = |s: &[u32]| s.iter().rev().copied().filter(|&x| x > 0).collect();
        (parts(self.a()), parts(self.a_prime()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pair serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<SymbolPair, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for SymbolPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.a_prime)
    }
}
