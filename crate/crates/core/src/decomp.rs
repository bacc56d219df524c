//! Constructive decomposition of pairs into sums of smaller family members.
//!
//! Each [`Series`] fixes an input family, a terminal family, and the families
//! (with minimum sizes) that the two summands of a split must lie in:
//!
//! | series | input | terminal | left, `m` | right, `m'` |
//! |--------|-------|----------|-----------|-------------|
//! | `A`    | `C`   | `C1C`    | `C`, ≥ 1  | `C`, ≥ 1    |
//! | `B`    | `BC`  | `B1C`    | `BC`, ≥ 0 | `DD`, ≥ 2   |
//! | `D`    | `DD`  | `D1D`    | `DD`, ≥ 2 | `DD`, ≥ 2   |
//!
//! [`decompose_step`] follows a fixed case analysis that peels a 0/1 pair off
//! the top of the input. [`oracle_decompositions`] lists every valid split by
//! brute force and is used to cross-check it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{check_cap, member, Family};
use crate::seq::SymbolPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    A,
    B,
    D,
}

impl Series {
    pub const ALL: [Series; 3] = [Series::A, Series::B, Series::D];

    pub fn tag(self) -> &'static str {
        match self {
            Series::A => "a",
            Series::B => "b",
            Series::D => "d",
        }
    }

    pub fn input_family(self) -> Family {
        match self {
            Series::A => Family::C,
            Series::B => Family::BC,
            Series::D => Family::DD,
        }
    }

    pub fn terminal_family(self) -> Family {
        match self {
            Series::A => Family::C1C,
            Series::B => Family::B1C,
            Series::D => Family::D1D,
        }
    }

    pub fn left_family(self) -> Family {
        self.input_family()
    }

    pub fn right_family(self) -> Family {
        match self {
            Series::A => Family::C,
            Series::B | Series::D => Family::DD,
        }
    }

    /// Series used to keep decomposing the right summand.
    pub fn right_series(self) -> Series {
        match self {
            Series::A => Series::A,
            Series::B | Series::D => Series::D,
        }
    }

    pub fn min_left(self) -> u64 {
        match self {
            Series::A => 1,
            Series::B => 0,
            Series::D => 2,
        }
    }

    pub fn min_right(self) -> u64 {
        match self {
            Series::A => 1,
            Series::B | Series::D => 2,
        }
    }

    fn accepts(self, split: &Split) -> bool {
        split.m >= self.min_left()
            && split.m_prime >= self.min_right()
            && member(&split.left, self.left_family())
            && member(&split.right, self.right_family())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Series::ALL
            .into_iter()
            .find(|x| x.tag() == s)
            .ok_or_else(|| Error::Parse { what: "series", input: s.to_string() })
    }
}

/// Which branch of the case analysis produced a split.
///
/// `x1` peels `1`s off both components starting at independent positions,
/// `x2` peels them off at a common position (only one component in the `A`
/// series), and `x3` is the terminal branch. Letters `a`, `b`, `c` name the
/// `A`, `B`, `D` series respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProofCase {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
}

impl ProofCase {
    pub fn tag(self) -> &'static str {
        match self {
            ProofCase::A1 => "a1",
            ProofCase::A2 => "a2",
            ProofCase::A3 => "a3",
            ProofCase::B1 => "b1",
            ProofCase::B2 => "b2",
            ProofCase::B3 => "b3",
            ProofCase::C1 => "c1",
            ProofCase::C2 => "c2",
            ProofCase::C3 => "c3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Split {
    pub left: SymbolPair,
    pub right: SymbolPair,
    pub m: u64,
    pub m_prime: u64,
}

impl Split {
    fn new(left: SymbolPair, right: SymbolPair) -> Self {
        let (m, m_prime) = (left.size(), right.size());
        Split { left, right, m, m_prime }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Decomposition {
    Terminal,
    Split {
        #[serde(flatten)]
        split: Split,
        proof_case: ProofCase,
    },
}

impl Decomposition {
    pub fn split(&self) -> Option<&Split> {
        match self {
            Decomposition::Terminal => None,
            Decomposition::Split { split, .. } => Some(split),
        }
    }

    pub fn is_terminal(&self) -> bool {
        matches!(self, Decomposition::Terminal)
    }
}

/// Splits `c` as `left + right`, where `right` has `1`s in `a` from index
/// `from_a` on and `1`s in `a'` from `from_a_prime` on. Indices past `k`
/// mean "no ones".
fn peel(c: &SymbolPair, from_a: usize, from_a_prime: usize) -> (SymbolPair, SymbolPair) {
    let ones = |from: usize| -> Vec<u32> { (0..c.len()).map(|i| u32::from(i >= from)).collect() };
    let (b, b_prime) = (ones(from_a), ones(from_a_prime));
    let sub = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(p, q)| p - q).collect() };
    let left = SymbolPair::from_vecs_unchecked(sub(c.a(), &b), sub(c.a_prime(), &b_prime));
    (left, SymbolPair::from_vecs_unchecked(b, b_prime))
}

fn internal(series: Series, detail: impl Into<String>) -> Error {
    Error::Internal { series, detail: detail.into() }
}

fn split_a(c: &SymbolPair) -> Result<(Split, ProofCase)> {
    let (a, a_prime) = (c.a(), c.a_prime());
    let k = c.k();
    let rise = |v: &[u32]| (0..k).find(|&s| v[s] < v[s + 1]);
    let (from_a, from_a_prime, case) = if let Some(s) = rise(a) {
        (s + 1, k + 1, ProofCase::A1)
    } else if let Some(s) = rise(a_prime) {
        (k + 1, s + 1, ProofCase::A2)
    } else {
        return Err(internal(Series::A, "both components constant"));
    };
    let (left, right) = peel(c, from_a, from_a_prime);
    if left.is_zero() {
        return Err(internal(Series::A, "peeled part is the whole pair"));
    }
    Ok((Split::new(left, right), case))
}

/// Locates the peel positions for the `B` (`gap = 2`) and `D` (`gap = 0`)
/// series, where `a'_i <= a_i + gap` holds throughout.
fn locate_bd(c: &SymbolPair, series: Series) -> Result<(usize, usize, ProofCase)> {
    let (a, a_prime) = (c.a(), c.a_prime());
    let k = c.k();
    let gap = if series == Series::B { 2 } else { 0 };
    let (shifted, equal) = match series {
        Series::B => (ProofCase::B1, ProofCase::B2),
        _ => (ProofCase::C1, ProofCase::C2),
    };
    let l = a
        .iter()
        .position(|&x| x > 0)
        .ok_or_else(|| internal(series, "first component is zero"))?;
    if l == 0 {
        return Err(internal(series, "no leading zero"));
    }
    // largest s >= l with a'_s < a_s + gap
    if let Some(s) = (l..=k).rev().find(|&s| a_prime[s] < a[s] + gap) {
        // t - 1 is the largest i in [l, s] with equality, else t = l
        let t = (l..=s).rev().find(|&i| a_prime[i] == a[i] + gap).map_or(l, |i| i + 1);
        return Ok((t, s + 1, shifted));
    }
    // a'_i = a_i + gap on [l, k]; largest s in [l, k-1] with a'_s < a'_{s+1}
    if let Some(s) = (l..k).rev().find(|&s| a_prime[s] < a_prime[s + 1]) {
        return Ok((s + 1, s + 1, equal));
    }
    Err(internal(series, "no peel position found"))
}

fn split_bd(c: &SymbolPair, series: Series) -> Result<(Split, ProofCase)> {
    let terminal = series.terminal_family();
    let mut cur = c.clone();
    // single units peeled from the top of `a`, to be returned to the right part
    let mut carried = 0u32;
    let mut first_case = None;
    loop {
        if carried > 0 && member(&cur, terminal) {
            return Err(internal(series, "reduced pair is terminal"));
        }
        let (from_a, from_a_prime, case) = locate_bd(&cur, series)?;
        let case = *first_case.get_or_insert(case);
        let (left, right) = peel(&cur, from_a, from_a_prime);
        let r = right.size();
        if r == 1 {
            cur = left;
            carried += 1;
            continue;
        }
        if series == Series::D && r + 2 > cur.size() {
            return Err(internal(series, format!("left part too small (r = {r})")));
        }
        let right = if carried == 0 {
            right
        } else {
            let mut a = right.a().to_vec();
            *a.last_mut().expect("nonempty") += carried;
            SymbolPair::from_vecs_unchecked(a, right.a_prime().to_vec())
        };
        return Ok((Split::new(left, right), case));
    }
}

/// One decomposition step for `p` in `series`.
///
/// Returns [`Decomposition::Terminal`] exactly when `p` lies in the series'
/// terminal family. Otherwise returns a split whose parts satisfy the series'
/// family and size constraints; the split is re-validated before returning.
///
/// `p` must start with a zero entry in both components; a normalized pair
/// always does.
pub fn decompose_step(p: &SymbolPair, series: Series) -> Result<Decomposition> {
    if !p.has_leading_zero_pair() {
        return Err(Error::NotNormalized);
    }
    if !member(p, series.input_family()) {
        return Err(Error::NotInFamily { family: series.input_family() });
    }
    if member(p, series.terminal_family()) {
        return Ok(Decomposition::Terminal);
    }
    let (split, proof_case) = match series {
        Series::A => split_a(p)?,
        Series::B | Series::D => split_bd(p, series)?,
    };
    if !series.accepts(&split) || split.left.sum(&split.right)? != *p {
        return Err(internal(series, format!("invalid split {} + {}", split.left, split.right)));
    }
    Ok(Decomposition::Split { split, proof_case })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafRole {
    /// The input itself was terminal.
    Terminal,
    /// Produced by at least one split.
    Atom,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Leaf {
    pub pair: SymbolPair,
    pub series: Series,
    pub family: Family,
    pub role: LeafRole,
}

/// Repeats [`decompose_step`] until every part is terminal.
///
/// Left parts keep the input series; right parts continue with
/// [`Series::right_series`]. Leaves are listed left to right and sum to `p`.
pub fn atomize(p: &SymbolPair, series: Series) -> Result<Vec<Leaf>> {
    let mut leaves = Vec::new();
    atomize_into(p, series, true, &mut leaves)?;
    Ok(leaves)
}

fn atomize_into(p: &SymbolPair, series: Series, top: bool, out: &mut Vec<Leaf>) -> Result<()> {
    match decompose_step(p, series)? {
        Decomposition::Terminal => {
            let role = if top { LeafRole::Terminal } else { LeafRole::Atom };
            out.push(Leaf { pair: p.clone(), series, family: series.terminal_family(), role });
            Ok(())
        }
        Decomposition::Split { split, .. } => {
            atomize_into(&split.left, series, false, out)?;
            atomize_into(&split.right, series.right_series(), false, out)
        }
    }
}

/// All ways to write `c` as `x + y` with both `x` and `y` nondecreasing.
fn sequence_splits(c: &[u32]) -> Vec<Vec<u32>> {
    fn go(c: &[u32], x: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = x.len();
        if i == c.len() {
            out.push(x.clone());
            return;
        }
        let (lo, hi) = if i == 0 { (0, c[0]) } else { (x[i - 1], x[i - 1] + (c[i] - c[i - 1])) };
        for v in lo..=hi {
            x.push(v);
            go(c, x, out);
            x.pop();
        }
    }
    let mut out = Vec::new();
    go(c, &mut Vec::with_capacity(c.len()), &mut out);
    out
}

/// Every split of `p` accepted by `series`, found by trying all entrywise
/// splits of both components. Sorted by split.
pub fn oracle_decompositions(p: &SymbolPair, series: Series) -> Result<Vec<Split>> {
    check_cap(p.size() as usize)?;
    if !member(p, series.input_family()) {
        return Err(Error::NotInFamily { family: series.input_family() });
    }
    let minus = |c: &[u32], x: &[u32]| -> Vec<u32> { c.iter().zip(x).map(|(p, q)| p - q).collect() };
    let xs = sequence_splits(p.a());
    let xs_prime = sequence_splits(p.a_prime());
    let mut out = Vec::new();
    for x in &xs {
        for x_prime in &xs_prime {
            let left = SymbolPair::from_vecs_unchecked(x.clone(), x_prime.clone());
            let right = SymbolPair::from_vecs_unchecked(minus(p.a(), x), minus(p.a_prime(), x_prime));
            let split = Split::new(left, right);
            if series.accepts(&split) {
                out.push(split);
            }
        }
    }
    out.sort();
    Ok(out)
}
