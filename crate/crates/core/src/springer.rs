//! Orbit-set parametrizations for the classical types `B`, `C`, `D` in
//! characteristic 2, and the recorded deltas for the exceptional types.
//!
//! Labels are symbol pairs at the canonical `k = n + 1`. In type `D` a
//! diagonal pair (`a = a'`) stands for two labels, marked `I` and `II`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decomp::Series;
use crate::error::{Error, Result};
use crate::family::{check_cap, enumerate, member, Family};
use crate::seq::SymbolPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassicalType {
    B,
    C,
    D,
}

impl ClassicalType {
    pub const ALL: [ClassicalType; 3] = [ClassicalType::B, ClassicalType::C, ClassicalType::D];

    /// Smallest rank covered by the parametrization.
    pub fn min_rank(self) -> usize {
        match self {
            ClassicalType::B | ClassicalType::C => 2,
            ClassicalType::D => 4,
        }
    }

    pub fn family(self, side: Side) -> Family {
        match (self, side) {
            (ClassicalType::C, Side::Algebra) => Family::C,
            (ClassicalType::B, Side::Algebra) => Family::BC,
            (ClassicalType::D, Side::Algebra) => Family::DD,
            (ClassicalType::B | ClassicalType::C, Side::Group) => Family::B2C,
            (ClassicalType::D, Side::Group) => Family::D2D,
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalType::B => "B",
            ClassicalType::C => "C",
            ClassicalType::D => "D",
        })
    }
}

impl FromStr for ClassicalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" | "B" => Ok(ClassicalType::B),
            "c" | "C" => Ok(ClassicalType::C),
            "d" | "D" => Ok(ClassicalType::D),
            _ => Err(Error::Parse { what: "classical type", input: s.to_string() }),
        }
    }
}

/// Unipotent classes in the group, or nilpotent orbits in its Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Group,
    Algebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub series: ClassicalType,
    pub rank: usize,
}

impl GroupType {
    pub fn new(series: ClassicalType, rank: usize) -> Self {
        GroupType { series, rank }
    }

    pub fn in_range(&self) -> bool {
        self.rank >= self.series.min_rank()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FiberMarker {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrbitLabel {
    pub pair: SymbolPair,
    pub split: Option<FiberMarker>,
    pub series: ClassicalType,
    pub n: u64,
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pair)?;
        match self.split {
            Some(FiberMarker::I) => write!(f, " I"),
            Some(FiberMarker::II) => write!(f, " II"),
            None => Ok(()),
        }
    }
}

fn labels_for(pair: SymbolPair, series: ClassicalType) -> Vec<OrbitLabel> {
    let n = pair.size();
    if series == ClassicalType::D && pair.is_diagonal() {
        [FiberMarker::I, FiberMarker::II]
            .into_iter()
            .map(|m| OrbitLabel { pair: pair.clone(), split: Some(m), series, n })
            .collect()
    } else {
        vec![OrbitLabel { pair, split: None, series, n }]
    }
}

/// Type-`D` labels lying over `p`: two for a diagonal pair, one otherwise.
pub fn zeta_fiber(p: &SymbolPair) -> Result<Vec<OrbitLabel>> {
    if !member(p, Family::DD) {
        return Err(Error::NotInFamily { family: Family::DD });
    }
    Ok(labels_for(p.clone(), ClassicalType::D))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpringerSet {
    pub group: GroupType,
    pub side: Side,
    /// Set when the rank is below the range the parametrization is stated for.
    pub below_min_rank: bool,
    pub labels: Vec<OrbitLabel>,
}

/// Labels parametrizing unipotent classes (`Side::Group`) or nilpotent
/// orbits (`Side::Algebra`) for `g` in characteristic 2.
pub fn springer_set(g: GroupType, side: Side) -> Result<SpringerSet> {
    let pairs = enumerate(g.series.family(side), g.rank)?;
    let labels = pairs.into_iter().flat_map(|p| labels_for(p, g.series)).collect();
    Ok(SpringerSet { group: g, side, below_min_rank: !g.in_range(), labels })
}

/// The set built from the terminal family of `series` by repeatedly adding
/// smaller members, with every size up to `n` memoized.
///
/// * `A`: `T(n) = C1C(n) ∪ { x + y : x ∈ T(m), y ∈ T(m'), m, m' >= 1 }`
/// * `B`: `T(n) = B1C(n) ∪ { x + y : x ∈ T(m), y ∈ T_D(m'), m' >= 2 }`
/// * `D`: `T(n) = D1D(n) ∪ { x + y : x ∈ T(m), y ∈ T(m'), m, m' >= 2 }`
///
/// Sums are formed at the common `k = n + 1`, which is also the `k` of the
/// returned pairs.
pub fn t2_fixed_point(series: Series, n: usize) -> Result<Vec<SymbolPair>> {
    check_cap(n)?;
    let len = SymbolPair::canonical_len(n as u64);
    let mut tables = FixedPointTables { len, a: Vec::new(), b: Vec::new(), d: Vec::new() };
    Ok(tables.get(series, n)?.iter().cloned().collect())
}

struct FixedPointTables {
    len: usize,
    a: Vec<BTreeSet<SymbolPair>>,
    b: Vec<BTreeSet<SymbolPair>>,
    d: Vec<BTreeSet<SymbolPair>>,
}

impl FixedPointTables {
    fn table(&mut self, series: Series) -> &mut Vec<BTreeSet<SymbolPair>> {
        match series {
            Series::A => &mut self.a,
            Series::B => &mut self.b,
            Series::D => &mut self.d,
        }
    }

    fn get(&mut self, series: Series, n: usize) -> Result<&BTreeSet<SymbolPair>> {
        while self.table(series).len() <= n {
            let size = self.table(series).len();
            let next = self.build(series, size)?;
            self.table(series).push(next);
        }
        Ok(&self.table(series)[n])
    }

    fn build(&mut self, series: Series, n: usize) -> Result<BTreeSet<SymbolPair>> {
        let len = self.len;
        let mut set: BTreeSet<SymbolPair> = enumerate(series.terminal_family(), n)?
            .into_iter()
            .map(|p| p.pad_to(len))
            .collect();
        let (min_left, min_right) = (series.min_left() as usize, series.min_right() as usize);
        if n < min_left + min_right {
            return Ok(set);
        }
        for m in min_left..=n - min_right {
            let m_prime = n - m;
            let lefts: Vec<SymbolPair> = self.get(series, m)?.iter().cloned().collect();
            let rights: Vec<SymbolPair> =
                self.get(series.right_series(), m_prime)?.iter().cloned().collect();
            for x in &lefts {
                for y in &rights {
                    set.insert(x.sum(y)?);
                }
            }
        }
        Ok(set)
    }
}

/// Identity map from group-side labels into algebra-side labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauMap {
    pub group: GroupType,
    pub below_min_rank: bool,
    pub mapping: Vec<(OrbitLabel, OrbitLabel)>,
    /// Algebra-side labels not in the image.
    pub unhit: Vec<OrbitLabel>,
    pub injective: bool,
    pub total: bool,
}

impl TauMap {
    pub fn is_bijective(&self) -> bool {
        self.injective && self.total && self.unhit.is_empty()
    }
}

pub fn tau(g: GroupType) -> Result<TauMap> {
    let domain = springer_set(g, Side::Group)?;
    let codomain = springer_set(g, Side::Algebra)?;
    let targets: BTreeSet<&OrbitLabel> = codomain.labels.iter().collect();
    let total = domain.labels.iter().all(|l| targets.contains(l));
    let mapping: Vec<_> = domain
        .labels
        .iter()
        .filter(|l| targets.contains(l))
        .map(|l| (l.clone(), l.clone()))
        .collect();
    let image: BTreeSet<&OrbitLabel> = mapping.iter().map(|(_, t)| t).collect();
    let injective = image.len() == mapping.len();
    let unhit = codomain.labels.iter().filter(|l| !image.contains(l)).cloned().collect();
    Ok(TauMap { group: g, below_min_rank: !g.in_range(), mapping, unhit, injective, total })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub series: ClassicalType,
    pub n: usize,
    pub card_group: usize,
    pub card_algebra: usize,
    pub difference: i64,
}

/// Label counts on both sides for every rank from the series minimum up to
/// `max_n`.
pub fn counts(series: ClassicalType, max_n: usize) -> Result<Vec<CountRow>> {
    check_cap(max_n)?;
    (series.min_rank()..=max_n)
        .map(|n| {
            let g = GroupType::new(series, n);
            let card_group = springer_set(g, Side::Group)?.labels.len();
            let card_algebra = springer_set(g, Side::Algebra)?.labels.len();
            Ok(CountRow {
                series,
                n,
                card_group,
                card_algebra,
                difference: card_algebra as i64 - card_group as i64,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExceptionalType {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 5] =
        [ExceptionalType::G2, ExceptionalType::F4, ExceptionalType::E6, ExceptionalType::E7, ExceptionalType::E8];

    pub fn bad_primes(self) -> &'static [u32] {
        match self {
            ExceptionalType::G2 | ExceptionalType::F4 | ExceptionalType::E6 | ExceptionalType::E7 => &[2, 3],
            ExceptionalType::E8 => &[2, 3, 5],
        }
    }
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionalType::G2 => "G2",
            ExceptionalType::F4 => "F4",
            ExceptionalType::E6 => "E6",
            ExceptionalType::E7 => "E7",
            ExceptionalType::E8 => "E8",
        })
    }
}

impl FromStr for ExceptionalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExceptionalType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse { what: "exceptional type", input: s.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEntry {
    pub name: String,
    pub b_value: u32,
}

/// Representations present on the algebra side but not the group side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalDelta {
    pub group_type: ExceptionalType,
    pub p: u32,
    pub added: Vec<DeltaEntry>,
}

pub fn exceptional_delta(t: ExceptionalType, p: u32) -> Result<ExceptionalDelta> {
    use ExceptionalType::*;
    let added: &[(&str, u32)] = match (t, p) {
        (G2, 2 | 3) | (F4, 3) | (E6, 2 | 3) | (E7, 3) | (E8, 3 | 5) => &[],
        (F4, 2) => &[("1_3", 12), ("2_3", 4)],
        (E7, 2) => &[("84'_a", 15)],
        (E8, 2) => &[("50_x", 8), ("700_xx", 16)],
        _ => return Err(Error::UnknownCase { group: t.to_string(), p }),
    };
    Ok(ExceptionalDelta {
        group_type: t,
        p,
        added: added.iter().map(|&(name, b_value)| DeltaEntry { name: name.to_string(), b_value }).collect(),
    })
}
