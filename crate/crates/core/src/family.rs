//! The nine inequality-constrained families of pairs, their exhaustive
//! enumerators, and the closure checker for pair addition.
//!
//! Every predicate is evaluated at the pair's own `k`. Padding with leading
//! zero pairs never changes membership, so callers only need to normalize
//! when they compare against enumerator output (which is always at the
//! canonical `k = n + 1`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{as_sequence, partitions};
use crate::seq::SymbolPair;

/// Largest size accepted by the exhaustive routines of this crate.
pub const ENUMERATION_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// All pairs of the given size.
    #[serde(rename = "c")]
    C,
    /// `|a| > |a'|` or `a = a'`.
    #[serde(rename = "d")]
    D,
    /// `a'_i <= a_i + 2`.
    #[serde(rename = "b")]
    BC,
    /// `BC` and `a_i <= a'_{i+1}`.
    #[serde(rename = "b1")]
    B1C,
    /// `BC` and `a_i <= a'_{i+1} + 2`.
    #[serde(rename = "b2")]
    B2C,
    /// `a_i <= a'_{i+1} + 1` and `a'_i <= a_i + 1`.
    #[serde(rename = "c1")]
    C1C,
    /// `D` and `a'_i <= a_i`.
    #[serde(rename = "dd")]
    DD,
    /// `DD` and `a_i <= a'_{i+1} + 2`.
    #[serde(rename = "d1")]
    D1D,
    /// `DD` and `a_i <= a'_{i+1} + 4`.
    #[serde(rename = "d2")]
    D2D,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::C,
        Family::D,
        Family::BC,
        Family::B1C,
        Family::B2C,
        Family::C1C,
        Family::DD,
        Family::D1D,
        Family::D2D,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::C => "c",
            Family::D => "d",
            Family::BC => "b",
            Family::B1C => "b1",
            Family::B2C => "b2",
            Family::C1C => "c1",
            Family::DD => "dd",
            Family::D1D => "d1",
            Family::D2D => "d2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Parse { what: "family tag", input: s.to_string() })
    }
}

// a'_i <= a_i + slack for every i
fn shifted_below(a: &[u32], a_prime: &[u32], slack: u32) -> bool {
    a.iter().zip(a_prime).all(|(&x, &y)| u64::from(y) <= u64::from(x) + u64::from(slack))
}

// a_i <= a'_{i+1} + slack for i in [0, k-1]
fn interlaced(a: &[u32], a_prime: &[u32], slack: u32) -> bool {
    a.iter().zip(&a_prime[1..]).all(|(&x, &y)| u64::from(x) <= u64::from(y) + u64::from(slack))
}

fn in_d(p: &SymbolPair) -> bool {
    p.first().total() > p.second().total() || p.is_diagonal()
}

/// Membership of `p` in `family`, evaluated at the pair's own `k`.
pub fn member(p: &SymbolPair, family: Family) -> bool {
    let (a, b) = (p.a(), p.a_prime());
    match family {
        Family::C => true,
        Family::D => in_d(p),
        Family::BC => shifted_below(a, b, 2),
        Family::B1C => shifted_below(a, b, 2) && interlaced(a, b, 0),
        Family::B2C => shifted_below(a, b, 2) && interlaced(a, b, 2),
        Family::C1C => interlaced(a, b, 1) && shifted_below(a, b, 1),
        Family::DD => in_d(p) && shifted_below(a, b, 0),
        Family::D1D => in_d(p) && shifted_below(a, b, 0) && interlaced(a, b, 2),
        Family::D2D => in_d(p) && shifted_below(a, b, 0) && interlaced(a, b, 4),
    }
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { requested: n, cap: ENUMERATION_CAP });
    }
    Ok(())
}

/// Every pair of size `n` at `k = n + 1`, sorted.
pub fn all_pairs(n: usize) -> Result<Vec<SymbolPair>> {
    check_cap(n)?;
    let len = SymbolPair::canonical_len(n as u64);
    let tables: Vec<Vec<Vec<u32>>> = (0..=n as u32).map(partitions).collect();
    let mut out = Vec::new();
    for m in 0..=n {
        for lam in &tables[m] {
            for mu in &tables[n - m] {
                out.push(SymbolPair::from_vecs_unchecked(as_sequence(lam, len), as_sequence(mu, len)));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Members of `family` of size `n` at the canonical `k = n + 1`, in pair
/// order.
pub fn enumerate(family: Family, n: usize) -> Result<Vec<SymbolPair>> {
    let mut all = all_pairs(n)?;
    all.retain(|p| member(p, family));
    Ok(all)
}

/// A closure statement `left + right ⊆ target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosureRule {
    pub left: Family,
    pub right: Family,
    pub target: Family,
}

impl ClosureRule {
    pub const fn new(left: Family, right: Family, target: Family) -> Self {
        ClosureRule { left, right, target }
    }

    /// The three addition rules that hold for every size split.
    pub const STATED: [ClosureRule; 3] = [
        ClosureRule::new(Family::C, Family::C, Family::C),
        ClosureRule::new(Family::BC, Family::DD, Family::BC),
        // The source writes the target as an undefined "dC"; "dD" is the
        // only reading consistent with the surrounding chains.
        ClosureRule::new(Family::DD, Family::DD, Family::DD),
    ];
}

impl fmt::Display for ClosureRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}={}", self.left, self.right, self.target)
    }
}

impl FromStr for ClosureRule {
    type Err = Error;

    /// Parses `LEFT+RIGHT=TARGET`, e.g. `b+dd=b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "closure rule", input: s.to_string() };
        let (lhs, target) = s.split_once('=').ok_or_else(bad)?;
        let (left, right) = lhs.split_once('+').ok_or_else(bad)?;
        Ok(ClosureRule {
            left: left.trim().parse().map_err(|_| bad())?,
            right: right.trim().parse().map_err(|_| bad())?,
            target: target.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub rule: ClosureRule,
    pub max_n: usize,
    pub pass: bool,
    /// Number of sums examined before stopping.
    pub checked: u64,
    pub counterexample: Option<(SymbolPair, SymbolPair)>,
}

/// Checks `x + y ∈ target` for all `x ∈ left(m)`, `y ∈ right(m')` with
/// `m + m' <= max_n`, at the common `k = max_n + 1`.
///
/// Pairs are visited by `m`, then `m'`, then `x`, then `y`, each ascending;
/// the first violation in that order is reported.
pub fn verify_closure(rule: ClosureRule, max_n: usize) -> Result<ClosureReport> {
    check_cap(max_n)?;
    let len = SymbolPair::canonical_len(max_n as u64);
    let padded = |f: Family, m: usize| -> Result<Vec<SymbolPair>> {
        Ok(enumerate(f, m)?.into_iter().map(|p| p.pad_to(len)).collect())
    };
    let lefts: Vec<_> = (0..=max_n).map(|m| padded(rule.left, m)).collect::<Result<_>>()?;
    let rights: Vec<_> = (0..=max_n).map(|m| padded(rule.right, m)).collect::<Result<_>>()?;
    let mut checked = 0;
    for (m, xs) in lefts.iter().enumerate() {
        for ys in &rights[..=max_n - m] {
            for x in xs {
                for y in ys {
                    checked += 1;
                    let s = x.sum(y)?;
                    if !member(&s, rule.target) {
                        return Ok(ClosureReport {
                            rule,
                            max_n,
                            pass: false,
                            checked,
                            counterexample: Some((x.clone(), y.clone())),
                        });
                    }
                }
            }
        }
    }
    Ok(ClosureReport { rule, max_n, pass: true, checked, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::make_pair;

    fn pair(a: &[u32], b: &[u32]) -> SymbolPair {
        make_pair(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn member_examples() {
        assert!(member(&pair(&[0, 0, 0], &[0, 0, 2]), Family::BC));
        assert!(!member(&pair(&[0, 0, 1], &[0, 0, 2]), Family::DD));
        for f in Family::ALL {
            for len in 1..5 {
                assert!(member(&SymbolPair::zero(len), f), "{f}");
            }
        }
    }

    #[test]
    fn d_condition() {
        assert!(member(&pair(&[0, 2], &[0, 1]), Family::D));
        assert!(!member(&pair(&[0, 1], &[0, 2]), Family::D));
        assert!(member(&pair(&[0, 1], &[0, 1]), Family::D));
        // equal sizes, different sequences
        assert!(!member(&pair(&[1, 1], &[0, 2]), Family::D));
    }

    #[test]
    fn interlacing_uses_shifted_index() {
        // a_1 = 3 > a'_2 + 2 = 2
        let p = pair(&[0, 3, 3], &[0, 0, 0]);
        assert!(member(&p, Family::DD));
        assert!(!member(&p, Family::D1D));
        assert!(member(&p, Family::D2D));
        // a_k is unconstrained by interlacing
        assert!(member(&pair(&[0, 0, 9], &[0, 0, 0]), Family::D1D));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(Family::C, 2).unwrap().len(), 5);
        assert_eq!(
            enumerate(Family::DD, 2).unwrap(),
            vec![
                pair(&[0, 0, 0, 1], &[0, 0, 0, 1]),
                pair(&[0, 0, 0, 2], &[0, 0, 0, 0]),
                pair(&[0, 0, 1, 1], &[0, 0, 0, 0]),
            ]
        );
        assert_eq!(enumerate(Family::C, 0).unwrap(), vec![SymbolPair::zero(2)]);
        assert!(matches!(
            enumerate(Family::C, ENUMERATION_CAP + 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumerate_is_sorted_and_unique() {
        for f in Family::ALL {
            let v = enumerate(f, 6).unwrap();
            assert!(v.windows(2).all(|w| w[0] < w[1]), "{f}");
            assert!(v.iter().all(|p| p.is_normalized() && p.size() == 6));
        }
    }

    #[test]
    fn tags_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
            assert_eq!(serde_json::to_string(&f).unwrap(), format!("\"{}\"", f.tag()));
        }
        assert!("D".parse::<Family>().is_err());
        assert!("".parse::<Family>().is_err());
    }

    #[test]
    fn rule_parsing() {
        let r: ClosureRule = "b+dd=b".parse().unwrap();
        assert_eq!(r, ClosureRule::STATED[1]);
        assert_eq!(r.to_string(), "b+dd=b");
        for bad in ["b+dd", "b=dd", "b+x=b", "+=", "b+dd=b=b"] {
            assert!(bad.parse::<ClosureRule>().is_err(), "{bad}");
        }
    }

    #[test]
    fn closure_examples() {
        for rule in ClosureRule::STATED {
            let r = verify_closure(rule, 4).unwrap();
            assert!(r.pass, "{rule}");
            assert!(r.counterexample.is_none());
        }
        let r = verify_closure(ClosureRule::new(Family::BC, Family::BC, Family::BC), 4).unwrap();
        assert!(!r.pass);
        let (x, y) = r.counterexample.unwrap();
        assert!(member(&x, Family::BC) && member(&y, Family::BC));
        assert!(!member(&x.sum(&y).unwrap(), Family::BC));
        // first violation in visiting order: (0, (1)) + (0, (2))
        assert_eq!(x, pair(&[0; 6], &[0, 0, 0, 0, 0, 1]));
        assert_eq!(y, pair(&[0; 6], &[0, 0, 0, 0, 0, 2]));
    }
}
