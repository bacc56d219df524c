//! Exhaustive verification suites over all pairs up to a given size.

use serde::Serialize;

use crate::decomp::{decompose_step, oracle_decompositions, Decomposition, Series};
use crate::error::Result;
use crate::family::{all_pairs, check_cap, enumerate, member, verify_closure, ClosureRule, Family};
use crate::springer::{springer_set, t2_fixed_point, tau, ClassicalType, GroupType, Side};

const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub pass: bool,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: impl Into<String>) -> Self {
        SuiteResult { name: name.into(), pass: true, ..Default::default() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.pass = false;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(msg());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop12Report {
    pub series: Series,
    pub max_n: usize,
    pub pass: bool,
    pub checked: u64,
    pub terminal: u64,
    pub split: u64,
    /// Terminal members that nevertheless admit a split.
    pub terminal_with_split: u64,
    pub failures: Vec<String>,
}

/// Runs [`decompose_step`] on every member of the series' input family of
/// size `<= max_n` and checks totality, soundness, agreement with the
/// brute-force oracle, and the terminal-or-splittable dichotomy.
pub fn verify_prop12(series: Series, max_n: usize) -> Result<Prop12Report> {
    check_cap(max_n)?;
    let mut suite = SuiteResult::new(format!("prop12-{series}"));
    let (mut terminal, mut split, mut terminal_with_split) = (0, 0, 0);
    for n in 0..=max_n {
        for p in enumerate(series.input_family(), n)? {
            let oracle = oracle_decompositions(&p, series)?;
            let is_terminal = member(&p, series.terminal_family());
            suite.check(is_terminal || !oracle.is_empty(), || format!("{p}: neither terminal nor splittable"));
            match decompose_step(&p, series) {
                Err(e) => suite.check(false, || format!("{p}: {e}")),
                Ok(Decomposition::Terminal) => {
                    terminal += 1;
                    terminal_with_split += u64::from(!oracle.is_empty());
                    suite.check(is_terminal, || format!("{p}: terminal verdict outside terminal family"));
                }
                Ok(Decomposition::Split { split: s, .. }) => {
                    split += 1;
                    suite.check(!is_terminal, || format!("{p}: terminal member was split"));
                    let sound = s.m + s.m_prime == p.size()
                        && s.m == s.left.size()
                        && s.m_prime == s.right.size()
                        && s.m >= series.min_left()
                        && s.m_prime >= series.min_right()
                        && member(&s.left, series.left_family())
                        && member(&s.right, series.right_family())
                        && s.left.sum(&s.right).ok().as_ref() == Some(&p);
                    suite.check(sound, || format!("{p}: unsound split {} + {}", s.left, s.right));
                    suite.check(oracle.binary_search(&s).is_ok(), || format!("{p}: split not found by oracle"));
                }
            }
        }
    }
    Ok(Prop12Report {
        series,
        max_n,
        pass: suite.pass,
        checked: suite.checked,
        terminal,
        split,
        terminal_with_split,
        failures: suite.failures,
    })
}

/// Membership of every family is unchanged by prefixing 1..=5 zero pairs.
pub fn padding_invariance(max_n: usize) -> Result<SuiteResult> {
    check_cap(max_n)?;
    let mut suite = SuiteResult::new("padding-invariance");
    for n in 0..=max_n {
        for p in all_pairs(n)? {
            for f in Family::ALL {
                let base = member(&p, f);
                for m in 1..=5 {
                    suite.check(member(&p.pad(m), f) == base, || format!("{p} pad {m} changes {f}"));
                }
            }
        }
    }
    Ok(suite)
}

pub const CHAINS: [[Family; 3]; 3] = [
    [Family::B1C, Family::B2C, Family::BC],
    [Family::C1C, Family::B2C, Family::C],
    [Family::D1D, Family::D2D, Family::DD],
];

/// Each family in [`CHAINS`] is contained in the next.
pub fn chain_inclusions(max_n: usize) -> Result<SuiteResult> {
    check_cap(max_n)?;
    let mut suite = SuiteResult::new("chain-inclusions");
    for n in 0..=max_n {
        for p in all_pairs(n)? {
            for chain in CHAINS {
                for w in chain.windows(2) {
                    suite.check(!member(&p, w[0]) || member(&p, w[1]), || format!("{p} in {} not in {}", w[0], w[1]));
                }
            }
        }
    }
    Ok(suite)
}

/// Number of ordered pairs of partitions of total size `n`, computed from
/// the partition-count recurrence rather than by listing.
pub fn bipartition_count(n: usize) -> u64 {
    // p(m) via Euler's pentagonal number recurrence
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        for j in 1.. {
            let j = j as i64;
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    (0..=n).map(|m| (p[m] * p[n - m]) as u64).sum()
}

/// Enumerator sizes against [`bipartition_count`]; `D` against a filter of
/// the full list.
pub fn cardinalities(max_n: usize) -> Result<SuiteResult> {
    check_cap(max_n)?;
    let mut suite = SuiteResult::new("cardinalities");
    for n in 0..=max_n {
        let all = enumerate(Family::C, n)?;
        let expected = bipartition_count(n);
        suite.check(all.len() as u64 == expected, || format!("|C({n})| = {} != {expected}", all.len()));
        let d: Vec<_> = all
            .iter()
            .filter(|p| p.first().total() > p.second().total() || p.is_diagonal())
            .cloned()
            .collect();
        suite.check(enumerate(Family::D, n)? == d, || format!("D({n}) differs from filter"));
        for f in Family::ALL {
            let sub = enumerate(f, n)?;
            suite.check(sub.iter().all(|p| all.binary_search(p).is_ok()), || format!("{f}({n}) not inside C({n})"));
        }
    }
    Ok(suite)
}

pub fn closure_suite(rule: ClosureRule, max_n: usize, expect_pass: bool) -> Result<SuiteResult> {
    let report = verify_closure(rule, max_n)?;
    let mut suite = SuiteResult::new(format!("closure {rule}"));
    suite.check(report.pass == expect_pass, || match &report.counterexample {
        Some((x, y)) => format!("counterexample {x} + {y}"),
        None => "expected a counterexample, found none".to_string(),
    });
    suite.checked = report.checked;
    Ok(suite)
}

/// Fixed-point sets equal the explicit input families for every size.
pub fn fixed_points(series: Series, max_n: usize) -> Result<SuiteResult> {
    check_cap(max_n)?;
    let mut suite = SuiteResult::new(format!("fixed-point-{series}"));
    for n in 0..=max_n {
        let t = t2_fixed_point(series, n)?;
        let explicit = enumerate(series.input_family(), n)?;
        suite.check(t == explicit, || {
            format!("n = {n}: {} generated vs {} explicit", t.len(), explicit.len())
        });
    }
    Ok(suite)
}

/// Group-to-algebra map is total and injective, and type-`D` label counts
/// follow the fiber bookkeeping.
pub fn springer_checks(max_n: usize) -> Result<SuiteResult> {
    check_cap(max_n)?;
    let mut suite = SuiteResult::new("springer-tau");
    for series in ClassicalType::ALL {
        for n in series.min_rank()..=max_n {
            let g = GroupType::new(series, n);
            let map = tau(g)?;
            suite.check(map.total && map.injective, || format!("{g}: map not total and injective"));
            for side in [Side::Group, Side::Algebra] {
                let set = springer_set(g, side)?;
                let pairs = enumerate(series.family(side), n)?;
                let diagonal = pairs.iter().filter(|p| p.is_diagonal()).count();
                let expected = match series {
                    ClassicalType::D => pairs.len() + diagonal,
                    _ => pairs.len(),
                };
                suite.check(set.labels.len() == expected, || format!("{g} {side:?}: label count"));
            }
        }
    }
    Ok(suite)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllReport {
    pub max_n: usize,
    pub pass: bool,
    pub suites: Vec<SuiteResult>,
}

/// Every exhaustive suite at size `<= max_n`.
pub fn verify_all(max_n: usize) -> Result<AllReport> {
    check_cap(max_n)?;
    let mut suites = vec![padding_invariance(max_n)?, chain_inclusions(max_n)?, cardinalities(max_n)?];
    for rule in ClosureRule::STATED {
        suites.push(closure_suite(rule, max_n, true)?);
    }
    if max_n >= 4 {
        suites.push(closure_suite(ClosureRule::new(Family::BC, Family::BC, Family::BC), max_n, false)?);
    }
    for series in Series::ALL {
        let r = verify_prop12(series, max_n)?;
        suites.push(SuiteResult { name: format!("prop12-{series}"), pass: r.pass, checked: r.checked, failures: r.failures });
    }
    for series in Series::ALL {
        suites.push(fixed_points(series, max_n)?);
    }
    suites.push(springer_checks(max_n)?);
    let pass = suites.iter().all(|s| s.pass);
    Ok(AllReport { max_n, pass, suites })
}
