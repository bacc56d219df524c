#![no_main]

use libfuzzer_sys::fuzz_target;
use symbol_calculus::{decompose_step, member, Decomposition, Series, SymbolPair};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = SymbolPair::from_json(text) else { return };
    if p.size() > 64 {
        return;
    }
    let Ok(p) = p.normalize() else { return };
    for series in Series::ALL {
        match decompose_step(&p, series) {
            Ok(Decomposition::Terminal) => assert!(member(&p, series.terminal_family())),
            Ok(Decomposition::Split { split, .. }) => {
                assert!(!member(&p, series.terminal_family()));
                assert!(member(&split.left, series.left_family()));
                assert!(member(&split.right, series.right_family()));
                assert!(split.m >= series.min_left() && split.m_prime >= series.min_right());
                assert_eq!(split.left.sum(&split.right).unwrap(), p);
            }
            Err(_) => assert!(!member(&p, series.input_family())),
        }
    }
});
