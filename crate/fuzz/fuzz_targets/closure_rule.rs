#![no_main]

use libfuzzer_sys::fuzz_target;
use symbol_calculus::ClosureRule;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rule) = text.parse::<ClosureRule>() {
        assert_eq!(rule.to_string().parse::<ClosureRule>().unwrap(), rule);
    }
});
