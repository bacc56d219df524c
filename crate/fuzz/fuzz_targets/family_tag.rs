#![no_main]

use libfuzzer_sys::fuzz_target;
use symbol_calculus::{Family, Series};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = text.parse::<Family>() {
        assert_eq!(f.tag().parse::<Family>().unwrap(), f);
    }
    if let Ok(s) = text.parse::<Series>() {
        assert_eq!(s.tag().parse::<Series>().unwrap(), s);
    }
});
