#![no_main]

use libfuzzer_sys::fuzz_target;
use symbol_calculus::SymbolPair;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = SymbolPair::from_json(text) {
        assert_eq!(p.a().len(), p.a_prime().len());
        let again = SymbolPair::from_json(&p.to_json()).expect("round trip");
        assert_eq!(again, p);
    }
});
