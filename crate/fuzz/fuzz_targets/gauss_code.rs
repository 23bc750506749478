#![no_main]

use btspin_core::knot::parse_gauss;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 4096 {
        return;
    }
    if let Ok(code) = parse_gauss(s) {
        let again = parse_gauss(&code.to_string()).expect("rendered Gauss code re-parses");
        assert_eq!(code, again);
        let _ = code.to_diagram();
    }
});
