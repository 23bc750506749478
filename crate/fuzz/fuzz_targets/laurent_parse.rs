#![no_main]

use btspin_core::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<LaurentPoly>() {
        // Canonical rendering must parse back to the same polynomial.
        let text = p.to_string();
        let q: LaurentPoly = text.parse().expect("rendered polynomial re-parses");
        assert_eq!(p, q, "{text}");
    }
});
