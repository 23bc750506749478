#![no_main]

use btspin_core::knot::parse_pd;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 4096 {
        return;
    }
    if let Ok(code) = parse_pd(s) {
        let again = parse_pd(&code.to_string()).expect("rendered PD code re-parses");
        assert_eq!(code, again);
        let d = code.to_diagram().expect("validated PD code yields a diagram");
        assert_eq!(d.wirtinger().generator_count(), d.arc_count());
    }
});
