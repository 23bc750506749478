#![no_main]

use btspin_core::knot::parse_braid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&k, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if s.len() > 1024 {
        return;
    }
    let strands = (k > 0).then_some(usize::from(k % 12));
    if let Ok(b) = parse_braid(s, strands) {
        let again = parse_braid(&b.to_string(), Some(b.strands())).expect("rendered braid re-parses");
        assert_eq!(b, again);
        // Expanded powers can be long; keep diagram work bounded.
        if b.generators().len() <= 200 {
            let _ = b.to_diagram();
        }
    }
});
