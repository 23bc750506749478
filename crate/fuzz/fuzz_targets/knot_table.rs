#![no_main]

use btspin_core::knot::table::KnotTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    if let Ok(t) = KnotTable::from_reader(data) {
        for e in t.entries() {
            assert!(t.get(&e.name).is_some());
        }
    }
});
