#![no_main]

use btspin_core::batch::read_pairs;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(rows) = read_pairs(data) {
        for r in rows {
            if r.job.is_ok() {
                assert_eq!(r.raw.len(), 6);
            }
        }
    }
});
