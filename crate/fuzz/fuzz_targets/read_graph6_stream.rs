#![no_main]

use libfuzzer_sys::fuzz_target;
use walk_entropy::analysis::{scan, ScanConfig};
use walk_entropy::graph6::records;

fuzz_target!(|data: &[u8]| {
    for record in records(data) {
        if record.is_err() {
            break;
        }
    }
    // Small graphs only, so the per-record numerics stay cheap.
    if data.len() <= 256 {
        let _ = scan(data, &ScanConfig::default());
    }
});
