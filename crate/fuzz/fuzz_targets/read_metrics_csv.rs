#![no_main]

use libfuzzer_sys::fuzz_target;
use walk_entropy::analysis::{correlations_report, read_csv, write_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(records) = read_csv(data) else { return };
    let mut out = Vec::new();
    write_csv(&records, &mut out).expect("writing to memory");
    let again = read_csv(&out[..]).expect("written CSV reads back");
    assert_eq!(again.len(), records.len());
    let _ = correlations_report(&records);
});
