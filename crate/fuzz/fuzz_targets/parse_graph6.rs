#![no_main]

use libfuzzer_sys::fuzz_target;
use walk_entropy::graph6::{parse_graph6_bytes, write_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6_bytes(data) {
        let text = write_graph6(&g).expect("parsed graphs fit the short form");
        assert_eq!(text.as_bytes(), data, "encoding is canonical");
    }
});
