#![no_main]

use domgame_core::io::{emit_edge_list, parse_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_edge_list(text) {
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }
});
