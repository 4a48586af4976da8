#![no_main]

use domgame_core::io::{emit_graph6, parse_graph6, parse_graph6_lines};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph6(text) {
        // strict decoding means accepted input is canonical
        let out = emit_graph6(&g);
        assert_eq!(parse_graph6(&out).unwrap(), g);
    }
    let _ = parse_graph6_lines(text);
});
