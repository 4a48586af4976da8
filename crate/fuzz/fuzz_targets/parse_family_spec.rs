#![no_main]

use domgame_core::family_spec::parse_family_spec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_family_spec(text);
    }
});
