#![no_main]

use hyperspace::cli::parse_count;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(value) = parse_count(text) {
            assert_eq!(parse_count(&value.to_string()), Ok(value));
        }
    }
});
