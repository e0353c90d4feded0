#![no_main]

use hyperspace::setsystem::{induced_system, parse_set_tuple};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(tuple) = parse_set_tuple(text) {
        assert_eq!(parse_set_tuple(&tuple.to_string()).unwrap(), tuple);
        if tuple.n() <= 12 {
            let _ = induced_system(&tuple);
        }
    }
});
