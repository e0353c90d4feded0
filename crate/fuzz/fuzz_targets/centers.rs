#![no_main]

use hyperspace::spray::{general_position_check, parse_centers};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 512 {
        return;
    }
    if let Ok(centers) = parse_centers(text) {
        for c in &centers {
            assert_eq!(c.to_string().parse::<hyperspace::spray::RationalPoint>().unwrap(), *c);
        }
        if centers.len() <= 8 {
            let _ = general_position_check(&centers);
        }
    }
});
