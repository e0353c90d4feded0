#![no_main]

use hyperspace::setsystem::{depth, parse_set_system, transversal_number};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(family) = parse_set_system(text) {
        let printed = family.to_string();
        assert_eq!(parse_set_system(&printed).unwrap(), family);
        if family.ground() <= 10 && family.len() <= 12 {
            let _ = transversal_number(&family);
            let _ = depth(&family);
        }
    }
});
