#![no_main]

use hyperspace::FiniteIndexedHyperspace;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(space) = serde_json::from_slice::<FiniteIndexedHyperspace>(data) {
        let text = serde_json::to_string(&space).unwrap();
        let again: FiniteIndexedHyperspace = serde_json::from_str(&text).unwrap();
        assert_eq!(again, space);
        for i in 0..space.n() {
            for x in 0..space.size() {
                assert!(space.same_class(i, x, x));
            }
        }
    }
});
