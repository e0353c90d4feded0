#![no_main]

use hyperspace::cubes::n_cube;
use hyperspace::morphisms::MorphismWitness;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(witness) = serde_json::from_slice::<MorphismWitness>(data) {
        let b = n_cube(2, 2).unwrap().space;
        let a = n_cube(2, 3).unwrap().space;
        let _ = witness.verify(&b, &a);
    }
});
