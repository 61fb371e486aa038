//! Tuple text parsing must never panic; accepted text is canonical and
//! small accepted tuples must survive an admissibility verdict re-check.

#![no_main]

use libfuzzer_sys::fuzz_target;
use polignac::admissible::{is_admissible, Admissibility, Tuple};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(tuple) = Tuple::parse(text) else {
        return;
    };
    assert_eq!(tuple.to_string().as_bytes(), data);

    // keep per-exec cost bounded: verdicts only for small tuples
    if tuple.k() <= 32 && tuple.elements().iter().all(|e| e.bits() <= 64) {
        match is_admissible(&tuple) {
            Admissibility::Admissible(cert) => assert!(cert.verify(&tuple)),
            Admissibility::Inadmissible(violation) => assert!(violation.verify(&tuple)),
        }
    }
});
