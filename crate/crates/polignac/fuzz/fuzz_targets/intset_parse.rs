//! Integer-set file parsing must never panic; accepted text is canonical,
//! and small accepted sets must yield a self-validating AP search result.

#![no_main]

use libfuzzer_sys::fuzz_target;
use polignac::progressions::{longest_ap_in_set, parse_integer_set, render_integer_set};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(values) = parse_integer_set(text) else {
        return;
    };
    assert_eq!(render_integer_set(&values).as_bytes(), data);

    // keep per-exec cost bounded: the pair DP is quadratic
    if !values.is_empty() && values.len() <= 64 {
        let run = longest_ap_in_set(&values).expect("ascending nonempty set");
        assert!(run.verify(&values));
        assert!(run.length as usize <= values.len());
    }
});
