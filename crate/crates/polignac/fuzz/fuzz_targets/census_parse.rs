//! Census file parsing must never panic, and anything it accepts must be
//! canonical: re-rendering reproduces the input byte for byte.

#![no_main]

use libfuzzer_sys::fuzz_target;
use polignac::GapCensus;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(census) = GapCensus::parse(text) {
        let rendered = census.render();
        assert_eq!(rendered.as_bytes(), data);
        let reparsed = GapCensus::parse(&rendered).expect("canonical text reparses");
        assert_eq!(reparsed, census);
    }
});
