//! Strict decimal parsing shared by the text formats.
//!
//! All formats are canonical: accepted input re-serializes byte for byte,
//! so parsers reject anything the writers never emit (leading zeros,
//! whitespace, empty fields).

use crate::error::ParseError;

pub(crate) fn parse_canonical_u64(s: &str, line: usize, what: &str) -> Result<u64, ParseError> {
    if s.is_empty() {
        return Err(ParseError::new(line, format!("{what} is empty")));
    }
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(
            line,
            format!("{what} is not a decimal integer"),
        ));
    }
    if s.len() > 1 && s.starts_with('0') {
        return Err(ParseError::new(line, format!("{what} has a leading zero")));
    }
    s.parse::<u64>()
        .map_err(|_| ParseError::new(line, format!("{what} overflows 64 bits")))
}
