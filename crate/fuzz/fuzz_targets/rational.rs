#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::format::parse_rational;

fuzz_target!(|data: &str| {
    if let Ok(q) = parse_rational(data) {
        // Only canonical spellings are accepted.
        assert_eq!(q.to_string(), data);
    }
});
