#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::format::parse_family;

fuzz_target!(|data: &str| {
    if let Ok(family) = parse_family(data) {
        assert_eq!(parse_family(&family.to_string()).unwrap(), family);
    }
});
