#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::format::{cd_polynomial_to_json, parse_cd_polynomial};

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_cd_polynomial(data) {
        let text = cd_polynomial_to_json(&p).to_string();
        assert_eq!(parse_cd_polynomial(&text).unwrap(), p);
    }
});
