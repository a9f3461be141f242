#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::format::{parse_subset_key, subset_key};

fuzz_target!(|input: (u8, &str)| {
    let (ambient, key) = input;
    let ambient = u32::from(ambient % 24);
    if let Ok(s) = parse_subset_key(key, ambient) {
        assert_eq!(subset_key(&s), key);
    }
});
