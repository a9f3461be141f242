#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::CdWord;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<CdWord>() {
        assert_eq!(w.to_key().parse::<CdWord>().unwrap(), w);
    }
});
