#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::format::PosetFile;

fuzz_target!(|data: &str| {
    let Ok(file) = PosetFile::parse(data) else {
        return;
    };
    // Big inputs make flag enumeration slow without exercising new paths.
    if file.elements.len() > 64 {
        return;
    }
    if let Ok(p) = file.to_poset() {
        let again = PosetFile::from_poset(&file.name, &p).to_poset().unwrap();
        assert_eq!(again.rank(), p.rank());
        if p.rank() <= 8 {
            assert_eq!(again.qsym(), p.qsym());
        }
    }
});
