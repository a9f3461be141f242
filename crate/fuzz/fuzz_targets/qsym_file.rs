#![no_main]
use libfuzzer_sys::fuzz_target;
use peakqsym::format::QSymFile;
use peakqsym::Basis;

fuzz_target!(|data: &str| {
    let Ok(file) = QSymFile::parse(data) else {
        return;
    };
    if file.degree > 10 {
        return;
    }
    let Ok(f) = file.to_qsym() else { return };
    for basis in [Basis::M, Basis::F, Basis::K] {
        let back = QSymFile::from_qsym(&f, basis).unwrap().to_qsym().unwrap();
        assert_eq!(back, f);
    }
    let _ = peakqsym::peak::peak_membership(&f);
});
