//! Replays the checked-in fuzz seeds through the same round-trip checks the
//! fuzz targets make, so the corpus stays meaningful on stable toolchains.

use std::fs;
use std::path::PathBuf;

use peakqsym::format::{
    cd_polynomial_to_json, parse_cd_polynomial, parse_family, parse_rational, parse_subset_key,
    subset_key, PosetFile, QSymFile,
};
use peakqsym::{Basis, CdWord};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn text_seeds(target: &str) -> Vec<(String, String)> {
    seeds(target)
        .into_iter()
        .filter_map(|(n, b)| String::from_utf8(b).ok().map(|s| (n, s)))
        .collect()
}

#[test]
fn poset_file_seeds() {
    let mut accepted = 0;
    for (name, text) in text_seeds("poset_file") {
        let Ok(file) = PosetFile::parse(&text) else {
            continue;
        };
        let Ok(p) = file.to_poset() else { continue };
        let again = PosetFile::from_poset(&file.name, &p).to_poset().unwrap();
        assert_eq!(again.qsym(), p.qsym(), "{name}");
        accepted += 1;
    }
    assert!(accepted >= 2);
}

#[test]
fn qsym_file_seeds() {
    let mut accepted = 0;
    for (name, text) in text_seeds("qsym_file") {
        let Ok(file) = QSymFile::parse(&text) else {
            continue;
        };
        let Ok(f) = file.to_qsym() else { continue };
        for basis in [Basis::M, Basis::F, Basis::K] {
            let back = QSymFile::from_qsym(&f, basis).unwrap().to_qsym().unwrap();
            assert_eq!(back, f, "{name} via {basis:?}");
        }
        accepted += 1;
    }
    assert!(accepted >= 3);
}

#[test]
fn family_seeds() {
    for (name, text) in text_seeds("family") {
        if let Ok(family) = parse_family(&text) {
            assert_eq!(parse_family(&family.to_string()).unwrap(), family, "{name}");
        }
    }
}

#[test]
fn cd_word_seeds() {
    for (name, text) in text_seeds("cd_word") {
        if let Ok(w) = text.parse::<CdWord>() {
            assert_eq!(w.to_key().parse::<CdWord>().unwrap(), w, "{name}");
        }
    }
}

#[test]
fn subset_key_seeds() {
    for (name, bytes) in seeds("subset_key") {
        let Some((&ambient, rest)) = bytes.split_first() else {
            continue;
        };
        let Ok(key) = std::str::from_utf8(rest) else {
            continue;
        };
        if let Ok(s) = parse_subset_key(key, u32::from(ambient % 24)) {
            assert_eq!(subset_key(&s), key, "{name}");
        }
    }
}

#[test]
fn rational_seeds() {
    let mut accepted = 0;
    for (name, text) in text_seeds("rational") {
        if let Ok(q) = parse_rational(&text) {
            assert_eq!(q.to_string(), text, "{name}");
            accepted += 1;
        }
    }
    assert!(accepted >= 4);
}

#[test]
fn cd_polynomial_seeds() {
    for (name, text) in text_seeds("cd_polynomial") {
        if let Ok(p) = parse_cd_polynomial(&text) {
            let again = cd_polynomial_to_json(&p).to_string();
            assert_eq!(parse_cd_polynomial(&again).unwrap(), p, "{name}");
        }
    }
}
