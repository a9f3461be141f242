use peakqsym::format::{cd_polynomial_to_json, PosetFile, QSymFile};
use peakqsym::peak::{cd_index, theta_combination, theta_expansion};
use peakqsym::selftest::{run_all, Depth};
use peakqsym::stembridge::{gorenstein_cone, vartheta};
use peakqsym::toricg::{fg_poly_poset, g_on_qsym};
use peakqsym::{Basis, GradedPoset, PolynomialX};

const PYRAMID: &str = r#"{
  "name": "square pyramid",
  "elements": ["0", "a", "b", "c", "d", "e",
               "ab", "bc", "cd", "da", "ae", "be", "ce", "de",
               "abcd", "abe", "bce", "cde", "dae", "1"],
  "covers": [
    ["0", "a"], ["0", "b"], ["0", "c"], ["0", "d"], ["0", "e"],
    ["a", "ab"], ["b", "ab"], ["b", "bc"], ["c", "bc"], ["c", "cd"], ["d", "cd"],
    ["d", "da"], ["a", "da"], ["a", "ae"], ["e", "ae"], ["b", "be"], ["e", "be"],
    ["c", "ce"], ["e", "ce"], ["d", "de"], ["e", "de"],
    ["ab", "abcd"], ["bc", "abcd"], ["cd", "abcd"], ["da", "abcd"],
    ["ab", "abe"], ["ae", "abe"], ["be", "abe"],
    ["bc", "bce"], ["be", "bce"], ["ce", "bce"],
    ["cd", "cde"], ["ce", "cde"], ["de", "cde"],
    ["da", "dae"], ["de", "dae"], ["ae", "dae"],
    ["abcd", "1"], ["abe", "1"], ["bce", "1"], ["cde", "1"], ["dae", "1"]
  ]
}"#;

#[test]
fn square_pyramid_from_file() {
    let p = PosetFile::parse(PYRAMID).unwrap().to_poset().unwrap();
    assert_eq!(p.rank(), 4);
    assert!(p.is_eulerian());
    let f = p.qsym();
    // 5 vertices, 8 edges, 5 facets
    let flags = f.flag_vector(4).unwrap();
    let counts: Vec<String> = flags.values()[..5].iter().map(|c| c.to_string()).collect();
    assert_eq!(counts, ["1", "5", "8", "16", "5"]);
    let psi = cd_index(&f).unwrap();
    let json = cd_polynomial_to_json(&psi).to_string();
    assert_eq!(json, r#"{"ccc":"1","cd":"3","dc":"3"}"#);
    let coords = theta_expansion(&f).unwrap();
    assert_eq!(theta_combination(&coords), f);
    assert!(gorenstein_cone(3).check(&psi).passes());
    assert!(theta_expansion(&vartheta(&f)).unwrap().all_nonnegative());
    let g = fg_poly_poset(&p).g;
    assert_eq!(g, PolynomialX::from_ints(&[1, 1]));
    assert_eq!(g_on_qsym(&f), g);
}

#[test]
fn qsym_file_round_trip_through_bases() {
    let f = GradedPoset::cube_faces(3).unwrap().qsym();
    for basis in [Basis::M, Basis::F, Basis::K] {
        let file = QSymFile::from_qsym(&f, basis).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back = QSymFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_qsym().unwrap(), f);
    }
}

#[test]
fn quick_selftest_passes() {
    for outcome in run_all(Depth::Quick) {
        assert!(
            outcome.failure.is_none(),
            "criterion {}: {:?}",
            outcome.id,
            outcome.failure
        );
    }
}
