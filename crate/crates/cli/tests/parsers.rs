use std::path::Path;

use lindef::{OrderKind, PolyRing, PrimeField};
use lindef_cli::Session;
use proptest::prelude::*;

fn poly_ring() -> PolyRing {
    let vars = ["x", "y", "z", "t"].map(String::from).to_vec();
    PolyRing::new(PrimeField::default(), vars, OrderKind::DegRevLex)
}

fn poly_round_trip(ring: &PolyRing, text: &str) -> bool {
    match ring.parse(text) {
        Ok(f) => {
            let g = ring.parse(&ring.format(&f)).expect("formatted polynomials parse");
            assert_eq!(f, g, "{text:?}");
            true
        }
        Err(_) => false,
    }
}

fn session_round_trip(text: &str) -> bool {
    match Session::parse(text) {
        Ok(s) => {
            let canon = s.render();
            let again = Session::parse(&canon).unwrap_or_else(|e| panic!("{e}\n{canon}"));
            assert_eq!(again.render(), canon);
            true
        }
        Err(_) => false,
    }
}

fn seeds(target: &str) -> Vec<String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn fuzz_seeds_parse_and_round_trip() {
    let ring = poly_ring();
    for s in seeds("poly_parse") {
        assert!(poly_round_trip(&ring, &s), "{s:?}");
    }
    for s in seeds("session_parse") {
        assert!(session_round_trip(&s), "{s:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn polynomial_text_never_panics(text in "[xyzt0-9 ^*+()-]{0,24}") {
        poly_round_trip(&poly_ring(), &text);
    }

    #[test]
    fn session_text_never_panics(text in "(ring R = poly\\(x,y\\)( / \\([xy^2*+ ]{0,8}\\))?;\n)?(ideal I = [()xy,2^ *+-]{0,12};\n)?(module M = [a-zR()^\\[\\],0-9 /+-]{0,20};\n)?") {
        session_round_trip(&text);
    }
}
