#![no_main]
use libfuzzer_sys::fuzz_target;
use lindef::{OrderKind, PolyRing, PrimeField};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    let vars = ["x", "y", "z", "t"].map(String::from).to_vec();
    let ring = PolyRing::new(PrimeField::default(), vars, OrderKind::DegRevLex);
    if let Ok(f) = ring.parse(text) {
        let shown = ring.format(&f);
        let g = ring.parse(&shown).expect("formatted polynomials parse");
        assert_eq!(f, g);
    }
});
