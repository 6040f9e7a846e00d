#![no_main]
use libfuzzer_sys::fuzz_target;
use lindef_cli::Session;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // exponents and variable counts stay small so parsing stays cheap
    if text.len() > 512 || text.contains("power") {
        return;
    }
    if let Ok(s) = Session::parse(text) {
        let canon = s.render();
        let again = Session::parse(&canon).expect("canonical text parses");
        assert_eq!(again.render(), canon);
    }
});
