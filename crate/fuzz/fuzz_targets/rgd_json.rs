#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(design) = geodex::io::parse_rgd_json(text) {
        // anything accepted must re-validate, and its incidence graph (when
        // the lemma hypotheses hold) must come out verified
        let shape = design.validate().expect("accepted design re-validates");
        assert_eq!(design.points(), shape.k * shape.m);
        let _ = geodex::constructions::rgd_incidence_graph(&design);
    }
});
