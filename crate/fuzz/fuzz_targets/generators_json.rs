#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(group) = geodex::io::parse_generators_json(text) {
        // accepted generators are genuine bijections of the right degree
        for g in group.gens() {
            assert_eq!(g.degree(), group.degree());
            let mut seen = vec![false; g.degree()];
            for x in 0..g.degree() {
                let y = g.apply(x);
                assert!(!seen[y]);
                seen[y] = true;
            }
            assert!(group.gens().contains(&g.inverse().inverse()));
        }
    }
});
