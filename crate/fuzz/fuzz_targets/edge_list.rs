#![no_main]

use libfuzzer_sys::fuzz_target;

// The edge-list parser must never panic or over-allocate on arbitrary
// input; on success the graph invariants must hold.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = geodex::io::parse_edge_list(text) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
        for (u, v) in g.edges() {
            assert!(u < g.n() && v < g.n() && u != v);
            assert!(g.has_edge(v, u));
        }
    }
});
