#![no_main]

use libfuzzer_sys::fuzz_target;

use geodex::aut;
use geodex::graph::Graph;

// Differential check: the backtracking search must agree with exhaustive
// permutation filtering on every parsed graph small enough to filter.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = geodex::io::parse_edge_list(text) else { return };
    if g.n() == 0 || g.n() > 7 {
        return;
    }
    let order = aut::automorphism_group(&g).expect("small search fits any budget").order();
    assert_eq!(order, brute_order(&g));
});

fn brute_order(g: &Graph) -> u128 {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut count = 0u128;
    permute(&mut perm, 0, g, &mut count);
    count
}

fn permute(perm: &mut Vec<usize>, k: usize, g: &Graph, count: &mut u128) {
    if k == perm.len() {
        if g.edges().all(|(u, v)| g.has_edge(perm[u], perm[v])) {
            *count += 1;
        }
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, g, count);
        perm.swap(k, i);
    }
}
