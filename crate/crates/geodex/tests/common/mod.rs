//! Shared brute-force oracles for the integration suites. Everything here
//! recomputes invariants from plain adjacency lists, independent of the
//! bitset/stream code paths it is used to check.

use geodex::aut;
use geodex::graph::Graph;

/// All permutations of 0..n in a deterministic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// |Aut(g)| by filtering every permutation. Only sane for n <= 8.
pub fn brute_aut_order(g: &Graph) -> u128 {
    all_perms(g.n())
        .into_iter()
        .filter(|p| g.edges().all(|(u, v)| g.has_edge(p[u], p[v])))
        .count() as u128
}

/// Naive per-pair recomputation of the intersection array from adjacency
/// lists: BFS per vertex, then direct neighbour scans for every ordered
/// pair. Returns None if any count is inconsistent.
pub fn naive_intersection_array(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let dist_from = |s: usize| -> Vec<i64> {
        let mut dist = vec![-1i64; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] < 0 {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    };
    let d0 = dist_from(0);
    if d0.iter().any(|&d| d < 0) {
        return None; // disconnected
    }
    let diam = *d0.iter().max().unwrap() as usize;
    if diam == 0 {
        return Some((vec![], vec![]));
    }
    let mut b = vec![None; diam];
    let mut c = vec![None; diam + 1];
    let mut a = vec![None; diam + 1];
    for u in 0..n {
        let dist = dist_from(u);
        if *dist.iter().max().unwrap() as usize != diam {
            return None;
        }
        for v in 0..n {
            let i = dist[v] as usize;
            let ci = adj[v].iter().filter(|&&w| dist[w] == i as i64 - 1).count();
            let ai = adj[v].iter().filter(|&&w| dist[w] == i as i64).count();
            let bi = adj[v].iter().filter(|&&w| dist[w] == i as i64 + 1).count();
            if i > 0 && *c[i].get_or_insert(ci) != ci {
                return None;
            }
            if *a[i].get_or_insert(ai) != ai {
                return None;
            }
            if i < diam {
                if *b[i].get_or_insert(bi) != bi {
                    return None;
                }
            } else if bi != 0 {
                return None;
            }
        }
    }
    Some((
        b.into_iter().map(Option::unwrap).collect(),
        c.into_iter().skip(1).map(Option::unwrap).collect(),
    ))
}

/// Every connected graph on 1..=max_n vertices, one representative per
/// isomorphism class. Built by extending each smaller connected graph with
/// one new vertex joined to every non-empty subset, deduplicating by
/// canonical certificate. The per-order counts are pinned against the known
/// sequence, which cross-checks the certificates themselves.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    const KNOWN_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
    let mut all: Vec<Graph> = Vec::new();
    let mut layer: Vec<Graph> = vec![Graph::from_edge_list(1, &[]).unwrap()];
    all.extend(layer.iter().cloned());
    for n in 2..=max_n {
        let mut seen = std::collections::HashMap::new();
        for parent in &layer {
            let edges: Vec<(usize, usize)> = parent.edges().collect();
            for subset in 1usize..1 << (n - 1) {
                let mut with_new = edges.clone();
                for bit in 0..n - 1 {
                    if subset >> bit & 1 == 1 {
                        with_new.push((bit, n - 1));
                    }
                }
                let candidate = Graph::from_edge_list(n, &with_new).unwrap();
                let cert = aut::canonical_certificate(&candidate).unwrap();
                seen.entry(cert.canonical_edges()).or_insert(candidate);
            }
        }
        layer = seen.into_values().collect();
        // deterministic order for the callers
        layer.sort_by_key(|g| {
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            edges.sort_unstable();
            (g.edge_count(), edges)
        });
        assert_eq!(
            layer.len(),
            KNOWN_COUNTS[n - 1],
            "connected graph count on {n} vertices disagrees with the literature"
        );
        all.extend(layer.iter().cloned());
    }
    all
}
