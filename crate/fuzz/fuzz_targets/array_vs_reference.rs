#![no_main]

use libfuzzer_sys::fuzz_target;

use geodex::graph::Graph;

// Differential check: the word-parallel intersection-array computation must
// agree with a plain adjacency-list recomputation on every parsed graph.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = geodex::io::parse_edge_list(text) else { return };
    if g.n() == 0 || g.n() > 64 || !g.is_connected() {
        return;
    }
    let fast = g.intersection_array().map(|a| (a.b, a.c));
    assert_eq!(fast, reference_array(&g));
});

fn reference_array(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
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
    let diam = *dist_from(0).iter().max().unwrap() as usize;
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
