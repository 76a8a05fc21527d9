//! The sporadic strongly regular graphs: Hoffman-Singleton, Higman-Sims,
//! Gewirtz, the M22 graph, and the induced second subconstituent `[HoS]_2`.
//!
//! Every constructor checks its strongly regular parameters at build time;
//! a violation is a hard error, never a silent one.

use crate::error::{Error, Result};
use crate::graph::{Graph, SrgParams};

use super::golay::{witt_22, SteinerSystem};
use super::LabeledGraph;

fn verify_srg(g: &Graph, name: &'static str, expected: SrgParams) -> Result<()> {
    match g.srg_params() {
        Some(p) if p == expected => Ok(()),
        got => Err(Error::InternalVerificationFailed {
            name,
            detail: format!("srg parameters {got:?}, expected {expected:?}"),
        }),
    }
}

/// The Hoffman-Singleton graph from five pentagons P_h and five pentagrams
/// Q_i: vertex j of P_h is adjacent to vertex (h*i + j mod 5) of Q_i.
/// Verified as the strongly regular (50,7,0,1) graph.
pub fn hoffman_singleton() -> Result<LabeledGraph> {
    let pent = |h: usize, j: usize| 5 * h + j;
    let gram = |i: usize, j: usize| 25 + 5 * i + j;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((pent(h, j), pent(h, (j + 1) % 5)));
            edges.push((gram(h, j), gram(h, (j + 2) % 5)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((pent(h, j), gram(i, (h * i + j) % 5)));
            }
        }
    }
    let graph = Graph::from_edge_list(50, &edges)?;
    verify_srg(&graph, "hoffman_singleton", SrgParams { n: 50, k: 7, a: 0, c: 1 })?;
    let mut labels = Vec::with_capacity(50);
    for h in 0..5 {
        labels.extend((0..5).map(|j| format!("P{h}{j}")));
    }
    for i in 0..5 {
        labels.extend((0..5).map(|j| format!("Q{i}{j}")));
    }
    Ok(LabeledGraph { graph, labels })
}

/// `[HoS]_2`: the subgraph of the Hoffman-Singleton graph induced on the
/// distance-2 sphere of vertex 0. 42 vertices of valency 6; the graph is
/// vertex-transitive so the base point is immaterial.
pub fn hos2() -> Result<LabeledGraph> {
    let hos = hoffman_singleton()?;
    let sphere = hos.graph.sphere(0, 2);
    let (graph, map) = hos.graph.induced_subgraph(&sphere)?;
    if graph.n() != 42 || graph.regular_valency() != Some(6) {
        return Err(Error::InternalVerificationFailed {
            name: "hos2",
            detail: format!("{} vertices, valency {:?}", graph.n(), graph.regular_valency()),
        });
    }
    let labels = map.iter().map(|&old| hos.labels[old].clone()).collect();
    Ok(LabeledGraph { graph, labels })
}

fn block_label(block: &[usize]) -> String {
    let inner = block.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    format!("{{{inner}}}")
}

/// The M22 graph: blocks of S(3,6,22), adjacent iff disjoint.
pub fn m22_graph() -> Result<LabeledGraph> {
    let witt = witt_22()?;
    m22_from(&witt)
}

fn m22_from(witt: &SteinerSystem) -> Result<LabeledGraph> {
    let graph = Graph::from_rule(77, |a, b| witt.blocks_are_disjoint(a, b));
    verify_srg(&graph, "m22_graph", SrgParams { n: 77, k: 16, a: 0, c: 4 })?;
    let labels = witt.blocks().iter().map(|b| block_label(b)).collect();
    Ok(LabeledGraph { graph, labels })
}

/// The Gewirtz graph: the 56 blocks of S(3,6,22) avoiding point 0, adjacent
/// iff disjoint.
pub fn gewirtz() -> Result<LabeledGraph> {
    let witt = witt_22()?;
    let avoid: Vec<usize> =
        (0..witt.block_count()).filter(|&b| !witt.block_contains(b, 0)).collect();
    let graph =
        Graph::from_rule(avoid.len(), |i, j| witt.blocks_are_disjoint(avoid[i], avoid[j]));
    verify_srg(&graph, "gewirtz", SrgParams { n: 56, k: 10, a: 0, c: 2 })?;
    let labels = avoid.iter().map(|&b| block_label(&witt.blocks()[b])).collect();
    Ok(LabeledGraph { graph, labels })
}

/// The Higman-Sims graph on 1 + 22 + 77 vertices: a star vertex adjacent to
/// the 22 points; points adjacent to the blocks containing them; blocks
/// adjacent iff disjoint.
pub fn higman_sims() -> Result<LabeledGraph> {
    let witt = witt_22()?;
    let point = |p: usize| 1 + p;
    let block = |b: usize| 23 + b;
    let graph = Graph::from_rule(100, |x, y| {
        let (x, y) = (x.min(y), x.max(y));
        if x == 0 {
            (1..23).contains(&y)
        } else if y < 23 {
            false // two points are never adjacent
        } else if x < 23 {
            witt.block_contains(y - 23, x - 1)
        } else {
            witt.blocks_are_disjoint(x - 23, y - 23)
        }
    });
    verify_srg(&graph, "higman_sims", SrgParams { n: 100, k: 22, a: 0, c: 6 })?;
    let mut labels = vec!["*".to_string()];
    labels.extend((0..22).map(|p| format!("p{p}")));
    labels.extend(witt.blocks().iter().map(|b| block_label(b)));
    debug_assert_eq!(point(21), 22);
    debug_assert_eq!(block(76), 99);
    Ok(LabeledGraph { graph, labels })
}
