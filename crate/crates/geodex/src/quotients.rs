//! Quotient graphs modulo vertex partitions, the cover predicate,
//! antipodality, and structural recognition of standard double covers.

use crate::constructions::sdc;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::VertexPartition;

/// Side data from a quotient: the block map and which cells contained
/// internal edges (those edges are discarded, not an error — quotients of
/// non-covers are legitimate objects here).
#[derive(Clone, Debug)]
pub struct QuotientInfo {
    /// vertex -> cell index
    pub block_of: Vec<usize>,
    /// cells containing at least one internal edge
    pub cells_with_internal_edges: Vec<usize>,
}

fn check_partition(g: &Graph, p: &VertexPartition) -> Result<()> {
    if p.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} points against a graph on {} vertices",
            p.n(),
            g.n()
        )));
    }
    Ok(())
}

/// Graph on the cells of `p`; two cells are adjacent iff some cross edge
/// joins them.
pub fn quotient_graph(g: &Graph, p: &VertexPartition) -> Result<(Graph, QuotientInfo)> {
    check_partition(g, p)?;
    let block_of = p.cell_of();
    let mut internal = Vec::new();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu == bv {
            if internal.last() != Some(&bu) {
                internal.push(bu);
            }
        } else {
            edges.push((bu, bv));
        }
    }
    internal.sort_unstable();
    internal.dedup();
    let q = Graph::from_edge_list(p.cell_count(), &edges)?;
    Ok((q, QuotientInfo { block_of, cells_with_internal_edges: internal }))
}

/// TRUE iff no cell contains an edge and, for every quotient edge {B,C},
/// every vertex of B has exactly one neighbour in C.
pub fn is_cover(g: &Graph, p: &VertexPartition) -> Result<bool> {
    check_partition(g, p)?;
    let (q, info) = quotient_graph(g, p)?;
    if !info.cells_with_internal_edges.is_empty() {
        return Ok(false);
    }
    for (bi, bj) in q.edges() {
        for (a, b) in [(bi, bj), (bj, bi)] {
            for &v in &p.cells()[a] {
                let hits = g.neighbors(v).filter(|&w| info.block_of[w] == b).count();
                if hits != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The partition into classes of the relation "u = v or d(u,v) = diameter",
/// when that relation is an equivalence; `None` otherwise.
pub fn antipodal_partition(g: &Graph) -> Result<Option<VertexPartition>> {
    let d = g.diameter()?;
    if d < 2 {
        return Ok(None);
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut cell_of = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let table = g.distances_from(v);
        let mut class: Vec<usize> =
            (0..g.n()).filter(|&u| u == v || table.get(u) == Some(d)).collect();
        class.sort_unstable();
        match cell_of[v] {
            usize::MAX => {
                for &u in &class {
                    if cell_of[u] != usize::MAX {
                        return Ok(None); // relation is not transitive
                    }
                    cell_of[u] = cells.len();
                }
                cells.push(class);
            }
            idx => {
                if cells[idx] != class {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(VertexPartition::new(g.n(), cells)?))
}

/// Why a graph failed to be recognised as a standard double cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotSdcReason {
    Disconnected,
    NotBipartite,
    NotAntipodal,
    AntipodalBlockSizeNot2,
    EvenDiameter,
    MapNotIsomorphism,
}

pub enum SdcRecognition {
    /// The antipodal quotient and the vertex map g -> sdc(quotient), where
    /// vertex x of the quotient appears as (x,1) = x and (x,2) = n + x.
    Recognized { quotient: Graph, map: Vec<usize> },
    Not(NotSdcReason),
}

/// Structural recognition of standard double covers: bipartite + antipodal
/// with blocks of size 2 + odd diameter, then the explicit map
/// phi(u) = (block(u), side(u)) is built and verified as an isomorphism.
pub fn recognize_sdc(g: &Graph) -> Result<SdcRecognition> {
    use NotSdcReason::*;
    if !g.is_connected() {
        return Ok(SdcRecognition::Not(Disconnected));
    }
    let Some((side0, _)) = g.bipartition() else {
        return Ok(SdcRecognition::Not(NotBipartite));
    };
    let Some(partition) = antipodal_partition(g)? else {
        return Ok(SdcRecognition::Not(NotAntipodal));
    };
    if partition.cells().iter().any(|c| c.len() != 2) {
        return Ok(SdcRecognition::Not(AntipodalBlockSizeNot2));
    }
    if g.diameter()? % 2 == 0 {
        return Ok(SdcRecognition::Not(EvenDiameter));
    }
    let (quotient, info) = quotient_graph(g, &partition)?;
    let half = quotient.n();
    let map: Vec<usize> = (0..g.n())
        .map(|u| info.block_of[u] + if side0.contains(u) { 0 } else { half })
        .collect();
    let double = sdc(&quotient);
    let mut hit = vec![false; 2 * half];
    for &m in &map {
        hit[m] = true;
    }
    let bijective = hit.iter().all(|&h| h);
    let preserves = g.edges().all(|(u, v)| double.has_edge(map[u], map[v]))
        && g.edge_count() == double.edge_count();
    if !bijective || !preserves {
        return Ok(SdcRecognition::Not(MapNotIsomorphism));
    }
    Ok(SdcRecognition::Recognized { quotient, map })
}
