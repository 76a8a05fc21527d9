//! The Armanios-Wells graph, shipped as an embedded edge list.
//!
//! The data was generated once as a Cayley graph on the extraspecial group
//! 2^{1+4} of minus type (connection set: one involution from each of the
//! five isotropic cosets) and frozen here; the distance-regularity check
//! below, together with the cited uniqueness of the intersection array, is
//! the correctness argument.

use crate::error::{Error, Result};
use crate::graph::{Graph, IntersectionArray};

use super::LabeledGraph;

const WELLS_EDGES: [(usize, usize); 80] = [
    (0, 1), (0, 2), (0, 7), (0, 11), (0, 15), (1, 3), (1, 6), (1, 10),
    (1, 14), (2, 19), (2, 21), (2, 25), (2, 29), (3, 18), (3, 20), (3, 24),
    (3, 28), (4, 5), (4, 6), (4, 15), (4, 19), (4, 27), (5, 7), (5, 14),
    (5, 18), (5, 26), (6, 9), (6, 23), (6, 29), (7, 8), (7, 22), (7, 28),
    (8, 9), (8, 10), (8, 19), (8, 31), (9, 11), (9, 18), (9, 30), (10, 13),
    (10, 21), (10, 27), (11, 12), (11, 20), (11, 26), (12, 13), (12, 14), (12, 19),
    (12, 23), (13, 15), (13, 18), (13, 22), (14, 25), (14, 31), (15, 24), (15, 30),
    (16, 17), (16, 18), (16, 23), (16, 27), (16, 31), (17, 19), (17, 22), (17, 26),
    (17, 30), (20, 21), (20, 22), (20, 31), (21, 23), (21, 30), (22, 25), (23, 24),
    (24, 25), (24, 26), (25, 27), (26, 29), (27, 28), (28, 29), (28, 30), (29, 31),
];

pub fn wells_array() -> IntersectionArray {
    IntersectionArray { b: vec![5, 4, 1, 1], c: vec![1, 1, 4, 5] }
}

/// The unique distance-regular graph with intersection array (5,4,1,1;1,1,4,5).
pub fn wells() -> Result<LabeledGraph> {
    let graph = Graph::from_edge_list(32, &WELLS_EDGES)?;
    let expected = wells_array();
    match graph.intersection_array() {
        Some(arr) if arr == expected => {}
        got => {
            return Err(Error::InternalVerificationFailed {
                name: "wells",
                detail: format!("intersection array {got:?}, expected {expected}"),
            })
        }
    }
    let labels = (0..32).map(|v| format!("g{v:05b}")).collect();
    Ok(LabeledGraph { graph, labels })
}
