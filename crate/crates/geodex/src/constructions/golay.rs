//! The extended binary Golay code and the Steiner system S(3,6,22) carved
//! out of it: the substrate for the M22 graph, the Gewirtz graph and the
//! Higman-Sims graph.

use crate::error::{Error, Result};

/// Generator polynomial of the (23,12,7) binary Golay code:
/// x^11 + x^9 + x^7 + x^6 + x^5 + x + 1, bit i = coefficient of x^i.
const GOLAY23_GEN: u32 = 0xAE3;
const GEN_DEGREE: u32 = 11;

fn gf2_mod(mut a: u32) -> u32 {
    while a >> GEN_DEGREE != 0 {
        let deg = 31 - a.leading_zeros();
        a ^= GOLAY23_GEN << (deg - GEN_DEGREE);
    }
    a
}

/// One codeword of the [24,12,8] extended code, bit i = coordinate i.
fn encode(msg: u16) -> u32 {
    let shifted = (msg as u32) << GEN_DEGREE;
    let c23 = shifted | gf2_mod(shifted);
    c23 | (c23.count_ones() & 1) << 23
}

/// The 759 weight-8 codewords of the extended binary Golay code.
pub fn octads() -> Vec<u32> {
    (0u16..4096).map(encode).filter(|cw| cw.count_ones() == 8).collect()
}

/// A Steiner system: every t-subset of points lies in exactly one block.
/// Only S(3,6,22) is constructed here.
#[derive(Clone, Debug)]
pub struct SteinerSystem {
    points: usize,
    /// blocks as sorted point lists
    blocks: Vec<Vec<usize>>,
    /// blocks as point bitmasks, same order
    masks: Vec<u32>,
}

impl SteinerSystem {
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_mask(&self, b: usize) -> u32 {
        self.masks[b]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks_are_disjoint(&self, a: usize, b: usize) -> bool {
        self.masks[a] & self.masks[b] == 0
    }

    pub fn block_contains(&self, b: usize, point: usize) -> bool {
        self.masks[b] >> point & 1 == 1
    }
}

/// S(3,6,22): the octads through coordinates 22 and 23, with those two
/// coordinates deleted. Verified exhaustively: 77 blocks, every point in 21
/// of them, every 3-subset of the 22 points covered exactly once.
pub fn witt_22() -> Result<SteinerSystem> {
    let fail = |detail: String| Error::InternalVerificationFailed { name: "witt_22", detail };
    let two_points: u32 = 1 << 22 | 1 << 23;
    let masks: Vec<u32> = octads()
        .into_iter()
        .filter(|&o| o & two_points == two_points)
        .map(|o| o & !two_points)
        .collect();
    if masks.len() != 77 {
        return Err(fail(format!("{} blocks through two points, expected 77", masks.len())));
    }
    let blocks: Vec<Vec<usize>> =
        masks.iter().map(|&m| (0..22).filter(|&p| m >> p & 1 == 1).collect()).collect();
    for p in 0..22 {
        let through = masks.iter().filter(|&&m| m >> p & 1 == 1).count();
        if through != 21 {
            return Err(fail(format!("point {p} lies in {through} blocks, expected 21")));
        }
    }
    for a in 0..22u32 {
        for b in a + 1..22 {
            for c in b + 1..22 {
                let triple = 1 << a | 1 << b | 1 << c;
                let covering = masks.iter().filter(|&&m| m & triple == triple).count();
                if covering != 1 {
                    return Err(fail(format!(
                        "triple {{{a},{b},{c}}} lies in {covering} blocks, expected 1"
                    )));
                }
            }
        }
    }
    Ok(SteinerSystem { points: 22, blocks, masks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_weight_distribution() {
        let mut weights = [0usize; 25];
        for msg in 0u16..4096 {
            weights[encode(msg).count_ones() as usize] += 1;
        }
        assert_eq!(weights[0], 1);
        assert_eq!(weights[8], 759);
        assert_eq!(weights[12], 2576);
        assert_eq!(weights[16], 759);
        assert_eq!(weights[24], 1);
    }

    #[test]
    fn witt_22_is_a_steiner_system() {
        let s = witt_22().unwrap();
        assert_eq!(s.points(), 22);
        assert_eq!(s.block_count(), 77);
        for b in s.blocks() {
            assert_eq!(b.len(), 6);
        }
        // double counting: 77 blocks of size 6 over 22 points = 21 per point
        assert_eq!(77 * 6 / 22, 21);
    }
}
