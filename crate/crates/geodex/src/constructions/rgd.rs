//! Resolvable group-divisible designs RGD(k, lambda, m) and their point-block
//! incidence graphs. Designs are first-class inputs (see the JSON schema in
//! the io module) so new designs can be fed to the incidence construction.

use crate::error::{Error, Result};
use crate::graph::{Graph, IntersectionArray};

use super::LabeledGraph;

/// A resolvable divisible design: km points split into k classes of size m,
/// blocks of size k transversal to the classes, cross-class point pairs in
/// exactly lambda common blocks, and the blocks partitioned into parallel
/// classes, each a partition of the points.
#[derive(Clone, Debug)]
pub struct RgdDesign {
    points: usize,
    classes: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    parallel_classes: Vec<Vec<usize>>,
}

/// The numerical shape extracted by validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RgdShape {
    /// block size
    pub k: usize,
    /// common blocks through a cross-class point pair
    pub lambda: usize,
    /// class size
    pub m: usize,
}

impl RgdDesign {
    /// Checks every design invariant before accepting the data.
    pub fn new(
        points: usize,
        classes: Vec<Vec<usize>>,
        blocks: Vec<Vec<usize>>,
        parallel_classes: Vec<Vec<usize>>,
    ) -> Result<RgdDesign> {
        let design = RgdDesign { points, classes, blocks, parallel_classes };
        design.validate()?;
        Ok(design)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn parallel_classes(&self) -> &[Vec<usize>] {
        &self.parallel_classes
    }

    fn class_of(&self) -> Result<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.points];
        for (c, class) in self.classes.iter().enumerate() {
            for &p in class {
                if p >= self.points {
                    return Err(Error::DesignInvariantViolated(format!(
                        "class point {p} out of range"
                    )));
                }
                if class_of[p] != usize::MAX {
                    return Err(Error::DesignInvariantViolated(format!(
                        "point {p} in two classes"
                    )));
                }
                class_of[p] = c;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::DesignInvariantViolated("classes do not cover the points".into()));
        }
        Ok(class_of)
    }

    pub fn validate(&self) -> Result<RgdShape> {
        let class_of = self.class_of()?;
        let m = self.classes.first().map(|c| c.len()).unwrap_or(0);
        if m == 0 || self.classes.iter().any(|c| c.len() != m) {
            return Err(Error::DesignInvariantViolated("classes must have equal size".into()));
        }
        let k = self.classes.len();
        if self.points != k * m {
            return Err(Error::DesignInvariantViolated(format!(
                "{} points with {k} classes of size {m}",
                self.points
            )));
        }
        // each block meets every class in exactly one point
        for block in &self.blocks {
            if block.len() != k {
                return Err(Error::DesignInvariantViolated(format!(
                    "block {block:?} has size {}, expected {k}",
                    block.len()
                )));
            }
            let mut met = vec![false; k];
            for &p in block {
                if p >= self.points {
                    return Err(Error::DesignInvariantViolated(format!(
                        "block point {p} out of range"
                    )));
                }
                if met[class_of[p]] {
                    return Err(Error::DesignInvariantViolated(format!(
                        "block {block:?} meets a class twice"
                    )));
                }
                met[class_of[p]] = true;
            }
        }
        // constant lambda over cross-class pairs
        let mut lambda = None;
        for u in 0..self.points {
            for v in u + 1..self.points {
                if class_of[u] == class_of[v] {
                    continue;
                }
                let common = self
                    .blocks
                    .iter()
                    .filter(|b| b.contains(&u) && b.contains(&v))
                    .count();
                if *lambda.get_or_insert(common) != common {
                    return Err(Error::DesignInvariantViolated(format!(
                        "pair ({u},{v}) lies in {common} blocks, another pair differs"
                    )));
                }
            }
        }
        let lambda = lambda.ok_or_else(|| {
            Error::DesignInvariantViolated("no cross-class point pairs".into())
        })?;
        // parallel classes partition the blocks, and each partitions the points
        let mut block_used = vec![false; self.blocks.len()];
        for pc in &self.parallel_classes {
            let mut covered = vec![false; self.points];
            for &b in pc {
                if b >= self.blocks.len() || block_used[b] {
                    return Err(Error::DesignInvariantViolated(format!(
                        "parallel class reuses or exceeds block index {b}"
                    )));
                }
                block_used[b] = true;
                for &p in &self.blocks[b] {
                    if covered[p] {
                        return Err(Error::DesignInvariantViolated(
                            "parallel class covers a point twice".into(),
                        ));
                    }
                    covered[p] = true;
                }
            }
            if covered.iter().any(|&c| !c) {
                return Err(Error::DesignInvariantViolated(
                    "parallel class does not cover the points".into(),
                ));
            }
        }
        if block_used.iter().any(|&u| !u) {
            return Err(Error::DesignInvariantViolated(
                "some block lies in no parallel class".into(),
            ));
        }
        Ok(RgdShape { k, lambda, m })
    }

    /// Index of the parallel class of each block.
    fn parallel_class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.blocks.len()];
        for (i, pc) in self.parallel_classes.iter().enumerate() {
            for &b in pc {
                out[b] = i;
            }
        }
        out
    }
}

/// The bipartite point-block incidence graph of a design satisfying
/// r = lambda * m and the cross-parallel-class intersection hypothesis;
/// verified distance-regular with array (r, r-1, r-lambda, 1; 1, lambda, r-1, r).
pub fn rgd_incidence_graph(design: &RgdDesign) -> Result<LabeledGraph> {
    let shape = design.validate()?;
    let r = shape.k;
    if r != shape.lambda * shape.m {
        return Err(Error::DesignInvariantViolated(format!(
            "r = {r} but lambda*m = {}",
            shape.lambda * shape.m
        )));
    }
    // any two blocks from different parallel classes share exactly lambda points
    let pc_of = design.parallel_class_of();
    for a in 0..design.blocks.len() {
        for b in a + 1..design.blocks.len() {
            if pc_of[a] == pc_of[b] {
                continue;
            }
            let common =
                design.blocks[a].iter().filter(|p| design.blocks[b].contains(p)).count();
            if common != shape.lambda {
                return Err(Error::CrossClassIntersectionNotConstant);
            }
        }
    }
    let np = design.points;
    let graph = Graph::from_rule(np + design.blocks.len(), |x, y| {
        let (p, b) = (x.min(y), x.max(y));
        p < np && b >= np && design.blocks[b - np].contains(&p)
    });
    let expected = IntersectionArray {
        b: vec![r, r - 1, r - shape.lambda, 1],
        c: vec![1, shape.lambda, r - 1, r],
    };
    match graph.intersection_array() {
        Some(arr) if arr == expected => {}
        got => {
            return Err(Error::InternalVerificationFailed {
                name: "rgd_incidence_graph",
                detail: format!("intersection array {got:?}, expected {expected}"),
            })
        }
    }
    let mut labels: Vec<String> = (0..np).map(|p| format!("x{p}")).collect();
    labels.extend((0..design.blocks.len()).map(|b| format!("B{b}")));
    Ok(LabeledGraph { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// RGD(3,1,3) from the affine plane of order 3: points are F_3 x F_3,
    /// classes are the vertical lines, blocks the lines of the other three
    /// directions. Its incidence graph is the Pappus graph, 3K_{3,3}.
    pub(crate) fn affine_rgd() -> RgdDesign {
        let point = |x: usize, y: usize| 3 * x + y;
        let classes: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| point(x, y)).collect()).collect();
        let mut blocks = Vec::new();
        let mut parallel = Vec::new();
        for slope in 0..3 {
            let mut pc = Vec::new();
            for intercept in 0..3 {
                pc.push(blocks.len());
                blocks.push((0..3).map(|x| point(x, (slope * x + intercept) % 3)).collect());
            }
            parallel.push(pc);
        }
        RgdDesign::new(9, classes, blocks, parallel).unwrap()
    }

    #[test]
    fn affine_design_validates() {
        let d = affine_rgd();
        assert_eq!(d.validate().unwrap(), RgdShape { k: 3, lambda: 1, m: 3 });
    }

    #[test]
    fn pappus_incidence_graph() {
        let g = rgd_incidence_graph(&affine_rgd()).unwrap();
        assert_eq!(g.graph.n(), 18);
        assert_eq!(g.graph.girth(), Some(6));
        assert_eq!(g.graph.intersection_array().unwrap().to_string(), "(3,2,2,1;1,1,2,3)");
    }

    #[test]
    fn broken_designs_are_rejected() {
        let d = affine_rgd();
        // drop a block from a parallel class
        let bad = RgdDesign::new(
            9,
            d.classes.clone(),
            d.blocks.clone(),
            vec![vec![0, 1], vec![3, 4, 5], vec![6, 7, 8]],
        );
        assert!(matches!(bad, Err(Error::DesignInvariantViolated(_))));
        // a block meeting a class twice
        let bad = RgdDesign::new(
            9,
            d.classes.clone(),
            vec![vec![0, 1, 2]],
            vec![vec![0]],
        );
        assert!(matches!(bad, Err(Error::DesignInvariantViolated(_))));
    }
}
