//! Automorphism groups and canonical certificates by equitable-partition
//! refinement with individualization backtracking.
//!
//! Strongly regular graphs defeat plain refinement (the unit partition of a
//! regular graph is already equitable), so the search individualizes one
//! vertex of the smallest non-singleton cell at a time, prunes subtrees by
//! the node invariant (the refined cell-size trace) and by orbits of the
//! automorphisms discovered so far, and extracts generators by comparing
//! leaf labellings against the first and the best leaf.

use std::cmp::Ordering;

use rustc_hash::FxHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::perm::{Perm, PermGroup};

/// Default cap on search-tree nodes. The census overrides it through the
/// `GEODEX_BUDGET` environment variable for the big sporadic graphs.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Ordered partition of the vertex set; cell order is significant because
/// refinement splits cells in place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> OrderedPartition {
        if n == 0 {
            return OrderedPartition { cells: Vec::new() };
        }
        OrderedPartition { cells: vec![(0..n).collect()] }
    }

    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Result<OrderedPartition> {
        let mut seen = vec![false; n];
        let mut covered = 0;
        for cell in &cells {
            for &v in cell {
                if v >= n || seen[v] {
                    return Err(Error::InvalidPartition(format!("cell entry {v}")));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::InvalidPartition(format!("{covered} of {n} points covered")));
        }
        Ok(OrderedPartition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn cell_sizes(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c.len() as u32).collect()
    }

    /// `v` pulled out as a singleton in front of its cell.
    fn individualize(&self, cell_idx: usize, v: usize) -> OrderedPartition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for (i, cell) in self.cells.iter().enumerate() {
            if i == cell_idx {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&x| x != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        OrderedPartition { cells }
    }
}

/// Coarsest equitable refinement of `p`: afterwards every cell has a
/// constant neighbour count into every cell. Output refines the input and
/// the map is idempotent. Splits order the parts by ascending count, which
/// keeps the procedure label-independent.
pub fn refine(g: &Graph, p: &OrderedPartition) -> OrderedPartition {
    // arena of cells; splitting kills a cell and splices its parts in place
    let mut arena: Vec<Option<Vec<usize>>> = p.cells.iter().cloned().map(Some).collect();
    let mut order: Vec<usize> = (0..arena.len()).collect();
    let mut queue: std::collections::VecDeque<usize> = (0..arena.len()).collect();

    while let Some(splitter_id) = queue.pop_front() {
        let Some(splitter) = arena[splitter_id].clone() else { continue };
        let mut mask = VertexSet::empty(g.n());
        for &v in &splitter {
            mask.insert(v);
        }
        let snapshot = order.clone();
        for cell_id in snapshot {
            let Some(cell) = arena[cell_id].as_ref() else { continue };
            if cell.len() == 1 {
                continue;
            }
            let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for &v in cell {
                let count = g.row(v).iter().zip(mask.as_words()).map(|(a, b)| (a & b).count_ones()).sum::<u32>();
                groups.entry(count as usize).or_default().push(v);
            }
            if groups.len() == 1 {
                continue;
            }
            arena[cell_id] = None;
            let pos = order.iter().position(|&id| id == cell_id).unwrap();
            let mut new_ids = Vec::with_capacity(groups.len());
            for (_, part) in groups {
                new_ids.push(arena.len());
                arena.push(Some(part));
            }
            queue.extend(new_ids.iter().copied());
            order.splice(pos..=pos, new_ids);
        }
    }
    OrderedPartition { cells: order.into_iter().map(|id| arena[id].take().unwrap()).collect() }
}

/// Canonical form of a graph: the adjacency matrix of the canonically
/// labelled copy. Equal certificates mean isomorphic graphs (within this
/// implementation).
#[derive(Clone, PartialEq, Eq)]
pub struct Certificate {
    n: usize,
    blob: Vec<u64>,
}

impl Certificate {
    pub fn invariant_hash(&self) -> u64 {
        let mut h = FxHasher::default();
        self.n.hash(&mut h);
        self.blob.hash(&mut h);
        h.finish()
    }

    /// Edge list of the canonical labelling.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.blob[(u * self.n + v) / 64] >> ((u * self.n + v) % 64) & 1 == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Certificate(n={}, hash={:016x})", self.n, self.invariant_hash())
    }
}

pub struct SearchOutcome {
    pub group: PermGroup,
    pub certificate: Certificate,
    /// canonical position -> vertex
    pub canonical_order: Vec<usize>,
    pub nodes: u64,
}

struct Leaf {
    /// position -> vertex
    order: Vec<usize>,
    blob: Vec<u64>,
}

struct Search<'g> {
    g: &'g Graph,
    budget: u64,
    nodes: u64,
    trace: Vec<Vec<u32>>,
    first_trace: Vec<Vec<u32>>,
    first: Option<Leaf>,
    best_trace: Vec<Vec<u32>>,
    best: Option<Leaf>,
    autos: Vec<Perm>,
}

impl<'g> Search<'g> {
    fn blob_of(&self, order: &[usize]) -> Vec<u64> {
        let n = self.g.n();
        let mut blob = vec![0u64; (n * n).div_ceil(64)];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.g.has_edge(u, v) {
                    let bit = i * n + j;
                    blob[bit / 64] |= 1 << (bit % 64);
                }
            }
        }
        blob
    }

    /// Record the automorphism mapping leaf `from` onto leaf `to`; both have
    /// identical blobs, so position-wise matching preserves adjacency.
    fn record_auto(&mut self, from: &Leaf, to: &[usize]) {
        let n = self.g.n();
        let mut img = vec![0usize; n];
        for (i, &v) in to.iter().enumerate() {
            img[v] = from.order[i];
        }
        let perm = Perm::from_images(img).expect("leaf orders are bijections");
        if perm.is_identity() || self.autos.contains(&perm) {
            return;
        }
        debug_assert!(is_automorphism(self.g, &perm));
        self.autos.push(perm);
    }

    /// Lexicographic comparison of the current trace against the best trace.
    fn cmp_vs_best(&self) -> Ordering {
        for (cur, best) in self.trace.iter().zip(&self.best_trace) {
            match cur.cmp(best) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn on_first_trace(&self) -> bool {
        self.trace.len() <= self.first_trace.len()
            && self.trace.iter().zip(&self.first_trace).all(|(a, b)| a == b)
    }

    fn node(&mut self, pre: &OrderedPartition, fixed: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let p = refine(self.g, pre);
        let inv = p.cell_sizes();
        let building_first = self.first.is_none();
        if building_first {
            self.first_trace.push(inv.clone());
        }
        self.trace.push(inv);

        let keep = if building_first {
            true
        } else {
            // paths automorphic to the first leaf must never be pruned, and
            // only paths at least as large as the best can become canonical
            self.on_first_trace() || self.cmp_vs_best() != Ordering::Less
        };
        if !keep {
            self.trace.pop();
            return Ok(());
        }

        if p.is_discrete() {
            let order: Vec<usize> = p.cells().iter().map(|c| c[0]).collect();
            let blob = self.blob_of(&order);
            let leaf = Leaf { order, blob };
            if building_first {
                self.best_trace = self.trace.clone();
                self.best = Some(Leaf { order: leaf.order.clone(), blob: leaf.blob.clone() });
                self.first = Some(leaf);
            } else {
                if let Some(first) = &self.first {
                    if leaf.blob == first.blob {
                        let from = Leaf { order: first.order.clone(), blob: Vec::new() };
                        self.record_auto(&from, &leaf.order);
                    }
                }
                let best = self.best.as_ref().expect("best set with first leaf");
                let cmp = self.cmp_vs_best().then_with(|| leaf.blob.cmp(&best.blob));
                match cmp {
                    Ordering::Greater => {
                        self.best_trace = self.trace.clone();
                        self.best = Some(leaf);
                    }
                    Ordering::Equal => {
                        let from = Leaf { order: best.order.clone(), blob: Vec::new() };
                        self.record_auto(&from, &leaf.order);
                    }
                    Ordering::Less => {}
                }
            }
            self.trace.pop();
            return Ok(());
        }

        let target = p
            .cells()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let candidates = p.cells()[target].clone();

        let mut explored: Vec<usize> = Vec::new();
        let mut reach: Vec<usize> = Vec::new();
        let mut reach_version = usize::MAX;
        for &v in &candidates {
            if !explored.is_empty() {
                if reach_version != self.autos.len() {
                    reach = orbit_closure(self.g.n(), &self.autos, fixed);
                    reach_version = self.autos.len();
                }
                if explored.iter().any(|&w| reach[v] == reach[w]) {
                    continue;
                }
            }
            explored.push(v);
            let child = p.individualize(target, v);
            fixed.push(v);
            let result = self.node(&child, fixed);
            fixed.pop();
            result?;
        }
        self.trace.pop();
        Ok(())
    }
}

/// Union-find labels of the orbits of the subgroup generated by the stored
/// automorphisms that fix `fixed` pointwise.
fn orbit_closure(n: usize, autos: &[Perm], fixed: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in autos {
        if fixed.iter().any(|&f| a.apply(f) != f) {
            continue;
        }
        for v in 0..n {
            let (rv, rw) = (find(&mut parent, v), find(&mut parent, a.apply(v)));
            if rv != rw {
                parent[rv.max(rw)] = rv.min(rw);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

pub fn is_automorphism(g: &Graph, p: &Perm) -> bool {
    p.degree() == g.n() && g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// Full search: automorphism generators plus the canonical certificate.
/// `seeds` are optional known automorphisms (verified here); they accelerate
/// orbit pruning but the search remains the authority for completeness.
pub fn search(g: &Graph, seeds: &[Perm], budget: u64) -> Result<SearchOutcome> {
    for s in seeds {
        if !is_automorphism(g, s) {
            return Err(Error::NotAutomorphisms);
        }
    }
    let mut autos: Vec<Perm> = Vec::new();
    for s in seeds {
        if !s.is_identity() && !autos.contains(s) {
            autos.push(s.clone());
        }
    }
    let mut search = Search {
        g,
        budget,
        nodes: 0,
        trace: Vec::new(),
        first_trace: Vec::new(),
        first: None,
        best_trace: Vec::new(),
        best: None,
        autos,
    };
    let mut fixed = Vec::new();
    search.node(&OrderedPartition::unit(g.n()), &mut fixed)?;

    let best = search.best.take();
    let (order, blob) = match best {
        Some(leaf) => (leaf.order, leaf.blob),
        None => (Vec::new(), Vec::new()), // only for n = 0
    };
    for a in &search.autos {
        if !is_automorphism(g, a) {
            return Err(Error::InternalVerificationFailed {
                name: "autsearch",
                detail: "emitted generator does not preserve adjacency".into(),
            });
        }
    }
    // the search hoards every distinct leaf automorphism; hand out a
    // generating set that downstream tuple closures can afford to iterate
    let gens = crate::perm::reduce_generators(g.n(), &search.autos);
    Ok(SearchOutcome {
        group: PermGroup::new(g.n(), gens)?,
        certificate: Certificate { n: g.n(), blob },
        canonical_order: order,
        nodes: search.nodes,
    })
}

pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    Ok(search(g, &[], DEFAULT_NODE_BUDGET)?.group)
}

pub fn automorphism_group_with(g: &Graph, seeds: &[Perm], budget: u64) -> Result<PermGroup> {
    Ok(search(g, seeds, budget)?.group)
}

pub fn canonical_certificate(g: &Graph) -> Result<Certificate> {
    Ok(search(g, &[], DEFAULT_NODE_BUDGET)?.certificate)
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(isomorphism(g1, g2)?.is_some())
}

/// An adjacency-preserving bijection g1 -> g2 when one exists.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut degs1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut degs2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    degs1.sort_unstable();
    degs2.sort_unstable();
    if degs1 != degs2 {
        return Ok(None);
    }
    let s1 = search(g1, &[], DEFAULT_NODE_BUDGET)?;
    let s2 = search(g2, &[], DEFAULT_NODE_BUDGET)?;
    if s1.certificate != s2.certificate {
        return Ok(None);
    }
    // position-wise matching of the two canonical orders
    let mut map = vec![0usize; g1.n()];
    for (i, &v) in s1.canonical_order.iter().enumerate() {
        map[v] = s2.canonical_order[i];
    }
    let ok = g1.edges().all(|(u, v)| g2.has_edge(map[u], map[v]));
    if !ok {
        return Err(Error::InternalVerificationFailed {
            name: "isomorphism",
            detail: "certificates matched but the induced map is not an isomorphism".into(),
        });
    }
    Ok(Some(map))
}
