//! Permutations, finitely generated permutation groups, orbits on points and
//! tuples, a deterministic Schreier-Sims implementation, block systems and
//! primitivity tests.
//!
//! Composition is left-to-right: `(a * b)(x) = b(a(x))`. Permutations are
//! stored as image arrays; cycle notation exists only at the I/O boundary.

use std::collections::VecDeque;
use std::sync::OnceLock;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    img: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { img: (0..degree as u16).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Perm> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("image array {img:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { img: img.into_iter().map(|x| x as u16).collect() })
    }

    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(Error::DegreeMismatch { expected: degree, found: x.max(y) + 1 });
                }
                if moved[x] {
                    return Err(Error::NotAPermutation(format!("point {x} in two cycles")));
                }
                moved[x] = true;
                img[x] = y;
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u16 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { img: self.img.iter().map(|&x| other.img[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u16;
        }
        Perm { img }
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize).collect()
    }

    /// Disjoint cycle decomposition, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}

/// Unordered partition of 0..n-1 into disjoint cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, mut cells: Vec<Vec<usize>>) -> Result<VertexPartition> {
        let mut seen = vec![false; n];
        let mut covered = 0;
        for cell in &mut cells {
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("point {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("point {v} in two cells")));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(Error::InvalidPartition(format!("{} of {} points covered", covered, n)));
        }
        cells.sort();
        Ok(VertexPartition { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Map point -> index of its cell.
    pub fn cell_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                out[v] = i;
            }
        }
        out
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }
}

struct LevelData {
    /// orbit of base[i] in discovery order
    orbit: Vec<usize>,
    /// transversal[x] maps base[i] to x for x in the orbit
    transversal: Vec<Option<Perm>>,
}

/// Base and strong generating set: a stabiliser chain giving exact group
/// order, membership testing and point stabilisers.
pub struct Bsgs {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    levels: Vec<LevelData>,
}

impl Bsgs {
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Strong generators fixing base[0..i] pointwise.
    fn gens_for_level(&self, i: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .filter(|g| self.base[..i].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    fn recompute_level(&mut self, i: usize) {
        let gens = self.gens_for_level(i);
        let point = self.base[i];
        let mut orbit = vec![point];
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[point] = Some(Perm::identity(self.degree));
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &gens {
                let y = g.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(transversal[x].as_ref().unwrap().then(g));
                    orbit.push(y);
                }
            }
        }
        self.levels[i] = LevelData { orbit, transversal };
    }

    /// Register a new strong generator, extending the base when it fixes all
    /// existing base points, and refresh every affected level.
    fn insert(&mut self, g: Perm) {
        debug_assert!(!g.is_identity());
        let fixed_prefix =
            self.base.iter().position(|&b| g.apply(b) != b).unwrap_or(self.base.len());
        if fixed_prefix == self.base.len() {
            self.base.push(base_point_for(&g));
            self.levels.push(LevelData { orbit: Vec::new(), transversal: Vec::new() });
        }
        self.strong.push(g);
        for i in 0..=fixed_prefix.min(self.base.len() - 1) {
            self.recompute_level(i);
        }
    }

    /// Sift `p` through levels start.., stopping where no transversal entry
    /// matches; the residue is the identity exactly when `p` factors.
    fn sift_from(&self, start: usize, p: &Perm) -> (usize, Perm) {
        let mut residue = p.clone();
        for i in start..self.levels.len() {
            let image = residue.apply(self.base[i]);
            match &self.levels[i].transversal[image] {
                None => return (i, residue),
                Some(t) => residue = residue.then(&t.inverse()),
            }
        }
        (self.levels.len(), residue)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (_, residue) = self.sift_from(0, p);
        residue.is_identity()
    }

    /// Strong generators that fix the first base point.
    fn first_point_stabilizer_gens(&self) -> Vec<Perm> {
        if self.base.is_empty() {
            return Vec::new();
        }
        self.gens_for_level(1)
    }
}

/// Deterministic Schreier-Sims: seed the chain with the generators, then
/// sift Schreier generators level by level until everything factors.
fn schreier_sims(degree: usize, generators: &[Perm]) -> Bsgs {
    let mut bsgs = Bsgs { degree, base: Vec::new(), strong: Vec::new(), levels: Vec::new() };
    for g in generators {
        if !g.is_identity() && !bsgs.contains(g) {
            bsgs.insert(g.clone());
        }
    }
    loop {
        let mut added = false;
        for i in 0..bsgs.base.len() {
            let gens = bsgs.gens_for_level(i);
            let orbit = bsgs.levels[i].orbit.clone();
            for &x in &orbit {
                let t_x = bsgs.levels[i].transversal[x].as_ref().unwrap().clone();
                for g in &gens {
                    let y = g.apply(x);
                    let t_y_inv = bsgs.levels[i].transversal[y].as_ref().unwrap().inverse();
                    let schreier = t_x.then(g).then(&t_y_inv);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (_, residue) = bsgs.sift_from(i + 1, &schreier);
                    if !residue.is_identity() {
                        bsgs.insert(residue);
                        added = true;
                    }
                }
            }
        }
        if !added {
            return bsgs;
        }
    }
}

/// Drop generators that do not enlarge the group generated by the ones
/// already kept. The result generates the same group.
pub fn reduce_generators(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut kept: Vec<Perm> = Vec::new();
    let mut chain = schreier_sims(degree, &[]);
    for g in gens {
        if !g.is_identity() && !chain.contains(g) {
            kept.push(g.clone());
            chain = schreier_sims(degree, &kept);
        }
    }
    kept
}

/// Greedy base choice: the moved point on the longest cycle of `p`, so the
/// new fundamental orbit starts as large as possible.
fn base_point_for(p: &Perm) -> usize {
    let mut best = (0usize, usize::MAX);
    for cycle in p.cycles() {
        let lead = *cycle.iter().min().unwrap();
        if cycle.len() > best.0 || (cycle.len() == best.0 && lead < best.1) {
            best = (cycle.len(), lead);
        }
    }
    best.1
}

/// A finitely generated permutation group. The stabiliser chain is built
/// lazily and cached; the group is immutable afterwards.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        Ok(PermGroup { degree, gens, bsgs: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, gens: Vec::new(), bsgs: OnceLock::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| schreier_sims(self.degree, &self.gens))
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.bsgs().contains(p)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        debug_assert!(point < self.degree);
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn orbit_partition(&self) -> VertexPartition {
        let mut cell_of = vec![usize::MAX; self.degree];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.degree {
            if cell_of[start] != usize::MAX {
                continue;
            }
            let orbit = self.orbit(start);
            for &v in &orbit {
                cell_of[v] = cells.len();
            }
            cells.push(orbit);
        }
        VertexPartition::new(self.degree, cells).expect("orbits partition the points")
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Generators of the stabiliser of `v`, via Schreier generators of the
    /// full group reduced to a strong set.
    pub fn stabilizer(&self, v: usize) -> PermGroup {
        let bsgs = self.bsgs();
        if bsgs.base.first() == Some(&v) {
            let gens = bsgs.first_point_stabilizer_gens();
            return PermGroup { degree: self.degree, gens, bsgs: OnceLock::new() };
        }
        // transversal for the orbit of v under the whole group
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[v] = Some(Perm::identity(self.degree));
        let mut orbit = vec![v];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.gens {
                let y = g.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(transversal[x].as_ref().unwrap().then(g));
                    orbit.push(y);
                }
            }
        }
        let mut kept: Vec<Perm> = Vec::new();
        let mut probe = schreier_sims(self.degree, &[]);
        for &x in &orbit {
            let t_x = transversal[x].as_ref().unwrap();
            for g in &self.gens {
                let y = g.apply(x);
                let s = t_x.then(g).then(&transversal[y].as_ref().unwrap().inverse());
                if !s.is_identity() && !probe.contains(&s) {
                    kept.push(s.clone());
                    probe = schreier_sims(self.degree, &kept);
                }
            }
        }
        PermGroup { degree: self.degree, gens: kept, bsgs: OnceLock::new() }
    }

    /// The finest block system whose block containing `a` also contains `b`.
    /// Atkinson's algorithm over a union-find of points.
    pub fn minimal_block_system(&self, a: usize, b: usize) -> Result<VertexPartition> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let mut uf = UnionFind::new(self.degree);
        // process the representative that was absorbed, not `b` itself:
        // the surviving root needs no propagation of its own pair
        let lost = uf.union(a, b);
        let mut queue = VecDeque::from([lost]);
        while let Some(x) = queue.pop_front() {
            let r = uf.find(x);
            for g in &self.gens {
                let xi = g.apply(x);
                let ri = g.apply(r);
                let (fx, fr) = (uf.find(xi), uf.find(ri));
                if fx != fr {
                    let merged_away = uf.union(fx, fr);
                    queue.push_back(merged_away);
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); self.degree];
        for v in 0..self.degree {
            cells[uf.find(v)].push(v);
        }
        cells.retain(|c| !c.is_empty());
        VertexPartition::new(self.degree, cells)
    }

    /// Only trivial block systems exist.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if self.degree <= 2 {
            return Ok(true);
        }
        for b in 1..self.degree {
            if self.minimal_block_system(0, b)?.cell_count() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_two_transitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if self.degree <= 2 {
            return Ok(true);
        }
        let stab = self.stabilizer(0);
        Ok(stab.orbit(1).len() == self.degree - 1)
    }

    /// The point stabiliser acts primitively on the remaining points.
    pub fn is_two_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if self.degree <= 2 {
            return Ok(true);
        }
        let stab = self.stabilizer(0);
        let rest: Vec<usize> = (1..self.degree).collect();
        let induced = stab.action_on_set(&rest)?;
        induced.group.is_primitive()
    }

    /// Action induced on an invariant point set, with the relabelling map
    /// (new point -> original point) and the kernel order.
    pub fn action_on_set(&self, set: &[usize]) -> Result<InducedAction> {
        let mut index = vec![usize::MAX; self.degree];
        for (i, &v) in set.iter().enumerate() {
            index[v] = i;
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut img = vec![0usize; set.len()];
            for (i, &v) in set.iter().enumerate() {
                let w = g.apply(v);
                if w >= self.degree || index[w] == usize::MAX {
                    return Err(Error::SetNotInvariant);
                }
                img[i] = index[w];
            }
            gens.push(Perm::from_images(img)?);
        }
        let group = PermGroup::new(set.len(), gens)?;
        let kernel_order = self.order() / group.order();
        Ok(InducedAction { group, relabel: set.to_vec(), kernel_order })
    }
}

pub struct InducedAction {
    pub group: PermGroup,
    /// new point -> original point
    pub relabel: Vec<usize>,
    pub kernel_order: u128,
}

impl InducedAction {
    pub fn faithful(&self) -> bool {
        self.kernel_order == 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merge the classes of `x` and `y`; the smaller root wins. Returns the
    /// representative that was absorbed.
    fn union(&mut self, x: usize, y: usize) -> usize {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return rx;
        }
        let (keep, lose) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[lose] = keep;
        lose
    }
}

/// Default cap on tuple-orbit closures (number of stored tuples).
pub const DEFAULT_TUPLE_BUDGET: usize = 1 << 27;

const TUPLE_MAX_LEN: usize = 8;

fn pack(tuple: &[usize]) -> u128 {
    debug_assert!(tuple.len() <= TUPLE_MAX_LEN);
    tuple.iter().fold(0u128, |acc, &v| {
        debug_assert!(v < 1 << 16);
        acc << 16 | v as u128
    })
}

pub struct TupleOrbitStats {
    pub covers: bool,
    pub orbit_size: usize,
    pub universe_size: usize,
}

/// Closure-with-count transitivity kernel: the orbit of `seed` under the
/// coordinatewise action is grown by breadth-first closure and its size
/// compared against the size of the streamed universe.
pub fn tuple_orbit_stats(
    group: &PermGroup,
    seed: &[usize],
    universe: impl Iterator<Item = Vec<usize>>,
    budget: usize,
) -> Result<TupleOrbitStats> {
    if seed.len() > TUPLE_MAX_LEN {
        return Err(Error::BadParameter(format!(
            "tuple length {} exceeds the packing limit {TUPLE_MAX_LEN}",
            seed.len()
        )));
    }
    if group.degree() > 1 << 16 {
        return Err(Error::BadParameter(format!(
            "degree {} exceeds the 16-bit packing limit",
            group.degree()
        )));
    }
    let mut universe_size = 0usize;
    let mut seed_found = false;
    for t in universe {
        universe_size += 1;
        if !seed_found && t == seed {
            seed_found = true;
        }
    }
    if !seed_found {
        return Err(Error::SeedNotInUniverse);
    }

    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(pack(seed));
    let mut frontier: Vec<Vec<usize>> = vec![seed.to_vec()];
    let mut image = vec![0usize; seed.len()];
    while let Some(t) = frontier.pop() {
        for g in group.gens() {
            for (slot, &v) in image.iter_mut().zip(&t) {
                *slot = g.apply(v);
            }
            if seen.insert(pack(&image)) {
                if seen.len() > budget {
                    return Err(Error::TupleBudgetExceeded(budget));
                }
                frontier.push(image.clone());
            }
        }
    }
    Ok(TupleOrbitStats { covers: seen.len() == universe_size, orbit_size: seen.len(), universe_size })
}

/// TRUE iff the orbit of `seed` equals the whole universe.
pub fn tuple_orbit_covers(
    group: &PermGroup,
    seed: &[usize],
    universe: impl Iterator<Item = Vec<usize>>,
) -> Result<bool> {
    Ok(tuple_orbit_stats(group, seed, universe, DEFAULT_TUPLE_BUDGET)?.covers)
}
