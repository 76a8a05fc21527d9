//! Finite simple undirected graphs with bitset adjacency, plus the
//! distance-based invariants the census is built on: spheres, geodesic and
//! arc streams, intersection numbers, strong regularity.
//!
//! Set intersection (common-neighbour counting) dominates the runtime of
//! everything downstream, so adjacency rows are flat `u64` words and the
//! counting loops are popcounts over word slices.

use crate::error::{Error, Result};

const W: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(W)
}

/// A set of vertices of a fixed-size vertex universe, stored as machine words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / W] |= 1 << (v % W);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / W] &= !(1 << (v % W));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / W] >> (v % W) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }

    pub fn as_words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        std::iter::successors(Some(w), |&w| (w != 0).then(|| w & (w - 1)))
            .take_while(|&w| w != 0)
            .map(move |w| i * W + w.trailing_zeros() as usize)
    })
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Exact shortest-path distances from one source vertex.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    source: usize,
    dist: Vec<u32>,
}

pub const UNREACHABLE: u32 = u32::MAX;

impl DistanceTable {
    pub fn source(&self) -> usize {
        self.source
    }

    /// Distance to `v`, or `None` when `v` lies in another component.
    pub fn get(&self, v: usize) -> Option<usize> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn raw(&self) -> &[u32] {
        &self.dist
    }

    /// Largest finite distance from the source.
    pub fn eccentricity(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHABLE).max().copied().unwrap_or(0) as usize
    }

    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }
}

/// The local parameters (c_i, a_i, b_i) at one distance level: for a vertex
/// `v` at distance `i` from a base vertex `u`, the number of neighbours of
/// `v` at distance i-1, i, i+1 from `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntersectionNumbers {
    pub level: usize,
    pub c: usize,
    pub a: usize,
    pub b: usize,
}

/// The sequence (b_0,...,b_{d-1}; c_1,...,c_d) of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.c.len()
    }

    pub fn valency(&self) -> usize {
        self.b[0]
    }

    /// a_i = k - b_i - c_i, with b_d = 0 and c_0 = 0.
    pub fn a(&self, i: usize) -> usize {
        let k = self.valency();
        let bi = if i < self.b.len() { self.b[i] } else { 0 };
        let ci = if i == 0 { 0 } else { self.c[i - 1] };
        k - bi - ci
    }

    /// Standard monotonicity: c_i <= c_{i+1} and b_i >= b_{i+1}.
    pub fn is_monotone(&self) -> bool {
        self.c.windows(2).all(|w| w[0] <= w[1]) && self.b.windows(2).all(|w| w[0] >= w[1])
    }
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.b), join(&self.c))
    }
}

/// Strongly regular parameters (n, k, a, c).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    /// The counting identity k(k-a-1) = (n-k-1)c every SRG satisfies.
    pub fn feasible(&self) -> bool {
        self.k * (self.k - self.a - 1) == (self.n - self.k - 1) * self.c
    }
}

/// Finite simple undirected graph on vertices 0..n-1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    w: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count)
    }
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let w = words_for(n);
        let mut g = Graph { n, w, adj: vec![0; n * w], edge_count: 0 };
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::EndpointOutOfRange { endpoint: u, n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { endpoint: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from an adjacency predicate; `rule` is only consulted for u < v.
    pub fn from_rule(n: usize, rule: impl Fn(usize, usize) -> bool) -> Graph {
        let w = words_for(n);
        let mut g = Graph { n, w, adj: vec![0; n * w], edge_count: 0 };
        for u in 0..n {
            for v in u + 1..n {
                if rule(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.adj[u * self.w + v / W] |= 1 << (v % W);
            self.adj[v * self.w + u / W] |= 1 << (u % W);
            self.edge_count += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.w..(v + 1) * self.w]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.w + v / W] >> (v % W) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Common valency, or `None` when degrees differ.
    pub fn regular_valency(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }

    pub fn distances_from(&self, v: usize) -> DistanceTable {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        DistanceTable { source: v, dist }
    }

    /// BFS levels from `v` as bitsets; `levels[i]` holds the vertices at
    /// distance exactly i. Unreachable vertices appear in no level.
    pub fn levels_from(&self, v: usize) -> Vec<VertexSet> {
        let table = self.distances_from(v);
        let ecc = table.eccentricity();
        let mut levels = vec![VertexSet::empty(self.n); ecc + 1];
        for u in 0..self.n {
            if let Some(d) = table.get(u) {
                levels[d].insert(u);
            }
        }
        levels
    }

    pub fn sphere(&self, v: usize, i: usize) -> VertexSet {
        let table = self.distances_from(v);
        VertexSet::from_iter(self.n, (0..self.n).filter(|&u| table.get(u) == Some(i)))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).all_reachable()
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n).map(|v| self.distances_from(v).eccentricity()).max().unwrap_or(0))
    }

    /// Length of the shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for v in 0..self.n {
            let mut dist = vec![UNREACHABLE; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[v] = 0;
            let mut queue = std::collections::VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if dist[y] == UNREACHABLE {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            // every non-tree edge closes a cycle through the BFS tree paths
            for x in 0..self.n {
                if dist[x] == UNREACHABLE {
                    continue;
                }
                for y in self.neighbors(x) {
                    if x < y && dist[y] != UNREACHABLE && parent[x] != y && parent[y] != x {
                        best = best.min(dist[x] as usize + dist[y] as usize + 1);
                    }
                }
            }
            if best == 3 {
                return Some(3);
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn s_arcs(&self, s: usize) -> PathStream<'_> {
        PathStream::new(self, s, PathKind::Arc)
    }

    pub fn s_geodesics(&self, s: usize) -> PathStream<'_> {
        PathStream::new(self, s, PathKind::Geodesic)
    }

    /// The common (c_i, a_i, b_i) over all ordered pairs at distance `i`,
    /// or `None` when the counts differ across pairs.
    pub fn intersection_numbers(&self, i: usize) -> Result<Option<IntersectionNumbers>> {
        let d = self.diameter()?;
        if i == 0 || i > d {
            return Err(Error::LevelOutOfRange { level: i, diameter: d });
        }
        let mut seen: Option<IntersectionNumbers> = None;
        for u in 0..self.n {
            let levels = self.levels_from(u);
            if levels.len() <= i {
                continue;
            }
            let empty = VertexSet::empty(self.n);
            let below = &levels[i - 1];
            let here = &levels[i];
            let above = levels.get(i + 1).unwrap_or(&empty);
            for v in here.iter() {
                let now = IntersectionNumbers {
                    level: i,
                    c: and_count(self.row(v), below.as_words()),
                    a: and_count(self.row(v), here.as_words()),
                    b: and_count(self.row(v), above.as_words()),
                };
                match seen {
                    None => seen = Some(now),
                    Some(prev) if prev != now => return Ok(None),
                    _ => {}
                }
            }
        }
        Ok(seen)
    }

    /// The intersection array when the graph is distance-regular, i.e. when
    /// the numbers are well-defined at every level for every base vertex.
    pub fn intersection_array(&self) -> Option<IntersectionArray> {
        if !self.is_connected() || self.n == 0 {
            return None;
        }
        let d = self.diameter().ok()?;
        if d == 0 {
            return Some(IntersectionArray { b: vec![], c: vec![] });
        }
        let mut b = vec![None; d];
        let mut c = vec![None; d + 1];
        let mut a = vec![None; d + 1];
        for u in 0..self.n {
            let levels = self.levels_from(u);
            if levels.len() != d + 1 {
                return None; // eccentricity differs between base vertices
            }
            let empty = VertexSet::empty(self.n);
            for i in 0..=d {
                let below = if i > 0 { &levels[i - 1] } else { &empty };
                let above = levels.get(i + 1).unwrap_or(&empty);
                for v in levels[i].iter() {
                    let ci = and_count(self.row(v), below.as_words());
                    let ai = and_count(self.row(v), levels[i].as_words());
                    let bi = and_count(self.row(v), above.as_words());
                    if *c[i].get_or_insert(ci) != ci || *a[i].get_or_insert(ai) != ai {
                        return None;
                    }
                    if i < d {
                        if *b[i].get_or_insert(bi) != bi {
                            return None;
                        }
                    } else if bi != 0 {
                        return None;
                    }
                }
            }
        }
        Some(IntersectionArray {
            b: b.into_iter().map(Option::unwrap).collect(),
            c: c.into_iter().skip(1).map(Option::unwrap).collect(),
        })
    }

    /// (n, k, a, c) when the graph is strongly regular: regular, diameter 2,
    /// constant common-neighbour counts on adjacent and non-adjacent pairs.
    pub fn srg_params(&self) -> Option<SrgParams> {
        if !self.is_connected() || self.diameter().ok()? != 2 {
            return None;
        }
        let k = self.regular_valency()?;
        let mut a = None;
        let mut c = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let common = self.common_neighbor_count(u, v);
                let slot = if self.has_edge(u, v) { &mut a } else { &mut c };
                if *slot.get_or_insert(common) != common {
                    return None;
                }
            }
        }
        Some(SrgParams { n: self.n, k, a: a?, c: c? })
    }

    /// Common-neighbour count over distance-2 pairs when constant.
    /// Defined for any graph with at least one distance-2 pair.
    pub fn uniform_c2(&self) -> Option<usize> {
        let mut c = None;
        for u in 0..self.n {
            let table = self.distances_from(u);
            for v in 0..self.n {
                if table.get(v) == Some(2) {
                    let common = self.common_neighbor_count(u, v);
                    if *c.get_or_insert(common) != common {
                        return None;
                    }
                }
            }
        }
        c
    }

    /// Subgraph induced on `set`, with vertices relabelled 0..|set|-1.
    /// Returns the new graph and the map new-index -> old vertex.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let old: Vec<usize> = set.iter().collect();
        if old.is_empty() {
            return Err(Error::EmptySet);
        }
        let g = Graph::from_rule(old.len(), |i, j| self.has_edge(old[i], old[j]));
        Ok((g, old))
    }

    /// Two-colouring as (side of vertex 0, other side), or `None` when an odd
    /// cycle exists. Disconnected graphs are coloured per component.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if color[y] == 2 {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        let side = |c: u8| VertexSet::from_iter(self.n, (0..self.n).filter(|&v| color[v] == c));
        Some((side(0), side(1)))
    }

    /// Copy of the graph with vertex v renamed to `perm[v]`.
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &edges).expect("relabelling preserves validity")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PathKind {
    Arc,
    Geodesic,
}

/// Lazy depth-first stream of s-arcs or s-geodesics, in lexicographic order.
/// Never materialised: the standard double cover of the Higman-Sims graph
/// has about 1.5 million 3-geodesics.
pub struct PathStream<'a> {
    g: &'a Graph,
    s: usize,
    kind: PathKind,
    next_root: usize,
    dist: Vec<u32>,
    path: Vec<usize>,
    cursors: Vec<Box<dyn Iterator<Item = usize> + 'a>>,
}

impl<'a> PathStream<'a> {
    fn new(g: &'a Graph, s: usize, kind: PathKind) -> Self {
        assert!(s >= 1, "paths of length 0 are single vertices");
        PathStream { g, s, kind, next_root: 0, dist: Vec::new(), path: Vec::new(), cursors: Vec::new() }
    }

    fn admits(&self, w: usize) -> bool {
        match self.kind {
            PathKind::Arc => self.path.len() < 2 || w != self.path[self.path.len() - 2],
            PathKind::Geodesic => self.dist[w] as usize == self.path.len(),
        }
    }
}

impl<'a> Iterator for PathStream<'a> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            if let Some(cursor) = self.cursors.last_mut() {
                if let Some(w) = cursor.next() {
                    if self.admits(w) {
                        self.path.push(w);
                        if self.path.len() == self.s + 1 {
                            let out = self.path.clone();
                            self.path.pop();
                            return Some(out);
                        }
                        self.cursors.push(Box::new(self.g.neighbors(w)));
                    }
                } else {
                    self.cursors.pop();
                    self.path.pop();
                }
                continue;
            }
            if self.next_root >= self.g.n() {
                return None;
            }
            let v = self.next_root;
            self.next_root += 1;
            if self.kind == PathKind::Geodesic {
                self.dist = self.g.distances_from(v).dist;
            }
            self.path.push(v);
            self.cursors.push(Box::new(self.g.neighbors(v)));
        }
    }
}
