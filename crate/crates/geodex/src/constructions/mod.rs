//! Constructions of every named graph in scope, each with a human-readable
//! labelling map and a build-time verification of its stated parameters.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, SrgParams};
use crate::perm::Perm;

pub mod golay;
pub mod hadamard;
pub mod rgd;
pub mod sporadic;
pub mod wells;

pub use golay::{octads, witt_22, SteinerSystem};
pub use hadamard::{hadamard_graph, hadamard_matrix, rgd_from_hadamard, HadamardMatrix, HadamardMethod};
pub use rgd::{rgd_incidence_graph, RgdDesign, RgdShape};
pub use sporadic::{gewirtz, higman_sims, hoffman_singleton, hos2, m22_graph};
pub use wells::wells;

/// A constructed graph together with provenance labels, one per vertex.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    fn plain(graph: Graph) -> LabeledGraph {
        let labels = (0..graph.n()).map(|v| format!("v{v}")).collect();
        LabeledGraph { graph, labels }
    }
}

pub fn complete(n: usize) -> Result<LabeledGraph> {
    if n < 1 {
        return Err(Error::ParameterOutOfRange("complete graph needs n >= 1".into()));
    }
    Ok(LabeledGraph::plain(Graph::from_rule(n, |_, _| true)))
}

pub fn cycle(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange("cycle needs n >= 3".into()));
    }
    Ok(LabeledGraph::plain(Graph::from_rule(n, |x, y| (x + 1) % n == y || (y + 1) % n == x)))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<LabeledGraph> {
    if m < 1 || n < 1 {
        return Err(Error::ParameterOutOfRange("complete bipartite needs m,n >= 1".into()));
    }
    let graph = Graph::from_rule(m + n, |x, y| (x < m) != (y < m));
    let mut labels: Vec<String> = (0..m).map(|i| format!("left{i}")).collect();
    labels.extend((0..n).map(|j| format!("right{j}")));
    Ok(LabeledGraph { graph, labels })
}

/// `K_{m[b]}`: complete multipartite with m parts of size b.
pub fn complete_multipartite(m: usize, b: usize) -> Result<LabeledGraph> {
    if m < 1 || b < 1 {
        return Err(Error::ParameterOutOfRange("complete multipartite needs m,b >= 1".into()));
    }
    let graph = Graph::from_rule(m * b, |x, y| x / b != y / b);
    let labels = (0..m * b).map(|v| format!("p{}v{}", v / b, v % b)).collect();
    Ok(LabeledGraph { graph, labels })
}

/// K_{r,r} minus a perfect matching: top i is adjacent to every bot j != i.
pub fn krr_minus_matching(r: usize) -> Result<LabeledGraph> {
    if r < 3 {
        return Err(Error::ParameterOutOfRange("K_{r,r} - rK_2 needs r >= 3".into()));
    }
    let graph = Graph::from_rule(2 * r, |x, y| {
        let (a, b) = (x.min(y), x.max(y));
        a < r && b >= r && b - r != a
    });
    if graph.regular_valency() != Some(r - 1) || graph.diameter()? != 3 {
        return Err(Error::InternalVerificationFailed {
            name: "krr_minus_matching",
            detail: "expected valency r-1 and diameter 3".into(),
        });
    }
    let mut labels: Vec<String> = (0..r).map(|i| format!("top{i}")).collect();
    labels.extend((0..r).map(|i| format!("bot{i}")));
    Ok(LabeledGraph { graph, labels })
}

/// The d-cube H(d,2): binary d-tuples, adjacent iff they differ in exactly
/// one coordinate.
pub fn hamming_2(d: usize) -> Result<LabeledGraph> {
    if !(2..=16).contains(&d) {
        return Err(Error::ParameterOutOfRange("H(d,2) supported for 2 <= d <= 16".into()));
    }
    let graph = Graph::from_rule(1 << d, |x, y| ((x ^ y) as u64).count_ones() == 1);
    let labels = (0..1usize << d).map(|v| format!("{v:0d$b}")).collect();
    Ok(LabeledGraph { graph, labels })
}

/// Coordinate symmetries of H(d,2), usable as verified witness generators
/// for the automorphism search: adjacent-coordinate swaps and one
/// translation.
pub fn hamming_witnesses(d: usize) -> Vec<Perm> {
    let n = 1usize << d;
    let mut out = Vec::new();
    for c in 0..d.saturating_sub(1) {
        let swap = |v: usize| {
            let (a, b) = (v >> c & 1, v >> (c + 1) & 1);
            v & !(1 << c) & !(1 << (c + 1)) | b << c | a << (c + 1)
        };
        out.push(Perm::from_images((0..n).map(swap).collect()).expect("bijection"));
    }
    out.push(Perm::from_images((0..n).map(|v| v ^ 1).collect()).expect("bijection"));
    out
}

/// The folded d-cube: antipodal vertex pairs of H(d,2) identified.
/// Representatives are the (d-1)-bit strings; the extra adjacency joins
/// complementary representatives.
pub fn folded_cube(d: usize) -> Result<LabeledGraph> {
    if !(3..=16).contains(&d) {
        return Err(Error::ParameterOutOfRange("folded cube supported for 3 <= d <= 16".into()));
    }
    let half = 1usize << (d - 1);
    let all = half - 1;
    let graph = Graph::from_rule(half, |x, y| {
        let diff = x ^ y;
        (diff as u64).count_ones() == 1 || diff == all
    });
    if graph.regular_valency() != Some(d) {
        return Err(Error::InternalVerificationFailed {
            name: "folded_cube",
            detail: "expected valency d".into(),
        });
    }
    let w = d - 1;
    let labels = (0..half).map(|v| format!("{{{v:0w$b},{:0w$b}}}", v ^ all)).collect();
    Ok(LabeledGraph { graph, labels })
}

/// The Petersen graph as the Kneser graph on 2-subsets of {0..4},
/// adjacent iff disjoint.
pub fn petersen() -> Result<LabeledGraph> {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let graph = Graph::from_rule(10, |x, y| {
        let (a, b) = pairs[x];
        let (c, d) = pairs[y];
        a != c && a != d && b != c && b != d
    });
    let expected = SrgParams { n: 10, k: 3, a: 0, c: 1 };
    if graph.srg_params() != Some(expected) {
        return Err(Error::InternalVerificationFailed {
            name: "petersen",
            detail: "expected srg (10,3,0,1)".into(),
        });
    }
    let labels = pairs.iter().map(|(i, j)| format!("{{{i},{j}}}")).collect();
    Ok(LabeledGraph { graph, labels })
}

/// The dodecahedron as the generalized Petersen graph GP(10,2), verified
/// against its intersection array (3,2,1,1,1;1,1,1,2,3).
pub fn dodecahedron() -> Result<LabeledGraph> {
    let mut edges = Vec::new();
    for i in 0..10 {
        edges.push((i, (i + 1) % 10)); // outer decagon
        edges.push((i, 10 + i)); // spokes
        edges.push((10 + i, 10 + (i + 2) % 10)); // inner pentagram pair
    }
    let graph = Graph::from_edge_list(20, &edges)?;
    let arr = graph.intersection_array();
    let expected = crate::graph::IntersectionArray { b: vec![3, 2, 1, 1, 1], c: vec![1, 1, 1, 2, 3] };
    if arr.as_ref() != Some(&expected) {
        return Err(Error::InternalVerificationFailed {
            name: "dodecahedron",
            detail: format!("intersection array {arr:?}"),
        });
    }
    let mut labels: Vec<String> = (0..10).map(|i| format!("u{i}")).collect();
    labels.extend((0..10).map(|i| format!("w{i}")));
    Ok(LabeledGraph { graph, labels })
}

/// The standard double cover: vertices (x,1) and (y,2), adjacent iff x ~ y.
/// Always bipartite; connected iff `g` is connected and non-bipartite.
pub fn sdc(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_rule(2 * n, |x, y| {
        let (a, b) = (x.min(y), x.max(y));
        b >= n && a < n && g.has_edge(a, b - n)
    })
}

pub fn sdc_labeled(g: &LabeledGraph) -> LabeledGraph {
    let graph = sdc(&g.graph);
    let mut labels: Vec<String> = g.labels.iter().map(|l| format!("({l},1)")).collect();
    labels.extend(g.labels.iter().map(|l| format!("({l},2)")));
    LabeledGraph { graph, labels }
}

/// Parameter bag for the registry: `--param k=v` pairs from the CLI.
pub type Params = BTreeMap<String, String>;

fn need_usize(params: &Params, key: &str) -> Result<usize> {
    let raw = params
        .get(key)
        .ok_or_else(|| Error::BadParameter(format!("missing parameter `{key}`")))?;
    raw.parse().map_err(|_| Error::BadParameter(format!("parameter `{key}`: `{raw}` is not a number")))
}

/// Names accepted by `construct`, with their parameters.
pub const REGISTRY: &[(&str, &str)] = &[
    ("petersen", ""),
    ("dodecahedron", ""),
    ("hoffman_singleton", ""),
    ("hos2", ""),
    ("higman_sims", ""),
    ("gewirtz", ""),
    ("m22_graph", ""),
    ("wells", ""),
    ("complete", "n"),
    ("cycle", "n"),
    ("complete_bipartite", "m, n"),
    ("complete_multipartite", "m, b"),
    ("krr_minus_matching", "r"),
    ("hamming_2", "d"),
    ("folded_cube", "d"),
    ("hadamard", "order, method=sylvester|paley"),
    ("sdc", "of=<construction name>"),
];

/// Build a named construction. Unknown names and malformed parameters are
/// reported as errors; every graph self-verifies before it is returned.
pub fn construct(name: &str, params: &Params) -> Result<LabeledGraph> {
    match name {
        "petersen" => petersen(),
        "dodecahedron" => dodecahedron(),
        "hoffman_singleton" => hoffman_singleton(),
        "hos2" => hos2(),
        "higman_sims" => higman_sims(),
        "gewirtz" => gewirtz(),
        "m22_graph" => m22_graph(),
        "wells" => wells(),
        "complete" => complete(need_usize(params, "n")?),
        "cycle" => cycle(need_usize(params, "n")?),
        "complete_bipartite" => {
            complete_bipartite(need_usize(params, "m")?, need_usize(params, "n")?)
        }
        "complete_multipartite" => {
            complete_multipartite(need_usize(params, "m")?, need_usize(params, "b")?)
        }
        "krr_minus_matching" => krr_minus_matching(need_usize(params, "r")?),
        "hamming_2" => hamming_2(need_usize(params, "d")?),
        "folded_cube" => folded_cube(need_usize(params, "d")?),
        "hadamard" => {
            let order = need_usize(params, "order")?;
            let method = match params.get("method").map(String::as_str) {
                None | Some("sylvester") => HadamardMethod::Sylvester,
                Some("paley") => HadamardMethod::Paley,
                Some(other) => {
                    return Err(Error::BadParameter(format!("unknown method `{other}`")))
                }
            };
            hadamard_graph(&hadamard_matrix(order, method)?)
        }
        "sdc" => {
            let of = params
                .get("of")
                .ok_or_else(|| Error::BadParameter("sdc needs of=<name>".into()))?;
            let inner = construct(of, &Params::new())?;
            Ok(sdc_labeled(&inner))
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}
