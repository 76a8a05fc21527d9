//! Parsers and writers for the external file formats: edge lists, generator
//! JSON, partition JSON and design JSON. Everything here treats its input as
//! untrusted: sizes are capped and every index is range-checked before any
//! allocation proportional to it.

use serde::Deserialize;

use crate::constructions::RgdDesign;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{Perm, PermGroup, VertexPartition};

/// Hard cap on vertex/point counts accepted from files. Desk-scale inputs
/// are a few hundred vertices; the cap only exists to keep adversarial
/// headers from forcing giant allocations.
pub const MAX_PARSE_POINTS: usize = 4096;

fn parse_err(detail: impl Into<String>) -> Error {
    Error::ParseError(detail.into())
}

/// Edge-list format: first line `n m`, then m lines `u v`, 0-based,
/// whitespace-separated (line structure is not significant).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        let tok = tokens.next().ok_or_else(|| parse_err(format!("missing {what}")))?;
        tok.parse().map_err(|_| parse_err(format!("{what}: `{tok}` is not a number")))
    };
    let n = next_usize("vertex count")?;
    let m = next_usize("edge count")?;
    if n > MAX_PARSE_POINTS {
        return Err(parse_err(format!("vertex count {n} exceeds cap {MAX_PARSE_POINTS}")));
    }
    if m > n.saturating_mul(n) {
        return Err(parse_err(format!("edge count {m} impossible for {n} vertices")));
    }
    // capacity from actual data, not from the untrusted header
    let mut edges = Vec::with_capacity(m.min(1 << 16));
    for _ in 0..m {
        let u = next_usize("edge endpoint")?;
        let v = next_usize("edge endpoint")?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(parse_err("trailing tokens after the declared edges"));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Companion label file: one `index label` line per vertex.
pub fn write_labels(labels: &[String]) -> String {
    labels.iter().enumerate().map(|(i, l)| format!("{i} {l}\n")).collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GenSpec {
    /// image array: [1, 2, 0]
    Images(Vec<usize>),
    /// cycle list: [[0, 1], [2, 3, 4]]
    Cycles(Vec<Vec<usize>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    degree: usize,
    generators: Vec<GenSpec>,
}

/// Generator JSON: `{"degree": n, "generators": [...]}` where each
/// generator is an image array or a list of cycles.
pub fn parse_generators_json(text: &str) -> Result<PermGroup> {
    let file: GeneratorFile =
        serde_json::from_str(text).map_err(|e| parse_err(format!("generator json: {e}")))?;
    if file.degree > MAX_PARSE_POINTS {
        return Err(parse_err(format!(
            "degree {} exceeds cap {MAX_PARSE_POINTS}",
            file.degree
        )));
    }
    let mut gens = Vec::with_capacity(file.generators.len());
    for spec in file.generators {
        let perm = match spec {
            GenSpec::Images(img) => {
                if img.len() != file.degree {
                    return Err(Error::DegreeMismatch {
                        expected: file.degree,
                        found: img.len(),
                    });
                }
                Perm::from_images(img)?
            }
            GenSpec::Cycles(cycles) => Perm::from_cycles(file.degree, &cycles)?,
        };
        gens.push(perm);
    }
    PermGroup::new(file.degree, gens)
}

pub fn write_generators_json(group: &PermGroup) -> String {
    let gens: Vec<Vec<usize>> = group.gens().iter().map(|g| g.images()).collect();
    serde_json::json!({ "degree": group.degree(), "generators": gens }).to_string()
}

/// Partition JSON: a list of cells, e.g. `[[0,1],[2,3]]`. The universe size
/// comes from the graph the partition will be applied to.
pub fn parse_partition_json(text: &str, n: usize) -> Result<VertexPartition> {
    let cells: Vec<Vec<usize>> =
        serde_json::from_str(text).map_err(|e| parse_err(format!("partition json: {e}")))?;
    VertexPartition::new(n, cells)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RgdFile {
    points: usize,
    classes: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    parallel_classes: Vec<Vec<usize>>,
}

/// Design JSON:
/// `{"points": km, "classes": [[..]], "blocks": [[..]], "parallel_classes": [[block indices]]}`.
pub fn parse_rgd_json(text: &str) -> Result<RgdDesign> {
    let file: RgdFile =
        serde_json::from_str(text).map_err(|e| parse_err(format!("design json: {e}")))?;
    if file.points > MAX_PARSE_POINTS {
        return Err(parse_err(format!(
            "point count {} exceeds cap {MAX_PARSE_POINTS}",
            file.points
        )));
    }
    RgdDesign::new(file.points, file.classes, file.blocks, file.parallel_classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = crate::constructions::petersen().unwrap().graph;
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn edge_list_rejects_malformed_input() {
        for bad in [
            "",
            "3",
            "3 1",
            "3 1 0",
            "3 1 0 3",     // endpoint out of range
            "3 1 1 1",     // loop
            "3 1 0 1 9",   // trailing token
            "1000000000 0",
            "x y",
            "3 x",
            "4 18446744073709551615",
        ] {
            assert!(parse_edge_list(bad).is_err(), "accepted {bad:?}");
        }
        // duplicate edges collapse rather than error
        assert_eq!(parse_edge_list("2 2 0 1 1 0").unwrap().edge_count(), 1);
    }

    #[test]
    fn generators_json_both_spellings() {
        let g = parse_generators_json(
            r#"{"degree": 5, "generators": [[1,2,3,4,0], [[0,1],[2,3]]]}"#,
        )
        .unwrap();
        assert_eq!(g.gens().len(), 2);
        assert_eq!(g.gens()[1].images(), vec![1, 0, 3, 2, 4]);

        assert!(parse_generators_json(r#"{"degree": 3, "generators": [[0,0,1]]}"#).is_err());
        assert!(parse_generators_json(r#"{"degree": 3, "generators": [[0,1]]}"#).is_err());
        assert!(parse_generators_json(r#"{"degree": 3, "generators": [[[3,4]]]}"#).is_err());
        assert!(parse_generators_json("{}").is_err());
        assert!(parse_generators_json("not json").is_err());

        let round = parse_generators_json(&write_generators_json(&g)).unwrap();
        assert_eq!(round.order(), g.order());
    }

    #[test]
    fn partition_json() {
        let p = parse_partition_json("[[0,1],[2,3]]", 4).unwrap();
        assert_eq!(p.cell_count(), 2);
        assert!(parse_partition_json("[[0,1]]", 4).is_err()); // not covering
        assert!(parse_partition_json("[[0,1],[1,2,3]]", 4).is_err()); // overlap
        assert!(parse_partition_json("[0,1]", 4).is_err()); // wrong shape
    }

    #[test]
    fn rgd_json() {
        let text = r#"{
            "points": 4,
            "classes": [[0,1],[2,3]],
            "blocks": [[0,2],[0,3],[1,2],[1,3]],
            "parallel_classes": [[0,3],[1,2]]
        }"#;
        let d = parse_rgd_json(text).unwrap();
        assert_eq!(d.validate().unwrap().lambda, 1);
        assert!(parse_rgd_json(r#"{"points": 4}"#).is_err());
        assert!(parse_rgd_json("[]").is_err());
    }
}
