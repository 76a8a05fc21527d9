//! Hadamard matrices (Sylvester and Paley constructions) and the bipartite
//! Hadamard graph on 4n vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, IntersectionArray};

use super::rgd::RgdDesign;
use super::LabeledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HadamardMethod {
    Sylvester,
    Paley,
}

/// A Hadamard matrix of order n: entries in {+1,-1} with H * H^T = n * I,
/// checked in exact integer arithmetic on construction.
#[derive(Clone, Debug)]
pub struct HadamardMatrix {
    n: usize,
    rows: Vec<Vec<i8>>,
}

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.rows[i][j]
    }

    fn verify(self, method: &'static str) -> Result<HadamardMatrix> {
        for i in 0..self.n {
            for j in 0..self.n {
                let dot: i64 = (0..self.n)
                    .map(|k| self.rows[i][k] as i64 * self.rows[j][k] as i64)
                    .sum();
                let expected = if i == j { self.n as i64 } else { 0 };
                if dot != expected {
                    return Err(Error::InternalVerificationFailed {
                        name: method,
                        detail: format!("row products ({i},{j}) = {dot}, expected {expected}"),
                    });
                }
            }
        }
        Ok(self)
    }
}

fn sylvester(order: usize) -> Result<HadamardMatrix> {
    if order == 0 || !order.is_power_of_two() {
        return Err(Error::InvalidOrder { order, method: "Sylvester" });
    }
    let mut rows = vec![vec![1i8]];
    while rows.len() < order {
        let m = rows.len();
        let mut next = vec![vec![0i8; 2 * m]; 2 * m];
        for i in 0..m {
            for j in 0..m {
                next[i][j] = rows[i][j];
                next[i][j + m] = rows[i][j];
                next[i + m][j] = rows[i][j];
                next[i + m][j + m] = -rows[i][j];
            }
        }
        rows = next;
    }
    HadamardMatrix { n: order, rows }.verify("sylvester")
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley construction for order q+1 with q a prime congruent to 3 mod 4:
/// H = I + S with S the bordered skew Jacobsthal matrix.
fn paley(order: usize) -> Result<HadamardMatrix> {
    let q = order.wrapping_sub(1);
    if order < 4 || !is_prime(q) || q % 4 != 3 {
        return Err(Error::InvalidOrder { order, method: "Paley" });
    }
    let mut chi = vec![-1i8; q];
    chi[0] = 0;
    for x in 1..q {
        chi[x * x % q] = 1;
    }
    let mut rows = vec![vec![0i8; order]; order];
    for j in 1..order {
        rows[0][j] = 1;
        rows[j][0] = -1;
    }
    for i in 1..order {
        for j in 1..order {
            rows[i][j] = chi[(q + i - j) % q];
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] += 1; // H = I + S
    }
    HadamardMatrix { n: order, rows }.verify("paley")
}

pub fn hadamard_matrix(order: usize, method: HadamardMethod) -> Result<HadamardMatrix> {
    match method {
        HadamardMethod::Sylvester => sylvester(order),
        HadamardMethod::Paley => paley(order),
    }
}

/// The Hadamard graph of H: vertices r_i^e and c_j^d for rows and columns
/// with both signs, r_i^e ~ c_j^d iff `H[i][j] = e*d`. For order n = 2*mu the
/// graph has 8*mu vertices and intersection array
/// (2mu, 2mu-1, mu, 1; 1, mu, 2mu-1, 2mu), verified on construction.
pub fn hadamard_graph(h: &HadamardMatrix) -> Result<LabeledGraph> {
    let n = h.order();
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidOrder { order: n, method: "Hadamard graph" });
    }
    // vertex layout: r_i^+ = i, r_i^- = n+i, c_j^+ = 2n+j, c_j^- = 3n+j
    let graph = Graph::from_rule(4 * n, |x, y| {
        let (row, col) = if x < 2 * n && y >= 2 * n {
            (x, y)
        } else if y < 2 * n && x >= 2 * n {
            (y, x)
        } else {
            return false;
        };
        let (i, e) = (row % n, if row < n { 1i8 } else { -1 });
        let (j, d) = ((col - 2 * n) % n, if col < 3 * n { 1i8 } else { -1 });
        h.entry(i, j) == e * d
    });
    let mu = n / 2;
    let expected =
        IntersectionArray { b: vec![2 * mu, 2 * mu - 1, mu, 1], c: vec![1, mu, 2 * mu - 1, 2 * mu] };
    match graph.intersection_array() {
        Some(arr) if arr == expected => {}
        got => {
            return Err(Error::InternalVerificationFailed {
                name: "hadamard_graph",
                detail: format!("intersection array {got:?}, expected {expected}"),
            })
        }
    }
    if graph.bipartition().is_none() {
        return Err(Error::InternalVerificationFailed {
            name: "hadamard_graph",
            detail: "graph is not bipartite".into(),
        });
    }
    let mut labels = Vec::with_capacity(4 * n);
    for sign in ["+", "-"] {
        labels.extend((0..n).map(|i| format!("r{i}{sign}")));
    }
    for sign in ["+", "-"] {
        labels.extend((0..n).map(|j| format!("c{j}{sign}")));
    }
    Ok(LabeledGraph { graph, labels })
}

/// The resolvable divisible design RGD(n, n/2, 2) carried by a Hadamard
/// matrix: points are signed rows, block (j,d) holds the signed rows
/// `(i, d*H[i][j])`, classes pair the two signs of a row, parallel classes
/// pair the two signs of a column.
pub fn rgd_from_hadamard(h: &HadamardMatrix) -> Result<RgdDesign> {
    let n = h.order();
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidOrder { order: n, method: "Hadamard design" });
    }
    // point layout: (i,+) = i, (i,-) = n+i
    let classes: Vec<Vec<usize>> = (0..n).map(|i| vec![i, n + i]).collect();
    let mut blocks = Vec::with_capacity(2 * n);
    for j in 0..n {
        for d in [1i8, -1] {
            let block: Vec<usize> = (0..n)
                .map(|i| if h.entry(i, j) == d { i } else { n + i })
                .collect();
            blocks.push(block);
        }
    }
    let parallel_classes: Vec<Vec<usize>> = (0..n).map(|j| vec![2 * j, 2 * j + 1]).collect();
    RgdDesign::new(2 * n, classes, blocks, parallel_classes)
}
