//! Concrete graphs: constructions, strong-regularity detection and graph6
//! interchange.

mod graph6;

pub use graph6::{from_graph6, read_graph6_file, to_graph6, write_graph6_file};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::srg::SrgParams;
use crate::strictness::is_prime;

/// Simple undirected graph on `0..order`, stored as a dense symmetric bit
/// matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(64).max(1);
        Self {
            order,
            words,
            rows: vec![0; order * words],
        }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(order);
        for (i, j) in edges {
            if i >= order || j >= order {
                return Err(Error::Graph(format!(
                    "edge ({i},{j}) outside vertex range 0..{order}"
                )));
            }
            if i == j {
                return Err(Error::Graph(format!("self-loop at vertex {i}")));
            }
            g.set_edge(i, j);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the pairs `i < j` with `adjacent(i, j)`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(order);
        for j in 1..order {
            for i in 0..j {
                if adjacent(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    fn set_edge(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Neighbourhood of `i` as a bitset of `order.div_ceil(64)` words.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&j| self.adjacent(i, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.order).flat_map(move |j| (0..j).filter(move |&i| self.adjacent(i, j)).map(move |i| (i, j)))
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The common degree, if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.order == 0 {
            return None;
        }
        let k = self.degree(0);
        (0..self.order).all(|i| self.degree(i) == k).then_some(k)
    }
}

/// Paley graph on `Z_p`: `i ~ j` iff `i - j` is a non-zero square mod `p`.
pub fn paley_graph(p: usize) -> Result<Graph> {
    if p % 4 != 1 || !is_prime(p as i64) {
        return Err(Error::Graph(format!(
            "Paley graph needs a prime p = 1 (mod 4), got {p}"
        )));
    }
    let mut square = vec![false; p];
    for x in 1..p {
        square[x * x % p] = true;
    }
    Ok(Graph::from_fn(p, |i, j| square[j - i]))
}

/// The `n × n` rook's graph: cells adjacent when they share a row or column.
pub fn square_lattice(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Graph(format!("square lattice needs n >= 2, got {n}")));
    }
    Ok(Graph::from_fn(n * n, |a, b| a / n == b / n || a % n == b % n))
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j + 1 == n && n > 2))
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

pub fn complement_graph(g: &Graph) -> Graph {
    Graph::from_fn(g.order(), |i, j| !g.adjacent(i, j))
}

/// Petersen graph: 2-subsets of a 5-set, adjacent when disjoint.
fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    Graph::from_fn(pairs.len(), |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        a != c && a != d && b != c && b != d
    })
}

/// Clebsch graph: 4-bit words, adjacent when they differ in one bit or in
/// all four.
fn clebsch() -> Graph {
    Graph::from_fn(16, |i, j| matches!((i ^ j).count_ones(), 1 | 4))
}

/// Shrikhande graph: Cayley graph of `Z_4 × Z_4` with connection set
/// `±(1,0), ±(0,1), ±(1,1)`.
fn shrikhande() -> Graph {
    Graph::from_fn(16, |i, j| {
        let dx = (j / 4 + 4 - i / 4) % 4;
        let dy = (j % 4 + 4 - i % 4) % 4;
        matches!((dx, dy), (1, 0) | (3, 0) | (0, 1) | (0, 3) | (1, 1) | (3, 3))
    })
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 4] = ["petersen", "clebsch", "shrikhande", "pentagon"];

pub fn builtin(name: &str) -> Result<Graph> {
    match name.trim().to_ascii_lowercase().as_str() {
        "petersen" => Ok(petersen()),
        "clebsch" => Ok(clebsch()),
        "shrikhande" => Ok(shrikhande()),
        "pentagon" => Ok(cycle_graph(5)),
        other => Err(Error::Graph(format!(
            "unknown builtin graph {other:?}; known: {}",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

/// The parameters of `g` if it is strongly regular, non-null and
/// non-complete.
pub fn srg_parameters_of(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    let k = g.regular_degree()?;
    if k == 0 || k + 1 >= n {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for j in 1..n {
        for i in 0..j {
            let slot = if g.adjacent(i, j) { &mut lambda } else { &mut mu };
            let c = g.common_neighbors(i, j);
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    SrgParams::new(n as i64, k as i64, lambda? as i64, mu? as i64).ok()
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
