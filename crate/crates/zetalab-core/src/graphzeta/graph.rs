//! Finite graphs as combinatorial quotients: simple, connected, minimum
//! degree 2, with the oriented-edge space and the non-backtracking
//! (Hashimoto) adjacency matrix on it.

use super::GraphError;

/// A simple connected graph with minimum degree ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Invalid("graph needs at least one vertex".into()));
        }
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::Invalid(format!("duplicate edge {:?}", w[0])));
            }
        }
        let g = Graph { n, edges };
        for &(u, v) in &g.edges {
            if u == v {
                return Err(GraphError::Invalid(format!("loop at vertex {u}")));
            }
            if v >= n {
                return Err(GraphError::Invalid(format!(
                    "edge ({u},{v}) references vertex {v} but the graph has {n} vertices"
                )));
            }
        }
        if let Some(v) = (0..n).find(|&v| g.degree(v) < 2) {
            return Err(GraphError::Invalid(format!(
                "vertex {v} has degree {} (minimum degree 2 required)",
                g.degree(v)
            )));
        }
        if !g.is_connected() {
            return Err(GraphError::Invalid("graph is not connected".into()));
        }
        Ok(g)
    }

    /// Parses the text format: header `p <n_vertices> <n_edges>`, then one
    /// `u v` pair per line, 0-indexed.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| GraphError::Parse("empty file".into()))?;
        let mut it = header.split_whitespace();
        if it.next() != Some("p") {
            return Err(GraphError::Parse("first line must be 'p <n_vertices> <n_edges>'".into()));
        }
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse("bad vertex count in header".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse("bad edge count in header".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line '{line}'")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line '{line}'")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse(format!(
                "header promises {m} edges, file has {}",
                edges.len()
            )));
        }
        Graph::new(n, edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    // Built-in corpus graphs.

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("cycle graph is valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::new(n, edges).expect("complete graph is valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::new(a + b, edges).expect("complete bipartite graph is valid")
    }

    pub fn petersen() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        Graph::new(10, edges).expect("Petersen graph is valid")
    }
}

/// Oriented edges of a graph: edge `i` yields oriented edges `2i` (u→v)
/// and `2i+1` (v→u); reversal is `e ^ 1`, a fixed-point-free involution.
#[derive(Debug, Clone)]
pub struct OrientedEdges {
    origin: Vec<usize>,
    terminus: Vec<usize>,
}

impl OrientedEdges {
    pub fn of(g: &Graph) -> Self {
        let mut origin = Vec::with_capacity(2 * g.n_edges());
        let mut terminus = Vec::with_capacity(2 * g.n_edges());
        for &(u, v) in g.edges() {
            origin.push(u);
            terminus.push(v);
            origin.push(v);
            terminus.push(u);
        }
        OrientedEdges { origin, terminus }
    }

    pub fn count(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self, e: usize) -> usize {
        self.origin[e]
    }

    pub fn terminus(&self, e: usize) -> usize {
        self.terminus[e]
    }

    pub fn reversal(&self, e: usize) -> usize {
        e ^ 1
    }

    /// Oriented edges f with origin(f) = terminus(e) and f ≠ rev(e).
    pub fn successors(&self, e: usize) -> Vec<usize> {
        let t = self.terminus(e);
        (0..self.count())
            .filter(|&f| self.origin(f) == t && f != self.reversal(e))
            .collect()
    }
}

/// The Hashimoto (non-backtracking edge adjacency) matrix:
/// B[e][f] = 1 iff terminus(e) = origin(f) and f ≠ reversal(e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashimotoMatrix {
    size: usize,
    entries: Vec<u8>, // row-major
}

impl HashimotoMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, e: usize, f: usize) -> u8 {
        self.entries[e * self.size + f]
    }

    pub fn row_sum(&self, e: usize) -> usize {
        self.entries[e * self.size..(e + 1) * self.size]
            .iter()
            .map(|&x| x as usize)
            .sum()
    }
}

pub fn hashimoto(g: &Graph) -> HashimotoMatrix {
    let oe = OrientedEdges::of(g);
    let size = oe.count();
    let mut entries = vec![0u8; size * size];
    for e in 0..size {
        for f in 0..size {
            if oe.terminus(e) == oe.origin(f) && f != oe.reversal(e) {
                entries[e * size + f] = 1;
            }
        }
    }
    HashimotoMatrix { size, entries }
}
