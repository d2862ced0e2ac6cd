//! Simple undirected graphs and the structural transforms built on them.

use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A simple undirected graph on nodes `0..n` stored as a dense adjacency
/// relation. No self-loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

/// Edges of a graph as `(i, j)` pairs with `i < j`, in lexicographic order.
///
/// The position of a pair in the list is the node index it receives in the
/// line graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, usize)> {
        self.0.iter()
    }
}

impl std::ops::Index<usize> for EdgeList {
    type Output = (usize, usize);

    fn index(&self, idx: usize) -> &(usize, usize) {
        &self.0[idx]
    }
}

impl<'a> IntoIterator for &'a EdgeList {
    type Item = &'a (usize, usize);
    type IntoIter = std::slice::Iter<'a, (usize, usize)>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Graph {
    /// Edgeless graph on `n >= 1` nodes.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NodeCount(0, "n >= 1"));
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for index in [i, j] {
            if index >= self.n {
                return Err(Error::NodeIndex { index, n: self.n });
            }
        }
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        self.adj[i * self.n + j] = true;
        self.adj[j * self.n + i] = true;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    pub fn neighbors(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[p * self.n..(p + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(q, &b)| if b { Some(q) } else { None })
    }

    pub fn edges(&self) -> EdgeList {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        EdgeList(out)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|p| self.neighbors(p).count()).collect()
    }

    /// True when every node has the same degree (vacuously for one node).
    pub fn is_regular(&self) -> bool {
        let deg = self.degrees();
        deg.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(p) = stack.pop() {
            for q in self.neighbors(p) {
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    stack.push(q);
                }
            }
        }
        count == self.n
    }

    /// Relabel so that new node `k` is old node `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let n = self.n;
        let mut adj = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                adj[a * n + b] = self.has_edge(perm[a], perm[b]);
            }
        }
        Graph { n, adj }
    }

    /// Adjacency matrix as 0/1 floats.
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    /// Combinatorial Laplacian `D - A`.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let deg = self.degrees();
        DMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                deg[i] as f64
            } else if self.has_edge(i, j) {
                -1.0
            } else {
                0.0
            }
        })
    }

    /// Line graph together with the edge list that labels its nodes: node `v`
    /// of the result is edge `edges[v]` of `self`.
    pub fn line_graph(&self) -> Result<(Graph, EdgeList)> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let m = edges.len();
        let mut lg = Graph::empty(m)?;
        for u in 0..m {
            let (a, b) = edges[u];
            for v in u + 1..m {
                let (c, d) = edges[v];
                // distinct edges of a simple graph share at most one endpoint
                if a == c || a == d || b == c || b == d {
                    lg.add_edge(u, v)?;
                }
            }
        }
        Ok((lg, edges))
    }

    /// Tensor (Kronecker) product. Node `(a, b)` gets index `a * h.n() + b`.
    pub fn tensor_product(&self, h: &Graph) -> Graph {
        let n = self.n * h.n;
        let mut adj = vec![false; n * n];
        for a in 0..self.n {
            for c in self.neighbors(a) {
                for b in 0..h.n {
                    for d in h.neighbors(b) {
                        adj[(a * h.n + b) * n + c * h.n + d] = true;
                    }
                }
            }
        }
        Graph { n, adj }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::NodeCount(n, "n >= 3"));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,leaves}` with the centre at node 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().0)
            .finish()
    }
}
