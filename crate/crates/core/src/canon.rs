//! Canonical labelling of small graphs and exhaustive enumeration of
//! isomorphism classes.
//!
//! The canonical code of a graph is the lexicographically smallest
//! upper-triangle bit string (graph6 bit order) over all relabellings of its
//! nodes, packed most significant bit first into a `u64` so that numeric order
//! equals lexicographic order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which a canonical code fits into 64 bits.
pub const MAX_CANON_NODES: usize = 11;

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATE_NODES: usize = 7;

fn pair_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Code of `g` under its current labelling.
pub fn code_of(g: &Graph) -> u64 {
    let n = g.n();
    let total = pair_bits(n);
    let mut code = 0u64;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                code |= 1 << (total - 1 - pos);
            }
            pos += 1;
        }
    }
    code
}

/// Inverse of [`code_of`].
pub fn graph_of(n: usize, code: u64) -> Result<Graph> {
    if n > MAX_CANON_NODES {
        return Err(Error::NodeCount(n, "n <= 11"));
    }
    let total = pair_bits(n);
    let mut g = Graph::empty(n)?;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - pos) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

struct Search<'a> {
    n: usize,
    total: u32,
    rows: &'a [u16],
    perm: Vec<usize>,
    used: u16,
    best: u64,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    // `prefix` holds the code bits of columns 0..depth, `len` their count.
    fn descend(&mut self, depth: usize, prefix: u64, len: u32) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        let len_next = len + depth as u32;
        let mut candidates: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| self.used >> v & 1 == 0)
            .map(|v| {
                let mut col = 0u64;
                for &u in &self.perm[..depth] {
                    col = col << 1 | (self.rows[v] >> u & 1) as u64;
                }
                (prefix << depth | col, v)
            })
            .collect();
        candidates.sort_unstable();
        for (next, v) in candidates {
            if self.best != u64::MAX && next > self.best >> (self.total - len_next) {
                // sorted, so every later candidate is worse as well
                break;
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.descend(depth + 1, next, len_next);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical code and a labelling that attains it: relabelling `g` with
/// `perm` (new node `k` is old node `perm[k]`) yields the canonical graph.
pub fn canonical_labelling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_NODES {
        return Err(Error::NodeCount(n, "n <= 11"));
    }
    let rows: Vec<u16> = (0..n)
        .map(|p| g.neighbors(p).fold(0u16, |acc, q| acc | 1 << q))
        .collect();
    let mut search = Search {
        n,
        total: pair_bits(n),
        rows: &rows,
        perm: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
        best_perm: Vec::new(),
    };
    search.descend(0, 0, 0);
    if n == 1 {
        return Ok((0, vec![0]));
    }
    Ok((search.best, search.best_perm))
}

pub fn canonical_code(g: &Graph) -> Result<u64> {
    canonical_labelling(g).map(|(code, _)| code)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_labelling(g)?;
    Ok(g.permuted(&perm))
}

/// Isomorphism test: degree sequences first, canonical codes second.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

/// Canonical codes of every graph on `n` nodes, in ascending order, built by
/// extending each class on `n - 1` nodes with a new node in every possible
/// way.
fn all_codes(n: usize) -> Result<BTreeSet<u64>> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_of(k, code)?;
            for mask in 0u32..1 << k {
                let mut g = Graph::empty(k + 1)?;
                for (i, j) in base.edges().iter().copied() {
                    g.add_edge(i, j)?;
                }
                for v in (0..k).filter(|v| mask >> v & 1 == 1) {
                    g.add_edge(v, k)?;
                }
                next.insert(canonical_code(&g)?);
            }
        }
        level = next;
    }
    Ok(level)
}

fn check_order(n: usize) -> Result<()> {
    if !(1..=MAX_ENUMERATE_NODES).contains(&n) {
        return Err(Error::NodeCount(n, "1 <= n <= 7"));
    }
    Ok(())
}

/// One canonical representative per isomorphism class of graphs on `n`
/// nodes, in canonical-code order. `n = 7` takes a few seconds.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    let codes = all_codes(n)?;
    Ok(codes
        .into_iter()
        .map(move |code| graph_of(n, code).expect("order checked")))
}

/// As [`enumerate_all`], restricted to connected graphs.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(enumerate_all(n)?.filter(Graph::is_connected))
}
