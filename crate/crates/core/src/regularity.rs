//! Walk regularity by exact integer walk counts.
//!
//! All tests here look at powers `A^k` for `k < n` only. By Cayley-Hamilton
//! every higher power is a linear combination of those, and both the
//! diagonal test and the edge test are linear in `A^k`, so constancy below
//! `n` implies constancy for every `k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Visit `A^0, A^1, ..., A^kmax` as flat row-major matrices. Stops early and
/// returns `Ok(false)` when `visit` does.
fn walk_powers<T>(g: &Graph, kmax: usize, mut visit: impl FnMut(usize, &[T]) -> bool) -> Result<bool>
where
    T: Clone + Zero + One + CheckedAdd,
{
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|p| g.neighbors(p).collect()).collect();
    let mut cur = vec![T::zero(); n * n];
    for i in 0..n {
        cur[i * n + i] = T::one();
    }
    if !visit(0, &cur) {
        return Ok(false);
    }
    for k in 1..=kmax {
        let mut next = vec![T::zero(); n * n];
        for i in 0..n {
            let row = &cur[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = T::zero();
                for &l in &nbrs[j] {
                    acc = acc.checked_add(&row[l]).ok_or(Error::Overflow(k))?;
                }
                next[i * n + j] = acc;
            }
        }
        cur = next;
        if !visit(k, &cur) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run `test` with 128-bit counts, falling back to arbitrary precision if a
/// count overflows.
fn exact_walk_test(
    g: &Graph,
    kmax: usize,
    test_u128: impl Fn(&[u128]) -> bool,
    test_big: impl Fn(&[BigUint]) -> bool,
) -> bool {
    match walk_powers::<u128>(g, kmax, |_, m| test_u128(m)) {
        Ok(result) => result,
        Err(_) => walk_powers::<BigUint>(g, kmax, |_, m| test_big(m))
            .expect("arbitrary precision counts cannot overflow"),
    }
}

fn all_equal<T: PartialEq>(mut it: impl Iterator<Item = T>) -> bool {
    match it.next() {
        None => true,
        Some(first) => it.all(|x| x == first),
    }
}

/// Closed-walk counts `(A^k)_pp` for `k = 0..=kmax`; row `k` holds power `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagPowerProfile {
    pub rows: Vec<Vec<u128>>,
}

impl DiagPowerProfile {
    /// Powers whose closed-walk counts differ between nodes.
    pub fn non_constant_powers(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| !all_equal(row.iter()))
            .map(|(k, _)| k)
            .collect()
    }
}

pub fn diag_power_profile(g: &Graph, kmax: usize) -> Result<DiagPowerProfile> {
    let n = g.n();
    let mut rows = Vec::with_capacity(kmax + 1);
    walk_powers::<u128>(g, kmax, |_, m| {
        rows.push((0..n).map(|p| m[p * n + p]).collect());
        true
    })?;
    Ok(DiagPowerProfile { rows })
}

/// True when `(A^k)_pp` is the same for every node `p` and every `k`.
pub fn is_walk_regular(g: &Graph) -> bool {
    let n = g.n();
    exact_walk_test(
        g,
        n - 1,
        |m| all_equal((0..n).map(|p| m[p * n + p])),
        |m| all_equal((0..n).map(|p| &m[p * n + p])),
    )
}

/// True when, for every `k`, `(A^k)_ij` takes one value over all edges
/// `(i, j)`; equivalently `A ∘ A^k = α_k A`.
pub fn is_edge_walk_regular(g: &Graph) -> Result<bool> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let n = g.n();
    Ok(exact_walk_test(
        g,
        n - 1,
        |m| all_equal(edges.iter().map(|&(i, j)| m[i * n + j])),
        |m| all_equal(edges.iter().map(|&(i, j)| &m[i * n + j])),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    WalkRegular,
    RegularNotWalkRegular,
    NonRegular,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::WalkRegular => "WalkRegular",
            GraphClass::RegularNotWalkRegular => "RegularNotWalkRegular",
            GraphClass::NonRegular => "NonRegular",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "WalkRegular" => Ok(GraphClass::WalkRegular),
            "RegularNotWalkRegular" => Ok(GraphClass::RegularNotWalkRegular),
            "NonRegular" => Ok(GraphClass::NonRegular),
            other => Err(Error::InvalidArgument(format!("unknown graph class {other:?}"))),
        }
    }
}

pub fn classify(g: &Graph) -> GraphClass {
    if is_walk_regular(g) {
        GraphClass::WalkRegular
    } else if g.is_regular() {
        GraphClass::RegularNotWalkRegular
    } else {
        GraphClass::NonRegular
    }
}

/// Edge-walk-regularity of two graphs and of the tensor product of their
/// line graphs, plus walk-regularity of the line graph of that product.
#[derive(Debug, Clone)]
pub struct LineTensorReport {
    pub g_edge_walk_regular: bool,
    pub h_edge_walk_regular: bool,
    /// Edge test on `L(g) ⊗ L(h)`.
    pub product_edge_walk_regular: bool,
    /// Direct diagonal test on `L(L(g) ⊗ L(h))`.
    pub line_of_product_walk_regular: bool,
    pub line_of_product_nodes: usize,
}

pub fn line_walk_regular_tensor_check(g: &Graph, h: &Graph) -> Result<LineTensorReport> {
    let g_edge_walk_regular = is_edge_walk_regular(g)?;
    let h_edge_walk_regular = is_edge_walk_regular(h)?;
    let (lg, _) = g.line_graph()?;
    let (lh, _) = h.line_graph()?;
    let product = lg.tensor_product(&lh);
    let product_edge_walk_regular = is_edge_walk_regular(&product)?;
    let (line_of_product, _) = product.line_graph()?;
    Ok(LineTensorReport {
        g_edge_walk_regular,
        h_edge_walk_regular,
        product_edge_walk_regular,
        line_of_product_walk_regular: is_walk_regular(&line_of_product),
        line_of_product_nodes: line_of_product.n(),
    })
}
