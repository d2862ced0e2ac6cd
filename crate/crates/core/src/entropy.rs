//! Walk entropies of nodes and edges, their zero-temperature limits, and the
//! von Neumann and spectral Shannon entropies used for comparison.
//!
//! All entropies are in bits.

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};
use crate::regularity::is_walk_regular;
use crate::spectra::{check_beta, scaled_weights, sym_eig, Spectrum};

/// Shannon entropy in bits with `0 log 0 = 0`.
pub fn shannon_bits(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.log2())
        .sum::<f64>()
}

/// Probability of picking a closed walk rooted at each node:
/// `p_i = (e^{βA})_ii / Z`.
#[derive(Debug, Clone)]
pub struct NodeProbabilities {
    pub beta: f64,
    pub p: Vec<f64>,
}

impl NodeProbabilities {
    pub fn entropy(&self) -> f64 {
        shannon_bits(&self.p)
    }
}

/// Probability attached to each edge `(i, j)`:
/// `p_ij = (e^{βA})_ij / Σ_{(k,l)∈E} (e^{βA})_kl`.
#[derive(Debug, Clone)]
pub struct EdgeProbabilities {
    pub beta: f64,
    pub edges: EdgeList,
    pub p: Vec<f64>,
}

impl EdgeProbabilities {
    pub fn entropy(&self) -> f64 {
        shannon_bits(&self.p)
    }
}

fn normalized(mut v: Vec<f64>) -> Vec<f64> {
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= total);
    v
}

pub fn node_walk_probabilities_of(spectrum: &Spectrum, beta: f64) -> Result<NodeProbabilities> {
    check_beta(beta)?;
    let w = scaled_weights(spectrum.values(), beta);
    let phi = spectrum.vectors();
    let diag = (0..spectrum.len())
        .map(|i| {
            phi.row(i)
                .iter()
                .zip(&w)
                .map(|(x, w)| x * x * w)
                .sum::<f64>()
        })
        .collect();
    Ok(NodeProbabilities {
        beta,
        p: normalized(diag),
    })
}

pub fn node_walk_probabilities(g: &Graph, beta: f64) -> Result<NodeProbabilities> {
    node_walk_probabilities_of(&Spectrum::of_graph(g)?, beta)
}

pub fn walk_entropy_of(spectrum: &Spectrum, beta: f64) -> Result<f64> {
    Ok(node_walk_probabilities_of(spectrum, beta)?.entropy())
}

/// Node walk entropy `S^V(G, β)`.
pub fn walk_entropy(g: &Graph, beta: f64) -> Result<f64> {
    walk_entropy_of(&Spectrum::of_graph(g)?, beta)
}

/// `β → ∞` limit of the node walk entropy: the Shannon entropy of the
/// squared principal eigenvector. The spectrum must come from a connected
/// graph; see [`zero_temp_walk_entropy`].
pub fn zero_temp_walk_entropy_of(spectrum: &Spectrum) -> f64 {
    let sq = spectrum.principal_vector().iter().map(|x| x * x).collect();
    shannon_bits(&normalized(sq))
}

pub fn zero_temp_walk_entropy(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(zero_temp_walk_entropy_of(&Spectrum::of_graph(g)?))
}

pub fn edge_walk_probabilities_of(
    g: &Graph,
    spectrum: &Spectrum,
    beta: f64,
) -> Result<EdgeProbabilities> {
    check_beta(beta)?;
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    if beta == 0.0 {
        // e^{0A} has no off-diagonal mass; the β → 0 limit is uniform
        let m = edges.len();
        return Ok(EdgeProbabilities {
            beta,
            edges,
            p: vec![1.0 / m as f64; m],
        });
    }
    let w = scaled_weights(spectrum.values(), beta);
    let phi = spectrum.vectors();
    let raw = edges
        .iter()
        .map(|&(i, j)| {
            (0..w.len())
                .map(|k| phi[(i, k)] * phi[(j, k)] * w[k])
                .sum::<f64>()
        })
        .collect();
    Ok(EdgeProbabilities {
        beta,
        edges,
        p: normalized(raw),
    })
}

pub fn edge_walk_probabilities(g: &Graph, beta: f64) -> Result<EdgeProbabilities> {
    edge_walk_probabilities_of(g, &Spectrum::of_graph(g)?, beta)
}

/// Edge walk entropy computed from the off-diagonal entries of `e^{βA}` on
/// the edges of `g`.
pub fn edge_walk_entropy(g: &Graph, beta: f64) -> Result<f64> {
    Ok(edge_walk_probabilities(g, beta)?.entropy())
}

/// Node walk entropy of the line graph, computed on the line graph itself.
/// Differs in general from [`edge_walk_entropy`].
pub fn line_walk_entropy_direct(g: &Graph, beta: f64) -> Result<f64> {
    let (lg, _) = g.line_graph()?;
    walk_entropy(&lg, beta)
}

/// `β → ∞` limit of the edge walk entropy. Edge `(i, j)` carries
/// `2 φ_1(i) φ_1(j) / λ_1`, which sums to one over the edges.
pub fn zero_temp_edge_entropy_of(g: &Graph, spectrum: &Spectrum) -> Result<f64> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let phi = spectrum.principal_vector();
    let q = edges
        .iter()
        .map(|&(i, j)| 2.0 * phi[i] * phi[j] / spectrum.largest())
        .collect();
    Ok(shannon_bits(&normalized(q)))
}

pub fn zero_temp_edge_entropy(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    zero_temp_edge_entropy_of(g, &Spectrum::of_graph(g)?)
}

/// How Laplacian eigenvalues become the weights of the von Neumann entropy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VnNormalization {
    /// Density matrix `ρ = L / tr L`.
    #[default]
    Trace,
    /// Raw Laplacian eigenvalues, not normalised.
    Raw,
}

impl std::str::FromStr for VnNormalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trace" => Ok(VnNormalization::Trace),
            "raw" => Ok(VnNormalization::Raw),
            other => Err(Error::InvalidArgument(format!(
                "unknown von Neumann normalization {other:?} (expected trace or raw)"
            ))),
        }
    }
}

pub fn von_neumann_entropy_with(g: &Graph, norm: VnNormalization) -> Result<f64> {
    let m = g.m();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    let spectrum = sym_eig(&g.laplacian())?;
    let scale = match norm {
        VnNormalization::Trace => 1.0 / (2 * m) as f64,
        VnNormalization::Raw => 1.0,
    };
    // L is positive semidefinite; clamp the round-off around zero
    let mu: Vec<f64> = spectrum
        .values()
        .iter()
        .map(|&x| (x * scale).max(0.0))
        .collect();
    Ok(shannon_bits(&mu))
}

/// Von Neumann entropy of `ρ = L / tr L`.
pub fn von_neumann_entropy(g: &Graph) -> Result<f64> {
    von_neumann_entropy_with(g, VnNormalization::Trace)
}

/// Entropy of the eigenstate occupation `p_j = e^{βλ_j} / Z`.
pub fn spectral_shannon_entropy_of(spectrum: &Spectrum, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(shannon_bits(&normalized(scaled_weights(spectrum.values(), beta))))
}

pub fn spectral_shannon_entropy(g: &Graph, beta: f64) -> Result<f64> {
    spectral_shannon_entropy_of(&Spectrum::of_graph(g)?, beta)
}

/// Walk entropy of a tensor product against the sum of the factors'
/// entropies.
#[derive(Debug, Clone)]
pub struct TensorEntropyReport {
    pub product_entropy: f64,
    pub entropy_sum: f64,
    /// `product_entropy - entropy_sum`.
    pub difference: f64,
    pub g_walk_regular: bool,
    pub h_walk_regular: bool,
    pub product_walk_regular: bool,
}

pub fn walk_entropy_tensor_check(g: &Graph, h: &Graph, beta: f64) -> Result<TensorEntropyReport> {
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let product = g.tensor_product(h);
    let product_entropy = walk_entropy(&product, beta)?;
    let entropy_sum = walk_entropy(g, beta)? + walk_entropy(h, beta)?;
    Ok(TensorEntropyReport {
        product_entropy,
        entropy_sum,
        difference: product_entropy - entropy_sum,
        g_walk_regular: is_walk_regular(g),
        h_walk_regular: is_walk_regular(h),
        product_walk_regular: is_walk_regular(&product),
    })
}
