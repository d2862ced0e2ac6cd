//! Dense symmetric eigendecomposition and the spectral quantities built on
//! it: communicability `e^{βA}`, partition function, average energy and
//! inverse participation ratios.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;

const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order and the matching orthonormal eigenvectors
/// (column `j` belongs to eigenvalue `j`).
///
/// Each eigenvector is normalised in sign: the principal one has a
/// non-negative entry sum, every other one has its largest-magnitude entry
/// positive.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    vectors: DMatrix<f64>,
}

impl Spectrum {
    pub fn of_graph(g: &Graph) -> Result<Spectrum> {
        sym_eig(&g.adjacency_matrix())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &DMatrix<f64> {
        &self.vectors
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    /// Eigenvector of the largest eigenvalue.
    pub fn principal_vector(&self) -> Vec<f64> {
        self.vectors.column(0).iter().copied().collect()
    }

    /// `Φ Λ Φᵀ`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        self.apply(|x| x)
    }

    /// `Φ f(Λ) Φᵀ`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
        let n = self.len();
        let weights: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        let mut out = DMatrix::zeros(n, n);
        for (j, w) in weights.iter().enumerate() {
            let col = self.vectors.column(j);
            out += (col * col.transpose()) * *w;
        }
        out
    }
}

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
pub fn sym_eig(m: &DMatrix<f64>) -> Result<Spectrum> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::ShapeMismatch(m.shape(), (m.ncols(), m.nrows())));
    }
    let asym = (m - m.transpose()).amax();
    if !asym.is_finite() || !m.iter().all(|x| x.is_finite()) {
        return Err(Error::Numerical("non-finite matrix entry".into()));
    }
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }

    let mut a = (m + m.transpose()) * 0.5;
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = a.norm();
    let target = (f64::EPSILON * scale).powi(2);
    let mut converged = false;

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps the index order among exactly equal eigenvalues
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut col = v.column(src).clone_owned();
        let flip = if dst == 0 {
            col.sum() < 0.0
        } else {
            let imax = col.iamax();
            col[imax] < 0.0
        };
        if flip {
            col.neg_mut();
        }
        vectors.set_column(dst, &col);
    }
    Ok(Spectrum { values, vectors })
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidBeta(beta))
    }
}

/// `e^{β(λ_j - λ_1)}`: Boltzmann weights scaled by the largest one so that
/// they never overflow.
pub(crate) fn scaled_weights(values: &[f64], beta: f64) -> Vec<f64> {
    let top = values[0];
    values.iter().map(|&x| (beta * (x - top)).exp()).collect()
}

/// The matrix `e^{βA}`.
#[derive(Debug, Clone)]
pub struct Communicability {
    pub beta: f64,
    pub matrix: DMatrix<f64>,
}

impl Communicability {
    pub fn from_spectrum(spectrum: &Spectrum, beta: f64) -> Result<Communicability> {
        check_beta(beta)?;
        let matrix = spectrum.apply(|x| (beta * x).exp());
        if matrix.iter().any(|x| !x.is_finite()) {
            return Err(Error::Numerical(format!("e^(βA) overflows at β = {beta}")));
        }
        Ok(Communicability { beta, matrix })
    }

    pub fn diagonal(&self) -> Vec<f64> {
        self.matrix.diagonal().iter().copied().collect()
    }
}

pub fn communicability(g: &Graph, beta: f64) -> Result<Communicability> {
    Communicability::from_spectrum(&Spectrum::of_graph(g)?, beta)
}

/// `Z(β) = Σ_j e^{βλ_j} = tr e^{βA}`.
pub fn partition_function_of(spectrum: &Spectrum, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let z: f64 = spectrum.values().iter().map(|&x| (beta * x).exp()).sum();
    if z.is_finite() {
        Ok(z)
    } else {
        Err(Error::Numerical(format!("partition function overflows at β = {beta}")))
    }
}

pub fn partition_function(g: &Graph, beta: f64) -> Result<f64> {
    partition_function_of(&Spectrum::of_graph(g)?, beta)
}

/// `<E> = -Σ_j λ_j e^{βλ_j} / Z`.
pub fn average_energy_of(spectrum: &Spectrum, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let w = scaled_weights(spectrum.values(), beta);
    let z: f64 = w.iter().sum();
    let e: f64 = spectrum.values().iter().zip(&w).map(|(x, w)| x * w).sum();
    Ok(-e / z)
}

pub fn average_energy(g: &Graph, beta: f64) -> Result<f64> {
    average_energy_of(&Spectrum::of_graph(g)?, beta)
}

/// Inverse participation ratio `(Σ_p φ_j(p)^4)^{-1}` of every eigenvector.
pub fn ipr(spectrum: &Spectrum) -> Vec<f64> {
    spectrum
        .vectors()
        .column_iter()
        .map(|col| 1.0 / col.iter().map(|x| x.powi(4)).sum::<f64>())
        .collect()
}

pub fn mean_ipr(spectrum: &Spectrum) -> f64 {
    let values = ipr(spectrum);
    values.iter().sum::<f64>() / values.len() as f64
}
