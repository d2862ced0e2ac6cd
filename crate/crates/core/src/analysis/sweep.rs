use std::fmt;

use crate::entropy::walk_entropy_of;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::Spectrum;

/// Spread below which a sweep counts as constant.
pub const CONSTANT_TOL: f64 = 1e-9;
/// Largest step-to-step increase still accepted as non-increasing.
pub const DECREASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Constant,
    MonotoneDecreasing,
    InteriorMinimum,
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Constant => "Constant",
            Shape::MonotoneDecreasing => "MonotoneDecreasing",
            Shape::InteriorMinimum => "InteriorMinimum",
            Shape::Other => "Other",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub beta_grid: Vec<f64>,
    pub s_values: Vec<f64>,
    pub shape: Shape,
    /// Grid point of the smallest entropy, for interior minima only.
    pub argmin_beta: Option<f64>,
    pub log_spacing: bool,
}

/// `points` values from `beta_min` to `beta_max` inclusive, geometric when
/// `log_spacing` is set.
pub fn beta_grid(beta_min: f64, beta_max: f64, points: usize, log_spacing: bool) -> Result<Vec<f64>> {
    if !(beta_min.is_finite() && beta_max.is_finite() && 0.0 < beta_min && beta_min < beta_max) {
        return Err(Error::InvalidArgument(format!(
            "sweep needs 0 < beta_min < beta_max, got [{beta_min}, {beta_max}]"
        )));
    }
    if points < 3 {
        return Err(Error::InvalidArgument(format!("sweep needs at least 3 points, got {points}")));
    }
    let last = (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points)
        .map(|i| {
            let t = i as f64 / last;
            if log_spacing {
                (beta_min.ln() + t * (beta_max.ln() - beta_min.ln())).exp()
            } else {
                beta_min + t * (beta_max - beta_min)
            }
        })
        .collect();
    grid[0] = beta_min;
    grid[points - 1] = beta_max;
    Ok(grid)
}

/// Shape of an entropy curve sampled on an ascending grid.
pub fn classify_shape(s: &[f64]) -> (Shape, Option<usize>) {
    let max = s.iter().copied().fold(f64::MIN, f64::max);
    let min = s.iter().copied().fold(f64::MAX, f64::min);
    if max - min <= CONSTANT_TOL {
        return (Shape::Constant, None);
    }
    if s.windows(2).all(|w| w[1] <= w[0] + DECREASE_TOL) {
        return (Shape::MonotoneDecreasing, None);
    }
    let argmin = s
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty curve");
    if argmin > 0 && argmin + 1 < s.len() {
        (Shape::InteriorMinimum, Some(argmin))
    } else {
        (Shape::Other, None)
    }
}

/// Walk entropy over a β grid.
pub fn sweep(g: &Graph, beta_min: f64, beta_max: f64, points: usize, log_spacing: bool) -> Result<SweepResult> {
    let beta_grid = beta_grid(beta_min, beta_max, points, log_spacing)?;
    let spectrum = Spectrum::of_graph(g)?;
    let s_values = beta_grid
        .iter()
        .map(|&b| walk_entropy_of(&spectrum, b))
        .collect::<Result<Vec<_>>>()?;
    let (shape, argmin) = classify_shape(&s_values);
    Ok(SweepResult {
        argmin_beta: argmin.map(|i| beta_grid[i]),
        beta_grid,
        s_values,
        shape,
        log_spacing,
    })
}
