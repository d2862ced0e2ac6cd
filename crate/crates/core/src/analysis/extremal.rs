use super::record::MetricsRecord;
use super::stats::Metric;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::communicability;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Min,
    Max,
}

/// Records ranked by `metric`, best first, ties broken by graph6 string.
/// Records where the metric is undefined are left out. `top = None` keeps
/// every record.
pub fn extremal(
    records: &[MetricsRecord],
    metric: Metric,
    direction: Direction,
    top: Option<usize>,
) -> Result<Vec<(String, f64)>> {
    if records.is_empty() {
        return Err(Error::InvalidArgument("extremal search over an empty corpus".into()));
    }
    let mut ranked: Vec<(String, f64)> = records
        .iter()
        .filter_map(|r| metric.value(r).map(|v| (r.graph6.clone(), v)))
        .collect();
    ranked.sort_by(|a, b| {
        let by_value = match direction {
            Direction::Min => a.1.total_cmp(&b.1),
            Direction::Max => b.1.total_cmp(&a.1),
        };
        by_value.then_with(|| a.0.cmp(&b.0))
    });
    if let Some(k) = top {
        ranked.truncate(k);
    }
    Ok(ranked)
}

/// Diagonal communicabilities `G_pp(β)` of every node and the spread
/// between the most and least visited node.
#[derive(Debug, Clone)]
pub struct LocalizationReport {
    pub beta: f64,
    pub diagonal: Vec<f64>,
    /// `max_p G_pp / min_p G_pp`.
    pub ratio: f64,
}

pub fn communicability_localization(g: &Graph, beta: f64) -> Result<LocalizationReport> {
    let diagonal = communicability(g, beta)?.diagonal();
    let max = diagonal.iter().copied().fold(f64::MIN, f64::max);
    let min = diagonal.iter().copied().fold(f64::MAX, f64::min);
    Ok(LocalizationReport {
        beta,
        diagonal,
        ratio: max / min,
    })
}
