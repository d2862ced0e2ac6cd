use std::fmt;
use std::io::Write;
use std::str::FromStr;

use super::record::{format_sig, MetricsRecord};
use crate::error::{Error, Result};

/// Numeric column of a [`MetricsRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    N,
    M,
    SWalk,
    SWalkInf,
    SEdge,
    SLineDirect,
    SVn,
    SShannon,
    MeanIpr,
}

impl Metric {
    pub const ALL: [Metric; 9] = [
        Metric::N,
        Metric::M,
        Metric::SWalk,
        Metric::SWalkInf,
        Metric::SEdge,
        Metric::SLineDirect,
        Metric::SVn,
        Metric::SShannon,
        Metric::MeanIpr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::N => "n",
            Metric::M => "m",
            Metric::SWalk => "s_walk",
            Metric::SWalkInf => "s_walk_inf",
            Metric::SEdge => "s_edge",
            Metric::SLineDirect => "s_line_direct",
            Metric::SVn => "s_vn",
            Metric::SShannon => "s_shannon",
            Metric::MeanIpr => "mean_ipr",
        }
    }

    pub fn value(self, r: &MetricsRecord) -> Option<f64> {
        match self {
            Metric::N => Some(r.n as f64),
            Metric::M => Some(r.m as f64),
            Metric::SWalk => Some(r.s_walk),
            Metric::SWalkInf => Some(r.s_walk_inf),
            Metric::SEdge => r.s_edge,
            Metric::SLineDirect => r.s_line_direct,
            Metric::SVn => r.s_vn,
            Metric::SShannon => Some(r.s_shannon),
            Metric::MeanIpr => Some(r.mean_ipr),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown metric {s:?}")))
    }
}

/// Sample Pearson correlation coefficient.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidArgument(format!(
            "pearson: lengths differ ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::InvalidArgument("pearson: need at least two samples".into()));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Correlation {
    pub x: Metric,
    pub y: Metric,
    /// `None` when the coefficient is undefined (constant column).
    pub r: Option<f64>,
}

/// The pairs whose coefficients are quoted for the 8-node corpus.
pub const HEADLINE_PAIRS: [(Metric, Metric); 5] = [
    (Metric::SWalk, Metric::M),
    (Metric::SVn, Metric::M),
    (Metric::SShannon, Metric::M),
    (Metric::SWalk, Metric::MeanIpr),
    (Metric::SVn, Metric::MeanIpr),
];

#[derive(Debug, Clone)]
pub struct CorrelationReport {
    pub headline: Vec<Correlation>,
    /// Every unordered pair of distinct metrics.
    pub matrix: Vec<Correlation>,
}

impl CorrelationReport {
    pub fn get(&self, x: Metric, y: Metric) -> Option<f64> {
        self.matrix
            .iter()
            .find(|c| (c.x, c.y) == (x, y) || (c.y, c.x) == (x, y))
            .and_then(|c| c.r)
    }

    /// CSV with columns `x,y,r`; headline pairs first. Undefined
    /// coefficients leave `r` empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(["x", "y", "r"])?;
        let headline_keys: Vec<_> = self.headline.iter().map(|c| (c.x, c.y)).collect();
        let rest = self.matrix.iter().filter(|c| {
            !headline_keys.contains(&(c.x, c.y)) && !headline_keys.contains(&(c.y, c.x))
        });
        for c in self.headline.iter().chain(rest) {
            w.write_record([c.x.name(), c.y.name(), &c.r.map(format_sig).unwrap_or_default()])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn correlate(records: &[MetricsRecord], x: Metric, y: Metric) -> Correlation {
    let (xs, ys): (Vec<f64>, Vec<f64>) = records
        .iter()
        .filter_map(|r| Some((x.value(r)?, y.value(r)?)))
        .unzip();
    Correlation {
        x,
        y,
        r: pearson(&xs, &ys).ok(),
    }
}

pub fn correlations_report(records: &[MetricsRecord]) -> Result<CorrelationReport> {
    if records.len() < 2 {
        return Err(Error::InvalidArgument("correlations need at least two records".into()));
    }
    let headline = HEADLINE_PAIRS
        .iter()
        .map(|&(x, y)| correlate(records, x, y))
        .collect();
    let mut matrix = Vec::new();
    for (i, &x) in Metric::ALL.iter().enumerate() {
        for &y in &Metric::ALL[i + 1..] {
            matrix.push(correlate(records, x, y));
        }
    }
    Ok(CorrelationReport { headline, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pearson_examples() {
        assert_abs_diff_eq!(pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap(), -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            pearson(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]).unwrap(),
            0.8,
            epsilon = 1e-15
        );
    }

    #[test]
    fn pearson_errors() {
        assert!(matches!(pearson(&[1.0, 1.0], &[1.0, 2.0]), Err(Error::UndefinedCorrelation(_))));
        assert!(matches!(pearson(&[1.0], &[1.0]), Err(Error::InvalidArgument(_))));
        assert!(matches!(pearson(&[1.0, 2.0], &[1.0]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn metric_names_parse() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
        assert!("s_bogus".parse::<Metric>().is_err());
    }
}
