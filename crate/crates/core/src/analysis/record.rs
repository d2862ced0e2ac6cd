use std::io::{BufRead, Read, Write};

use rayon::prelude::*;

use crate::entropy::{
    edge_walk_probabilities_of, spectral_shannon_entropy_of, von_neumann_entropy_with,
    walk_entropy, walk_entropy_of, zero_temp_walk_entropy_of, VnNormalization,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{self, parse_graph6, write_graph6};
use crate::regularity::{classify, GraphClass};
use crate::spectra::{mean_ipr, Spectrum};

/// Version of the CSV layout written by [`write_csv`]. Bump when a column is
/// added, removed or renamed.
pub const CSV_SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 11] = [
    "graph6",
    "n",
    "m",
    "class",
    "s_walk",
    "s_walk_inf",
    "s_edge",
    "s_line_direct",
    "s_vn",
    "s_shannon",
    "mean_ipr",
];

/// Every per-graph quantity of a scan. Edge-based entropies are `None` for
/// the single-node graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub class: GraphClass,
    /// Node walk entropy at the scan β.
    pub s_walk: f64,
    /// Node walk entropy as β → ∞.
    pub s_walk_inf: f64,
    /// Edge walk entropy from `e^{βA}` on the edges.
    pub s_edge: Option<f64>,
    /// Node walk entropy of the line graph.
    pub s_line_direct: Option<f64>,
    pub s_vn: Option<f64>,
    pub s_shannon: f64,
    pub mean_ipr: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    pub beta: f64,
    /// β of the spectral Shannon entropy column.
    pub shannon_beta: f64,
    pub vn: VnNormalization,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            beta: 1.0,
            shannon_beta: 1.0,
            vn: VnNormalization::Trace,
        }
    }
}

/// Metrics of one connected graph.
pub fn compute_record(g: &Graph, config: &ScanConfig) -> Result<MetricsRecord> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = Spectrum::of_graph(g)?;
    let m = g.m();
    let (s_edge, s_line_direct, s_vn) = if m == 0 {
        (None, None, None)
    } else {
        let (lg, _) = g.line_graph()?;
        (
            Some(edge_walk_probabilities_of(g, &spectrum, config.beta)?.entropy()),
            Some(walk_entropy(&lg, config.beta)?),
            Some(von_neumann_entropy_with(g, config.vn)?),
        )
    };
    Ok(MetricsRecord {
        graph6: write_graph6(g)?,
        n: g.n(),
        m,
        class: classify(g),
        s_walk: walk_entropy_of(&spectrum, config.beta)?,
        s_walk_inf: zero_temp_walk_entropy_of(&spectrum),
        s_edge,
        s_line_direct,
        s_vn,
        s_shannon: spectral_shannon_entropy_of(&spectrum, config.shannon_beta)?,
        mean_ipr: mean_ipr(&spectrum),
    })
}

/// Result of scanning a graph6 stream.
#[derive(Debug, Default)]
pub struct ScanReport {
    /// One record per connected graph, in input order.
    pub records: Vec<MetricsRecord>,
    /// Per-line failures, each an [`Error::Line`].
    pub errors: Vec<Error>,
    pub skipped_disconnected: usize,
}

enum Outcome {
    Record(MetricsRecord),
    Disconnected,
    Failed(Error),
}

/// Scan a graph6 stream. Graphs are processed in parallel and reported in
/// input order; only an I/O failure aborts the scan.
pub fn scan<R: BufRead>(reader: R, config: &ScanConfig) -> Result<ScanReport> {
    let lines: Vec<graph6::Record> = graph6::records(reader).collect::<Result<_>>()?;
    let outcomes: Vec<Outcome> = lines
        .par_iter()
        .map(|rec| {
            let result = parse_graph6(&rec.text).and_then(|g| {
                if g.is_connected() {
                    compute_record(&g, config).map(Some)
                } else {
                    Ok(None)
                }
            });
            match result {
                Ok(Some(r)) => Outcome::Record(r),
                Ok(None) => Outcome::Disconnected,
                Err(e) => Outcome::Failed(Error::Line {
                    line: rec.line,
                    source: Box::new(e),
                }),
            }
        })
        .collect();

    let mut report = ScanReport::default();
    for outcome in outcomes {
        match outcome {
            Outcome::Record(r) => report.records.push(r),
            Outcome::Disconnected => report.skipped_disconnected += 1,
            Outcome::Failed(e) => report.errors.push(e),
        }
    }
    Ok(report)
}

/// Records for in-memory graphs; disconnected graphs are an error here.
pub fn scan_graphs(graphs: &[Graph], config: &ScanConfig) -> Result<Vec<MetricsRecord>> {
    graphs.par_iter().map(|g| compute_record(g, config)).collect()
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros dropped.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-5..12).contains(&exp) {
        format!("{}e{}", trim(mantissa), exp)
    } else {
        trim(&format!("{:.*}", (11 - exp) as usize, x))
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

pub fn write_csv<W: Write>(records: &[MetricsRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.class.to_string(),
            format_sig(r.s_walk),
            format_sig(r.s_walk_inf),
            opt(r.s_edge),
            opt(r.s_line_direct),
            opt(r.s_vn),
            format_sig(r.s_shannon),
            format_sig(r.mean_ipr),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn parse_field<T: std::str::FromStr>(row: &csv::StringRecord, idx: usize, line: usize) -> Result<T> {
    let raw = row.get(idx).unwrap_or("");
    raw.parse().map_err(|_| Error::Line {
        line,
        source: Box::new(Error::Schema(format!(
            "column {}: cannot parse {raw:?}",
            CSV_COLUMNS[idx]
        ))),
    })
}

fn parse_opt(row: &csv::StringRecord, idx: usize, line: usize) -> Result<Option<f64>> {
    match row.get(idx) {
        None | Some("") => Ok(None),
        Some(_) => parse_field(row, idx, line).map(Some),
    }
}

/// Read records written by [`write_csv`]. The header must match exactly.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<MetricsRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(CSV_COLUMNS.iter().copied()) {
        return Err(Error::Schema(format!(
            "unexpected CSV header (schema v{CSV_SCHEMA_VERSION} expects {})",
            CSV_COLUMNS.join(",")
        )));
    }
    let mut out = Vec::new();
    for (idx, row) in rdr.records().enumerate() {
        let row = row?;
        let line = idx + 2;
        if row.len() != CSV_COLUMNS.len() {
            return Err(Error::Line {
                line,
                source: Box::new(Error::Schema("wrong number of columns".into())),
            });
        }
        out.push(MetricsRecord {
            graph6: row[0].to_string(),
            n: parse_field(&row, 1, line)?,
            m: parse_field(&row, 2, line)?,
            class: parse_field(&row, 3, line)?,
            s_walk: parse_field(&row, 4, line)?,
            s_walk_inf: parse_field(&row, 5, line)?,
            s_edge: parse_opt(&row, 6, line)?,
            s_line_direct: parse_opt(&row, 7, line)?,
            s_vn: parse_opt(&row, 8, line)?,
            s_shannon: parse_field(&row, 9, line)?,
            mean_ipr: parse_field(&row, 10, line)?,
        });
    }
    Ok(out)
}
