//! Batch layer: corpus scans, CSV records, correlations, extremal search,
//! temperature sweeps and the maximal-entropy conjecture scan.

mod conjecture;
mod extremal;
mod record;
mod stats;
mod sweep;

pub use conjecture::{conjecture_scan, Counterexample};
pub use extremal::{communicability_localization, extremal, Direction, LocalizationReport};
pub use record::{
    compute_record, format_sig, read_csv, scan, scan_graphs, write_csv, MetricsRecord, ScanConfig,
    ScanReport, CSV_COLUMNS, CSV_SCHEMA_VERSION,
};
pub use stats::{correlations_report, pearson, Correlation, CorrelationReport, Metric, HEADLINE_PAIRS};
pub use sweep::{beta_grid, classify_shape, sweep, Shape, SweepResult, CONSTANT_TOL, DECREASE_TOL};
