use crate::entropy::walk_entropy;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::regularity::is_walk_regular;

/// A graph at maximal walk entropy that is nevertheless not walk-regular.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub graph6: String,
    pub s_walk: f64,
    pub max_entropy: f64,
}

/// Graphs whose walk entropy is within `tol` of `log2 n` but which fail the
/// exact walk-regularity test.
pub fn conjecture_scan<'a>(
    graphs: impl IntoIterator<Item = &'a Graph>,
    beta: f64,
    tol: f64,
) -> Result<Vec<Counterexample>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let mut out = Vec::new();
    for g in graphs {
        let s_walk = walk_entropy(g, beta)?;
        let max_entropy = (g.n() as f64).log2();
        if (s_walk - max_entropy).abs() <= tol && !is_walk_regular(g) {
            out.push(Counterexample {
                graph6: write_graph6(g)?,
                s_walk,
                max_entropy,
            });
        }
    }
    Ok(out)
}
