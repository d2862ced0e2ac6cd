//! Walk entropies of graphs and line graphs.
//!
//! The closed-walk probability of node `i` at inverse temperature `β` is
//! `(e^{βA})_ii / tr e^{βA}`; its Shannon entropy is the node walk entropy.
//! The same construction on the off-diagonal entries of `e^{βA}` over the
//! edges gives the edge walk entropy. Around these sit exact walk-regularity
//! tests, a graph6 codec, exhaustive enumeration of small graphs, and the
//! batch analyses in [`analysis`].

pub mod analysis;
pub mod canon;
pub mod entropy;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod regularity;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{EdgeList, Graph};
pub use regularity::GraphClass;
pub use spectra::Spectrum;
