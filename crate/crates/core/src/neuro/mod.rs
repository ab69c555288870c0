//! Fixed-topology feedforward networks: the phenotype decoder for genomes.
//!
//! A [`Topology`] describes the architecture (layer sizes and activations);
//! a [`Genome`] is a flat weight vector that decodes against it. Nothing
//! here learns — inference only. Evolution happens in [`crate::evolve`].

mod genome;
mod topology;

pub use genome::{read_genome, write_genome, Genome, InitScheme};
pub use topology::{Activation, OutputActivation, Topology};

use thiserror::Error;

/// Errors from network construction, inference, and serialization.
#[derive(Debug, Error)]
pub enum NeuroError {
    #[error("invalid topology: {0}")]
    InvalidTopology(String),
    #[error("genome has {got} weights but topology requires {expected}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("input has {got} components but topology expects {expected}")]
    InputSizeMismatch { expected: usize, got: usize },
    #[error("invalid init scheme: {0}")]
    InvalidInitScheme(String),
    #[error("malformed genome file: {0}")]
    MalformedGenome(String),
    #[error("genome file declares topology {found}, expected {expected}")]
    TopologyHeaderMismatch { expected: String, found: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Index of the maximum element, ties broken by the lowest index.
///
/// Panics if `output` is empty.
pub fn argmax_action(output: &[f64]) -> usize {
    assert!(!output.is_empty(), "argmax_action on empty output");
    let mut best = 0;
    for (i, &v) in output.iter().enumerate().skip(1) {
        if v > output[best] {
            best = i;
        }
    }
    best
}
