//! The two evaluation tasks as deterministic, seedable simulations behind
//! one contract.
//!
//! Both environments are pure functions of (config, random substream,
//! action sequence): identical inputs give bit-identical trajectories. An
//! environment owns no shared state, so any number of evaluations may run
//! concurrently, each on its own substream.

mod centering;
mod flappy;

pub use centering::{
    centering_step, classify_location, correct_command, evaluate_centering,
    evaluate_centering_traced, CenteringConfig, CenteringEnv, CenteringState, CenteringTraceRow,
    Command, LocationClass, StartLocation,
};
pub use flappy::{
    evaluate_flappy, evaluate_flappy_traced, flappy_observe, flappy_reset, flappy_step,
    FlappyAction, FlappyConfig, FlappyEnv, FlappyState, FlappyTraceRow, Pipe,
};

use crate::neuro::{Genome, NeuroError};
use rand::RngCore;
use thiserror::Error;

/// Errors from environment configuration and stepping.
#[derive(Debug, Error)]
pub enum EnvError {
    #[error("genome topology is {got_in}-in/{got_out}-out but the task needs {want_in}-in/{want_out}-out")]
    TopologyMismatch {
        want_in: usize,
        want_out: usize,
        got_in: usize,
        got_out: usize,
    },
    #[error("cannot step a dead state")]
    DeadState,
    #[error("cannot step past the final episode")]
    EpisodeExhausted,
    #[error("invalid environment config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Net(#[from] NeuroError),
}

/// A fitness evaluator for one genome.
///
/// `evaluate` must be pure given `(self, genome, rng)`; the engine hands
/// each call its own derived substream so evaluations can run in parallel
/// without changing results.
pub trait Environment: Sync {
    fn evaluate(&self, genome: &Genome, rng: &mut dyn RngCore) -> Result<f64, EnvError>;

    /// The task's maximum attainable fitness, when one exists. Used for
    /// optimal-count termination; `None` means the task is open-ended.
    fn optimal_fitness(&self) -> Option<f64> {
        None
    }
}

fn check_topology(genome: &Genome, want_in: usize, want_out: usize) -> Result<(), EnvError> {
    let topo = genome.topology();
    if topo.input_size() != want_in || topo.output_size() != want_out {
        return Err(EnvError::TopologyMismatch {
            want_in,
            want_out,
            got_in: topo.input_size(),
            got_out: topo.output_size(),
        });
    }
    Ok(())
}

pub(crate) use check_topology as check_genome_topology;
