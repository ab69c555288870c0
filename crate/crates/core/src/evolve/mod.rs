//! The evolutionary engine: crossover operators, adaptive mutation, elitist
//! selection, and the generation loop, plus the layer-swap baseline.
//!
//! Two breeding strategies share one loop:
//!
//! * **ANv1** — the winner of each generation survives bit-identical at
//!   slot 0; a small "royal family" of winner clones takes mutations; every
//!   other slot is a checkered crossover of the winner with a ranked member.
//!   The per-weight mutation probability is `1 - resistance`, where the
//!   resistance starts at 0.95, drops 0.05 per stagnant generation, and
//!   resets on any breakthrough (see [`MutationController`]).
//! * **Baseline** — rank-weighted parent sampling, whole-layer swap
//!   crossover, a fixed 0.15 mutation probability, and no elitism.

mod config;
mod controller;
mod engine;
mod operators;

pub use config::{Algorithm, EvolutionConfig, MutationDistribution};
pub use controller::MutationController;
pub use engine::{
    evolve_until, evolve_until_observed, run_generation, select_and_breed_anv1,
    select_and_breed_baseline, write_runlog_csv, GenerationRecord, RunLog, StopReason, Termination,
    RUNLOG_CSV_HEADER,
};
pub use operators::{checkered_crossover, checkered_crossover_slices, layer_swap_crossover, mutate};

use crate::env::EnvError;
use thiserror::Error;

/// Errors from configuration and the generation loop.
#[derive(Debug, Error)]
pub enum EvolveError {
    #[error("invalid evolution config: {0}")]
    InvalidConfig(String),
    #[error("population has {got} members but the config requires {expected}")]
    PopulationSize { expected: usize, got: usize },
    #[error("parent genomes decode under different topologies")]
    TopologyMismatch,
    #[error("invalid termination rule: {0}")]
    InvalidTermination(String),
    #[error("evaluation failed at slot {slot}: {source}")]
    Evaluation {
        slot: usize,
        #[source]
        source: EnvError,
    },
    #[error("generation observer failed: {0}")]
    Observer(#[from] std::io::Error),
    #[error(transparent)]
    Net(#[from] crate::neuro::NeuroError),
}
