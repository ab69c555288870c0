//! A gradient-free neuroevolution engine for fixed-topology feedforward
//! networks, built around an elitist "winner and royal family" breeding
//! scheme with an adaptive mutation-resistance controller, plus a
//! layer-swap baseline for comparison.
//!
//! The crate is organized in four layers:
//!
//! * [`neuro`] — network topology, flat weight genomes, and inference.
//! * [`env`] — two deterministic, seedable evaluation tasks: a side-scrolling
//!   flap-to-survive game and a single-axis object-centering task driven by a
//!   location-class oracle.
//! * [`evolve`] — crossover and mutation operators, the resistance
//!   controller, and the generation loop.
//! * [`harness`] — config files, seeded multi-run campaigns, algorithm
//!   comparisons, and CSV artifacts.
//!
//! Every run is a pure function of its configuration and a 64-bit master
//! seed: evaluations draw from per-slot substreams (see [`rng`]) so results
//! are bit-identical whether evaluations run serially or in parallel.

pub mod env;
pub mod evolve;
pub mod harness;
pub mod neuro;
pub mod rng;
