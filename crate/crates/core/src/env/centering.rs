use std::fmt;

use rand::{Rng, RngCore};

use super::{check_genome_topology, EnvError, Environment};
use crate::neuro::{argmax_action, Genome};

pub const CENTERING_INPUTS: usize = 10;
pub const CENTERING_OUTPUTS: usize = 3;

/// One of the ten location classes reported by the location oracle: a 3x3
/// grid of the visual field plus a null class for "object out of view".
///
/// The single-axis yaw task keeps the object in the middle row, so only
/// `Left`/`Center`/`Right`/`NoImage` occur under the standard protocol; the
/// oracle is nonetheless total over all ten classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocationClass {
    TopLeft,
    TopCenter,
    TopRight,
    Left,
    Center,
    Right,
    BottomLeft,
    BottomCenter,
    BottomRight,
    NoImage,
}

pub const LOCATION_CLASS_COUNT: usize = 10;

impl LocationClass {
    pub const ALL: [LocationClass; LOCATION_CLASS_COUNT] = [
        LocationClass::TopLeft,
        LocationClass::TopCenter,
        LocationClass::TopRight,
        LocationClass::Left,
        LocationClass::Center,
        LocationClass::Right,
        LocationClass::BottomLeft,
        LocationClass::BottomCenter,
        LocationClass::BottomRight,
        LocationClass::NoImage,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap()
    }

    /// One-hot encoding for the control net: exactly one component is 1.
    pub fn one_hot(self) -> [f64; LOCATION_CLASS_COUNT] {
        let mut v = [0.0; LOCATION_CLASS_COUNT];
        v[self.index()] = 1.0;
        v
    }
}

impl fmt::Display for LocationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LocationClass::TopLeft => "TopLeft",
            LocationClass::TopCenter => "TopCenter",
            LocationClass::TopRight => "TopRight",
            LocationClass::Left => "Left",
            LocationClass::Center => "Center",
            LocationClass::Right => "Right",
            LocationClass::BottomLeft => "BottomLeft",
            LocationClass::BottomCenter => "BottomCenter",
            LocationClass::BottomRight => "BottomRight",
            LocationClass::NoImage => "NoImage",
        };
        f.write_str(name)
    }
}

/// The three head commands, in output-neuron order: the control net's
/// outputs map to commands by argmax index 0/1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    MoveLeft,
    NoMovement,
    MoveRight,
}

impl Command {
    pub fn from_action_index(index: usize) -> Command {
        match index {
            0 => Command::MoveLeft,
            1 => Command::NoMovement,
            2 => Command::MoveRight,
            _ => panic!("action index {index} out of range for 3 commands"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::MoveLeft => "MoveLeft",
            Command::NoMovement => "NoMovement",
            Command::MoveRight => "MoveRight",
        })
    }
}

/// Where the object starts relative to the head: two yaw steps off-center
/// on the named side, or dead ahead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartLocation {
    Left,
    Center,
    Right,
}

impl StartLocation {
    pub const ALL: [StartLocation; 3] = [
        StartLocation::Left,
        StartLocation::Center,
        StartLocation::Right,
    ];
}

impl fmt::Display for StartLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StartLocation::Left => "left",
            StartLocation::Center => "center",
            StartLocation::Right => "right",
        })
    }
}

/// Geometry, episode structure, and oracle noise for the centering task.
///
/// Azimuth convention: `relative_azimuth` is the object bearing minus the
/// head yaw, in degrees. Negative means the object appears to the left.
/// `MoveLeft` turns the head toward the left, adding `yaw_step` to the
/// relative azimuth; `MoveRight` subtracts it.
#[derive(Debug, Clone, PartialEq)]
pub struct CenteringConfig {
    /// Degrees per move command — the fixed yaw increment.
    pub yaw_step: f64,
    /// Half-width of the field of view, degrees.
    pub field_half_width: f64,
    /// The object classifies as `Center` within +- this band, degrees.
    pub center_band: f64,
    /// Perceive-classify-act steps per evaluation.
    pub episodes: usize,
    pub reward_per_correct: f64,
    /// Probability the oracle replaces the true class with a uniformly
    /// random different one.
    pub misclassification_rate: f64,
}

impl Default for CenteringConfig {
    fn default() -> Self {
        Self {
            yaw_step: 10.0,
            field_half_width: 30.0,
            center_band: 5.0,
            episodes: 5,
            reward_per_correct: 100.0,
            misclassification_rate: 0.0,
        }
    }
}

impl CenteringConfig {
    pub fn validate(&self) -> Result<(), EnvError> {
        if self.center_band >= self.field_half_width {
            return Err(EnvError::InvalidConfig(format!(
                "center_band {} must be smaller than field_half_width {}",
                self.center_band, self.field_half_width
            )));
        }
        if self.start_offset(StartLocation::Right).abs() >= self.field_half_width {
            return Err(EnvError::InvalidConfig(format!(
                "start offset {} (two yaw steps) must lie inside field_half_width {}",
                self.start_offset(StartLocation::Right),
                self.field_half_width
            )));
        }
        if self.episodes == 0 {
            return Err(EnvError::InvalidConfig("episodes must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.misclassification_rate) {
            return Err(EnvError::InvalidConfig(format!(
                "misclassification_rate must lie in [0, 1], got {}",
                self.misclassification_rate
            )));
        }
        if self.yaw_step <= 0.0 {
            return Err(EnvError::InvalidConfig(format!(
                "yaw_step must be positive, got {}",
                self.yaw_step
            )));
        }
        Ok(())
    }

    /// Initial relative azimuth for a start location: two yaw steps toward
    /// the named side.
    pub fn start_offset(&self, start: StartLocation) -> f64 {
        match start {
            StartLocation::Left => -2.0 * self.yaw_step,
            StartLocation::Center => 0.0,
            StartLocation::Right => 2.0 * self.yaw_step,
        }
    }

    /// Maximum attainable reward: every step correct.
    pub fn max_reward(&self) -> f64 {
        self.episodes as f64 * self.reward_per_correct
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CenteringState {
    /// Object bearing minus head yaw, degrees; negative = object appears left.
    pub relative_azimuth: f64,
    pub step_index: usize,
    pub accumulated_reward: f64,
}

impl CenteringState {
    pub fn new(relative_azimuth: f64) -> Self {
        Self {
            relative_azimuth,
            step_index: 0,
            accumulated_reward: 0.0,
        }
    }
}

fn true_class(azimuth: f64, cfg: &CenteringConfig) -> LocationClass {
    if azimuth.abs() > cfg.field_half_width {
        LocationClass::NoImage
    } else if azimuth < -cfg.center_band {
        LocationClass::Left
    } else if azimuth > cfg.center_band {
        LocationClass::Right
    } else {
        LocationClass::Center
    }
}

/// The location-oracle substitute for a trained classifier: maps the state
/// to a class, flipping to a uniformly random *different* class with
/// probability `misclassification_rate`.
pub fn classify_location(
    state: &CenteringState,
    cfg: &CenteringConfig,
    rng: &mut dyn RngCore,
) -> LocationClass {
    let truth = true_class(state.relative_azimuth, cfg);
    if rng.random::<f64>() < cfg.misclassification_rate {
        let mut pick = rng.random_range(0..LOCATION_CLASS_COUNT - 1);
        if pick >= truth.index() {
            pick += 1;
        }
        LocationClass::ALL[pick]
    } else {
        truth
    }
}

/// The command a perfectly-behaving controller issues for each class.
/// `NoImage` maps to `NoMovement`: with the object out of view there is no
/// evidence which way to turn, so hold still.
pub fn correct_command(class: LocationClass) -> Command {
    match class {
        LocationClass::TopLeft | LocationClass::Left | LocationClass::BottomLeft => {
            Command::MoveLeft
        }
        LocationClass::TopRight | LocationClass::Right | LocationClass::BottomRight => {
            Command::MoveRight
        }
        LocationClass::TopCenter
        | LocationClass::Center
        | LocationClass::BottomCenter
        | LocationClass::NoImage => Command::NoMovement,
    }
}

/// Applies one head command: `MoveLeft` adds `yaw_step` to the relative
/// azimuth, `MoveRight` subtracts it, `NoMovement` leaves it.
pub fn centering_step(
    state: &mut CenteringState,
    command: Command,
    cfg: &CenteringConfig,
) -> Result<(), EnvError> {
    if state.step_index >= cfg.episodes {
        return Err(EnvError::EpisodeExhausted);
    }
    match command {
        Command::MoveLeft => state.relative_azimuth += cfg.yaw_step,
        Command::MoveRight => state.relative_azimuth -= cfg.yaw_step,
        Command::NoMovement => {}
    }
    state.step_index += 1;
    Ok(())
}

/// Runs the full perceive-classify-act loop for one genome from the given
/// start: `episodes` steps, `reward_per_correct` whenever the issued command
/// matches the correct command for the *true* class (reward is judged
/// against ground truth even when the oracle misreports).
pub fn evaluate_centering(
    genome: &Genome,
    start: StartLocation,
    cfg: &CenteringConfig,
    rng: &mut dyn RngCore,
) -> Result<f64, EnvError> {
    run_episodes(genome, start, cfg, rng, None)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CenteringTraceRow {
    pub step: usize,
    pub azimuth: f64,
    pub class: LocationClass,
    pub command: Command,
    pub reward: f64,
}

/// Same loop as [`evaluate_centering`], also recording one row per step.
pub fn evaluate_centering_traced(
    genome: &Genome,
    start: StartLocation,
    cfg: &CenteringConfig,
    rng: &mut dyn RngCore,
) -> Result<(f64, Vec<CenteringTraceRow>), EnvError> {
    let mut rows = Vec::new();
    let score = run_episodes(genome, start, cfg, rng, Some(&mut rows))?;
    Ok((score, rows))
}

fn run_episodes(
    genome: &Genome,
    start: StartLocation,
    cfg: &CenteringConfig,
    rng: &mut dyn RngCore,
    mut trace: Option<&mut Vec<CenteringTraceRow>>,
) -> Result<f64, EnvError> {
    check_genome_topology(genome, CENTERING_INPUTS, CENTERING_OUTPUTS)?;
    let mut state = CenteringState::new(cfg.start_offset(start));
    for step in 0..cfg.episodes {
        let truth = true_class(state.relative_azimuth, cfg);
        let observed = classify_location(&state, cfg, rng);
        let out = genome.forward(&observed.one_hot())?;
        let command = Command::from_action_index(argmax_action(&out));
        if command == correct_command(truth) {
            state.accumulated_reward += cfg.reward_per_correct;
        }
        let azimuth_before = state.relative_azimuth;
        centering_step(&mut state, command, cfg)?;
        if let Some(rows) = trace.as_deref_mut() {
            rows.push(CenteringTraceRow {
                step,
                azimuth: azimuth_before,
                class: observed,
                command,
                reward: state.accumulated_reward,
            });
        }
    }
    Ok(state.accumulated_reward)
}

/// The centering task as an [`Environment`], pinned to one start location.
#[derive(Debug, Clone)]
pub struct CenteringEnv {
    cfg: CenteringConfig,
    start: StartLocation,
}

impl CenteringEnv {
    pub fn new(cfg: CenteringConfig, start: StartLocation) -> Result<Self, EnvError> {
        cfg.validate()?;
        Ok(Self { cfg, start })
    }

    pub fn config(&self) -> &CenteringConfig {
        &self.cfg
    }

    pub fn start(&self) -> StartLocation {
        self.start
    }
}

impl Environment for CenteringEnv {
    fn evaluate(&self, genome: &Genome, rng: &mut dyn RngCore) -> Result<f64, EnvError> {
        evaluate_centering(genome, self.start, &self.cfg, rng)
    }

    fn optimal_fitness(&self) -> Option<f64> {
        Some(self.cfg.max_reward())
    }
}
