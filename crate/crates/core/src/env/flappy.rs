use rand::{Rng, RngCore};

use super::{check_genome_topology, EnvError, Environment};
use crate::neuro::Genome;

pub const FLAPPY_INPUTS: usize = 3;
pub const FLAPPY_OUTPUTS: usize = 1;

/// Physics and scoring constants for the flap-to-survive game.
///
/// Velocity is measured positive-downward: gravity adds to it each frame, a
/// flap replaces it with `-flap_impulse`, and height decreases by it.
#[derive(Debug, Clone, PartialEq)]
pub struct FlappyConfig {
    pub gravity: f64,
    pub flap_impulse: f64,
    pub pipe_speed: f64,
    pub pipe_gap: f64,
    /// Frames between consecutive pipes.
    pub pipe_spacing: u64,
    pub world_height: f64,
    /// Evaluation cap: the game itself has no end.
    pub max_frames: u64,
    pub score_per_frame: f64,
    pub score_per_pipe: f64,
}

impl Default for FlappyConfig {
    fn default() -> Self {
        let world_height = 1.0;
        Self {
            gravity: 0.05,
            flap_impulse: 0.8,
            pipe_speed: 0.5,
            pipe_gap: 0.25 * world_height,
            pipe_spacing: 60,
            world_height,
            max_frames: 10_000,
            score_per_frame: 1.0,
            score_per_pipe: 50.0,
        }
    }
}

impl FlappyConfig {
    pub fn validate(&self) -> Result<(), EnvError> {
        if self.pipe_gap >= self.world_height {
            return Err(EnvError::InvalidConfig(format!(
                "pipe_gap {} must be smaller than world_height {}",
                self.pipe_gap, self.world_height
            )));
        }
        if self.max_frames == 0 {
            return Err(EnvError::InvalidConfig("max_frames must be at least 1".into()));
        }
        for (name, v) in [
            ("gravity", self.gravity),
            ("flap_impulse", self.flap_impulse),
            ("pipe_speed", self.pipe_speed),
            ("pipe_gap", self.pipe_gap),
            ("world_height", self.world_height),
        ] {
            if v <= 0.0 {
                return Err(EnvError::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        if self.pipe_spacing == 0 {
            return Err(EnvError::InvalidConfig("pipe_spacing must be at least 1".into()));
        }
        Ok(())
    }

    /// Horizontal distance between consecutive pipes, and the maximum
    /// nearest-pipe distance used for observation normalization.
    pub fn pipe_interval(&self) -> f64 {
        self.pipe_spacing as f64 * self.pipe_speed
    }
}

/// A pipe is a zero-width gate: `distance` is how far ahead of the bird it
/// sits, and `gap_center` the height of its opening's midpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pipe {
    pub distance: f64,
    pub gap_center: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlappyState {
    pub bird_height: f64,
    /// Positive downward.
    pub bird_velocity: f64,
    /// Sorted by distance ascending; passed pipes are dropped.
    pub pipes: Vec<Pipe>,
    pub frame: u64,
    pub alive: bool,
    pub score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlappyAction {
    Flap,
    NoFlap,
}

/// Fresh state: bird at mid-height with zero velocity, gap centers drawn
/// from `rng` uniformly over the band that keeps the whole gap in-world.
///
/// Enough pipes for `max_frames` of play are drawn up front, so stepping
/// never consumes randomness and the rollout is fixed once this returns.
pub fn flappy_reset(cfg: &FlappyConfig, rng: &mut dyn RngCore) -> FlappyState {
    let interval = cfg.pipe_interval();
    let pipe_count = (cfg.max_frames / cfg.pipe_spacing) as usize + 2;
    let half_gap = cfg.pipe_gap / 2.0;
    let pipes = (0..pipe_count)
        .map(|k| Pipe {
            distance: interval * (k + 1) as f64,
            gap_center: rng.random_range(half_gap..cfg.world_height - half_gap),
        })
        .collect();
    FlappyState {
        bird_height: cfg.world_height / 2.0,
        bird_velocity: 0.0,
        pipes,
        frame: 0,
        alive: true,
        score: 0.0,
    }
}

/// Advances one frame: velocity update, height update, pipe advance,
/// collision, then scoring. A pipe whose distance crosses zero this frame
/// kills the bird if it sits outside the gap, and pays the pipe bonus if it
/// passed through.
pub fn flappy_step(
    state: &mut FlappyState,
    action: FlappyAction,
    cfg: &FlappyConfig,
) -> Result<(), EnvError> {
    if !state.alive {
        return Err(EnvError::DeadState);
    }

    match action {
        FlappyAction::Flap => state.bird_velocity = -cfg.flap_impulse,
        FlappyAction::NoFlap => state.bird_velocity += cfg.gravity,
    }
    state.bird_height -= state.bird_velocity;

    let mut crossed_in_gap = 0u32;
    for pipe in &mut state.pipes {
        let before = pipe.distance;
        pipe.distance -= cfg.pipe_speed;
        if before >= 0.0 && pipe.distance < 0.0 {
            let half_gap = cfg.pipe_gap / 2.0;
            if (state.bird_height - pipe.gap_center).abs() > half_gap {
                state.alive = false;
            } else {
                crossed_in_gap += 1;
            }
        }
    }

    if state.bird_height < 0.0 || state.bird_height > cfg.world_height {
        state.alive = false;
    }

    state.frame += 1;
    state.score += cfg.score_per_frame;
    if state.alive {
        state.score += cfg.score_per_pipe * f64::from(crossed_in_gap);
    }
    state.pipes.retain(|p| p.distance >= 0.0);
    Ok(())
}

/// Observation in `[0, 1]^3`: nearest pipe distance over the pipe interval,
/// that pipe's gap-center height over world height, bird height over world
/// height. Requires an alive state with at least one pipe ahead.
pub fn flappy_observe(state: &FlappyState, cfg: &FlappyConfig) -> [f64; 3] {
    let nearest = state
        .pipes
        .first()
        .expect("alive flappy state must have a pipe ahead");
    [
        nearest.distance / cfg.pipe_interval(),
        nearest.gap_center / cfg.world_height,
        state.bird_height / cfg.world_height,
    ]
}

/// Rolls one episode from reset to death or the frame cap, flapping
/// whenever the net's single output exceeds 0.5. Returns the final score.
pub fn evaluate_flappy(
    genome: &Genome,
    cfg: &FlappyConfig,
    rng: &mut dyn RngCore,
) -> Result<f64, EnvError> {
    rollout(genome, cfg, rng, None)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlappyTraceRow {
    pub frame: u64,
    pub height: f64,
    pub velocity: f64,
    pub score: f64,
}

/// Same rollout as [`evaluate_flappy`], also recording one row per frame.
pub fn evaluate_flappy_traced(
    genome: &Genome,
    cfg: &FlappyConfig,
    rng: &mut dyn RngCore,
) -> Result<(f64, Vec<FlappyTraceRow>), EnvError> {
    let mut rows = Vec::new();
    let score = rollout(genome, cfg, rng, Some(&mut rows))?;
    Ok((score, rows))
}

fn rollout(
    genome: &Genome,
    cfg: &FlappyConfig,
    rng: &mut dyn RngCore,
    mut trace: Option<&mut Vec<FlappyTraceRow>>,
) -> Result<f64, EnvError> {
    check_genome_topology(genome, FLAPPY_INPUTS, FLAPPY_OUTPUTS)?;
    let mut state = flappy_reset(cfg, rng);
    while state.alive && state.frame < cfg.max_frames {
        let obs = flappy_observe(&state, cfg);
        let out = genome.forward(&obs)?;
        let action = if out[0] > 0.5 {
            FlappyAction::Flap
        } else {
            FlappyAction::NoFlap
        };
        flappy_step(&mut state, action, cfg)?;
        if let Some(rows) = trace.as_deref_mut() {
            rows.push(FlappyTraceRow {
                frame: state.frame,
                height: state.bird_height,
                velocity: state.bird_velocity,
                score: state.score,
            });
        }
    }
    Ok(state.score)
}

/// The game as an [`Environment`]. Open-ended: no optimal fitness.
#[derive(Debug, Clone)]
pub struct FlappyEnv {
    cfg: FlappyConfig,
}

impl FlappyEnv {
    pub fn new(cfg: FlappyConfig) -> Result<Self, EnvError> {
        cfg.validate()?;
        Ok(Self { cfg })
    }

    pub fn config(&self) -> &FlappyConfig {
        &self.cfg
    }
}

impl Environment for FlappyEnv {
    fn evaluate(&self, genome: &Genome, rng: &mut dyn RngCore) -> Result<f64, EnvError> {
        evaluate_flappy(genome, &self.cfg, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neuro::{Activation, InitScheme, OutputActivation, Topology};
    use crate::rng::substream;
    use std::sync::Arc;

    fn cfg() -> FlappyConfig {
        FlappyConfig::default()
    }

    fn pilot_topology() -> Arc<Topology> {
        Arc::new(
            Topology::new(3, vec![7], 1, Activation::Sigmoid, OutputActivation::Sigmoid).unwrap(),
        )
    }

    /// All-zero weights give sigmoid output 0.5, which is not > 0.5: never flaps.
    fn never_flapper() -> Genome {
        Genome::new(pilot_topology(), vec![0.0; 36]).unwrap()
    }

    /// Large positive output bias forces the output above 0.5 always.
    fn always_flapper() -> Genome {
        let mut w = vec![0.0; 36];
        w[35] = 10.0; // output neuron bias is the last slot
        Genome::new(pilot_topology(), w).unwrap()
    }

    #[test]
    fn reset_is_deterministic_and_centered() {
        let a = flappy_reset(&cfg(), &mut substream(4, &[0]));
        let b = flappy_reset(&cfg(), &mut substream(4, &[0]));
        assert_eq!(a, b);
        assert_eq!(a.bird_height, 0.5);
        assert_eq!(a.bird_velocity, 0.0);
        assert_eq!(a.frame, 0);
    }

    #[test]
    fn gap_centers_keep_gap_in_world() {
        let c = cfg();
        let state = flappy_reset(&c, &mut substream(77, &[0]));
        let half = c.pipe_gap / 2.0;
        assert!(!state.pipes.is_empty());
        for pipe in &state.pipes {
            assert!(pipe.gap_center - half >= 0.0);
            assert!(pipe.gap_center + half <= c.world_height);
        }
    }

    #[test]
    fn pipes_start_sorted_and_evenly_spaced() {
        let c = cfg();
        let state = flappy_reset(&c, &mut substream(8, &[0]));
        let interval = c.pipe_interval();
        for (k, pipe) in state.pipes.iter().enumerate() {
            assert_eq!(pipe.distance, interval * (k + 1) as f64);
        }
    }

    #[test]
    fn free_fall_matches_closed_form() {
        // After k no-flap frames from rest: velocity = k*g, drop = g*k(k+1)/2.
        let c = cfg();
        let mut state = flappy_reset(&c, &mut substream(1, &[0]));
        let h0 = state.bird_height;
        for k in 1u64..=5 {
            flappy_step(&mut state, FlappyAction::NoFlap, &c).unwrap();
            let kf = k as f64;
            assert!((state.bird_velocity - kf * c.gravity).abs() < 1e-12);
            let drop = c.gravity * kf * (kf + 1.0) / 2.0;
            assert!((h0 - state.bird_height - drop).abs() < 1e-12, "frame {k}");
        }
        // By frame 5 the bird has fallen 0.75 from mid-height: dead below the floor.
        assert!(!state.alive);
    }

    #[test]
    fn constant_flapping_rises_to_ceiling() {
        let c = cfg();
        let mut state = flappy_reset(&c, &mut substream(1, &[0]));
        let mut prev = state.bird_height;
        while state.alive {
            flappy_step(&mut state, FlappyAction::Flap, &c).unwrap();
            assert!(state.bird_height > prev);
            prev = state.bird_height;
        }
        assert!(state.bird_height > c.world_height);
    }

    #[test]
    fn crossing_outside_gap_kills() {
        let c = cfg();
        let mut state = flappy_reset(&c, &mut substream(1, &[0]));
        state.pipes[0].distance = 0.2; // crosses this frame at speed 0.5
        state.pipes[0].gap_center = 0.9; // bird near 0.5: outside the 0.25 gap
        flappy_step(&mut state, FlappyAction::NoFlap, &c).unwrap();
        assert!(!state.alive);
    }

    #[test]
    fn crossing_inside_gap_pays_bonus() {
        let c = cfg();
        let mut state = flappy_reset(&c, &mut substream(1, &[0]));
        state.pipes[0].distance = 0.2;
        state.pipes[0].gap_center = 0.45; // bird falls to 0.45 exactly this frame
        flappy_step(&mut state, FlappyAction::NoFlap, &c).unwrap();
        assert!(state.alive);
        assert_eq!(state.score, c.score_per_frame + c.score_per_pipe);
        // the crossed pipe is dropped
        assert!(state.pipes[0].distance > 1.0);
    }

    #[test]
    fn stepping_dead_state_is_an_error() {
        let c = cfg();
        let mut state = flappy_reset(&c, &mut substream(1, &[0]));
        state.alive = false;
        assert!(matches!(
            flappy_step(&mut state, FlappyAction::NoFlap, &c),
            Err(EnvError::DeadState)
        ));
    }

    #[test]
    fn never_flapping_scores_the_fall_frames_exactly() {
        // Free fall from 0.5 at g=0.05: alive through frame 4 (height exactly 0),
        // dead on frame 5, scoring 1 per frame stepped.
        let score = evaluate_flappy(&never_flapper(), &cfg(), &mut substream(2, &[0])).unwrap();
        assert_eq!(score, 5.0);
    }

    #[test]
    fn evaluation_is_deterministic() {
        let g = always_flapper();
        let a = evaluate_flappy(&g, &cfg(), &mut substream(6, &[3])).unwrap();
        let b = evaluate_flappy(&g, &cfg(), &mut substream(6, &[3])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn score_is_capped_by_frame_arithmetic() {
        let c = cfg();
        let max_pipes = c.max_frames / c.pipe_spacing + 2;
        let cap = c.max_frames as f64 * c.score_per_frame + max_pipes as f64 * c.score_per_pipe;
        for seed in 0..20 {
            let g = Genome::init(pilot_topology(), InitScheme::default(), &mut substream(seed, &[1]))
                .unwrap();
            let score = evaluate_flappy(&g, &c, &mut substream(seed, &[2])).unwrap();
            assert!(score <= cap);
        }
    }

    #[test]
    fn observation_components_stay_normalized() {
        let c = cfg();
        for seed in 0..10 {
            let g = Genome::init(pilot_topology(), InitScheme::default(), &mut substream(seed, &[5]))
                .unwrap();
            let mut rng = substream(seed, &[6]);
            let mut state = flappy_reset(&c, &mut rng);
            while state.alive && state.frame < 200 {
                let obs = flappy_observe(&state, &c);
                for (i, v) in obs.iter().enumerate() {
                    assert!((0.0..=1.0).contains(v), "component {i} = {v}");
                }
                let out = g.forward(&obs).unwrap();
                let action = if out[0] > 0.5 { FlappyAction::Flap } else { FlappyAction::NoFlap };
                flappy_step(&mut state, action, &c).unwrap();
            }
        }
    }

    #[test]
    fn observation_values_match_definitions() {
        let c = cfg();
        let mut state = flappy_reset(&c, &mut substream(9, &[0]));
        assert_eq!(flappy_observe(&state, &c)[2], 0.5);
        assert_eq!(flappy_observe(&state, &c)[0], 1.0);
        state.pipes[0].distance = 0.0;
        assert_eq!(flappy_observe(&state, &c)[0], 0.0);
    }

    #[test]
    fn wrong_topology_rejected() {
        let t = Arc::new(
            Topology::new(4, vec![7], 1, Activation::Sigmoid, OutputActivation::Sigmoid).unwrap(),
        );
        let g = Genome::new(t, vec![0.0; 43]).unwrap();
        assert!(matches!(
            evaluate_flappy(&g, &cfg(), &mut substream(0, &[0])),
            Err(EnvError::TopologyMismatch { .. })
        ));
    }

    #[test]
    fn trace_rows_cover_every_frame() {
        let (score, rows) =
            evaluate_flappy_traced(&never_flapper(), &cfg(), &mut substream(2, &[0])).unwrap();
        assert_eq!(score, 5.0);
        assert_eq!(rows.len(), 5);
        assert_eq!(rows.last().unwrap().score, 5.0);
    }
}
