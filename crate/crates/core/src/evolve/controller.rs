use super::EvolutionConfig;

/// Guard against division by zero when the previous winner fitness is zero.
const RELATIVE_CHANGE_EPSILON: f64 = 1e-9;

/// The mutation-resistance state machine.
///
/// Resistance is one minus the per-weight mutation probability. After each
/// generation's winner is known, the controller compares it with the
/// previous winner: a relative change inside the stagnation band lowers the
/// resistance by one decrement (clamped at the floor), so stuck runs mutate
/// more aggressively each generation; any change outside the band — a
/// breakthrough in either direction — resets it to the initial value.
#[derive(Debug, Clone, PartialEq)]
pub struct MutationController {
    current_resistance: f64,
    previous_winner_fitness: Option<f64>,
}

impl MutationController {
    pub fn new(cfg: &EvolutionConfig) -> Self {
        Self {
            current_resistance: cfg.initial_resistance,
            previous_winner_fitness: None,
        }
    }

    pub fn current_resistance(&self) -> f64 {
        self.current_resistance
    }

    pub fn previous_winner_fitness(&self) -> Option<f64> {
        self.previous_winner_fitness
    }

    /// Per-weight mutation probability implied by the current resistance.
    pub fn selection_prob(&self) -> f64 {
        1.0 - self.current_resistance
    }

    /// Folds one generation's winner fitness into the controller and
    /// returns the resistance to use for the upcoming mutations.
    ///
    /// The first update (no predecessor) sets the initial resistance.
    pub fn update(&mut self, winner_fitness: f64, cfg: &EvolutionConfig) -> f64 {
        match self.previous_winner_fitness {
            None => self.current_resistance = cfg.initial_resistance,
            Some(previous) => {
                let relative =
                    (winner_fitness - previous) / previous.abs().max(RELATIVE_CHANGE_EPSILON);
                let stagnant = cfg.stagnation_lo <= relative && relative <= cfg.stagnation_hi;
                self.current_resistance = if stagnant {
                    (self.current_resistance - cfg.resistance_decrement).max(cfg.resistance_floor)
                } else {
                    cfg.initial_resistance
                };
            }
        }
        self.previous_winner_fitness = Some(winner_fitness);
        self.current_resistance
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg() -> EvolutionConfig {
        EvolutionConfig::default()
    }

    #[test]
    fn first_generation_sets_initial() {
        let c = cfg();
        let mut mc = MutationController::new(&c);
        assert_eq!(mc.update(1000.0, &c), 0.95);
        assert_eq!(mc.previous_winner_fitness(), Some(1000.0));
    }

    #[test]
    fn in_band_change_lowers_by_one_decrement() {
        let c = cfg();
        let mut mc = MutationController::new(&c);
        mc.update(1000.0, &c);
        // +2% is inside [-5%, +10%]
        assert_eq!(mc.update(1020.0, &c), 0.95 - 0.05);
    }

    #[test]
    fn upward_breakthrough_resets() {
        let c = cfg();
        let mut mc = MutationController::new(&c);
        mc.update(1000.0, &c);
        mc.update(1020.0, &c);
        // +17.6% from 1020 is above the band
        assert_eq!(mc.update(1200.0, &c), 0.95);
    }

    #[test]
    fn downward_breakthrough_resets() {
        let c = cfg();
        let mut mc = MutationController::new(&c);
        mc.update(1000.0, &c);
        // -10% is below the band
        assert_eq!(mc.update(900.0, &c), 0.95);
    }

    #[test]
    fn chained_stagnation_clamps_at_floor() {
        let c = cfg();
        let mut mc = MutationController::new(&c);
        mc.update(1000.0, &c);
        let mut last = mc.current_resistance();
        for _ in 0..40 {
            last = mc.update(1000.0, &c);
        }
        assert_eq!(last, c.resistance_floor);
    }

    #[test]
    fn zero_previous_fitness_uses_epsilon_guard() {
        let c = cfg();
        let mut mc = MutationController::new(&c);
        mc.update(0.0, &c);
        // any gain from zero is a huge relative change: reset, not stagnation
        assert_eq!(mc.update(1.0, &c), 0.95);
        // and zero-to-zero is exactly zero change: stagnant
        let mut mc = MutationController::new(&c);
        mc.update(0.0, &c);
        assert_eq!(mc.update(0.0, &c), 0.95 - 0.05);
    }

    proptest! {
        #[test]
        fn resistance_stays_bounded(fitnesses in proptest::collection::vec(-1e6f64..1e6, 1..60)) {
            let c = cfg();
            let mut mc = MutationController::new(&c);
            for f in fitnesses {
                let r = mc.update(f, &c);
                prop_assert!(c.resistance_floor <= r && r <= c.initial_resistance);
            }
        }
    }
}
