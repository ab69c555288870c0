use std::fmt;

use super::EvolveError;

/// Which breeding strategy drives a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Elitist winner/royal-family breeding with adaptive mutation resistance.
    Anv1,
    /// Rank-weighted layer-swap breeding with a fixed mutation probability.
    Baseline,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Anv1 => "anv1",
            Algorithm::Baseline => "baseline",
        })
    }
}

/// How a selected weight is perturbed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationDistribution {
    /// `w += uniform(-magnitude, +magnitude)`
    UniformAdditive,
    /// `w += normal(0, magnitude)`
    GaussianAdditive,
    /// `w := uniform(-magnitude, +magnitude)`
    UniformReplace,
}

impl fmt::Display for MutationDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MutationDistribution::UniformAdditive => "uniform_additive",
            MutationDistribution::GaussianAdditive => "gaussian_additive",
            MutationDistribution::UniformReplace => "uniform_replace",
        })
    }
}

/// All knobs of the evolutionary engine.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionConfig {
    /// Populations per generation.
    pub population_size: usize,
    /// Winner-clone slots bred from the winner with itself, then mutated.
    pub royal_family_size: usize,
    /// Resistance after a reset; also the starting value.
    pub initial_resistance: f64,
    /// Subtracted per stagnant generation.
    pub resistance_decrement: f64,
    /// Resistance never drops below this, so mutation never becomes total
    /// genome replacement.
    pub resistance_floor: f64,
    /// Relative winner-fitness change at or above this counts toward the
    /// stagnation band.
    pub stagnation_lo: f64,
    /// Relative winner-fitness change at or below this counts toward the
    /// stagnation band.
    pub stagnation_hi: f64,
    pub mutation_magnitude: f64,
    pub mutation_distribution: MutationDistribution,
    pub algorithm: Algorithm,
    /// Fixed per-weight mutation probability for the baseline.
    pub baseline_mutation_prob: f64,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        Self {
            population_size: 50,
            royal_family_size: 4,
            initial_resistance: 0.95,
            resistance_decrement: 0.05,
            resistance_floor: 0.05,
            stagnation_lo: -0.05,
            stagnation_hi: 0.10,
            mutation_magnitude: 0.3,
            mutation_distribution: MutationDistribution::GaussianAdditive,
            algorithm: Algorithm::Anv1,
            baseline_mutation_prob: 0.15,
        }
    }
}

impl EvolutionConfig {
    pub fn validate(&self) -> Result<(), EvolveError> {
        if self.population_size == 0 {
            return Err(EvolveError::InvalidConfig("population_size must be at least 1".into()));
        }
        if 1 + self.royal_family_size > self.population_size {
            return Err(EvolveError::InvalidConfig(format!(
                "winner plus royal family ({}) must fit inside the population ({})",
                1 + self.royal_family_size,
                self.population_size
            )));
        }
        if !(0.0..=1.0).contains(&self.resistance_floor)
            || !(0.0..=1.0).contains(&self.initial_resistance)
            || self.resistance_floor > self.initial_resistance
        {
            return Err(EvolveError::InvalidConfig(format!(
                "need 0 <= resistance_floor ({}) <= initial_resistance ({}) <= 1",
                self.resistance_floor, self.initial_resistance
            )));
        }
        if self.resistance_decrement < 0.0 {
            return Err(EvolveError::InvalidConfig(format!(
                "resistance_decrement must be non-negative, got {}",
                self.resistance_decrement
            )));
        }
        if self.stagnation_lo >= self.stagnation_hi {
            return Err(EvolveError::InvalidConfig(format!(
                "stagnation interval is empty: [{}, {}]",
                self.stagnation_lo, self.stagnation_hi
            )));
        }
        if self.mutation_magnitude <= 0.0 {
            return Err(EvolveError::InvalidConfig(format!(
                "mutation_magnitude must be positive, got {}",
                self.mutation_magnitude
            )));
        }
        if !(0.0..=1.0).contains(&self.baseline_mutation_prob) {
            return Err(EvolveError::InvalidConfig(format!(
                "baseline_mutation_prob must lie in [0, 1], got {}",
                self.baseline_mutation_prob
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        EvolutionConfig::default().validate().unwrap();
    }

    #[test]
    fn royal_family_must_fit() {
        let cfg = EvolutionConfig {
            population_size: 4,
            royal_family_size: 4,
            ..EvolutionConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = EvolutionConfig {
            population_size: 5,
            royal_family_size: 4,
            ..EvolutionConfig::default()
        };
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn resistance_bounds_checked() {
        let cfg = EvolutionConfig {
            resistance_floor: 0.96,
            ..EvolutionConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = EvolutionConfig {
            initial_resistance: 1.2,
            ..EvolutionConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn stagnation_interval_must_be_ordered() {
        let cfg = EvolutionConfig {
            stagnation_lo: 0.10,
            stagnation_hi: -0.05,
            ..EvolutionConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
