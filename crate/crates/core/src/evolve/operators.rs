use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::{EvolveError, MutationDistribution};
use crate::neuro::Genome;

/// Checkered crossover on raw weight vectors: child 1 takes even indices
/// from `a` and odd from `b`; child 2 is the complement. The two children
/// differ only in which parent contributes the first weight.
///
/// Panics if the slices have different lengths.
pub fn checkered_crossover_slices(a: &[f64], b: &[f64]) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(a.len(), b.len(), "checkered crossover needs equal lengths");
    let child1 = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (&x, &y))| if i % 2 == 0 { x } else { y })
        .collect();
    let child2 = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (&x, &y))| if i % 2 == 0 { y } else { x })
        .collect();
    (child1, child2)
}

/// Checkered crossover of two genomes sharing a topology.
pub fn checkered_crossover(a: &Genome, b: &Genome) -> Result<(Genome, Genome), EvolveError> {
    if a.topology() != b.topology() {
        return Err(EvolveError::TopologyMismatch);
    }
    let (w1, w2) = checkered_crossover_slices(a.weights(), b.weights());
    Ok((
        Genome::from_parts(a.topology().clone(), w1),
        Genome::from_parts(a.topology().clone(), w2),
    ))
}

/// Layer-swap crossover: for each layer block (weights plus biases), a fair
/// coin picks the donor parent and the whole block is copied. `true` on the
/// coin takes parent `a`.
pub fn layer_swap_crossover(
    a: &Genome,
    b: &Genome,
    rng: &mut impl Rng,
) -> Result<Genome, EvolveError> {
    if a.topology() != b.topology() {
        return Err(EvolveError::TopologyMismatch);
    }
    let mut weights = Vec::with_capacity(a.len());
    let mut offset = 0;
    for block in a.topology().layer_block_sizes() {
        let donor = if rng.random::<bool>() { a } else { b };
        weights.extend_from_slice(&donor.weights()[offset..offset + block]);
        offset += block;
    }
    Ok(Genome::from_parts(a.topology().clone(), weights))
}

/// Per-weight mutation: each weight is independently selected with
/// `selection_prob`; selected weights are perturbed per `dist`; unselected
/// weights are bit-identical in the result.
pub fn mutate(
    genome: &Genome,
    selection_prob: f64,
    magnitude: f64,
    dist: MutationDistribution,
    rng: &mut impl Rng,
) -> Genome {
    debug_assert!((0.0..=1.0).contains(&selection_prob));
    let normal = Normal::new(0.0, magnitude).expect("positive magnitude");
    let mut weights = genome.weights().to_vec();
    for w in &mut weights {
        if rng.random::<f64>() < selection_prob {
            match dist {
                MutationDistribution::UniformAdditive => *w += rng.random_range(-magnitude..magnitude),
                MutationDistribution::GaussianAdditive => *w += normal.sample(rng),
                MutationDistribution::UniformReplace => *w = rng.random_range(-magnitude..magnitude),
            }
        }
    }
    Genome::from_parts(genome.topology().clone(), weights)
}
