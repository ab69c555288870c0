use std::io::{BufRead, Write};
use std::sync::Arc;

use rand::{Rng, RngCore};
use rand_distr::{Distribution, Normal};

use super::topology::{OutputActivation, Topology};
use super::NeuroError;

/// Weight initialization scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitScheme {
    /// i.i.d. uniform on `[lo, hi)`.
    Uniform { lo: f64, hi: f64 },
    /// i.i.d. normal with the given mean and standard deviation.
    Gaussian { mean: f64, sd: f64 },
}

impl InitScheme {
    pub fn validate(&self) -> Result<(), NeuroError> {
        match *self {
            InitScheme::Uniform { lo, hi } if lo >= hi => Err(NeuroError::InvalidInitScheme(
                format!("uniform bounds require lo < hi, got [{lo}, {hi})"),
            )),
            InitScheme::Gaussian { sd, .. } if sd <= 0.0 => Err(NeuroError::InvalidInitScheme(
                format!("gaussian sd must be positive, got {sd}"),
            )),
            _ => Ok(()),
        }
    }
}

impl Default for InitScheme {
    fn default() -> Self {
        InitScheme::Uniform { lo: -1.0, hi: 1.0 }
    }
}

/// A flat real-valued weight vector tied to the [`Topology`] it decodes
/// under. The unit of evolution.
///
/// Immutable after construction; every evolutionary operator produces a new
/// genome. Length is checked on every construction path — a wrong-sized
/// weight vector is rejected, never truncated or padded.
#[derive(Debug, Clone, PartialEq)]
pub struct Genome {
    topology: Arc<Topology>,
    weights: Vec<f64>,
}

impl Genome {
    pub fn new(topology: Arc<Topology>, weights: Vec<f64>) -> Result<Self, NeuroError> {
        let expected = topology.total_weights();
        if weights.len() != expected {
            return Err(NeuroError::WeightCountMismatch {
                expected,
                got: weights.len(),
            });
        }
        Ok(Self { topology, weights })
    }

    /// Fresh genome with every weight drawn i.i.d. from `scheme`.
    pub fn init(
        topology: Arc<Topology>,
        scheme: InitScheme,
        rng: &mut dyn RngCore,
    ) -> Result<Self, NeuroError> {
        scheme.validate()?;
        let n = topology.total_weights();
        let weights = match scheme {
            InitScheme::Uniform { lo, hi } => (0..n).map(|_| rng.random_range(lo..hi)).collect(),
            InitScheme::Gaussian { mean, sd } => {
                let normal = Normal::new(mean, sd).expect("validated");
                (0..n).map(|_| normal.sample(rng)).collect()
            }
        };
        Ok(Self { topology, weights })
    }

    /// Construction bypass for operators that already hold a correctly-sized
    /// vector for the same topology.
    pub(crate) fn from_parts(topology: Arc<Topology>, weights: Vec<f64>) -> Self {
        debug_assert_eq!(weights.len(), topology.total_weights());
        Self { topology, weights }
    }

    pub fn topology(&self) -> &Arc<Topology> {
        &self.topology
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Affine-then-activation pass through every layer. Pure: no state is
    /// mutated, and identical `(genome, input)` pairs give bit-identical
    /// outputs.
    pub fn forward(&self, input: &[f64]) -> Result<Vec<f64>, NeuroError> {
        let topo = &self.topology;
        if input.len() != topo.input_size() {
            return Err(NeuroError::InputSizeMismatch {
                expected: topo.input_size(),
                got: input.len(),
            });
        }

        let dims = topo.layer_dims();
        let last = dims.len() - 1;
        let mut activations = input.to_vec();
        let mut offset = 0;

        for (layer, &(fan_in, fan_out)) in dims.iter().enumerate() {
            let mut next = Vec::with_capacity(fan_out);
            for j in 0..fan_out {
                let base = offset + j * (fan_in + 1);
                let mut sum = self.weights[base + fan_in]; // bias, stored last per neuron
                for i in 0..fan_in {
                    sum += self.weights[base + i] * activations[i];
                }
                next.push(sum);
            }
            offset += (fan_in + 1) * fan_out;

            if layer == last {
                apply_output(topo.output_activation(), &mut next);
            } else {
                for v in &mut next {
                    *v = topo.hidden_activation().apply(*v);
                }
            }
            activations = next;
        }
        Ok(activations)
    }
}

fn apply_output(activation: OutputActivation, values: &mut [f64]) {
    match activation {
        OutputActivation::Identity => {}
        OutputActivation::Sigmoid => {
            for v in values.iter_mut() {
                *v = 1.0 / (1.0 + (-*v).exp());
            }
        }
        OutputActivation::Softmax => {
            let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mut sum = 0.0;
            for v in values.iter_mut() {
                *v = (*v - max).exp();
                sum += *v;
            }
            for v in values.iter_mut() {
                *v /= sum;
            }
        }
    }
}

/// Writes a genome in the checkpoint text format: one header line
/// `topology: in,hidden...,out`, then one weight per line as the shortest
/// decimal that parses back to the identical bits.
pub fn write_genome<W: Write>(genome: &Genome, mut w: W) -> std::io::Result<()> {
    let sizes: Vec<String> = genome
        .topology()
        .layer_sizes()
        .iter()
        .map(|s| s.to_string())
        .collect();
    writeln!(w, "topology: {}", sizes.join(","))?;
    for weight in genome.weights() {
        writeln!(w, "{weight}")?;
    }
    Ok(())
}

/// Reads a genome written by [`write_genome`], decoding it under `topology`.
/// The header sizes must match `topology` exactly; activations are not part
/// of the format and come from the caller.
pub fn read_genome<R: BufRead>(mut r: R, topology: Arc<Topology>) -> Result<Genome, NeuroError> {
    let mut header = String::new();
    if r.read_line(&mut header)? == 0 {
        return Err(NeuroError::MalformedGenome("empty file".into()));
    }
    let found = header
        .trim_end()
        .strip_prefix("topology: ")
        .ok_or_else(|| NeuroError::MalformedGenome("missing topology header".into()))?
        .to_string();
    let expected: Vec<String> = topology.layer_sizes().iter().map(|s| s.to_string()).collect();
    let expected = expected.join(",");
    if found != expected {
        return Err(NeuroError::TopologyHeaderMismatch { expected, found });
    }

    let mut weights = Vec::with_capacity(topology.total_weights());
    for line in r.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let value: f64 = trimmed
            .parse()
            .map_err(|_| NeuroError::MalformedGenome(format!("bad weight line {trimmed:?}")))?;
        weights.push(value);
    }
    Genome::new(topology, weights)
}
