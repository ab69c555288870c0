use super::NeuroError;

/// Activation for hidden layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    Sigmoid,
    Tanh,
    Relu,
}

impl Activation {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Activation::Sigmoid => 1.0 / (1.0 + (-x).exp()),
            Activation::Tanh => x.tanh(),
            Activation::Relu => x.max(0.0),
        }
    }
}

/// Activation for the output layer. Softmax acts on the whole vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputActivation {
    Sigmoid,
    Softmax,
    Identity,
}

/// Architecture of a fully-connected feedforward net: layer sizes plus
/// activations. Immutable after construction.
///
/// The flat genome layout is canonical: layers in order, and within a layer
/// one group per destination neuron — its incoming weights in source order,
/// then its bias. Layer `l` with `fan_in` inputs and `fan_out` outputs thus
/// occupies `(fan_in + 1) * fan_out` consecutive slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    input_size: usize,
    hidden_sizes: Vec<usize>,
    output_size: usize,
    hidden_activation: Activation,
    output_activation: OutputActivation,
}

impl Topology {
    pub fn new(
        input_size: usize,
        hidden_sizes: Vec<usize>,
        output_size: usize,
        hidden_activation: Activation,
        output_activation: OutputActivation,
    ) -> Result<Self, NeuroError> {
        if input_size == 0 || output_size == 0 || hidden_sizes.iter().any(|&h| h == 0) {
            return Err(NeuroError::InvalidTopology(
                "all layer sizes must be at least 1".into(),
            ));
        }
        Ok(Self {
            input_size,
            hidden_sizes,
            output_size,
            hidden_activation,
            output_activation,
        })
    }

    pub fn input_size(&self) -> usize {
        self.input_size
    }

    pub fn hidden_sizes(&self) -> &[usize] {
        &self.hidden_sizes
    }

    pub fn output_size(&self) -> usize {
        self.output_size
    }

    pub fn hidden_activation(&self) -> Activation {
        self.hidden_activation
    }

    pub fn output_activation(&self) -> OutputActivation {
        self.output_activation
    }

    /// `(fan_in, fan_out)` of each weight layer, input to output.
    pub fn layer_dims(&self) -> Vec<(usize, usize)> {
        let sizes = self.layer_sizes();
        sizes.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// All layer widths, input through output.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::with_capacity(self.hidden_sizes.len() + 2);
        sizes.push(self.input_size);
        sizes.extend_from_slice(&self.hidden_sizes);
        sizes.push(self.output_size);
        sizes
    }

    /// Flat slot count of each layer block: `(fan_in + 1) * fan_out`.
    pub fn layer_block_sizes(&self) -> Vec<usize> {
        self.layer_dims()
            .into_iter()
            .map(|(fan_in, fan_out)| (fan_in + 1) * fan_out)
            .collect()
    }

    /// Total genome length: sum of `(fan_in + 1) * fan_out` over layers.
    /// The `+1` is the per-neuron bias, which evolves like any weight.
    pub fn total_weights(&self) -> usize {
        self.layer_block_sizes().iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topo(input: usize, hidden: Vec<usize>, output: usize) -> Topology {
        Topology::new(
            input,
            hidden,
            output,
            Activation::Sigmoid,
            OutputActivation::Sigmoid,
        )
        .unwrap()
    }

    #[test]
    fn total_weights_matches_formula() {
        // (3+1)*7 + (7+1)*1
        assert_eq!(topo(3, vec![7], 1).total_weights(), 36);
        // (10+1)*10 + (10+1)*3
        assert_eq!(topo(10, vec![10], 3).total_weights(), 143);
        assert_eq!(topo(1, vec![1], 1).total_weights(), 4);
        // no hidden layer: direct input -> output
        assert_eq!(topo(10, vec![], 3).total_weights(), 33);
    }

    #[test]
    fn zero_sizes_rejected() {
        assert!(Topology::new(0, vec![5], 1, Activation::Sigmoid, OutputActivation::Sigmoid).is_err());
        assert!(Topology::new(3, vec![0], 1, Activation::Sigmoid, OutputActivation::Sigmoid).is_err());
        assert!(Topology::new(3, vec![5], 0, Activation::Sigmoid, OutputActivation::Sigmoid).is_err());
    }

    #[test]
    fn layer_blocks_partition_the_genome() {
        let t = topo(3, vec![7, 2], 1);
        assert_eq!(t.layer_dims(), vec![(3, 7), (7, 2), (2, 1)]);
        assert_eq!(t.layer_block_sizes(), vec![28, 16, 3]);
        assert_eq!(t.total_weights(), 47);
    }
}
