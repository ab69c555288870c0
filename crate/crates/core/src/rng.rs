//! Seed derivation for reproducible random substreams.
//!
//! All randomness in a run flows from one 64-bit master seed. Independent
//! substreams (per replication, per evaluation slot, per breeding step) are
//! derived with a stable mixing function, so evaluations can execute in any
//! order — or in parallel — and still reproduce bit-identical results.
//!
//! The derivation is a fold of the SplitMix64 finalizer over the tag
//! sequence: `h_0 = master`, `h_{k+1} = mix(h_k + GOLDEN + tag_k)`. It is
//! fixed; changing it changes every artifact byte.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Substream domain: initial population weights, tagged by slot.
pub const DOMAIN_INIT: u64 = 0x01;
/// Substream domain: fitness evaluation, tagged by (generation, slot).
pub const DOMAIN_EVAL: u64 = 0x02;
/// Substream domain: breeding (crossover coins and mutations), tagged by generation.
pub const DOMAIN_BREED: u64 = 0x03;
/// Substream domain: per-replication run seed, tagged by replication index.
pub const DOMAIN_REPLICATION: u64 = 0x04;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output finalizer.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from `master` and an ordered tag sequence.
pub fn derive_seed(master: u64, tags: &[u64]) -> u64 {
    let mut h = master;
    for &t in tags {
        h = mix(h.wrapping_add(GOLDEN).wrapping_add(t));
    }
    h
}

/// A reproducible generator seeded from a derived seed.
///
/// ChaCha8 is portable: the same seed yields the same stream on every
/// platform and in every build of this crate.
pub fn substream(master: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, tags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn derivation_is_frozen() {
        // Pinned values: any change to the mixing function shows up here
        // before it silently breaks artifact reproducibility.
        assert_eq!(derive_seed(0, &[]), 0);
        assert_eq!(derive_seed(0, &[DOMAIN_EVAL, 0, 0]), 0x1956_ecd1_a275_ec95);
        assert_eq!(derive_seed(42, &[DOMAIN_REPLICATION, 3]), 0x66e5_ed37_3d90_b9ba);
    }

    #[test]
    fn tag_order_matters() {
        assert_ne!(derive_seed(7, &[1, 2]), derive_seed(7, &[2, 1]));
    }

    #[test]
    fn substreams_are_reproducible_and_distinct() {
        let mut a = substream(9, &[DOMAIN_EVAL, 5, 1]);
        let mut b = substream(9, &[DOMAIN_EVAL, 5, 1]);
        for _ in 0..32 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = substream(9, &[DOMAIN_EVAL, 5, 2]);
        assert_ne!(a.next_u64(), c.next_u64());
    }
}
