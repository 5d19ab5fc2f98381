//! Deterministic pseudo-random infrastructure.
//!
//! Every story gets its own generator, seeded by [`mix_seed`] from the
//! master seed and the story index. The stream itself is xoshiro256++
//! (Blackman & Vigna), hand-rolled so that output is bit-identical across
//! platforms and dependency upgrades.

/// Golden-ratio increment used by the splitmix64 sequence.
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer (Steele, Lea & Flood): three xor-shift/multiply
/// avalanche rounds. Bijective on u64.
#[inline]
fn splitmix64_mix(z: u64) -> u64 {
    let z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent per-story seed from the master seed.
///
/// This is the (index+1)-th output of a splitmix64 sequence started at
/// `master_seed`: the state is advanced by `(index+1) * GOLDEN_GAMMA` and
/// passed through the finalizer. Deterministic, and distinct indices give
/// unrelated outputs.
#[inline]
pub fn mix_seed(master_seed: u64, story_index: u64) -> u64 {
    let state = master_seed.wrapping_add(story_index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    splitmix64_mix(state)
}

/// xoshiro256++ generator.
///
/// Reference implementation by David Blackman and Sebastiano Vigna
/// (<https://prng.di.unimi.it/>), public domain. 256-bit state, period
/// 2^256 - 1.
#[derive(Debug, Clone)]
pub struct Xoshiro256pp {
    s: [u64; 4],
}

impl Xoshiro256pp {
    /// Seeds the state with four consecutive splitmix64 outputs, as the
    /// xoshiro authors recommend.
    pub fn from_seed(seed: u64) -> Self {
        let mut state = seed;
        let mut s = [0u64; 4];
        for slot in &mut s {
            state = state.wrapping_add(GOLDEN_GAMMA);
            *slot = splitmix64_mix(state);
        }
        if s == [0, 0, 0, 0] {
            // all-zero is the one invalid xoshiro state
            s[0] = GOLDEN_GAMMA;
        }
        Self { s }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[0]
            .wrapping_add(s[3])
            .rotate_left(23)
            .wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform draw on the open interval (0, 1): the top 53 bits are
    /// centered on the grid `(k + 0.5) * 2^-53`, so 0.0 and 1.0 never occur
    /// and logs/quantiles of the draw are always finite.
    #[inline]
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mix_seed_is_deterministic() {
        assert_eq!(mix_seed(12345, 42), mix_seed(12345, 42));
    }

    #[test]
    fn mix_seed_golden_values() {
        // Frozen outputs of the documented mixer; recomputing them from the
        // splitmix64 definition must reproduce these exactly.
        assert_eq!(mix_seed(0, 0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(mix_seed(0, 1), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(mix_seed(1, 0), 0x910A_2DEC_8902_5CC1);
        assert_eq!(mix_seed(0xDEAD_BEEF, 7), 0x435E_4EE1_1CF2_8755);
    }

    #[test]
    fn mix_seed_separates_streams() {
        assert_ne!(mix_seed(7, 0), mix_seed(7, 1));
        assert_ne!(mix_seed(7, 0), mix_seed(8, 0));
    }

    #[test]
    fn open01_stays_strictly_inside_unit_interval() {
        let mut rng = Xoshiro256pp::from_seed(99);
        for _ in 0..100_000 {
            let u = rng.next_open01();
            assert!(u > 0.0 && u < 1.0);
        }
    }

    #[test]
    fn open01_mean_is_near_half() {
        let mut rng = Xoshiro256pp::from_seed(3);
        let n = 200_000;
        let mean: f64 = (0..n).map(|_| rng.next_open01()).sum::<f64>() / n as f64;
        assert!((mean - 0.5).abs() < 0.002, "mean {mean}");
    }

    #[test]
    fn streams_from_different_seeds_differ() {
        let mut a = Xoshiro256pp::from_seed(1);
        let mut b = Xoshiro256pp::from_seed(2);
        let same = (0..16).filter(|_| a.next_u64() == b.next_u64()).count();
        assert_eq!(same, 0);
    }
}
