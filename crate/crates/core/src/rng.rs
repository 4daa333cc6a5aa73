//! Random streams and the unbiased bounded draw used by the generator.
//!
//! A single graph is driven by `ChaCha8Rng::seed_from_u64(seed)`. Independent
//! trials of an experiment use [`trial_seed`], which mixes the experiment seed
//! with the trial index through SplitMix64:
//!
//! ```text
//! trial_seed(seed, i) = splitmix64(seed XOR splitmix64(i))
//! ```

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type ProcessRng = ChaCha8Rng;

pub fn process_rng(seed: u64) -> ProcessRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 output function (Steele, Lea & Flood).
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(seed ^ splitmix64(trial))
}

/// Exactly uniform draw from `0..bound`.
///
/// Lemire's multiply-shift with rejection: a 64x64->128 bit product maps the
/// raw word onto the range, and the low half is rejected when it falls in the
/// `2^64 mod bound` short zone, so every outcome has the same number of
/// preimages.
///
/// # Panics
///
/// If `bound == 0`.
#[inline]
pub fn uniform_index<R: RngCore + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0, "uniform_index: empty range");
    let mut m = u128::from(rng.next_u64()) * u128::from(bound);
    let mut low = m as u64;
    if low < bound {
        let threshold = bound.wrapping_neg() % bound;
        while low < threshold {
            m = u128::from(rng.next_u64()) * u128::from(bound);
            low = m as u64;
        }
    }
    (m >> 64) as u64
}
