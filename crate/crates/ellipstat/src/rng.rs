//! Deterministic stream derivation for parallel Monte Carlo.
//!
//! Every worker gets its own ChaCha stream keyed on (master seed, index), so
//! results are bit-identical regardless of how work is scheduled. ChaCha
//! supports 2^64 independent streams per seed; we additionally mix the
//! per-sample index into the seed with SplitMix64 so that nested derivations
//! (sample -> row) stay decoupled.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 mix of a master seed and an index into a derived 64-bit seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// RNG for stream `stream` of the generator seeded by `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
