//! Seeded, position-addressable random streams.
//!
//! Record `i` of a stream is always the same two 64-bit words for a given
//! seed, however the record range is partitioned across workers. Backed by
//! the ChaCha8 keystream, which is seekable by word position.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// 32-bit keystream words consumed per record.
const WORDS_PER_RECORD: u128 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterRng {
    seed: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        CounterRng { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Records `start..start + count`.
    pub fn records(&self, start: u64, count: u64) -> impl Iterator<Item = [u64; 2]> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_word_pos(u128::from(start) * WORDS_PER_RECORD);
        (0..count).map(move |_| [rng.next_u64(), rng.next_u64()])
    }

    pub fn record(&self, index: u64) -> [u64; 2] {
        self.records(index, 1).next().expect("one record")
    }
}

/// Uniform in `[0, 1)` from the top 53 bits.
#[inline]
pub fn unit_f64(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
