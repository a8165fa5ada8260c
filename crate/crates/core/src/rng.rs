//! Seeded, splittable 64-bit generator.
//!
//! Every randomized routine takes a [`SplitMix64`] so that runs can be
//! replayed from a single recorded seed. Child streams are derived by name
//! with [`SplitMix64::split`], which keeps independent consumers from
//! perturbing each other when one of them changes how many draws it makes.

use rand_core::{impls, RngCore};

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Derive an independent stream keyed by `label`. Does not advance `self`.
    pub fn split(&self, label: &str) -> SplitMix64 {
        // FNV-1a over the label, then folded into the parent state.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        SplitMix64::new(mix(self.state ^ mix(h)))
    }

    /// Derive the `index`-th child stream. Does not advance `self`.
    pub fn split_index(&self, index: u64) -> SplitMix64 {
        SplitMix64::new(mix(self.state ^ mix(index.wrapping_add(GOLDEN_GAMMA))))
    }
}

impl RngCore for SplitMix64 {
    fn next_u32(&mut self) -> u32 {
        (self.next() >> 32) as u32
    }

    fn next_u64(&mut self) -> u64 {
        self.next()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        impls::fill_bytes_via_next(self, dest)
    }
}
