//! SplitMix64 pseudo-random stream.
//!
//! All seeded randomness in this crate (random tournaments, test matrix
//! generation) draws from this generator so that results are bit-exact
//! across platforms and releases. The sequence is fixed forever:
//!
//! ```text
//! state := state + 0x9E3779B97F4A7C15                 (wrapping)
//! z := state
//! z := (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9         (wrapping)
//! z := (z XOR (z >> 27)) * 0x94D049BB133111EB         (wrapping)
//! output := z XOR (z >> 31)
//! ```

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Top bit of the next output word.
    pub fn next_bool(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [-1, 1).
    pub fn next_signed_unit(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }

    /// Uniform in 0..bound (bound > 0) by rejection-free modulo; bias is
    /// negligible for the small bounds used here and keeps the stream simple.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
