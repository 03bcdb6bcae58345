//! Deterministic random sources for the randomized range finder and the
//! benchmark generators.
//!
//! Everything is seeded from a `(master, stream)` pair so that independent
//! attempts and trials draw from disjoint, reproducible streams. The
//! generator is SplitMix64: a 64-bit counter with an output mixing
//! function, which makes seeding by arbitrary stream indices safe.

use num_traits::Float;

use crate::Complex64;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 counter generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream `stream` of master seed `master`; streams are decorrelated by
    /// running the stream index through the output mix before xoring.
    pub fn from_stream(master: u64, stream: u64) -> Self {
        let mut s = SplitMix64::new(stream.wrapping_mul(GOLDEN_GAMMA) ^ 0x5851_f42d_4c95_7f2d);
        let h = s.next_u64();
        SplitMix64::new(master ^ h)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in the open interval (0, 1).
    pub fn next_unit(&mut self) -> f64 {
        loop {
            let u = (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0);
            if u > 0.0 {
                return u;
            }
        }
    }

    /// Standard real Gaussian via Box-Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        let u1 = self.next_unit();
        let u2 = self.next_unit();
        (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
    }

    /// Standard complex Gaussian: independent N(0,1) real and imaginary parts.
    pub fn next_gaussian_c64(&mut self) -> Complex64 {
        let re = self.next_gaussian();
        let im = self.next_gaussian();
        Complex64::new(re, im)
    }

    pub fn next_range(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}
