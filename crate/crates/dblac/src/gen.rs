//! Seeded Erdős–Rényi G(n, p) generation.
//!
//! The generator algorithm is pinned so output is stable across platforms
//! and releases: a SplitMix64 stream seeded directly with the given 64-bit
//! seed, one draw per unordered vertex pair {u, v} with u < v, pairs
//! enumerated in lexicographic order. A pair becomes an edge when the
//! draw, mapped to [0, 1) via the top 53 bits, is strictly below p.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("edge probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),
}

/// SplitMix64 (Steele, Lea & Flood 2014). Output sequence is fixed for a
/// given seed; do not change the constants.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::ProbabilityOutOfRange(p));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("generated endpoints are in range"))
}
