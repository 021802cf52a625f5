use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::ModelParams;

use super::table::channel_tables;

/// Samples drawn from one ChaCha stream.
pub const SAMPLE_BLOCK: u64 = 4096;

/// Seeded Monte Carlo sampler of channel-product magnitudes.
///
/// Sample `i` comes from stream `i / SAMPLE_BLOCK` of a ChaCha8 generator
/// keyed by the seed, so any split of the index range into blocks, in any
/// order or in parallel, reproduces the same sequence.
#[derive(Debug, Clone)]
pub struct SpectrumSampler {
    magnitudes: Vec<[f64; 3]>,
    seed: u64,
}

impl SpectrumSampler {
    pub fn new(params: &ModelParams, seed: u64) -> Self {
        let magnitudes = channel_tables(params).into_iter().map(|t| t.magnitudes).collect();
        Self { magnitudes, seed }
    }

    fn block_rng(&self, block: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(block);
        rng
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        self.magnitudes.iter().map(|m| m[rng.random_range(0..3usize)]).product()
    }

    /// The first `len` samples of `block`.
    pub fn block(&self, block: u64, len: usize) -> Vec<f64> {
        let mut rng = self.block_rng(block);
        (0..len).map(|_| self.draw(&mut rng)).collect()
    }

    /// Endless stream of samples in index order.
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0u64..).flat_map(move |b| {
            let mut rng = self.block_rng(b);
            (0..SAMPLE_BLOCK).map(move |_| self.draw(&mut rng))
        })
    }

    /// Samples `0..n`, blocks generated in parallel.
    pub fn collect(&self, n: u64) -> Vec<f64> {
        let blocks = n.div_ceil(SAMPLE_BLOCK);
        let chunks: Vec<Vec<f64>> = (0..blocks)
            .into_par_iter()
            .map(|b| {
                let len = (n - b * SAMPLE_BLOCK).min(SAMPLE_BLOCK) as usize;
                self.block(b, len)
            })
            .collect();
        chunks.concat()
    }
}

/// `n_samples` i.i.d. products `∏ s_k`, `s_k` uniform over the channel's
/// three nonzero magnitudes.
pub fn sample_spectrum(params: &ModelParams, n_samples: u64, seed: u64) -> Result<Vec<f64>> {
    if n_samples == 0 {
        return Err(Error::InvalidArgument("n_samples must be at least 1".into()));
    }
    Ok(SpectrumSampler::new(params, seed).collect(n_samples))
}
