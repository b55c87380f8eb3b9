//! Random diameter-2 graphs, reproducible from a seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Diameter, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("no diameter-2 graph on {0} vertices")]
    TooFewVertices(usize),
}

const START_P: f64 = 0.5;
const MAX_P: f64 = 0.9;
/// Rejections at one density before it is raised.
const PATIENCE: u32 = 32;

/// Samples `G(n, p)` until the result has diameter exactly 2.
///
/// Small or sparse samples are often disconnected or have diameter 3, so `p`
/// is raised a little after every [`PATIENCE`] rejections, up to [`MAX_P`].
/// The same `(n, seed)` always yields the same graph.
pub fn random_diameter_two(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = START_P;
    let mut rejected = 0;
    loop {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &pairs).expect("pairs are in range");
        if g.diameter() == Diameter::Finite(2) {
            return Ok(g);
        }
        rejected += 1;
        if rejected % PATIENCE == 0 {
            p = (p + 0.05).min(MAX_P);
        }
    }
}
