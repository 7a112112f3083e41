use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::numeric::ExactRational;

/// Seeded `G(N, p)`.
///
/// The generator is ChaCha8 seeded with `seed` via `seed_from_u64`. Pairs are
/// visited as `(i, j)` with `i < j` in lexicographic order; for each pair one
/// integer is drawn uniformly from `0..den` and the edge is present iff it is
/// below `num`, where `num/den` is `p` in lowest terms. The mapping from
/// `(N, p, seed)` to graph is therefore exact and stable.
pub fn random_graph(n: usize, p: &ExactRational, seed: u64) -> Result<Graph> {
    let p = p.reduced();
    let bad = || Error::InvalidProbability(p.to_string());
    if p > ExactRational::one() {
        return Err(bad());
    }
    let num = p.numer().to_u64().ok_or_else(bad)?;
    let den = p.denom().to_u64().ok_or_else(bad)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..den) < num {
                g.add_edge_unchecked(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, d: u64) -> ExactRational {
        ExactRational::ratio(n, d).unwrap()
    }

    #[test]
    fn extremes_and_determinism() {
        for seed in [0, 1, 99] {
            assert_eq!(random_graph(5, &p(0, 1), seed).unwrap(), Graph::empty(5));
            assert_eq!(random_graph(4, &p(1, 1), seed).unwrap(), Graph::complete(4));
            assert_eq!(random_graph(4, &p(3, 3), seed).unwrap(), Graph::complete(4));
        }
        let a = random_graph(8, &p(1, 2), 7).unwrap();
        let b = random_graph(8, &p(1, 2), 7).unwrap();
        assert_eq!(a, b);
        let c = random_graph(8, &p(1, 2), 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rejects_probabilities_above_one() {
        assert!(matches!(
            random_graph(3, &p(3, 2), 0),
            Err(Error::InvalidProbability(_))
        ));
    }

    #[test]
    fn density_is_roughly_right() {
        let g = random_graph(60, &p(1, 4), 3).unwrap();
        let frac = g.edge_count() as f64 / (60.0 * 59.0 / 2.0);
        assert!((frac - 0.25).abs() < 0.05, "{frac}");
    }
}
