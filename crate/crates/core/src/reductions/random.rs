use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{Measure, ProblemInstance, TemporalGraph};

/// Uniformly random instance on `n >= 2` vertices with `s = 0`, `t = n - 1`
/// and `edges_per_snapshot` distinct edges in each of `tau` snapshots.
/// Identical arguments give identical instances.
pub fn random_instance(
    n: usize,
    tau: usize,
    edges_per_snapshot: usize,
    k: usize,
    ell: usize,
    measure: Measure,
    seed: u64,
) -> Result<ProblemInstance> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 vertices, got {n}")));
    }
    if tau == 0 {
        return Err(Error::NoSnapshots);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    if edges_per_snapshot > pairs.len() {
        return Err(Error::InvalidInput(format!(
            "{edges_per_snapshot} edges requested but only {} pairs exist",
            pairs.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let snapshots = (0..tau)
        .map(|_| {
            sample(&mut rng, pairs.len(), edges_per_snapshot)
                .into_iter()
                .map(|i| pairs[i])
                .collect()
        })
        .collect();
    let graph = TemporalGraph::new(n, snapshots)?;
    ProblemInstance::new(graph, 0, n - 1, k, ell, measure)
}
