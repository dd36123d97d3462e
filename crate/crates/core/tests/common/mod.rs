#![allow(dead_code)]

use mstp::{Measure, ProblemInstance, TemporalGraph};
use proptest::prelude::*;

pub fn measure() -> impl Strategy<Value = Measure> {
    prop::sample::select(Measure::ALL.to_vec())
}

/// Random temporal graph on `n` vertices with `tau` snapshots, each pair
/// present independently.
pub fn temporal(n: std::ops::RangeInclusive<usize>, tau: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = TemporalGraph> {
    (n, tau).prop_flat_map(|(n, tau)| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(prop::collection::vec(any::<bool>(), pairs), tau).prop_map(move |snaps| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let snaps = snaps
                .into_iter()
                .map(|mask| all.iter().zip(mask).filter(|(_, m)| *m).map(|(&e, _)| e).collect())
                .collect();
            TemporalGraph::new(n, snaps).unwrap()
        })
    })
}

/// Instance with `s = 0` and `t = n - 1`.
pub fn instance(
    n: std::ops::RangeInclusive<usize>,
    tau: std::ops::RangeInclusive<usize>,
    k: std::ops::RangeInclusive<usize>,
    ell: std::ops::RangeInclusive<usize>,
    measure: impl Strategy<Value = Measure>,
) -> impl Strategy<Value = ProblemInstance> {
    (temporal(n, tau), k, ell, measure).prop_map(|(g, k, ell, m)| {
        let t = g.n() - 1;
        ProblemInstance::new(g, 0, t, k, ell, m).unwrap()
    })
}
