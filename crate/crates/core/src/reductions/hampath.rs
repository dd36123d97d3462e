use crate::error::Result;
use crate::model::{Measure, ProblemInstance, StaticGraph, TemporalGraph};

/// Two-snapshot vertex symmetric difference instance that is YES exactly when
/// `h` has a Hamiltonian path. Vertices of `h` keep their ids; `s = n` and
/// `t = n + 1`. Snapshot 1 is the spine `s, 0, 1, ..., n-1, t`; snapshot 2 is
/// `h` with `s` and `t` joined to every vertex. The budgets are `k = n + 2`
/// and `ell = 0`. For the empty graph both snapshots are the single edge `st`.
pub fn gen_from_hampath(h: &StaticGraph) -> Result<ProblemInstance> {
    let n = h.n();
    let (s, t) = (n, n + 1);
    let (first, second) = if n == 0 {
        (vec![(s, t)], vec![(s, t)])
    } else {
        let mut spine = vec![(s, 0), (n - 1, t)];
        spine.extend((1..n).map(|i| (i - 1, i)));
        let mut full: Vec<(usize, usize)> = h.edges().iter().map(|e| (e.u.index(), e.v.index())).collect();
        for v in 0..n {
            full.push((v, s));
            full.push((v, t));
        }
        (spine, full)
    };
    let graph = TemporalGraph::new(n + 2, vec![first, second])?;
    ProblemInstance::new(graph, s, t, n + 2, 0, Measure::Vdv)
}

/// Exhaustive Hamiltonian path test by dynamic programming over vertex
/// subsets; intended for small graphs.
pub fn has_hamiltonian_path(h: &StaticGraph) -> bool {
    let n = h.n();
    if n == 0 {
        return true;
    }
    assert!(n <= 20, "brute force limited to 20 vertices");
    let adj = h.adjacency();
    let mut nbr = vec![0u32; n];
    for v in 0..n {
        for w in adj.neighbors(v.into()) {
            nbr[v] |= 1 << w.index();
        }
    }
    // ends[mask] = set of vertices at which a path covering `mask` can end
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in 0..n {
            if e >> v & 1 == 1 {
                let mut next = nbr[v] & !(mask as u32);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    ends[(1 << n) - 1] != 0
}
