//! Kernelizations: common-neighbor marking around a vertex cover for the
//! intersection measures, and temporal twin shrinking for the symmetric
//! difference measures.

use crate::error::{Error, Result};
use crate::model::{Adjacency, ProblemInstance, TemporalGraph, VertexId};
use crate::repsets::binomial;
use crate::structure::{greedy_vertex_cover, twin_classes, underlying_graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelStats {
    pub original_n: usize,
    pub kernel_n: usize,
    /// Guaranteed upper bound on `kernel_n`, saturating at `u128::MAX`.
    pub bound_value: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub instance: ProblemInstance,
    /// Original id of each kernel vertex; increasing.
    pub vertex_map: Vec<VertexId>,
    pub stats: KernelStats,
}

fn restrict(inst: &ProblemInstance, keep: &[VertexId]) -> (ProblemInstance, Vec<VertexId>) {
    let (graph, map) = inst.graph.induced(keep);
    let pos = |v: VertexId| VertexId::new(keep.binary_search(&v).expect("terminal kept"));
    let instance = ProblemInstance {
        graph,
        s: pos(inst.s),
        t: pos(inst.t),
        ..inst.clone()
    };
    (instance, map)
}

/// Keeps `s`, `t`, a greedy vertex cover `C` of the underlying graph and,
/// for every pair of cover vertices and every snapshot, up to `3k - 3` of their
/// common neighbors outside `C` (smallest ids first). The result has at most
/// `tau * (|C| + 2 + C(|C|, 2) * (3k - 3))` vertices.
pub fn kernelize_dissimilarity(inst: &ProblemInstance) -> Result<KernelResult> {
    if !inst.measure.is_dissimilarity() {
        return Err(Error::WrongMeasure {
            expected: "dissimilarity",
            got: inst.measure,
        });
    }
    let n = inst.n();
    let cover = greedy_vertex_cover(&underlying_graph(&inst.graph));
    let mut keep = vec![false; n];
    for &v in &cover {
        keep[v.index()] = true;
    }
    let in_cover = keep.clone();
    keep[inst.s.index()] = true;
    keep[inst.t.index()] = true;
    let quota = (3 * inst.k).saturating_sub(3);
    for i in 0..inst.tau() {
        let adj = inst.graph.adjacency(i);
        for (a, &v) in cover.iter().enumerate() {
            for &w in &cover[a + 1..] {
                let (nv, nw) = (adj.neighbors(v), adj.neighbors(w));
                let common = nv
                    .iter()
                    .filter(|x| !in_cover[x.index()] && nw.binary_search(x).is_ok())
                    .take(quota);
                for x in common {
                    keep[x.index()] = true;
                }
            }
        }
    }
    let kept: Vec<VertexId> = (0..n).filter(|&v| keep[v]).map(VertexId::new).collect();
    let (instance, vertex_map) = restrict(inst, &kept);
    let c = cover.len() as u128;
    let bound_value = (inst.tau() as u128).saturating_mul(
        (c + 2).saturating_add(binomial(cover.len(), 2).saturating_mul(quota as u128)),
    );
    let stats = KernelStats {
        original_n: n,
        kernel_n: instance.n(),
        bound_value,
    };
    debug_assert!(stats.kernel_n as u128 <= stats.bound_value);
    Ok(KernelResult {
        instance,
        vertex_map,
        stats,
    })
}

fn require_similarity(inst: &ProblemInstance) -> Result<()> {
    if inst.measure.is_similarity() {
        Ok(())
    } else {
        Err(Error::WrongMeasure {
            expected: "similarity",
            got: inst.measure,
        })
    }
}

/// Applies the twin rule until no class qualifies: a class `S` of temporal
/// twins among the `eligible` vertices with `|S \ {s, t}|` at least the largest
/// per-snapshot neighborhood of `S` loses its largest non-terminal vertex.
/// Returns the surviving vertices in increasing order.
fn shrink(inst: &ProblemInstance, eligible: &[bool]) -> Vec<VertexId> {
    let g = &inst.graph;
    let n = g.n();
    let mut alive = vec![true; n];
    let terminal = |v: VertexId| v == inst.s || v == inst.t;
    loop {
        let adjs: Vec<Adjacency> = (0..g.tau()).map(|i| alive_adjacency(g, i, &alive)).collect();
        let pool: Vec<VertexId> = (0..n)
            .filter(|&v| alive[v] && eligible[v])
            .map(VertexId::new)
            .collect();
        let victim = twin_classes(&adjs, &pool).into_iter().find_map(|class| {
            let removable: Vec<VertexId> = class.iter().copied().filter(|&v| !terminal(v)).collect();
            // twins share their neighborhood, so N_i(S) is the neighborhood of any member
            let nbhd = adjs.iter().map(|a| a.degree(class[0])).max().unwrap_or(0);
            (!removable.is_empty() && removable.len() >= nbhd).then(|| *removable.last().unwrap())
        });
        match victim {
            Some(v) => alive[v.index()] = false,
            None => break,
        }
    }
    (0..n).filter(|&v| alive[v]).map(VertexId::new).collect()
}

fn alive_adjacency(g: &TemporalGraph, i: usize, alive: &[bool]) -> Adjacency {
    let edges: Vec<_> = g
        .snapshot(i)
        .iter()
        .copied()
        .filter(|e| alive[e.u.index()] && alive[e.v.index()])
        .collect();
    Adjacency::from_edges(g.n(), &edges)
}

/// Exhaustive temporal twin reduction over all vertices. Vertices are
/// renumbered in increasing order.
pub fn shrink_temporal_twins(inst: &ProblemInstance) -> Result<ProblemInstance> {
    require_similarity(inst)?;
    let kept = shrink(inst, &vec![true; inst.n()]);
    Ok(restrict(inst, &kept).0)
}

/// Computes a greedy vertex cover `X` of the underlying graph and applies the
/// temporal twin reduction to the independent set outside `X`. The result
/// has at most `|X| + 2^(|X| tau) (|X| + 1)` vertices, and never fewer than
/// the two terminals.
pub fn kernelize_similarity(inst: &ProblemInstance) -> Result<KernelResult> {
    require_similarity(inst)?;
    let n = inst.n();
    let cover = greedy_vertex_cover(&underlying_graph(&inst.graph));
    let mut outside = vec![true; n];
    for v in &cover {
        outside[v.index()] = false;
    }
    let kept = shrink(inst, &outside);
    let (instance, vertex_map) = restrict(inst, &kept);

    let x = cover.len();
    let exponent = x.saturating_mul(inst.tau());
    if exponent <= 24 {
        let adjs: Vec<Adjacency> = (0..instance.tau()).map(|i| instance.graph.adjacency(i)).collect();
        let rest: Vec<VertexId> = (0..instance.n())
            .map(VertexId::new)
            .filter(|v| outside[vertex_map[v.index()].index()])
            .collect();
        assert!(twin_classes(&adjs, &rest).len() <= 1 << exponent);
    }
    let classes = if exponent >= 128 {
        u128::MAX
    } else {
        1u128 << exponent
    };
    // an empty cover leaves only the terminals
    let bound_value = (x as u128)
        .saturating_add(classes.saturating_mul(x as u128 + 1))
        .max(2);
    let stats = KernelStats {
        original_n: n,
        kernel_n: instance.n(),
        bound_value,
    };
    debug_assert!(stats.kernel_n as u128 <= stats.bound_value);
    Ok(KernelResult {
        instance,
        vertex_map,
        stats,
    })
}
