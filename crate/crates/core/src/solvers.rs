//! Exact solvers for all four measures: bounded path enumeration, the
//! layered product-DAG search and a brute-force oracle.

use std::collections::VecDeque;

use crate::distance::PathProfile;
use crate::error::{Error, Result};
use crate::model::{Adjacency, PathSequence, ProblemInstance, StPath, TemporalGraph, VertexId};

/// Default limit on the number of paths listed for a single snapshot.
pub const DEFAULT_CATALOG_CAP: usize = 10_000_000;

/// All s-t paths with at most `k` vertices in snapshot `i` (0-based), ordered
/// by length and then lexicographically.
pub fn enumerate_short_paths(
    g: &TemporalGraph,
    i: usize,
    s: VertexId,
    t: VertexId,
    k: usize,
) -> Result<Vec<StPath>> {
    enumerate_short_paths_capped(g, i, s, t, k, DEFAULT_CATALOG_CAP)
}

/// Like [`enumerate_short_paths`] but fails once more than `cap` paths are found.
pub fn enumerate_short_paths_capped(
    g: &TemporalGraph,
    i: usize,
    s: VertexId,
    t: VertexId,
    k: usize,
    cap: usize,
) -> Result<Vec<StPath>> {
    let adj = g.adjacency(i);
    let mut paths = paths_in(&adj, s, t, k, cap).ok_or(Error::CatalogTooLarge {
        snapshot: i + 1,
        cap,
    })?;
    paths.sort_by(|a, b| {
        a.vertex_count()
            .cmp(&b.vertex_count())
            .then_with(|| a.vertices().cmp(b.vertices()))
    });
    Ok(paths)
}

/// Hop distance to `t` from every vertex, `usize::MAX` if unreachable.
pub(crate) fn hops_to(adj: &Adjacency, t: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[t.index()] = 0;
    let mut queue = VecDeque::from([t]);
    while let Some(v) = queue.pop_front() {
        for &w in adj.neighbors(v) {
            if dist[w.index()] == usize::MAX {
                dist[w.index()] = dist[v.index()] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Depth-first listing of s-t paths on at most `k` vertices; `None` when the
/// count would exceed `cap`.
fn paths_in(adj: &Adjacency, s: VertexId, t: VertexId, k: usize, cap: usize) -> Option<Vec<StPath>> {
    if k < 2 || s == t {
        return Some(Vec::new());
    }
    let dist = hops_to(adj, t);
    if dist[s.index()] == usize::MAX || dist[s.index()] + 1 > k {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; adj.len()];
    let mut stack = vec![s];
    on_path[s.index()] = true;
    // iterative DFS: `cursor[d]` is the next neighbor index to try at depth d
    let mut cursor = vec![0usize];
    while let Some(&v) = stack.last() {
        let d = stack.len() - 1;
        let nbrs = adj.neighbors(v);
        if cursor[d] >= nbrs.len() {
            on_path[v.index()] = false;
            stack.pop();
            cursor.pop();
            continue;
        }
        let w = nbrs[cursor[d]];
        cursor[d] += 1;
        if on_path[w.index()] {
            continue;
        }
        if w == t {
            if out.len() == cap {
                return None;
            }
            let mut p = stack.clone();
            p.push(t);
            out.push(StPath::from_vec_unchecked(p));
            continue;
        }
        // w would be vertex number stack.len() + 1; t still needs dist[w] more
        if dist[w.index()] == usize::MAX || stack.len() + 1 + dist[w.index()] > k {
            continue;
        }
        on_path[w.index()] = true;
        stack.push(w);
        cursor.push(0);
    }
    Some(out)
}

fn catalogs(inst: &ProblemInstance) -> Result<Option<Vec<Vec<StPath>>>> {
    let mut out = Vec::with_capacity(inst.tau());
    for i in 0..inst.tau() {
        let c = enumerate_short_paths(&inst.graph, i, inst.s, inst.t, inst.k)?;
        if c.is_empty() {
            return Ok(None);
        }
        out.push(c);
    }
    Ok(Some(out))
}

/// Decides an instance by searching the layered graph whose layer `i` holds the
/// snapshot-`i` paths, with arcs between consecutive paths within distance
/// `ell`. Returns a witness if one exists.
pub fn solve_xp(inst: &ProblemInstance) -> Result<Option<PathSequence>> {
    let Some(cats) = catalogs(inst)? else {
        return Ok(None);
    };
    Ok(layered_search(inst, &cats))
}

/// Layered reachability over per-snapshot path lists. Arcs are evaluated on
/// demand; each node keeps the smallest-index reachable predecessor.
pub(crate) fn layered_search(inst: &ProblemInstance, layers: &[Vec<StPath>]) -> Option<PathSequence> {
    if layers.is_empty() || layers.iter().any(Vec::is_empty) {
        return None;
    }
    let profiles: Vec<Vec<PathProfile>> = layers
        .iter()
        .map(|l| l.iter().map(PathProfile::new).collect())
        .collect();
    let mut parents: Vec<Vec<usize>> = Vec::with_capacity(layers.len());
    let mut reached: Vec<usize> = (0..layers[0].len()).collect();
    parents.push(vec![usize::MAX; layers[0].len()]);
    for i in 1..layers.len() {
        let mut parent = vec![usize::MAX; layers[i].len()];
        let mut next = Vec::new();
        for (w, pw) in profiles[i].iter().enumerate() {
            if let Some(&v) = reached
                .iter()
                .find(|&&v| profiles[i - 1][v].distance(pw, inst.measure, inst.s, inst.t) <= inst.ell)
            {
                parent[w] = v;
                next.push(w);
            }
        }
        if next.is_empty() {
            return None;
        }
        parents.push(parent);
        reached = next;
    }
    let mut idx = reached[0];
    let mut paths = Vec::with_capacity(layers.len());
    for i in (0..layers.len()).rev() {
        paths.push(layers[i][idx].clone());
        idx = parents[i][idx];
    }
    paths.reverse();
    Some(PathSequence::new(paths))
}

/// Brute-force oracle: lists candidate paths by trying every ordered sequence
/// of interior vertices, then backtracks over all combinations.
pub fn solve_naive(inst: &ProblemInstance) -> Option<PathSequence> {
    let n = inst.n();
    if inst.k < 2 {
        return None;
    }
    let interior: Vec<VertexId> = (0..n)
        .map(VertexId::new)
        .filter(|&v| v != inst.s && v != inst.t)
        .collect();
    let max_inner = (inst.k - 2).min(interior.len());
    let mut layers = Vec::with_capacity(inst.tau());
    for i in 0..inst.tau() {
        let adj = inst.graph.adjacency(i);
        let mut found = Vec::new();
        let mut seq = vec![inst.s];
        let mut used = vec![false; n];
        sequences(&adj, inst.t, &interior, max_inner, &mut seq, &mut used, &mut found);
        if found.is_empty() {
            return None;
        }
        layers.push(found);
    }
    let mut chosen = Vec::with_capacity(layers.len());
    let mut dead: Vec<Vec<bool>> = layers.iter().map(|l| vec![false; l.len()]).collect();
    for first in 0..layers[0].len() {
        chosen.push(first);
        if extend(inst, &layers, &mut chosen, &mut dead) {
            let paths = chosen
                .iter()
                .enumerate()
                .map(|(i, &j)| layers[i][j].clone())
                .collect();
            return Some(PathSequence::new(paths));
        }
        chosen.pop();
    }
    None
}

fn sequences(
    adj: &Adjacency,
    t: VertexId,
    interior: &[VertexId],
    budget: usize,
    seq: &mut Vec<VertexId>,
    used: &mut [bool],
    out: &mut Vec<StPath>,
) {
    let mut candidate = seq.clone();
    candidate.push(t);
    if candidate.windows(2).all(|w| adj.has_edge(w[0], w[1])) {
        out.push(StPath::from_vec_unchecked(candidate));
    }
    if budget == 0 {
        return;
    }
    for &v in interior {
        if !used[v.index()] {
            used[v.index()] = true;
            seq.push(v);
            sequences(adj, t, interior, budget - 1, seq, used, out);
            seq.pop();
            used[v.index()] = false;
        }
    }
}

fn extend(
    inst: &ProblemInstance,
    layers: &[Vec<StPath>],
    chosen: &mut Vec<usize>,
    dead: &mut [Vec<bool>],
) -> bool {
    let i = chosen.len();
    if i == layers.len() {
        return true;
    }
    if dead[i - 1][chosen[i - 1]] {
        return false;
    }
    let prev = PathProfile::new(&layers[i - 1][chosen[i - 1]]);
    for j in 0..layers[i].len() {
        if dead[i][j] {
            continue;
        }
        let d = prev.distance(&PathProfile::new(&layers[i][j]), inst.measure, inst.s, inst.t);
        if d > inst.ell {
            continue;
        }
        chosen.push(j);
        if extend(inst, layers, chosen, dead) {
            return true;
        }
        chosen.pop();
    }
    // no completion exists from this path, whatever came before it
    dead[i - 1][chosen[i - 1]] = true;
    false
}
