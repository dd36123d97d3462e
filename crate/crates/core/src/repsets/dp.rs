use super::matroid::{vandermonde_matroid, UniformMatroidRep};
use super::representative::{representative_indices, Bits, WitnessedSet};
use crate::error::Result;
use crate::model::{Edge, StPath, StaticGraph, TemporalGraph, VertexId};
use crate::solvers::hops_to;

/// A graph extended by dummy vertices that let every short s-t path be
/// stretched to exactly `k` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedGraph {
    pub graph: StaticGraph,
    /// Dummy ids, `n..n + k` in chain order.
    pub dummies: Vec<VertexId>,
}

impl PaddedGraph {
    pub fn is_dummy(&self, v: VertexId) -> bool {
        self.dummies.first().is_some_and(|d| v >= *d)
    }

    /// Cuts a padded s-t path at its first dummy and closes it with `t`.
    pub fn strip(&self, path: &StPath, t: VertexId) -> StPath {
        let vs = path.vertices();
        match vs.iter().position(|&v| self.is_dummy(v)) {
            None => path.clone(),
            Some(cut) => {
                let mut out = vs[..cut].to_vec();
                out.push(t);
                StPath::from_vec_unchecked(out)
            }
        }
    }
}

/// Adds `k` dummies `d_1..d_k` joined in a chain, each adjacent to `t` and to
/// every neighbor of `t`.
pub fn pad_with_dummies(g: &StaticGraph, t: VertexId, k: usize) -> PaddedGraph {
    let n = g.n();
    let dummies: Vec<VertexId> = (n..n + k).map(VertexId::new).collect();
    let t_nbrs: Vec<VertexId> = g
        .edges()
        .iter()
        .filter(|e| e.contains(t))
        .map(|e| if e.u == t { e.v } else { e.u })
        .collect();
    let mut edges = g.edges().to_vec();
    for (j, &d) in dummies.iter().enumerate() {
        edges.push(Edge::new(d, t));
        for &u in &t_nbrs {
            edges.push(Edge::new(u, d));
        }
        if j + 1 < k {
            edges.push(Edge::new(d, dummies[j + 1]));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    PaddedGraph {
        graph: StaticGraph::from_canonical(n + k, edges),
        dummies,
    }
}

#[derive(Debug, Clone)]
struct Node {
    bits: Bits,
    /// Predecessor vertex and its position one level down.
    parent: (u32, u32),
}

/// Representative families of s-v path vertex sets, indexed by vertex count.
#[derive(Debug, Clone)]
pub struct RepTable {
    k: usize,
    levels: Vec<Vec<Vec<Node>>>,
}

impl RepTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Stored sets for s-v paths on exactly `i` vertices, `1 <= i <= k`.
    pub fn get(&self, i: usize, v: VertexId) -> Vec<WitnessedSet> {
        (0..self.levels[i - 1][v.index()].len())
            .map(|j| WitnessedSet::from_path(self.witness(i, v, j)))
            .collect()
    }

    fn witness(&self, i: usize, v: VertexId, j: usize) -> StPath {
        let mut walk = Vec::with_capacity(i);
        let (mut v, mut j) = (v, j);
        for level in (0..i).rev() {
            walk.push(v);
            let (w, jw) = self.levels[level][v.index()][j].parent;
            (v, j) = (VertexId(w), jw as usize);
        }
        walk.reverse();
        StPath::from_vec_unchecked(walk)
    }
}

/// Dynamic program over path vertex counts: level `i` at `v` holds a
/// `(q + k - i)`-representative of the vertex sets of s-v paths on exactly `i`
/// vertices, each with a witness path.
pub fn rep_dp(g: &StaticGraph, s: VertexId, k: usize, q: usize) -> Result<RepTable> {
    rep_dp_towards(g, s, None, k, q)
}

/// With a `target`, states that cannot reach it within the remaining budget
/// are left empty; the families at the target are unchanged.
fn rep_dp_towards(
    g: &StaticGraph,
    s: VertexId,
    target: Option<VertexId>,
    k: usize,
    q: usize,
) -> Result<RepTable> {
    let n = g.n();
    let mut levels: Vec<Vec<Vec<Node>>> = Vec::with_capacity(k);
    if k == 0 {
        return Ok(RepTable { k, levels });
    }
    let matroid: UniformMatroidRep = vandermonde_matroid(n.max(q + k), q + k)?;
    let adj = g.adjacency();
    let hops = target.map(|t| hops_to(&adj, t));
    let live = |i: usize, v: usize| hops.as_ref().is_none_or(|h| h[v] <= k - i);
    let mut first = vec![Vec::new(); n];
    if live(1, s.index()) {
        let mut bits = Bits::empty(matroid.universe());
        bits.insert(s.index());
        first[s.index()].push(Node {
            bits,
            parent: (s.0, 0),
        });
    }
    levels.push(first);
    for i in 2..=k {
        let prev = &levels[i - 2];
        let mut level = Vec::with_capacity(n);
        for v in 0..n {
            if !live(i, v) {
                level.push(Vec::new());
                continue;
            }
            let mut candidates = Vec::new();
            let mut parents = Vec::new();
            for &w in adj.neighbors(VertexId::new(v)) {
                for (j, x) in prev[w.index()].iter().enumerate() {
                    if !x.bits.contains(v) {
                        candidates.push(x.bits.with(v));
                        parents.push((w.0, j as u32));
                    }
                }
            }
            let keep = representative_indices(&candidates, i, q + k - i, &matroid);
            let mut nodes = Vec::with_capacity(keep.len());
            for j in keep {
                nodes.push(Node {
                    bits: std::mem::replace(&mut candidates[j], Bits::empty(0)),
                    parent: parents[j],
                });
            }
            level.push(nodes);
        }
        levels.push(level);
    }
    Ok(RepTable { k, levels })
}

/// Short s-t paths of one snapshot that survive the removal of any `q`
/// non-terminal vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustPathFamily {
    pub q: usize,
    pub k: usize,
    /// Ordered by length, then lexicographically.
    pub paths: Vec<StPath>,
}

/// A `q`-robust family of s-t paths with at most `k` vertices in snapshot `i`
/// (0-based): for every set `X` of at most `q` vertices other than `s` and `t`,
/// if some such path avoids `X` then a member does.
pub fn robust_paths(
    g: &TemporalGraph,
    i: usize,
    s: VertexId,
    t: VertexId,
    k: usize,
    q: usize,
) -> Result<RobustPathFamily> {
    let mut family = RobustPathFamily {
        q,
        k,
        paths: Vec::new(),
    };
    if k < 2 || s == t {
        return Ok(family);
    }
    // deletion sets cannot exceed the non-terminal vertices
    let q_eff = q.min(g.n().saturating_sub(2));
    let padded = pad_with_dummies(&g.snapshot_graph(i), t, k);
    let table = rep_dp_towards(&padded.graph, s, Some(t), k, q_eff)?;
    let mut paths: Vec<StPath> = table
        .get(k, t)
        .iter()
        .map(|set| padded.strip(&set.witness, t))
        .collect();
    paths.sort_by(|a, b| {
        a.vertex_count()
            .cmp(&b.vertex_count())
            .then_with(|| a.vertices().cmp(b.vertices()))
    });
    paths.dedup();
    family.paths = paths;
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[usize]) -> Vec<VertexId> {
        v.iter().map(|&x| VertexId::new(x)).collect()
    }

    #[test]
    fn padding_stretches_and_strips() {
        // s = 0, t = 1
        let g = StaticGraph::new(2, [(0, 1)]).unwrap();
        let padded = pad_with_dummies(&g, VertexId(1), 3);
        let adj = padded.graph.adjacency();
        let stretched = StPath::from_indices(&[0, 2, 1]).unwrap();
        assert!(stretched.edges().all(|e| adj.has_edge(e.u, e.v)));
        assert_eq!(padded.strip(&stretched, VertexId(1)).vertices(), &ids(&[0, 1])[..]);

        let full = StPath::from_indices(&[0, 1]).unwrap();
        assert_eq!(padded.strip(&full, VertexId(1)), full);
    }

    #[test]
    fn padding_without_path_adds_none() {
        // s = 0 isolated, t = 2 adjacent to 1
        let g = StaticGraph::new(3, [(1, 2)]).unwrap();
        let padded = pad_with_dummies(&g, VertexId(2), 3);
        let adj = padded.graph.adjacency();
        assert!(adj.neighbors(VertexId(0)).is_empty());
    }

    #[test]
    fn dp_examples() {
        // star with center s = 0, leaves a = 1, b = 2
        let star = StaticGraph::new(3, [(0, 1), (0, 2)]).unwrap();
        let table = rep_dp(&star, VertexId(0), 2, 0).unwrap();
        assert_eq!(table.get(2, VertexId(1))[0].elements, ids(&[0, 1]));
        assert_eq!(table.get(2, VertexId(2))[0].elements, ids(&[0, 2]));
        assert_eq!(table.get(1, VertexId(0))[0].elements, ids(&[0]));

        // triangle s = 0, a = 1, t = 2
        let tri = StaticGraph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let table = rep_dp(&tri, VertexId(0), 3, 1).unwrap();
        let at_t = table.get(3, VertexId(2));
        assert!(at_t
            .iter()
            .any(|x| x.elements == ids(&[0, 1, 2]) && x.witness.vertices() == &ids(&[0, 1, 2])[..]));
        // vertex 3 is disconnected
        for i in 1..=3 {
            assert!(table.get(i, VertexId(3)).is_empty());
        }
    }

    fn tg(n: usize, edges: Vec<(usize, usize)>) -> TemporalGraph {
        TemporalGraph::new(n, vec![edges]).unwrap()
    }

    #[test]
    fn robust_examples() {
        // s = 0, a = 1, b = 2, t = 3
        let g = tg(4, vec![(0, 1), (1, 3), (0, 2), (2, 3)]);
        let fam = robust_paths(&g, 0, VertexId(0), VertexId(3), 3, 1).unwrap();
        assert!(fam.paths.contains(&StPath::from_indices(&[0, 1, 3]).unwrap()));
        assert!(fam.paths.contains(&StPath::from_indices(&[0, 2, 3]).unwrap()));

        let g = tg(2, vec![(0, 1)]);
        for q in 0..3 {
            let fam = robust_paths(&g, 0, VertexId(0), VertexId(1), 4, q).unwrap();
            assert_eq!(fam.paths, vec![StPath::from_indices(&[0, 1]).unwrap()]);
        }

        let g = tg(4, vec![(0, 1), (1, 2), (2, 3)]);
        assert!(robust_paths(&g, 0, VertexId(0), VertexId(3), 3, 2)
            .unwrap()
            .paths
            .is_empty());
    }
}
