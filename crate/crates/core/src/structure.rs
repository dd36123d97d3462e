//! Static structure of temporal graphs: underlying graph, vertex cover,
//! temporal twins and summary statistics.

use crate::model::{Adjacency, Edge, StaticGraph, TemporalGraph, VertexId};

/// Static graph whose edge set is the union of all snapshots.
pub fn underlying_graph(g: &TemporalGraph) -> StaticGraph {
    let mut edges: Vec<Edge> = g.snapshots().iter().flatten().copied().collect();
    edges.sort_unstable();
    edges.dedup();
    StaticGraph::from_canonical(g.n(), edges)
}

/// Endpoints of a maximal matching built greedily over the canonical edge
/// order. The result is a vertex cover of size at most twice the optimum.
/// Returned in increasing order.
pub fn greedy_vertex_cover(h: &StaticGraph) -> Vec<VertexId> {
    let mut covered = vec![false; h.n()];
    for e in h.edges() {
        if !covered[e.u.index()] && !covered[e.v.index()] {
            covered[e.u.index()] = true;
            covered[e.v.index()] = true;
        }
    }
    (0..h.n())
        .filter(|&v| covered[v])
        .map(VertexId::new)
        .collect()
}

/// Partition of the vertex set into classes of temporal twins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes in order of their smallest member; members increasing.
    pub classes: Vec<Vec<VertexId>>,
    class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v.index()]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Groups vertices whose open neighborhoods coincide in every snapshot.
pub fn temporal_twin_partition(g: &TemporalGraph) -> TwinPartition {
    let adjs: Vec<Adjacency> = (0..g.tau()).map(|i| g.adjacency(i)).collect();
    let all: Vec<VertexId> = (0..g.n()).map(VertexId::new).collect();
    let classes = twin_classes(&adjs, &all);
    let mut class_of = vec![usize::MAX; g.n()];
    for (c, members) in classes.iter().enumerate() {
        for v in members {
            class_of[v.index()] = c;
        }
    }
    TwinPartition { classes, class_of }
}

/// Twin classes among `vertices` with respect to the given snapshots.
pub(crate) fn twin_classes(adjs: &[Adjacency], vertices: &[VertexId]) -> Vec<Vec<VertexId>> {
    let signature = |v: VertexId| adjs.iter().map(move |a| a.neighbors(v));
    let mut order = vertices.to_vec();
    order.sort_by(|&a, &b| signature(a).cmp(signature(b)).then(a.cmp(&b)));
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for v in order {
        match classes.last_mut() {
            Some(last) if signature(last[0]).eq(signature(v)) => last.push(v),
            _ => classes.push(vec![v]),
        }
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub tau: usize,
    /// Maximum degree of the underlying graph.
    pub underlying_max_degree: usize,
    /// Largest maximum degree of any single snapshot.
    pub snapshot_max_degree: usize,
    /// Size of the greedy vertex cover of the underlying graph; at most twice
    /// its vertex cover number.
    pub cover_upper: usize,
}

pub fn graph_stats(g: &TemporalGraph) -> GraphStats {
    let under = underlying_graph(g);
    GraphStats {
        n: g.n(),
        tau: g.tau(),
        underlying_max_degree: under.max_degree(),
        snapshot_max_degree: (0..g.tau())
            .map(|i| g.adjacency(i).max_degree())
            .max()
            .unwrap_or(0),
        cover_upper: greedy_vertex_cover(&under).len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tg(n: usize, snaps: Vec<Vec<(usize, usize)>>) -> TemporalGraph {
        TemporalGraph::new(n, snaps).unwrap()
    }

    fn ids(v: &[usize]) -> Vec<VertexId> {
        v.iter().map(|&x| VertexId::new(x)).collect()
    }

    #[test]
    fn underlying_examples() {
        let u = underlying_graph(&tg(3, vec![vec![(0, 1)], vec![(1, 2)]]));
        assert_eq!(u.edges(), &[Edge::new(0usize, 1usize), Edge::new(1usize, 2usize)]);
        let same = underlying_graph(&tg(3, vec![vec![(0, 1), (1, 2)], vec![(0, 1), (1, 2)]]));
        assert_eq!(same.edges().len(), 2);
        let disjoint = tg(
            8,
            vec![
                vec![(0, 1), (2, 3), (4, 5)],
                vec![(0, 7), (1, 2), (3, 4), (5, 6)],
            ],
        );
        assert_eq!(underlying_graph(&disjoint).edges().len(), 7);
    }

    #[test]
    fn cover_examples() {
        assert!(greedy_vertex_cover(&StaticGraph::new(3, []).unwrap()).is_empty());
        assert_eq!(
            greedy_vertex_cover(&StaticGraph::new(2, [(0, 1)]).unwrap()),
            ids(&[0, 1])
        );
        let star = StaticGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let cover = greedy_vertex_cover(&star);
        assert_eq!(cover.len(), 2);
        assert!(cover.contains(&VertexId(0)));
    }

    #[test]
    fn twin_examples() {
        // a = 0, b = 1 adjacent only to c = 2 in both snapshots
        let g = tg(3, vec![vec![(0, 2), (1, 2)], vec![(0, 2), (1, 2)]]);
        let p = temporal_twin_partition(&g);
        assert_eq!(p.class_of(VertexId(0)), p.class_of(VertexId(1)));

        let g = tg(4, vec![vec![(0, 2), (1, 2)], vec![(0, 2), (1, 3)]]);
        let p = temporal_twin_partition(&g);
        assert_ne!(p.class_of(VertexId(0)), p.class_of(VertexId(1)));

        let p = temporal_twin_partition(&tg(4, vec![vec![]]));
        assert_eq!(p.classes, vec![ids(&[0, 1, 2, 3])]);
    }

    #[test]
    fn stats_examples() {
        let s = graph_stats(&tg(3, vec![vec![(0, 1), (1, 2)]]));
        assert_eq!((s.underlying_max_degree, s.snapshot_max_degree), (2, 2));
        let s = graph_stats(&tg(3, vec![vec![(0, 1)], vec![(0, 2)]]));
        assert_eq!((s.underlying_max_degree, s.snapshot_max_degree), (2, 1));
        let s = graph_stats(&tg(3, vec![vec![], vec![]]));
        assert_eq!(s.underlying_max_degree, 0);
    }

    fn arb_temporal() -> impl Strategy<Value = TemporalGraph> {
        (2usize..8, 1usize..4).prop_flat_map(|(n, tau)| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            let m = pairs.len();
            proptest::collection::vec(proptest::sample::subsequence(pairs, 0..=m), tau)
                .prop_map(move |snaps| TemporalGraph::new(n, snaps).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cover_is_cover_and_at_most_twice_matching(g in arb_temporal()) {
            let u = underlying_graph(&g);
            let cover = greedy_vertex_cover(&u);
            for e in u.edges() {
                prop_assert!(cover.contains(&e.u) || cover.contains(&e.v));
            }
            prop_assert_eq!(cover.len() % 2, 0);
        }

        #[test]
        fn twin_partition_matches_definition(g in arb_temporal()) {
            let p = temporal_twin_partition(&g);
            let adjs: Vec<_> = (0..g.tau()).map(|i| g.adjacency(i)).collect();
            for a in 0..g.n() {
                for b in 0..g.n() {
                    let (va, vb) = (VertexId::new(a), VertexId::new(b));
                    let twins = adjs.iter().all(|adj| adj.neighbors(va) == adj.neighbors(vb));
                    prop_assert_eq!(twins, p.class_of(va) == p.class_of(vb));
                }
            }
            for class in &p.classes {
                for adj in &adjs {
                    for &x in class {
                        for &y in class {
                            prop_assert!(!adj.has_edge(x, y));
                        }
                    }
                }
            }
        }

        #[test]
        fn perturbing_one_snapshot_splits_a_class(g in arb_temporal()) {
            let p = temporal_twin_partition(&g);
            if let Some(class) = p.classes.iter().find(|c| c.len() >= 2) {
                // attach a fresh vertex to one member only, in the last snapshot
                let (a, b) = (class[0], class[1]);
                let n = g.n() + 1;
                let mut snaps: Vec<Vec<(usize, usize)>> = g
                    .snapshots()
                    .iter()
                    .map(|s| s.iter().map(|e| (e.u.index(), e.v.index())).collect())
                    .collect();
                snaps.last_mut().unwrap().push((a.index(), n - 1));
                let q = temporal_twin_partition(&TemporalGraph::new(n, snaps).unwrap());
                prop_assert_ne!(q.class_of(a), q.class_of(b));
            }
        }

        #[test]
        fn underlying_of_single_snapshot_is_identity(g in arb_temporal()) {
            let h = g.snapshot_graph(0);
            let single = TemporalGraph::from_parts_unchecked(h.n(), vec![h.edges().to_vec()]);
            prop_assert_eq!(underlying_graph(&single), h);
        }
    }
}
