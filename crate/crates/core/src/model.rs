//! Data model: vertices, edges, temporal graphs, paths and problem instances.
//!
//! Snapshots are stored in canonical form: every edge has its smaller endpoint
//! first and each snapshot's edge list is sorted without duplicates. All
//! iteration orders in the crate derive from this form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index exceeds u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId::new(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Undirected edge. [`Edge::new`] orders the endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Self {
        let (a, b) = (a.into(), b.into());
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Packs the canonical pair into one integer; order-preserving.
    #[inline]
    pub fn key(self) -> u64 {
        ((self.u.0 as u64) << 32) | self.v.0 as u64
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// Sorted neighbor lists of one static graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    lists: Vec<Vec<VertexId>>,
}

impl Adjacency {
    pub fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut lists = vec![Vec::new(); n];
        for e in edges {
            lists[e.u.index()].push(e.v);
            lists[e.v.index()].push(e.u);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Adjacency { lists }
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.lists[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.lists[v.index()].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.lists[a.index()].binary_search(&b).is_ok()
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// A static graph in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl StaticGraph {
    /// Builds a graph, canonicalizing edge order and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            check_edge(n, 0, a, b)?;
            out.push(Edge::new(a, b));
        }
        out.sort_unstable();
        out.dedup();
        Ok(StaticGraph { n, edges: out })
    }

    pub(crate) fn from_canonical(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        StaticGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::from_edges(self.n, &self.edges)
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            deg[e.u.index()] += 1;
            deg[e.v.index()] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

fn check_edge(n: usize, snapshot: usize, a: usize, b: usize) -> Result<()> {
    for x in [a, b] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if a == b {
        return Err(Error::SelfLoop {
            snapshot,
            vertex: a,
        });
    }
    Ok(())
}

/// Fixed vertex set with a sequence of edge sets, one per snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    snapshots: Vec<Vec<Edge>>,
}

impl TemporalGraph {
    /// Builds a temporal graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges. Snapshot numbers in errors are 1-based.
    pub fn new(n: usize, snapshots: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        if snapshots.is_empty() {
            return Err(Error::NoSnapshots);
        }
        let mut out = Vec::with_capacity(snapshots.len());
        for (i, raw) in snapshots.into_iter().enumerate() {
            let mut edges = Vec::with_capacity(raw.len());
            for (a, b) in raw {
                check_edge(n, i + 1, a, b)?;
                edges.push(Edge::new(a, b));
            }
            edges.sort_unstable();
            if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    snapshot: i + 1,
                    u: w[0].u.index(),
                    v: w[0].v.index(),
                });
            }
            out.push(edges);
        }
        Ok(TemporalGraph { n, snapshots: out })
    }

    /// Like [`TemporalGraph::new`] but merges duplicate edges instead of failing.
    pub fn new_dedup(n: usize, snapshots: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let snapshots = snapshots
            .into_iter()
            .map(|mut s| {
                for e in &mut s {
                    if e.0 > e.1 {
                        *e = (e.1, e.0);
                    }
                }
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Self::new(n, snapshots)
    }

    /// Stores the given edge lists verbatim. The result may violate the type's
    /// invariants; [`crate::validate_instance`] reports any violations.
    pub fn from_parts_unchecked(n: usize, snapshots: Vec<Vec<Edge>>) -> Self {
        TemporalGraph { n, snapshots }
    }

    pub(crate) fn from_canonical(n: usize, snapshots: Vec<Vec<Edge>>) -> Self {
        debug_assert!(snapshots
            .iter()
            .all(|s| s.windows(2).all(|w| w[0] < w[1])));
        TemporalGraph { n, snapshots }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> usize {
        self.snapshots.len()
    }

    /// Edges of the snapshot with 0-based index `i`.
    pub fn snapshot(&self, i: usize) -> &[Edge] {
        &self.snapshots[i]
    }

    pub fn snapshots(&self) -> &[Vec<Edge>] {
        &self.snapshots
    }

    pub fn snapshot_graph(&self, i: usize) -> StaticGraph {
        StaticGraph::from_canonical(self.n, self.snapshots[i].clone())
    }

    pub fn adjacency(&self, i: usize) -> Adjacency {
        Adjacency::from_edges(self.n, &self.snapshots[i])
    }

    /// `n + sum of snapshot edge counts`.
    pub fn size(&self) -> usize {
        self.n + self.snapshots.iter().map(Vec::len).sum::<usize>()
    }

    /// Induced temporal graph on `keep` (sorted, distinct), with vertices
    /// renumbered in increasing order. Returns the graph and the map from new
    /// to old ids.
    pub fn induced(&self, keep: &[VertexId]) -> (TemporalGraph, Vec<VertexId>) {
        let mut new_id = vec![u32::MAX; self.n];
        for (i, v) in keep.iter().enumerate() {
            new_id[v.index()] = i as u32;
        }
        let snapshots = self
            .snapshots
            .iter()
            .map(|edges| {
                edges
                    .iter()
                    .filter_map(|e| {
                        let (a, b) = (new_id[e.u.index()], new_id[e.v.index()]);
                        (a != u32::MAX && b != u32::MAX).then(|| Edge::new(a as usize, b as usize))
                    })
                    .collect()
            })
            .collect();
        (
            TemporalGraph::from_canonical(keep.len(), snapshots),
            keep.to_vec(),
        )
    }
}

/// Distance measure between consecutive paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Symmetric difference of vertex sets.
    Vdv,
    /// Symmetric difference of edge sets.
    Ede,
    /// Shared vertices other than the terminals.
    Viv,
    /// Shared edges.
    Eie,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Vdv, Measure::Ede, Measure::Viv, Measure::Eie];

    pub fn is_similarity(self) -> bool {
        matches!(self, Measure::Vdv | Measure::Ede)
    }

    pub fn is_dissimilarity(self) -> bool {
        !self.is_similarity()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Vdv => "vdv",
            Measure::Ede => "ede",
            Measure::Viv => "viv",
            Measure::Eie => "eie",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vdv" => Ok(Measure::Vdv),
            "ede" => Ok(Measure::Ede),
            "viv" => Ok(Measure::Viv),
            "eie" => Ok(Measure::Eie),
            other => Err(Error::InvalidInput(format!("unknown measure `{other}`"))),
        }
    }
}

/// A temporal graph with terminals, vertex budget `k` and distance budget `ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: TemporalGraph,
    pub s: VertexId,
    pub t: VertexId,
    /// Maximum number of vertices on each path.
    pub k: usize,
    pub ell: usize,
    pub measure: Measure,
}

impl ProblemInstance {
    pub fn new(
        graph: TemporalGraph,
        s: impl Into<VertexId>,
        t: impl Into<VertexId>,
        k: usize,
        ell: usize,
        measure: Measure,
    ) -> Result<Self> {
        let inst = ProblemInstance {
            graph,
            s: s.into(),
            t: t.into(),
            k,
            ell,
            measure,
        };
        let report = validate_instance(&inst);
        if let Some(first) = report.violations.first() {
            return Err(Error::InvalidInstance(first.to_string()));
        }
        Ok(inst)
    }

    pub fn tau(&self) -> usize {
        self.graph.tau()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn with_measure(&self, measure: Measure) -> Self {
        ProblemInstance {
            measure,
            ..self.clone()
        }
    }
}

/// A sequence of pairwise distinct vertices. As an s-t path its first vertex
/// is s and its last is t; its length is `vertices().len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StPath {
    vertices: Vec<VertexId>,
}

impl StPath {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex {
                vertex: w[0].index(),
            });
        }
        Ok(StPath { vertices })
    }

    pub fn from_indices(vertices: &[usize]) -> Result<Self> {
        Self::new(vertices.iter().map(|&v| VertexId::new(v)).collect())
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<VertexId>) -> Self {
        StPath { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for StPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// One path per snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSequence {
    pub paths: Vec<StPath>,
}

impl PathSequence {
    pub fn new(paths: Vec<StPath>) -> Self {
        PathSequence { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// A single invariant violation found by [`validate_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoSnapshots,
    EndpointOutOfRange {
        snapshot: usize,
        edge: (usize, usize),
    },
    SelfLoop {
        snapshot: usize,
        vertex: usize,
    },
    NotCanonical {
        snapshot: usize,
        edge: (usize, usize),
    },
    DuplicateEdge {
        snapshot: usize,
        edge: (usize, usize),
    },
    TerminalOutOfRange {
        which: char,
        vertex: usize,
    },
    TerminalsEqual,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoSnapshots => write!(f, "no snapshots"),
            Violation::EndpointOutOfRange { snapshot, edge } => write!(
                f,
                "edge ({}, {}) out of range in snapshot {snapshot}",
                edge.0, edge.1
            ),
            Violation::SelfLoop { snapshot, vertex } => {
                write!(f, "self-loop in snapshot {snapshot} at vertex {vertex}")
            }
            Violation::NotCanonical { snapshot, edge } => write!(
                f,
                "edge ({}, {}) not in canonical order in snapshot {snapshot}",
                edge.0, edge.1
            ),
            Violation::DuplicateEdge { snapshot, edge } => write!(
                f,
                "duplicate edge ({}, {}) in snapshot {snapshot}",
                edge.0, edge.1
            ),
            Violation::TerminalOutOfRange { which, vertex } => {
                write!(f, "terminal {which} = {vertex} out of range")
            }
            Violation::TerminalsEqual => write!(f, "terminals equal"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reports every violated invariant of `inst`. Snapshot numbers are 1-based.
///
/// A budget `k < 2` is not a violation; such instances are simply NO.
pub fn validate_instance(inst: &ProblemInstance) -> ValidationReport {
    let mut violations = Vec::new();
    let n = inst.graph.n();
    if inst.graph.tau() == 0 {
        violations.push(Violation::NoSnapshots);
    }
    for (i, edges) in inst.graph.snapshots().iter().enumerate() {
        let snapshot = i + 1;
        for (j, e) in edges.iter().enumerate() {
            let pair = (e.u.index(), e.v.index());
            if pair.0 >= n || pair.1 >= n {
                violations.push(Violation::EndpointOutOfRange {
                    snapshot,
                    edge: pair,
                });
            }
            if pair.0 == pair.1 {
                violations.push(Violation::SelfLoop {
                    snapshot,
                    vertex: pair.0,
                });
            } else if pair.0 > pair.1 {
                violations.push(Violation::NotCanonical {
                    snapshot,
                    edge: pair,
                });
            }
            if j > 0 {
                let prev = edges[j - 1];
                if prev == *e {
                    violations.push(Violation::DuplicateEdge {
                        snapshot,
                        edge: pair,
                    });
                } else if prev > *e {
                    violations.push(Violation::NotCanonical {
                        snapshot,
                        edge: pair,
                    });
                }
            }
        }
    }
    for (which, v) in [('s', inst.s), ('t', inst.t)] {
        if v.index() >= n {
            violations.push(Violation::TerminalOutOfRange {
                which,
                vertex: v.index(),
            });
        }
    }
    if inst.s == inst.t {
        violations.push(Violation::TerminalsEqual);
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_instance() -> ProblemInstance {
        let g = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2), (0, 2)]; 2]).unwrap();
        ProblemInstance::new(g, 0, 2, 3, 1, Measure::Vdv).unwrap()
    }

    #[test]
    fn well_formed_instance_has_empty_report() {
        assert!(validate_instance(&triangle_instance()).is_valid());
    }

    #[test]
    fn self_loop_is_reported_with_snapshot() {
        let g = TemporalGraph::from_parts_unchecked(
            4,
            vec![vec![Edge {
                u: VertexId(3),
                v: VertexId(3),
            }]],
        );
        let inst = ProblemInstance {
            graph: g,
            s: VertexId(0),
            t: VertexId(1),
            k: 3,
            ell: 0,
            measure: Measure::Vdv,
        };
        let report = validate_instance(&inst);
        assert_eq!(report.violations.len(), 1);
        assert!(report.violations[0]
            .to_string()
            .starts_with("self-loop in snapshot 1"));
    }

    #[test]
    fn equal_terminals_are_reported() {
        let mut inst = triangle_instance();
        inst.t = inst.s;
        let report = validate_instance(&inst);
        assert!(report
            .violations
            .iter()
            .any(|v| v.to_string() == "terminals equal"));
        assert!(matches!(
            ProblemInstance::new(inst.graph.clone(), 0, 0, 3, 0, Measure::Vdv),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn duplicates_and_bad_order_are_reported() {
        let e = Edge::new(0, 1);
        let g = TemporalGraph::from_parts_unchecked(
            3,
            vec![vec![
                e,
                e,
                Edge {
                    u: VertexId(2),
                    v: VertexId(1),
                },
            ]],
        );
        let inst = ProblemInstance {
            graph: g,
            s: VertexId(0),
            t: VertexId(5),
            k: 2,
            ell: 0,
            measure: Measure::Eie,
        };
        let report = validate_instance(&inst);
        assert!(report
            .violations
            .contains(&Violation::DuplicateEdge {
                snapshot: 1,
                edge: (0, 1)
            }));
        assert!(report.violations.contains(&Violation::NotCanonical {
            snapshot: 1,
            edge: (2, 1)
        }));
        assert!(report.violations.contains(&Violation::TerminalOutOfRange {
            which: 't',
            vertex: 5
        }));
    }

    #[test]
    fn constructor_canonicalizes_and_rejects() {
        let g = TemporalGraph::new(3, vec![vec![(2, 0), (1, 0)]]).unwrap();
        assert_eq!(g.snapshot(0), &[Edge::new(0, 1), Edge::new(0, 2)]);
        assert_eq!(g.size(), 5);
        assert!(matches!(
            TemporalGraph::new(3, vec![vec![(0, 1), (1, 0)]]),
            Err(Error::DuplicateEdge { snapshot: 1, .. })
        ));
        assert!(matches!(
            TemporalGraph::new(3, vec![vec![(0, 3)]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            TemporalGraph::new(3, vec![vec![], vec![(1, 1)]]),
            Err(Error::SelfLoop {
                snapshot: 2,
                vertex: 1
            })
        ));
        assert_eq!(TemporalGraph::new(3, vec![]), Err(Error::NoSnapshots));
    }

    #[test]
    fn paths_reject_repeats() {
        assert_eq!(StPath::new(vec![]), Err(Error::EmptyPath));
        assert_eq!(
            StPath::from_indices(&[0, 1, 0]),
            Err(Error::RepeatedVertex { vertex: 0 })
        );
        let p = StPath::from_indices(&[0, 2, 1]).unwrap();
        assert_eq!(p.length(), 2);
        assert_eq!(p.edges().count(), 2);
        assert_eq!(p.to_string(), "0 2 1");
    }

    #[test]
    fn induced_renumbers_in_order() {
        let g = TemporalGraph::new(4, vec![vec![(0, 1), (1, 3), (2, 3)], vec![(0, 3)]]).unwrap();
        let keep = [VertexId(0), VertexId(1), VertexId(3)];
        let (h, map) = g.induced(&keep);
        assert_eq!(h.n(), 3);
        assert_eq!(h.snapshot(0), &[Edge::new(0, 1), Edge::new(1, 2)]);
        assert_eq!(h.snapshot(1), &[Edge::new(0, 2)]);
        assert_eq!(map, keep.to_vec());
    }

    #[test]
    fn measure_classes() {
        assert!(Measure::Vdv.is_similarity() && Measure::Ede.is_similarity());
        assert!(Measure::Viv.is_dissimilarity() && Measure::Eie.is_dissimilarity());
        for m in Measure::ALL {
            assert_eq!(m.as_str().parse::<Measure>().unwrap(), m);
        }
        assert!("xyz".parse::<Measure>().is_err());
    }
}
