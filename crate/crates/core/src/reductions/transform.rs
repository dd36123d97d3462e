use crate::error::{Error, Result};
use crate::model::{Edge, Measure, PathSequence, ProblemInstance, StPath, TemporalGraph, VertexId};
use crate::structure::underlying_graph;
use crate::verify::verify_solution;

/// A transformed instance together with what is needed to map its solutions
/// back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub source: ProblemInstance,
    pub instance: ProblemInstance,
    /// Original vertex behind each target vertex; `None` for vertices that
    /// stand for edges.
    pub origin: Vec<Option<VertexId>>,
}

fn require(inst: &ProblemInstance, m: Measure) -> Result<()> {
    if inst.measure == m {
        Ok(())
    } else {
        Err(Error::WrongMeasure {
            expected: m.as_str(),
            got: inst.measure,
        })
    }
}

/// Edge symmetric difference to vertex symmetric difference: every edge is
/// replaced by a path through `ell + 1` new vertices that exist in exactly the
/// snapshots containing the edge. Budgets become `k + (k - 1)(ell + 1)` and
/// `(ell + 1)^2 - 1`.
pub fn reduce_ede_to_vdv(inst: &ProblemInstance) -> Result<ReductionArtifact> {
    require(inst, Measure::Ede)?;
    let n = inst.n();
    let chain = inst.ell + 1;
    let edges = underlying_graph(&inst.graph).edges().to_vec();
    let total = n + edges.len() * chain;
    let mut origin: Vec<Option<VertexId>> = (0..n).map(|v| Some(VertexId::new(v))).collect();
    origin.resize(total, None);
    let chain_edges = |j: usize, e: Edge| {
        let base = n + j * chain;
        let mut walk = vec![e.u];
        walk.extend((base..base + chain).map(VertexId::new));
        walk.push(e.v);
        walk.windows(2)
            .map(|w| Edge::new(w[0], w[1]))
            .collect::<Vec<_>>()
    };
    let snapshots = inst
        .graph
        .snapshots()
        .iter()
        .map(|snap| {
            let mut out: Vec<Edge> = snap
                .iter()
                .flat_map(|e| {
                    let j = edges.binary_search(e).expect("edge of underlying graph");
                    chain_edges(j, *e)
                })
                .collect();
            out.sort_unstable();
            out
        })
        .collect();
    let k = inst.k + inst.k.saturating_sub(1) * chain;
    let ell = chain * chain - 1;
    let instance = ProblemInstance {
        graph: TemporalGraph::from_canonical(total, snapshots),
        s: inst.s,
        t: inst.t,
        k,
        ell,
        measure: Measure::Vdv,
    };
    Ok(ReductionArtifact {
        source: inst.clone(),
        instance,
        origin,
    })
}

/// Edge intersection to vertex intersection: every non-terminal vertex `v` is
/// split into `v0` and `v1`, and every edge `e` becomes a vertex `x_e` adjacent
/// to both copies of each non-terminal endpoint and to each terminal endpoint.
/// Budgets become `2k - 1` and `ell`.
pub fn reduce_eie_to_viv(inst: &ProblemInstance) -> Result<ReductionArtifact> {
    require(inst, Measure::Eie)?;
    let n = inst.n();
    let (s, t) = (inst.s, inst.t);
    let terminal = |v: VertexId| v == s || v == t;
    // v0 keeps the id v; v1 ids follow in order of v
    let mut second = vec![None; n];
    let mut origin: Vec<Option<VertexId>> = (0..n).map(|v| Some(VertexId::new(v))).collect();
    for v in (0..n).map(VertexId::new).filter(|&v| !terminal(v)) {
        second[v.index()] = Some(VertexId::new(origin.len()));
        origin.push(Some(v));
    }
    let edges = underlying_graph(&inst.graph).edges().to_vec();
    let hub_base = origin.len();
    origin.resize(hub_base + edges.len(), None);
    let hub_edges = |j: usize, e: Edge| {
        let x = VertexId::new(hub_base + j);
        let mut out = Vec::with_capacity(4);
        for end in [e.u, e.v] {
            out.push(Edge::new(end, x));
            if let Some(copy) = second[end.index()] {
                out.push(Edge::new(copy, x));
            }
        }
        out
    };
    let snapshots = inst
        .graph
        .snapshots()
        .iter()
        .map(|snap| {
            let mut out: Vec<Edge> = snap
                .iter()
                .flat_map(|e| {
                    let j = edges.binary_search(e).expect("edge of underlying graph");
                    hub_edges(j, *e)
                })
                .collect();
            out.sort_unstable();
            out
        })
        .collect();
    let instance = ProblemInstance {
        graph: TemporalGraph::from_canonical(origin.len(), snapshots),
        s,
        t,
        k: (2 * inst.k).saturating_sub(1),
        ell: inst.ell,
        measure: Measure::Viv,
    };
    Ok(ReductionArtifact {
        source: inst.clone(),
        instance,
        origin,
    })
}

/// Maps a target solution back to the source instance: vertices are replaced
/// by their originals, edge vertices dropped, and any loops that appear are
/// cut out.
pub fn lift_witness(artifact: &ReductionArtifact, target: &PathSequence) -> Result<PathSequence> {
    let report = verify_solution(&artifact.instance, target);
    if let Some(fail) = report.failure {
        return Err(Error::InvalidWitness(format!("target solution rejected: {fail}")));
    }
    let paths = target
        .paths
        .iter()
        .map(|p| {
            let mut out: Vec<VertexId> = Vec::with_capacity(p.vertex_count());
            for v in p.vertices().iter().filter_map(|v| artifact.origin[v.index()]) {
                if let Some(pos) = out.iter().position(|&u| u == v) {
                    out.truncate(pos + 1);
                } else {
                    out.push(v);
                }
            }
            StPath::from_vec_unchecked(out)
        })
        .collect();
    let lifted = PathSequence::new(paths);
    let report = verify_solution(&artifact.source, &lifted);
    if let Some(fail) = report.failure {
        return Err(Error::InvalidWitness(format!("lifted solution rejected: {fail}")));
    }
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::solve_xp;

    fn inst(n: usize, snaps: Vec<Vec<(usize, usize)>>, t: usize, k: usize, ell: usize, m: Measure) -> ProblemInstance {
        ProblemInstance::new(TemporalGraph::new(n, snaps).unwrap(), 0, t, k, ell, m).unwrap()
    }

    #[test]
    fn subdivision_parameters() {
        let i = inst(3, vec![vec![(0, 1), (1, 2)]], 2, 3, 1, Measure::Ede);
        let a = reduce_ede_to_vdv(&i).unwrap();
        assert_eq!((a.instance.k, a.instance.ell), (7, 3));
        assert_eq!(a.instance.n(), 3 + 2 * 2);

        let i = inst(2, vec![vec![(0, 1)]], 1, 2, 0, Measure::Ede);
        let a = reduce_ede_to_vdv(&i).unwrap();
        assert_eq!(a.instance.ell, 0);
        assert_eq!(a.instance.graph.snapshot(0), &[Edge::new(0usize, 2usize), Edge::new(1usize, 2usize)]);
    }

    #[test]
    fn subdivision_lift_drops_chain_vertices() {
        let i = inst(3, vec![vec![(0, 1), (1, 2)], vec![(0, 2)]], 2, 3, 3, Measure::Ede);
        let a = reduce_ede_to_vdv(&i).unwrap();
        let target = solve_xp(&a.instance).unwrap().unwrap();
        let lifted = lift_witness(&a, &target).unwrap();
        assert_eq!(lifted.paths[0], StPath::from_indices(&[0, 1, 2]).unwrap());
        assert_eq!(lifted.paths[1], StPath::from_indices(&[0, 2]).unwrap());
    }

    #[test]
    fn split_parameters_and_single_edge() {
        let i = inst(2, vec![vec![(0, 1)], vec![(0, 1)]], 1, 5, 1, Measure::Eie);
        let a = reduce_eie_to_viv(&i).unwrap();
        assert_eq!((a.instance.k, a.instance.ell), (9, 1));
        // no non-terminals, one hub with id 2
        for snap in a.instance.graph.snapshots() {
            assert_eq!(snap, &vec![Edge::new(0usize, 2usize), Edge::new(1usize, 2usize)]);
        }
        let target = PathSequence::new(vec![StPath::from_indices(&[0, 2, 1]).unwrap(); 2]);
        let lifted = lift_witness(&a, &target).unwrap();
        assert_eq!(lifted.paths, vec![StPath::from_indices(&[0, 1]).unwrap(); 2]);
    }

    #[test]
    fn split_terminal_edges_touch_the_terminal() {
        // s = 0, a = 1, t = 2; a1 = 3; hubs 4 (edge 0-1) and 5 (edge 1-2)
        let i = inst(3, vec![vec![(0, 1), (1, 2)]], 2, 3, 0, Measure::Eie);
        let a = reduce_eie_to_viv(&i).unwrap();
        let expect: Vec<Edge> = [(0, 4), (1, 4), (3, 4), (1, 5), (3, 5), (2, 5)]
            .iter()
            .map(|&(x, y)| Edge::new(x as usize, y as usize))
            .collect();
        let mut expect = expect;
        expect.sort_unstable();
        assert_eq!(a.instance.graph.snapshot(0), &expect[..]);
    }

    #[test]
    fn lifting_removes_detours_through_both_copies() {
        // target path s x_sa a0 x_ab a1 ... revisits a; after lifting the loop disappears
        let i = inst(4, vec![vec![(0, 1), (1, 2), (1, 3), (2, 3)]], 3, 4, 0, Measure::Eie);
        let a = reduce_eie_to_viv(&i).unwrap();
        // ids: a0=1, b0=2, a1=4, b1=5; hubs: 01->6, 12->7, 13->8, 23->9
        let target = PathSequence::new(vec![StPath::from_indices(&[0, 6, 1, 7, 4, 8, 3]).unwrap()]);
        let lifted = lift_witness(&a, &target).unwrap();
        assert_eq!(lifted.paths[0], StPath::from_indices(&[0, 1, 3]).unwrap());
    }

    #[test]
    fn wrong_measure_and_bad_target() {
        let i = inst(2, vec![vec![(0, 1)]], 1, 2, 0, Measure::Vdv);
        assert!(reduce_ede_to_vdv(&i).is_err());
        assert!(reduce_eie_to_viv(&i).is_err());
        let e = i.with_measure(Measure::Eie);
        let a = reduce_eie_to_viv(&e).unwrap();
        let bad = PathSequence::new(vec![StPath::from_indices(&[0, 1]).unwrap()]);
        assert!(matches!(lift_witness(&a, &bad), Err(Error::InvalidWitness(_))));
    }
}
