use std::fmt;

use crate::distance::PathProfile;
use crate::model::{PathSequence, ProblemInstance, VertexId};

/// First reason a candidate sequence fails. Snapshot and transition numbers
/// are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    WrongLength { expected: usize, got: usize },
    BadStart { snapshot: usize, vertex: VertexId },
    BadEnd { snapshot: usize, vertex: VertexId },
    VertexOutOfRange { snapshot: usize, vertex: VertexId },
    NonEdge { snapshot: usize, u: VertexId, v: VertexId },
    TooManyVertices { snapshot: usize, count: usize, k: usize },
    DistanceExceeded { transition: usize, distance: usize, ell: usize },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::WrongLength { expected, got } => {
                write!(f, "expected {expected} paths, got {got}")
            }
            VerifyFailure::BadStart { snapshot, vertex } => {
                write!(f, "path at snapshot {snapshot} starts at {vertex}, not s")
            }
            VerifyFailure::BadEnd { snapshot, vertex } => {
                write!(f, "path at snapshot {snapshot} ends at {vertex}, not t")
            }
            VerifyFailure::VertexOutOfRange { snapshot, vertex } => {
                write!(f, "vertex {vertex} out of range at snapshot {snapshot}")
            }
            VerifyFailure::NonEdge { snapshot, u, v } => {
                write!(f, "non-edge at snapshot {snapshot}: {u} {v}")
            }
            VerifyFailure::TooManyVertices { snapshot, count, k } => {
                write!(f, "path at snapshot {snapshot} has {count} vertices > k={k}")
            }
            VerifyFailure::DistanceExceeded {
                transition,
                distance,
                ell,
            } => write!(f, "distance {distance} > ℓ={ell} at transition {transition}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn accepted(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("accept"),
            Some(fail) => write!(f, "reject: {fail}"),
        }
    }
}

/// Checks a candidate solution against an instance and reports the first failure.
pub fn verify_solution(inst: &ProblemInstance, seq: &PathSequence) -> VerifyReport {
    VerifyReport {
        failure: first_failure(inst, seq),
    }
}

fn first_failure(inst: &ProblemInstance, seq: &PathSequence) -> Option<VerifyFailure> {
    let tau = inst.tau();
    if seq.len() != tau {
        return Some(VerifyFailure::WrongLength {
            expected: tau,
            got: seq.len(),
        });
    }
    for (i, path) in seq.paths.iter().enumerate() {
        let snapshot = i + 1;
        if path.first() != inst.s {
            return Some(VerifyFailure::BadStart {
                snapshot,
                vertex: path.first(),
            });
        }
        if path.last() != inst.t {
            return Some(VerifyFailure::BadEnd {
                snapshot,
                vertex: path.last(),
            });
        }
        if let Some(&v) = path.vertices().iter().find(|v| v.index() >= inst.n()) {
            return Some(VerifyFailure::VertexOutOfRange { snapshot, vertex: v });
        }
        let edges = inst.graph.snapshot(i);
        for e in path.edges() {
            if edges.binary_search(&e).is_err() {
                return Some(VerifyFailure::NonEdge {
                    snapshot,
                    u: e.u,
                    v: e.v,
                });
            }
        }
        if path.vertex_count() > inst.k {
            return Some(VerifyFailure::TooManyVertices {
                snapshot,
                count: path.vertex_count(),
                k: inst.k,
            });
        }
    }
    let profiles: Vec<PathProfile> = seq.paths.iter().map(PathProfile::new).collect();
    for (i, w) in profiles.windows(2).enumerate() {
        let d = w[0].distance(&w[1], inst.measure, inst.s, inst.t);
        if d > inst.ell {
            return Some(VerifyFailure::DistanceExceeded {
                transition: i + 1,
                distance: d,
                ell: inst.ell,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Measure, StPath, TemporalGraph};

    // s = 0, a = 1, t = 2
    fn triangle(measure: Measure, ell: usize, second: Vec<(usize, usize)>) -> ProblemInstance {
        let g = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2), (0, 2)], second]).unwrap();
        ProblemInstance::new(g, 0, 2, 3, ell, measure).unwrap()
    }

    fn seq(paths: &[&[usize]]) -> PathSequence {
        PathSequence::new(paths.iter().map(|p| StPath::from_indices(p).unwrap()).collect())
    }

    #[test]
    fn accepts_valid_witness() {
        let inst = triangle(Measure::Viv, 0, vec![(0, 1), (1, 2), (0, 2)]);
        assert!(verify_solution(&inst, &seq(&[&[0, 2], &[0, 1, 2]])).accepted());
    }

    #[test]
    fn rejects_missing_edge() {
        let inst = triangle(Measure::Vdv, 5, vec![(0, 2)]);
        let report = verify_solution(&inst, &seq(&[&[0, 1, 2], &[0, 1, 2]]));
        let msg = report.failure.unwrap().to_string();
        assert!(msg.starts_with("non-edge at snapshot 2"), "{msg}");
    }

    #[test]
    fn rejects_distance_over_budget() {
        let inst = triangle(Measure::Viv, 0, vec![(0, 1), (1, 2), (0, 2)]);
        let report = verify_solution(&inst, &seq(&[&[0, 1, 2], &[0, 1, 2]]));
        assert_eq!(
            report.failure.unwrap().to_string(),
            "distance 1 > ℓ=0 at transition 1"
        );
    }

    #[test]
    fn rejects_wrong_length_endpoints_and_budget() {
        let inst = triangle(Measure::Vdv, 5, vec![(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            verify_solution(&inst, &seq(&[&[0, 2]])).failure,
            Some(VerifyFailure::WrongLength { expected: 2, got: 1 })
        ));
        assert!(matches!(
            verify_solution(&inst, &seq(&[&[1, 2], &[0, 2]])).failure,
            Some(VerifyFailure::BadStart { snapshot: 1, .. })
        ));
        let tight = ProblemInstance { k: 2, ..inst };
        assert!(matches!(
            verify_solution(&tight, &seq(&[&[0, 2], &[0, 1, 2]])).failure,
            Some(VerifyFailure::TooManyVertices { snapshot: 2, count: 3, k: 2 })
        ));
    }
}
