use super::dp::robust_paths;
use crate::error::{Error, Result};
use crate::model::{Measure, PathSequence, ProblemInstance};
use crate::reductions::{lift_witness, reduce_eie_to_viv};
use crate::solvers::layered_search;

/// Solver for the intersection measures whose running time is exponential
/// only in `k`. Each snapshot contributes a `2(k - ell)`-robust family; the
/// layered search then runs over those families alone. Edge-intersection
/// instances are first turned into vertex-intersection ones.
pub fn solve_fpt_dissimilar(inst: &ProblemInstance) -> Result<Option<PathSequence>> {
    match inst.measure {
        Measure::Viv => solve_viv(inst),
        Measure::Eie => {
            let artifact = reduce_eie_to_viv(inst)?;
            match solve_viv(&artifact.instance)? {
                None => Ok(None),
                Some(target) => lift_witness(&artifact, &target).map(Some),
            }
        }
        other => Err(Error::WrongMeasure {
            expected: "dissimilarity",
            got: other,
        }),
    }
}

fn solve_viv(inst: &ProblemInstance) -> Result<Option<PathSequence>> {
    if inst.k < 2 {
        return Ok(None);
    }
    let q = 2 * inst.k.saturating_sub(inst.ell);
    let mut layers = Vec::with_capacity(inst.tau());
    for i in 0..inst.tau() {
        if inst.graph.snapshot(i).is_empty() {
            return Ok(None);
        }
        let family = robust_paths(&inst.graph, i, inst.s, inst.t, inst.k, q)?;
        if family.paths.is_empty() {
            return Ok(None);
        }
        layers.push(family.paths);
    }
    Ok(layered_search(inst, &layers))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TemporalGraph;
    use crate::verify::verify_solution;

    fn inst(snaps: Vec<Vec<(usize, usize)>>, k: usize, ell: usize, m: Measure) -> ProblemInstance {
        ProblemInstance::new(TemporalGraph::new(3, snaps).unwrap(), 0, 2, k, ell, m).unwrap()
    }

    #[test]
    fn small_examples() {
        let tri = vec![(0, 1), (1, 2), (0, 2)];
        let path = vec![(0, 1), (1, 2)];
        let yes = inst(vec![tri.clone(), tri.clone()], 3, 0, Measure::Viv);
        let no = inst(vec![path.clone(), path], 3, 0, Measure::Viv);
        let eie = inst(vec![tri.clone(), tri], 3, 0, Measure::Eie);
        for (i, expect) in [(yes, true), (no, false), (eie, true)] {
            let got = solve_fpt_dissimilar(&i).unwrap();
            assert_eq!(got.is_some(), expect);
            if let Some(w) = got {
                assert!(verify_solution(&i, &w).accepted());
            }
        }
    }

    #[test]
    fn similarity_measures_are_rejected() {
        let i = inst(vec![vec![(0, 2)]], 2, 0, Measure::Vdv);
        assert!(matches!(
            solve_fpt_dissimilar(&i),
            Err(Error::WrongMeasure { .. })
        ));
    }
}
