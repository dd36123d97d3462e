use crate::error::{Error, Result};
use crate::model::{Measure, ProblemInstance, TemporalGraph};

/// An `r`-partite graph given by its parts and its edges between parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticoloredGraph {
    parts: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    part_of: Vec<usize>,
}

impl MulticoloredGraph {
    /// Vertices are the ids listed in `parts`, which must be disjoint. Edges
    /// must join vertices of distinct parts.
    pub fn new(parts: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let max = parts.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let mut part_of = vec![usize::MAX; max];
        for (p, part) in parts.iter().enumerate() {
            for &v in part {
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidInput(format!("vertex {v} listed in two parts")));
                }
                part_of[v] = p;
            }
        }
        let mut canon = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let pa = part_of.get(a).copied().unwrap_or(usize::MAX);
            let pb = part_of.get(b).copied().unwrap_or(usize::MAX);
            if pa == usize::MAX || pb == usize::MAX {
                return Err(Error::InvalidInput(format!("edge {a} {b} leaves the parts")));
            }
            if pa == pb {
                return Err(Error::InvalidInput(format!(
                    "edge {a} {b} lies inside part {}",
                    pa + 1
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(MulticoloredGraph {
            parts,
            edges: canon,
            part_of,
        })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Exhaustive search for a clique with one vertex per part.
    pub fn has_multicolored_clique(&self) -> bool {
        fn go(g: &MulticoloredGraph, chosen: &mut Vec<usize>) -> bool {
            let p = chosen.len();
            if p == g.parts.len() {
                return true;
            }
            for &v in &g.parts[p] {
                if chosen.iter().all(|&u| g.has_edge(u, v)) {
                    chosen.push(v);
                    if go(g, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(self, &mut Vec::new())
    }

    /// Instance ids: `s = 0`, `t = 1`, then part vertices in part order.
    fn relabel(&self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let mut id = vec![usize::MAX; self.part_of.len()];
        let mut next = 2;
        let parts = self
            .parts
            .iter()
            .map(|part| {
                part.iter()
                    .map(|&v| {
                        id[v] = next;
                        next += 1;
                        id[v]
                    })
                    .collect()
            })
            .collect();
        (id, parts)
    }

    /// Edges between two parts, renumbered.
    fn between(&self, id: &[usize], p: usize, q: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let id = id.to_vec();
        self.edges.iter().filter_map(move |&(a, b)| {
            let (pa, pb) = (self.part_of[a], self.part_of[b]);
            ((pa == p && pb == q) || (pa == q && pb == p)).then(|| (id[a], id[b]))
        })
    }
}

/// The `1 + C(r, 2)` orderings of `1..=r` obtained from the identity by
/// repeatedly swapping the ascent whose left value is smallest. The last one is
/// the reversal, and every two values are neighbors in some ordering.
pub fn permutation_schedule(r: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=r).collect();
    let mut out = vec![cur.clone()];
    loop {
        let ascent = (0..r.saturating_sub(1))
            .filter(|&j| cur[j] < cur[j + 1])
            .min_by_key(|&j| cur[j]);
        let Some(j) = ascent else {
            return out;
        };
        cur.swap(j, j + 1);
        out.push(cur.clone());
    }
}

/// Edge symmetric difference instance with one snapshot per ordering of
/// [`permutation_schedule`]: in each, the parts form a chain in that order
/// with `s` before the first and `t` after the last. YES exactly when a
/// multicolored clique exists. Budgets `k = r + 2` and `ell = 4`.
pub fn gen_from_clique(g: &MulticoloredGraph) -> Result<ProblemInstance> {
    let r = g.parts.len();
    if r < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 parts, got {r}")));
    }
    let (id, parts) = g.relabel();
    let n = 2 + parts.iter().map(Vec::len).sum::<usize>();
    let snapshots = permutation_schedule(r)
        .iter()
        .map(|perm| {
            let order: Vec<usize> = perm.iter().map(|x| x - 1).collect();
            let mut edges: Vec<(usize, usize)> = Vec::new();
            edges.extend(parts[order[0]].iter().map(|&v| (0, v)));
            edges.extend(parts[order[r - 1]].iter().map(|&v| (v, 1)));
            for w in order.windows(2) {
                edges.extend(g.between(&id, w[0], w[1]));
            }
            edges
        })
        .collect();
    let graph = TemporalGraph::new(n, snapshots)?;
    ProblemInstance::new(graph, 0, 1, r + 2, 4, Measure::Ede)
}

/// Vertex symmetric difference instance with `ell = 1` whose underlying graph
/// has a vertex cover with `r + 5` vertices. Odd snapshots route through every
/// part along a spine `a_0..a_r`; the even snapshot for a triple `(i, v, j)`
/// with `i < j` and `v` in part `i` checks, via `x`, that the chosen vertex of
/// part `j` is adjacent to `v` whenever `v` is chosen. Budget `k = 2r + 4`.
///
/// Ids: `s = 0`, `t = 1`, part vertices, then `a_0..a_r`, `x`, `y`.
pub fn gen_from_clique_vc(g: &MulticoloredGraph) -> Result<ProblemInstance> {
    let r = g.parts.len();
    if r < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 parts, got {r}")));
    }
    if let Some(p) = g.parts.iter().position(Vec::is_empty) {
        return Err(Error::InvalidInput(format!("part {} is empty", p + 1)));
    }
    let (_, parts) = g.relabel();
    let base = 2 + parts.iter().map(Vec::len).sum::<usize>();
    let a = |i: usize| base + i;
    let (x, y) = (base + r + 1, base + r + 2);
    let n = base + r + 3;
    let (s, t) = (0, 1);

    let mut odd = vec![(s, a(0)), (a(r), t)];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            odd.push((a(i), v));
            odd.push((a(i + 1), v));
        }
    }

    let mut snapshots = Vec::new();
    // parts are 0-based here; spine vertex a(p + 1) closes part p
    for i in 0..r {
        for (vi, &v) in parts[i].iter().enumerate() {
            let orig_v = g.parts[i][vi];
            for j in i + 1..r {
                let rest: Vec<usize> = (0..r).filter(|&p| p != i && p != j).collect();
                let mut even = vec![(s, a(i + 1)), (a(0), t)];
                even.extend(parts[i].iter().map(|&w| (a(i + 1), w)));
                even.push((v, x));
                even.extend(parts[i].iter().filter(|&&w| w != v).map(|&w| (w, y)));
                for (wi, &w) in parts[j].iter().enumerate() {
                    if g.has_edge(orig_v, g.parts[j][wi]) {
                        even.push((x, w));
                    }
                    even.push((y, w));
                    even.push((a(j + 1), w));
                }
                even.push((a(j + 1), a(rest[0] + 1)));
                for (m, &p) in rest.iter().enumerate() {
                    let next = rest.get(m + 1).map_or(a(0), |&q| a(q + 1));
                    for &w in &parts[p] {
                        even.push((a(p + 1), w));
                        even.push((next, w));
                    }
                }
                snapshots.push(odd.clone());
                snapshots.push(even);
            }
        }
    }
    let graph = TemporalGraph::new(n, snapshots)?;
    ProblemInstance::new(graph, s, t, 2 * r + 4, 1, Measure::Vdv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::VertexId;
    use crate::solvers::solve_xp;

    fn triangle_parts(edges: Vec<(usize, usize)>) -> MulticoloredGraph {
        MulticoloredGraph::new(vec![vec![0], vec![1], vec![2]], edges).unwrap()
    }

    #[test]
    fn schedule_small_cases() {
        assert_eq!(permutation_schedule(2), vec![vec![1, 2], vec![2, 1]]);
        let s3 = permutation_schedule(3);
        assert_eq!(s3.len(), 4);
        assert_eq!(s3.last().unwrap(), &vec![3, 2, 1]);
        for r in 2..=6 {
            let s = permutation_schedule(r);
            assert_eq!(s.len(), 1 + r * (r - 1) / 2);
            assert_eq!(s[0], (1..=r).collect::<Vec<_>>());
            assert_eq!(s.last().unwrap(), &(1..=r).rev().collect::<Vec<_>>());
            for a in 1..=r {
                for b in a + 1..=r {
                    assert!(s.iter().any(|p| p.windows(2).any(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))));
                }
            }
        }
    }

    #[test]
    fn intra_part_edges_are_rejected() {
        assert!(MulticoloredGraph::new(vec![vec![0, 1], vec![2]], vec![(0, 1)]).is_err());
    }

    #[test]
    fn clique_generator_examples() {
        let two = MulticoloredGraph::new(vec![vec![0], vec![1]], vec![(0, 1)]).unwrap();
        assert!(solve_xp(&gen_from_clique(&two).unwrap()).unwrap().is_some());
        let full = triangle_parts(vec![(0, 1), (1, 2), (0, 2)]);
        assert!(solve_xp(&gen_from_clique(&full).unwrap()).unwrap().is_some());
        let missing = triangle_parts(vec![(0, 1), (1, 2)]);
        assert!(solve_xp(&gen_from_clique(&missing).unwrap()).unwrap().is_none());
        assert_eq!(gen_from_clique(&full).unwrap().tau(), 4);
    }

    #[test]
    fn vertex_cover_generator_examples() {
        let full = triangle_parts(vec![(0, 1), (1, 2), (0, 2)]);
        let inst = gen_from_clique_vc(&full).unwrap();
        assert_eq!((inst.k, inst.ell, inst.tau()), (10, 1, 6));
        assert!(solve_xp(&inst).unwrap().is_some());
        let missing = triangle_parts(vec![(0, 1), (1, 2)]);
        assert!(solve_xp(&gen_from_clique_vc(&missing).unwrap()).unwrap().is_none());
    }

    #[test]
    fn spine_and_specials_cover_every_edge() {
        let g = MulticoloredGraph::new(
            vec![vec![0, 1], vec![2, 3], vec![4], vec![5, 6]],
            vec![(0, 2), (1, 3), (2, 4), (0, 4), (4, 5), (3, 6), (0, 6)],
        )
        .unwrap();
        let inst = gen_from_clique_vc(&g).unwrap();
        let base = 2 + 7;
        let cover: Vec<usize> = [0, 1].into_iter().chain(base..base + 4 + 3).collect();
        for snap in inst.graph.snapshots() {
            for e in snap {
                assert!(cover.contains(&e.u.index()) || cover.contains(&e.v.index()));
            }
        }
        assert_eq!(inst.s, VertexId(0));
    }
}
