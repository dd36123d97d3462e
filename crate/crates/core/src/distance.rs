//! The four distance measures between consecutive s-t paths.

use crate::error::{Error, Result};
use crate::model::{Measure, StPath, VertexId};

/// Precomputed vertex bitset and sorted edge keys of one path, so repeated
/// distance queries against many partners stay cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProfile {
    bits: Vec<u64>,
    edges: Vec<u64>,
    vertex_count: usize,
}

impl PathProfile {
    pub fn new(path: &StPath) -> Self {
        let max = path.vertices().iter().map(|v| v.index()).max().unwrap_or(0);
        let mut bits = vec![0u64; max / 64 + 1];
        for v in path.vertices() {
            bits[v.index() / 64] |= 1 << (v.index() % 64);
        }
        let mut edges: Vec<u64> = path.edges().map(|e| e.key()).collect();
        edges.sort_unstable();
        PathProfile {
            bits,
            edges,
            vertex_count: path.vertex_count(),
        }
    }

    fn has_vertex(&self, v: VertexId) -> bool {
        self.bits
            .get(v.index() / 64)
            .is_some_and(|w| w >> (v.index() % 64) & 1 == 1)
    }

    fn shared_vertices(&self, other: &PathProfile) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn shared_edges(&self, other: &PathProfile) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.edges.len() && j < other.edges.len() {
            match self.edges[i].cmp(&other.edges[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Distance between two profiled paths that share the terminals `s`, `t`.
    pub fn distance(&self, other: &PathProfile, measure: Measure, s: VertexId, t: VertexId) -> usize {
        match measure {
            Measure::Vdv => {
                self.vertex_count + other.vertex_count - 2 * self.shared_vertices(other)
            }
            Measure::Ede => {
                self.edges.len() + other.edges.len() - 2 * self.shared_edges(other)
            }
            Measure::Viv => {
                let mut shared = self.shared_vertices(other);
                for x in [s, t] {
                    if self.has_vertex(x) && other.has_vertex(x) {
                        shared -= 1;
                    }
                }
                shared
            }
            Measure::Eie => self.shared_edges(other),
        }
    }
}

/// Distance of `p` and `q` under `measure`. Both paths must run from `s` to `t`.
pub fn distance(measure: Measure, p: &StPath, q: &StPath, s: VertexId, t: VertexId) -> Result<usize> {
    for path in [p, q] {
        if path.first() != s || path.last() != t {
            return Err(Error::TerminalMismatch {
                s: s.index(),
                t: t.index(),
            });
        }
    }
    Ok(PathProfile::new(p).distance(&PathProfile::new(q), measure, s, t))
}
