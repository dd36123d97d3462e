use super::matroid::{determinant, RowBasis, UniformMatroidRep};
use crate::error::{Error, Result};
use crate::model::{StPath, VertexId};

/// A vertex set together with a path whose vertices it records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessedSet {
    /// Sorted, distinct.
    pub elements: Vec<VertexId>,
    pub witness: StPath,
}

impl WitnessedSet {
    /// Set of the witness's vertices.
    pub fn from_path(witness: StPath) -> Self {
        let mut elements = witness.vertices().to_vec();
        elements.sort_unstable();
        WitnessedSet { elements, witness }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_disjoint(&self, other: &[VertexId]) -> bool {
        self.elements.iter().all(|x| !other.contains(x))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All `p`-subsets of `0..r` in lexicographic order.
fn subsets(r: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..p).collect();
    if p > r {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..p).rev().find(|&i| cur[i] != i + r - p) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..p {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Fixed-width bit set over a matroid universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Box<[u64]>);

impl Bits {
    pub(crate) fn empty(universe: usize) -> Self {
        Bits(vec![0; universe.div_ceil(64).max(1)].into_boxed_slice())
    }

    pub(crate) fn contains(&self, x: usize) -> bool {
        self.0[x / 64] >> (x % 64) & 1 == 1
    }

    pub(crate) fn insert(&mut self, x: usize) {
        self.0[x / 64] |= 1 << (x % 64);
    }

    pub(crate) fn with(&self, x: usize) -> Self {
        let mut out = self.clone();
        out.insert(x);
        out
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }
}

/// Positions in `sets` of a `q`-representative subfamily, first-seen order,
/// without repeated sets. Every set must have `p` elements inside the universe
/// of `matroid`, whose rank must be `p + q`.
pub(crate) fn representative_indices(
    sets: &[Bits],
    p: usize,
    q: usize,
    matroid: &UniformMatroidRep,
) -> Vec<usize> {
    let mut seen = std::collections::HashSet::with_capacity(sets.len());
    let mut distinct = Vec::new();
    let mut used = Bits::empty(matroid.universe());
    for (i, b) in sets.iter().enumerate() {
        if seen.insert(b) {
            distinct.push(i);
            used.union_with(b);
        }
    }
    if distinct.is_empty() {
        return distinct;
    }
    let q_eff = q.min(used.count() - p);
    let r = p + q_eff;
    if distinct.len() as u128 <= binomial(r, p) {
        return distinct;
    }
    let field = matroid.field();
    let row_sets = subsets(r, p);
    let mut basis = RowBasis::new(field, row_sets.len());
    let mut out = Vec::new();
    for i in distinct {
        let cols: Vec<&[u64]> = sets[i].ones().map(|x| &matroid.column(x)[..r]).collect();
        let minors: Vec<u64> = row_sets
            .iter()
            .map(|rows| {
                let m = rows
                    .iter()
                    .map(|&i| cols.iter().map(|c| c[i]).collect())
                    .collect();
                determinant(field, m)
            })
            .collect();
        if basis.insert(minors) {
            out.push(i);
            if basis.len() == row_sets.len() {
                break;
            }
        }
    }
    out
}

/// A `q`-representative subfamily of `family`: whenever some member is
/// disjoint from a set `Y` with `|Y| <= q`, so is some returned member. All sets
/// must have the same size `p`, the matroid must have rank `p + q`, and at most
/// `C(p + q, p)` sets are returned, in first-seen order.
///
/// Sets are embedded as the vectors of all `p x p` minors of their column
/// submatrices; the sets whose vectors form a greedy row basis are kept.
/// Elements that appear in no set are dropped from the universe first, which
/// shrinks the effective rank without changing the answer.
pub fn compute_representative(
    family: &[WitnessedSet],
    q: usize,
    matroid: &UniformMatroidRep,
) -> Result<Vec<WitnessedSet>> {
    let Some(first) = family.first() else {
        return Ok(Vec::new());
    };
    let p = first.len();
    if matroid.rank() != p + q {
        return Err(Error::InvalidInput(format!(
            "matroid rank {} differs from p + q = {}",
            matroid.rank(),
            p + q
        )));
    }
    let mut sets = Vec::with_capacity(family.len());
    for set in family {
        if set.len() != p {
            return Err(Error::InvalidInput(format!(
                "family mixes set sizes {p} and {}",
                set.len()
            )));
        }
        let mut bits = Bits::empty(matroid.universe());
        for x in &set.elements {
            if x.index() >= matroid.universe() {
                return Err(Error::OutsideUniverse {
                    element: x.index(),
                    universe: matroid.universe(),
                });
            }
            bits.insert(x.index());
        }
        sets.push(bits);
    }
    Ok(representative_indices(&sets, p, q, matroid)
        .into_iter()
        .map(|i| family[i].clone())
        .collect())
}
