//! Benchmark suites: cross-solver agreement on small random instances and
//! running-time scaling of the fixed-parameter solver in the number of
//! snapshots.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::model::{Measure, PathSequence, ProblemInstance};
use crate::reductions::random_instance;
use crate::repsets::solve_fpt_dissimilar;
use crate::solvers::{solve_naive, solve_xp};
use crate::verify::verify_solution;

pub const CSV_HEADER: &str = "id,n,tau,k,ell,measure,algo,answer,ms";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub id: String,
    pub n: usize,
    pub tau: usize,
    pub k: usize,
    pub ell: usize,
    pub measure: Measure,
    pub algo: &'static str,
    pub yes: bool,
    pub ms: f64,
}

impl BenchRow {
    fn new(id: &str, inst: &ProblemInstance, algo: &'static str, yes: bool, ms: f64) -> Self {
        BenchRow {
            id: id.to_string(),
            n: inst.n(),
            tau: inst.tau(),
            k: inst.k,
            ell: inst.ell,
            measure: inst.measure,
            algo,
            yes,
            ms,
        }
    }

    /// One CSV line without trailing newline. With `timing` off the time
    /// column is `0`, which makes the output reproducible byte for byte.
    pub fn csv(&self, timing: bool) -> String {
        let mut out = format!(
            "{},{},{},{},{},{},{},{},",
            self.id,
            self.n,
            self.tau,
            self.k,
            self.ell,
            self.measure,
            self.algo,
            if self.yes { "yes" } else { "no" }
        );
        if timing {
            let _ = write!(out, "{:.3}", self.ms);
        } else {
            out.push('0');
        }
        out
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

#[derive(Debug, Clone)]
pub struct AgreementReport {
    pub rows: Vec<BenchRow>,
    pub instances: usize,
    /// Human-readable description of every disagreement or rejected witness.
    pub disagreements: Vec<String>,
}

/// Random instance number `index` of the agreement suite: `n <= 8`,
/// `tau <= 4`, `k <= 6`, measures in rotation.
pub fn agreement_instance(seed: u64, index: usize) -> Result<ProblemInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let measure = Measure::ALL[index % 4];
    let n = rng.random_range(2..=8);
    let tau = rng.random_range(1..=4);
    let pairs = n * (n - 1) / 2;
    let m = rng.random_range(pairs / 3..=pairs);
    let k = rng.random_range(1..=6);
    let ell = if measure.is_similarity() {
        rng.random_range(0..=4)
    } else {
        rng.random_range(0..=k)
    };
    random_instance(n, tau, m, k, ell, measure, rng.random())
}

fn check(inst: &ProblemInstance, id: &str, algo: &str, w: &Option<PathSequence>, out: &mut Vec<String>) {
    if let Some(seq) = w {
        let report = verify_solution(inst, seq);
        if !report.accepted() {
            out.push(format!("{id}: {algo} witness {report}"));
        }
    }
}

/// Runs the naive, XP and (for intersection measures) FPT solvers on
/// `count` random instances and compares their answers.
pub fn agreement_suite(seed: u64, count: usize) -> Result<AgreementReport> {
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for index in 0..count {
        let inst = agreement_instance(seed, index)?;
        let id = format!("agree-{index}");
        let (naive, ms) = timed(|| solve_naive(&inst));
        rows.push(BenchRow::new(&id, &inst, "naive", naive.is_some(), ms));
        check(&inst, &id, "naive", &naive, &mut disagreements);
        let (xp, ms) = timed(|| solve_xp(&inst));
        let xp = xp?;
        rows.push(BenchRow::new(&id, &inst, "xp", xp.is_some(), ms));
        check(&inst, &id, "xp", &xp, &mut disagreements);
        if xp.is_some() != naive.is_some() {
            disagreements.push(format!("{id}: naive and xp disagree"));
        }
        if inst.measure.is_dissimilarity() {
            let (fpt, ms) = timed(|| solve_fpt_dissimilar(&inst));
            let fpt = fpt?;
            rows.push(BenchRow::new(&id, &inst, "fpt", fpt.is_some(), ms));
            check(&inst, &id, "fpt", &fpt, &mut disagreements);
            if fpt.is_some() != naive.is_some() {
                disagreements.push(format!("{id}: naive and fpt disagree"));
            }
        }
    }
    Ok(AgreementReport {
        rows,
        instances: count,
        disagreements,
    })
}

pub const SCALING_TAUS: [usize; 3] = [50, 100, 200];
pub const SCALING_TOLERANCE: f64 = 1.5;

#[derive(Debug, Clone)]
pub struct ScalingReport {
    /// Fastest of the repeated runs for each `tau`.
    pub rows: Vec<BenchRow>,
    /// Time per snapshot relative to the smallest `tau`.
    pub ratios: Vec<(usize, f64)>,
}

impl ScalingReport {
    /// Whether every per-snapshot cost is within [`SCALING_TOLERANCE`] of the
    /// smallest instance's, in either direction.
    pub fn linear(&self) -> bool {
        self.ratios
            .iter()
            .all(|&(_, r)| (1.0 / SCALING_TOLERANCE..=SCALING_TOLERANCE).contains(&r))
    }
}

/// FPT solver on random vertex-intersection instances with `n = 40`, 120
/// edges per snapshot, `k = 5`, `ell = 1` and growing `tau`. Each size is run
/// `repeats` times and the fastest run is kept.
pub fn scaling_suite(seed: u64, repeats: usize) -> Result<ScalingReport> {
    let mut rows = Vec::new();
    for tau in SCALING_TAUS {
        let inst = random_instance(40, tau, 120, 5, 1, Measure::Viv, seed)?;
        let mut best = f64::INFINITY;
        let mut yes = false;
        for _ in 0..repeats.max(1) {
            let (res, ms) = timed(|| solve_fpt_dissimilar(&inst));
            yes = res?.is_some();
            best = best.min(ms);
        }
        rows.push(BenchRow::new(&format!("scale-{tau}"), &inst, "fpt", yes, best));
    }
    let base = rows[0].ms / rows[0].tau as f64;
    let ratios = rows
        .iter()
        .map(|r| (r.tau, (r.ms / r.tau as f64) / base))
        .collect();
    Ok(ScalingReport { rows, ratios })
}
