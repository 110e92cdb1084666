//! Grid sweeps over the verifiers, emitting one JSON record per point.

pub mod checks;
pub mod config;
pub mod oracles;

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomology::{
    verify_filtration, verify_full_containment, verify_layer_dims, verify_lemma41,
    verify_numerology, verify_thm14,
};
use crate::error::{Error, Result};
use crate::orth::OLabel;
use crate::partition::Partition;
use crate::report::{GammaReport, ReportRecord, Summary};
use crate::tensor::lr_cache;
use crate::theta::{in_stable_range, OmegaParams, ThetaParams};
use crate::zuckerman::{
    labels_up_to, verify_prop32, verify_thm11, verify_thm11_iii, verify_thm12, AssemblyMode,
};

pub use config::{ParamRange, RunConfig};
use oracles::OracleBounds;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Prop32,
    Thm11,
    Thm12,
    Thm14,
    Lemma31,
    Lemma41,
    InfcharCorr,
    Numerology,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Prop32,
        Suite::Thm11,
        Suite::Thm12,
        Suite::Thm14,
        Suite::Lemma31,
        Suite::Lemma41,
        Suite::InfcharCorr,
        Suite::Numerology,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop32 => "prop32",
            Suite::Thm11 => "thm11",
            Suite::Thm12 => "thm12",
            Suite::Thm14 => "thm14",
            Suite::Lemma31 => "lemma31",
            Suite::Lemma41 => "lemma41",
            Suite::InfcharCorr => "infchar_corr",
            Suite::Numerology => "numerology",
            Suite::Oracles => "oracles",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One unit of work in a sweep.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Prop32(OmegaParams, OLabel),
    Thm11(ThetaParams, usize),
    Seesaw(ThetaParams, usize),
    Thm11Infchar(usize, usize),
    Thm12(OmegaParams, usize, OLabel),
    Thm14(usize, usize, usize, usize, OLabel),
    FullContainment(usize, usize, usize),
    Lemma31(OmegaParams, OLabel),
    Lemma41(usize, usize, usize, usize, Partition),
    Filtration(usize, usize, usize, usize),
    LayerDims(usize, usize),
    InfcharCorr(OmegaParams, OLabel),
    Numerology(usize, usize),
    Oracle(usize),
    ReductionExamples,
    Reduction(ThetaParams),
}

/// Resolved grid settings.
#[derive(Clone, Debug)]
struct Grid {
    p: Vec<usize>,
    n: Vec<usize>,
    m: Vec<usize>,
    r: Option<Vec<usize>>,
    rprime: Vec<usize>,
    t: Option<Vec<usize>>,
    mu_size: u32,
    mu_depth: Option<usize>,
    cutoff: u32,
    max_rank: usize,
    mode: AssemblyMode,
}

fn pick(r: &Option<ParamRange>, a: usize, b: usize) -> Vec<usize> {
    r.as_ref().map_or_else(|| (a..=b).collect(), |x| x.values().to_vec())
}

impl Grid {
    fn new(suite: Suite, cfg: &RunConfig) -> Grid {
        let (n_hi, m_hi) = match suite {
            Suite::Numerology => (12, 12),
            Suite::Thm12 => (6, 8),
            _ => (10, 10),
        };
        Grid {
            p: pick(&cfg.p, 1, 2),
            n: pick(&cfg.n, 1, n_hi),
            m: pick(&cfg.m, 1, m_hi),
            r: cfg.r.as_ref().map(|x| x.values().to_vec()),
            rprime: pick(&cfg.rprime, 0, 10),
            t: cfg.t.as_ref().map(|x| x.values().to_vec()),
            mu_size: cfg.mu_size.unwrap_or(3),
            mu_depth: cfg.mu_depth,
            cutoff: cfg.cutoff.unwrap_or(3),
            max_rank: cfg.max_rank.unwrap_or(10),
            mode: cfg.mode(),
        }
    }

    fn r_values(&self, lo: usize, hi: usize) -> Vec<usize> {
        match &self.r {
            Some(v) => v.iter().copied().filter(|&r| r >= lo && r <= hi).collect(),
            None => (lo..=hi).collect(),
        }
    }

    fn mu_labels(&self, rank: usize) -> Vec<OLabel> {
        labels_up_to(rank, self.mu_size)
            .into_iter()
            .filter(|x| self.mu_depth.is_none_or(|d| x.lam().depth() <= d))
            .collect()
    }

    /// `(p, n, r, r')` with the trivial lift to `O(n, r+r')` stable and
    /// `n + r ≤ max_rank`.
    fn omega_params(&self) -> Vec<OmegaParams> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &n in &self.n {
                for r in self.r_values(1, self.max_rank.saturating_sub(n)) {
                    for &rp in &self.rprime {
                        let op = OmegaParams::new(p, n, r, rp);
                        if op.theta().check().is_ok() {
                            out.push(op);
                        }
                    }
                }
            }
        }
        out
    }

    fn stable_theta(&self) -> Vec<ThetaParams> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &n in &self.n {
                for &m in &self.m {
                    let t = ThetaParams::new(p, n, m);
                    if t.check().is_ok() {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    fn aq_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &n in &self.n {
                for &m in &self.m {
                    if p >= 1 && 2 * p <= n && n <= m && 2 * p < m && (n + m) % 2 == 0 {
                        out.push((p, n, m));
                    }
                }
            }
        }
        out
    }
}

/// The grid points of a suite, in emission order.
pub fn grid_points(suite: Suite, cfg: &RunConfig) -> Vec<Point> {
    let g = Grid::new(suite, cfg);
    let mut out = Vec::new();
    match suite {
        Suite::Prop32 => {
            for op in g.omega_params() {
                for mu in g.mu_labels(op.rprime) {
                    out.push(Point::Prop32(op, mu));
                }
            }
        }
        Suite::Thm11 => {
            let mut totals = Vec::new();
            for t in g.stable_theta() {
                for r in g.r_values(1, t.m - 1) {
                    out.push(Point::Thm11(t, r));
                    out.push(Point::Seesaw(t, r));
                }
                totals.push((t.p, t.n + t.m));
            }
            totals.sort_unstable();
            totals.dedup();
            out.extend(totals.into_iter().map(|(p, total)| Point::Thm11Infchar(p, total)));
        }
        Suite::Thm12 => {
            for op in g.omega_params() {
                let ts: Vec<usize> = match &g.t {
                    Some(v) => v.iter().copied().filter(|&t| t >= 1 && t < op.r).collect(),
                    None => (1..op.r).collect(),
                };
                for t in ts {
                    for mu in g.mu_labels(op.rprime) {
                        out.push(Point::Thm12(op, t, mu));
                    }
                }
            }
        }
        Suite::Thm14 => {
            for (p, n, m) in g.aq_triples() {
                out.push(Point::FullContainment(p, n, m));
                for r in g.r_values(0, m) {
                    for mu in g.mu_labels(m - r) {
                        out.push(Point::Thm14(p, n, r, m, mu));
                    }
                }
            }
        }
        Suite::Lemma31 | Suite::InfcharCorr => {
            for op in g.omega_params() {
                for mu in g.mu_labels(op.rprime) {
                    out.push(if suite == Suite::Lemma31 {
                        Point::Lemma31(op, mu)
                    } else {
                        Point::InfcharCorr(op, mu)
                    });
                }
            }
        }
        Suite::Lemma41 => {
            let mut dims = Vec::new();
            for (p, n, m) in g.aq_triples() {
                for r in g.r_values(0, m) {
                    for mu in Partition::all_up_to(g.mu_size, p) {
                        out.push(Point::Lemma41(p, n, r, m, mu));
                    }
                    out.push(Point::Filtration(p, n, r, m));
                    dims.push((p, m - r));
                }
            }
            dims.sort_unstable();
            dims.dedup();
            out.extend(dims.into_iter().map(|(p, q)| Point::LayerDims(p, q)));
        }
        Suite::Numerology => {
            for &p in &g.p {
                for &n in g.n.iter().filter(|&&n| p >= 1 && 2 * p <= n) {
                    out.push(Point::Numerology(p, n));
                }
            }
        }
        Suite::Oracles => {
            out.extend((0..8).map(Point::Oracle));
            out.push(Point::ReductionExamples);
            for &p in &g.p {
                for &n in &g.n {
                    for &m in g.m.iter().filter(|&&m| m >= n) {
                        let t = ThetaParams::new(p, n, m);
                        if !in_stable_range(t) && (n + m) % 2 == 0 {
                            out.push(Point::Reduction(t));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Evaluates one point.
pub fn run_point(point: &Point, cfg: &RunConfig) -> GammaReport {
    let g = Grid::new(Suite::Oracles, cfg);
    let (cutoff, mode) = (g.cutoff, g.mode);
    match point {
        Point::Prop32(op, mu) => verify_prop32(*op, mu, &[]),
        Point::Thm11(t, r) => verify_thm11(*t, *r, cutoff, mode),
        Point::Seesaw(t, r) => checks::verify_seesaw(*t, *r, cutoff),
        Point::Thm11Infchar(p, total) => verify_thm11_iii(*p, *total),
        Point::Thm12(op, t, mu) => verify_thm12(*op, *t, mu, cutoff, mode),
        Point::Thm14(p, n, r, m, mu) => verify_thm14(*p, *n, *r, *m, mu, cutoff),
        Point::FullContainment(p, n, m) => verify_full_containment(*p, *n, *m, cutoff),
        Point::Lemma31(op, mu) => checks::verify_lemma31(*op, mu),
        Point::Lemma41(p, n, r, m, mu) => verify_lemma41(*p, *n, *r, *m, mu, cutoff),
        Point::Filtration(p, n, r, m) => verify_filtration(*p, *n, *r, *m, cutoff),
        Point::LayerDims(p, q) => verify_layer_dims(*p, *q, cutoff),
        Point::InfcharCorr(op, mu) => checks::verify_infchar_corr(*op, mu),
        Point::Numerology(p, n) => verify_numerology(*p, *n),
        Point::Oracle(i) => {
            let b = OracleBounds::default();
            match i {
                0 => oracles::oracle_pinned(),
                1 => oracles::oracle_lr(b),
                2 => oracles::oracle_restriction(b),
                3 => oracles::oracle_newell_littlewood(b),
                4 => oracles::oracle_tensor(b),
                5 => oracles::oracle_branch(b),
                6 => oracles::oracle_skew_cauchy(b),
                _ => oracles::oracle_one_step(b),
            }
        }
        Point::ReductionExamples => checks::verify_reduction_examples(),
        Point::Reduction(t) => checks::verify_reduction(*t, cutoff),
    }
}

fn timed(point: &Point, cfg: &RunConfig) -> ReportRecord {
    let start = Instant::now();
    let report = run_point(point, cfg);
    let elapsed = start.elapsed().as_millis() as u64;
    ReportRecord::from_report(report, elapsed, lr_cache().stats())
}

/// Runs a suite on a bounded pool and returns its records in grid order.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Vec<ReportRecord>> {
    cfg.validate()?;
    let points = grid_points(suite, cfg);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(|| points.par_iter().map(|pt| timed(pt, cfg)).collect()))
}

/// Writes records as JSON lines and returns the verdict counts.
pub fn write_records(records: &[ReportRecord], out: &mut impl Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
        summary.add(r.verdict);
    }
    out.flush()?;
    Ok(summary)
}
