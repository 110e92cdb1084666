//! Dimension-conservation and symmetry checks for the combinatorial kernel.

use serde_json::json;

use crate::error::Result;
use crate::ktype::{KTypeSum, TermDiff};
use crate::orth::{branch_one_step, OLabel};
use crate::partition::Partition;
use crate::report::GammaReport;
use crate::tensor::{
    gl_dim, littlewood_restrict, lr_coeff, lr_product, newell_littlewood, restrict_gl,
    skew_cauchy, stable_o_branch, stable_o_branch_ext, tensor,
};
use crate::zuckerman::labels_up_to;

/// Bounds of the oracle sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_size: u32,
    pub max_rank: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_size: 6,
            max_rank: 12,
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    failures: Vec<TermDiff>,
}

impl Tally {
    fn record(&mut self, what: impl FnOnce() -> String, left: u128, right: u128) {
        self.checked += 1;
        if left != right && self.failures.len() < 20 {
            self.failures.push(TermDiff {
                ktype: what(),
                left: left as u64,
                right: right as u64,
            });
        }
    }

    /// Counts a guard rejection as skipped and propagates anything else.
    fn guarded<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(x) => Ok(Some(x)),
            Err(e) if e.is_guard() => {
                self.skipped += 1;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn report(self, check: &str, bounds: OracleBounds) -> GammaReport {
        let mut rep = GammaReport::new(
            check,
            json!({"max_size": bounds.max_size, "max_rank": bounds.max_rank}),
        )
        .with_details(json!({"checked": self.checked, "skipped": self.skipped}));
        let ok = self.failures.is_empty();
        rep.diff = self.failures;
        rep.decide(ok, false, None)
    }
}

fn sum_dim(s: &KTypeSum) -> u128 {
    s.total_dim()
}

fn run_family(check: &str, bounds: OracleBounds, f: impl FnOnce(&mut Tally) -> Result<()>) -> GammaReport {
    let mut tally = Tally::default();
    match f(&mut tally) {
        Ok(()) => tally.report(check, bounds),
        Err(e) => GammaReport::new(check, json!({})).decide(false, false, Some(e.to_string())),
    }
}

/// `c^λ_{μν} = c^λ_{νμ} = c^{λ'}_{μ'ν'}`, and `Σ_λ c^λ_{μν} dim λ = dim μ · dim ν`
/// over `GL(max_size)`.
pub fn oracle_lr(b: OracleBounds) -> GammaReport {
    run_family("oracle_lr", b, |t| {
        let all = Partition::all_up_to(b.max_size, b.max_size as usize);
        for lam in &all {
            for mu in all.iter().filter(|mu| mu.is_contained_in(lam)) {
                for nu in all.iter().filter(|nu| nu.size() + mu.size() == lam.size()) {
                    let c = lr_coeff(lam, mu, nu);
                    t.record(|| format!("c^{lam}_{{{mu},{nu}}} swapped"), c as u128, lr_coeff(lam, nu, mu) as u128);
                    let cc = lr_coeff(&lam.conjugate(), &mu.conjugate(), &nu.conjugate());
                    t.record(|| format!("c^{lam}_{{{mu},{nu}}} conjugated"), c as u128, cc as u128);
                }
            }
        }
        let g = b.max_size as usize;
        for mu in &all {
            for nu in all.iter().filter(|nu| nu.size() + mu.size() <= b.max_size) {
                let lhs: u128 = lr_product(mu, nu, g).iter().map(|(l, c)| *c as u128 * gl_dim(l, g)).sum();
                t.record(|| format!("{mu}⊗{nu} over GL({g})"), lhs, gl_dim(mu, g) * gl_dim(nu, g));
            }
        }
        Ok(())
    })
}

/// Stable and extended restriction from `GL(n)` to `O(n)`.
pub fn oracle_restriction(b: OracleBounds) -> GammaReport {
    run_family("oracle_restriction", b, |t| {
        for lam in Partition::all_up_to(b.max_size, b.max_rank) {
            for n in 1..=b.max_rank {
                if lam.depth() > n {
                    continue;
                }
                let want = gl_dim(&lam, n);
                if let Some(s) = t.guarded(littlewood_restrict(&lam, n))? {
                    t.record(|| format!("littlewood {lam} to O({n})"), sum_dim(&s), want);
                }
                let s = restrict_gl(&lam, n)?;
                t.record(|| format!("restriction {lam} to O({n})"), sum_dim(&s), want);
            }
        }
        Ok(())
    })
}

/// Stable tensor products `dim a · dim b = Σ dims`, for `|a| + |b| ≤ max_size`.
pub fn oracle_newell_littlewood(b: OracleBounds) -> GammaReport {
    run_family("oracle_newell_littlewood", b, |t| {
        for n in 1..=b.max_rank {
            let labels = labels_up_to(n, b.max_size);
            for x in &labels {
                for y in labels.iter().filter(|y| x.lam().size() + y.lam().size() <= b.max_size) {
                    if let Some(s) = t.guarded(newell_littlewood(x, y))? {
                        t.record(|| format!("{x}⊗{y} over O({n})"), sum_dim(&s), x.dim() * y.dim());
                    }
                }
            }
        }
        Ok(())
    })
}

/// Tensor products outside the stable range, `|a| + |b| ≤ 4`, `n ≤ 8`.
pub fn oracle_tensor(b: OracleBounds) -> GammaReport {
    run_family("oracle_tensor", b, |t| {
        let size = b.max_size.min(4);
        for n in 1..=b.max_rank.min(8) {
            let labels = labels_up_to(n, size);
            for x in &labels {
                for y in labels.iter().filter(|y| x.lam().size() + y.lam().size() <= size) {
                    let s = tensor(x, y)?;
                    t.record(|| format!("{x}⊗{y} over O({n})"), sum_dim(&s), x.dim() * y.dim());
                }
            }
        }
        Ok(())
    })
}

/// Branching `O(a+b) ↓ O(a) × O(b)`, strict and extended.
pub fn oracle_branch(b: OracleBounds) -> GammaReport {
    run_family("oracle_branch", b, |t| {
        for total in 2..=b.max_rank {
            for x in labels_up_to(total, b.max_size) {
                for a in 1..total {
                    let c = total - a;
                    if !x.eps() {
                        if let Some(s) = t.guarded(stable_o_branch(&x, a, c))? {
                            t.record(|| format!("{x} to O({a})×O({c})"), sum_dim(&s), x.dim());
                        }
                    }
                    let s = stable_o_branch_ext(&x, a, c)?;
                    t.record(|| format!("{x} to O({a})×O({c}), extended"), sum_dim(&s), x.dim());
                }
            }
        }
        Ok(())
    })
}

/// `dim ∧^i(C^p ⊗ C^q) = C(pq, i)` through the dual Cauchy pairs.
pub fn oracle_skew_cauchy(b: OracleBounds) -> GammaReport {
    run_family("oracle_skew_cauchy", b, |t| {
        for p in 1..b.max_rank {
            for q in 1..=b.max_rank - p {
                for i in 0..=(p * q).min(b.max_size as usize * 2) {
                    let lhs: u128 = skew_cauchy(i as u32, p, q)?
                        .iter()
                        .map(|(nu, nt)| gl_dim(nu, p) * gl_dim(nt, q))
                        .sum();
                    t.record(|| format!("∧^{i}(C^{p}⊗C^{q})"), lhs, binomial((p * q) as u128, i as u128));
                }
            }
        }
        Ok(())
    })
}

/// Interlacing `O(n) ↓ O(n−1)`.
pub fn oracle_one_step(b: OracleBounds) -> GammaReport {
    run_family("oracle_one_step", b, |t| {
        for n in 1..=b.max_rank {
            for x in labels_up_to(n, b.max_size) {
                let total: u128 = branch_one_step(&x).iter().map(OLabel::dim).sum();
                t.record(|| format!("{x} of O({n})"), total, x.dim());
            }
        }
        Ok(())
    })
}

/// Reference decompositions with known dimension splits.
pub fn oracle_pinned() -> GammaReport {
    let b = OracleBounds::default();
    run_family("oracle_pinned", b, |t| {
        let lab = OLabel::plain;
        let o3 = branch_one_step(&lab(3, &[1]));
        t.record(|| "(1) of O(3) to O(2)".into(), o3.len() as u128, 2);
        t.record(|| "3 = 2 + 1".into(), o3.iter().map(OLabel::dim).sum(), 3);

        let o4 = branch_one_step(&lab(4, &[2, 1]));
        let want: Vec<OLabel> = vec![lab(3, &[1]), lab(3, &[2]), lab(3, &[1]).det_twist(), lab(3, &[2]).det_twist()];
        let matches = want.iter().all(|w| o4.contains(w)) && o4.len() == 4;
        t.record(|| "(2,1) of O(4) to O(3)".into(), matches as u128, 1);
        t.record(|| "16 = 5+3+5+3".into(), o4.iter().map(OLabel::dim).sum(), 16);

        let sq = newell_littlewood(&lab(5, &[1]), &lab(5, &[1]))?;
        let ok = sq.get(&[lab(5, &[2])]) == 1 && sq.get(&[lab(5, &[1, 1])]) == 1 && sq.get(&[OLabel::trivial(5)]) == 1;
        t.record(|| "(1)⊗(1) over O(5)".into(), (ok && sq.len() == 3) as u128, 1);
        t.record(|| "25 = 14+10+1".into(), sq.total_dim(), 25);

        let ext = stable_o_branch(&lab(8, &[1, 1]), 4, 4)?;
        t.record(|| "(1,1) of O(8) to O(4)×O(4)".into(), ext.len() as u128, 3);
        t.record(|| "28 = 6+16+6".into(), ext.total_dim(), 28);

        let harm = stable_o_branch(&lab(6, &[2]), 3, 3)?;
        t.record(|| "(2) of O(6) to O(3)×O(3)".into(), harm.len() as u128, 4);
        t.record(|| "20 = 5+9+5+1".into(), harm.total_dim(), 20);
        Ok(())
    })
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All oracle families, in a fixed order.
pub fn all_oracles(b: OracleBounds) -> Vec<GammaReport> {
    vec![
        oracle_pinned(),
        oracle_lr(b),
        oracle_restriction(b),
        oracle_newell_littlewood(b),
        oracle_tensor(b),
        oracle_branch(b),
        oracle_skew_cauchy(b),
        oracle_one_step(b),
    ]
}
