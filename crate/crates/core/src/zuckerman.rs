//! Derived Zuckerman functors on theta lifts, evaluated through Hom spaces
//! `Hom_K(F ⊗ ∧^i p, W)` for unitarizable `W`.

use serde_json::json;

use crate::error::{Error, Result};
use crate::ktype::{KTypeSum, Truncation};
use crate::orth::OLabel;
use crate::partition::Partition;
use crate::report::{GammaReport, Verdict};
use crate::tensor::{restrict_gl, skew_cauchy, stable_o_branch_ext, tensor};
use crate::theta::{
    in_stable_range, infchar_theta_lift, omega_ktypes, omega_multiplicity, omega_nonzero,
    theta_one_ktypes, OmegaParams, ThetaParams,
};
use crate::weight::{canonical_infchar, rho, HalfIntVec, InfChar};

/// `ξ(mu) = (mu − δ·1_p, 0)` as an untwisted label of `O(n+r)`.
pub fn xi(mu: &OLabel, op: OmegaParams) -> Result<OLabel> {
    if mu.highest_weight().depth() > op.p {
        return Err(Error::InvalidParams(format!("{mu} has more than p = {} nonzero entries", op.p)));
    }
    let delta = op.delta();
    let parts = mu
        .highest_weight()
        .padded(op.p)
        .iter()
        .map(|&x| {
            u32::try_from(x as i64 - delta)
                .map_err(|_| Error::NotDominant(format!("{mu} shifted by -{delta}")))
        })
        .collect::<Result<Vec<_>>>()?;
    OLabel::new(op.n + op.r, Partition::new(parts)?, false)
}

/// `F ⊗ ∧^i(C^n ⊗ C^r)` decomposed over `O(n) × O(r)`, where `F` is a label
/// of `O(n+r)`.
pub fn gamma_source(f: &OLabel, i: usize, n: usize) -> Result<KTypeSum> {
    let r = f
        .rank()
        .checked_sub(n)
        .ok_or_else(|| Error::InvalidRank(format!("{f} has rank below n = {n}")))?;
    let f_res = stable_o_branch_ext(f, n, r)?;
    let mut wedge = KTypeSum::new();
    for (nu, nu_t) in skew_cauchy(i as u32, n, r)? {
        wedge.add_sum(&restrict_gl(&nu, n)?.outer(&restrict_gl(&nu_t, r)?), 1);
    }
    let mut out = KTypeSum::new();
    for (a, ma) in f_res.iter() {
        for (b, mb) in wedge.iter() {
            let left = tensor(&a[0], &b[0])?;
            let right = tensor(&a[1], &b[1])?;
            out.add_sum(&left.outer(&right), ma * mb);
        }
    }
    Ok(out)
}

/// Smallest cutoff of `truncation` under which every term of `x` is
/// visible.
pub fn required_cutoff(x: &KTypeSum, truncation: Truncation) -> u32 {
    x.iter()
        .map(|(k, _)| truncation.degree(k).max(0) as u32)
        .max()
        .unwrap_or(0)
}

/// `Σ_τ [x : τ]·[w : τ]`. Fails if `w` is truncated below a term of `x`.
pub fn hom_pairing(x: &KTypeSum, w: &KTypeSum) -> Result<u64> {
    if let Some(t) = w.truncation() {
        let need = required_cutoff(x, t);
        if need > t.cutoff {
            return Err(Error::CutoffTooSmall {
                have: t.cutoff,
                need,
            });
        }
    }
    Ok(x.iter().map(|(k, m)| m * w.get(k)).sum())
}

/// `dim Hom_{O(n)×O(r)}(F ⊗ ∧^i p, W)`.
pub fn hom_dim_gamma(f: &OLabel, i: usize, n: usize, w: &KTypeSum) -> Result<u64> {
    if w.is_empty() && w.truncation().is_none() {
        return Ok(0);
    }
    hom_pairing(&gamma_source(f, i, n)?, w)
}

/// The same Hom dimension with `W = Ω(mu)`, evaluated termwise and so
/// without truncation.
pub fn hom_dim_against_omega(f: &OLabel, i: usize, op: OmegaParams, mu: &OLabel) -> Result<u64> {
    let x = gamma_source(f, i, op.n)?;
    let mut total = 0;
    for (k, m) in x.iter() {
        total += m * omega_multiplicity(op, mu, k)?;
    }
    Ok(total)
}

fn omega_json(op: OmegaParams, mu: &OLabel) -> serde_json::Value {
    json!({"p": op.p, "n": op.n, "r": op.r, "rprime": op.rprime, "mu": mu.syntax()})
}

/// Brute-force check that `Γ^{pr}(Ω(mu)) = d^p ξ(mu)`: the Hom dimension at
/// degree `pr` is 1 for `d^p ξ(mu)` and 0 for its determinant twist.
/// `extra_degrees` are evaluated for the expected candidate and reported
/// without affecting the verdict.
pub fn verify_prop32(op: OmegaParams, mu: &OLabel, extra_degrees: &[usize]) -> GammaReport {
    let report = GammaReport::new("prop32", omega_json(op, mu));
    match prop32_inner(op, mu, extra_degrees, report.clone()) {
        Ok(r) => r,
        Err(e) => report.from_error(&e),
    }
}

fn prop32_inner(
    op: OmegaParams,
    mu: &OLabel,
    extra_degrees: &[usize],
    mut report: GammaReport,
) -> Result<GammaReport> {
    let (c, regular) = infchar_theta_lift(op, mu)?;
    if !regular {
        return Ok(report.skipped(format!("singular infinitesimal character {c}")));
    }
    let base = xi(mu, op)?;
    let expected = base.twist(op.p % 2 == 1);
    let other = expected.det_twist();
    let degree = op.p * op.r;
    let hom = hom_dim_against_omega(&expected, degree, op, mu)?;
    let hom_other = if other == expected {
        0
    } else {
        hom_dim_against_omega(&other, degree, op, mu)?
    };
    let mut extra = serde_json::Map::new();
    for &i in extra_degrees {
        if i == degree || i > op.n * op.r {
            continue;
        }
        let h = hom_dim_against_omega(&expected, i, op, mu)?;
        extra.insert(i.to_string(), json!(h));
    }
    report.candidate = Some(expected.syntax());
    report.degree = Some(degree);
    report.hom_dim = Some(hom);
    let ok = hom == 1 && hom_other == 0;
    let report = report
        .with_details(json!({
            "infchar": c.to_string(),
            "twist": other.syntax(),
            "twist_hom_dim": hom_other,
            "other_degrees": extra,
        }))
        .decide(
            ok,
            false,
            (!ok).then(|| format!("hom dims {hom} at {expected}, {hom_other} at {other}")),
        );
    Ok(report)
}

/// Same check with `W = Ω(mu)` truncated at `cutoff`; a cutoff below what
/// `F ⊗ ∧^{pr} p` reaches gives a skipped report.
pub fn verify_prop32_truncated(op: OmegaParams, mu: &OLabel, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("prop32", omega_json(op, mu)).with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        let (c, regular) = infchar_theta_lift(op, mu)?;
        if !regular {
            return Ok(report.clone().skipped(format!("singular infinitesimal character {c}")));
        }
        let w = omega_ktypes(op, mu, cutoff)?;
        let expected = xi(mu, op)?.twist(op.p % 2 == 1);
        let other = expected.det_twist();
        let degree = op.p * op.r;
        let hom = hom_dim_gamma(&expected, degree, op.n, &w)?;
        let hom_other = hom_dim_gamma(&other, degree, op.n, &w)?;
        let mut rep = report.clone();
        rep.candidate = Some(expected.syntax());
        rep.degree = Some(degree);
        rep.hom_dim = Some(hom);
        let ok = hom == 1 && hom_other == 0;
        Ok(rep
            .with_details(json!({"twist": other.syntax(), "twist_hom_dim": hom_other}))
            .decide(ok, false, (!ok).then(|| format!("hom dims {hom} and {hom_other}"))))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// How `Γ^{pr}(Ω(mu))` is obtained during assembly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AssemblyMode {
    /// `d^p ξ(mu)` when regular and nonzero, else nothing.
    #[default]
    Formula,
    /// Hom dimensions against both determinant variants of `ξ(mu)`.
    BruteForce,
}

/// `Γ^{pr}(Ω(mu))` as a sum over `O(n+r)`.
pub fn gamma_of_omega(op: OmegaParams, mu: &OLabel, mode: AssemblyMode) -> Result<KTypeSum> {
    let mut out = KTypeSum::new();
    if mu.highest_weight().depth() > op.p || !omega_nonzero(op, mu)? {
        return Ok(out);
    }
    let (_, regular) = infchar_theta_lift(op, mu)?;
    if !regular {
        return Ok(out);
    }
    let base = xi(mu, op)?;
    match mode {
        AssemblyMode::Formula => out.add(vec![base.twist(op.p % 2 == 1)], 1),
        AssemblyMode::BruteForce => {
            let mut candidates = vec![base.clone(), base.det_twist()];
            candidates.dedup();
            for f in candidates {
                let h = hom_dim_against_omega(&f, op.p * op.r, op, mu)?;
                out.add(vec![f], h);
            }
        }
    }
    Ok(out)
}

/// All labels of `O(n)` with partition size at most `max_size`, both
/// determinant variants.
pub fn labels_up_to(n: usize, max_size: u32) -> Vec<OLabel> {
    let mut out = Vec::new();
    for lam in Partition::all_up_to(max_size, n / 2) {
        let x = OLabel::new(n, lam, false).expect("depth bounded by n/2");
        let y = x.det_twist();
        if y != x {
            out.push(y);
        }
        out.push(x);
    }
    out
}

/// `Σ_mu Γ^{pr}(Ω(mu)) ⊠ mu` over `O(m−r)`-types with `|mu| ≤ cutoff`.
pub fn gamma_theta_assembly(
    t: ThetaParams,
    r: usize,
    cutoff: u32,
    mode: AssemblyMode,
) -> Result<KTypeSum> {
    t.check()?;
    if r == 0 || r >= t.m {
        return Err(Error::InvalidParams(format!("need 0 < r < m, got r = {r}")));
    }
    let op = OmegaParams::new(t.p, t.n, r, t.m - r);
    let mut out = KTypeSum::truncated(Truncation::new(cutoff, 1, 0));
    for mu in labels_up_to(op.rprime, cutoff) {
        for (f, m) in gamma_of_omega(op, &mu, mode)?.iter() {
            out.add(vec![f[0].clone(), mu.clone()], m);
        }
    }
    Ok(out)
}

fn theta_json(t: ThetaParams, r: usize) -> serde_json::Value {
    json!({"p": t.p, "n": t.n, "m": t.m, "r": r})
}

/// `Γ^{pr}` of the restricted trivial lift against the trivial lift to
/// `O(n+r, m−r)`; when `2p > m−r` both the assembly and the prediction
/// vanish.
pub fn verify_thm11(t: ThetaParams, r: usize, cutoff: u32, mode: AssemblyMode) -> GammaReport {
    let report = GammaReport::new("thm11", theta_json(t, r)).with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        let assembled = gamma_theta_assembly(t, r, cutoff, mode)?;
        if 2 * t.p > t.m - r {
            let op = OmegaParams::new(t.p, t.n, r, t.m - r);
            let mut regular = Vec::new();
            let mut nonzero = 0;
            for mu in labels_up_to(op.rprime, cutoff) {
                if mu.highest_weight().depth() > op.p || !omega_nonzero(op, &mu)? {
                    continue;
                }
                nonzero += 1;
                if infchar_theta_lift(op, &mu)?.1 {
                    regular.push(mu.syntax());
                }
            }
            let ok = assembled.is_empty() && regular.is_empty();
            let mut rep = report.clone().with_details(json!({"nonzero_layers": nonzero}));
            rep.diff = assembled.diff(&KTypeSum::new());
            let reason = if !regular.is_empty() {
                Some(format!("regular infinitesimal character at {}", regular.join(", ")))
            } else {
                (!ok).then(|| "assembly should vanish".into())
            };
            return Ok(rep.decide(ok, true, reason));
        }
        let target = theta_one_ktypes(ThetaParams::new(t.p, t.n + r, t.m - r), cutoff)?;
        Ok(report.clone().compare_truncated(&assembled, &target))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// `Γ^{pt}` on `Ω(mu)` restricted from `O(n,r)` to `O(n,t) × O(r−t)`.
///
/// The restriction decomposes as `Σ_ν Σ_ρ [ν : ρ ⊠ mu] Ω_{n,t}(ν) ⊠ ρ` with
/// `ν` running over `O(m−t)`-types; this decomposition is checked against
/// the direct restriction first. Each `Ω_{n,t}(ν)` then contributes
/// `Γ^{pt}(Ω_{n,t}(ν))`, and the assembled sum is compared with `Ω(mu)` for
/// `O(n+t, r−t)`.
pub fn verify_thm12(
    op: OmegaParams,
    t: usize,
    mu: &OLabel,
    cutoff: u32,
    mode: AssemblyMode,
) -> GammaReport {
    let mut params = omega_json(op, mu);
    params["t"] = json!(t);
    let report = GammaReport::new("thm12", params).with_cutoff(cutoff);
    thm12_inner(op, t, mu, cutoff, mode, report.clone()).unwrap_or_else(|e| report.from_error(&e))
}

fn thm12_inner(
    op: OmegaParams,
    t: usize,
    mu: &OLabel,
    cutoff: u32,
    mode: AssemblyMode,
    mut report: GammaReport,
) -> Result<GammaReport> {
    if t == 0 || t >= op.r {
        return Err(Error::InvalidParams(format!("need 0 < t < r, got t = {t}")));
    }
    let m = op.r + op.rprime;
    let inner = OmegaParams::new(op.p, op.n, t, m - t);

    // Decomposition of the restriction through the O(m−t)-types ν.
    let whole = omega_ktypes(op, mu, cutoff)?;
    let mut direct = KTypeSum::truncated(op.truncation(cutoff));
    for (k, mult) in whole.iter() {
        for (s, m2) in stable_o_branch_ext(&k[1], t, op.r - t)?.iter() {
            direct.add(vec![k[0].clone(), s[0].clone(), s[1].clone()], mult * m2);
        }
    }
    let mut via_nu = KTypeSum::truncated(op.truncation(cutoff));
    let mut pieces = Vec::new();
    for nu in labels_up_to(m - t, cutoff) {
        let split = stable_o_branch_ext(&nu, op.r - t, op.rprime)?;
        let rhos: Vec<(OLabel, u64)> = split
            .iter()
            .filter(|(k, _)| &k[1] == mu)
            .map(|(k, c)| (k[0].clone(), c))
            .collect();
        if rhos.is_empty() {
            continue;
        }
        let om = omega_ktypes(inner, &nu, cutoff)?;
        for (k, a) in om.iter() {
            for (rho_label, c) in &rhos {
                via_nu.add(vec![k[0].clone(), k[1].clone(), rho_label.clone()], a * c);
            }
        }
        pieces.push((nu, rhos));
    }
    let seesaw = direct.diff(&via_nu);
    if !seesaw.is_empty() {
        report.diff = seesaw;
        return Ok(report.decide(false, false, Some("restriction does not split through O(m−t)".into())));
    }

    let mut assembled = KTypeSum::truncated(OmegaParams::new(op.p, op.n + t, op.r - t, op.rprime).truncation(cutoff));
    for (nu, rhos) in &pieces {
        for (g, a) in gamma_of_omega(inner, nu, mode)?.iter() {
            for (rho_label, c) in rhos {
                assembled.add(vec![g[0].clone(), rho_label.clone()], a * c);
            }
        }
    }
    let shifted = OmegaParams::new(op.p, op.n + t, op.r - t, op.rprime);
    if !in_stable_range(shifted.theta()) {
        report.diff = assembled.diff(&KTypeSum::new());
        let ok = assembled.is_empty();
        return Ok(report.decide(ok, true, (!ok).then(|| "assembly should vanish".into())));
    }
    let target = omega_ktypes(shifted, mu, cutoff)?;
    if omega_nonzero(shifted, mu)? {
        Ok(report.compare_truncated(&assembled, &target))
    } else {
        Ok(report.compare(&assembled, &target))
    }
}

/// Infinitesimal character of the trivial lift to `O(a,b)`: the lift of a
/// lowest weight module attached to the trivial type of `O(0)`.
pub fn theta_one_infchar(p: usize, a: usize, b: usize) -> Result<InfChar> {
    let op = OmegaParams::new(p, a, b, 0);
    Ok(infchar_theta_lift(op, &OLabel::trivial(0))?.0)
}

/// `ρ_N − p·1_{N/2}`, canonicalized.
pub fn annihilator_infchar(p: usize, total: usize) -> Result<InfChar> {
    canonical_infchar(&rho(total)?.shift(-2 * p as i64), total)
}

/// Every trivial lift `θ_p^{a,b}(1)` with `a + b = total`, `a, b ≥ 2p` has
/// infinitesimal character `ρ_N − p·1_{N/2}`.
pub fn verify_thm11_iii(p: usize, total: usize) -> GammaReport {
    let report = GammaReport::new("thm11_iii", json!({"p": p, "N": total}));
    let run = || -> Result<GammaReport> {
        let expected = annihilator_infchar(p, total)?;
        let mut seen = Vec::new();
        let mut bad = Vec::new();
        for a in 2 * p..=total.saturating_sub(2 * p) {
            let b = total - a;
            if !in_stable_range(ThetaParams::new(p, a, b)) {
                continue;
            }
            let c = theta_one_infchar(p, a, b)?;
            if c != expected {
                bad.push(format!("({a},{b}): {c}"));
            }
            seen.push(a);
        }
        if seen.is_empty() {
            return Ok(report.clone().skipped("no stable (a,b) with a+b = N"));
        }
        let zero = canonical_infchar(&HalfIntVec::default(), 0)?;
        let via_corr = crate::theta::thm11_infchar_corr(&zero, 0, total, p)?;
        if via_corr != expected {
            bad.push(format!("correspondence from so(0): {via_corr}"));
        }
        let ok = bad.is_empty();
        Ok(report
            .clone()
            .with_details(json!({"infchar": expected.to_string(), "a_values": seen}))
            .decide(ok, false, (!ok).then(|| bad.join("; "))))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// Verdict helper used by tests and suites.
pub fn is_pass(v: Verdict) -> bool {
    matches!(v, Verdict::Match | Verdict::VanishMatch)
}
