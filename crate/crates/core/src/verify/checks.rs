//! Per-point checks on the theta side that are not Zuckerman or `A(λ)`
//! computations.

use serde_json::json;

use crate::error::{Error, Result};
use crate::ktype::KTypeSum;
use crate::orth::OLabel;
use crate::report::GammaReport;
use crate::theta::{
    in_stable_range, infchar_theta_lift, omega_ktypes, omega_nonzero, outside_stable_reduce,
    reduced_theta_one_ktypes, theta_one_ktypes, theta_one_restricted, thm11_infchar_corr,
    OmegaParams, OutsideCase, ThetaParams,
};
use crate::zuckerman::labels_up_to;

fn omega_json(op: OmegaParams, mu: &OLabel) -> serde_json::Value {
    json!({"p": op.p, "n": op.n, "r": op.r, "rprime": op.rprime, "mu": mu.syntax()})
}

/// Regularity of the lift of `mu`: for `r' ≥ 2p` regular exactly when
/// `mu_p ≥ δ`, for `r' < 2p` always singular.
pub fn verify_lemma31(op: OmegaParams, mu: &OLabel) -> GammaReport {
    let report = GammaReport::new("lemma31", omega_json(op, mu));
    let run = || -> Result<GammaReport> {
        if !omega_nonzero(op, mu)? {
            return Ok(report.clone().skipped("lift vanishes"));
        }
        let (c, regular) = infchar_theta_lift(op, mu)?;
        let predicted = if op.rprime >= 2 * op.p {
            mu.highest_weight().part(op.p - 1) as i64 >= op.delta()
        } else {
            false
        };
        let ok = regular == predicted;
        Ok(report
            .clone()
            .with_details(json!({"infchar": c.to_string(), "regular": regular}))
            .decide(ok, false, (!ok).then(|| format!("regular = {regular}, predicted {predicted}"))))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// The lift's infinitesimal character against the correspondence applied
/// to that of `mu`.
pub fn verify_infchar_corr(op: OmegaParams, mu: &OLabel) -> GammaReport {
    let report = GammaReport::new("infchar_corr", omega_json(op, mu));
    let (lift, _) = match infchar_theta_lift(op, mu) {
        Ok(x) => x,
        Err(e) => return report.from_error(&e),
    };
    match thm11_infchar_corr(&mu.infchar(), op.rprime, op.n + op.r, op.p) {
        Ok(via) => {
            let ok = via == lift;
            report
                .with_details(json!({"lift": lift.to_string(), "correspondence": via.to_string()}))
                .decide(ok, false, (!ok).then(|| format!("{lift} vs {via}")))
        }
        Err(e @ Error::NotInPattern(_)) => report.decide(false, false, Some(e.to_string())),
        Err(e) => report.from_error(&e),
    }
}

/// `Σ_mu Ω(mu) ⊠ mu` against the trivial lift with its `O(m)` slot
/// branched to `O(r) × O(m−r)`.
pub fn verify_seesaw(t: ThetaParams, r: usize, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("seesaw", json!({"p": t.p, "n": t.n, "m": t.m, "r": r}))
        .with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        if r > t.m {
            return Err(Error::InvalidParams(format!("r = {r} exceeds m = {}", t.m)));
        }
        let op = OmegaParams::new(t.p, t.n, r, t.m - r);
        let whole = theta_one_restricted(t, r, cutoff)?;
        let mut assembled = KTypeSum::truncated(op.truncation(cutoff));
        for mu in labels_up_to(t.m - r, cutoff) {
            for (k, m) in omega_ktypes(op, &mu, cutoff)?.iter() {
                assembled.add(vec![k[0].clone(), k[1].clone(), mu.clone()], m);
            }
        }
        Ok(report.clone().compare_truncated(&assembled, &whole))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// The three reference reductions outside the stable range.
pub fn verify_reduction_examples() -> GammaReport {
    let report = GammaReport::new("reductions", json!({}));
    let cases = [
        ((2, 3, 5), Some((OutsideCase::CaseI, (1, 3, 5), true))),
        ((2, 3, 3), Some((OutsideCase::CaseII, (0, 3, 3), false))),
        ((3, 4, 10), None),
    ];
    let mut bad = Vec::new();
    for ((p, n, m), want) in cases {
        let got = outside_stable_reduce(ThetaParams::new(p, n, m));
        let got = got.map(|o| o.map(|r| (r.case, (r.equivalent.p, r.equivalent.n, r.equivalent.m), r.det_twisted)));
        if got.as_ref().ok() != Some(&want) {
            bad.push(format!("({p},{n},{m}): {got:?}"));
        }
    }
    let ok = bad.is_empty();
    report.decide(ok, false, (!ok).then(|| bad.join("; ")))
}

/// Outside the stable range: the reduced parameters are stable, and the
/// K-types obtained through the reduction, twisted back, are those of the
/// equivalent stable lift and multiplicity free.
pub fn verify_reduction(t: ThetaParams, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("reduction", json!({"p": t.p, "n": t.n, "m": t.m})).with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        let Some(red) = outside_stable_reduce(t)? else {
            let k = reduced_theta_one_ktypes(t, cutoff)?;
            return Ok(report.clone().compare(&k, &KTypeSum::new()));
        };
        if !in_stable_range(red.equivalent) {
            return Ok(report.clone().decide(false, false, Some(format!("{} not stable", red.equivalent))));
        }
        let k = reduced_theta_one_ktypes(t, cutoff)?;
        let back = k.twisted(&[red.det_twisted, false]);
        let stable = theta_one_ktypes(red.equivalent, cutoff)?;
        let mult_free = k.iter().all(|(_, m)| m == 1);
        let mut rep = report.clone().compare(&back, &stable);
        if rep.verdict != crate::report::Verdict::Mismatch && !mult_free {
            rep = rep.decide(false, false, Some("not multiplicity free".into()));
        }
        Ok(rep.with_details(json!({
            "case": format!("{:?}", red.case),
            "equivalent": red.equivalent.to_string(),
            "det_twisted": red.det_twisted,
        })))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}
