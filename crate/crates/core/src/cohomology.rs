//! K-type shadows of the cohomologically induced modules `A(λ)` attached to
//! the θ-stable parabolic with Levi `U(p) × O(n−2p, r)`.
//!
//! `V_r(mu)` is modelled by its PBW grading along `C^p ⊗ C^r`: the layer
//! `(σ, ν)` carries `V_0(σ)` with `O(r)`-content `ν`, with multiplicity
//! `c^σ_{mu,ν}`. This is a reconstruction, validated by the checks in this
//! module rather than quoted from a closed formula.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::ktype::{KTypeSum, Truncation};
use crate::orth::OLabel;
use crate::partition::Partition;
use crate::report::GammaReport;
use crate::tensor::{gl_dim, lr_product, restrict_gl, stable_o_branch_ext};
use crate::theta::{infchar_theta_lift, omega_ktypes, theta_one_ktypes, OmegaParams, ThetaParams, ULabel};
use crate::weight::{canonical_infchar, rho, HalfIntVec};

/// Numerology of the parabolics `q ⊂ q'` of `so(n+r, C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AqData {
    pub p: usize,
    pub n: usize,
    pub r: usize,
    pub m: usize,
    /// `(1_p, 0)`, defining `q`.
    pub lambda0: HalfIntVec,
    /// `(p, p−1, …, 1, 0)`, defining `q'`.
    pub lambda0prime: HalfIntVec,
    /// `dim(n ∩ k)`.
    pub s0: usize,
    /// Dimension of a maximal nilpotent subalgebra of `gl(p)`.
    pub s1: usize,
    /// `dim(k ∩ n')`.
    pub s0prime: usize,
    /// `U(p)`-weight of `Z^♯ = Z ⊗ ∧^top n` for `mu = 0`.
    pub z_sharp_weight: ULabel,
    /// Power of `det_{O(n−2p,r)}` contributed by `∧^top n`.
    pub det_power_on_o: usize,
}

pub fn aq_numerology(p: usize, n: usize, r: usize, m: usize) -> Result<AqData> {
    if p == 0 || 2 * p > n {
        return Err(Error::InvalidParams(format!("need 1 ≤ p and 2p ≤ n, got p={p}, n={n}")));
    }
    let t = (n + r) / 2;
    let lambda0 = HalfIntVec::from_ints(&vec![1; p]).padded(t);
    let steps: Vec<i64> = (1..=p as i64).rev().collect();
    let lambda0prime = HalfIntVec::from_ints(&steps).padded(t);
    let z = lambda_of_mu(&Partition::empty(), p, n, r, m)?;
    let z_sharp_weight = ULabel::new(z.entries().shift(2 * (n + r - p - 1) as i64))?;
    Ok(AqData {
        p,
        n,
        r,
        m,
        lambda0,
        lambda0prime,
        s0: p * (n - 2 * p) + p * (p - 1) / 2,
        s1: p * (p - 1) / 2,
        s0prime: p * (n - p - 1),
        z_sharp_weight,
        det_power_on_o: p,
    })
}

/// `λ_mu = mu + ((m−n−2r)/2)·1_p` as a `U(p)`-weight.
pub fn lambda_of_mu(mu: &Partition, p: usize, n: usize, r: usize, m: usize) -> Result<ULabel> {
    if mu.depth() > p {
        return Err(Error::InvalidParams(format!("{mu} has depth > p = {p}")));
    }
    let base: Vec<i64> = mu.padded(p).iter().map(|&x| x as i64).collect();
    ULabel::new(HalfIntVec::from_ints(&base).shift(m as i64 - n as i64 - 2 * r as i64))
}

/// `d_n^p (sigma + ((m−n)/2)·1_p)` as a label of `O(n)`.
fn shifted_o_n(sigma: &Partition, p: usize, n: usize, m: usize) -> Result<OLabel> {
    if m < n || (m - n) % 2 == 1 {
        return Err(Error::InvalidParams(format!("need n ≤ m and n+m even, got n={n}, m={m}")));
    }
    let lam = sigma.add_constant(((m - n) / 2) as u32, p);
    OLabel::new(n, lam, p % 2 == 1)
}

/// `Γ^i(V_0(mu))` for the compact Zuckerman functor from `U(p) × O(n−2p)`
/// to `O(n)`: nonzero only in degree `s0`.
pub fn bwb_gamma_v0(mu: &Partition, p: usize, n: usize, m: usize, i: usize) -> Result<Option<OLabel>> {
    if mu.depth() > p.min(m) {
        return Err(Error::InvalidParams(format!("{mu} has depth > min(p, m)")));
    }
    let s0 = aq_numerology(p, n, 0, m)?.s0;
    if i != s0 {
        return Ok(None);
    }
    shifted_o_n(mu, p, n, m).map(Some)
}

fn check_range(p: usize, n: usize, m: usize) -> Result<()> {
    if p == 0 || 2 * p > n || n > m || 2 * p >= m {
        return Err(Error::InvalidParams(format!(
            "need 2p ≤ n ≤ m and 2p < m, got p={p}, n={n}, m={m}"
        )));
    }
    if (n + m) % 2 == 1 {
        return Err(Error::InvalidParams(format!("n+m must be even, got n={n}, m={m}")));
    }
    Ok(())
}

/// Truncation of the `A(λ)` sums by `|sigma|`, read off the `O(n)` slot.
pub fn a_lambda_truncation(p: usize, n: usize, m: usize, cutoff: u32) -> Truncation {
    Truncation::new(cutoff, 0, (p * (m - n) / 2) as i64)
}

/// K-types of `A(λ)` for `λ = −((m+n)/2)·1_p` over `O(n) × O(m)`, from the
/// split filtration of `ind Z^♯`.
pub fn a_lambda_full_ktypes(p: usize, n: usize, m: usize, cutoff: u32) -> Result<KTypeSum> {
    check_range(p, n, m)?;
    let mut out = KTypeSum::truncated(a_lambda_truncation(p, n, m, cutoff));
    for mu in Partition::all_up_to(cutoff, p.min(m)) {
        let left = shifted_o_n(&mu, p, n, m)?;
        for (k, mult) in restrict_gl(&mu, m)?.iter() {
            out.add(vec![left.clone(), k[0].clone()], mult);
        }
    }
    Ok(out)
}

/// One graded piece of `V_r(mu)`: `V_0(sigma)` with `O(r)`-content `nu`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Layer {
    pub sigma: Partition,
    pub nu: Partition,
    pub mult: u64,
}

/// Layers of `V_r(mu)` with `|sigma| ≤ cutoff`.
pub fn v_r_layers(mu: &Partition, p: usize, r: usize, cutoff: u32) -> Result<Vec<Layer>> {
    if mu.depth() > p {
        return Err(Error::InvalidParams(format!("{mu} has depth > p = {p}")));
    }
    let mut out = Vec::new();
    let Some(room) = cutoff.checked_sub(mu.size()) else {
        return Ok(out);
    };
    for nu in Partition::all_up_to(room, p.min(r)) {
        for (sigma, mult) in lr_product(mu, &nu, p) {
            out.push(Layer {
                sigma,
                nu: nu.clone(),
                mult,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// K-types of `A(λ_mu)` over `O(n) × O(r)`.
pub fn a_lambda_mu_ktypes(
    p: usize,
    n: usize,
    r: usize,
    m: usize,
    mu: &Partition,
    cutoff: u32,
) -> Result<KTypeSum> {
    check_range(p, n, m)?;
    if r > m {
        return Err(Error::InvalidParams(format!("r = {r} exceeds m = {m}")));
    }
    let mut out = KTypeSum::truncated(a_lambda_truncation(p, n, m, cutoff));
    for layer in v_r_layers(mu, p, r, cutoff)? {
        let left = shifted_o_n(&layer.sigma, p, n, m)?;
        for (k, mult) in restrict_gl(&layer.nu, r)?.iter() {
            out.add(vec![left.clone(), k[0].clone()], layer.mult * mult);
        }
    }
    Ok(out)
}

/// `d_n^p(mu + ((m−n)/2)·1_p) ⊠ 1_{O(r)}`.
pub fn minimal_ktype(p: usize, n: usize, r: usize, m: usize, mu: &Partition) -> Result<Vec<OLabel>> {
    Ok(vec![shifted_o_n(mu, p, n, m)?, OLabel::trivial(r)])
}

fn aq_json(p: usize, n: usize, r: usize, m: usize, mu: &OLabel) -> serde_json::Value {
    json!({"p": p, "n": n, "r": r, "m": m, "mu": mu.syntax()})
}

/// Compares the lift of `mu` to `O(n,r)` with `A(λ_mu)`: containment of
/// K-types, a shared minimal type of multiplicity one, and equal
/// infinitesimal characters.
pub fn verify_thm14(p: usize, n: usize, r: usize, m: usize, mu: &OLabel, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("thm14", aq_json(p, n, r, m, mu)).with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        check_range(p, n, m)?;
        if r > m || mu.rank() != m - r {
            return Err(Error::InvalidParams(format!("{mu} is not a label of O(m−r)")));
        }
        let op = OmegaParams::new(p, n, r, m - r);
        let omega = omega_ktypes(op, mu, cutoff)?;
        if mu.highest_weight().depth() > p {
            let mut rep = report.clone();
            rep.diff = omega.diff(&KTypeSum::new());
            let ok = omega.is_empty();
            return Ok(rep.decide(ok, true, (!ok).then(|| "lift should vanish".into())));
        }
        let lam = &mu.highest_weight();
        let a = a_lambda_mu_ktypes(p, n, r, m, lam, cutoff)?;
        let tau = minimal_ktype(p, n, r, m, lam)?;
        let mut problems = Vec::new();
        let mut rep = report.clone();
        if !omega.is_contained_in(&a) {
            rep.diff = omega.diff(&a).into_iter().filter(|d| d.left > d.right).collect();
            problems.push("lift not contained in A(λ)".to_string());
        }
        let (tau_omega, tau_a) = (omega.get(&tau), a.get(&tau));
        let tau_visible = a_lambda_truncation(p, n, m, cutoff).admits(&tau);
        if tau_visible && (tau_omega != 1 || tau_a != 1) {
            problems.push(format!("minimal type multiplicities {tau_omega} and {tau_a}"));
        }
        let (c_lift, _) = infchar_theta_lift(op, mu)?;
        let lam_w = lambda_of_mu(lam, p, n, r, m)?;
        let c_a = canonical_infchar(&lam_w.entries().padded((n + r) / 2).add(&rho(n + r)?), n + r)?;
        if c_lift != c_a {
            problems.push(format!("infinitesimal characters {c_lift} and {c_a}"));
        }
        let ok = problems.is_empty();
        Ok(rep
            .with_details(json!({
                "minimal_type": crate::ktype::ktype_string(&tau),
                "infchar": c_a.to_string(),
                "lift_terms": omega.len(),
                "a_terms": a.len(),
            }))
            .decide(ok, false, (!ok).then(|| problems.join("; "))))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// `O(n)`-admissibility shape and minimal type of `A(λ_mu)`, together with
/// the two assertions on the layers of `V_r(mu)`.
pub fn verify_lemma41(p: usize, n: usize, r: usize, m: usize, mu: &Partition, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("lemma41", json!({"p": p, "n": n, "r": r, "m": m, "mu": mu.to_string()}))
        .with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        let a = a_lambda_mu_ktypes(p, n, r, m, mu, cutoff)?;
        let shift = ((m - n) / 2) as u32;
        let mut problems = Vec::new();
        for (k, _) in a.iter() {
            let x = &k[0];
            let lam = x.lam();
            let shaped = OLabel::new(n, lam.clone(), p % 2 == 1).as_ref() == Ok(x)
                && lam.depth() <= p
                && (0..p).all(|i| lam.part(i) >= mu.part(i) + shift);
            if !shaped {
                problems.push(format!("O(n)-type {x} not of the form d^p(mu+κ+shift)"));
            }
        }
        let tau = minimal_ktype(p, n, r, m, mu)?;
        if a.get(&tau) != 1 {
            problems.push(format!("minimal type multiplicity {}", a.get(&tau)));
        }
        let min_size = mu.size() + p as u32 * shift;
        for (k, _) in a.iter() {
            if k[0].lam().size() <= min_size && k.as_slice() != tau.as_slice() {
                problems.push(format!("{} as small as the minimal type", crate::ktype::ktype_string(k)));
            }
        }
        let layers = v_r_layers(mu, p, r, cutoff)?;
        let base: Vec<&Layer> = layers.iter().filter(|l| &l.sigma == mu && l.nu.is_empty()).collect();
        if base.len() != 1 || base[0].mult != 1 {
            problems.push("layer (mu, ∅) does not occur exactly once".into());
        }
        if let Some(l) = layers.iter().find(|l| !mu.is_contained_in(&l.sigma)) {
            problems.push(format!("layer {} does not contain mu", l.sigma));
        }
        let ok = problems.is_empty();
        Ok(report
            .clone()
            .with_details(json!({"terms": a.len(), "layers": layers.len()}))
            .decide(ok, false, (!ok).then(|| problems.join("; "))))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// `Σ_mu A(λ_mu) ⊠ mu|_{O(m−r)}` against `A(λ)` with the `O(m)` slot
/// branched to `O(r) × O(m−r)`.
pub fn verify_filtration(p: usize, n: usize, r: usize, m: usize, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("lemma55", json!({"p": p, "n": n, "r": r, "m": m})).with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        if r > m {
            return Err(Error::InvalidParams(format!("r = {r} exceeds m = {m}")));
        }
        let full = a_lambda_full_ktypes(p, n, m, cutoff)?;
        let trunc = a_lambda_truncation(p, n, m, cutoff);
        let mut branched = KTypeSum::truncated(trunc);
        for (k, mult) in full.iter() {
            for (s, c) in stable_o_branch_ext(&k[1], r, m - r)?.iter() {
                branched.add(vec![k[0].clone(), s[0].clone(), s[1].clone()], mult * c);
            }
        }
        let mut assembled = KTypeSum::truncated(trunc);
        for mu in Partition::all_up_to(cutoff, p.min(m - r)) {
            let piece = a_lambda_mu_ktypes(p, n, r, m, &mu, cutoff)?;
            let outer = restrict_gl(&mu, m - r)?;
            for (k, a) in piece.iter() {
                for (o, b) in outer.iter() {
                    assembled.add(vec![k[0].clone(), k[1].clone(), o[0].clone()], a * b);
                }
            }
        }
        Ok(report.clone().compare(&assembled, &branched))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

/// Graded dimensions of `Sym(C^p ⊗ C^q)` against the Cauchy decomposition.
pub fn verify_layer_dims(p: usize, q: usize, max_degree: u32) -> GammaReport {
    let report = GammaReport::new("lemma51", json!({"p": p, "q": q, "N": max_degree}));
    let mut bad = Vec::new();
    for big_n in 0..=max_degree {
        let lhs: u128 = Partition::all_of_size(big_n, p.min(q), big_n)
            .iter()
            .map(|mu| gl_dim(mu, p) * gl_dim(mu, q))
            .sum();
        // dim Sym^N(C^d) = C(d+N−1, N), read as 1 at N = 0.
        let rhs = match big_n {
            0 => 1,
            _ => binomial((p * q) as u128 + big_n as u128 - 1, big_n as u128),
        };
        if lhs != rhs {
            bad.push(format!("N={big_n}: {lhs} vs {rhs}"));
        }
    }
    let ok = bad.is_empty();
    report.decide(ok, false, (!ok).then(|| bad.join("; ")))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k == 0 {
        return 1;
    }
    if n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `s0 + s1 = s0'` together with the displayed values.
pub fn verify_numerology(p: usize, n: usize) -> GammaReport {
    let report = GammaReport::new("numerology", json!({"p": p, "n": n}));
    match aq_numerology(p, n, 0, n) {
        Ok(d) => {
            let ok = d.s0 + d.s1 == d.s0prime;
            report
                .with_details(json!({"s0": d.s0, "s1": d.s1, "s0prime": d.s0prime}))
                .decide(ok, false, (!ok).then(|| "s0 + s1 ≠ s0'".into()))
        }
        Err(e) => report.from_error(&e),
    }
}

/// Every K-type of the trivial lift to `O(n,m)` occurs in `A(λ)` with at
/// least the same multiplicity.
pub fn verify_full_containment(p: usize, n: usize, m: usize, cutoff: u32) -> GammaReport {
    let report = GammaReport::new("a_lambda_full", json!({"p": p, "n": n, "m": m})).with_cutoff(cutoff);
    let run = || -> Result<GammaReport> {
        let a = a_lambda_full_ktypes(p, n, m, cutoff)?;
        let trunc = a_lambda_truncation(p, n, m, cutoff);
        let theta = theta_one_ktypes(ThetaParams::new(p, n, m), cutoff)?.restricted(trunc);
        let mut rep = report.clone();
        let ok = theta.is_contained_in(&a);
        if !ok {
            rep.diff = theta.diff(&a).into_iter().filter(|d| d.left > d.right).collect();
        }
        let tau = vec![shifted_o_n(&Partition::empty(), p, n, m)?, OLabel::trivial(m)];
        let tau_ok = a.get(&tau) == 1;
        Ok(rep.decide(ok && tau_ok, false, (!tau_ok).then(|| "minimal type multiplicity".into())))
    };
    run().unwrap_or_else(|e| report.clone().from_error(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;
    use crate::tensor::sym_cauchy;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn numerology_values() {
        let d = aq_numerology(1, 4, 2, 6).unwrap();
        assert_eq!((d.s0, d.s1, d.s0prime), (2, 0, 2));
        let d = aq_numerology(2, 4, 0, 4).unwrap();
        assert_eq!((d.s0, d.s1, d.s0prime), (1, 1, 2));
        let d = aq_numerology(1, 2, 0, 2).unwrap();
        assert_eq!((d.s0, d.s1, d.s0prime), (0, 0, 0));
        assert!(matches!(aq_numerology(2, 3, 0, 3), Err(Error::InvalidParams(_))));
        for p in 1..5 {
            for n in 2 * p..14 {
                let d = aq_numerology(p, n, 1, n + 1).unwrap();
                assert_eq!(d.s0 + d.s1, d.s0prime);
            }
        }
    }

    #[test]
    fn lambda_shift() {
        let one = |v: &[i64]| ULabel::new(HalfIntVec::from_ints(v)).unwrap();
        assert_eq!(lambda_of_mu(&Partition::empty(), 1, 2, 0, 4).unwrap(), one(&[1]));
        assert_eq!(lambda_of_mu(&part(&[2]), 1, 2, 2, 6).unwrap(), one(&[2]));
        // r = m gives −(m+n)/2 on every coordinate.
        let w = lambda_of_mu(&Partition::empty(), 2, 4, 6, 6).unwrap();
        assert_eq!(w.entries().doubled(), &[-10, -10]);
        assert!(lambda_of_mu(&part(&[1, 1]), 1, 2, 0, 4).is_err());
    }

    #[test]
    fn bwb_single_degree() {
        let s0 = aq_numerology(1, 2, 0, 4).unwrap().s0;
        let got = bwb_gamma_v0(&part(&[2]), 1, 2, 4, s0).unwrap().unwrap();
        assert_eq!(got, OLabel::new(2, part(&[3]), true).unwrap());
        let tau = bwb_gamma_v0(&Partition::empty(), 2, 6, 8, aq_numerology(2, 6, 0, 8).unwrap().s0).unwrap();
        assert_eq!(tau.unwrap(), minimal_ktype(2, 6, 0, 8, &Partition::empty()).unwrap()[0]);
        for i in 0..8 {
            let got = bwb_gamma_v0(&part(&[1]), 2, 6, 8, i).unwrap();
            assert_eq!(got.is_some(), i == aq_numerology(2, 6, 0, 8).unwrap().s0);
        }
    }

    #[test]
    fn full_module_small_case() {
        let a = a_lambda_full_ktypes(1, 2, 4, 2).unwrap();
        let d = |k: u32| OLabel::new(2, part(&[k]), true).unwrap();
        let o4 = |v: &[u32]| OLabel::new(4, part(v), false).unwrap();
        assert_eq!(a.get(&[d(1), o4(&[])]), 1);
        assert_eq!(a.get(&[d(2), o4(&[1])]), 1);
        assert_eq!(a.get(&[d(3), o4(&[2])]), 1);
        assert_eq!(a.get(&[d(3), o4(&[])]), 1);
        assert_eq!(a.len(), 4);
        assert!(verify_full_containment(1, 2, 4, 3).verdict == Verdict::Match);
    }

    #[test]
    fn empty_mu_layers_are_cauchy_pairs() {
        for (p, r) in [(1, 1), (2, 3), (3, 2)] {
            let layers = v_r_layers(&Partition::empty(), p, r, 4).unwrap();
            let mut want: Vec<Layer> = (0..=4)
                .flat_map(|k| sym_cauchy(k, p, r))
                .map(|nu| Layer { sigma: nu.clone(), nu, mult: 1 })
                .collect();
            want.sort();
            assert_eq!(layers, want);
        }
    }

    #[test]
    fn layers_contain_mu() {
        let mu = part(&[2, 1]);
        let layers = v_r_layers(&mu, 2, 3, 6).unwrap();
        assert!(layers.iter().all(|l| mu.is_contained_in(&l.sigma)));
        let base: Vec<_> = layers.iter().filter(|l| l.sigma == mu).collect();
        assert_eq!(base.len(), 1);
        assert_eq!((base[0].nu.is_empty(), base[0].mult), (true, 1));
    }

    #[test]
    fn r_zero_pieces_rebuild_full_module() {
        let (p, n, m) = (1, 4, 6);
        let full = a_lambda_full_ktypes(p, n, m, 3).unwrap();
        let mut rebuilt = KTypeSum::truncated(a_lambda_truncation(p, n, m, 3));
        for mu in Partition::all_up_to(3, p) {
            let piece = a_lambda_mu_ktypes(p, n, 0, m, &mu, 3).unwrap();
            assert_eq!(piece.len(), 1);
            let (k, _) = piece.iter().next().unwrap();
            assert_eq!(k[0], minimal_ktype(p, n, 0, m, &mu).unwrap()[0]);
            for (o, c) in restrict_gl(&mu, m).unwrap().iter() {
                rebuilt.add(vec![k[0].clone(), o[0].clone()], c);
            }
        }
        assert!(rebuilt.same_terms(&full));
    }

    #[test]
    fn lift_inside_a_lambda() {
        let rep = verify_thm14(1, 2, 2, 6, &OLabel::trivial(4), 3);
        assert_eq!(rep.verdict, Verdict::Match, "{:?}", rep.reason);
        let deep = OLabel::new(4, part(&[1, 1]), false).unwrap();
        assert_eq!(verify_thm14(1, 2, 2, 6, &deep, 3).verdict, Verdict::VanishMatch);
        for mu in [part(&[]), part(&[2]), part(&[1, 1])] {
            let rep = verify_lemma41(2, 4, 2, 8, &mu, 4);
            assert_eq!(rep.verdict, Verdict::Match, "{mu}: {:?}", rep.reason);
        }
        assert_eq!(verify_filtration(1, 2, 2, 6, 3).verdict, Verdict::Match);
        assert_eq!(verify_layer_dims(2, 3, 6).verdict, Verdict::Match);
    }

    #[test]
    fn infchar_at_r_equal_m() {
        // (−(m+n)/2, 0, …) + ρ agrees with ρ − p·1 up to signed permutation.
        for (p, n, m) in [(1, 2, 4), (1, 4, 6), (2, 4, 6), (2, 6, 8)] {
            let lam = lambda_of_mu(&Partition::empty(), p, n, m, m).unwrap();
            let total = n + m;
            let rho_t = rho(total).unwrap();
            let a = canonical_infchar(&lam.entries().padded(total / 2).add(&rho_t), total).unwrap();
            let b = canonical_infchar(&rho_t.add(&HalfIntVec::constant(-2 * p as i64, total / 2)), total).unwrap();
            assert_eq!(a, b, "p={p} n={n} m={m}");
        }
    }
}
