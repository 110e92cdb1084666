//! K-types and infinitesimal characters of theta lifts for the dual pair
//! `(Sp(p,R), O(n,m))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ktype::{KTypeSum, Truncation};
use crate::orth::OLabel;
use crate::partition::Partition;
use crate::tensor::stable_o_branch_ext;
use crate::weight::{canonical_infchar, is_regular, rho_any, HalfIntVec, InfChar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaParams {
    pub p: usize,
    pub n: usize,
    pub m: usize,
}

impl ThetaParams {
    pub fn new(p: usize, n: usize, m: usize) -> Self {
        ThetaParams { p, n, m }
    }

    /// Fails unless `n + m` is even and the triple is in the stable range.
    pub fn check(&self) -> Result<()> {
        if (self.n + self.m) % 2 != 0 {
            return Err(Error::InvalidParams(format!("{self}: n + m must be even")));
        }
        if !in_stable_range(*self) {
            return Err(Error::InvalidParams(format!("{self} is not in the stable range")));
        }
        Ok(())
    }

    /// `(m − n)/2`, possibly negative.
    fn shift(&self) -> i64 {
        (self.m as i64 - self.n as i64) / 2
    }
}

impl fmt::Display for ThetaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p,n,m)=({},{},{})", self.p, self.n, self.m)
    }
}

/// `2p ≤ min(n,m)` and `2p < max(n,m)`.
pub fn in_stable_range(t: ThetaParams) -> bool {
    2 * t.p <= t.n.min(t.m) && 2 * t.p < t.n.max(t.m)
}

/// The partitions `l` indexing the K-types of the trivial lift: at most `p`
/// parts, `l_p ≥ max((n−m)/2, 0)`, `|l| ≤ cutoff`.
pub fn theta_layers(t: ThetaParams, cutoff: u32) -> Vec<Partition> {
    let floor = (-t.shift()).max(0) as u32;
    let base = floor * t.p as u32;
    if base > cutoff {
        return Vec::new();
    }
    Partition::all_up_to(cutoff - base, t.p)
        .into_iter()
        .map(|l| l.add_constant(floor, t.p))
        .collect()
}

/// The `O(n)` factor `d_n^p (l + (m−n)/2·1_p)` attached to the layer `l`.
fn o_n_factor(t: ThetaParams, l: &Partition) -> Result<OLabel> {
    let shift = t.shift();
    let parts = l
        .padded(t.p)
        .iter()
        .map(|&x| {
            u32::try_from(x as i64 + shift)
                .map_err(|_| Error::Internal(format!("layer {l} below the floor for {t}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OLabel::new(t.n, Partition::new(parts)?, t.p % 2 == 1)?)
}

/// K-types of the lift of the trivial character to `O(n,m)`, over layers
/// with `|l| ≤ cutoff`.
pub fn theta_one_ktypes(t: ThetaParams, cutoff: u32) -> Result<KTypeSum> {
    t.check()?;
    let mut out = KTypeSum::truncated(Truncation::new(cutoff, 1, 0));
    for l in theta_layers(t, cutoff) {
        let right = OLabel::new(t.m, l.clone(), false)?;
        out.add(vec![o_n_factor(t, &l)?, right], 1);
    }
    Ok(out)
}

/// The same sum with the `O(m)` factor restricted to `O(r) × O(m−r)`.
pub fn theta_one_restricted(t: ThetaParams, r: usize, cutoff: u32) -> Result<KTypeSum> {
    t.check()?;
    if r > t.m {
        return Err(Error::InvalidParams(format!("r = {r} exceeds m = {}", t.m)));
    }
    let offset = t.p as i64 * t.shift();
    let mut out = KTypeSum::truncated(Truncation::new(cutoff, 0, offset));
    for l in theta_layers(t, cutoff) {
        let left = o_n_factor(t, &l)?;
        let x = OLabel::new(t.m, l, false)?;
        for (k, mult) in stable_o_branch_ext(&x, r, t.m - r)?.iter() {
            out.add(vec![left.clone(), k[0].clone(), k[1].clone()], mult);
        }
    }
    Ok(out)
}

/// Highest weight of a `Ũ(p)`-type: weakly decreasing half-integers of
/// uniform integrality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ULabel {
    rank: usize,
    entries: HalfIntVec,
}

impl ULabel {
    pub fn new(entries: HalfIntVec) -> Result<Self> {
        if entries.doubled().windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries.to_string()));
        }
        if !entries.is_uniform() {
            return Err(Error::MixedParity);
        }
        Ok(ULabel {
            rank: entries.len(),
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &HalfIntVec {
        &self.entries
    }
}

impl fmt::Display for ULabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries)
    }
}

/// Lowest `Ũ(p)`-type of the lowest weight module attached to `mu` of
/// `O(rprime)`: `(mu, 0_{p−k}) + (rprime/2)·1_p`.
pub fn lowest_type_l(mu: &Partition, p: usize, rprime: usize) -> Result<ULabel> {
    if mu.depth() > p.min(rprime) {
        return Err(Error::InvalidParams(format!(
            "{mu} has depth > min(p, r') = {}",
            p.min(rprime)
        )));
    }
    let base: Vec<i64> = mu.padded(p).iter().map(|&x| x as i64).collect();
    ULabel::new(HalfIntVec::from_ints(&base).shift(rprime as i64))
}

/// Shape of the Ω-sums: the lift to `O(n,r)` of the lowest weight module
/// attached to an `O(r')`-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OmegaParams {
    pub p: usize,
    pub n: usize,
    pub r: usize,
    pub rprime: usize,
}

impl OmegaParams {
    pub fn new(p: usize, n: usize, r: usize, rprime: usize) -> Self {
        OmegaParams { p, n, r, rprime }
    }

    pub fn theta(&self) -> ThetaParams {
        ThetaParams::new(self.p, self.n, self.r + self.rprime)
    }

    /// `δ = (n − m + 2r)/2 = (n + r − r')/2`.
    pub fn delta(&self) -> i64 {
        (self.n as i64 + self.r as i64 - self.rprime as i64) / 2
    }

    fn check(&self, mu: &OLabel) -> Result<()> {
        self.theta().check()?;
        if mu.rank() != self.rprime {
            return Err(Error::InvalidRank(format!(
                "{mu} is a label of O({}), expected O({})",
                mu.rank(),
                self.rprime
            )));
        }
        Ok(())
    }

    /// Truncation by layer size `|l|`, read off the `O(n)` slot.
    pub fn truncation(&self, cutoff: u32) -> Truncation {
        Truncation::new(cutoff, 0, self.p as i64 * self.theta().shift())
    }
}

impl fmt::Display for OmegaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p,n,r,r')=({},{},{},{})",
            self.p, self.n, self.r, self.rprime
        )
    }
}

/// K-types of `Ω(mu)`, the `mu`-isotypic coefficient of the trivial lift
/// restricted to `O(n,r) × O(r')`, over layers with `|l| ≤ cutoff`. Empty
/// when no layer up to the cutoff contains `mu`.
pub fn omega_ktypes(op: OmegaParams, mu: &OLabel, cutoff: u32) -> Result<KTypeSum> {
    op.check(mu)?;
    let t = op.theta();
    let mut out = KTypeSum::truncated(op.truncation(cutoff));
    for l in theta_layers(t, cutoff) {
        let left = o_n_factor(t, &l)?;
        let x = OLabel::new(t.m, l, false)?;
        for (k, mult) in stable_o_branch_ext(&x, op.r, op.rprime)?.iter() {
            if &k[1] == mu {
                out.add(vec![left.clone(), k[0].clone()], mult);
            }
        }
    }
    Ok(out)
}

/// Multiplicity of the `O(n) × O(r)`-type `tau` in `Ω(mu)`, without
/// truncation: the `O(n)` factor pins down the layer `l`.
pub fn omega_multiplicity(op: OmegaParams, mu: &OLabel, tau: &[OLabel]) -> Result<u64> {
    op.check(mu)?;
    let t = op.theta();
    let [left, kappa] = tau else {
        return Err(Error::InvalidParams(format!("expected a pair, got {} slots", tau.len())));
    };
    if left.rank() != op.n || kappa.rank() != op.r || left.lam().depth() > op.p {
        return Ok(0);
    }
    let shift = t.shift();
    let floor = (-shift).max(0);
    let mut parts = Vec::with_capacity(op.p);
    for &x in &left.lam().padded(op.p) {
        let v = x as i64 - shift;
        if v < floor {
            return Ok(0);
        }
        parts.push(v as u32);
    }
    let l = Partition::new(parts)?;
    if &o_n_factor(t, &l)? != left {
        return Ok(0);
    }
    let x = OLabel::new(t.m, l, false)?;
    Ok(stable_o_branch_ext(&x, op.r, op.rprime)?.get(&[kappa.clone(), mu.clone()]))
}

/// Whether `Ω(mu)` is nonzero, judged on the layers `|l| ≤ |mu| + p·max((n−m)/2, 0)`.
/// For regular `mu` its minimal type sits in the layer `l = mu`, which is
/// inside this range.
pub fn omega_nonzero(op: OmegaParams, mu: &OLabel) -> Result<bool> {
    Ok(!omega_ktypes(op, mu, omega_nonzero_cutoff(op, mu))?.is_empty())
}

pub fn omega_nonzero_cutoff(op: OmegaParams, mu: &OLabel) -> u32 {
    let floor = (-op.theta().shift()).max(0) as u32;
    mu.highest_weight().size() + op.p as u32 * floor
}

/// Infinitesimal character of `Ω(mu)` and whether it is regular.
///
/// For `r' ≥ 2p` it is `(mu − δ·1_p, 0) + ρ_{n+r}`; for `r' < 2p` it is
/// `(λ, ρ_{2δ} − ((2p−r')/2)·1_δ)` with `λ` the infinitesimal character of
/// `mu`.
pub fn infchar_theta_lift(op: OmegaParams, mu: &OLabel) -> Result<(InfChar, bool)> {
    op.check(mu)?;
    let n1 = op.n + op.r;
    let delta = op.delta();
    let v = if op.rprime >= 2 * op.p {
        if mu.highest_weight().depth() > op.p {
            return Err(Error::InvalidParams(format!(
                "{mu} has more than p = {} nonzero entries",
                op.p
            )));
        }
        let head: Vec<i64> = mu
            .highest_weight()
            .padded(op.p)
            .iter()
            .map(|&x| x as i64 - delta)
            .collect();
        HalfIntVec::from_ints(&head)
            .padded(n1 / 2)
            .add(&rho_any(n1))
    } else {
        let d = usize::try_from(delta)
            .map_err(|_| Error::InvalidParams(format!("{op}: negative δ")))?;
        let tail = rho_any(2 * d).shift(-(2 * op.p as i64 - op.rprime as i64));
        mu.infchar().entries().concat(&tail)
    };
    let c = canonical_infchar(&v, n1)?;
    let regular = is_regular(&c);
    Ok((c, regular))
}

/// The tail `ρ_{b−a} − ((2p−a)/2)·1_{(b−a)/2}` appended when `a < 2p`.
fn short_tail(a: usize, b: usize, p: usize) -> HalfIntVec {
    rho_any(b - a).shift(-(2 * p as i64 - a as i64))
}

/// Transports an infinitesimal character of `so(a)` to `so(b)` along the
/// correspondence induced by the lift of the trivial character of `Sp(p,R)`.
///
/// Both sides are treated as multisets of absolute values. The `ρ`-tail of
/// the source is removed and the target tail appended; a source that does
/// not contain the expected tail is rejected.
pub fn thm11_infchar_corr(source: &InfChar, a: usize, b: usize, p: usize) -> Result<InfChar> {
    if (a + b) % 2 != 0 {
        return Err(Error::InvalidParams(format!("a + b = {} must be even", a + b)));
    }
    if source.algebra_dim() != a {
        return Err(Error::InvalidRank(format!(
            "source lives in so({}), expected so({a})",
            source.algebra_dim()
        )));
    }
    let (strip, append) = match (a >= 2 * p, b >= 2 * p) {
        (true, true) => (rho_any(a - 2 * p), rho_any(b - 2 * p)),
        (false, _) if b > a => (HalfIntVec::default(), short_tail(a, b, p)),
        (true, false) => (short_tail(b, a, p), HalfIntVec::default()),
        _ => {
            return Err(Error::InvalidParams(format!(
                "no correspondence for a = {a}, b = {b}, p = {p}"
            )))
        }
    };
    let mut rest: Vec<i64> = source.entries().doubled().to_vec();
    for x in strip.doubled() {
        let pos = rest.iter().position(|y| *y == x.abs()).ok_or_else(|| {
            Error::NotInPattern(format!(
                "{source} has no tail {strip} to strip (missing {})",
                HalfIntVec::from_doubled(vec![x.abs()])
            ))
        })?;
        rest.remove(pos);
    }
    canonical_infchar(&HalfIntVec::from_doubled(rest).concat(&append), b)
}

/// Which of the two nonvanishing cases outside the stable range applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutsideCase {
    /// `p ≤ n ≤ 2p−1`, `m = n+2`.
    CaseI,
    /// `n = m ≤ 2p`.
    CaseII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutsideReduction {
    pub case: OutsideCase,
    pub equivalent: ThetaParams,
    /// The lift equals `d_n` times the equivalent stable lift.
    pub det_twisted: bool,
}

/// Reduces a lift outside the stable range to a stable one; `None` when the
/// lift vanishes. Expects `n ≤ m`.
pub fn outside_stable_reduce(t: ThetaParams) -> Result<Option<OutsideReduction>> {
    if in_stable_range(t) {
        return Err(Error::InvalidParams(format!("{t} is in the stable range")));
    }
    if t.n > t.m {
        return Err(Error::InvalidParams(format!("{t}: swap so that n <= m")));
    }
    let (p, n, m) = (t.p, t.n, t.m);
    if p <= n && n < 2 * p && m == n + 2 {
        return Ok(Some(OutsideReduction {
            case: OutsideCase::CaseI,
            equivalent: ThetaParams::new(n - p, n, m),
            det_twisted: true,
        }));
    }
    if n == m && n <= 2 * p {
        if n < p + 1 {
            return Err(Error::InvalidParams(format!(
                "{t}: reduction index n − 1 − p is negative"
            )));
        }
        return Ok(Some(OutsideReduction {
            case: OutsideCase::CaseII,
            equivalent: ThetaParams::new(n - 1 - p, n, m),
            det_twisted: false,
        }));
    }
    Ok(None)
}

/// K-types of the trivial lift for any `n ≤ m`: computed directly in the
/// stable range and through the reduction outside it.
pub fn reduced_theta_one_ktypes(t: ThetaParams, cutoff: u32) -> Result<KTypeSum> {
    if in_stable_range(t) {
        return theta_one_ktypes(t, cutoff);
    }
    match outside_stable_reduce(t)? {
        None => Ok(KTypeSum::truncated(Truncation::new(cutoff, 1, 0))),
        Some(red) => Ok(theta_one_ktypes(red.equivalent, cutoff)?.twisted(&[red.det_twisted, false])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(n: usize, parts: &[u32]) -> OLabel {
        OLabel::plain(n, parts)
    }

    #[test]
    fn stable_range_predicate() {
        assert!(in_stable_range(ThetaParams::new(1, 2, 4)));
        assert!(!in_stable_range(ThetaParams::new(1, 2, 2)));
        assert!(in_stable_range(ThetaParams::new(2, 4, 5)));
    }

    #[test]
    fn theta_one_small() {
        let s = theta_one_ktypes(ThetaParams::new(1, 2, 4), 2).unwrap();
        let mut expect = KTypeSum::new();
        for k in 0..3u32 {
            let left = OLabel::plain(2, &[k + 1]).det_twist();
            let right = OLabel::new(4, Partition::from_slice(&[k]), false).unwrap();
            expect.add(vec![left, right], 1);
        }
        assert!(s.same_terms(&expect));
        // n > m: the floor l_p ≥ (n−m)/2 applies
        let s = theta_one_ktypes(ThetaParams::new(1, 4, 2), 1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.get(&[OLabel::det(4), lab(2, &[1])]), 1);
        assert!(theta_one_ktypes(ThetaParams::new(1, 2, 3), 2).is_err());
    }

    #[test]
    fn lowest_types() {
        let l = |mu: &[u32], p, r| lowest_type_l(&Partition::from_slice(mu), p, r).unwrap();
        assert_eq!(l(&[], 1, 2).entries(), &HalfIntVec::from_ints(&[1]));
        assert_eq!(l(&[2], 2, 4).entries(), &HalfIntVec::from_ints(&[4, 2]));
        assert_eq!(l(&[], 1, 3).entries(), &HalfIntVec::from_doubled(vec![3]));
        assert!(lowest_type_l(&Partition::from_slice(&[1, 1]), 1, 4).is_err());
    }

    #[test]
    fn omega_minimal_type_and_vanishing() {
        let op = OmegaParams::new(1, 2, 3, 3);
        let s = omega_ktypes(op, &OLabel::trivial(3), 3).unwrap();
        // minimal type d^p ((m−n)/2 1_p) ⊠ trivial
        let min = vec![lab(2, &[2]).det_twist(), OLabel::trivial(3)];
        assert_eq!(s.get(&min), 1);
        // l = (1) layer for mu = (1)
        let s = omega_ktypes(op, &lab(3, &[1]), 1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.get(&[lab(2, &[3]).det_twist(), OLabel::trivial(3)]), 1);
        // depth of mu above p
        let op = OmegaParams::new(1, 2, 4, 4);
        assert!(omega_ktypes(op, &lab(4, &[1, 1]), 4).unwrap().is_empty());
    }

    #[test]
    fn infchar_examples() {
        let op = OmegaParams::new(1, 2, 2, 2);
        let (c, reg) = infchar_theta_lift(op, &lab(2, &[2])).unwrap();
        assert_eq!(c.entries(), &HalfIntVec::from_ints(&[2, 0]));
        assert!(reg);
        let (c, reg) = infchar_theta_lift(op, &OLabel::trivial(2)).unwrap();
        assert_eq!(c.entries(), &HalfIntVec::from_ints(&[0, 0]));
        assert!(!reg);
        let (_, reg) = infchar_theta_lift(OmegaParams::new(2, 4, 4, 2), &lab(2, &[1])).unwrap();
        assert!(!reg);
    }

    #[test]
    fn correspondence_eq2_with_empty_source() {
        let src = canonical_infchar(&HalfIntVec::default(), 0).unwrap();
        let out = thm11_infchar_corr(&src, 0, 6, 1).unwrap();
        let expect = canonical_infchar(&rho_any(6).shift(-2), 6).unwrap();
        assert_eq!(out, expect);
        // with a = b the correspondence is the identity
        let src = lab(6, &[3]).infchar();
        assert_eq!(thm11_infchar_corr(&src, 6, 6, 1).unwrap(), src);
        let src = lab(6, &[2, 1]).infchar();
        assert!(matches!(
            thm11_infchar_corr(&src, 6, 6, 1),
            Err(Error::NotInPattern(_))
        ));
    }

    #[test]
    fn correspondence_rejects_foreign_source() {
        let src = canonical_infchar(&HalfIntVec::from_ints(&[3, 2]), 4).unwrap();
        assert!(matches!(
            thm11_infchar_corr(&src, 4, 6, 1),
            Err(Error::NotInPattern(_))
        ));
    }

    #[test]
    fn lift_infchar_agrees_with_correspondence() {
        for p in 1..=2usize {
            for n in 2 * p..=2 * p + 4 {
                for r in 1..=4usize {
                    for rprime in 1..=6usize {
                        let op = OmegaParams::new(p, n, r, rprime);
                        if op.theta().check().is_err() {
                            continue;
                        }
                        for lam in Partition::all_up_to(4, p.min(rprime / 2)) {
                            let mu = OLabel::new(rprime, lam, false).unwrap();
                            let (c, reg) = infchar_theta_lift(op, &mu).unwrap();
                            let via = thm11_infchar_corr(&mu.infchar(), rprime, n + r, p).unwrap();
                            assert_eq!(c, via, "{op} mu={mu}");
                            if rprime < 2 * p {
                                assert!(!reg);
                            } else {
                                assert_eq!(reg, mu.lam().part(p - 1) as i64 >= op.delta(), "{op} {mu}");
                            }
                        }
                    }
                }
            }
        }
    }

    fn all_labels(n: usize, max_size: u32) -> Vec<OLabel> {
        let mut out = Vec::new();
        for lam in Partition::all_up_to(max_size, n / 2) {
            let x = OLabel::new(n, lam, false).unwrap();
            if x.det_twist() != x {
                out.push(x.det_twist());
            }
            out.push(x);
        }
        out
    }

    #[test]
    fn seesaw_restriction() {
        for (p, n, r, rprime) in [(1, 2, 2, 2), (1, 2, 3, 3), (1, 4, 1, 3), (2, 4, 3, 3), (1, 3, 2, 3)] {
            let op = OmegaParams::new(p, n, r, rprime);
            let cutoff = 4;
            let whole = theta_one_restricted(op.theta(), r, cutoff).unwrap();
            let mut assembled = KTypeSum::truncated(op.truncation(cutoff));
            for mu in all_labels(rprime, cutoff) {
                for (k, m) in omega_ktypes(op, &mu, cutoff).unwrap().iter() {
                    assembled.add(vec![k[0].clone(), k[1].clone(), mu.clone()], m);
                }
            }
            assert!(assembled.same_terms(&whole), "{op}");
        }
    }

    #[test]
    fn outside_reductions() {
        let r = outside_stable_reduce(ThetaParams::new(2, 3, 5)).unwrap().unwrap();
        assert_eq!(r.case, OutsideCase::CaseI);
        assert_eq!(r.equivalent, ThetaParams::new(1, 3, 5));
        assert!(r.det_twisted);
        let r = outside_stable_reduce(ThetaParams::new(2, 3, 3)).unwrap().unwrap();
        assert_eq!(r.case, OutsideCase::CaseII);
        assert_eq!(r.equivalent, ThetaParams::new(0, 3, 3));
        assert!(!r.det_twisted);
        assert_eq!(outside_stable_reduce(ThetaParams::new(3, 4, 10)).unwrap(), None);
        assert!(outside_stable_reduce(ThetaParams::new(1, 2, 4)).is_err());
    }
}
