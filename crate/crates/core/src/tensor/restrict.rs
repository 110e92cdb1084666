//! Restriction `GL(n) ↓ O(n)`, tensor products of `O(n)` and branching
//! `O(a+b) ↓ O(a) × O(b)`.
//!
//! The stable-range rules (Littlewood restriction, Newell–Littlewood) carry
//! strict depth guards. [`restrict_gl`] handles every partition by
//! specializing universal characters with the rim-hook modification rule.
//! Tensor products outside the Newell–Littlewood range are recovered from
//! `GL(n)` products by unitriangular inversion, and branching to
//! `O(a) × O(b)` likewise from `GL(a+b) ↓ GL(a) × GL(b)`.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::ktype::{KTypeSum, VirtualSum};
use crate::orth::OLabel;
use crate::partition::Partition;
use crate::tensor::lr::{lr_pairs, lr_product, lr_skew};

/// `σ ↦ Σ_{δ even rows} c^lam_{σ,δ}`: the `O(n)` content of the `GL(n)`
/// irreducible `lam` in the stable range. Unitriangular, `lam ↦ 1`.
pub fn even_row_content(lam: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for s in (0..=lam.size()).step_by(2) {
        for delta in Partition::all_of_size(s, lam.depth(), lam.part(0)) {
            if !delta.has_even_rows() || !delta.is_contained_in(lam) {
                continue;
            }
            for (sigma, c) in lr_skew(lam, &delta) {
                *out.entry(sigma).or_insert(0) += c;
            }
        }
    }
    out
}

fn outside(what: String) -> Error {
    Error::OutsideStableCombinatorics(what)
}

fn single(label: OLabel, mult: u64) -> KTypeSum {
    let mut s = KTypeSum::new();
    s.add(vec![label], mult);
    s
}

/// Littlewood restriction of the `GL(n)` irreducible `lam` to `O(n)`.
/// Requires `ℓ(lam) ≤ n/2`.
pub fn littlewood_restrict(lam: &Partition, n: usize) -> Result<KTypeSum> {
    if lam.depth() > n / 2 {
        return Err(outside(format!(
            "Littlewood restriction of {lam} to O({n}) needs depth <= {}",
            n / 2
        )));
    }
    let mut out = KTypeSum::new();
    for (sigma, c) in even_row_content(lam) {
        out.add(vec![OLabel::new(n, sigma, false)?], c);
    }
    Ok(out)
}

/// Restriction of the `GL(n)` irreducible `gamma` to `O(n)`, for any
/// partition. Terms of the Littlewood sum that are not `O(n)` labels are
/// brought to standard form by [`modify`].
pub fn restrict_gl(gamma: &Partition, n: usize) -> Result<KTypeSum> {
    if gamma.depth() <= n / 2 {
        return littlewood_restrict(gamma, n);
    }
    if gamma.depth() > n {
        return Ok(KTypeSum::new());
    }
    let mut acc = VirtualSum::new();
    for (sigma, c) in even_row_content(gamma) {
        if let Some((label, sign)) = modify(&sigma, n) {
            acc.add(vec![label], sign * c as i64);
        }
    }
    acc.into_ktypes()
}

/// Specializes the universal orthogonal character of `mu` to `O(n)`:
/// `None` when it vanishes, otherwise a label and a sign.
///
/// While `h = 2ℓ(mu) − n > 0`, a rim hook of length `h` starting at the
/// foot of the first column is removed; each removal contributes
/// `(−1)^{columns − 1}` and a determinant twist.
pub fn modify(mu: &Partition, n: usize) -> Option<(OLabel, i64)> {
    let mut rows = mu.parts().to_vec();
    let mut sign = 1i64;
    let mut twist = false;
    while 2 * rows.len() > n {
        let h = 2 * rows.len() - n;
        let (rest, columns) = remove_rim_hook(&rows, h)?;
        rows = rest;
        if columns % 2 == 0 {
            sign = -sign;
        }
        twist = !twist;
    }
    let label = OLabel::new(n, Partition::new(rows).ok()?, twist).ok()?;
    Some((label, sign))
}

/// Removes the rim hook of length `h` that starts at the bottom box of the
/// first column. Returns the remaining rows and the number of columns the
/// hook spans, or `None` if the removal does not leave a partition.
fn remove_rim_hook(rows: &[u32], h: usize) -> Option<(Vec<u32>, usize)> {
    let mut rows = rows.to_vec();
    let mut i = rows.len() - 1;
    let mut entry_col = 1u32;
    let mut left = h as u32;
    loop {
        let run = rows[i] - entry_col + 1;
        if left < run {
            return None;
        }
        left -= run;
        let last_col = rows[i];
        rows[i] = entry_col - 1;
        if left == 0 {
            while rows.last() == Some(&0) {
                rows.pop();
            }
            // the hook runs from column 1 to `last_col`
            return Some((rows, last_col as usize));
        }
        if i == 0 {
            return None;
        }
        i -= 1;
        entry_col = last_col;
    }
}

fn check_same_rank(a: &OLabel, b: &OLabel) -> Result<usize> {
    if a.rank() != b.rank() {
        return Err(Error::InvalidRank(format!(
            "tensor of O({}) and O({}) labels",
            a.rank(),
            b.rank()
        )));
    }
    Ok(a.rank())
}

/// Newell–Littlewood product, `N^γ_{αβ} = Σ c^α_{δε} c^β_{δφ} c^γ_{εφ}`.
/// Requires `ℓ(α) + ℓ(β) ≤ n/2`.
pub fn newell_littlewood(a: &OLabel, b: &OLabel) -> Result<KTypeSum> {
    let n = check_same_rank(a, b)?;
    if a.lam().depth() + b.lam().depth() > n / 2 {
        return Err(outside(format!(
            "Newell–Littlewood product {a} ⊗ {b} over O({n}) needs total depth <= {}",
            n / 2
        )));
    }
    Ok(nl_plain(n, a.lam(), b.lam())?.twisted(&[a.eps() ^ b.eps()]))
}

fn nl_plain(n: usize, alpha: &Partition, beta: &Partition) -> Result<KTypeSum> {
    let mut coeffs: BTreeMap<Partition, u64> = BTreeMap::new();
    let max = alpha.size().min(beta.size());
    for s in 0..=max {
        for delta in Partition::all_of_size(s, alpha.depth().min(beta.depth()), max) {
            if !delta.is_contained_in(alpha) || !delta.is_contained_in(beta) {
                continue;
            }
            let eps_side = lr_skew(alpha, &delta);
            let phi_side = lr_skew(beta, &delta);
            for (e, c1) in &eps_side {
                for (f, c2) in &phi_side {
                    for (g, c3) in lr_product(e, f, n / 2) {
                        *coeffs.entry(g).or_insert(0) += c1 * c2 * c3;
                    }
                }
            }
        }
    }
    let mut out = KTypeSum::new();
    for (g, c) in coeffs {
        out.add(vec![OLabel::new(n, g, false)?], c);
    }
    Ok(out)
}

type TensorKey = (usize, Partition, Partition);
type BranchKey = (Partition, usize, usize);

static TENSOR_MEMO: LazyLock<DashMap<TensorKey, Result<KTypeSum>>> = LazyLock::new(DashMap::new);
static BRANCH_MEMO: LazyLock<DashMap<BranchKey, Result<KTypeSum>>> = LazyLock::new(DashMap::new);

/// Drops the tensor and branching memos built on top of the LR cache.
pub fn clear_memos() {
    TENSOR_MEMO.clear();
    BRANCH_MEMO.clear();
}

/// Tensor product of two `O(n)` irreducibles. Uses Newell–Littlewood when
/// it applies and the `GL(n)` lift otherwise.
pub fn tensor(a: &OLabel, b: &OLabel) -> Result<KTypeSum> {
    let n = check_same_rank(a, b)?;
    Ok(tensor_plain(n, a.lam(), b.lam())?.twisted(&[a.eps() ^ b.eps()]))
}

/// Tensor product computed only through the `GL(n)` lift; exposed so the
/// two routes can be compared.
pub fn tensor_via_gl(a: &OLabel, b: &OLabel) -> Result<KTypeSum> {
    let n = check_same_rank(a, b)?;
    Ok(gl_lift(n, a.lam(), b.lam())?.twisted(&[a.eps() ^ b.eps()]))
}

fn tensor_plain(n: usize, alpha: &Partition, beta: &Partition) -> Result<KTypeSum> {
    let (alpha, beta) = if alpha <= beta {
        (alpha, beta)
    } else {
        (beta, alpha)
    };
    if alpha.is_empty() {
        return Ok(single(OLabel::new(n, beta.clone(), false)?, 1));
    }
    let key = (n, alpha.clone(), beta.clone());
    if let Some(v) = TENSOR_MEMO.get(&key) {
        return v.clone();
    }
    let v = if alpha.depth() + beta.depth() <= n / 2 {
        nl_plain(n, alpha, beta)
    } else {
        gl_lift(n, alpha, beta)
    };
    TENSOR_MEMO.insert(key, v.clone());
    v
}

// Res(V_α ⊗ V_β) = Σ_γ c^γ_{αβ} Res V_γ = Σ_{σ,τ} A_{ασ} A_{βτ} (σ ⊗ τ),
// with A unitriangular, so α ⊗ β is the remainder after peeling off
// strictly smaller pairs.
fn gl_lift(n: usize, alpha: &Partition, beta: &Partition) -> Result<KTypeSum> {
    let mut acc = VirtualSum::new();
    for (gamma, c) in lr_product(alpha, beta, n) {
        acc.add_sum(&VirtualSum::from(&restrict_gl(&gamma, n)?), c as i64);
    }
    let a_side = even_row_content(alpha);
    let b_side = even_row_content(beta);
    for (sigma, c1) in &a_side {
        for (tau, c2) in &b_side {
            if sigma == alpha && tau == beta {
                continue;
            }
            let lower = tensor_plain(n, sigma, tau)?;
            acc.add_sum(&VirtualSum::from(&lower), -((c1 * c2) as i64));
        }
    }
    acc.into_ktypes()
}

/// Branching `O(a+b) ↓ O(a) × O(b)` in the stable range: requires
/// `ℓ(x) ≤ a/2`, `ℓ(x) ≤ b/2` and an untwisted `x`.
pub fn stable_o_branch(x: &OLabel, a: usize, b: usize) -> Result<KTypeSum> {
    let depth = x.lam().depth();
    if depth > a / 2 || depth > b / 2 {
        return Err(outside(format!(
            "branching {x} from O({}) to O({a})×O({b}) needs depth <= {}",
            a + b,
            (a / 2).min(b / 2)
        )));
    }
    if x.eps() {
        return Err(Error::InvalidParams(format!(
            "stable branching expects an untwisted label, got {x}"
        )));
    }
    stable_o_branch_ext(x, a, b)
}

/// Branching `O(a+b) ↓ O(a) × O(b)` for any label, by triangular inversion
/// over `GL(a+b) ↓ GL(a) × GL(b)`. Fails only where a `GL` restriction
/// leaves the extended domain.
pub fn stable_o_branch_ext(x: &OLabel, a: usize, b: usize) -> Result<KTypeSum> {
    if x.rank() != a + b {
        return Err(Error::InvalidRank(format!(
            "{x} is a label of O({}), not O({a}+{b})",
            x.rank()
        )));
    }
    Ok(branch_plain(x.lam(), a, b)?.twisted(&[x.eps(), x.eps()]))
}

fn branch_plain(lam: &Partition, a: usize, b: usize) -> Result<KTypeSum> {
    let key = (lam.clone(), a, b);
    if let Some(v) = BRANCH_MEMO.get(&key) {
        return v.clone();
    }
    let v = branch_uncached(lam, a, b);
    BRANCH_MEMO.insert(key, v.clone());
    v
}

fn branch_uncached(lam: &Partition, a: usize, b: usize) -> Result<KTypeSum> {
    let mut acc = VirtualSum::new();
    for (mu, nu, c) in lr_pairs(lam) {
        if mu.depth() > a || nu.depth() > b {
            continue;
        }
        let piece = restrict_gl(&mu, a)?.outer(&restrict_gl(&nu, b)?);
        acc.add_sum(&VirtualSum::from(&piece), c as i64);
    }
    for (sigma, c) in even_row_content(lam) {
        if &sigma == lam {
            continue;
        }
        acc.add_sum(&VirtualSum::from(&branch_plain(&sigma, a, b)?), -(c as i64));
    }
    acc.into_ktypes()
}

/// Multiplicity of `kappa ⊠ mu` in the restriction of `(l)_{O(m)}` to
/// `O(r) × O(r')`, where `r, r'` are the ranks of `kappa` and `mu`.
pub fn branch_mult(l: &Partition, m: usize, kappa: &OLabel, mu: &OLabel) -> Result<u64> {
    if kappa.rank() + mu.rank() != m {
        return Err(Error::InvalidRank(format!(
            "O({}) × O({}) is not a block subgroup of O({m})",
            kappa.rank(),
            mu.rank()
        )));
    }
    if l.depth() > m / 2 {
        return Err(outside(format!("{l} has depth > {} for O({m})", m / 2)));
    }
    let x = OLabel::new(m, l.clone(), false)?;
    Ok(stable_o_branch_ext(&x, kappa.rank(), mu.rank())?.get(&[kappa.clone(), mu.clone()]))
}
