//! Cauchy and dual Cauchy expansions, and `GL(n)` dimensions.

use crate::error::{Error, Result};
use crate::orth::Ratio;
use crate::partition::Partition;

/// Partitions `mu` with `Sym^n(C^p ⊗ C^q) = Σ mu_{GL(p)} ⊗ mu_{GL(q)}`.
pub fn sym_cauchy(n: u32, p: usize, q: usize) -> Vec<Partition> {
    Partition::all_of_size(n, p.min(q), n)
}

/// Pairs `(nu, nu')` with `∧^n(C^p ⊗ C^q) = Σ nu_{GL(p)} ⊗ nu'_{GL(q)}`.
pub fn skew_cauchy(n: u32, p: usize, q: usize) -> Result<Vec<(Partition, Partition)>> {
    let max = p * q;
    if n as usize > max {
        return Err(Error::DegreeOutOfRange {
            degree: n as usize,
            max,
        });
    }
    Ok(Partition::all_of_size(n, p, q as u32)
        .into_iter()
        .map(|nu| {
            let c = nu.conjugate();
            (nu, c)
        })
        .collect())
}

/// Dimension of the `GL(n)` irreducible with highest weight `lam`; zero when
/// `lam` has more than `n` parts.
pub fn gl_dim(lam: &Partition, n: usize) -> u128 {
    if lam.depth() > n {
        return 0;
    }
    let l = lam.padded(n);
    let mut r = Ratio::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i128;
            r.mul(l[i] as i128 - l[j] as i128 + gap, gap);
        }
    }
    r.into_integer()
}
