//! Irreducible representations of `O(n)`.
//!
//! A label is a partition `lam` of depth at most `⌊n/2⌋` together with a
//! determinant-twist bit. Its full array in `Z^n` is `(lam, 0, ..., 0)` when
//! untwisted and `(lam, 1, ..., 1, 0, ..., 0)` with `n - 2·depth` ones and
//! `depth` zeros when twisted. For even `n` and `depth = n/2` both arrays
//! coincide and the label is stored untwisted.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weight::{canonical_infchar, rho_any, HalfIntVec, InfChar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OLabel {
    rank: usize,
    lam: Partition,
    eps: bool,
}

impl OLabel {
    pub fn new(rank: usize, lam: Partition, eps: bool) -> Result<Self> {
        if lam.depth() > rank / 2 {
            return Err(Error::InvalidParams(format!(
                "partition {lam} has depth {} > {} for O({rank})",
                lam.depth(),
                rank / 2
            )));
        }
        let eps = eps && !(rank % 2 == 0 && lam.depth() == rank / 2);
        Ok(OLabel { rank, lam, eps })
    }

    /// Untwisted label; panics on a depth violation. For literals.
    pub fn plain(rank: usize, parts: &[u32]) -> Self {
        OLabel::new(rank, Partition::from_slice(parts), false).expect("valid O(n) label")
    }

    pub fn trivial(rank: usize) -> Self {
        OLabel::plain(rank, &[])
    }

    /// The determinant character `d_n`.
    pub fn det(rank: usize) -> Self {
        OLabel::trivial(rank).det_twist()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn eps(&self) -> bool {
        self.eps
    }

    /// Nonzero entries of the full array, as a partition.
    pub fn highest_weight(&self) -> Partition {
        let a: Vec<u32> = self.to_full_array().into_iter().filter(|&x| x > 0).collect();
        Partition::new(a).expect("full arrays are weakly decreasing")
    }

    pub fn is_one_dimensional(&self) -> bool {
        self.lam.is_empty()
    }

    pub fn to_full_array(&self) -> Vec<u32> {
        let n = self.rank;
        let k = self.lam.depth();
        let mut a = self.lam.padded(k);
        if self.eps {
            a.extend(std::iter::repeat(1).take(n - 2 * k));
        }
        a.resize(n, 0);
        a
    }

    /// Parses a full array in `Z^n`; `None` if it is not one of the two
    /// admissible forms.
    pub fn from_full_array(arr: &[u32]) -> Option<OLabel> {
        let n = arr.len();
        if arr.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let nonzero = arr.iter().take_while(|&&a| a > 0).count();
        if nonzero <= n / 2 {
            let lam = Partition::new(arr[..nonzero].to_vec()).ok()?;
            return OLabel::new(n, lam, false).ok();
        }
        let k = n - nonzero;
        if arr[k..nonzero].iter().any(|&a| a != 1) {
            return None;
        }
        let lam = Partition::new(arr[..k].to_vec()).ok()?;
        OLabel::new(n, lam, true).ok()
    }

    pub fn det_twist(&self) -> OLabel {
        self.twist(true)
    }

    /// Multiplies by `d_n^k` where `odd = k mod 2`.
    pub fn twist(&self, odd: bool) -> OLabel {
        OLabel::new(self.rank, self.lam.clone(), self.eps ^ odd).expect("same depth")
    }

    /// Dimension by the Weyl dimension formula of type B or D; labels with
    /// depth exactly `n/2` (n even) are induced from two SO-constituents.
    pub fn dim(&self) -> u128 {
        let n = self.rank;
        let k = n / 2;
        if k == 0 {
            return 1;
        }
        let rho = rho_any(n);
        let r: Vec<i128> = rho.doubled().iter().map(|&x| x as i128).collect();
        let l: Vec<i128> = (0..k)
            .map(|i| 2 * self.lam.part(i) as i128 + r[i])
            .collect();
        let mut q = Ratio::one();
        for i in 0..k {
            for j in i + 1..k {
                q.mul(l[i] * l[i] - l[j] * l[j], r[i] * r[i] - r[j] * r[j]);
            }
        }
        if n % 2 == 1 {
            for i in 0..k {
                q.mul(l[i], r[i]);
            }
        }
        let so = q.into_integer();
        if n % 2 == 0 && self.lam.depth() == k {
            2 * so
        } else {
            so
        }
    }

    /// `lam` padded to `⌊n/2⌋` entries plus `ρ_n`, canonicalized.
    pub fn infchar(&self) -> InfChar {
        let k = self.rank / 2;
        let lam: Vec<i64> = self.lam.padded(k).iter().map(|&x| x as i64).collect();
        let v = HalfIntVec::from_ints(&lam).add(&rho_any(self.rank));
        canonical_infchar(&v, self.rank).expect("lam + rho is uniform")
    }

    /// Parses `[2,1]`, `d*[2,1]` or the display form `d(2,1)` as a label of
    /// `O(rank)`.
    pub fn parse(s: &str, rank: usize) -> Result<OLabel> {
        let s = s.trim();
        let (eps, body) = match s.strip_prefix("d*") {
            Some(rest) => (true, rest),
            None => match s.strip_prefix('d') {
                Some(rest) if rest.starts_with(['(', '[']) => (true, rest),
                _ => (false, s),
            },
        };
        if body == "d" {
            return Ok(OLabel::det(rank));
        }
        let lam: Partition = body.parse()?;
        OLabel::new(rank, lam, eps)
    }

    /// Label syntax accepted by [`OLabel::parse`].
    pub fn syntax(&self) -> String {
        let parts: Vec<String> = self.lam.parts().iter().map(|p| p.to_string()).collect();
        let body = format!("[{}]", parts.join(","));
        if self.eps {
            format!("d*{body}")
        } else {
            body
        }
    }
}

/// Displays as `(2,1)` or `d(2,1)`; the trivial label is `(0)`.
impl fmt::Display for OLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps {
            write!(f, "d")?;
        }
        write!(f, "{}", self.lam)
    }
}

/// All `O(n)` labels whose full arrays interlace the full array of `x`,
/// a label of `O(n+1)`. Each appears once.
pub fn branch_one_step(x: &OLabel) -> Vec<OLabel> {
    let upper = x.to_full_array();
    let n = x.rank.saturating_sub(1);
    if x.rank == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    interlace(&upper, &mut cur, &mut out);
    out.sort();
    out
}

fn interlace(upper: &[u32], cur: &mut Vec<u32>, out: &mut Vec<OLabel>) {
    let i = cur.len();
    if i + 1 == upper.len() {
        if let Some(label) = OLabel::from_full_array(cur) {
            out.push(label);
        }
        return;
    }
    for v in upper[i + 1]..=upper[i] {
        cur.push(v);
        interlace(upper, cur, out);
        cur.pop();
    }
}

/// Exact rational accumulator for the Weyl formula.
pub(crate) struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    pub(crate) fn one() -> Self {
        Ratio { num: 1, den: 1 }
    }

    pub(crate) fn mul(&mut self, a: i128, b: i128) {
        let g1 = gcd(a, self.den);
        let g2 = gcd(b, self.num);
        self.num = (self.num / g2) * (a / g1);
        self.den = (self.den / g1) * (b / g2);
        if self.den < 0 {
            self.num = -self.num;
            self.den = -self.den;
        }
    }

    pub(crate) fn into_integer(self) -> u128 {
        debug_assert_eq!(self.num % self.den, 0);
        (self.num / self.den).unsigned_abs()
    }
}

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}
