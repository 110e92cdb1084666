//! Half-integer weights, ρ-vectors and Weyl-orbit canonical forms for
//! infinitesimal characters of `so(N)`.
//!
//! Every half-integer is stored doubled, so `3/2` is the integer `3`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector of half-integers stored as doubled integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfIntVec(Vec<i64>);

impl HalfIntVec {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        HalfIntVec(doubled)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        HalfIntVec(values.iter().map(|v| 2 * v).collect())
    }

    /// `len` copies of the half-integer `doubled / 2`.
    pub fn constant(doubled: i64, len: usize) -> Self {
        HalfIntVec(vec![doubled; len])
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &HalfIntVec) -> HalfIntVec {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        HalfIntVec(v)
    }

    /// Entrywise sum; the shorter vector is padded with zeros.
    pub fn add(&self, other: &HalfIntVec) -> HalfIntVec {
        let len = self.len().max(other.len());
        let get = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
        HalfIntVec((0..len).map(|i| get(&self.0, i) + get(&other.0, i)).collect())
    }

    /// Adds the half-integer `doubled / 2` to every entry.
    pub fn shift(&self, doubled: i64) -> HalfIntVec {
        HalfIntVec(self.0.iter().map(|v| v + doubled).collect())
    }

    pub fn padded(&self, len: usize) -> HalfIntVec {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        HalfIntVec(v)
    }

    fn parity(&self) -> Option<bool> {
        let mut it = self.0.iter().map(|v| v.rem_euclid(2) == 1);
        let first = it.next()?;
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// True if all entries are integers or all are strict half-integers.
    pub fn is_uniform(&self) -> bool {
        self.is_empty() || self.parity().is_some()
    }
}

impl fmt::Display for HalfIntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if v % 2 == 0 {
                write!(f, "{}", v / 2)?;
            } else {
                write!(f, "{}/2", v)?;
            }
        }
        write!(f, ")")
    }
}

/// Root system type of `so(N)`: `B` for odd `N`, `D` for even `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    B,
    D,
}

impl RootType {
    pub fn of(n: usize) -> RootType {
        if n % 2 == 1 {
            RootType::B
        } else {
            RootType::D
        }
    }
}

/// Canonical representative of an infinitesimal character of `so(N)` under
/// the full signed-permutation group: absolute values sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InfChar {
    n: usize,
    entries: HalfIntVec,
}

impl InfChar {
    /// The `N` of `so(N)`.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n / 2
    }

    pub fn root_type(&self) -> RootType {
        RootType::of(self.n)
    }

    pub fn entries(&self) -> &HalfIntVec {
        &self.entries
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries)
    }
}

/// Half sum of positive roots of `so(N)`, `(N/2-1, N/2-2, ...)` of length `⌊N/2⌋`.
pub fn rho(n: usize) -> Result<HalfIntVec> {
    if n < 2 {
        return Err(Error::InvalidRank(format!("rho needs N >= 2, got {n}")));
    }
    Ok(rho_any(n))
}

/// `rho` extended to `N ∈ {0, 1}` as the empty vector.
pub(crate) fn rho_any(n: usize) -> HalfIntVec {
    let k = n / 2;
    HalfIntVec((1..=k as i64).map(|i| n as i64 - 2 * i).collect())
}

pub fn canonical_infchar(v: &HalfIntVec, n: usize) -> Result<InfChar> {
    if v.len() != n / 2 {
        return Err(Error::InvalidRank(format!(
            "vector of length {} for so({n}) (expected {})",
            v.len(),
            n / 2
        )));
    }
    if !v.is_uniform() {
        return Err(Error::MixedParity);
    }
    let mut e: Vec<i64> = v.0.iter().map(|x| x.abs()).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    Ok(InfChar {
        n,
        entries: HalfIntVec(e),
    })
}

/// Regularity with respect to `W(B)` for odd `N` and `W(D)` for even `N`.
pub fn is_regular(c: &InfChar) -> bool {
    let e = c.entries.doubled();
    let distinct = e.windows(2).all(|w| w[0] != w[1]);
    match c.root_type() {
        RootType::B => distinct && e.iter().all(|&x| x != 0),
        RootType::D => distinct,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[i64]) -> HalfIntVec {
        HalfIntVec::from_ints(v)
    }

    #[test]
    fn rho_small_ranks() {
        assert_eq!(rho(4).unwrap(), h(&[1, 0]));
        assert_eq!(rho(5).unwrap(), HalfIntVec::from_doubled(vec![3, 1]));
        assert_eq!(rho(8).unwrap(), h(&[3, 2, 1, 0]));
        assert!(matches!(rho(1), Err(Error::InvalidRank(_))));
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_infchar(&h(&[-1, 2, 0]), 6).unwrap();
        assert_eq!(c.entries(), &h(&[2, 1, 0]));
        let c = canonical_infchar(&h(&[0, 0]), 4).unwrap();
        assert_eq!(c.entries(), &h(&[0, 0]));
        let c = canonical_infchar(&HalfIntVec::from_doubled(vec![1, -3]), 5).unwrap();
        assert_eq!(c.entries(), &HalfIntVec::from_doubled(vec![3, 1]));
    }

    #[test]
    fn canonical_errors() {
        assert_eq!(
            canonical_infchar(&HalfIntVec::from_doubled(vec![1, 2]), 4),
            Err(Error::MixedParity)
        );
        assert!(matches!(
            canonical_infchar(&h(&[1]), 4),
            Err(Error::InvalidRank(_))
        ));
    }

    #[test]
    fn regularity_conventions() {
        assert!(is_regular(&canonical_infchar(&h(&[2, 1, 0]), 6).unwrap()));
        assert!(!is_regular(&canonical_infchar(&h(&[2, 1, 1]), 6).unwrap()));
        assert!(!is_regular(&canonical_infchar(&h(&[2, 1, 1]), 7).unwrap()));
        assert!(!is_regular(&canonical_infchar(&h(&[2, 1, 0]), 7).unwrap()));
        let b = canonical_infchar(&HalfIntVec::from_doubled(vec![3, 1]), 5).unwrap();
        assert!(is_regular(&b));
    }

    #[test]
    fn trivial_infchar_type_d_is_rho() {
        for k in 1..6 {
            let r = rho(2 * k).unwrap();
            let c = canonical_infchar(&r, 2 * k).unwrap();
            assert_eq!(c.entries(), &r);
            assert!(is_regular(&c));
        }
    }

    #[test]
    fn display_half_integers() {
        assert_eq!(HalfIntVec::from_doubled(vec![5, 2, -1]).to_string(), "(5/2,1,-1/2)");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn vec_strategy() -> impl Strategy<Value = (Vec<i64>, bool)> {
            (prop::collection::vec(-6i64..6, 0..6), any::<bool>())
        }

        proptest! {
            #[test]
            fn canonical_is_orbit_invariant((base, half) in vec_strategy(), seed in any::<u64>()) {
                let doubled: Vec<i64> = base.iter().map(|x| 2 * x + half as i64).collect();
                let n = 2 * doubled.len() + (seed % 2) as usize;
                let v = HalfIntVec::from_doubled(doubled.clone());
                let c = canonical_infchar(&v, n).unwrap();
                // idempotent
                prop_assert_eq!(&canonical_infchar(c.entries(), n).unwrap(), &c);
                // invariant under sign flips and a rotation
                let mut w: Vec<i64> = doubled.iter().enumerate()
                    .map(|(i, x)| if (seed >> i) & 1 == 1 { -x } else { *x })
                    .collect();
                if !w.is_empty() {
                    let k = (seed as usize / 7) % w.len();
                    w.rotate_left(k);
                }
                let c2 = canonical_infchar(&HalfIntVec::from_doubled(w), n).unwrap();
                prop_assert_eq!(c2, c);
            }
        }
    }
}
