//! Finite formal sums of K-types.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orth::OLabel;

/// A K-type of `O(a) × O(b) × ...`: one label per factor.
pub type KType = Vec<OLabel>;

/// Which terms of a truncated sum are known to be complete.
///
/// A term is inside the truncation when the size of its partition in
/// `slot`, minus `offset`, is at most `cutoff`. Every stored term is inside;
/// every term of the untruncated object that is inside is stored with its
/// full multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub cutoff: u32,
    pub slot: usize,
    pub offset: i64,
}

impl Truncation {
    pub fn new(cutoff: u32, slot: usize, offset: i64) -> Self {
        Truncation {
            cutoff,
            slot,
            offset,
        }
    }

    /// Graded degree of a K-type under this truncation.
    pub fn degree(&self, k: &[OLabel]) -> i64 {
        k[self.slot].lam().size() as i64 - self.offset
    }

    pub fn admits(&self, k: &[OLabel]) -> bool {
        self.degree(k) <= self.cutoff as i64
    }
}

/// An ℕ-linear combination of K-types with truncation metadata.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTypeSum {
    terms: BTreeMap<KType, u64>,
    truncation: Option<Truncation>,
}

impl KTypeSum {
    pub fn new() -> Self {
        KTypeSum::default()
    }

    pub fn truncated(truncation: Truncation) -> Self {
        KTypeSum {
            terms: BTreeMap::new(),
            truncation: Some(truncation),
        }
    }

    pub fn truncation(&self) -> Option<Truncation> {
        self.truncation
    }

    pub fn set_truncation(&mut self, truncation: Option<Truncation>) {
        self.truncation = truncation;
        if let Some(t) = truncation {
            self.terms.retain(|k, _| t.admits(k));
        }
    }

    /// Adds `mult` copies of `k`; terms outside the truncation are dropped.
    pub fn add(&mut self, k: KType, mult: u64) {
        if mult == 0 {
            return;
        }
        if let Some(t) = &self.truncation {
            if !t.admits(&k) {
                return;
            }
        }
        *self.terms.entry(k).or_insert(0) += mult;
    }

    pub fn add_sum(&mut self, other: &KTypeSum, scale: u64) {
        for (k, m) in &other.terms {
            self.add(k.clone(), m * scale);
        }
    }

    pub fn get(&self, k: &[OLabel]) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&KType, u64)> {
        self.terms.iter().map(|(k, m)| (k, *m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Σ multiplicity × product of dimensions.
    pub fn total_dim(&self) -> u128 {
        self.terms
            .iter()
            .map(|(k, m)| *m as u128 * k.iter().map(OLabel::dim).product::<u128>())
            .sum()
    }

    /// Terms of degree at most `cutoff` under `truncation`.
    pub fn restricted(&self, truncation: Truncation) -> KTypeSum {
        let mut out = KTypeSum::truncated(truncation);
        for (k, m) in &self.terms {
            out.add(k.clone(), *m);
        }
        out
    }

    /// External product: each pair of terms concatenated, multiplicities
    /// multiplied. The result is untruncated.
    pub fn outer(&self, other: &KTypeSum) -> KTypeSum {
        let mut out = KTypeSum::new();
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                let mut k = a.clone();
                k.extend(b.iter().cloned());
                out.add(k, m * n);
            }
        }
        out
    }

    /// Twists slot `i` by the determinant when `odd[i]` is set.
    pub fn twisted(&self, odd: &[bool]) -> KTypeSum {
        let mut out = KTypeSum {
            terms: BTreeMap::new(),
            truncation: self.truncation,
        };
        for (k, m) in &self.terms {
            let k: KType = k
                .iter()
                .enumerate()
                .map(|(i, l)| l.twist(odd.get(i).copied().unwrap_or(false)))
                .collect();
            out.add(k, *m);
        }
        out
    }

    /// Every multiplicity of `self` is at most the one in `other`.
    pub fn is_contained_in(&self, other: &KTypeSum) -> bool {
        self.terms.iter().all(|(k, m)| *m <= other.get(k))
    }

    /// Multiset equality of the terms, ignoring truncation metadata.
    pub fn same_terms(&self, other: &KTypeSum) -> bool {
        self.terms == other.terms
    }

    /// Terms whose multiplicities differ, as `(ktype, left, right)`.
    pub fn diff(&self, other: &KTypeSum) -> Vec<TermDiff> {
        let mut keys: Vec<&KType> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.get(k), other.get(k));
                (a != b).then(|| TermDiff {
                    ktype: ktype_string(k),
                    left: a,
                    right: b,
                })
            })
            .collect()
    }

    /// Human-readable form `(1)⊠(0) + 2·(0)⊠(1)`, largest terms first.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(k, m)| {
                if *m == 1 {
                    ktype_string(k)
                } else {
                    format!("{m}·{}", ktype_string(k))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for KTypeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

pub fn ktype_string(k: &[OLabel]) -> String {
    k.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("⊠")
}

/// A differing term between two compared sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDiff {
    pub ktype: String,
    pub left: u64,
    pub right: u64,
}

/// ℤ-linear combination used during triangular inversions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct VirtualSum {
    terms: BTreeMap<KType, i64>,
}

impl VirtualSum {
    pub fn new() -> Self {
        VirtualSum::default()
    }

    pub fn add(&mut self, k: KType, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(k) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn add_sum(&mut self, other: &VirtualSum, scale: i64) {
        for (k, m) in &other.terms {
            self.add(k.clone(), m * scale);
        }
    }

    pub fn into_ktypes(self) -> Result<KTypeSum> {
        let mut out = KTypeSum::new();
        for (k, m) in self.terms {
            if m < 0 {
                return Err(Error::Internal(format!(
                    "negative multiplicity {m} for {}",
                    ktype_string(&k)
                )));
            }
            out.add(k, m as u64);
        }
        Ok(out)
    }
}

impl From<&KTypeSum> for VirtualSum {
    fn from(s: &KTypeSum) -> Self {
        let mut v = VirtualSum::new();
        for (k, m) in s.iter() {
            v.add(k.clone(), m as i64);
        }
        v
    }
}
