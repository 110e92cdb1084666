use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zuckerman::AssemblyMode;

/// An inclusive integer range `a..b`, a comma list, or a single value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RangeRepr", into = "String")]
pub struct ParamRange(Vec<usize>);

#[derive(Deserialize)]
#[serde(untagged)]
enum RangeRepr {
    One(usize),
    List(Vec<usize>),
    Text(String),
}

impl TryFrom<RangeRepr> for ParamRange {
    type Error = Error;

    fn try_from(r: RangeRepr) -> Result<Self> {
        match r {
            RangeRepr::One(x) => Ok(ParamRange(vec![x])),
            RangeRepr::List(v) => ParamRange::from_values(v),
            RangeRepr::Text(s) => s.parse(),
        }
    }
}

impl From<ParamRange> for String {
    fn from(r: ParamRange) -> String {
        r.to_string()
    }
}

impl ParamRange {
    pub fn from_values(mut v: Vec<usize>) -> Result<Self> {
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::Parse("empty range".into()));
        }
        Ok(ParamRange(v))
    }

    pub fn span(a: usize, b: usize) -> Self {
        ParamRange((a..=b).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad range {s:?}"));
        let mut out = Vec::new();
        for piece in s.split(',').map(str::trim) {
            if let Some((a, b)) = piece.split_once("..") {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            } else {
                out.push(piece.parse().map_err(|_| bad())?);
            }
        }
        ParamRange::from_values(out)
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.0;
        let contiguous = v.windows(2).all(|w| w[1] == w[0] + 1);
        if v.len() > 1 && contiguous {
            write!(f, "{}..{}", v[0], v[v.len() - 1])
        } else {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Grid and resources for a verification run. Unset ranges fall back to
/// the suite's default grid.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub p: Option<ParamRange>,
    pub n: Option<ParamRange>,
    pub m: Option<ParamRange>,
    pub r: Option<ParamRange>,
    pub rprime: Option<ParamRange>,
    pub t: Option<ParamRange>,
    pub mu_depth: Option<usize>,
    pub mu_size: Option<u32>,
    pub cutoff: Option<u32>,
    /// Upper bound on `n + r` for checks that build `O(n+r)`-labels.
    pub max_rank: Option<usize>,
    pub jobs: Option<usize>,
    pub cache: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub brute_force: Option<bool>,
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    /// Fields set in `flags` replace those of `self`.
    pub fn merged(self, flags: RunConfig) -> RunConfig {
        RunConfig {
            p: flags.p.or(self.p),
            n: flags.n.or(self.n),
            m: flags.m.or(self.m),
            r: flags.r.or(self.r),
            rprime: flags.rprime.or(self.rprime),
            t: flags.t.or(self.t),
            mu_depth: flags.mu_depth.or(self.mu_depth),
            mu_size: flags.mu_size.or(self.mu_size),
            cutoff: flags.cutoff.or(self.cutoff),
            max_rank: flags.max_rank.or(self.max_rank),
            jobs: flags.jobs.or(self.jobs),
            cache: flags.cache.or(self.cache),
            output: flags.output.or(self.output),
            brute_force: flags.brute_force.or(self.brute_force),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cutoff == Some(0) {
            return Err(Error::Parse("cutoff must be at least 1".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::Parse("jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn mode(&self) -> AssemblyMode {
        if self.brute_force.unwrap_or(false) {
            AssemblyMode::BruteForce
        } else {
            AssemblyMode::Formula
        }
    }
}
