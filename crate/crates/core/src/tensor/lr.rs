//! Littlewood–Richardson coefficients by enumeration of LR tableaux, with a
//! process-wide memo that can be persisted as versioned JSON.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::LazyLock;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Bumped whenever the meaning of a cached entry could change.
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Environment variable overriding the cache path.
pub const CACHE_ENV: &str = "KTYPES_CACHE";

type Key = (Partition, Partition, Partition);

#[derive(Default)]
pub struct LrCache {
    map: DashMap<Key, u64>,
    hits: AtomicU64,
    misses: AtomicU64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheStats {
    pub entries: u64,
    pub hits: u64,
    pub misses: u64,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, u64>,
}

/// Outcome of [`LrCache::load`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadOutcome {
    Loaded(usize),
    Missing,
    /// Unreadable, corrupt or version-mismatched; nothing was loaded.
    Discarded(String),
}

impl LrCache {
    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.map.len() as u64,
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
        }
    }

    pub fn clear(&self) {
        self.map.clear();
        self.hits.store(0, Ordering::Relaxed);
        self.misses.store(0, Ordering::Relaxed);
    }

    pub fn reset_stats(&self) {
        self.hits.store(0, Ordering::Relaxed);
        self.misses.store(0, Ordering::Relaxed);
    }

    fn get_or_compute(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let key = (lam.clone(), mu.clone(), nu.clone());
        if let Some(v) = self.map.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return *v;
        }
        // The shard lock is held while computing, so each coefficient is
        // computed once even under contention.
        *self.map.entry(key).or_insert_with(|| {
            self.misses.fetch_add(1, Ordering::Relaxed);
            lr_coeff_uncached(lam, mu, nu)
        })
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let entries: BTreeMap<String, u64> = self
            .map
            .iter()
            .map(|e| {
                let (l, m, n) = e.key();
                (key_string(l, m, n), *e.value())
            })
            .collect();
        let file = CacheFile {
            version: CACHE_FORMAT_VERSION,
            entries,
        };
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        fs::write(path, serde_json::to_string(&file)?)
    }

    /// Merges a cache file into memory. Anything suspicious discards the
    /// whole file.
    pub fn load(&self, path: &Path) -> LoadOutcome {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return LoadOutcome::Missing,
            Err(e) => return LoadOutcome::Discarded(e.to_string()),
        };
        let file: CacheFile = match serde_json::from_str(&text) {
            Ok(f) => f,
            Err(e) => return LoadOutcome::Discarded(format!("corrupt cache: {e}")),
        };
        if file.version != CACHE_FORMAT_VERSION {
            return LoadOutcome::Discarded(format!(
                "cache version {} != {}",
                file.version, CACHE_FORMAT_VERSION
            ));
        }
        let mut parsed = Vec::with_capacity(file.entries.len());
        for (k, v) in &file.entries {
            match parse_key(k) {
                Some(key) => parsed.push((key, *v)),
                None => return LoadOutcome::Discarded(format!("bad cache key {k:?}")),
            }
        }
        let n = parsed.len();
        for (key, v) in parsed {
            self.map.insert(key, v);
        }
        LoadOutcome::Loaded(n)
    }
}

fn key_string(l: &Partition, m: &Partition, n: &Partition) -> String {
    let f = |p: &Partition| {
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("{}|{}|{}", f(l), f(m), f(n))
}

fn parse_key(s: &str) -> Option<Key> {
    let mut it = s.split('|').map(|p| -> Option<Partition> {
        if p.is_empty() {
            return Some(Partition::empty());
        }
        let parts = p
            .split(',')
            .map(|x| x.parse::<u32>().ok())
            .collect::<Option<Vec<_>>>()?;
        Partition::new(parts).ok()
    });
    let key = (it.next()??, it.next()??, it.next()??);
    it.next().is_none().then_some(key)
}

static CACHE: LazyLock<LrCache> = LazyLock::new(LrCache::default);

/// The process-wide coefficient cache.
pub fn lr_cache() -> &'static LrCache {
    &CACHE
}

/// The Littlewood–Richardson coefficient `c^lam_{mu,nu}`, memoized.
pub fn lr_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() != mu.size() + nu.size()
        || !mu.is_contained_in(lam)
        || !nu.is_contained_in(lam)
    {
        return 0;
    }
    if mu.is_empty() {
        return (lam == nu) as u64;
    }
    if nu.is_empty() {
        return (lam == mu) as u64;
    }
    CACHE.get_or_compute(lam, mu, nu)
}

/// Counts LR tableaux of shape `lam/mu` and content `nu`: semistandard
/// fillings whose reverse reading word is a lattice word.
pub fn lr_coeff_uncached(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() != mu.size() + nu.size() || !mu.is_contained_in(lam) {
        return 0;
    }
    let rows = lam.depth();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| {
            (mu.part(i) as usize..lam.part(i) as usize)
                .rev()
                .map(move |j| (i, j))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|i| vec![0; lam.part(i) as usize]).collect();
    let mut counts = vec![0u32; nu.depth() + 1];
    let mut total = 0;
    fill_lr(0, &cells, lam, mu, nu, &mut grid, &mut counts, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill_lr(
    idx: usize,
    cells: &[(usize, usize)],
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (i, j) = cells[idx];
    let mut hi = nu.depth() as u32;
    if j + 1 < lam.part(i) as usize {
        hi = hi.min(grid[i][j + 1]);
    }
    hi = hi.min(i as u32 + 1);
    let mut lo = 1;
    if i > 0 && j >= mu.part(i - 1) as usize {
        lo = grid[i - 1][j] + 1;
    }
    for v in lo..=hi {
        let k = v as usize;
        if counts[k] >= nu.part(k - 1) {
            continue;
        }
        if k > 1 && counts[k] + 1 > counts[k - 1] {
            continue;
        }
        counts[k] += 1;
        grid[i][j] = v;
        fill_lr(idx + 1, cells, lam, mu, nu, grid, counts, total);
        counts[k] -= 1;
    }
    grid[i][j] = 0;
}

/// All `lam` with `c^lam_{mu,nu} > 0` and depth at most `max_depth`.
pub fn lr_product(mu: &Partition, nu: &Partition, max_depth: usize) -> Vec<(Partition, u64)> {
    let size = mu.size() + nu.size();
    let depth = (mu.depth() + nu.depth()).min(max_depth);
    let max_part = mu.part(0) + nu.part(0);
    Partition::all_of_size(size, depth, max_part)
        .into_iter()
        .filter_map(|lam| {
            let c = lr_coeff(&lam, mu, nu);
            (c > 0).then_some((lam, c))
        })
        .collect()
}

/// All `nu` with `c^lam_{mu,nu} > 0`.
pub fn lr_skew(lam: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    if !mu.is_contained_in(lam) {
        return Vec::new();
    }
    let size = lam.size() - mu.size();
    Partition::all_of_size(size, lam.depth(), lam.part(0))
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coeff(lam, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// All pairs `(mu, nu)` with `c^lam_{mu,nu} > 0`.
pub fn lr_pairs(lam: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for s in 0..=lam.size() {
        for mu in Partition::all_of_size(s, lam.depth(), lam.part(0)) {
            if !mu.is_contained_in(lam) {
                continue;
            }
            for (nu, c) in lr_skew(lam, &mu) {
                out.push((mu.clone(), nu, c));
            }
        }
    }
    out
}
