//! Exhaustive generation of chord diagrams and orbit catalogs of filling
//! systems.
//!
//! Matchings are produced by backtracking on the least unmatched point, so
//! the stream never materializes; orbits are collected as canonical forms.
//! The search fans out across threads by the choice of partner for point 0.

use crate::diagram::ChordDiagram;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("chord count {0} out of the supported range 1..=9")]
    OutOfRange(usize),
    #[error("arity {k} exceeds the bound 4g-3 = {max} for genus {g}")]
    ArityBound { g: usize, k: usize, max: usize },
    #[error("catalog cache io: {0}")]
    CacheIo(#[from] std::io::Error),
    #[error("catalog cache format: {0}")]
    CacheFormat(#[from] serde_json::Error),
}

pub const MAX_CHORDS: usize = 9;

/// Calls `visit` once per fixed-point-free involution on `2n` points with no
/// adjacent pairing. `first_partner` restricts point 0's partner (used to
/// partition the search across workers).
fn search(n: usize, first_partner: Option<usize>, visit: &mut impl FnMut(&[usize])) {
    let size = 2 * n;
    let mut m = vec![usize::MAX; size];
    fn recurse(m: &mut Vec<usize>, size: usize, visit: &mut impl FnMut(&[usize])) {
        let Some(p) = m.iter().position(|&q| q == usize::MAX) else {
            visit(m);
            return;
        };
        for q in (p + 1)..size {
            if m[q] != usize::MAX {
                continue;
            }
            // no adjacent pairing, including the wrap-around pair (0, 2n-1)
            if q == p + 1 || (p == 0 && q == size - 1) {
                continue;
            }
            m[p] = q;
            m[q] = p;
            recurse(m, size, visit);
            m[p] = usize::MAX;
            m[q] = usize::MAX;
        }
    }
    match first_partner {
        Some(q) => {
            if q > 1 && q < size - 1 {
                m[0] = q;
                m[q] = 0;
                recurse(&mut m, size, visit);
            }
        }
        None => recurse(&mut m, size, visit),
    }
}

/// Streaming iterator over all valid matchings on `2n` points, in the order
/// the backtracking search visits them. Holds only the partial matching and
/// one choice frame per matched pair.
pub struct Matchings {
    size: usize,
    m: Vec<usize>,
    // (least unmatched point at this depth, partner it was given)
    frames: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl Matchings {
    pub fn new(n: usize) -> Result<Self, EnumerateError> {
        if n == 0 || n > MAX_CHORDS {
            return Err(EnumerateError::OutOfRange(n));
        }
        Ok(Matchings {
            size: 2 * n,
            m: vec![usize::MAX; 2 * n],
            frames: Vec::with_capacity(n),
            started: false,
            done: false,
        })
    }

    fn admissible(&self, p: usize, q: usize) -> bool {
        self.m[q] == usize::MAX && q != p + 1 && !(p == 0 && q == self.size - 1)
    }

    /// Extends the current partial matching depth-first; `from` is the least
    /// partner candidate to try for the next unmatched point.
    fn descend(&mut self, mut from: usize) -> bool {
        loop {
            let Some(p) = self.m.iter().position(|&q| q == usize::MAX) else {
                return true;
            };
            match (from.max(p + 1)..self.size).find(|&q| self.admissible(p, q)) {
                Some(q) => {
                    self.m[p] = q;
                    self.m[q] = p;
                    self.frames.push((p, q));
                    from = 0;
                }
                None => {
                    if !self.backtrack() {
                        return false;
                    }
                    from = 0;
                }
            }
        }
    }

    /// Undoes the deepest choice and retries it with the next partner.
    fn backtrack(&mut self) -> bool {
        while let Some((p, q)) = self.frames.pop() {
            self.m[p] = usize::MAX;
            self.m[q] = usize::MAX;
            if let Some(next) = ((q + 1)..self.size).find(|&r| self.admissible(p, r)) {
                self.m[p] = next;
                self.m[next] = p;
                self.frames.push((p, next));
                return true;
            }
        }
        false
    }
}

impl Iterator for Matchings {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.done {
            return None;
        }
        let alive = if !self.started {
            self.started = true;
            self.descend(0)
        } else {
            self.backtrack() && self.descend(0)
        };
        if !alive {
            self.done = true;
            return None;
        }
        Some(ChordDiagram::from_involution(self.m.clone()).expect("search emits valid diagrams"))
    }
}

/// Visitor-style enumeration for counts too large to collect.
pub fn for_each_matching(
    n: usize,
    threads: usize,
    visit: impl Fn(&ChordDiagram) + Sync + Send,
) -> Result<(), EnumerateError> {
    if n == 0 || n > MAX_CHORDS {
        return Err(EnumerateError::OutOfRange(n));
    }
    let size = 2 * n;
    if threads <= 1 {
        search(n, None, &mut |m| {
            visit(&ChordDiagram::from_involution(m.to_vec()).expect("valid"));
        });
        return Ok(());
    }
    let partners: Vec<usize> = (2..size - 1).collect();
    std::thread::scope(|scope| {
        let visit = &visit;
        for chunk in partners.chunks(partners.len().div_ceil(threads)) {
            scope.spawn(move || {
                for &q in chunk {
                    search(n, Some(q), &mut |m| {
                        visit(&ChordDiagram::from_involution(m.to_vec()).expect("valid"));
                    });
                }
            });
        }
    });
    Ok(())
}

/// Orbit representatives of `k`-filling systems for genus `g`, as canonical
/// forms sorted by matching.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrbitCatalog {
    pub format: u32,
    pub genus: usize,
    pub k: usize,
    pub connected_only: bool,
    pub representatives: Vec<ChordDiagram>,
    pub total_orbits: usize,
    pub connected_orbits: usize,
}

impl OrbitCatalog {
    pub fn build(g: usize, k: usize, connected_only: bool) -> Result<Self, EnumerateError> {
        Self::build_threaded(g, k, connected_only, 1)
    }

    pub fn build_threaded(
        g: usize,
        k: usize,
        connected_only: bool,
        threads: usize,
    ) -> Result<Self, EnumerateError> {
        if k > 4 * g - 3 {
            // no k-filling systems beyond arity 4g-3; report the empty catalog
            return Ok(OrbitCatalog {
                format: 1,
                genus: g,
                k,
                connected_only,
                representatives: Vec::new(),
                total_orbits: 0,
                connected_orbits: 0,
            });
        }
        let n = 2 * g + k;
        let all = std::sync::Mutex::new(BTreeSet::<Vec<usize>>::new());
        for_each_matching(n, threads, |d| {
            if d.is_k_filling(g, k) {
                let canon = d.canonical_form();
                all.lock().unwrap().insert(canon.involution().to_vec());
            }
        })?;
        let reps: Vec<ChordDiagram> = all
            .into_inner()
            .unwrap()
            .into_iter()
            .map(|m| ChordDiagram::from_involution(m).expect("canonical forms are valid"))
            .collect();
        let total_orbits = reps.len();
        let connected: Vec<ChordDiagram> =
            reps.iter().filter(|d| d.is_connected()).cloned().collect();
        let connected_orbits = connected.len();
        Ok(OrbitCatalog {
            format: 1,
            genus: g,
            k,
            connected_only,
            representatives: if connected_only { connected } else { reps },
            total_orbits,
            connected_orbits,
        })
    }

    /// Loads the catalog from `cache_dir` when present, else builds and
    /// stores it, keyed by `(genus, k, connected)`.
    pub fn load_or_build(
        g: usize,
        k: usize,
        connected_only: bool,
        threads: usize,
        cache_dir: &Path,
    ) -> Result<Self, EnumerateError> {
        let name = format!(
            "catalog-g{}-k{}-{}.json",
            g,
            k,
            if connected_only { "connected" } else { "all" }
        );
        let path = cache_dir.join(name);
        if path.exists() {
            let text = std::fs::read_to_string(&path)?;
            let cat: OrbitCatalog = serde_json::from_str(&text)?;
            if cat.format == 1
                && cat.genus == g
                && cat.k == k
                && cat.connected_only == connected_only
            {
                return Ok(cat);
            }
        }
        let cat = Self::build_threaded(g, k, connected_only, threads)?;
        std::fs::create_dir_all(cache_dir)?;
        std::fs::write(&path, serde_json::to_string_pretty(&cat)?)?;
        Ok(cat)
    }
}

/// Checks that arity is capped at `6g-3` (one-vertex triangulations) and that
/// the top arity is realized.
///
/// Existence is checked by enumeration at `n = 6g-3`. For the impossibility
/// of `n = 6g-2` chords the Euler-characteristic count is used when the raw
/// search space is out of desk range: a valid diagram has no monogon or
/// rectangle faces, so every face makes at least 3 chord traversals and
/// `2n >= 3(n + 1 - 2g)`, i.e. `n <= 6g - 3`.
pub fn max_arity_check(g: usize) -> Result<bool, EnumerateError> {
    let top = 4 * g - 3;
    let top_exists = !OrbitCatalog::build(g, top, false)?
        .representatives
        .is_empty();
    let n_over = 6 * g - 2;
    let over_impossible = if n_over <= 6 {
        let mut found = false;
        search(n_over, None, &mut |m| {
            let d = ChordDiagram::from_involution(m.to_vec()).expect("valid");
            if !d.parallel_pair_exists() && d.genus() == g {
                found = true;
            }
        });
        !found
    } else {
        // every face of an adjacency-free, parallel-free diagram has >= 3
        // traversals: 2n >= 3b = 3(n + 1 - 2g) fails at n = 6g - 2
        2 * n_over < 3 * (n_over + 1 - 2 * g)
    };
    Ok(top_exists && over_impossible)
}
