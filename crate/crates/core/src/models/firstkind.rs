//! Permutation-pair models for the first-kind coefficients: ordered pairs
//! `(sigma, tau)` where `sigma` permutes `{0, 1, ..., n}` and `tau` permutes
//! `{1, ..., n}`, both with `k` cycles, `1` lies in the orbit of `0`, the
//! cyclic-minima sets agree, and the record statistic of the word traced out
//! by the orbit of `0` supplies the grading.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::models::EnumBounds;
use crate::{Error, Result};

/// Record count of a word with distinct letters: `rec` is the number of
/// strict left-to-right minima (the first letter always counts), and
/// `rec0 = rec - 1`.
pub fn records(w: &[u32]) -> Result<(usize, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut rec = 0usize;
    let mut best = u32::MAX;
    for &letter in w {
        if letter < best {
            rec += 1;
            best = letter;
        }
    }
    Ok((rec, rec - 1))
}

/// One model element: `sigma` in one-line form over `0..=n` (entry `j` is the
/// image of `j`), `tau` in one-line form over `1..=n` (entry `j-1` is the
/// image of `j`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FirstKindPair {
    pub n: u32,
    pub sigma: Vec<u32>,
    pub tau: Vec<u32>,
}

impl FirstKindPair {
    pub fn canonical(&self) -> String {
        let fmt = |p: &[u32]| {
            let items: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            format!("[{}]", items.join(","))
        };
        format!("[{},{}]", fmt(&self.sigma), fmt(&self.tau))
    }
}

/// Number of cycles of a permutation given in one-line form over
/// `offset..offset+len`.
fn cycle_count(perm: &[u32], offset: u32) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = (perm[j] - offset) as usize;
        }
    }
    cycles
}

/// Bitmask over `1..=n` of the cyclic minima: elements that are the least
/// member of their orbit after intersecting with `{1..=n}`.
fn cyclic_min_mask(perm: &[u32], offset: u32) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut mask = 0u32;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut j = start;
        let mut min_pos: Option<u32> = None;
        while !seen[j] {
            seen[j] = true;
            let value = j as u32 + offset;
            if value >= 1 {
                min_pos = Some(min_pos.map_or(value, |m: u32| m.min(value)));
            }
            j = (perm[j] - offset) as usize;
        }
        if let Some(m) = min_pos {
            mask |= 1 << (m - 1);
        }
    }
    mask
}

/// Bitmask of cyclic maxima (over a permutation of `1..=n`).
fn cyclic_max_mask(perm: &[u32]) -> u32 {
    let mut seen = vec![false; perm.len()];
    let mut mask = 0u32;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut j = start;
        let mut max_val = 0u32;
        while !seen[j] {
            seen[j] = true;
            max_val = max_val.max(j as u32 + 1);
            j = (perm[j] - 1) as usize;
        }
        mask |= 1 << (max_val - 1);
    }
    mask
}

/// The word `sigma(0), sigma^2(0), ..., sigma^l(0)` traced by the orbit of
/// `0` (stopping before it returns to `0`), or `None` when `0` is fixed.
fn orbit_word(sigma: &[u32]) -> Option<Vec<u32>> {
    let mut w = Vec::new();
    let mut j = sigma[0];
    while j != 0 {
        w.push(j);
        j = sigma[j as usize];
    }
    if w.is_empty() {
        None
    } else {
        Some(w)
    }
}

/// Statistics of one `sigma` candidate: cycle count, cyclic-minima mask,
/// record statistic of the orbit word; `None` when `1` is not in the orbit
/// of `0`.
fn sigma_stats(sigma: &[u32]) -> Option<(u32, u32, usize)> {
    let w = orbit_word(sigma)?;
    if !w.contains(&1) {
        return None;
    }
    let (_, rec0) = records(&w).expect("orbit word is nonempty");
    Some((cycle_count(sigma, 0), cyclic_min_mask(sigma, 0), rec0))
}

fn all_permutations(len: usize, offset: u32) -> impl Iterator<Item = Vec<u32>> {
    (offset..offset + len as u32).permutations(len)
}

/// All pairs of the `(n, k, i)` family in canonical listing order.
pub fn enum_first_kind_pairs(
    n: u32,
    k: u32,
    i: u32,
    bounds: &EnumBounds,
) -> Result<Vec<FirstKindPair>> {
    bounds.require("first-kind pair", bounds.firstkind, n)?;
    let mut sigmas: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    for sigma in all_permutations(n as usize + 1, 0) {
        if let Some((cycles, mask, rec0)) = sigma_stats(&sigma) {
            if cycles == k && rec0 == i as usize {
                sigmas.entry(mask).or_default().push(sigma);
            }
        }
    }
    let mut out = Vec::new();
    for tau in all_permutations(n as usize, 1) {
        if cycle_count(&tau, 1) != k {
            continue;
        }
        if let Some(matching) = sigmas.get(&cyclic_min_mask(&tau, 1)) {
            for sigma in matching {
                out.push(FirstKindPair {
                    n,
                    sigma: sigma.clone(),
                    tau: tau.clone(),
                });
            }
        }
    }
    out.sort_by_key(|p| p.canonical());
    Ok(out)
}

/// Histogram over the record statistic `i` for fixed `(n, k)`; index `i` of
/// the result. Must reproduce the `b` coefficient family.
pub fn first_kind_histogram(n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<u64>> {
    bounds.require("first-kind pair", bounds.firstkind, n)?;
    if k < 1 || k > n {
        return Err(Error::OutOfRange { n, k, nmax: n });
    }
    let table = first_kind_counts_all(n);
    Ok(table.row(k).to_vec())
}

/// Counts for every `(k, i)` cell, sharing one pass over both symmetric
/// groups; index via `KiTable`.
pub(crate) fn first_kind_counts_all(n: u32) -> super::triples::KiTable {
    // sigma grouped by (cycles, minima mask, rec0), tau by (cycles, mask)
    let mut sigma_groups: BTreeMap<(u32, u32, usize), u64> = BTreeMap::new();
    for sigma in all_permutations(n as usize + 1, 0) {
        if let Some(stats) = sigma_stats(&sigma) {
            *sigma_groups.entry(stats).or_default() += 1;
        }
    }
    let mut tau_groups: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for tau in all_permutations(n as usize, 1) {
        *tau_groups
            .entry((cycle_count(&tau, 1), cyclic_min_mask(&tau, 1)))
            .or_default() += 1;
    }
    let mut table = super::triples::KiTable::new(n);
    for (&(cycles, mask, rec0), &sc) in &sigma_groups {
        if cycles < 1 || cycles > n || rec0 as u32 > n - cycles {
            continue;
        }
        if let Some(&tc) = tau_groups.get(&(cycles, mask)) {
            table.add(cycles, rec0 as u32, sc * tc);
        }
    }
    table
}

/// At the top statistic `i = n - k` the first member of each pair is forced:
/// returns the fiber sizes over every `tau` with `k` cycles (all must be 1).
pub fn top_statistic_fibers(n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<u64>> {
    bounds.require("first-kind pair", bounds.firstkind, n)?;
    let mut sigma_groups: BTreeMap<u32, u64> = BTreeMap::new();
    for sigma in all_permutations(n as usize + 1, 0) {
        if let Some((cycles, mask, rec0)) = sigma_stats(&sigma) {
            if cycles == k && rec0 == (n - k) as usize {
                *sigma_groups.entry(mask).or_default() += 1;
            }
        }
    }
    let mut fibers = Vec::new();
    for tau in all_permutations(n as usize, 1) {
        if cycle_count(&tau, 1) == k {
            fibers.push(
                sigma_groups
                    .get(&cyclic_min_mask(&tau, 1))
                    .copied()
                    .unwrap_or(0),
            );
        }
    }
    Ok(fibers)
}

/// Ordered pairs of permutations of `{1..=n}` with `k` cycles each and equal
/// cyclic-minima sets; reproduces the constant term of the first-kind cells.
pub fn count_u_pairs(n: u32, k: u32, bounds: &EnumBounds) -> Result<u64> {
    bounds.require("permutation pair", bounds.upairs, n)?;
    let mut groups: BTreeMap<u32, u64> = BTreeMap::new();
    for perm in all_permutations(n as usize, 1) {
        if cycle_count(&perm, 1) == k {
            *groups.entry(cyclic_min_mask(&perm, 1)).or_default() += 1;
        }
    }
    Ok(groups.values().map(|&c| c * c).sum())
}

/// The max-statistic variant: equal cyclic-maxima sets. Counts the same
/// family size.
pub fn count_u_pairs_max(n: u32, k: u32, bounds: &EnumBounds) -> Result<u64> {
    bounds.require("permutation pair", bounds.upairs, n)?;
    let mut groups: BTreeMap<u32, u64> = BTreeMap::new();
    for perm in all_permutations(n as usize, 1) {
        if cycle_count(&perm, 1) == k {
            *groups.entry(cyclic_max_mask(&perm)).or_default() += 1;
        }
    }
    Ok(groups.values().map(|&c| c * c).sum())
}
