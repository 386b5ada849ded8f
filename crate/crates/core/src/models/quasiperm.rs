//! Simply hooked quasi-permutations and the pair model for the monomial
//! coefficients of the second-kind triangle.
//!
//! Cells are `(x, y)` points of the `n x n` grid. The subdiagonal part `Q-`
//! holds the cells with `x >= y`, the supdiagonal part `Q+` those with
//! `x <= y`. The diagonal hook `H_i` is the set of cells whose larger
//! coordinate equals `i` (column `i` below the diagonal together with row `i`
//! left of it, including `(i,i)`).

use std::collections::BTreeMap;

use crate::models::EnumBounds;
use crate::{Error, Result};

/// A simply hooked quasi-permutation: a partial permutation diagram avoiding
/// the diagonal with at most one cell per diagonal hook. With `m` cells in
/// the `n x n` grid this represents a `k`-quasi-permutation for `k = n - m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiPerm {
    n: u32,
    cells: Vec<(u32, u32)>,
}

impl QuasiPerm {
    pub fn new(n: u32, mut cells: Vec<(u32, u32)>) -> Result<Self> {
        cells.sort_unstable();
        cells.dedup();
        if cells.iter().any(|&(x, y)| {
            x < 1 || x > n || y < 1 || y > n
        }) {
            return Err(Error::InvalidObject {
                kind: "quasi-permutation",
                reason: "cell outside the grid".into(),
            });
        }
        if !is_simply_hooked(&cells, n) {
            return Err(Error::InvalidObject {
                kind: "quasi-permutation",
                reason: "not simply hooked".into(),
            });
        }
        Ok(QuasiPerm { n, cells })
    }

    pub(crate) fn from_sorted_unchecked(n: u32, cells: Vec<(u32, u32)>) -> Self {
        QuasiPerm { n, cells }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Cells in ascending order.
    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    /// `k = n - |cells|`.
    pub fn k(&self) -> u32 {
        self.n - self.cells.len() as u32
    }

    /// Subdiagonal part (cells with `x >= y`).
    pub fn sub(&self) -> Vec<(u32, u32)> {
        self.cells.iter().copied().filter(|&(x, y)| x >= y).collect()
    }

    /// Supdiagonal part (cells with `x <= y`).
    pub fn sup(&self) -> Vec<(u32, u32)> {
        self.cells.iter().copied().filter(|&(x, y)| x <= y).collect()
    }

    /// Bitmask of the `y` projection.
    pub fn pr_y_mask(&self) -> u32 {
        self.cells.iter().fold(0, |m, &(_, y)| m | 1 << (y - 1))
    }

    /// Exchanges the two coordinates of every cell.
    pub fn transpose(&self) -> QuasiPerm {
        let mut cells: Vec<(u32, u32)> = self.cells.iter().map(|&(x, y)| (y, x)).collect();
        cells.sort_unstable();
        QuasiPerm {
            n: self.n,
            cells,
        }
    }

    pub fn canonical(&self) -> String {
        let items: Vec<String> = self
            .cells
            .iter()
            .map(|&(x, y)| format!("[{x},{y}]"))
            .collect();
        format!("[{}]", items.join(","))
    }
}

/// Both characterizations of "simply hooked", evaluated independently:
/// the projection verdict (partial permutation with
/// `pr_x(Q-) ∩ pr_y(Q+) = ∅`) and the hook verdict (no diagonal cell, at
/// most one cell per row, column, and diagonal hook).
pub fn simply_hooked_verdicts(cells: &[(u32, u32)], n: u32) -> (bool, bool) {
    let projection = {
        let mut xs = 0u32;
        let mut ys = 0u32;
        let mut partial_perm = true;
        for &(x, y) in cells {
            if xs & (1 << (x - 1)) != 0 || ys & (1 << (y - 1)) != 0 {
                partial_perm = false;
            }
            xs |= 1 << (x - 1);
            ys |= 1 << (y - 1);
        }
        let sub_x = cells
            .iter()
            .filter(|&&(x, y)| x >= y)
            .fold(0u32, |m, &(x, _)| m | 1 << (x - 1));
        let sup_y = cells
            .iter()
            .filter(|&&(x, y)| x <= y)
            .fold(0u32, |m, &(_, y)| m | 1 << (y - 1));
        partial_perm && sub_x & sup_y == 0
    };

    let hook = {
        let mut ok = true;
        let mut rows = vec![0u8; n as usize + 1];
        let mut cols = vec![0u8; n as usize + 1];
        let mut hooks = vec![0u8; n as usize + 1];
        for &(x, y) in cells {
            if x == y {
                ok = false;
                continue;
            }
            rows[x as usize] += 1;
            cols[y as usize] += 1;
            hooks[x.max(y) as usize] += 1;
        }
        ok && rows.iter().all(|&c| c <= 1)
            && cols.iter().all(|&c| c <= 1)
            && hooks.iter().all(|&c| c <= 1)
    };

    (projection, hook)
}

/// The single verdict; the two characterizations are required to agree.
pub fn is_simply_hooked(cells: &[(u32, u32)], n: u32) -> bool {
    let (projection, hook) = simply_hooked_verdicts(cells, n);
    assert_eq!(
        projection, hook,
        "hook and projection characterizations disagree on {cells:?}"
    );
    projection
}

/// Every simply hooked quasi-permutation of the `n x n` grid, all cell
/// counts together, in ascending cell order.
pub(crate) fn all_simply_hooked(n: u32) -> Vec<QuasiPerm> {
    // One x at a time; prune with the projection condition, which the hook
    // condition provably equals (and tests re-check).
    fn rec(
        x: u32,
        n: u32,
        used_y: u32,
        sub_x: u32,
        sup_y: u32,
        cells: &mut Vec<(u32, u32)>,
        out: &mut Vec<QuasiPerm>,
    ) {
        if x > n {
            out.push(QuasiPerm::from_sorted_unchecked(n, cells.clone()));
            return;
        }
        // x left empty
        rec(x + 1, n, used_y, sub_x, sup_y, cells, out);
        for y in 1..=n {
            if y == x || used_y & (1 << (y - 1)) != 0 {
                continue;
            }
            let (mut nsub, mut nsup) = (sub_x, sup_y);
            if x > y {
                // subdiagonal: pr_x joins the left side of the disjointness test
                if sup_y & (1 << (x - 1)) != 0 {
                    continue;
                }
                nsub |= 1 << (x - 1);
            } else {
                if sub_x & (1 << (y - 1)) != 0 {
                    continue;
                }
                nsup |= 1 << (y - 1);
            }
            cells.push((x, y));
            rec(x + 1, n, used_y | 1 << (y - 1), nsub, nsup, cells, out);
            cells.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, 0, 0, 0, &mut Vec::new(), &mut out);
    out
}

type PairKey = (Vec<(u32, u32)>, u32);

/// Buckets of quasi-permutations sharing a subdiagonal part and a `y`
/// projection; within a bucket every ordered pair satisfies the pair-model
/// conditions, so the model count for `(n, k, i)` is the sum of squared
/// bucket sizes.
fn pair_buckets(n: u32, k: u32, i: u32) -> Vec<Vec<QuasiPerm>> {
    let mut buckets: BTreeMap<PairKey, Vec<QuasiPerm>> = BTreeMap::new();
    for q in all_simply_hooked(n) {
        if q.k() != k {
            continue;
        }
        let sub = q.sub();
        if sub.len() as u32 != i {
            continue;
        }
        buckets.entry((sub, q.pr_y_mask())).or_default().push(q);
    }
    buckets.into_values().collect()
}

/// All ordered pairs `(Q1, Q2)` of simply hooked `k`-quasi-permutations with
/// equal subdiagonal parts of size `i` and equal `y` projections, in
/// canonical listing order.
pub fn enum_quasiperm_pairs(
    n: u32,
    k: u32,
    i: u32,
    bounds: &EnumBounds,
) -> Result<Vec<(QuasiPerm, QuasiPerm)>> {
    bounds.require("quasi-permutation pair", bounds.quasipair, n)?;
    let mut out = Vec::new();
    for bucket in pair_buckets(n, k, i) {
        for q1 in &bucket {
            for q2 in &bucket {
                out.push((q1.clone(), q2.clone()));
            }
        }
    }
    out.sort_by_key(|(a, b)| (a.canonical(), b.canonical()));
    Ok(out)
}

pub fn quasiperm_pair_count(n: u32, k: u32, i: u32, bounds: &EnumBounds) -> Result<u64> {
    bounds.require("quasi-permutation pair", bounds.quasipair, n)?;
    Ok(pair_buckets(n, k, i)
        .iter()
        .map(|b| (b.len() * b.len()) as u64)
        .sum())
}

/// Pair counts for every `(k, i)` cell at once, sharing a single generation
/// pass; index `[k-1][i]`.
pub(crate) fn quasiperm_pair_counts_all(n: u32) -> Vec<Vec<u64>> {
    let mut buckets: BTreeMap<(u32, PairKey), u64> = BTreeMap::new();
    for q in all_simply_hooked(n) {
        if q.k() < 1 {
            continue;
        }
        *buckets.entry((q.k(), (q.sub(), q.pr_y_mask()))).or_default() += 1;
    }
    let mut counts: Vec<Vec<u64>> = (1..=n).map(|k| vec![0u64; (n - k) as usize + 1]).collect();
    for ((k, (sub, _)), g) in buckets {
        counts[k as usize - 1][sub.len()] += g * g;
    }
    counts
}
