//! Triples of ordinary set partitions: the bridge model connecting signed
//! partitions to quasi-permutation pairs.
//!
//! A triple `(p1, p2, p3)` belongs to the `(n, k, i)` family when `p1` and
//! `p2` have `k+i` blocks, `p3` has `n-i` blocks, `p1` and `p2` share their
//! block-minima set, and for each of `p1` and `p2` the cover conditions
//! hold: its minima together with the singletons of `p3` exhaust `{1..=n}`,
//! and its singletons together with the minima of `p3` exhaust `{1..=n}`.
//! (Requiring equal singleton sets of `p1` and `p2` instead would shrink the
//! family below the coefficient counts; the cover conditions per member are
//! what the correspondence with the other two models preserves.)

use std::collections::BTreeMap;

use crate::models::partitions::{
    full_mask, is_valid_partition, min_mask, serialize_partition, sing_mask,
};
use crate::models::EnumBounds;
use crate::{Error, Result};

/// One triple, each member in canonical partition form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionTriple {
    pub n: u32,
    pub p1: Vec<Vec<u32>>,
    pub p2: Vec<Vec<u32>>,
    pub p3: Vec<Vec<u32>>,
}

impl PartitionTriple {
    /// Full validity check against the family conditions for `(n, k, i)`,
    /// including the three derived cardinality identities: the minima of
    /// `p1` and `p3` share exactly `k` elements, exactly `i` singletons of
    /// `p1` avoid the minima of `p3`, and exactly `n-k-i` singletons of `p3`
    /// avoid the minima of `p1`.
    pub fn validate(&self, k: u32, i: u32) -> Result<()> {
        let invalid = |reason: String| Error::InvalidObject {
            kind: "partition triple",
            reason,
        };
        let n = self.n;
        for (name, p) in [("p1", &self.p1), ("p2", &self.p2), ("p3", &self.p3)] {
            if !is_valid_partition(p, n) {
                return Err(invalid(format!("{name} is not a partition of 1..={n}")));
            }
        }
        if self.p1.len() != (k + i) as usize || self.p2.len() != (k + i) as usize {
            return Err(invalid("p1/p2 block count is not k+i".into()));
        }
        if self.p3.len() != (n - i) as usize {
            return Err(invalid("p3 block count is not n-i".into()));
        }
        let (m1, s1) = (min_mask(&self.p1), sing_mask(&self.p1));
        let (m2, s2) = (min_mask(&self.p2), sing_mask(&self.p2));
        let (m3, s3) = (min_mask(&self.p3), sing_mask(&self.p3));
        if m1 != m2 {
            return Err(invalid("p1 and p2 differ in block minima".into()));
        }
        let full = full_mask(n);
        if m1 | s3 != full || s1 | m3 != full || s2 | m3 != full {
            return Err(invalid("cover conditions fail".into()));
        }
        if (m1 & m3).count_ones() != k {
            return Err(invalid("|min(p1) ∩ min(p3)| != k".into()));
        }
        if (s1 & !m3).count_ones() != i || (s2 & !m3).count_ones() != i {
            return Err(invalid("|Sing(p1) \\ min(p3)| != i".into()));
        }
        if (s3 & !m1).count_ones() != n - k - i {
            return Err(invalid("|Sing(p3) \\ min(p1)| != n-k-i".into()));
        }
        Ok(())
    }

    pub fn canonical(&self) -> String {
        format!(
            "[{},{},{}]",
            serialize_partition(&self.p1),
            serialize_partition(&self.p2),
            serialize_partition(&self.p3)
        )
    }
}

/// All triples of the `(n, k, i)` family in canonical listing order; every
/// emitted triple is re-validated against the defining conditions.
pub fn enum_partition_triples(
    n: u32,
    k: u32,
    i: u32,
    bounds: &EnumBounds,
) -> Result<Vec<PartitionTriple>> {
    bounds.require("partition triple", bounds.triple, n)?;
    let parts = crate::models::partitions::partitions_of(n);
    let full = full_mask(n);
    // first/second members grouped by their block-minima set
    let mut by_min: BTreeMap<u32, Vec<&Vec<Vec<u32>>>> = BTreeMap::new();
    for p in &parts {
        if p.len() == (k + i) as usize {
            by_min.entry(min_mask(p)).or_default().push(p);
        }
    }
    let mut out = Vec::new();
    for p3 in &parts {
        if p3.len() != (n - i) as usize {
            continue;
        }
        let (m3, s3) = (min_mask(p3), sing_mask(p3));
        for (&m1, members) in &by_min {
            if m1 | s3 != full {
                continue;
            }
            let eligible: Vec<&&Vec<Vec<u32>>> = members
                .iter()
                .filter(|p| sing_mask(p) | m3 == full)
                .collect();
            for p1 in &eligible {
                for p2 in &eligible {
                    let t = PartitionTriple {
                        n,
                        p1: (**p1).clone(),
                        p2: (**p2).clone(),
                        p3: p3.clone(),
                    };
                    t.validate(k, i)
                        .expect("enumerated triple violates the family conditions");
                    out.push(t);
                }
            }
        }
    }
    out.sort_by_key(|t| t.canonical());
    Ok(out)
}

pub fn partition_triple_count(n: u32, k: u32, i: u32, bounds: &EnumBounds) -> Result<u64> {
    bounds.require("partition triple", bounds.triple, n)?;
    Ok(triple_counts_all(n)
        .get((k, i))
        .copied()
        .unwrap_or(0))
}

pub(crate) struct KiTable {
    n: u32,
    counts: Vec<Vec<u64>>,
}

impl KiTable {
    pub fn new(n: u32) -> Self {
        KiTable {
            n,
            counts: (1..=n).map(|k| vec![0u64; (n - k) as usize + 1]).collect(),
        }
    }

    pub fn add(&mut self, k: u32, i: u32, c: u64) {
        self.counts[k as usize - 1][i as usize] += c;
    }

    pub fn get(&self, (k, i): (u32, u32)) -> Option<&u64> {
        if k < 1 || k > self.n || i > self.n - k {
            return None;
        }
        self.counts[k as usize - 1].get(i as usize)
    }

    pub fn row(&self, k: u32) -> &[u64] {
        &self.counts[k as usize - 1]
    }
}

/// Triple counts for every `(k, i)` at once. For each third member, the
/// eligible first/second members are grouped by their minima set, and every
/// group contributes its squared size.
pub(crate) fn triple_counts_all(n: u32) -> KiTable {
    let parts = crate::models::partitions::partitions_of(n);
    let full = full_mask(n);
    // (blocks, min mask) -> sing mask -> member count
    let mut by_min: BTreeMap<(usize, u32), BTreeMap<u32, u64>> = BTreeMap::new();
    for p in &parts {
        *by_min
            .entry((p.len(), min_mask(p)))
            .or_default()
            .entry(sing_mask(p))
            .or_default() += 1;
    }
    let mut table = KiTable::new(n);
    for p3 in &parts {
        let i = n - p3.len() as u32;
        let (m3, s3) = (min_mask(p3), sing_mask(p3));
        for (&(blocks1, m1), sings) in &by_min {
            let ki = blocks1 as u32;
            if ki < i || ki - i < 1 {
                continue;
            }
            let k = ki - i;
            if m1 | s3 != full {
                continue;
            }
            let eligible: u64 = sings
                .iter()
                .filter(|&(&s, _)| s | m3 == full)
                .map(|(_, &c)| c)
                .sum();
            if eligible > 0 {
                debug_assert_eq!((m1 & m3).count_ones(), k);
                table.add(k, i, eligible * eligible);
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_small() {
        let b = EnumBounds::default();
        // coefficient of z in 5 + 3z
        assert_eq!(partition_triple_count(3, 2, 1, &b).unwrap(), 3);
        // constant term of the (4,2) cell
        assert_eq!(partition_triple_count(4, 2, 0, &b).unwrap(), 21);
        // all-singleton triple
        for n in 1..=5 {
            assert_eq!(partition_triple_count(n, n, 0, &b).unwrap(), 1);
        }
    }

    #[test]
    fn diagonal_triple_is_all_singletons() {
        let b = EnumBounds::default();
        let ts = enum_partition_triples(3, 3, 0, &b).unwrap();
        assert_eq!(ts.len(), 1);
        let t = &ts[0];
        assert_eq!(t.p1, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(t.p1, t.p2);
        assert_eq!(t.p1, t.p3);
    }

    #[test]
    fn enumerated_triples_validate() {
        let b = EnumBounds::default();
        for k in 1..=4 {
            for i in 0..=(4 - k) {
                let ts = enum_partition_triples(4, k, i, &b).unwrap();
                assert_eq!(ts.len() as u64, partition_triple_count(4, k, i, &b).unwrap());
            }
        }
    }

    #[test]
    fn worked_example_triple_is_valid() {
        // the triple corresponding to the worked signed 3-partition
        let t = PartitionTriple {
            n: 10,
            p1: vec![
                vec![1, 3, 7],
                vec![2, 5, 6],
                vec![4],
                vec![8],
                vec![9],
                vec![10],
            ],
            p2: vec![
                vec![1, 5, 7],
                vec![2, 3, 6],
                vec![4],
                vec![8],
                vec![9],
                vec![10],
            ],
            p3: vec![
                vec![1, 4],
                vec![2, 8],
                vec![3],
                vec![5],
                vec![6],
                vec![7],
                vec![9, 10],
            ],
        };
        t.validate(3, 3).unwrap();
    }
}
