//! Models for the scaled central factorial numbers of odd indices:
//! partitions of `{1..=2n+1}` into an odd number of odd-size blocks, and
//! Riordan complexes (such a partition with an ordered pair of fixed-point
//! free involutions on each block minus its maximum).

use crate::models::partitions::serialize_partition;
use crate::models::EnumBounds;
use crate::{Error, Result};

/// Counts partitions of `{1..=2n+1}` into exactly `2k+1` blocks, every block
/// of odd size. This walks the full insertion tree (element `m` joins an
/// existing block or opens a new one), so each accepted leaf is one concrete
/// partition; pruning only discards subtrees that cannot reach an all-odd
/// leaf.
pub fn count_odd_partitions(n: u32, k: u32, bounds: &EnumBounds) -> Result<u64> {
    bounds.require("odd-block partition", bounds.oddpart, n)?;
    if k > n {
        return Err(Error::OutOfRange { n, k, nmax: n });
    }
    Ok(odd_partition_counts(2 * n + 1)[(2 * k + 1) as usize])
}

/// Histogram by block count of the all-odd-size partitions of `{1..=total}`;
/// index `b` counts partitions with `b` blocks.
pub(crate) fn odd_partition_counts(total: u32) -> Vec<u64> {
    fn rec(remaining: u32, sizes: &mut Vec<u32>, even_blocks: u32, counts: &mut [u64]) {
        if remaining == 0 {
            if even_blocks == 0 {
                counts[sizes.len()] += 1;
            }
            return;
        }
        // every even block still needs at least one element
        if even_blocks > remaining {
            return;
        }
        for b in 0..sizes.len() {
            sizes[b] += 1;
            let even = if sizes[b] % 2 == 0 {
                even_blocks + 1
            } else {
                even_blocks - 1
            };
            rec(remaining - 1, sizes, even, counts);
            sizes[b] -= 1;
        }
        sizes.push(1);
        rec(remaining - 1, sizes, even_blocks, counts);
        sizes.pop();
    }
    let mut counts = vec![0u64; total as usize + 2];
    rec(total, &mut Vec::new(), 0, &mut counts);
    counts
}

/// All partitions of `{1..=2n+1}` into `2k+1` odd-size blocks, canonical
/// order. Generated directly with parity pruning rather than by filtering
/// every partition of the ground set.
pub fn enum_odd_partitions(n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<Vec<Vec<u32>>>> {
    bounds.require("odd-block partition", bounds.oddpart, n)?;
    if k > n {
        return Err(Error::OutOfRange { n, k, nmax: n });
    }
    let total = 2 * n + 1;
    let target = (2 * k + 1) as usize;

    fn rec(
        m: u32,
        total: u32,
        target: usize,
        even_blocks: u32,
        blocks: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if m > total {
            if even_blocks == 0 && blocks.len() == target {
                out.push(blocks.clone());
            }
            return;
        }
        let remaining = total - m + 1;
        // every even block needs at least one more element; the block count
        // only grows, and at most one new block opens per remaining element
        if even_blocks > remaining
            || blocks.len() > target
            || blocks.len() + (remaining as usize) < target
        {
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(m);
            let even = if blocks[b].len() % 2 == 0 {
                even_blocks + 1
            } else {
                even_blocks - 1
            };
            rec(m + 1, total, target, even, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![m]);
        rec(m + 1, total, target, even_blocks, blocks, out);
        blocks.pop();
    }

    let mut out = Vec::new();
    rec(1, total, target, 0, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| serialize_partition(p));
    Ok(out)
}

/// A Riordan complex: each entry is one block together with its two
/// fixed-point-free involutions on the block minus its maximum, the
/// involutions stored as sorted pair lists.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RiordanComplex {
    pub n: u32,
    pub blocks: Vec<(Vec<u32>, Vec<(u32, u32)>, Vec<(u32, u32)>)>,
}

impl RiordanComplex {
    /// Re-checks the definition: odd-size blocks partition `{1..=2n+1}` and
    /// each involution pairs up exactly the non-maximal elements of its
    /// block.
    pub fn validate(&self) -> Result<()> {
        let invalid = |reason: String| Error::InvalidObject {
            kind: "Riordan complex",
            reason,
        };
        let total = 2 * self.n + 1;
        let partition: Vec<Vec<u32>> = self.blocks.iter().map(|(b, _, _)| b.clone()).collect();
        if !crate::models::partitions::is_valid_partition(&partition, total) {
            return Err(invalid(format!("blocks do not partition 1..={total}")));
        }
        if self.blocks.len() % 2 != 1 {
            return Err(invalid("even number of blocks".into()));
        }
        for (block, sigma, tau) in &self.blocks {
            if block.len() % 2 != 1 {
                return Err(invalid(format!("block {block:?} has even size")));
            }
            let max = *block.last().unwrap();
            let rest: Vec<u32> = block.iter().copied().filter(|&v| v != max).collect();
            for invol in [sigma, tau] {
                let mut covered: Vec<u32> = Vec::new();
                for &(a, b) in invol {
                    if a >= b || !rest.contains(&a) || !rest.contains(&b) {
                        return Err(invalid(format!("bad involution pair ({a},{b})")));
                    }
                    covered.push(a);
                    covered.push(b);
                }
                covered.sort_unstable();
                if covered != rest {
                    return Err(invalid(format!(
                        "involution does not pair all of {rest:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn canonical(&self) -> String {
        let fmt_pairs = |pairs: &[(u32, u32)]| {
            let items: Vec<String> = pairs.iter().map(|&(a, b)| format!("[{a},{b}]")).collect();
            format!("[{}]", items.join(","))
        };
        let entries: Vec<String> = self
            .blocks
            .iter()
            .map(|(b, s, t)| {
                let members: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                format!("[[{}],{},{}]", members.join(","), fmt_pairs(s), fmt_pairs(t))
            })
            .collect();
        format!("[{}]", entries.join(","))
    }
}

/// All fixed-point-free involutions of an even-size set, each as a sorted
/// list of ordered pairs `(a, b)` with `a < b`.
fn fpf_involutions(elems: &[u32]) -> Vec<Vec<(u32, u32)>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let mut out = Vec::new();
    for idx in 1..elems.len() {
        let partner = elems[idx];
        let rest: Vec<u32> = elems[1..]
            .iter()
            .copied()
            .filter(|&v| v != partner)
            .collect();
        for mut sub in fpf_involutions(&rest) {
            sub.insert(0, (first, partner));
            out.push(sub);
        }
    }
    out
}

/// All Riordan complexes for `(n, k)`, canonical order; every emitted
/// complex is re-validated. The count reproduces the absolute value of the
/// first-kind odd central factorial numbers.
pub fn enum_riordan_complexes(n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<RiordanComplex>> {
    bounds.require("Riordan complex", bounds.riordan, n)?;
    if k > n {
        return Err(Error::OutOfRange { n, k, nmax: n });
    }
    let mut out = Vec::new();
    for partition in enum_odd_partitions(n, k, &EnumBounds::relaxed())? {
        // per-block choices: every (sigma, tau) combination of involutions
        let choices: Vec<Vec<(Vec<(u32, u32)>, Vec<(u32, u32)>)>> = partition
            .iter()
            .map(|block| {
                let rest = &block[..block.len() - 1];
                let invols = fpf_involutions(rest);
                let mut pairs = Vec::with_capacity(invols.len() * invols.len());
                for s in &invols {
                    for t in &invols {
                        pairs.push((s.clone(), t.clone()));
                    }
                }
                pairs
            })
            .collect();
        let mut stack: Vec<usize> = vec![0; partition.len()];
        loop {
            let blocks: Vec<(Vec<u32>, Vec<(u32, u32)>, Vec<(u32, u32)>)> = partition
                .iter()
                .enumerate()
                .map(|(bi, b)| {
                    let (s, t) = &choices[bi][stack[bi]];
                    (b.clone(), s.clone(), t.clone())
                })
                .collect();
            let complex = RiordanComplex { n, blocks };
            complex
                .validate()
                .expect("enumerated complex violates the definition");
            out.push(complex);
            // odometer
            let mut pos = 0;
            loop {
                if pos == stack.len() {
                    break;
                }
                stack[pos] += 1;
                if stack[pos] < choices[pos].len() {
                    break;
                }
                stack[pos] = 0;
                pos += 1;
            }
            if pos == stack.len() {
                break;
            }
        }
    }
    out.sort_by_key(|c| c.canonical());
    Ok(out)
}

pub fn count_riordan_complexes(n: u32, k: u32, bounds: &EnumBounds) -> Result<u64> {
    Ok(enum_riordan_complexes(n, k, bounds)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds() -> EnumBounds {
        EnumBounds::default()
    }

    #[test]
    fn odd_partition_counts_match_table() {
        assert_eq!(count_odd_partitions(2, 1, &bounds()).unwrap(), 10);
        assert_eq!(count_odd_partitions(3, 1, &bounds()).unwrap(), 91);
        assert_eq!(count_odd_partitions(4, 2, &bounds()).unwrap(), 966);
        for n in 0..=4 {
            assert_eq!(count_odd_partitions(n, n, &bounds()).unwrap(), 1);
        }
    }

    #[test]
    fn riordan_small_counts() {
        assert_eq!(count_riordan_complexes(2, 1, &bounds()).unwrap(), 10);
        assert_eq!(count_riordan_complexes(2, 0, &bounds()).unwrap(), 9);
        for n in 0..=3 {
            assert_eq!(count_riordan_complexes(n, n, &bounds()).unwrap(), 1);
        }
    }

    #[test]
    fn ten_complexes_match_published_list() {
        let got: Vec<String> = enum_riordan_complexes(2, 1, &bounds())
            .unwrap()
            .iter()
            .map(|c| c.canonical())
            .collect();
        let mut expected = vec![
            "[[[1],[],[]],[[2,3,4],[[2,3]],[[2,3]]],[[5],[],[]]]".to_string(),
            "[[[1],[],[]],[[2],[],[]],[[3,4,5],[[3,4]],[[3,4]]]]".to_string(),
            "[[[1,2,3],[[1,2]],[[1,2]]],[[4],[],[]],[[5],[],[]]]".to_string(),
            "[[[1,2,5],[[1,2]],[[1,2]]],[[3],[],[]],[[4],[],[]]]".to_string(),
            "[[[1,3,4],[[1,3]],[[1,3]]],[[2],[],[]],[[5],[],[]]]".to_string(),
            "[[[1,3,5],[[1,3]],[[1,3]]],[[2],[],[]],[[4],[],[]]]".to_string(),
            "[[[1,2,4],[[1,2]],[[1,2]]],[[3],[],[]],[[5],[],[]]]".to_string(),
            "[[[1,4,5],[[1,4]],[[1,4]]],[[2],[],[]],[[3],[],[]]]".to_string(),
            "[[[1],[],[]],[[2,3,5],[[2,3]],[[2,3]]],[[4],[],[]]]".to_string(),
            "[[[1],[],[]],[[2,4,5],[[2,4]],[[2,4]]],[[3],[],[]]]".to_string(),
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn fpf_involution_counts_are_double_factorials() {
        assert_eq!(fpf_involutions(&[]).len(), 1);
        assert_eq!(fpf_involutions(&[1, 2]).len(), 1);
        assert_eq!(fpf_involutions(&[1, 2, 3, 4]).len(), 3);
        assert_eq!(fpf_involutions(&[1, 2, 3, 4, 5, 6]).len(), 15);
    }
}
