//! Signed k-partitions of `{0, ±1, ..., ±n}`: the first combinatorial model
//! for the monomial coefficients of the second-kind triangle, and (restricted
//! to partitions whose zero-block holds no positive entry) for the
//! `(z+1)`-basis coefficients.

use crate::models::EnumBounds;
use crate::{Error, Result};

/// A signed partition: a zero-block (0 itself left implicit) plus `k`
/// ordinary blocks, each containing both `j` and `-j` exactly when `j` is its
/// least positive member.
///
/// Canonical form: entries ascending inside every block, blocks ordered by
/// least positive member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPartition {
    n: u32,
    zero_block: Vec<i32>,
    blocks: Vec<Vec<i32>>,
}

impl SignedPartition {
    /// Validates and canonicalizes.
    pub fn new(n: u32, mut zero_block: Vec<i32>, mut blocks: Vec<Vec<i32>>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidObject {
            kind: "signed partition",
            reason,
        };
        zero_block.sort_unstable();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b.iter().copied().filter(|&v| v > 0).min().unwrap_or(0));

        let mut seen = vec![false; 2 * n as usize];
        let mut mark = |v: i32| -> Result<()> {
            if v == 0 || v.unsigned_abs() > n {
                return Err(invalid(format!("entry {v} outside the ground set")));
            }
            // negatives occupy 0..n, positives n..2n (the slot for 0 is skipped)
            let idx = (v + n as i32) as usize;
            let idx = if idx > n as usize { idx - 1 } else { idx };
            if seen[idx] {
                return Err(invalid(format!("entry {v} appears twice")));
            }
            seen[idx] = true;
            Ok(())
        };
        for &v in &zero_block {
            mark(v)?;
        }
        for b in &blocks {
            for &v in b {
                mark(v)?;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(invalid("not all of ±1..=±n are covered".into()));
        }
        for v in 1..=n as i32 {
            if zero_block.contains(&v) && zero_block.contains(&-v) {
                return Err(invalid(format!("zero-block contains both {v} and -{v}")));
            }
        }
        for b in &blocks {
            let min_pos = match b.iter().copied().filter(|&v| v > 0).min() {
                Some(m) => m,
                None => return Err(invalid("a block has no positive entry".into())),
            };
            for &v in b.iter().filter(|&&v| v > 0) {
                let paired = b.contains(&-v);
                if paired != (v == min_pos) {
                    return Err(invalid(format!(
                        "block pairing rule broken at {v} (least positive member is {min_pos})"
                    )));
                }
            }
        }
        Ok(SignedPartition {
            n,
            zero_block,
            blocks,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Nonzero entries of the zero-block, ascending.
    pub fn zero_block(&self) -> &[i32] {
        &self.zero_block
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// `k`, the number of non-zero blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The statistic `i`: number of negative entries in the zero-block.
    pub fn signed_entries(&self) -> usize {
        self.zero_block.iter().filter(|&&v| v < 0).count()
    }

    /// True when the zero-block contains no positive entry (the restricted
    /// family counted by the `(z+1)`-basis coefficients).
    pub fn zero_block_nonpositive(&self) -> bool {
        self.zero_block.iter().all(|&v| v < 0)
    }

    /// Canonical rendering: zero-block first, e.g.
    /// `[[-5,2],[-2,-1,1],[-3,3],[-4,4,5]]`.
    pub fn canonical(&self) -> String {
        let fmt = |b: &[i32]| {
            let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            format!("[{}]", items.join(","))
        };
        let mut parts = vec![fmt(&self.zero_block)];
        parts.extend(self.blocks.iter().map(|b| fmt(b)));
        format!("[{}]", parts.join(","))
    }
}

/// Packed view of one enumerated partition, exposed to visitor callbacks.
/// Assignment arrays map each value to the block holding it (`0` is the
/// zero-block, `j >= 1` the `j`-th ordinary block in creation order).
pub(crate) struct SignedView<'a> {
    n: u32,
    pos_block: &'a [usize],
    neg_block: &'a [usize],
    creators: &'a [u32],
    zero_negatives: u32,
}

impl SignedView<'_> {
    pub fn block_count(&self) -> usize {
        self.creators.len()
    }

    pub fn signed_entries(&self) -> u32 {
        self.zero_negatives
    }

    pub fn zero_block_nonpositive(&self) -> bool {
        (1..=self.n as usize).all(|v| self.pos_block[v] != 0)
    }

    /// Re-checks the defining conditions directly on the assignment arrays;
    /// independent of how the walker produced the state.
    pub fn is_valid(&self) -> bool {
        for v in 1..=self.n as usize {
            let bp = self.pos_block[v];
            let bn = self.neg_block[v];
            if bp == 0 && bn == 0 {
                return false; // plus-minus pair inside the zero-block
            }
            if bp == bn && self.creators[bp - 1] != v as u32 {
                return false; // pair in a block whose least positive member it is not
            }
        }
        // every block contains the pair of its least positive member
        self.creators.iter().enumerate().all(|(j, &c)| {
            self.pos_block[c as usize] == j + 1 && self.neg_block[c as usize] == j + 1
        })
    }

    pub fn materialize(&self) -> SignedPartition {
        let mut zero_block = Vec::new();
        let mut blocks: Vec<Vec<i32>> = vec![Vec::new(); self.creators.len()];
        for v in 1..=self.n as usize {
            let signed = [(self.neg_block[v], -(v as i32)), (self.pos_block[v], v as i32)];
            for (b, entry) in signed {
                if b == 0 {
                    zero_block.push(entry);
                } else {
                    blocks[b - 1].push(entry);
                }
            }
        }
        zero_block.sort_unstable();
        for b in &mut blocks {
            b.sort_unstable();
        }
        // creation order is increasing least-positive order already
        SignedPartition {
            n: self.n,
            zero_block,
            blocks,
        }
    }
}

/// Visits every signed partition of `{0, ±1, ..., ±n}` (all block counts)
/// exactly once. Elements are inserted in increasing order; the four
/// insertion cases for element `m` are: open the block `{m,-m}`, put `m` in
/// the zero-block and `-m` in an ordinary block, the mirror of that, or put
/// `m` and `-m` in two distinct ordinary blocks.
pub(crate) fn visit_signed_partitions(n: u32, f: &mut impl FnMut(&SignedView<'_>)) {
    struct State {
        n: u32,
        pos_block: Vec<usize>,
        neg_block: Vec<usize>,
        creators: Vec<u32>,
        zero_negatives: u32,
    }

    fn rec(m: u32, st: &mut State, f: &mut impl FnMut(&SignedView<'_>)) {
        if m > st.n {
            f(&SignedView {
                n: st.n,
                pos_block: &st.pos_block,
                neg_block: &st.neg_block,
                creators: &st.creators,
                zero_negatives: st.zero_negatives,
            });
            return;
        }
        let v = m as usize;
        let k = st.creators.len();

        // new block {m, -m}
        st.creators.push(m);
        st.pos_block[v] = k + 1;
        st.neg_block[v] = k + 1;
        rec(m + 1, st, f);
        st.creators.pop();

        // m in the zero-block, -m in an ordinary block
        st.pos_block[v] = 0;
        for b in 1..=k {
            st.neg_block[v] = b;
            rec(m + 1, st, f);
        }

        // -m in the zero-block, m in an ordinary block
        st.neg_block[v] = 0;
        st.zero_negatives += 1;
        for b in 1..=k {
            st.pos_block[v] = b;
            rec(m + 1, st, f);
        }
        st.zero_negatives -= 1;

        // m and -m in two distinct ordinary blocks
        for bp in 1..=k {
            st.pos_block[v] = bp;
            for bn in 1..=k {
                if bn != bp {
                    st.neg_block[v] = bn;
                    rec(m + 1, st, f);
                }
            }
        }
        st.pos_block[v] = 0;
        st.neg_block[v] = 0;
    }

    let mut st = State {
        n,
        pos_block: vec![0; n as usize + 1],
        neg_block: vec![0; n as usize + 1],
        creators: Vec::new(),
        zero_negatives: 0,
    };
    rec(1, &mut st, f);
}

/// All signed `k`-partitions of `{0, ±1, ..., ±n}` in canonical listing
/// order (lexicographic on the serialized form).
pub fn enum_signed_partitions(
    n: u32,
    k: u32,
    bounds: &EnumBounds,
) -> Result<Vec<SignedPartition>> {
    bounds.require("signed partition", bounds.signed, n)?;
    let mut out = Vec::new();
    visit_signed_partitions(n, &mut |view| {
        if view.block_count() == k as usize {
            assert!(view.is_valid(), "walker produced an invalid partition");
            out.push(view.materialize());
        }
    });
    out.sort_by(|a, b| a.canonical().cmp(&b.canonical()));
    Ok(out)
}

/// Histogram of signed `k`-partitions by the statistic `i` (negative entries
/// in the zero-block); entry `i` of the result counts the partitions with
/// that statistic. Must reproduce the `a` coefficient family.
pub fn signed_partition_histogram(n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<u64>> {
    bounds.require("signed partition", bounds.signed, n)?;
    if k < 1 || k > n {
        return Err(Error::OutOfRange { n, k, nmax: n });
    }
    let mut hist = vec![0u64; (n - k) as usize + 1];
    visit_signed_partitions(n, &mut |view| {
        if view.block_count() == k as usize {
            assert!(view.is_valid(), "walker produced an invalid partition");
            hist[view.signed_entries() as usize] += 1;
        }
    });
    Ok(hist)
}

/// Histograms for every `k` at once (index `[k-1][i]`), sharing one sweep.
pub(crate) fn signed_histograms_all(n: u32) -> Vec<Vec<u64>> {
    let mut hists: Vec<Vec<u64>> = (1..=n).map(|k| vec![0u64; (n - k) as usize + 1]).collect();
    visit_signed_partitions(n, &mut |view| {
        let k = view.block_count();
        if k >= 1 {
            assert!(view.is_valid(), "walker produced an invalid partition");
            hists[k - 1][view.signed_entries() as usize] += 1;
        }
    });
    hists
}

/// Zero-block-model histograms for every `k` at once (index `[k-1][i]`),
/// sharing one sweep.
pub(crate) fn d_histograms_all(n: u32) -> Vec<Vec<u64>> {
    let mut hists: Vec<Vec<u64>> = (1..=n).map(|k| vec![0u64; (n - k) as usize + 1]).collect();
    visit_signed_partitions(n, &mut |view| {
        let k = view.block_count();
        if k >= 1 && view.zero_block_nonpositive() {
            assert!(view.is_valid(), "walker produced an invalid partition");
            hists[k - 1][view.signed_entries() as usize] += 1;
        }
    });
    hists
}

/// Counts signed `k`-partitions whose zero-block holds no positive entry,
/// keyed by the number of negative entries. Must reproduce the `d`
/// coefficient family.
pub fn count_d_model(n: u32, k: u32, bounds: &EnumBounds) -> Result<Vec<u64>> {
    bounds.require("signed partition", bounds.signed, n)?;
    if k < 1 || k > n {
        return Err(Error::OutOfRange { n, k, nmax: n });
    }
    let mut hist = vec![0u64; (n - k) as usize + 1];
    visit_signed_partitions(n, &mut |view| {
        if view.block_count() == k as usize && view.zero_block_nonpositive() {
            assert!(view.is_valid(), "walker produced an invalid partition");
            hist[view.signed_entries() as usize] += 1;
        }
    });
    Ok(hist)
}
