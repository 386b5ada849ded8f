//! Canonical set-partition generation shared by the enumerator modules.

/// All set partitions of `{1..=n}` in canonical form: blocks ordered by
/// minimum element, members ascending within each block. Elements are
/// inserted in increasing order, so the generated form is already canonical.
pub fn partitions_of(n: u32) -> Vec<Vec<Vec<u32>>> {
    fn rec(m: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if m > n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(m);
            rec(m + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![m]);
        rec(m + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// Bit `v-1` set when `v` belongs to `{1..=n}`.
pub fn full_mask(n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// Bitmask of block minima.
pub fn min_mask(p: &[Vec<u32>]) -> u32 {
    p.iter().map(|b| 1u32 << (b[0] - 1)).fold(0, |a, m| a | m)
}

/// Bitmask of singleton blocks.
pub fn sing_mask(p: &[Vec<u32>]) -> u32 {
    p.iter()
        .filter(|b| b.len() == 1)
        .map(|b| 1u32 << (b[0] - 1))
        .fold(0, |a, m| a | m)
}

/// `[[1,4,6],[2,5],[3]]`-style canonical rendering.
pub fn serialize_partition(p: &[Vec<u32>]) -> String {
    let blocks: Vec<String> = p
        .iter()
        .map(|b| {
            let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            format!("[{}]", items.join(","))
        })
        .collect();
    format!("[{}]", blocks.join(","))
}

/// Checks that `p` is a partition of `{1..=n}` in canonical form.
pub fn is_valid_partition(p: &[Vec<u32>], n: u32) -> bool {
    let mut seen = 0u32;
    let mut prev_min = 0;
    for b in p {
        if b.is_empty() || b[0] <= prev_min {
            return false;
        }
        prev_min = b[0];
        let mut prev = 0;
        for &v in b {
            if v < 1 || v > n {
                return false;
            }
            if prev != 0 && v <= prev {
                return false;
            }
            prev = v;
            if seen & (1 << (v - 1)) != 0 {
                return false;
            }
            seen |= 1 << (v - 1);
        }
    }
    seen == full_mask(n)
}
