//! Executable correspondences between the three coefficient models:
//! partitions to subdiagonal quasi-permutations, signed partitions to
//! partition triples (both directions), and the composition landing on
//! ordered pairs of simply hooked quasi-permutations. Each comes with an
//! exhaustive sweep that checks round trips and statistic preservation at
//! small sizes.

use std::collections::BTreeMap;

use crate::models::partitions::{is_valid_partition, min_mask};
use crate::models::{
    enum_partition_triples, enum_quasiperm_pairs, EnumBounds, PartitionTriple, QuasiPerm,
    SignedPartition,
};
use crate::{Error, Result};

/// Maps a partition of `{1..=n}` to a subdiagonal quasi-permutation: each
/// non-singleton block `{p1 < ... < pm}` contributes the chain of cells
/// `(pm, p(m-1)), ..., (p2, p1)`.
pub fn phi(pi: &[Vec<u32>], n: u32) -> Result<QuasiPerm> {
    if !is_valid_partition(pi, n) {
        return Err(Error::InvalidObject {
            kind: "partition",
            reason: format!("not a canonical partition of 1..={n}"),
        });
    }
    let mut cells = Vec::new();
    for block in pi {
        for pair in block.windows(2) {
            cells.push((pair[1], pair[0]));
        }
    }
    QuasiPerm::new(n, cells)
}

/// Inverse of `phi`: chains of cells become blocks; elements untouched by
/// any cell become singletons. Rejects input with a cell on or above the
/// diagonal.
pub fn phi_inverse(q: &QuasiPerm) -> Result<Vec<Vec<u32>>> {
    let n = q.n();
    for &(x, y) in q.cells() {
        if x <= y {
            return Err(Error::NotSubdiagonal { x, y });
        }
    }
    let mut succ = vec![0u32; n as usize + 1];
    let mut has_pred = vec![false; n as usize + 1];
    for &(x, y) in q.cells() {
        succ[y as usize] = x;
        has_pred[x as usize] = true;
    }
    let mut blocks = Vec::new();
    for start in 1..=n {
        if has_pred[start as usize] {
            continue;
        }
        let mut block = vec![start];
        let mut cur = start;
        while succ[cur as usize] != 0 {
            cur = succ[cur as usize];
            block.push(cur);
        }
        blocks.push(block);
    }
    blocks.sort_by_key(|b| b[0]);
    Ok(blocks)
}

/// The forward half of the signed-partition/triple correspondence.
///
/// The first two members swap signs (the first only for absolute values
/// present in the zero-block, the second globally), then drop negatives and
/// split the zero-block's surviving positives into singletons. The third
/// member instead moves every non-minimal element untouched by the
/// zero-block into it before dropping negatives.
pub fn signed_to_triple(p: &SignedPartition) -> PartitionTriple {
    let n = p.n();
    let zero_abs: Vec<bool> = {
        let mut m = vec![false; n as usize + 1];
        for &v in p.zero_block() {
            m[v.unsigned_abs() as usize] = true;
        }
        m
    };

    // singletons contributed by the zero-block: its negatives' absolute
    // values (sign swap turns exactly those positive in both constructions)
    let zero_singletons: Vec<u32> = p
        .zero_block()
        .iter()
        .filter(|&&v| v < 0)
        .map(|v| v.unsigned_abs())
        .collect();

    let mut p1: Vec<Vec<u32>> = Vec::new();
    let mut p2: Vec<Vec<u32>> = Vec::new();
    for block in p.blocks() {
        // swap signs for zero-block values, keep positives
        let b1: Vec<u32> = block
            .iter()
            .filter(|&&v| {
                let flipped = zero_abs[v.unsigned_abs() as usize];
                (v > 0) != flipped
            })
            .map(|v| v.unsigned_abs())
            .collect();
        // global negation, keep positives: the former negatives
        let b2: Vec<u32> = block
            .iter()
            .filter(|&&v| v < 0)
            .map(|v| v.unsigned_abs())
            .collect();
        p1.push(sorted(b1));
        p2.push(sorted(b2));
    }
    for &s in &zero_singletons {
        p1.push(vec![s]);
        p2.push(vec![s]);
    }

    // third member: move eligible non-minima into the zero-block
    let minima: Vec<bool> = {
        let mut m = vec![false; n as usize + 1];
        for block in p.blocks() {
            let creator = block
                .iter()
                .copied()
                .filter(|&v| v > 0)
                .min()
                .expect("validated block has a positive member");
            m[creator as usize] = true;
        }
        m
    };
    let moved: Vec<bool> = (0..=n as usize)
        .map(|v| v >= 1 && !minima[v] && !zero_abs[v])
        .collect();
    let mut p3: Vec<Vec<u32>> = Vec::new();
    for block in p.blocks() {
        let kept: Vec<u32> = block
            .iter()
            .filter(|&&v| v > 0 && !moved[v as usize])
            .map(|&v| v as u32)
            .collect();
        p3.push(sorted(kept));
    }
    for v in 1..=n {
        let in_zero_positive = p.zero_block().contains(&(v as i32));
        if moved[v as usize] || in_zero_positive {
            p3.push(vec![v]);
        }
    }

    PartitionTriple {
        n,
        p1: canonicalize(p1),
        p2: canonicalize(p2),
        p3: canonicalize(p3),
    }
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

fn canonicalize(mut p: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    p.retain(|b| !b.is_empty());
    p.sort_by_key(|b| b[0]);
    p
}

fn block_of(p: &[Vec<u32>], v: u32) -> &[u32] {
    p.iter()
        .find(|b| b.contains(&v))
        .expect("element inside the ground set")
}

/// The inverse construction: seed one block per common minimum of the first
/// and third members, route the non-minima of the third member, then route
/// the remaining elements through the blocks of the second and first
/// members, falling back to the zero-block when a sign collision occurs.
pub fn triple_to_signed(t: &PartitionTriple) -> Result<SignedPartition> {
    let n = t.n;
    let m1 = min_mask(&t.p1);
    let m3 = min_mask(&t.p3);
    let seeds: Vec<u32> = (1..=n).filter(|&v| m1 & m3 & (1 << (v - 1)) != 0).collect();
    let mut seed_block = vec![usize::MAX; n as usize + 1];
    let mut blocks: Vec<Vec<i32>> = Vec::with_capacity(seeds.len());
    for (idx, &s) in seeds.iter().enumerate() {
        seed_block[s as usize] = idx;
        blocks.push(vec![-(s as i32), s as i32]);
    }
    let mut zero: Vec<i32> = Vec::new();

    let target = |p: &[Vec<u32>], v: u32, seed_block: &[usize]| -> Result<usize> {
        let min = block_of(p, v)[0];
        let idx = seed_block[min as usize];
        if idx == usize::MAX {
            return Err(Error::InvalidObject {
                kind: "partition triple",
                reason: format!("block minimum {min} is not a common minimum"),
            });
        }
        Ok(idx)
    };

    // non-minima of the third member
    for v in 1..=n {
        if m3 & (1 << (v - 1)) == 0 {
            let idx = target(&t.p3, v, &seed_block)?;
            zero.push(-(v as i32));
            blocks[idx].push(v as i32);
        }
    }
    // remaining elements, routed via the second and first members
    for v in 1..=n {
        if m1 & (1 << (v - 1)) != 0 {
            continue;
        }
        let via_second = target(&t.p2, v, &seed_block)?;
        let via_first = target(&t.p1, v, &seed_block)?;
        blocks[via_second].push(-(v as i32));
        if via_first == via_second {
            zero.push(v as i32);
        } else {
            blocks[via_first].push(v as i32);
        }
    }

    SignedPartition::new(n, zero, blocks)
}

/// Applies `phi` to every member, transposes the first two images into
/// supdiagonal position, and unions each with the third image, producing an
/// ordered pair of simply hooked quasi-permutations.
pub fn triple_to_quasipair(t: &PartitionTriple) -> Result<(QuasiPerm, QuasiPerm)> {
    let n = t.n;
    let sub3 = phi(&t.p3, n)?;
    let build = |p: &[Vec<u32>]| -> Result<QuasiPerm> {
        let sup = phi(p, n)?.transpose();
        let mut cells = sup.cells().to_vec();
        cells.extend_from_slice(sub3.cells());
        QuasiPerm::new(n, cells)
    };
    Ok((build(&t.p1)?, build(&t.p2)?))
}

/// Outcome of one exhaustive correspondence sweep.
#[derive(Clone, Debug)]
pub struct BijectionReport {
    pub name: String,
    pub left_size: u64,
    pub right_size: u64,
    pub round_trip_failures: Vec<String>,
    pub statistic_mismatches: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.left_size == self.right_size
            && self.round_trip_failures.is_empty()
            && self.statistic_mismatches.is_empty()
    }
}

/// `phi_inverse . phi` must be the identity on every partition of
/// `{1..=n}`, with every image subdiagonal and simply hooked.
pub fn phi_round_trip_sweep(n: u32) -> BijectionReport {
    let parts = crate::models::partitions::partitions_of(n);
    let mut report = BijectionReport {
        name: format!("phi round trip on partitions of 1..={n}"),
        left_size: parts.len() as u64,
        right_size: 0,
        round_trip_failures: Vec::new(),
        statistic_mismatches: Vec::new(),
    };
    for p in &parts {
        match phi(p, n).and_then(|q| {
            if !q.sup().is_empty() {
                return Err(Error::InvalidObject {
                    kind: "quasi-permutation",
                    reason: "phi image is not subdiagonal".into(),
                });
            }
            phi_inverse(&q).map(|back| (q, back))
        }) {
            Ok((q, back)) => {
                report.right_size += 1;
                if back != *p {
                    report
                        .round_trip_failures
                        .push(crate::models::partitions::serialize_partition(p));
                }
                if q.cells().len() != (n as usize - p.len()) {
                    report.statistic_mismatches.push(format!(
                        "cell count != n - blocks for {}",
                        crate::models::partitions::serialize_partition(p)
                    ));
                }
            }
            Err(e) => report
                .round_trip_failures
                .push(format!("{}: {e}", crate::models::partitions::serialize_partition(p))),
        }
    }
    report
}

/// Both compositions of the signed/triple correspondence must be the
/// identity, with the statistic (negative zero-block entries vs. the triple
/// family index) preserved.
pub fn signed_triple_sweep(n: u32) -> BijectionReport {
    let mut report = BijectionReport {
        name: format!("signed partition <-> triple on size {n}"),
        left_size: 0,
        right_size: 0,
        round_trip_failures: Vec::new(),
        statistic_mismatches: Vec::new(),
    };
    let relaxed = EnumBounds::relaxed();
    for k in 1..=n {
        for i in 0..=(n - k) {
            let mut image = std::collections::BTreeSet::new();
            for p in signed_family(n, k, i) {
                report.left_size += 1;
                let t = signed_to_triple(&p);
                if t.validate(k, i).is_err() {
                    report
                        .statistic_mismatches
                        .push(format!("image of {} leaves the family", p.canonical()));
                    continue;
                }
                image.insert(t.canonical());
                match triple_to_signed(&t) {
                    Ok(back) if back == p => {}
                    Ok(back) => report.round_trip_failures.push(format!(
                        "{} -> {} -> {}",
                        p.canonical(),
                        t.canonical(),
                        back.canonical()
                    )),
                    Err(e) => report
                        .round_trip_failures
                        .push(format!("{}: {e}", p.canonical())),
                }
            }
            let triples = enum_partition_triples(n, k, i, &relaxed)
                .expect("bound relaxed");
            report.right_size += triples.len() as u64;
            for t in &triples {
                if !image.contains(&t.canonical()) {
                    report
                        .round_trip_failures
                        .push(format!("triple not reached: {}", t.canonical()));
                } else {
                    match triple_to_signed(t).map(|p| signed_to_triple(&p)) {
                        Ok(t2) if t2 == *t => {}
                        _ => report
                            .round_trip_failures
                            .push(format!("triple round trip fails: {}", t.canonical())),
                    }
                }
            }
        }
    }
    report
}

fn signed_family(n: u32, k: u32, i: u32) -> Vec<SignedPartition> {
    let mut out = Vec::new();
    crate::models::visit_signed_partitions(n, &mut |view| {
        if view.block_count() == k as usize && view.signed_entries() == i {
            out.push(view.materialize());
        }
    });
    out
}

/// The composition signed partition -> triple -> quasi-permutation pair must
/// hit the pair family bijectively, cell by cell.
pub fn composed_map_sweep(n: u32) -> BijectionReport {
    let mut report = BijectionReport {
        name: format!("composed map onto quasi-permutation pairs on size {n}"),
        left_size: 0,
        right_size: 0,
        round_trip_failures: Vec::new(),
        statistic_mismatches: Vec::new(),
    };
    let relaxed = EnumBounds::relaxed();
    for k in 1..=n {
        for i in 0..=(n - k) {
            let mut image: BTreeMap<String, u64> = BTreeMap::new();
            for p in signed_family(n, k, i) {
                report.left_size += 1;
                let t = signed_to_triple(&p);
                match triple_to_quasipair(&t) {
                    Ok((q1, q2)) => {
                        if q1.sub().len() as u32 != i
                            || q1.sub() != q2.sub()
                            || q1.pr_y_mask() != q2.pr_y_mask()
                        {
                            report.statistic_mismatches.push(format!(
                                "pair conditions fail for {}",
                                p.canonical()
                            ));
                        }
                        *image
                            .entry(format!("{}|{}", q1.canonical(), q2.canonical()))
                            .or_default() += 1;
                    }
                    Err(e) => report
                        .round_trip_failures
                        .push(format!("{}: {e}", p.canonical())),
                }
            }
            let pairs = enum_quasiperm_pairs(n, k, i, &relaxed).expect("bound relaxed");
            report.right_size += pairs.len() as u64;
            if image.values().any(|&c| c != 1) {
                report
                    .round_trip_failures
                    .push(format!("image not injective at k={k} i={i}"));
            }
            for (q1, q2) in &pairs {
                if !image.contains_key(&format!("{}|{}", q1.canonical(), q2.canonical())) {
                    report.round_trip_failures.push(format!(
                        "pair not reached: {} {}",
                        q1.canonical(),
                        q2.canonical()
                    ));
                }
            }
        }
    }
    report
}
