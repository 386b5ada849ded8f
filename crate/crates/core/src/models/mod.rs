//! Exhaustive enumerators for the combinatorial families whose counts
//! realize the triangle coefficients: signed partitions, simply hooked
//! quasi-permutation pairs, partition triples, permutation pairs graded by
//! the record statistic, odd-block partitions, and Riordan complexes.
//!
//! Every enumerator is paired with a validity predicate that re-checks the
//! defining conditions on each emitted object, and every public entry point
//! enforces a configurable size bound so that full sweeps stay within desk
//! scale.

pub mod firstkind;
pub mod partitions;
pub mod quasiperm;
pub mod riordan;
pub mod signed;
mod triples;

pub use firstkind::{
    count_u_pairs, count_u_pairs_max, enum_first_kind_pairs, first_kind_histogram, records,
    top_statistic_fibers, FirstKindPair,
};
pub use quasiperm::{
    enum_quasiperm_pairs, is_simply_hooked, quasiperm_pair_count, simply_hooked_verdicts,
    QuasiPerm,
};
pub use riordan::{
    count_odd_partitions, count_riordan_complexes, enum_odd_partitions, enum_riordan_complexes,
    RiordanComplex,
};
pub use signed::{
    count_d_model, enum_signed_partitions, signed_partition_histogram, SignedPartition,
};
pub use triples::{enum_partition_triples, partition_triple_count, PartitionTriple};

use crate::{Error, Result};

/// Per-family enumeration ceilings. The defaults keep every full sweep
/// within seconds; they are configuration, not hard limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumBounds {
    pub signed: u32,
    pub quasipair: u32,
    pub triple: u32,
    pub firstkind: u32,
    pub upairs: u32,
    pub oddpart: u32,
    pub riordan: u32,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            signed: 9,
            quasipair: 7,
            triple: 7,
            firstkind: 6,
            upairs: 6,
            oddpart: 6,
            riordan: 4,
        }
    }
}

impl EnumBounds {
    /// No ceilings; for internal reuse where an outer bound already applies.
    pub(crate) fn relaxed() -> Self {
        EnumBounds {
            signed: u32::MAX,
            quasipair: u32::MAX,
            triple: u32::MAX,
            firstkind: u32::MAX,
            upairs: u32::MAX,
            oddpart: u32::MAX,
            riordan: u32::MAX,
        }
    }

    pub(crate) fn require(&self, family: &'static str, bound: u32, n: u32) -> Result<()> {
        if n > bound {
            return Err(Error::BoundExceeded { family, bound, n });
        }
        Ok(())
    }
}

pub(crate) use signed::visit_signed_partitions;

/// Signed-partition histograms for every `(k, i)` in one sweep; the result
/// is indexed `[k-1][i]`.
pub fn signed_partition_histograms(n: u32, bounds: &EnumBounds) -> Result<Vec<Vec<u64>>> {
    bounds.require("signed partition", bounds.signed, n)?;
    Ok(signed::signed_histograms_all(n))
}

/// Zero-block-model histograms for every `(k, i)` in one sweep.
pub fn d_model_histograms(n: u32, bounds: &EnumBounds) -> Result<Vec<Vec<u64>>> {
    bounds.require("signed partition", bounds.signed, n)?;
    Ok(signed::d_histograms_all(n))
}

/// Quasi-permutation pair counts for every `(k, i)` in one sweep.
pub fn quasiperm_pair_counts(n: u32, bounds: &EnumBounds) -> Result<Vec<Vec<u64>>> {
    bounds.require("quasi-permutation pair", bounds.quasipair, n)?;
    Ok(quasiperm::quasiperm_pair_counts_all(n))
}

/// Partition-triple counts for every `(k, i)` in one sweep.
pub fn partition_triple_counts(n: u32, bounds: &EnumBounds) -> Result<Vec<Vec<u64>>> {
    bounds.require("partition triple", bounds.triple, n)?;
    let table = triples::triple_counts_all(n);
    Ok((1..=n).map(|k| table.row(k).to_vec()).collect())
}

/// First-kind pair counts for every `(k, i)` in one sweep.
pub fn first_kind_counts(n: u32, bounds: &EnumBounds) -> Result<Vec<Vec<u64>>> {
    bounds.require("first-kind pair", bounds.firstkind, n)?;
    let table = firstkind::first_kind_counts_all(n);
    Ok((1..=n).map(|k| table.row(k).to_vec()).collect())
}
