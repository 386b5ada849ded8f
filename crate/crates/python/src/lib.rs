//! Python bindings: triangles as nested lists of ints, model counts,
//! the record statistic, the partition/quasi-permutation correspondence,
//! and the verification suite.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use jacobi_stirling::models::{self, EnumBounds};
use jacobi_stirling::triangles::{self, CoeffKind, NumberKind};
use jacobi_stirling::verify::{run_scope, Scope};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn poly_rows(t: &triangles::PolyTriangle) -> Vec<Vec<Vec<BigInt>>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|p| p.coeffs().to_vec()).collect())
        .collect()
}

/// Second-kind triangle as rows of coefficient lists (lowest degree first).
#[pyfunction]
fn js_second(nmax: u32) -> Vec<Vec<Vec<BigInt>>> {
    poly_rows(&triangles::build_js_second(nmax))
}

/// First-kind triangle as rows of coefficient lists.
#[pyfunction]
fn js_first(nmax: u32) -> Vec<Vec<Vec<BigInt>>> {
    poly_rows(&triangles::build_js_first(nmax))
}

/// Integer triangle by kind: one of S, s, U, u, V, v, LS, ls.
#[pyfunction]
fn triangle(kind: &str, nmax: u32) -> PyResult<Vec<Vec<BigInt>>> {
    let t = match kind {
        "S" => triangles::build_stirling(NumberKind::Second, nmax),
        "s" => triangles::build_stirling(NumberKind::First, nmax),
        "U" => triangles::build_central_even(NumberKind::Second, nmax),
        "u" => triangles::build_central_even(NumberKind::First, nmax),
        "V" => triangles::build_central_odd(NumberKind::Second, nmax),
        "v" => triangles::build_central_odd(NumberKind::First, nmax),
        "LS" | "ls" => {
            let p = if kind == "LS" {
                triangles::build_js_second(nmax)
            } else {
                triangles::build_js_first(nmax)
            };
            return Ok((0..=nmax)
                .map(|n| {
                    (0..=n)
                        .map(|k| triangles::legendre_stirling(&p, n, k).expect("in range"))
                        .collect()
                })
                .collect());
        }
        other => return Err(value_err(format!("unknown triangle kind `{other}`"))),
    };
    Ok(t.rows().to_vec())
}

/// Coefficient family of one cell: kind is a, b, or d.
#[pyfunction]
fn coefficients(kind: &str, n: u32, k: u32) -> PyResult<Vec<BigInt>> {
    let (ck, t) = match kind {
        "a" => (CoeffKind::A, triangles::build_js_second(n)),
        "b" => (CoeffKind::B, triangles::build_js_first(n)),
        "d" => (CoeffKind::D, triangles::build_js_second(n)),
        other => return Err(value_err(format!("unknown coefficient kind `{other}`"))),
    };
    Ok(triangles::coeffs(&t, ck, n, k).map_err(value_err)?.values)
}

/// Closed-form evaluation of one second-kind cell.
#[pyfunction]
fn explicit_js(n: u32, j: u32) -> PyResult<Vec<BigInt>> {
    if j > n {
        return Err(value_err("requires j <= n"));
    }
    Ok(triangles::explicit_js(n, j)
        .map_err(value_err)?
        .coeffs()
        .to_vec())
}

/// Second-kind cell evaluated at an integer point.
#[pyfunction]
fn eval_js(n: u32, k: u32, z: BigInt) -> PyResult<BigInt> {
    let t = triangles::build_js_second(n);
    Ok(t.cell(n, k).map_err(value_err)?.eval_int(&z))
}

/// Rewrites a coefficient list in the shifted basis `(z + c)^i`.
#[pyfunction]
fn rebase(coeffs: Vec<BigInt>, c: BigInt) -> Vec<BigInt> {
    let p = jacobi_stirling::exactmath::IntPoly::from_coeffs(coeffs);
    p.rebase_shift(&c).coeffs().to_vec()
}

/// `(rec, rec0)` of a word with distinct letters.
#[pyfunction]
fn records(word: Vec<u32>) -> PyResult<(usize, usize)> {
    models::records(&word).map_err(value_err)
}

#[pyfunction]
fn signed_partition_counts(n: u32, k: u32) -> PyResult<Vec<u64>> {
    models::signed_partition_histogram(n, k, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn d_model_counts(n: u32, k: u32) -> PyResult<Vec<u64>> {
    models::count_d_model(n, k, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn quasiperm_pair_count(n: u32, k: u32, i: u32) -> PyResult<u64> {
    models::quasiperm_pair_count(n, k, i, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn partition_triple_count(n: u32, k: u32, i: u32) -> PyResult<u64> {
    models::partition_triple_count(n, k, i, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn first_kind_counts(n: u32, k: u32) -> PyResult<Vec<u64>> {
    models::first_kind_histogram(n, k, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn u_pair_count(n: u32, k: u32) -> PyResult<u64> {
    models::count_u_pairs(n, k, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn odd_partition_count(n: u32, k: u32) -> PyResult<u64> {
    models::count_odd_partitions(n, k, &EnumBounds::default()).map_err(value_err)
}

#[pyfunction]
fn riordan_complex_count(n: u32, k: u32) -> PyResult<u64> {
    models::count_riordan_complexes(n, k, &EnumBounds::default()).map_err(value_err)
}

/// Subdiagonal quasi-permutation cells of a partition.
#[pyfunction]
fn phi(blocks: Vec<Vec<u32>>, n: u32) -> PyResult<Vec<(u32, u32)>> {
    Ok(jacobi_stirling::bijections::phi(&blocks, n)
        .map_err(value_err)?
        .cells()
        .to_vec())
}

/// Partition recovered from subdiagonal quasi-permutation cells.
#[pyfunction]
fn phi_inverse(cells: Vec<(u32, u32)>, n: u32) -> PyResult<Vec<Vec<u32>>> {
    let q = models::QuasiPerm::new(n, cells).map_err(value_err)?;
    jacobi_stirling::bijections::phi_inverse(&q).map_err(value_err)
}

/// Maps a signed partition (zero-block entries plus ordinary blocks) to its
/// partition triple.
#[pyfunction]
fn signed_to_triple(
    n: u32,
    zero_block: Vec<i32>,
    blocks: Vec<Vec<i32>>,
) -> PyResult<(Vec<Vec<u32>>, Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    let p = models::SignedPartition::new(n, zero_block, blocks).map_err(value_err)?;
    let t = jacobi_stirling::bijections::signed_to_triple(&p);
    Ok((t.p1, t.p2, t.p3))
}

/// Runs a verification scope; returns `(name, passed, detail)` per check.
#[pyfunction]
fn verify(scope: &str, nmax: u32) -> PyResult<Vec<(String, bool, String)>> {
    let scope: Scope = scope.parse().map_err(value_err)?;
    Ok(run_scope(scope, nmax, &EnumBounds::default())
        .into_iter()
        .map(|c| (c.name, c.passed, c.detail))
        .collect())
}

#[pymodule]
fn jacobi_stirling_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(js_second, m)?)?;
    m.add_function(wrap_pyfunction!(js_first, m)?)?;
    m.add_function(wrap_pyfunction!(triangle, m)?)?;
    m.add_function(wrap_pyfunction!(coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(explicit_js, m)?)?;
    m.add_function(wrap_pyfunction!(eval_js, m)?)?;
    m.add_function(wrap_pyfunction!(rebase, m)?)?;
    m.add_function(wrap_pyfunction!(records, m)?)?;
    m.add_function(wrap_pyfunction!(signed_partition_counts, m)?)?;
    m.add_function(wrap_pyfunction!(d_model_counts, m)?)?;
    m.add_function(wrap_pyfunction!(quasiperm_pair_count, m)?)?;
    m.add_function(wrap_pyfunction!(partition_triple_count, m)?)?;
    m.add_function(wrap_pyfunction!(first_kind_counts, m)?)?;
    m.add_function(wrap_pyfunction!(u_pair_count, m)?)?;
    m.add_function(wrap_pyfunction!(odd_partition_count, m)?)?;
    m.add_function(wrap_pyfunction!(riordan_complex_count, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(signed_to_triple, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
