//! Aggregated verification: every identity check and model-count comparison
//! packaged as named pass/fail checks, grouped into scopes. The check list
//! is returned as independent tasks so a front end can run them on any
//! number of threads and still assemble a deterministic report.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::bijections;
use crate::models::{self, EnumBounds};
use crate::series;
use crate::triangles::{self, CoeffKind, NumberKind};

/// One named check outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_failures(name: String, checked: u64, failures: &[String]) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} cells checked")
        } else {
            let mut shown: Vec<String> = failures.iter().take(4).cloned().collect();
            if failures.len() > 4 {
                shown.push(format!("... {} more", failures.len() - 4));
            }
            shown.join("; ")
        };
        Check {
            name,
            passed,
            detail,
        }
    }
}

/// A deferred check, ready to run on any thread.
pub struct CheckTask {
    pub name: String,
    runner: Box<dyn FnOnce() -> Check + Send>,
}

impl CheckTask {
    fn new(name: &str, runner: impl FnOnce() -> Check + Send + 'static) -> Self {
        CheckTask {
            name: name.to_string(),
            runner: Box::new(runner),
        }
    }

    pub fn run(self) -> Check {
        (self.runner)()
    }
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Triangles,
    Models,
    Bijections,
    Series,
}

impl std::str::FromStr for Scope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Scope::All),
            "triangles" => Ok(Scope::Triangles),
            "models" => Ok(Scope::Models),
            "bijections" => Ok(Scope::Bijections),
            "series" => Ok(Scope::Series),
            other => Err(format!(
                "unknown scope `{other}` (expected all, triangles, models, bijections, series)"
            )),
        }
    }
}

fn triangle_check(name: String, report: triangles::TriangleReport) -> Check {
    Check::from_failures(name, report.cells_checked, &report.failures)
}

fn gf_check(name: String, report: series::GfReport) -> Check {
    Check::from_failures(
        name,
        ((report.order_t + 1) * (report.order_x + 1)) as u64,
        &report.mismatches,
    )
}

fn bijection_check(name: String, report: bijections::BijectionReport) -> Check {
    let mut failures = report.round_trip_failures.clone();
    failures.extend(report.statistic_mismatches.iter().cloned());
    if report.left_size != report.right_size {
        failures.push(format!(
            "family sizes differ: {} vs {}",
            report.left_size, report.right_size
        ));
    }
    Check::from_failures(name, report.left_size, &failures)
}

fn triangle_tasks(nmax: u32) -> Vec<CheckTask> {
    vec![
        CheckTask::new(&format!("triangles/defining-relations(n<={nmax})"), move || {
            triangle_check(
                format!("triangles/defining-relations(n<={nmax})"),
                triangles::verify_defining_relations(nmax),
            )
        }),
        CheckTask::new(&format!("triangles/coefficient-structure(n<={nmax})"), move || {
            triangle_check(
                format!("triangles/coefficient-structure(n<={nmax})"),
                triangles::verify_coefficient_structure(nmax),
            )
        }),
        CheckTask::new(&format!("triangles/basis-change(n<={nmax})"), move || {
            triangle_check(
                format!("triangles/basis-change(n<={nmax})"),
                triangles::verify_basis_change(nmax),
            )
        }),
        CheckTask::new(&format!("triangles/closed-form(n<={nmax})"), move || {
            triangle_check(
                format!("triangles/closed-form(n<={nmax})"),
                triangles::verify_explicit_formula(nmax),
            )
        }),
    ]
}

/// Compares a per-`(k, i)` model count table against a coefficient family of
/// the matching polynomial triangle.
fn compare_against_coeffs(
    name: String,
    n: u32,
    kind: CoeffKind,
    counts: impl Fn(u32) -> Vec<Vec<u64>>,
) -> Check {
    let triangle = match kind {
        CoeffKind::B => triangles::build_js_first(n),
        _ => triangles::build_js_second(n),
    };
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for m in 1..=n {
        let table = counts(m);
        for k in 1..=m {
            let expected = triangles::coeffs(&triangle, kind, m, k)
                .expect("coefficient extraction")
                .values;
            let got = &table[k as usize - 1];
            checked += expected.len() as u64;
            if got.len() != expected.len()
                || got
                    .iter()
                    .zip(&expected)
                    .any(|(g, e)| BigInt::from(*g) != *e)
            {
                failures.push(format!("({m},{k}): counts {got:?} vs coefficients"));
            }
        }
    }
    Check::from_failures(name, checked, &failures)
}

fn model_tasks(nmax: u32, bounds: &EnumBounds) -> Vec<CheckTask> {
    let mut tasks = Vec::new();

    let n_signed = nmax.min(bounds.signed);
    tasks.push(CheckTask::new(
        &format!("models/signed-partitions-vs-a(n<={n_signed})"),
        move || {
            compare_against_coeffs(
                format!("models/signed-partitions-vs-a(n<={n_signed})"),
                n_signed,
                CoeffKind::A,
                |m| models::signed_partition_histograms(m, &EnumBounds::relaxed())
                    .expect("bound pre-capped"),
            )
        },
    ));

    tasks.push(CheckTask::new(
        &format!("models/zero-block-model-vs-d(n<={n_signed})"),
        move || {
            compare_against_coeffs(
                format!("models/zero-block-model-vs-d(n<={n_signed})"),
                n_signed,
                CoeffKind::D,
                |m| models::d_model_histograms(m, &EnumBounds::relaxed())
                    .expect("bound pre-capped"),
            )
        },
    ));

    let n_pairs = nmax.min(bounds.quasipair);
    tasks.push(CheckTask::new(
        &format!("models/quasiperm-pairs-vs-a(n<={n_pairs})"),
        move || {
            compare_against_coeffs(
                format!("models/quasiperm-pairs-vs-a(n<={n_pairs})"),
                n_pairs,
                CoeffKind::A,
                |m| models::quasiperm_pair_counts(m, &EnumBounds::relaxed())
                    .expect("bound pre-capped"),
            )
        },
    ));

    let n_triple = nmax.min(bounds.triple);
    tasks.push(CheckTask::new(
        &format!("models/partition-triples-vs-a(n<={n_triple})"),
        move || {
            compare_against_coeffs(
                format!("models/partition-triples-vs-a(n<={n_triple})"),
                n_triple,
                CoeffKind::A,
                |m| models::partition_triple_counts(m, &EnumBounds::relaxed())
                    .expect("bound pre-capped"),
            )
        },
    ));

    let n_first = nmax.min(bounds.firstkind);
    tasks.push(CheckTask::new(
        &format!("models/first-kind-pairs-vs-b(n<={n_first})"),
        move || {
            compare_against_coeffs(
                format!("models/first-kind-pairs-vs-b(n<={n_first})"),
                n_first,
                CoeffKind::B,
                |m| models::first_kind_counts(m, &EnumBounds::relaxed())
                    .expect("bound pre-capped"),
            )
        },
    ));

    tasks.push(CheckTask::new(
        &format!("models/first-kind-row-sums-vs-ls(n<={n_first})"),
        move || {
            let name = format!("models/first-kind-row-sums-vs-ls(n<={n_first})");
            let js1 = triangles::build_js_first(n_first);
            let mut failures = Vec::new();
            let mut checked = 0u64;
            for m in 1..=n_first {
                let table = models::first_kind_counts(m, &EnumBounds::relaxed())
                    .expect("bound pre-capped");
                for k in 1..=m {
                    let total: u64 = table[k as usize - 1].iter().sum();
                    let ls = triangles::legendre_stirling(&js1, m, k)
                        .expect("in range")
                        .abs();
                    checked += 1;
                    if BigInt::from(total) != ls {
                        failures.push(format!("({m},{k}): {total} vs |ls|"));
                    }
                }
            }
            Check::from_failures(name, checked, &failures)
        },
    ));

    tasks.push(CheckTask::new(
        &format!("models/first-kind-top-fibers(n<={n_first})"),
        move || {
            let name = format!("models/first-kind-top-fibers(n<={n_first})");
            let b = EnumBounds::relaxed();
            let mut failures = Vec::new();
            let mut checked = 0u64;
            for m in 1..=n_first {
                for k in 1..=m {
                    let fibers = models::top_statistic_fibers(m, k, &b).expect("relaxed");
                    checked += fibers.len() as u64;
                    if fibers.iter().any(|&f| f != 1) {
                        failures.push(format!("({m},{k}): fiber sizes {fibers:?}"));
                    }
                }
            }
            Check::from_failures(name, checked, &failures)
        },
    ));

    let n_u = nmax.min(bounds.upairs);
    tasks.push(CheckTask::new(
        &format!("models/cyclic-minima-pairs-vs-u(n<={n_u})"),
        move || {
            let name = format!("models/cyclic-minima-pairs-vs-u(n<={n_u})");
            let b = EnumBounds::relaxed();
            let u1 = triangles::build_central_even(NumberKind::First, n_u);
            let mut failures = Vec::new();
            let mut checked = 0u64;
            for m in 1..=n_u {
                for k in 1..=m {
                    let expected = u1.at(m, k).abs();
                    let by_min = models::count_u_pairs(m, k, &b).expect("relaxed");
                    let by_max = models::count_u_pairs_max(m, k, &b).expect("relaxed");
                    checked += 2;
                    if BigInt::from(by_min) != expected || BigInt::from(by_max) != expected {
                        failures.push(format!("({m},{k}): {by_min}/{by_max} vs |u|"));
                    }
                }
            }
            Check::from_failures(name, checked, &failures)
        },
    ));

    let n_odd = nmax.min(bounds.oddpart);
    tasks.push(CheckTask::new(
        &format!("models/odd-block-partitions-vs-V(n<={n_odd})"),
        move || {
            let name = format!("models/odd-block-partitions-vs-V(n<={n_odd})");
            let b = EnumBounds::relaxed();
            let v2 = triangles::build_central_odd(NumberKind::Second, n_odd);
            let mut failures = Vec::new();
            let mut checked = 0u64;
            for m in 0..=n_odd {
                for k in 0..=m {
                    let count = models::count_odd_partitions(m, k, &b).expect("relaxed");
                    checked += 1;
                    if BigInt::from(count) != *v2.at(m, k) {
                        failures.push(format!("({m},{k}): {count} vs V"));
                    }
                }
            }
            Check::from_failures(name, checked, &failures)
        },
    ));

    let n_riordan = nmax.min(bounds.riordan);
    tasks.push(CheckTask::new(
        &format!("models/riordan-complexes-vs-v(n<={n_riordan})"),
        move || {
            let name = format!("models/riordan-complexes-vs-v(n<={n_riordan})");
            let b = EnumBounds::relaxed();
            let v1 = triangles::build_central_odd(NumberKind::First, n_riordan);
            let mut failures = Vec::new();
            let mut checked = 0u64;
            for m in 0..=n_riordan {
                for k in 0..=m {
                    let count = models::count_riordan_complexes(m, k, &b).expect("relaxed");
                    checked += 1;
                    if BigInt::from(count) != v1.at(m, k).abs() {
                        failures.push(format!("({m},{k}): {count} vs |v|"));
                    }
                }
            }
            Check::from_failures(name, checked, &failures)
        },
    ));

    tasks
}

fn bijection_tasks(nmax: u32, bounds: &EnumBounds) -> Vec<CheckTask> {
    let n_phi = nmax.min(bounds.quasipair);
    let n_signed = nmax.min(bounds.firstkind);
    vec![
        CheckTask::new(&format!("bijections/phi-round-trip(n<={n_phi})"), move || {
            let mut merged = bijections::phi_round_trip_sweep(n_phi);
            for m in 1..n_phi {
                let r = bijections::phi_round_trip_sweep(m);
                merged.left_size += r.left_size;
                merged.right_size += r.right_size;
                merged.round_trip_failures.extend(r.round_trip_failures);
                merged.statistic_mismatches.extend(r.statistic_mismatches);
            }
            bijection_check(format!("bijections/phi-round-trip(n<={n_phi})"), merged)
        }),
        CheckTask::new(&format!("bijections/signed-triple(n<={n_signed})"), move || {
            let mut merged = bijections::signed_triple_sweep(n_signed);
            for m in 1..n_signed {
                let r = bijections::signed_triple_sweep(m);
                merged.left_size += r.left_size;
                merged.right_size += r.right_size;
                merged.round_trip_failures.extend(r.round_trip_failures);
                merged.statistic_mismatches.extend(r.statistic_mismatches);
            }
            bijection_check(format!("bijections/signed-triple(n<={n_signed})"), merged)
        }),
        CheckTask::new(&format!("bijections/composed-map(n<={n_signed})"), move || {
            let mut merged = bijections::composed_map_sweep(n_signed);
            for m in 1..n_signed {
                let r = bijections::composed_map_sweep(m);
                merged.left_size += r.left_size;
                merged.right_size += r.right_size;
                merged.round_trip_failures.extend(r.round_trip_failures);
                merged.statistic_mismatches.extend(r.statistic_mismatches);
            }
            bijection_check(format!("bijections/composed-map(n<={n_signed})"), merged)
        }),
    ]
}

fn series_tasks(nmax: u32) -> Vec<CheckTask> {
    let n_egf = nmax.min(8);
    let n_product = nmax.min(10);
    let (ogf_k, ogf_n) = (nmax.min(12), nmax.min(16));
    let (base_n, base_m) = (nmax.min(10), nmax.min(10));
    vec![
        CheckTask::new(&format!("series/odd-block-egf(n<={n_egf})"), move || {
            gf_check(
                format!("series/odd-block-egf(n<={n_egf})"),
                series::check_odd_block_egf(n_egf, n_egf),
            )
        }),
        CheckTask::new(&format!("series/riordan-egf(n<={n_egf})"), move || {
            gf_check(
                format!("series/riordan-egf(n<={n_egf})"),
                series::check_riordan_egf(n_egf, n_egf),
            )
        }),
        CheckTask::new(&format!("series/odd-product(n<={n_product})"), move || {
            let name = format!("series/odd-product(n<={n_product})");
            let mut failures = Vec::new();
            let mut checked = 0u64;
            for m in 0..=n_product {
                let r = series::check_odd_product(m);
                checked += (2 * m + 2) as u64;
                failures.extend(r.mismatches);
            }
            Check::from_failures(name, checked, &failures)
        }),
        CheckTask::new(
            &format!("series/ordinary-gf(k<={ogf_k},n<={ogf_n})"),
            move || {
                gf_check(
                    format!("series/ordinary-gf(k<={ogf_k},n<={ogf_n})"),
                    series::check_ordinary_gf(ogf_k, ogf_n),
                )
            },
        ),
        CheckTask::new(
            &format!("series/base-expansion(n<={base_n},m<={base_m})"),
            move || {
                gf_check(
                    format!("series/base-expansion(n<={base_n},m<={base_m})"),
                    series::check_base_expansion(base_n, base_m),
                )
            },
        ),
    ]
}

/// Builds the full ordered task list for a scope.
pub fn scope_tasks(scope: Scope, nmax: u32, bounds: &EnumBounds) -> Vec<CheckTask> {
    let mut tasks = Vec::new();
    if matches!(scope, Scope::All | Scope::Triangles) {
        tasks.extend(triangle_tasks(nmax));
    }
    if matches!(scope, Scope::All | Scope::Models) {
        tasks.extend(model_tasks(nmax, bounds));
    }
    if matches!(scope, Scope::All | Scope::Bijections) {
        tasks.extend(bijection_tasks(nmax, bounds));
    }
    if matches!(scope, Scope::All | Scope::Series) {
        tasks.extend(series_tasks(nmax));
    }
    tasks
}

/// Runs a scope sequentially.
pub fn run_scope(scope: Scope, nmax: u32, bounds: &EnumBounds) -> Vec<Check> {
    scope_tasks(scope, nmax, bounds)
        .into_iter()
        .map(CheckTask::run)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_scope_passes_at_desk_scale() {
        let checks = run_scope(Scope::All, 5, &EnumBounds::default());
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert!(checks.len() >= 15);
    }

    #[test]
    fn scope_filtering() {
        let b = EnumBounds::default();
        assert_eq!(scope_tasks(Scope::Triangles, 3, &b).len(), 4);
        assert!(scope_tasks(Scope::Series, 3, &b).len() >= 5);
        let names: Vec<String> = scope_tasks(Scope::Models, 3, &b)
            .into_iter()
            .map(|t| t.name)
            .collect();
        assert!(names.iter().all(|n| n.starts_with("models/")));
    }

    #[test]
    fn vacuous_scope_passes() {
        let checks = run_scope(Scope::Triangles, 0, &EnumBounds::default());
        assert!(checks.iter().all(|c| c.passed));
    }
}
