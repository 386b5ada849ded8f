//! Acceptance gate: one test per criterion, each printing a pass line.
//! Every tolerance here is exact equality; every bound is pinned in code.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;

use jacobi_stirling::bijections;
use jacobi_stirling::models::{self, EnumBounds};
use jacobi_stirling::series;
use jacobi_stirling::triangles::{self, CoeffKind, NumberKind};

fn coeff_values(t: &triangles::PolyTriangle, kind: CoeffKind, n: u32, k: u32) -> Vec<BigInt> {
    triangles::coeffs(t, kind, n, k).expect("in range").values
}

/// Criterion 1: the published triangles are reproduced byte for byte
/// (canonical lowest-degree-first rendering for the polynomial cells).
#[test]
fn acceptance_01_table_reproduction() {
    let js2 = triangles::build_js_second(6);
    let second: &[(u32, u32, &str)] = &[
        (1, 1, "1"),
        (2, 1, "1+z"),
        (2, 2, "1"),
        (3, 1, "1+2z+z^2"),
        (3, 2, "5+3z"),
        (3, 3, "1"),
        (4, 1, "1+3z+3z^2+z^3"),
        (4, 2, "21+24z+7z^2"),
        (4, 3, "14+6z"),
        (4, 4, "1"),
        (5, 1, "1+4z+6z^2+4z^3+z^4"),
        (5, 2, "85+141z+79z^2+15z^3"),
        (5, 3, "147+120z+25z^2"),
        (5, 4, "30+10z"),
        (5, 5, "1"),
        (6, 1, "1+5z+10z^2+10z^3+5z^4+z^5"),
        (6, 2, "341+738z+604z^2+222z^3+31z^4"),
        (6, 3, "1408+1662z+664z^2+90z^3"),
        (6, 4, "627+400z+65z^2"),
        (6, 5, "55+15z"),
        (6, 6, "1"),
    ];
    for &(n, k, expected) in second {
        assert_eq!(js2.at(n, k).pretty("z"), expected, "JS({n},{k})");
    }

    let js1 = triangles::build_js_first(5);
    let first: &[(u32, u32, &str)] = &[
        (1, 1, "1"),
        (2, 1, "-1-z"),
        (2, 2, "1"),
        (3, 1, "4+6z+2z^2"),
        (3, 2, "-5-3z"),
        (3, 3, "1"),
        (4, 1, "-36-66z-36z^2-6z^3"),
        (4, 2, "49+48z+11z^2"),
        (4, 3, "-14-6z"),
        (4, 4, "1"),
        (5, 1, "576+1200z+840z^2+240z^3+24z^4"),
        (5, 2, "-820-1030z-404z^2-50z^3"),
        (5, 3, "273+200z+35z^2"),
        (5, 4, "-30-10z"),
        (5, 5, "1"),
    ];
    for &(n, k, expected) in first {
        assert_eq!(js1.at(n, k).pretty("z"), expected, "js({n},{k})");
    }

    let shifted: &[(u32, u32, &[i64])] = &[
        (1, 1, &[1]),
        (2, 1, &[0, 1]),
        (2, 2, &[1]),
        (3, 1, &[0, 0, 1]),
        (3, 2, &[2, 3]),
        (3, 3, &[1]),
        (4, 1, &[0, 0, 0, 1]),
        (4, 2, &[4, 10, 7]),
        (4, 3, &[8, 6]),
        (4, 4, &[1]),
        (5, 1, &[0, 0, 0, 0, 1]),
        (5, 2, &[8, 28, 34, 15]),
        (5, 3, &[52, 70, 25]),
        (5, 4, &[20, 10]),
        (5, 5, &[1]),
    ];
    for &(n, k, expected) in shifted {
        let expected: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(coeff_values(&js2, CoeffKind::D, n, k), expected, "d({n},{k})");
    }

    let v2 = triangles::build_central_odd(NumberKind::Second, 5);
    let v1 = triangles::build_central_odd(NumberKind::First, 5);
    let odd_second: &[&[i64]] = &[
        &[1],
        &[1, 1],
        &[1, 10, 1],
        &[1, 91, 35, 1],
        &[1, 820, 966, 84, 1],
        &[1, 7381, 24970, 5082, 165, 1],
    ];
    let odd_first_abs: &[&[i64]] = &[
        &[1],
        &[1, 1],
        &[9, 10, 1],
        &[225, 259, 35, 1],
        &[11025, 12916, 1974, 84, 1],
        &[893025, 1057221, 172810, 8778, 165, 1],
    ];
    for n in 0..=5u32 {
        for k in 0..=n {
            assert_eq!(
                v2.at(n, k),
                &BigInt::from(odd_second[n as usize][k as usize]),
                "V({n},{k})"
            );
            assert_eq!(
                v1.at(n, k).abs(),
                BigInt::from(odd_first_abs[n as usize][k as usize]),
                "|v|({n},{k})"
            );
        }
    }
    println!("acceptance 01 table reproduction: PASS");
}

/// Criterion 2: degree, positivity, and the four boundary identities for
/// all cells up to n = 20.
#[test]
fn acceptance_02_coefficient_structure() {
    let report = triangles::verify_coefficient_structure(20);
    assert!(report.passed(), "{:?}", report.failures);
    assert_eq!(report.failures.len(), 0);
    println!(
        "acceptance 02 coefficient structure n<=20: PASS ({} cells)",
        report.cells_checked
    );
}

/// Criterion 3: recurrence, closed form, and ordinary generating function
/// agree on every cell up to n = 12.
#[test]
fn acceptance_03_oracle_triple_agreement() {
    let closed = triangles::verify_explicit_formula(12);
    assert!(closed.passed(), "{:?}", closed.failures);
    let ogf = series::check_ordinary_gf(12, 12);
    assert!(ogf.passed(), "{:?}", ogf.mismatches);
    println!("acceptance 03 oracle triple agreement n<=12: PASS");
}

/// Criterion 4: both defining relations hold as bivariate identities up to
/// n = 10, and the base expansion holds for n, m <= 6.
#[test]
fn acceptance_04_defining_relations() {
    let rel = triangles::verify_defining_relations(10);
    assert!(rel.passed(), "{:?}", rel.failures);
    let base = series::check_base_expansion(6, 6);
    assert!(base.passed(), "{:?}", base.mismatches);
    println!("acceptance 04 defining relations n<=10, base expansion n,m<=6: PASS");
}

fn a_coeff_tables(nmax: u32) -> Vec<Vec<Vec<BigInt>>> {
    let js2 = triangles::build_js_second(nmax);
    (1..=nmax)
        .map(|m| {
            // only row m of each size is used by the sweeps below
            (1..=m).map(|k| coeff_values(&js2, CoeffKind::A, m, k)).collect()
        })
        .collect()
}

fn to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Criterion 5: all three second-kind models count the monomial
/// coefficients exactly (signed partitions to n = 9, pairs and triples to
/// n = 7), with the n = 7 sweep inside the runtime budget.
#[test]
fn acceptance_05_second_kind_model_counts() {
    let started = Instant::now();
    for m in 1..=7u32 {
        let expected = a_coeff_tables(m);
        let pairs = models::quasiperm_pair_counts(m, &EnumBounds::default()).unwrap();
        let triples = models::partition_triple_counts(m, &EnumBounds::default()).unwrap();
        for k in 1..=m {
            assert_eq!(
                to_big(&pairs[k as usize - 1]),
                expected[m as usize - 1][k as usize - 1],
                "pairs ({m},{k})"
            );
            assert_eq!(
                to_big(&triples[k as usize - 1]),
                expected[m as usize - 1][k as usize - 1],
                "triples ({m},{k})"
            );
        }
    }
    let sweep_time = started.elapsed();
    assert!(
        sweep_time.as_secs() < 60,
        "n = 7 sweep took {sweep_time:?}, budget is 60 s"
    );

    for m in 1..=9u32 {
        let expected = a_coeff_tables(m);
        let hists = models::signed_partition_histograms(m, &EnumBounds::default()).unwrap();
        for k in 1..=m {
            assert_eq!(
                to_big(&hists[k as usize - 1]),
                expected[m as usize - 1][k as usize - 1],
                "signed ({m},{k})"
            );
        }
    }
    println!(
        "acceptance 05 second-kind model counts (pairs/triples n<=7 in {:.1?}, signed n<=9): PASS",
        sweep_time
    );
}

/// Criterion 6: first-kind pair counts match the b coefficients for
/// n <= 6, row sums match |ls|, and the top-statistic fiber over every tau
/// has size exactly one.
#[test]
fn acceptance_06_first_kind_model_counts() {
    let bounds = EnumBounds::default();
    for m in 1..=6u32 {
        let js1 = triangles::build_js_first(m);
        for k in 1..=m {
            let expected = coeff_values(&js1, CoeffKind::B, m, k);
            let got = models::first_kind_histogram(m, k, &bounds).unwrap();
            assert_eq!(to_big(&got), expected, "b ({m},{k})");
            let total: u64 = got.iter().sum();
            let ls = triangles::legendre_stirling(&js1, m, k).unwrap().abs();
            assert_eq!(BigInt::from(total), ls, "|ls|({m},{k})");
            let fibers = models::top_statistic_fibers(m, k, &bounds).unwrap();
            assert!(fibers.iter().all(|&f| f == 1), "fibers ({m},{k}): {fibers:?}");
        }
    }
    println!("acceptance 06 first-kind model counts n<=6: PASS");
}

/// Criterion 7: the zero-block model counts the shifted-basis coefficients
/// for n <= 7; the basis-change identities hold to n = 20; and the sign
/// structure of the shifted coefficients is exactly characterized (strictly
/// positive for k >= 2, unit vector in the k = 1 column, hence
/// `JS(n,1)(-1) = 0` for n >= 2 and positive everywhere else).
#[test]
fn acceptance_07_zero_block_model_and_basis_change() {
    let bounds = EnumBounds::default();
    for m in 1..=7u32 {
        let js2 = triangles::build_js_second(m);
        for k in 1..=m {
            let expected = coeff_values(&js2, CoeffKind::D, m, k);
            let got = models::count_d_model(m, k, &bounds).unwrap();
            assert_eq!(to_big(&got), expected, "d ({m},{k})");
        }
    }
    let report = triangles::verify_basis_change(20);
    assert!(report.passed(), "{:?}", report.failures);

    let js2 = triangles::build_js_second(20);
    for n in 1..=20u32 {
        for k in 1..=n {
            let at_minus_one = js2.at(n, k).eval_int(&BigInt::from(-1));
            if k == 1 && n >= 2 {
                assert_eq!(at_minus_one, BigInt::from(0), "JS({n},1)(-1)");
            } else {
                assert!(at_minus_one.is_positive(), "JS({n},{k})(-1)");
            }
        }
    }
    println!("acceptance 07 zero-block model n<=7, basis identities n<=20: PASS");
}

/// Criterion 8: the signed/triple correspondence is an exhaustive
/// involution pair up to n = 6, phi round-trips to n = 7, the composed map
/// lands bijectively on the pair family up to n = 6, and the published
/// worked example is reproduced along the whole chain.
#[test]
fn acceptance_08_bijections() {
    for m in 1..=7u32 {
        let r = bijections::phi_round_trip_sweep(m);
        assert!(r.passed(), "phi sweep at {m}: {r:?}");
    }
    for m in 1..=6u32 {
        let r = bijections::signed_triple_sweep(m);
        assert!(r.passed(), "signed/triple sweep at {m}");
        let c = bijections::composed_map_sweep(m);
        assert!(c.passed(), "composed sweep at {m}");
    }

    let signed = models::SignedPartition::new(
        10,
        vec![-4, 6, 7, -8, -10],
        vec![
            vec![1, -1, 3, 4, -5, -7],
            vec![2, -2, -3, 5, -6, 8],
            vec![9, -9, 10],
        ],
    )
    .unwrap();
    let triple = bijections::signed_to_triple(&signed);
    assert_eq!(
        triple.p1,
        vec![
            vec![1, 3, 7],
            vec![2, 5, 6],
            vec![4],
            vec![8],
            vec![9],
            vec![10]
        ]
    );
    assert_eq!(
        triple.p2,
        vec![
            vec![1, 5, 7],
            vec![2, 3, 6],
            vec![4],
            vec![8],
            vec![9],
            vec![10]
        ]
    );
    assert_eq!(
        triple.p3,
        vec![
            vec![1, 4],
            vec![2, 8],
            vec![3],
            vec![5],
            vec![6],
            vec![7],
            vec![9, 10]
        ]
    );
    assert_eq!(bijections::triple_to_signed(&triple).unwrap(), signed);
    let (q1, q2) = bijections::triple_to_quasipair(&triple).unwrap();
    assert_eq!(
        q1.cells(),
        &[(1, 3), (2, 5), (3, 7), (4, 1), (5, 6), (8, 2), (10, 9)]
    );
    assert_eq!(
        q2.cells(),
        &[(1, 5), (2, 3), (3, 6), (4, 1), (5, 7), (8, 2), (10, 9)]
    );
    println!("acceptance 08 bijections (round trips, composed map, worked example): PASS");
}

/// Criterion 9: odd-block partition counts match V to n = 6, Riordan
/// complexes match |v| to n = 4 with exactly ten complexes at (2,1), both
/// exponential generating functions match to n = 8, and the odd product
/// identity holds to n = 10.
#[test]
fn acceptance_09_odd_central_models_and_series() {
    let bounds = EnumBounds::default();
    let v2 = triangles::build_central_odd(NumberKind::Second, 6);
    for m in 0..=6u32 {
        for k in 0..=m {
            let count = models::count_odd_partitions(m, k, &bounds).unwrap();
            assert_eq!(BigInt::from(count), *v2.at(m, k), "V ({m},{k})");
        }
    }
    let v1 = triangles::build_central_odd(NumberKind::First, 4);
    for m in 0..=4u32 {
        for k in 0..=m {
            let count = models::count_riordan_complexes(m, k, &bounds).unwrap();
            assert_eq!(BigInt::from(count), v1.at(m, k).abs(), "|v| ({m},{k})");
        }
    }
    assert_eq!(
        models::enum_riordan_complexes(2, 1, &bounds).unwrap().len(),
        10
    );

    let started = Instant::now();
    let egf_v = series::check_odd_block_egf(8, 8);
    assert!(egf_v.passed(), "{:?}", egf_v.mismatches);
    let egf_u = series::check_riordan_egf(8, 8);
    assert!(egf_u.passed(), "{:?}", egf_u.mismatches);
    for m in 0..=10u32 {
        let r = series::check_odd_product(m);
        assert!(r.passed(), "{:?}", r.mismatches);
    }
    println!(
        "acceptance 09 odd central models and series (order-17 build in {:.1?}): PASS",
        started.elapsed()
    );
}

/// Criterion 10: the verification front end exits 0 and produces
/// byte-identical reports at parallelism 1 and 8.
#[test]
fn acceptance_10_determinism() {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_jacobi-stirling"))
            .args(["verify", "--scope", "all", "--nmax", "6", "--jobs", jobs])
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "verify failed: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        out.stdout
    };
    let single = run("1");
    let parallel = run("8");
    assert_eq!(single, parallel, "reports differ between jobs 1 and 8");
    println!("acceptance 10 determinism across parallelism: PASS");
}
