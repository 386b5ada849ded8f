//! Verification of the generating-function identities through truncated
//! exact-rational series: the two hyperbolic exponential generating
//! functions for the odd central factorial triangles, the odd product
//! identity, the ordinary generating function of the second-kind triangle,
//! and the power expansion underlying the closed form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{factorial, odd_double_factorial, series_compose, BiSeries, IntPoly};
use crate::triangles::{build_central_odd, build_js_second, NumberKind};

/// Outcome of one identity check: the orders actually expanded and every
/// mismatching coefficient.
#[derive(Clone, Debug)]
pub struct GfReport {
    pub identity: String,
    pub order_t: usize,
    pub order_x: usize,
    pub mismatches: Vec<String>,
}

impl GfReport {
    fn new(identity: impl Into<String>, order_t: usize, order_x: usize) -> Self {
        GfReport {
            identity: identity.into(),
            order_t,
            order_x,
            mismatches: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.mismatches.push(msg());
        }
    }
}

/// Coefficients of `sinh` as a univariate series (entry `r` for the `r`-th
/// power of the argument).
fn sinh_coeffs(order: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|r| {
            if r % 2 == 1 {
                BigRational::new(BigInt::one(), factorial(r))
            } else {
                BigRational::zero()
            }
        })
        .collect()
}

fn exp_coeffs(order: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|r| BigRational::new(BigInt::one(), factorial(r)))
        .collect()
}

/// `arcsin` expanded in `x`: the coefficient of `x^(2m+1)` is
/// `((2m-1)!!)^2 / (2m+1)!`, generated from the closed form.
fn arcsin_coeffs(order: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|m| {
            if m % 2 == 1 {
                let dfac = odd_double_factorial(m / 2);
                BigRational::new(&dfac * &dfac, factorial(m))
            } else {
                BigRational::zero()
            }
        })
        .collect()
}

/// Compares an expanded series against an odd-indexed triangle: the
/// coefficient of `t^(2k+1) x^(2n+1)` must be `T(n,k)/(2n+1)!` and every
/// coefficient with an even exponent must vanish.
fn check_against_odd_triangle(
    report: &mut GfReport,
    series: &BiSeries,
    triangle: impl Fn(u32, u32) -> BigInt,
) {
    for j in 0..=series.order_t() {
        for m in 0..=series.order_x() {
            let c = series.coeff(j, m);
            if j % 2 == 0 || m % 2 == 0 {
                report.check(c.is_zero(), || {
                    format!("coefficient of t^{j} x^{m} should vanish, got {c}")
                });
                continue;
            }
            let (k, n) = ((j as u32 - 1) / 2, (m as u32 - 1) / 2);
            let expected = BigRational::new(triangle(n, k), factorial(m));
            report.check(*c == expected, || {
                format!("coefficient of t^{j} x^{m} is {c}, expected {expected}")
            });
        }
    }
}

/// Expands `sinh(t sinh x)` and matches the second-kind odd central
/// factorial triangle.
pub fn check_odd_block_egf(nmax: u32, kmax: u32) -> GfReport {
    let (ot, ox) = ((2 * kmax + 1) as usize, (2 * nmax + 1) as usize);
    let mut report = GfReport::new("sinh(t sinh x) vs V", ot, ox);
    let v = build_central_odd(NumberKind::Second, nmax.max(kmax));
    let inner = BiSeries::t_times_x_series(&sinh_coeffs(ox), ot, ox);
    let series = series_compose(&sinh_coeffs(ox), &inner).expect("inner vanishes at x = 0");
    check_against_odd_triangle(&mut report, &series, |n, k| {
        if k <= n {
            v.at(n, k).clone()
        } else {
            BigInt::zero()
        }
    });
    report
}

/// Expands `sinh(t arcsin x)` and matches the first-kind odd central
/// factorial triangle in absolute value; cross-checks the companion `exp`
/// construction, whose even-power layers must vanish on odd `x` exponents
/// and whose odd layers must reproduce the same numbers.
pub fn check_riordan_egf(nmax: u32, kmax: u32) -> GfReport {
    let (ot, ox) = ((2 * kmax + 1) as usize, (2 * nmax + 1) as usize);
    let mut report = GfReport::new("sinh(t arcsin x) vs |v|", ot, ox);
    let v = build_central_odd(NumberKind::First, nmax.max(kmax));
    let inner = BiSeries::t_times_x_series(&arcsin_coeffs(ox), ot, ox);
    let series = series_compose(&sinh_coeffs(ox), &inner).expect("inner vanishes at x = 0");
    let abs_v = |n: u32, k: u32| {
        if k <= n {
            v.at(n, k).abs()
        } else {
            BigInt::zero()
        }
    };
    check_against_odd_triangle(&mut report, &series, abs_v);

    let exp_series = series_compose(&exp_coeffs(ot), &inner).expect("inner vanishes at x = 0");
    for j in 0..=ot {
        for m in (1..=ox).step_by(2) {
            let c = exp_series.coeff(j, m);
            if j % 2 == 0 {
                report.check(c.is_zero(), || {
                    format!("exp layer t^{j} x^{m} should vanish, got {c}")
                });
            } else {
                report.check(c == series.coeff(j, m), || {
                    format!("exp and sinh layers differ at t^{j} x^{m}")
                });
            }
        }
    }
    report
}

/// Expands `t (t^2+1)(t^2+3^2)...(t^2+(2n-1)^2)` and matches row `n` of the
/// first-kind odd central factorial triangle in absolute value.
pub fn check_odd_product(n: u32) -> GfReport {
    let mut report = GfReport::new(format!("odd product identity, row {n}"), 2 * n as usize + 1, 0);
    let v = build_central_odd(NumberKind::First, n);
    let mut product = IntPoly::one();
    for j in 1..=n {
        let odd = BigInt::from(2 * j - 1);
        product = &product * &IntPoly::from_coeffs(vec![&odd * &odd, BigInt::zero(), BigInt::one()]);
    }
    // multiply by t
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend_from_slice(product.coeffs());
    let poly = IntPoly::from_coeffs(coeffs);
    for e in 0..=(2 * n as usize + 1) {
        let c = poly.coeff(e);
        if e % 2 == 0 {
            report.check(c.is_zero(), || format!("even coefficient t^{e} is {c}"));
        } else {
            let k = (e as u32 - 1) / 2;
            let expected = v.at(n, k).abs();
            report.check(c == expected, || {
                format!("coefficient of t^{e} is {c}, expected {expected}")
            });
        }
    }
    report
}

/// Expands `x^k / prod_{j=1}^k (1 - j(z+j) x)` as a series in `x` with
/// integer-polynomial coefficients and matches the second-kind triangle:
/// the coefficient of `x^n` is the `(n, k)` cell.
pub fn check_ordinary_gf(kmax: u32, nmax: u32) -> GfReport {
    let mut report = GfReport::new("ordinary generating function vs JS", kmax as usize, nmax as usize);
    let js2 = build_js_second(nmax);
    for k in 0..=kmax {
        // geometric build: g holds the expansion of prod 1/(1 - c_j x)
        let len = (nmax as usize + 1).saturating_sub(k as usize);
        if len == 0 {
            continue;
        }
        let mut g = vec![IntPoly::zero(); len];
        g[0] = IntPoly::one();
        for j in 1..=k {
            let c = IntPoly::from_i64_coeffs(&[(j as i64) * (j as i64), j as i64]);
            // in place: the updated g[m-1] already includes the factor
            for m in 1..len {
                let carry = &g[m - 1] * &c;
                g[m] = &g[m] + &carry;
            }
        }
        for n in k..=nmax {
            let got = &g[(n - k) as usize];
            report.check(got == js2.at(n, k), || {
                format!("x^{n} coefficient of the k={k} series differs")
            });
        }
    }
    report
}

/// Checks `(m(m+z))^n = sum_j JS_n^j(z) (m-j+1)_j (z+m)_j` as a polynomial
/// identity in `z` for each integer `m`.
pub fn check_base_expansion(nmax: u32, mmax: u32) -> GfReport {
    let mut report = GfReport::new("power expansion in the falling basis", nmax as usize, mmax as usize);
    let js2 = build_js_second(nmax);
    for n in 0..=nmax {
        for m in 0..=mmax {
            let lhs = IntPoly::from_i64_coeffs(&[(m as i64) * (m as i64), m as i64]).pow(n as usize);
            let mut rhs = IntPoly::zero();
            for j in 0..=n {
                // (m-j+1)_j: integer rising factorial, zero when it crosses 0
                let mut falling = BigInt::one();
                for l in 0..j {
                    falling *= BigInt::from(m as i64 - j as i64 + 1 + l as i64);
                }
                if falling.is_zero() {
                    continue;
                }
                let mut poch = IntPoly::one();
                for l in 0..j {
                    poch = &poch * &IntPoly::from_i64_coeffs(&[(m + l) as i64, 1]);
                }
                let term = &(js2.at(n, j) * &poch).scale(&falling);
                rhs = &rhs + term;
            }
            report.check(lhs == rhs, || format!("identity fails at n={n}, m={m}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_block_egf_small() {
        let r = check_odd_block_egf(3, 3);
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn riordan_egf_small() {
        let r = check_riordan_egf(3, 3);
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn spot_coefficients() {
        // V(2,1) = 10 at t^3 x^5, |v|(2,0) = 9 at t^1 x^5
        let inner = BiSeries::t_times_x_series(&sinh_coeffs(5), 3, 5);
        let s = series_compose(&sinh_coeffs(5), &inner).unwrap();
        assert_eq!(
            *s.coeff(3, 5),
            BigRational::new(BigInt::from(10), factorial(5))
        );
        let inner = BiSeries::t_times_x_series(&arcsin_coeffs(5), 3, 5);
        let s = series_compose(&sinh_coeffs(5), &inner).unwrap();
        assert_eq!(
            *s.coeff(1, 5),
            BigRational::new(BigInt::from(9), factorial(5))
        );
        assert_eq!(
            *s.coeff(1, 1),
            BigRational::new(BigInt::one(), BigInt::one())
        );
    }

    #[test]
    fn odd_product_rows() {
        // row 2: t^5 + 10t^3 + 9t
        let r = check_odd_product(2);
        assert!(r.passed(), "{:?}", r.mismatches);
        let r = check_odd_product(0);
        assert!(r.passed());
        let r = check_odd_product(4);
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn ordinary_gf_small() {
        let r = check_ordinary_gf(4, 8);
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn base_expansion_small() {
        let r = check_base_expansion(4, 4);
        assert!(r.passed(), "{:?}", r.mismatches);
    }
}
