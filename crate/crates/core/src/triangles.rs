//! Recurrence engines for every number triangle: the Jacobi-Stirling
//! polynomials of both kinds, the classical Stirling numbers, the central
//! factorial numbers of even indices, and the scaled central factorial
//! numbers of odd indices; plus coefficient extraction in the monomial and
//! `(z+1)` bases, the closed-form evaluation of `JS`, and machine checks of
//! the identities tying all of these together.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmath::IntPoly;
use crate::{Error, Result};

/// Lower-triangular table of polynomials indexed by `(n, k)`, `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTriangle {
    nmax: u32,
    rows: Vec<Vec<IntPoly>>,
}

impl PolyTriangle {
    pub fn nmax(&self) -> u32 {
        self.nmax
    }

    pub fn cell(&self, n: u32, k: u32) -> Result<&IntPoly> {
        if n > self.nmax || k > n {
            return Err(Error::OutOfRange {
                n,
                k,
                nmax: self.nmax,
            });
        }
        Ok(&self.rows[n as usize][k as usize])
    }

    /// Unchecked access for in-range indices.
    pub fn at(&self, n: u32, k: u32) -> &IntPoly {
        &self.rows[n as usize][k as usize]
    }

    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.rows
    }
}

/// Lower-triangular table of integers indexed by `(n, k)`, `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntTriangle {
    nmax: u32,
    rows: Vec<Vec<BigInt>>,
}

impl IntTriangle {
    pub fn nmax(&self) -> u32 {
        self.nmax
    }

    pub fn cell(&self, n: u32, k: u32) -> Result<&BigInt> {
        if n > self.nmax || k > n {
            return Err(Error::OutOfRange {
                n,
                k,
                nmax: self.nmax,
            });
        }
        Ok(&self.rows[n as usize][k as usize])
    }

    pub fn at(&self, n: u32, k: u32) -> &BigInt {
        &self.rows[n as usize][k as usize]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// Second kind vs. first kind, for the triangles that come in pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberKind {
    Second,
    First,
}

/// Every triangle here satisfies `T(n,k) = T(n-1,k-1) + c(n,k) * T(n-1,k)`
/// with `T(0,0) = 1` and zero outside `0 <= k <= n`; only the multiplier
/// differs.
fn build_poly_triangle(nmax: u32, mult: impl Fn(u32, u32) -> IntPoly) -> PolyTriangle {
    let mut rows: Vec<Vec<IntPoly>> = Vec::with_capacity(nmax as usize + 1);
    rows.push(vec![IntPoly::one()]);
    for n in 1..=nmax {
        let prev = &rows[n as usize - 1];
        let mut row = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let diag = if k >= 1 {
                prev.get(k as usize - 1).cloned().unwrap_or_else(IntPoly::zero)
            } else {
                IntPoly::zero()
            };
            let up = prev.get(k as usize).cloned().unwrap_or_else(IntPoly::zero);
            row.push(&diag + &(&mult(n, k) * &up));
        }
        rows.push(row);
    }
    PolyTriangle { nmax, rows }
}

fn build_int_triangle(nmax: u32, mult: impl Fn(u32, u32) -> BigInt) -> IntTriangle {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax as usize + 1);
    rows.push(vec![BigInt::one()]);
    for n in 1..=nmax {
        let prev = &rows[n as usize - 1];
        let mut row = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let diag = if k >= 1 {
                prev.get(k as usize - 1).cloned().unwrap_or_else(BigInt::zero)
            } else {
                BigInt::zero()
            };
            let up = prev.get(k as usize).cloned().unwrap_or_else(BigInt::zero);
            row.push(diag + mult(n, k) * up);
        }
        rows.push(row);
    }
    IntTriangle { nmax, rows }
}

/// Jacobi-Stirling numbers of the second kind: polynomials in `z` built by
/// the recurrence with multiplier `k(k+z)`.
pub fn build_js_second(nmax: u32) -> PolyTriangle {
    build_poly_triangle(nmax, |_, k| {
        let k = i64::from(k);
        IntPoly::from_i64_coeffs(&[k * k, k])
    })
}

/// Jacobi-Stirling numbers of the first kind; multiplier `-(n-1)(n-1+z)`.
pub fn build_js_first(nmax: u32) -> PolyTriangle {
    build_poly_triangle(nmax, |n, _| {
        let m = i64::from(n) - 1;
        IntPoly::from_i64_coeffs(&[-m * m, -m])
    })
}

/// Classical Stirling numbers (the first kind carries alternating signs).
pub fn build_stirling(kind: NumberKind, nmax: u32) -> IntTriangle {
    match kind {
        NumberKind::Second => build_int_triangle(nmax, |_, k| BigInt::from(k)),
        NumberKind::First => {
            build_int_triangle(nmax, |n, _| -BigInt::from(i64::from(n) - 1))
        }
    }
}

/// Central factorial numbers of even indices, `U(n,k) = T(2n,2k)` and
/// `u(n,k) = t(2n,2k)`.
pub fn build_central_even(kind: NumberKind, nmax: u32) -> IntTriangle {
    match kind {
        NumberKind::Second => {
            build_int_triangle(nmax, |_, k| BigInt::from(u64::from(k) * u64::from(k)))
        }
        NumberKind::First => build_int_triangle(nmax, |n, _| {
            let m = i64::from(n) - 1;
            BigInt::from(-m * m)
        }),
    }
}

/// Scaled central factorial numbers of odd indices,
/// `V(n,k) = 4^{n-k} T(2n+1,2k+1)` and `v(n,k) = 4^{n-k} t(2n+1,2k+1)`.
pub fn build_central_odd(kind: NumberKind, nmax: u32) -> IntTriangle {
    match kind {
        NumberKind::Second => build_int_triangle(nmax, |_, k| {
            let m = 2 * i64::from(k) + 1;
            BigInt::from(m * m)
        }),
        NumberKind::First => build_int_triangle(nmax, |n, _| {
            let m = 2 * i64::from(n) - 1;
            BigInt::from(-m * m)
        }),
    }
}

/// Evaluation at `z = 1`: turns a Jacobi-Stirling cell into the
/// corresponding Legendre-Stirling number.
pub fn legendre_stirling(triangle: &PolyTriangle, n: u32, k: u32) -> Result<BigInt> {
    Ok(triangle.cell(n, k)?.eval_int(&BigInt::one()))
}

/// Which coefficient family to extract from a Jacobi-Stirling cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    /// Monomial coefficients of `JS` (extract from the second-kind triangle).
    A,
    /// Monomial coefficients of `(-1)^{n-k} js`  (first-kind triangle).
    B,
    /// Coefficients of `JS` in the `(z+1)` basis (second-kind triangle).
    D,
}

/// Coefficients of one triangle cell, indexed by `i` in `0..=n-k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffView {
    pub kind: CoeffKind,
    pub n: u32,
    pub k: u32,
    pub values: Vec<BigInt>,
}

/// Extracts the `a`, `b`, or `d` coefficient family from a cell of the
/// matching triangle. For `B` the extracted values must all be positive;
/// a nonpositive value signals a triangle bug and is reported as an error.
pub fn coeffs(triangle: &PolyTriangle, kind: CoeffKind, n: u32, k: u32) -> Result<CoeffView> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange {
            n,
            k,
            nmax: triangle.nmax(),
        });
    }
    let cell = triangle.cell(n, k)?;
    let len = (n - k) as usize + 1;
    let pad = |p: &IntPoly| -> Vec<BigInt> { (0..len).map(|i| p.coeff(i)).collect() };
    let values = match kind {
        CoeffKind::A => pad(cell),
        CoeffKind::B => {
            let signed = if (n - k) % 2 == 1 { -cell } else { cell.clone() };
            let values = pad(&signed);
            for (index, v) in values.iter().enumerate() {
                if !v.is_positive() {
                    return Err(Error::SignCheck {
                        n,
                        k,
                        index,
                        value: v.clone(),
                    });
                }
            }
            values
        }
        CoeffKind::D => pad(&cell.rebase_shift(&BigInt::one())),
    };
    Ok(CoeffView { kind, n, k, values })
}

/// Closed-form computation of a single `JS` cell via exact evaluation at
/// integer points followed by rational interpolation.
///
/// The summand sign is `(-1)^{j-r}`: with the printed `(-1)^r` the value at
/// `(n,j) = (2,1)` comes out as `-(z+1)` while the defining recurrence gives
/// `z+1`, and the recurrence is the primary definition.
pub fn explicit_js(n: u32, j: u32) -> Result<IntPoly> {
    assert!(j <= n, "explicit_js requires j <= n");
    let points_needed = (n - j) as usize + 1;
    let mut xs: Vec<BigRational> = Vec::with_capacity(points_needed);
    let mut ys: Vec<BigRational> = Vec::with_capacity(points_needed);
    let mut z = BigInt::one();
    while xs.len() < points_needed {
        match eval_explicit_sum(n, j, &z) {
            Some(v) => {
                xs.push(BigRational::from(z.clone()));
                ys.push(v);
            }
            // a Pochhammer factor vanished at this point: skip and replace
            None => {}
        }
        z += 1;
    }
    let poly = interpolate(&xs, &ys);
    let mut coeffs = Vec::with_capacity(poly.len());
    for (index, c) in poly.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient { index, value: c });
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Rising factorial `(base)_len = base (base+1) ... (base+len-1)`.
fn pochhammer(base: &BigInt, len: u32) -> BigInt {
    let mut acc = BigInt::one();
    for l in 0..len {
        acc *= base + BigInt::from(l);
    }
    acc
}

/// One evaluation of the closed-form sum at integer `z`; `None` when a
/// denominator factor vanishes there.
fn eval_explicit_sum(n: u32, j: u32, z: &BigInt) -> Option<BigRational> {
    let mut total = BigRational::zero();
    for r in 0..=j {
        let mut num = {
            let rz = BigInt::from(r) * (BigInt::from(r) + z);
            rz.pow(n)
        };
        if (j - r) % 2 == 1 {
            num = -num;
        }
        let denom = crate::exactmath::factorial(r as usize)
            * crate::exactmath::factorial((j - r) as usize)
            * pochhammer(&(z + BigInt::from(r)), r)
            * pochhammer(&(z + BigInt::from(2 * r + 1)), j - r);
        if denom.is_zero() {
            return None;
        }
        total += BigRational::new(num, denom);
    }
    Some(total)
}

/// Lagrange interpolation through distinct rational points; returns the
/// coefficient list (lowest degree first) of the unique polynomial of degree
/// `< xs.len()`.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let d = xs.len();
    let mut acc = vec![BigRational::zero(); d];
    for i in 0..d {
        // basis polynomial prod_{t != i} (x - xs[t]) / (xs[i] - xs[t])
        let mut basis = vec![BigRational::one()];
        let mut scale = BigRational::one();
        for (t, xt) in xs.iter().enumerate() {
            if t == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (m, bm) in basis.iter().enumerate() {
                next[m + 1] = &next[m + 1] + bm;
                next[m] = &next[m] - &(bm * xt);
            }
            basis = next;
            scale *= &xs[i] - xt;
        }
        let factor = &ys[i] / scale;
        for (m, bm) in basis.iter().enumerate() {
            acc[m] = &acc[m] + &(bm * &factor);
        }
    }
    acc
}

/// Outcome of one of the verification scans below: the scan never fails
/// outright, mismatches are collected as data.
#[derive(Clone, Debug)]
pub struct TriangleReport {
    pub name: String,
    pub cells_checked: u64,
    pub failures: Vec<String>,
}

impl TriangleReport {
    fn new(name: impl Into<String>) -> Self {
        TriangleReport {
            name: name.into(),
            cells_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cells_checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

/// A polynomial in `x` whose coefficients are integer polynomials in `z`;
/// entry `i` is the coefficient of `x^i`. Enough bivariate machinery for the
/// defining-relation checks.
pub(crate) fn xpoly_mul(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![IntPoly::zero(); a.len() + b.len() - 1];
    for (i, pa) in a.iter().enumerate() {
        if pa.is_zero() {
            continue;
        }
        for (j, pb) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(pa * pb);
        }
    }
    out
}

/// The products `prod_{i=0}^{k-1} (x - i(z+i))` for `k = 0..=nmax`, as
/// polynomials in `x` over integer polynomials in `z`.
pub(crate) fn falling_products(nmax: u32) -> Vec<Vec<IntPoly>> {
    let mut products = Vec::with_capacity(nmax as usize + 1);
    products.push(vec![IntPoly::one()]);
    for k in 1..=nmax {
        let i = i64::from(k) - 1;
        // factor x - i(z+i)
        let factor = vec![
            IntPoly::from_i64_coeffs(&[-i * i, -i]),
            IntPoly::one(),
        ];
        let prev = products.last().unwrap();
        products.push(xpoly_mul(prev, &factor));
    }
    products
}

/// Checks that both defining relations hold identically: expanding
/// `prod_{i=0}^{k-1}(x - i(z+i))` in exact bivariate arithmetic, `x^n` must
/// equal `sum_k JS_n^k(z)` times that product, and conversely the length-`n`
/// product must expand with the first-kind cells as coefficients of `x^k`.
pub fn verify_defining_relations(nmax: u32) -> TriangleReport {
    let mut report = TriangleReport::new(format!("defining relations (n <= {nmax})"));
    let js2 = build_js_second(nmax);
    let js1 = build_js_first(nmax);
    let products = falling_products(nmax);

    for n in 0..=nmax {
        // second kind: x^n = sum_k JS_n^k(z) * P_k(x, z)
        let mut sum: Vec<IntPoly> = vec![IntPoly::zero(); n as usize + 1];
        for k in 0..=n {
            let cell = js2.at(n, k);
            if cell.is_zero() {
                continue;
            }
            for (i, c) in products[k as usize].iter().enumerate() {
                sum[i] = &sum[i] + &(c * cell);
            }
        }
        let mut expected = vec![IntPoly::zero(); n as usize + 1];
        expected[n as usize] = IntPoly::one();
        report.check(sum == expected, || {
            format!("second-kind relation fails at n={n}")
        });

        // first kind: P_n(x, z) = sum_k js_n^k(z) x^k
        let from_triangle: Vec<IntPoly> =
            (0..=n).map(|k| js1.at(n, k).clone()).collect();
        let mut product = products[n as usize].clone();
        product.resize(n as usize + 1, IntPoly::zero());
        report.check(product == from_triangle, || {
            format!("first-kind relation fails at n={n}")
        });
    }
    report
}

/// Degree, positivity, and boundary checks for every cell: each
/// Jacobi-Stirling cell has degree exactly `n-k`, its monomial coefficients
/// (after sign normalization for the first kind) are positive, the leading
/// coefficients are the Stirling numbers and the constant terms the central
/// factorial numbers of even indices.
pub fn verify_coefficient_structure(nmax: u32) -> TriangleReport {
    let mut report = TriangleReport::new(format!("coefficient structure (n <= {nmax})"));
    let js2 = build_js_second(nmax);
    let js1 = build_js_first(nmax);
    let s2 = build_stirling(NumberKind::Second, nmax);
    let s1 = build_stirling(NumberKind::First, nmax);
    let u2 = build_central_even(NumberKind::Second, nmax);
    let u1 = build_central_even(NumberKind::First, nmax);

    for n in 1..=nmax {
        for k in 1..=n {
            let d = (n - k) as usize;
            report.check(js2.at(n, k).degree() == Some(d), || {
                format!("JS({n},{k}) degree != {d}")
            });
            report.check(js1.at(n, k).degree() == Some(d), || {
                format!("js({n},{k}) degree != {d}")
            });
            let a = match coeffs(&js2, CoeffKind::A, n, k) {
                Ok(v) => v.values,
                Err(e) => {
                    report.check(false, || format!("a({n},{k}): {e}"));
                    continue;
                }
            };
            report.check(a.iter().all(|v| v.is_positive()), || {
                format!("a({n},{k}) has a nonpositive coefficient")
            });
            let b = match coeffs(&js1, CoeffKind::B, n, k) {
                Ok(v) => v.values,
                Err(e) => {
                    report.check(false, || format!("b({n},{k}): {e}"));
                    continue;
                }
            };
            report.check(&a[d] == s2.at(n, k), || {
                format!("a({n},{k})^({d}) != S({n},{k})")
            });
            report.check(&a[0] == u2.at(n, k), || {
                format!("a({n},{k})^(0) != U({n},{k})")
            });
            report.check(b[d] == s1.at(n, k).abs(), || {
                format!("b({n},{k})^({d}) != |s({n},{k})|")
            });
            report.check(b[0] == u1.at(n, k).abs(), || {
                format!("b({n},{k})^(0) != |u({n},{k})|")
            });
        }
    }
    report
}

/// Checks the relations tying the `(z+1)`-basis coefficients to the monomial
/// ones: `a^(i) = sum_j C(j,i) d^(j)`, `U = sum_j d^(j)`,
/// `LS = sum_j 2^j d^(j)`, and the sign structure of the `d` family.
///
/// Since the `d` coefficients count signed partitions whose zero-block has no
/// positive entry, they are nonnegative everywhere, strictly positive for
/// `k >= 2`, and in the `k = 1` column zero except for `d^(n-1) = 1` (there
/// is exactly one such partition, with all of `2..=n` negated into the
/// zero-block). In particular `JS(n,1)(-1) = 0` for `n >= 2`.
pub fn verify_basis_change(nmax: u32) -> TriangleReport {
    let mut report = TriangleReport::new(format!("(z+1)-basis identities (n <= {nmax})"));
    let js2 = build_js_second(nmax);
    let u2 = build_central_even(NumberKind::Second, nmax);

    for n in 1..=nmax {
        for k in 1..=n {
            let a = coeffs(&js2, CoeffKind::A, n, k).unwrap().values;
            let d = coeffs(&js2, CoeffKind::D, n, k).unwrap().values;

            if k >= 2 {
                report.check(d.iter().all(|v| v.is_positive()), || {
                    format!("d({n},{k}) has a nonpositive coefficient")
                });
            } else {
                let expected: Vec<BigInt> = (0..d.len())
                    .map(|i| {
                        if i + 1 == d.len() {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect();
                report.check(d == expected, || {
                    format!("d({n},1) is not the unit vector at degree {}", n - 1)
                });
            }

            for (i, ai) in a.iter().enumerate() {
                let sum: BigInt = d
                    .iter()
                    .enumerate()
                    .map(|(j, dj)| binomial(BigInt::from(j), BigInt::from(i)) * dj)
                    .sum();
                report.check(&sum == ai, || {
                    format!("a({n},{k})^({i}) != sum_j C(j,{i}) d^(j)")
                });
            }

            let total: BigInt = d.iter().sum();
            report.check(&total == u2.at(n, k), || {
                format!("sum of d({n},{k}) != U({n},{k})")
            });

            let weighted: BigInt = d
                .iter()
                .enumerate()
                .map(|(j, dj)| (BigInt::one() << j) * dj)
                .sum();
            let ls = legendre_stirling(&js2, n, k).unwrap();
            report.check(weighted == ls, || {
                format!("sum of 2^j d({n},{k})^(j) != LS({n},{k})")
            });

            let at_minus_one = js2.at(n, k).eval_int(&BigInt::from(-1));
            let positive_expected = k >= 2 || n == 1;
            report.check(
                at_minus_one == d[0]
                    && !at_minus_one.is_negative()
                    && (at_minus_one.is_positive() == positive_expected),
                || format!("JS({n},{k})(-1) != d^(0) or has the wrong sign"),
            );
        }
    }
    report
}

/// The closed form and the recurrence must agree cell by cell.
pub fn verify_explicit_formula(nmax: u32) -> TriangleReport {
    let mut report = TriangleReport::new(format!("closed form vs recurrence (n <= {nmax})"));
    let js2 = build_js_second(nmax);
    for n in 0..=nmax {
        for j in 0..=n {
            match explicit_js(n, j) {
                Ok(p) => report.check(&p == js2.at(n, j), || {
                    format!("closed form differs from recurrence at ({n},{j})")
                }),
                Err(e) => report.check(false, || format!("closed form failed at ({n},{j}): {e}")),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn js_second_small_cells() {
        let t = build_js_second(6);
        assert_eq!(t.at(3, 2), &p(&[5, 3]));
        assert_eq!(t.at(4, 2), &p(&[21, 24, 7]));
        assert_eq!(t.at(6, 2), &p(&[341, 738, 604, 222, 31]));
        for n in 0..=6 {
            assert_eq!(t.at(n, n), &IntPoly::one());
        }
        // column k = 1 is (z+1)^{n-1}
        let zp1 = p(&[1, 1]);
        assert_eq!(t.at(5, 1), &zp1.pow(4));
        // zero outside the support
        assert!(t.at(4, 0).is_zero());
    }

    #[test]
    fn js_first_small_cells() {
        let t = build_js_first(5);
        assert_eq!(t.at(1, 1), &IntPoly::one());
        assert_eq!(t.at(3, 2), &p(&[-5, -3]));
        assert_eq!(t.at(4, 2), &p(&[49, 48, 11]));
        assert_eq!(t.at(5, 2), &p(&[-820, -1030, -404, -50]));
    }

    #[test]
    fn stirling_and_central_cells() {
        let s2 = build_stirling(NumberKind::Second, 5);
        assert_eq!(s2.at(4, 2), &BigInt::from(7));
        assert_eq!(s2.at(5, 5), &BigInt::one());
        let s1 = build_stirling(NumberKind::First, 5);
        assert_eq!(s1.at(4, 2).abs(), BigInt::from(11));

        let u2 = build_central_even(NumberKind::Second, 5);
        assert_eq!(u2.at(4, 2), &BigInt::from(21));
        for n in 1..=5 {
            assert_eq!(u2.at(n, 1), &BigInt::one());
        }
        let u1 = build_central_even(NumberKind::First, 5);
        assert_eq!(u1.at(3, 2).abs(), BigInt::from(5));

        let v2 = build_central_odd(NumberKind::Second, 5);
        assert_eq!(v2.at(4, 2), &BigInt::from(966));
        assert_eq!(v2.at(5, 1), &BigInt::from(7381));
        for n in 0..=5 {
            assert_eq!(v2.at(n, n), &BigInt::one());
            assert_eq!(v2.at(n, 0), &BigInt::one());
        }
        let v1 = build_central_odd(NumberKind::First, 5);
        assert_eq!(v1.at(4, 2).abs(), BigInt::from(1974));
        assert_eq!(v1.at(4, 1).abs(), BigInt::from(12916));
        assert_eq!(v1.at(4, 0).abs(), BigInt::from(11025));
    }

    #[test]
    fn legendre_stirling_values() {
        let js2 = build_js_second(4);
        let js1 = build_js_first(4);
        assert_eq!(legendre_stirling(&js2, 3, 2).unwrap(), BigInt::from(8));
        assert_eq!(legendre_stirling(&js1, 3, 2).unwrap(), BigInt::from(-8));
        assert_eq!(legendre_stirling(&js2, 4, 4).unwrap(), BigInt::one());
        assert!(legendre_stirling(&js2, 5, 1).is_err());
    }

    #[test]
    fn coeff_views() {
        let js2 = build_js_second(4);
        let js1 = build_js_first(4);
        let a = coeffs(&js2, CoeffKind::A, 4, 2).unwrap();
        assert_eq!(a.values, vec![21.into(), 24.into(), 7.into()]);
        let b = coeffs(&js1, CoeffKind::B, 3, 2).unwrap();
        assert_eq!(b.values, vec![5.into(), 3.into()]);
        let d = coeffs(&js2, CoeffKind::D, 4, 3).unwrap();
        assert_eq!(d.values, vec![8.into(), 6.into()]);
        // passing the wrong triangle for B trips the sign check
        assert!(matches!(
            coeffs(&js2, CoeffKind::B, 3, 2),
            Err(Error::SignCheck { .. })
        ));
    }

    #[test]
    fn explicit_formula_cells() {
        assert_eq!(explicit_js(2, 2).unwrap(), IntPoly::one());
        assert_eq!(explicit_js(2, 1).unwrap(), p(&[1, 1]));
        for n in 1..=6 {
            assert!(explicit_js(n, 0).unwrap().is_zero());
        }
        assert_eq!(explicit_js(4, 2).unwrap(), p(&[21, 24, 7]));
    }

    #[test]
    fn verification_scans_pass() {
        assert!(verify_defining_relations(6).passed());
        assert!(verify_coefficient_structure(8).passed());
        assert!(verify_basis_change(8).passed());
        assert!(verify_explicit_formula(8).passed());
    }

    #[test]
    fn vacuous_scan_passes() {
        let r = verify_defining_relations(0);
        assert!(r.passed());
    }
}
