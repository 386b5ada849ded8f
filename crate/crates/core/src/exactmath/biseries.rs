use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Truncated bivariate formal power series in `(t, x)` with exact rational
/// coefficients. Entry `(j, m)` is the coefficient of `t^j x^m`; every entry
/// with `j <= order_t` and `m <= order_x` is defined and exact, terms beyond
/// the orders are absent.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    order_t: usize,
    order_x: usize,
    // coeffs[j][m]
    coeffs: Vec<Vec<BigRational>>,
}

impl BiSeries {
    pub fn zero(order_t: usize, order_x: usize) -> Self {
        BiSeries {
            order_t,
            order_x,
            coeffs: vec![vec![BigRational::zero(); order_x + 1]; order_t + 1],
        }
    }

    pub fn one(order_t: usize, order_x: usize) -> Self {
        let mut s = BiSeries::zero(order_t, order_x);
        s.coeffs[0][0] = BigRational::from_integer(1.into());
        s
    }

    /// `t * sum_m xc[m] x^m`: the usual shape of an inner series built from a
    /// univariate expansion in `x`.
    pub fn t_times_x_series(xc: &[BigRational], order_t: usize, order_x: usize) -> Self {
        let mut s = BiSeries::zero(order_t, order_x);
        if order_t >= 1 {
            for (m, c) in xc.iter().enumerate().take(order_x + 1) {
                s.coeffs[1][m] = c.clone();
            }
        }
        s
    }

    pub fn order_t(&self) -> usize {
        self.order_t
    }

    pub fn order_x(&self) -> usize {
        self.order_x
    }

    pub fn coeff(&self, j: usize, m: usize) -> &BigRational {
        &self.coeffs[j][m]
    }

    pub fn set_coeff(&mut self, j: usize, m: usize, v: BigRational) {
        self.coeffs[j][m] = v;
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        assert_eq!((self.order_t, self.order_x), (rhs.order_t, rhs.order_x));
        let mut out = self.clone();
        for j in 0..=self.order_t {
            for m in 0..=self.order_x {
                out.coeffs[j][m] = &out.coeffs[j][m] + &rhs.coeffs[j][m];
            }
        }
        out
    }

    /// Truncated product: coefficients below the orders are exact.
    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        assert_eq!((self.order_t, self.order_x), (rhs.order_t, rhs.order_x));
        let mut out = BiSeries::zero(self.order_t, self.order_x);
        for j1 in 0..=self.order_t {
            for m1 in 0..=self.order_x {
                let a = &self.coeffs[j1][m1];
                if a.is_zero() {
                    continue;
                }
                for j2 in 0..=(self.order_t - j1) {
                    for m2 in 0..=(self.order_x - m1) {
                        let b = &rhs.coeffs[j2][m2];
                        if b.is_zero() {
                            continue;
                        }
                        let cell = &mut out.coeffs[j1 + j2][m1 + m2];
                        *cell = &*cell + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> BiSeries {
        let mut out = self.clone();
        for row in &mut out.coeffs {
            for v in row {
                *v = &*v * c;
            }
        }
        out
    }

    /// True when the series has no nonzero coefficient of the form `(j, 0)`,
    /// i.e. it vanishes at `x = 0`.
    pub fn has_zero_x_constant_term(&self) -> bool {
        self.coeffs.iter().all(|row| row[0].is_zero())
    }
}

impl std::fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BiSeries(order_t={}, order_x={})", self.order_t, self.order_x)?;
        for (j, row) in self.coeffs.iter().enumerate() {
            for (m, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    writeln!(f, "  t^{j} x^{m}: {c}")?;
                }
            }
        }
        Ok(())
    }
}

/// Composes a univariate series (given by its coefficient list: `outer[r]` is
/// the coefficient of the `r`-th power of its argument) with a bivariate
/// inner series, truncating at the inner series' orders.
///
/// The inner series must vanish at `x = 0`; then its `r`-th power has
/// `x`-order at least `r`, so powers beyond `order_x` cannot contribute and
/// the truncated result is exact up to the declared orders.
pub fn series_compose(outer: &[BigRational], inner: &BiSeries) -> Result<BiSeries> {
    if !inner.has_zero_x_constant_term() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut out = BiSeries::zero(inner.order_t, inner.order_x);
    let mut power = BiSeries::one(inner.order_t, inner.order_x);
    let rmax = outer.len().saturating_sub(1).min(inner.order_x);
    for c in outer.iter().take(rmax + 1) {
        if !c.is_zero() {
            out = out.add(&power.scale(c));
        }
        power = power.mul(inner);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::factorial;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sinh_xc(order: usize) -> Vec<BigRational> {
        (0..=order)
            .map(|m| {
                if m % 2 == 1 {
                    BigRational::new(1.into(), factorial(m))
                } else {
                    BigRational::zero()
                }
            })
            .collect()
    }

    #[test]
    fn compose_sinh_with_tx() {
        // sinh(t*x): coefficient of t^{2j+1} x^{2j+1} is 1/(2j+1)!.
        let inner = {
            let mut s = BiSeries::zero(7, 7);
            s.set_coeff(1, 1, rat(1, 1));
            s
        };
        let sinh = sinh_xc(7);
        let composed = series_compose(&sinh, &inner).unwrap();
        for j in 0..=7usize {
            for m in 0..=7usize {
                let expected = if j == m && j % 2 == 1 {
                    BigRational::new(1.into(), factorial(j))
                } else {
                    BigRational::zero()
                };
                assert_eq!(*composed.coeff(j, m), expected, "t^{j} x^{m}");
            }
        }
    }

    #[test]
    fn compose_rejects_nonzero_constant_term() {
        let mut inner = BiSeries::zero(3, 3);
        inner.set_coeff(1, 0, rat(1, 1));
        assert_eq!(
            series_compose(&sinh_xc(3), &inner),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn sinh_of_t_sinh_x_low_order() {
        // Oracle: brute-force expansion of sum_{r odd} (t sinh x)^r / r!
        // with handwritten convolution, independent of BiSeries::mul.
        let ot = 5;
        let ox = 5;
        let inner = BiSeries::t_times_x_series(&sinh_xc(ox), ot, ox);
        let composed = series_compose(&sinh_xc(ox), &inner).unwrap();

        let sinh_x: Vec<BigRational> = sinh_xc(ox);
        // brute[r][m]: coefficient of x^m in (sinh x)^r, truncated at ox
        let mut pow = vec![BigRational::zero(); ox + 1];
        pow[0] = rat(1, 1);
        let mut brute: Vec<Vec<BigRational>> = vec![pow.clone()];
        for _ in 1..=ot {
            let prev = brute.last().unwrap();
            let mut next = vec![BigRational::zero(); ox + 1];
            for (a, pa) in prev.iter().enumerate() {
                for (b, pb) in sinh_x.iter().enumerate() {
                    if a + b <= ox {
                        next[a + b] = &next[a + b] + pa * pb;
                    }
                }
            }
            brute.push(next);
        }
        for j in 0..=ot {
            for m in 0..=ox {
                let expected = if j % 2 == 1 {
                    &brute[j][m] * BigRational::new(1.into(), factorial(j))
                } else {
                    BigRational::zero()
                };
                assert_eq!(*composed.coeff(j, m), expected, "t^{j} x^{m}");
            }
        }
        // frozen spot value from the oracle: coefficient of t^1 x^3 is 1/6
        assert_eq!(*composed.coeff(1, 3), rat(1, 6));
    }
}
