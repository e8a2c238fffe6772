//! Generators for the coefficient families of the Gamma-function
//! asymptotic expansions.
//!
//! Everything here is exact. The logarithmic series is built from Bernoulli
//! numbers and every other family is derived from it by series algebra, so
//! the classical printed values act as fixtures for the generators rather
//! than as inputs.
//!
//! Two families need more than plain series algebra:
//!
//! - [`nemes_shifted_coeffs`] re-expands the square-root-shifted base
//!   series around `x + 1/4`, giving the coefficients `G_k` of
//!   `sqrt(2*pi*(x+1/6)) * sum G_k/(x+1/4)^k`.
//! - [`nemes_even_pairs`] solves order by order for the pairs
//!   `(g_m, v_m)` of the even-power expansion
//!   `sqrt(2*pi*(x+1/6)) * sum g_m/(x+v_m)^(2m)`: matching at even order
//!   `2m` determines `g_m` (the diagonal kernel is `C(-2m, 0) = 1`),
//!   matching at odd order `2m+1` determines `v_m` (kernel
//!   `C(-2m, 1) = -2m`). This is the unique triangular reading that makes
//!   the matching solvable order by order.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{bernoulli_table, binomial_general, rat, rat_int, rational_pow, Rational};
use crate::series::{FormalSeries, ShiftedSeries};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("pair recurrence pivot g_{index} is zero; v_{index} is undefined")]
    ZeroPivot { index: usize },
    #[error("v_0 is undefined: the zeroth term carries the zero power")]
    UndefinedShift,
}

/// Logarithmic series `sum_k B_2k/(2k(2k-1)) x^(1-2k)`: the coefficient at
/// index `2k-1` is `B_2k/(2k(2k-1))`, all even indices (including the
/// constant term) are zero.
pub fn stirling_log_coeffs(order: usize) -> FormalSeries {
    let bern = bernoulli_table(order + 1);
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut k = 1usize;
    while 2 * k - 1 <= order {
        let i = 2 * k;
        coeffs[i - 1] = &bern[i] / rat_int((i * (i - 1)) as i64);
        k += 1;
    }
    FormalSeries::new(coeffs)
}

/// Product-form series `sum a_n x^(-n)`, the exponential of the
/// logarithmic series: `a_0 = 1, a_1 = 1/12, a_2 = 1/288, ...`.
pub fn laplace_coeffs(order: usize) -> FormalSeries {
    stirling_log_coeffs(order)
        .exp()
        .expect("log series has zero constant term")
}

/// Sixth-root radicand `1 + 1/(2x) + 1/(8x^2) + 1/(240x^3) + ...`, the
/// sixth power of the product-form series.
pub fn ramanujan_coeffs(order: usize) -> FormalSeries {
    laplace_coeffs(order)
        .pow(&rat_int(6))
        .expect("product series has unit constant term")
}

/// Cubic-head radicand `8x^3 + 4x^2 + x + 1/30 - 11/(240x) + ...`:
/// eight times the sixth-root radicand, carried at exponent offset 3.
pub fn karatsuba_coeffs(order: usize) -> FormalSeries {
    let scaled = ramanujan_coeffs(order).scalar_mul(&rat_int(8));
    FormalSeries::with_offset(scaled.coeffs().to_vec(), 3)
}

/// Square-root radicand `1 + 1/(6x) + 1/(72x^2) - 31/(6480x^3) - ...`,
/// the square of the product-form series.
pub fn mortici_coeffs(order: usize) -> FormalSeries {
    laplace_coeffs(order)
        .pow(&rat_int(2))
        .expect("product series has unit constant term")
}

/// Base series `sum c_n x^(-n)` obtained by pulling the shifted square root
/// `sqrt(x + 1/6)` out of the product-form series:
/// `c_n = sum_{j=0}^{n} C(-1/2, j) a_{n-j} / 6^j`.
///
/// `c_0 = 1` and `c_1 = 0` are forced; the cancellation at order one is
/// exactly what makes the `1/6` shift special.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperBaseSeries {
    series: FormalSeries,
}

impl GosperBaseSeries {
    fn new(series: FormalSeries) -> Self {
        assert!(series.coeff(0).is_one(), "c_0 must be 1");
        assert!(
            series.order() < 1 || series.coeff(1).is_zero(),
            "c_1 must vanish"
        );
        GosperBaseSeries { series }
    }

    pub fn series(&self) -> &FormalSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        self.series.coeff(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.series.coeffs()
    }
}

/// Computes the base series by the direct double sum. The equivalent
/// series-algebra route `laplace * (1 + 1/(6x))^(-1/2)` is kept as an
/// independent oracle in the tests.
pub fn gosper_base_coeffs(order: usize) -> GosperBaseSeries {
    let a = laplace_coeffs(order);
    let minus_half = rat(-1, 2);
    let six = rat_int(6);
    let mut c: Vec<Rational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = Rational::zero();
        for j in 0..=n {
            let term = binomial_general(&minus_half, j as u32) * a.coeff(n - j)
                / rational_pow(&six, j as i32);
            acc += term;
        }
        c.push(acc);
    }
    GosperBaseSeries::new(FormalSeries::new(c))
}

/// Coefficients `G_0..G_K` of the shifted expansion
/// `sqrt(2*pi*(x+1/6)) * sum G_k/(x+1/4)^k`. The shift of the expansion
/// variable is fixed at `1/4`; the square-root shift stays `1/6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedCoeffs {
    coeffs: Vec<Rational>,
}

impl ShiftedCoeffs {
    fn new(coeffs: Vec<Rational>) -> Self {
        assert!(coeffs[0].is_one(), "G_0 must be 1");
        assert!(coeffs.len() < 2 || coeffs[1].is_zero(), "G_1 must vanish");
        ShiftedCoeffs { coeffs }
    }

    /// Shift of the expansion variable.
    pub fn shift() -> Rational {
        rat(1, 4)
    }

    /// Shift under the square-root prefactor.
    pub fn base_shift() -> Rational {
        rat(1, 6)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// View as a shifted series, e.g. to expand back into inverse powers.
    pub fn to_shifted_series(&self) -> ShiftedSeries {
        ShiftedSeries::new(Self::shift(), self.coeffs.clone())
    }
}

/// `G_k = c_k - sum_{j=0}^{k-1} C(-j, k-j) G_j / 4^(k-j)`, i.e. the base
/// series re-expanded around `x + 1/4`. Shares the shift-kernel code path
/// with [`FormalSeries::reexpand`] on purpose: the recurrence above is the
/// triangular inversion of the same forward kernel.
pub fn nemes_shifted_coeffs(order: usize) -> ShiftedCoeffs {
    let base = gosper_base_coeffs(order);
    let shifted = base
        .series()
        .reexpand(&ShiftedCoeffs::shift())
        .expect("base series has offset 0");
    ShiftedCoeffs::new(shifted.coeffs().to_vec())
}

/// The paired sequences `g_0..g_M` and `v_1..v_M` of the even-power
/// expansion. `v_0` is undefined (its term carries the zero power), so it
/// is not stored and asking for it is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenPairSequence {
    g: Vec<Rational>,
    v: Vec<Rational>,
}

impl EvenPairSequence {
    /// Largest index `M` for which both `g_M` and (for `M >= 1`) `v_M`
    /// are present.
    pub fn max_index(&self) -> usize {
        self.g.len() - 1
    }

    pub fn g(&self, m: usize) -> &Rational {
        &self.g[m]
    }

    pub fn v(&self, m: usize) -> Result<&Rational, PairError> {
        if m == 0 {
            return Err(PairError::UndefinedShift);
        }
        Ok(&self.v[m - 1])
    }

    /// `g_0..g_M`.
    pub fn g_values(&self) -> &[Rational] {
        &self.g
    }

    /// `v_1..v_M` (index 0 of the slice is `v_1`).
    pub fn v_values(&self) -> &[Rational] {
        &self.v
    }
}

/// Solves the matching condition
/// `c_n = sum_{j=0}^{floor(n/2)} C(-2j, n-2j) g_j v_j^(n-2j)` order by
/// order: even `n = 2m` yields `g_m`, odd `n = 2m+1` yields `v_m`.
///
/// Fails with [`PairError::ZeroPivot`] if some `g_m` vanishes, since the
/// odd-order step divides by `2m * g_m`. No zero pivot occurs for any
/// index reachable in practice; the guard is for well-defined behavior
/// beyond the verified range.
pub fn nemes_even_pairs(max_index: usize) -> Result<EvenPairSequence, PairError> {
    let base = gosper_base_coeffs(2 * max_index + 1);
    let c = base.coeffs();
    let mut g: Vec<Rational> = vec![Rational::one()];
    let mut v: Vec<Rational> = Vec::with_capacity(max_index);
    for m in 1..=max_index {
        // even order n = 2m: c_{2m} = g_m + sum_{j=1}^{m-1} (...)
        let g_m = &c[2 * m] - pair_partial_sum(&g, &v, 2 * m, m);
        if g_m.is_zero() {
            return Err(PairError::ZeroPivot { index: m });
        }
        // odd order n = 2m+1: c_{2m+1} = -2m g_m v_m + sum_{j=1}^{m-1} (...)
        let odd_rest = &c[2 * m + 1] - pair_partial_sum(&g, &v, 2 * m + 1, m);
        let v_m = -odd_rest / (rat_int(2 * m as i64) * &g_m);
        g.push(g_m);
        v.push(v_m);
    }
    Ok(EvenPairSequence { g, v })
}

/// `sum_{j=1}^{limit-1} C(-2j, n-2j) g_j v_j^(n-2j)`.
fn pair_partial_sum(g: &[Rational], v: &[Rational], n: usize, limit: usize) -> Rational {
    let mut acc = Rational::zero();
    for j in 1..limit {
        let kernel = binomial_general(&rat_int(-2 * j as i64), (n - 2 * j) as u32);
        if kernel.is_zero() {
            continue;
        }
        acc += kernel * &g[j] * rational_pow(&v[j - 1], (n - 2 * j) as i32);
    }
    acc
}

/// Series `T` with `C(2n, n) ~ 4^n/sqrt(pi*n) * T(n)`:
/// `T = L(2n) / L(n)^2` for the product-form series `L`.
pub fn central_binomial_coeffs(order: usize) -> FormalSeries {
    let laplace = laplace_coeffs(order);
    let doubled = laplace
        .scale_argument(&rat_int(2))
        .expect("scale factor is nonzero");
    doubled
        .div(&laplace.mul(&laplace))
        .expect("product series has unit constant term")
}

/// The central-binomial series renormalized to `4^n/sqrt(pi*(n+1/4))` and
/// re-expanded in powers of `1/(n+1/4)`; all odd coefficients vanish.
///
/// The `(1 + 1/(4n))^(1/2)` prefactor is the unique correction that moves
/// the `sqrt(pi*n)` normalization onto `sqrt(pi*(n+1/4))`.
pub fn central_binomial_shifted(order: usize) -> ShiftedSeries {
    let quarter = rat(1, 4);
    let prefactor = FormalSeries::from_polynomial(&[Rational::one(), quarter.clone()], order)
        .pow(&rat(1, 2))
        .expect("unit constant term");
    prefactor
        .mul(&central_binomial_coeffs(order))
        .reexpand(&quarter)
        .expect("offset 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_log_first_coefficients() {
        let s = stirling_log_coeffs(6);
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(1), &rat(1, 12));
        assert!(s.coeff(2).is_zero());
        assert_eq!(s.coeff(3), &rat(-1, 360));
        assert_eq!(s.coeff(5), &rat(1, 1260));
    }

    #[test]
    fn laplace_first_coefficients() {
        let a = laplace_coeffs(4);
        assert_eq!(a.coeff(0), &rat_int(1));
        assert_eq!(a.coeff(1), &rat(1, 12));
        assert_eq!(a.coeff(2), &rat(1, 288));
        assert_eq!(a.coeff(3), &rat(-139, 51840));
        assert_eq!(a.coeff(4), &rat(-571, 2488320));
        assert_eq!(laplace_coeffs(0), FormalSeries::one(0));
    }

    #[test]
    fn laplace_doubling_matches_sum() {
        let a = laplace_coeffs(2);
        let doubled = a.add(&a).unwrap();
        assert_eq!(doubled.coeffs(), &[rat_int(2), rat(1, 6), rat(1, 144)]);
    }

    #[test]
    fn ramanujan_radicand_head() {
        let r = ramanujan_coeffs(3);
        assert_eq!(r.coeff(0), &rat_int(1));
        assert_eq!(r.coeff(1), &rat(1, 2));
        assert_eq!(r.coeff(2), &rat(1, 8));
        assert_eq!(r.coeff(3), &rat(1, 240));
    }

    #[test]
    fn karatsuba_head_polynomial() {
        let k = karatsuba_coeffs(4);
        assert_eq!(k.offset(), 3);
        assert_eq!(k.coeff(0), &rat_int(8));
        assert_eq!(k.coeff(1), &rat_int(4));
        assert_eq!(k.coeff(2), &rat_int(1));
        assert_eq!(k.coeff(3), &rat(1, 30));
        assert_eq!(k.coeff(4), &rat(-11, 240));
    }

    #[test]
    fn mortici_radicand_and_doubled_head() {
        let m = mortici_coeffs(3);
        assert_eq!(m.coeff(1), &rat(1, 6));
        assert_eq!(m.coeff(2), &rat(1, 72));
        assert_eq!(m.coeff(3), &rat(-31, 6480));
        // 2x * radicand = 2x + 1/3 + 1/(36x) + ...
        let doubled = m.scalar_mul(&rat_int(2));
        assert_eq!(doubled.coeff(0), &rat_int(2));
        assert_eq!(doubled.coeff(1), &rat(1, 3));
        assert_eq!(doubled.coeff(2), &rat(1, 36));
    }

    #[test]
    fn mortici_is_square_of_laplace() {
        let l = laplace_coeffs(3);
        assert_eq!(mortici_coeffs(3), l.mul(&l));
    }

    #[test]
    fn gosper_base_forced_head_and_c2() {
        let c = gosper_base_coeffs(2);
        assert_eq!(c.coeff(0), &rat_int(1));
        assert!(c.coeff(1).is_zero());
        // by hand: 1/288 - (1/2)(1/12)/6 + (3/8)/36 = 1/144
        assert_eq!(c.coeff(2), &rat(1, 144));
    }

    #[test]
    fn gosper_base_matches_series_algebra_route() {
        let order = 12;
        let direct = gosper_base_coeffs(order);
        let pipeline = laplace_coeffs(order).mul(
            &FormalSeries::from_polynomial(&[rat_int(1), rat(1, 6)], order)
                .pow(&rat(-1, 2))
                .unwrap(),
        );
        assert_eq!(direct.series(), &pipeline);
    }

    #[test]
    fn shifted_coeffs_first_values() {
        let g = nemes_shifted_coeffs(8);
        assert_eq!(g.coeff(0), &rat_int(1));
        assert!(g.coeff(1).is_zero());
        assert_eq!(g.coeff(2), &rat(1, 144));
        assert_eq!(g.coeff(3), &rat(-1, 12960));
        assert_eq!(g.coeff(4), &rat(-257, 207360));
        assert_eq!(
            g.coeff(8),
            &rat(-710165119, 1083553873920)
        );
    }

    #[test]
    fn shifted_coeffs_forward_expansion_recovers_base() {
        let order = 14;
        let g = nemes_shifted_coeffs(order);
        let recovered = g.to_shifted_series().to_inverse_powers();
        assert_eq!(recovered, *gosper_base_coeffs(order).series());
    }

    #[test]
    fn even_pairs_first_values() {
        let pairs = nemes_even_pairs(3).unwrap();
        assert_eq!(pairs.g(0), &rat_int(1));
        assert_eq!(pairs.g(1), &rat(1, 144));
        assert_eq!(pairs.v(1).unwrap(), &rat(23, 90));
        assert_eq!(pairs.g(2), &rat(-3857, 3110400));
        assert_eq!(pairs.v(2).unwrap(), &rat(1792627, 7289730));
        assert_eq!(
            pairs.v(3).unwrap(),
            &Rational::new(
                "570984637359867601981".parse().unwrap(),
                "2288928529497568067550".parse().unwrap()
            )
        );
    }

    #[test]
    fn even_pairs_v0_is_undefined() {
        let pairs = nemes_even_pairs(1).unwrap();
        assert_eq!(pairs.v(0), Err(PairError::UndefinedShift));
        assert_eq!(pairs.max_index(), 1);
        assert_eq!(pairs.g_values().len(), 2);
        assert_eq!(pairs.v_values().len(), 1);
    }

    #[test]
    fn even_pairs_satisfy_two_sided_matching() {
        let max_index = 5;
        let pairs = nemes_even_pairs(max_index).unwrap();
        let base = gosper_base_coeffs(2 * max_index + 1);
        for n in 0..=2 * max_index + 1 {
            let mut rhs = if n == 0 {
                Rational::one() // j = 0 contributes g_0 only at n = 0
            } else {
                Rational::zero()
            };
            for j in 1..=n / 2 {
                rhs += binomial_general(&rat_int(-2 * j as i64), (n - 2 * j) as u32)
                    * pairs.g(j)
                    * rational_pow(pairs.v(j).unwrap(), (n - 2 * j) as i32);
            }
            assert_eq!(base.coeff(n), &rhs, "matching fails at order {n}");
        }
    }

    #[test]
    fn central_binomial_head() {
        let t = central_binomial_coeffs(4);
        assert_eq!(t.coeff(0), &rat_int(1));
        assert_eq!(t.coeff(1), &rat(-1, 8));
        assert_eq!(t.coeff(2), &rat(1, 128));
        assert_eq!(t.coeff(3), &rat(5, 1024));
        assert_eq!(t.coeff(4), &rat(-21, 32768));
    }

    #[test]
    fn central_binomial_shifted_has_even_powers_only() {
        let d = central_binomial_shifted(10);
        assert_eq!(d.shift(), &rat(1, 4));
        assert_eq!(d.coeff(0), &rat_int(1));
        assert_eq!(d.coeff(2), &rat(-1, 64));
        assert_eq!(d.coeff(4), &rat(21, 8192));
        for n in (1..=9).step_by(2) {
            assert!(d.coeff(n).is_zero(), "odd coefficient {n} should vanish");
        }
    }
}
