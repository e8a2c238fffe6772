//! Exact rational scalars and the combinatorial quantities built from them.
//!
//! [`Rational`] is the coefficient type used everywhere in this crate. It is
//! always stored in lowest terms with a positive denominator, and all
//! arithmetic on it is exact; no floating point enters until the evaluation
//! layer converts finished coefficients.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

/// Arbitrary-precision rational number, normalized to lowest terms with a
/// positive denominator on every operation.
pub type Rational = num_rational::BigRational;

/// The fraction `n/d`. Panics if `d` is zero.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer power of a rational. Negative exponents invert; `r` must be
/// nonzero in that case.
pub fn rational_pow(r: &Rational, exp: i32) -> Rational {
    Pow::pow(r, exp)
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Integer binomial coefficient `C(n, k)`; zero for `k > n`.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: the partial product is divisible by i+1
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(r, k) = r(r-1)...(r-k+1) / k!` for
/// rational `r` and integer `k >= 0`. `C(r, 0) = 1` (empty product).
pub fn binomial_general(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= r - rat_int(i64::from(i));
        acc /= rat_int(i64::from(i) + 1);
    }
    acc
}

/// Bernoulli number `B_n`, with the convention `B_1 = -1/2`.
///
/// Computed by the defining recurrence; only indices up to a few dozen are
/// ever consumed, so no fast algorithm is needed.
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_table(n).pop().expect("table is never empty")
}

/// `B_0 ..= B_max` computed by the defining recurrence
/// `sum_{j=0}^{n} C(n+1, j) B_j = 0` for `n >= 1`, with `B_0 = 1`.
pub fn bernoulli_table(max_index: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(max_index + 1);
    table.push(Rational::one());
    for n in 1..=max_index {
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += Rational::from_integer(binomial_int(n as u64 + 1, j as u64)) * b;
        }
        table.push(-acc / rat_int(n as i64 + 1));
    }
    table
}
