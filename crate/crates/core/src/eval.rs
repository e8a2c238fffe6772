//! Arbitrary-precision evaluation of the approximation formulas, a
//! rigorously bounded reference `log Gamma(x+1)`, and the
//! exact-decimal-digits accuracy metric.
//!
//! Everything is evaluated in log space: the interesting arguments reach
//! `x = 10000`, where the Gamma function itself overflows any fixed-range
//! float, while the metric only needs the ratio of approximation to truth,
//! i.e. the difference of logs.
//!
//! Inputs `x` are exact rationals, so results are reproducible bit for bit
//! for a given precision setting. Partial series sums are accumulated in
//! exact rational arithmetic and converted once at the end; floating-point
//! rounding only enters through logs, exponentials and the final assembly,
//! all carried out with at least [`GUARD_DIGITS`] guard digits.

use astro_float::{BigFloat, Consts, RoundingMode, Sign as FloatSign, WORD_BIT_SIZE};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::decimal::{decimal_fixed, decimal_sig};
use crate::exact::{bernoulli_table, binomial_general, rat, rat_int, rational_pow, Rational};
use crate::families::{
    gosper_base_coeffs, laplace_coeffs, mortici_coeffs, nemes_even_pairs, nemes_shifted_coeffs,
    ramanujan_coeffs,
};
use crate::series::FormalSeries;

/// Minimum number of working digits beyond the certified target.
pub const GUARD_DIGITS: usize = 20;

/// Default working precision in significant decimal digits.
pub const DEFAULT_WORKING_DIGITS: usize = 120;

/// Default certified digits of the reference value.
pub const DEFAULT_TARGET_DIGITS: usize = 80;

/// Largest number of terms of the logarithmic series the reference uses.
/// With the default target no argument shift is needed for `x >= 100`.
const MAX_LOG_SERIES_TERMS: usize = 30;

/// Ceiling on the upward argument shift of the reference.
const MAX_ARGUMENT_SHIFT: u64 = 1_000_000;

/// Largest pair index solvable in exact rational arithmetic before
/// coefficient growth makes floats the sensible representation.
pub const MAX_EXACT_PAIR_INDEX: usize = 7;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("argument must be at least 1")]
    ArgumentOutOfDomain,
    #[error("order {order} is invalid for family {family}: {reason}")]
    InvalidOrder {
        family: &'static str,
        order: usize,
        reason: &'static str,
    },
    #[error("working precision must exceed the target by at least {GUARD_DIGITS} digits")]
    InvalidPrecision,
    #[error("requested precision is unreachable with the configured term and shift limits")]
    PrecisionUnreachable,
    #[error("partial series sum is not positive for this order/argument combination")]
    NonPositiveSum,
    #[error("deviation from the reference is below its certified error; raise the precision")]
    PrecisionInsufficient,
    #[error("pair recurrence pivot g_{0} vanished in float mode")]
    FloatPairPivot(usize),
}

/// Working and certified precision for one evaluation.
///
/// `working_digits` is the precision intermediate arithmetic is carried
/// at; `target_digits` is the number of decimal digits the reference value
/// is guaranteed correct to. The gap absorbs accumulated rounding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    working_digits: usize,
    target_digits: usize,
}

impl PrecisionContext {
    pub fn new(working_digits: usize, target_digits: usize) -> Result<Self, EvalError> {
        if working_digits < target_digits + GUARD_DIGITS || target_digits == 0 {
            return Err(EvalError::InvalidPrecision);
        }
        Ok(PrecisionContext {
            working_digits,
            target_digits,
        })
    }

    /// Context with the given working precision and a target 40 digits
    /// below it; requires at least 60 working digits.
    pub fn with_working_digits(working_digits: usize) -> Result<Self, EvalError> {
        if working_digits < 60 {
            return Err(EvalError::InvalidPrecision);
        }
        Self::new(working_digits, working_digits - 40)
    }

    pub fn working_digits(&self) -> usize {
        self.working_digits
    }

    pub fn target_digits(&self) -> usize {
        self.target_digits
    }

    /// Binary precision used for float arithmetic.
    pub(crate) fn prec_bits(&self) -> usize {
        let bits = (self.working_digits as f64 * std::f64::consts::LOG2_10).ceil() as usize;
        (bits + 2 * WORD_BIT_SIZE).next_multiple_of(WORD_BIT_SIZE)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            working_digits: DEFAULT_WORKING_DIGITS,
            target_digits: DEFAULT_TARGET_DIGITS,
        }
    }
}

/// The approximation families of the accuracy comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Log-space partial sums of the logarithmic series.
    Stirling,
    /// Partial sums of the product-form series.
    Laplace,
    /// Sixth root of the partial radicand series.
    Ramanujan,
    /// Square root of the partial radicand series.
    Mortici,
    /// Shifted-variable series with coefficients `G_k`.
    NemesShifted,
    /// Even-power series with the pair sequences `(g_m, v_m)`.
    NemesEven,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        match name {
            "stirling" => Some(Family::Stirling),
            "laplace" => Some(Family::Laplace),
            "ramanujan" => Some(Family::Ramanujan),
            "mortici" => Some(Family::Mortici),
            "nemes_shifted" => Some(Family::NemesShifted),
            "nemes_even" => Some(Family::NemesEven),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Stirling => "stirling",
            Family::Laplace => "laplace",
            Family::Ramanujan => "ramanujan",
            Family::Mortici => "mortici",
            Family::NemesShifted => "nemes_shifted",
            Family::NemesEven => "nemes_even",
        }
    }

    /// Row label used in the comparison tables.
    pub fn label(&self) -> &'static str {
        match self {
            Family::Stirling => "Stirling",
            Family::Laplace => "Laplace",
            Family::Ramanujan => "Ramanujan",
            Family::Mortici => "Mortici",
            Family::NemesShifted => "New",
            Family::NemesEven => "Special",
        }
    }
}

/// One column of the comparison tables: a family plus the order of its
/// highest retained term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApproximationSpec {
    family: Family,
    order: usize,
}

impl ApproximationSpec {
    pub fn new(family: Family, order: usize) -> Result<Self, EvalError> {
        if order == 0 {
            return Err(EvalError::InvalidOrder {
                family: family.name(),
                order,
                reason: "order must be positive",
            });
        }
        match family {
            Family::Stirling => {
                // n log-series terms give the 2n-th order approximation
                if order % 2 != 0 {
                    return Err(EvalError::InvalidOrder {
                        family: family.name(),
                        order,
                        reason: "the logarithmic series only yields even orders",
                    });
                }
                if order > 2 * MAX_LOG_SERIES_TERMS {
                    return Err(EvalError::InvalidOrder {
                        family: family.name(),
                        order,
                        reason: "order exceeds the supported term count",
                    });
                }
            }
            Family::NemesEven => {
                if order % 2 != 0 {
                    return Err(EvalError::InvalidOrder {
                        family: family.name(),
                        order,
                        reason: "the even-power series has no odd-order terms",
                    });
                }
                if order > 2 * MAX_EXACT_PAIR_INDEX {
                    return Err(EvalError::InvalidOrder {
                        family: family.name(),
                        order,
                        reason: "order exceeds the exactly solvable pair range",
                    });
                }
            }
            _ => {}
        }
        Ok(ApproximationSpec { family, order })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// Sign convention of the accuracy metric: minus means the approximation
/// is smaller than the true value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    /// Prefix used in table cells; the plus sign is suppressed.
    pub fn prefix(&self) -> &'static str {
        match self {
            Sign::Plus => "",
            Sign::Minus => "-",
        }
    }
}

/// Exact decimal digits of one approximation at one argument, together
/// with the over/undershoot sign. Both come from the same evaluation.
#[derive(Clone, Debug)]
pub struct EddResult {
    value: BigFloat,
    sign: Sign,
}

impl EddResult {
    pub fn value(&self) -> &BigFloat {
        &self.value
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn to_f64(&self) -> f64 {
        bigfloat_to_f64(&self.value)
    }

    /// Table-cell rendering: the unsigned digit count rounded half away
    /// from zero to one decimal, prefixed by the sign (plus suppressed).
    pub fn display_one_decimal(&self) -> String {
        let mag = bigfloat_to_rational(&self.value)
            .expect("edd is finite")
            .abs();
        format!("{}{}", self.sign.prefix(), decimal_fixed(&mag, 1))
    }
}

// ---------------------------------------------------------------------------
// Conversions between exact rationals and big floats
// ---------------------------------------------------------------------------

/// Converts a big integer to a float exactly (the precision expands to
/// cover every significant bit).
pub fn bigint_to_bigfloat(i: &BigInt) -> BigFloat {
    if i.is_zero() {
        return BigFloat::new(WORD_BIT_SIZE);
    }
    let sign = if i.is_negative() {
        FloatSign::Neg
    } else {
        FloatSign::Pos
    };
    let words = i.magnitude().to_u64_digits();
    let exponent = (words.len() * WORD_BIT_SIZE) as astro_float::Exponent;
    BigFloat::from_words(&words, sign, exponent)
}

/// Converts an exact rational to a float with `p` bits of precision,
/// correctly rounded (numerator and denominator are taken exactly, the
/// single division rounds).
pub fn rational_to_bigfloat(r: &Rational, p: usize) -> BigFloat {
    let num = bigint_to_bigfloat(r.numer());
    let den = bigint_to_bigfloat(r.denom());
    num.div(&den, p, RM)
}

/// The exact rational value of a finite float.
pub fn bigfloat_to_rational(f: &BigFloat) -> Option<Rational> {
    if f.is_nan() || f.is_inf() {
        return None;
    }
    if f.is_zero() {
        return Some(Rational::zero());
    }
    let (words, _bits, sign, exponent, _inexact) = f.as_raw_parts()?;
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
    let mantissa = BigInt::from_bytes_le(num_bigint::Sign::Plus, &bytes);
    let shift = i64::from(exponent) - (words.len() * WORD_BIT_SIZE) as i64;
    let mut value = if shift >= 0 {
        Rational::from_integer(mantissa << shift as usize)
    } else {
        Rational::new(mantissa, BigInt::one() << (-shift) as usize)
    };
    if sign == FloatSign::Neg {
        value = -value;
    }
    Some(value)
}

pub fn bigfloat_to_f64(f: &BigFloat) -> f64 {
    bigfloat_to_rational(f)
        .and_then(|r| r.to_f64())
        .unwrap_or(f64::NAN)
}

/// Fixed-point decimal rendering of a finite float.
pub fn bigfloat_decimal_fixed(f: &BigFloat, frac_digits: usize) -> Option<String> {
    Some(decimal_fixed(&bigfloat_to_rational(f)?, frac_digits))
}

/// Significant-digit decimal rendering of a finite float.
pub fn bigfloat_decimal_sig(f: &BigFloat, sig_digits: usize) -> Option<String> {
    Some(decimal_sig(&bigfloat_to_rational(f)?, sig_digits))
}

// ---------------------------------------------------------------------------
// Reference log Gamma
// ---------------------------------------------------------------------------

struct ReferencePlan {
    shift: u64,
    terms: usize,
}

/// Picks the argument shift and term count so that the first omitted
/// log-series term is below `10^(-threshold_digits)`.
fn plan_reference(
    x: f64,
    threshold_digits: f64,
    bern_log10: &[f64],
) -> Result<ReferencePlan, EvalError> {
    let max_k = MAX_LOG_SERIES_TERMS;
    // term t_k = B_2k / ((2k)(2k-1) y^(2k-1)); bound uses the first omitted
    // term t_{K+1} with one spare digit for the magnitude estimates
    let term_log10 = |k: usize, log_y: f64| -> f64 {
        bern_log10[k] - ((2 * k) as f64 * (2 * k - 1) as f64).log10() - (2 * k - 1) as f64 * log_y
            + 1.0
    };
    // smallest y that works with the full term budget
    let log_y_needed = (bern_log10[max_k + 1]
        - ((2 * max_k + 2) as f64 * (2 * max_k + 1) as f64).log10()
        + 1.0
        + threshold_digits)
        / (2 * max_k + 1) as f64;
    let y_needed = 10f64.powf(log_y_needed);
    let shift = if x >= y_needed {
        0u64
    } else {
        let needed = (y_needed - x).ceil() as u64 + 1;
        if needed > MAX_ARGUMENT_SHIFT {
            return Err(EvalError::PrecisionUnreachable);
        }
        needed
    };
    let log_y = (x + shift as f64).log10();
    for terms in 1..=max_k {
        if term_log10(terms + 1, log_y) < -threshold_digits {
            return Ok(ReferencePlan { shift, terms });
        }
    }
    Err(EvalError::PrecisionUnreachable)
}

/// `log Gamma(x+1)` for exact `x >= 1`, with absolute error below
/// `10^(-target_digits)`.
///
/// The argument is shifted upward by an integer until the first omitted
/// term of the logarithmic series is below the certified threshold; the
/// series remainder for positive real arguments is bounded in magnitude by
/// that first omitted term. The shift is then removed by subtracting the
/// log of the exact rising-factorial product.
pub fn log_gamma_reference(x: &Rational, ctx: &PrecisionContext) -> Result<BigFloat, EvalError> {
    if *x < Rational::one() {
        return Err(EvalError::ArgumentOutOfDomain);
    }
    let bern = bernoulli_table(2 * MAX_LOG_SERIES_TERMS + 2);
    let bern_log10: Vec<f64> = (0..=MAX_LOG_SERIES_TERMS + 1)
        .map(|k| {
            let b = &bern[2 * k];
            if b.is_zero() {
                f64::NEG_INFINITY
            } else {
                (b.numer().bits() as f64 - b.denom().bits() as f64) * std::f64::consts::LOG10_2 as f64
            }
        })
        .collect();
    let threshold = (ctx.target_digits + 5) as f64;
    let plan = plan_reference(x.to_f64().unwrap_or(1.0), threshold, &bern_log10)?;

    let p = ctx.prec_bits();
    let mut cc = Consts::new().expect("constants cache");
    let y = x + rat_int(plan.shift as i64);
    let yf = rational_to_bigfloat(&y, p);
    let ln_y = yf.ln(p, RM, &mut cc);
    let half = rational_to_bigfloat(&rat(1, 2), p);
    let ln_two_pi = two_pi(p, &mut cc).ln(p, RM, &mut cc);

    // (y + 1/2) ln y - y + (1/2) ln(2 pi)
    let mut acc = yf
        .add(&half, p, RM)
        .mul(&ln_y, p, RM)
        .sub(&yf, p, RM)
        .add(&half.mul(&ln_two_pi, p, RM), p, RM);

    // + sum_{k=1}^{K} B_2k / ((2k)(2k-1)) y^(1-2k)
    let one = BigFloat::from_u64(1, p);
    let inv_y = one.div(&yf, p, RM);
    let inv_y2 = inv_y.mul(&inv_y, p, RM);
    let mut power = inv_y;
    for k in 1..=plan.terms {
        let coeff = &bern[2 * k] / rat_int((2 * k * (2 * k - 1)) as i64);
        let term = rational_to_bigfloat(&coeff, p).mul(&power, p, RM);
        acc = acc.add(&term, p, RM);
        power = power.mul(&inv_y2, p, RM);
    }

    // - log of the exact shift product (x+1)(x+2)...(x+m)
    if plan.shift > 0 {
        let mut num_prod = BigInt::one();
        let xn = x.numer().clone();
        let xd = x.denom().clone();
        for j in 1..=plan.shift {
            num_prod *= &xn + &xd * BigInt::from(j);
        }
        let den_prod = xd.pow(plan.shift as u32);
        let product = Rational::new(num_prod, den_prod);
        let ln_shift = rational_to_bigfloat(&product, p).ln(p, RM, &mut cc);
        acc = acc.sub(&ln_shift, p, RM);
    }
    Ok(acc)
}

fn two_pi(p: usize, cc: &mut Consts) -> BigFloat {
    let two = BigFloat::from_u64(2, p);
    cc.pi(p, RM).mul(&two, p, RM)
}

// ---------------------------------------------------------------------------
// Approximation formulas
// ---------------------------------------------------------------------------

/// Exact value of `sum_n c_n arg^(-n)` by Horner evaluation in `1/arg`.
fn horner_inverse(coeffs: &[Rational], arg: &Rational) -> Rational {
    let inv = Rational::one() / arg;
    let mut acc = coeffs[coeffs.len() - 1].clone();
    for c in coeffs.iter().rev().skip(1) {
        acc = acc * &inv + c;
    }
    acc
}

/// Exact value of `sum_{n<=N} c_n x^(-n)`.
fn partial_sum(series: &FormalSeries, x: &Rational) -> Rational {
    debug_assert_eq!(series.offset(), 0);
    horner_inverse(series.coeffs(), x)
}

/// Natural log of an exact positive rational at precision `p`.
fn ln_positive_rational(
    r: &Rational,
    p: usize,
    cc: &mut Consts,
) -> Result<BigFloat, EvalError> {
    if !r.is_positive() {
        return Err(EvalError::NonPositiveSum);
    }
    Ok(rational_to_bigfloat(r, p).ln(p, RM, cc))
}

/// Natural log of the approximation to `Gamma(x+1)` described by `spec`,
/// evaluated at exact `x >= 1`.
///
/// All families share the log-space base `x ln x - x + (1/2) ln(2 pi x)`,
/// with `x + 1/6` replacing the trailing `x` for the two shifted families.
/// The family tail is added on top: the partial logarithmic series
/// directly, or the log (scaled by the root exponent where applicable) of
/// the exact partial sum of the family's series.
pub fn log_approximation(
    spec: &ApproximationSpec,
    x: &Rational,
    ctx: &PrecisionContext,
) -> Result<BigFloat, EvalError> {
    if *x < Rational::one() {
        return Err(EvalError::ArgumentOutOfDomain);
    }
    let p = ctx.prec_bits();
    let mut cc = Consts::new().expect("constants cache");
    let order = spec.order;

    let xf = rational_to_bigfloat(x, p);
    let ln_x = xf.ln(p, RM, &mut cc);
    let half = rational_to_bigfloat(&rat(1, 2), p);
    let ln_two_pi = two_pi(p, &mut cc).ln(p, RM, &mut cc);

    // x ln x - x + (1/2) ln(2 pi * arg)
    let base = |arg_ln: &BigFloat| -> BigFloat {
        xf.mul(&ln_x, p, RM)
            .sub(&xf, p, RM)
            .add(&half.mul(&ln_two_pi.add(arg_ln, p, RM), p, RM), p, RM)
    };

    let tail = match spec.family {
        Family::Stirling => {
            let mut sum = Rational::zero();
            let bern = bernoulli_table(order);
            for k in 1..=order / 2 {
                let coeff = &bern[2 * k] / rat_int((2 * k * (2 * k - 1)) as i64);
                sum += coeff * rational_pow(x, 1 - 2 * k as i32);
            }
            rational_to_bigfloat(&sum, p)
        }
        Family::Laplace => {
            let sum = partial_sum(&laplace_coeffs(order), x);
            ln_positive_rational(&sum, p, &mut cc)?
        }
        Family::Ramanujan => {
            let sum = partial_sum(&ramanujan_coeffs(order), x);
            let sixth = rational_to_bigfloat(&rat(1, 6), p);
            ln_positive_rational(&sum, p, &mut cc)?.mul(&sixth, p, RM)
        }
        Family::Mortici => {
            let sum = partial_sum(&mortici_coeffs(order), x);
            ln_positive_rational(&sum, p, &mut cc)?.mul(&half, p, RM)
        }
        Family::NemesShifted => {
            let coeffs = nemes_shifted_coeffs(order);
            let shifted_x = x + rat(1, 4);
            let sum = horner_inverse(coeffs.coeffs(), &shifted_x);
            ln_positive_rational(&sum, p, &mut cc)?
        }
        Family::NemesEven => {
            let pairs = nemes_even_pairs(order / 2).expect("no zero pivot in exact range");
            let mut sum = Rational::one(); // g_0 term
            for m in 1..=order / 2 {
                let shifted = x + pairs.v(m).expect("m >= 1");
                sum += pairs.g(m) * rational_pow(&shifted, -2 * m as i32);
            }
            ln_positive_rational(&sum, p, &mut cc)?
        }
    };

    let result = match spec.family {
        Family::NemesShifted | Family::NemesEven => {
            let sixth_shift = x + rat(1, 6);
            let ln_arg = rational_to_bigfloat(&sixth_shift, p).ln(p, RM, &mut cc);
            base(&ln_arg).add(&tail, p, RM)
        }
        _ => base(&ln_x).add(&tail, p, RM),
    };
    Ok(result)
}

/// Exact decimal digits `-log10 |1 - approximation/Gamma|` and the
/// over/undershoot sign, both from the same pair of log evaluations.
pub fn edd(
    spec: &ApproximationSpec,
    x: &Rational,
    ctx: &PrecisionContext,
) -> Result<EddResult, EvalError> {
    let log_a = log_approximation(spec, x, ctx)?;
    let log_g = log_gamma_reference(x, ctx)?;
    let p = ctx.prec_bits();
    let mut cc = Consts::new().expect("constants cache");
    let delta = log_a.sub(&log_g, p, RM);
    let one = BigFloat::from_u64(1, p);
    let deviation = delta.exp(p, RM, &mut cc).sub(&one, p, RM);
    if deviation.is_zero() {
        return Err(EvalError::PrecisionInsufficient);
    }
    let value = deviation.abs().log10(p, RM, &mut cc).neg();
    // the metric is meaningless once it approaches the certified digits of
    // the reference
    if bigfloat_to_f64(&value) > ctx.target_digits.saturating_sub(10) as f64 {
        return Err(EvalError::PrecisionInsufficient);
    }
    let sign = if delta.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    Ok(EddResult { value, sign })
}

// ---------------------------------------------------------------------------
// Float continuation of the pair recurrence
// ---------------------------------------------------------------------------

/// The pair sequences in float arithmetic, for indices beyond the exact
/// range. Index discipline matches the exact solver: `g` holds `g_0..g_M`,
/// `v` holds `v_1..v_M`.
#[derive(Clone, Debug)]
pub struct EvenPairsFloat {
    g: Vec<BigFloat>,
    v: Vec<BigFloat>,
}

impl EvenPairsFloat {
    pub fn max_index(&self) -> usize {
        self.g.len() - 1
    }

    pub fn g(&self, m: usize) -> &BigFloat {
        &self.g[m]
    }

    /// `v_m` for `m >= 1`; `v_0` is undefined.
    pub fn v(&self, m: usize) -> Option<&BigFloat> {
        if m == 0 {
            return None;
        }
        self.v.get(m - 1)
    }
}

/// Runs the pair recurrence in float arithmetic at the context's working
/// precision. The base-series coefficients are still generated exactly
/// and rounded once on conversion.
pub fn even_pairs_float(
    max_index: usize,
    ctx: &PrecisionContext,
) -> Result<EvenPairsFloat, EvalError> {
    let p = ctx.prec_bits();
    let base = gosper_base_coeffs(2 * max_index + 1);
    let c: Vec<BigFloat> = base
        .coeffs()
        .iter()
        .map(|r| rational_to_bigfloat(r, p))
        .collect();
    let mut g: Vec<BigFloat> = vec![BigFloat::from_u64(1, p)];
    let mut v: Vec<BigFloat> = Vec::with_capacity(max_index);
    let partial = |g: &[BigFloat], v: &[BigFloat], n: usize, limit: usize| -> BigFloat {
        let mut acc = BigFloat::new(p);
        for j in 1..limit {
            let kernel = binomial_general(&rat_int(-2 * j as i64), (n - 2 * j) as u32);
            if kernel.is_zero() {
                continue;
            }
            let term = rational_to_bigfloat(&kernel, p)
                .mul(&g[j], p, RM)
                .mul(&v[j - 1].powi(n - 2 * j, p, RM), p, RM);
            acc = acc.add(&term, p, RM);
        }
        acc
    };
    for m in 1..=max_index {
        let g_m = c[2 * m].sub(&partial(&g, &v, 2 * m, m), p, RM);
        if g_m.is_zero() {
            return Err(EvalError::FloatPairPivot(m));
        }
        let odd_rest = c[2 * m + 1].sub(&partial(&g, &v, 2 * m + 1, m), p, RM);
        let denom = BigFloat::from_u64(2 * m as u64, p).mul(&g_m, p, RM);
        let v_m = odd_rest.div(&denom, p, RM).neg();
        g.push(g_m);
        v.push(v_m);
    }
    Ok(EvenPairsFloat { g, v })
}
