//! High-precision constants of the main term
//! `A(N) = ζ(2)·N·ln N + ((2γ − 1)ζ(2) − 2θ)·N`, where `θ = Σ_{d ≥ 1} ln d / d²`,
//! together with the partial sums and tails they are assembled from.
//!
//! Every value is carried as a double-double, good for about 30 significant
//! digits. Euler–Maclaurin corrections are added until the first omitted
//! term drops below [`EM_CUTOFF`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::hp::{Dd, MAX_DIGITS};

/// Euler–Maclaurin stopping rule: stop at the first term below this magnitude.
pub const EM_CUTOFF: f64 = 1e-30;

/// Digits guaranteed by every constant handed to the main-term evaluator.
pub const MIN_EXPORT_DIGITS: u32 = 25;

/// Absolute error assumed for a single double-double result of order one.
const DD_EPS: f64 = 1e-31;

/// Below this cut-off the `ln d / d²` tail is summed directly up to it first.
const LOG_TAIL_EM_START: Natural = 100;

const GAMMA_CUTOFF: Natural = 1000;
const THETA_CUTOFF: Natural = 1000;

/// `B_2, B_4, …, B_20` as exact fractions.
const BERNOULLI_EVEN: [(i64, i64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

/// A real value together with the number of significant digits it is
/// trusted to. Arithmetic keeps the smaller of the two precisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighPrecisionReal {
    value: Dd,
    precision: u32,
}

impl HighPrecisionReal {
    pub fn new(value: Dd, precision: u32) -> Self {
        HighPrecisionReal {
            value,
            precision: precision.min(MAX_DIGITS as u32),
        }
    }

    /// An exact integer.
    pub fn from_natural(n: Natural) -> Self {
        HighPrecisionReal::new(Dd::from(n), MAX_DIGITS as u32)
    }

    pub fn value(&self) -> Dd {
        self.value
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn abs(self) -> Self {
        HighPrecisionReal::new(self.value.abs(), self.precision)
    }

    pub fn sqrt(self) -> Self {
        HighPrecisionReal::new(self.value.sqrt(), self.precision)
    }

    pub fn ln(self) -> Self {
        HighPrecisionReal::new(self.value.ln(), self.precision)
    }

    /// Rounded to `digits` significant digits.
    pub fn to_sig_string(&self, digits: usize) -> String {
        self.value.to_sig_string(digits)
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or(self.precision as usize)
            .clamp(1, MAX_DIGITS);
        f.write_str(&self.value.to_sig_string(digits))
    }
}

macro_rules! hp_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for HighPrecisionReal {
            type Output = HighPrecisionReal;
            fn $method(self, rhs: HighPrecisionReal) -> HighPrecisionReal {
                HighPrecisionReal::new(
                    $trait::$method(self.value, rhs.value),
                    self.precision.min(rhs.precision),
                )
            }
        }
    )*};
}

hp_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for HighPrecisionReal {
    type Output = HighPrecisionReal;
    fn neg(self) -> HighPrecisionReal {
        HighPrecisionReal::new(-self.value, self.precision)
    }
}

/// Trusted digits of `value` given an absolute error bound.
fn digits_for(value: Dd, abs_err: f64) -> u32 {
    let v = value.abs().to_f64();
    if v == 0.0 {
        return 0;
    }
    let digits = (v / abs_err).log10().floor();
    digits.clamp(0.0, MAX_DIGITS as f64) as u32
}

fn bernoulli(k: usize) -> Dd {
    let (num, den) = BERNOULLI_EVEN[k - 1];
    Dd::ratio(num, den)
}

/// `ζ(2) = π²/6`.
pub fn zeta2() -> HighPrecisionReal {
    HighPrecisionReal::new(Dd::PI.square() / 6.0, MAX_DIGITS as u32)
}

/// `Σ_{d ≤ m} 1/d²`, summed from the smallest term upwards.
pub fn partial_zeta2(m: Natural) -> Result<HighPrecisionReal> {
    if m == 0 {
        return Err(Error::Range("partial_zeta2 needs M >= 1".into()));
    }
    let mut sum = Dd::ZERO;
    for d in (1..=m).rev() {
        sum = sum + Dd::ONE / Dd::from(d).square();
    }
    let err = DD_EPS * (m as f64).max(1.0);
    Ok(HighPrecisionReal::new(sum, digits_for(sum, err)))
}

/// The Euler–Mascheroni constant from
/// `γ = H_m − ln m − 1/(2m) + Σ_k B_2k / (2k·m^2k)`.
pub fn euler_gamma_with(m: Natural) -> Result<HighPrecisionReal> {
    if m < 10 {
        return Err(Error::Range(
            "euler_gamma needs a cut-off of at least 10".into(),
        ));
    }
    let mut harmonic = Dd::ZERO;
    for k in (1..=m).rev() {
        harmonic = harmonic + Dd::ONE / Dd::from(k);
    }
    let mf = Dd::from(m);
    let mut gamma = harmonic - mf.ln() - Dd::ONE / (mf * 2.0);

    let inv_m2 = Dd::ONE / mf.square();
    let mut power = Dd::ONE;
    let mut converged = false;
    for k in 1..=BERNOULLI_EVEN.len() {
        power = power * inv_m2;
        let term = bernoulli(k) * power / (2.0 * k as f64);
        if term.abs().to_f64() < EM_CUTOFF {
            converged = true;
            break;
        }
        gamma = gamma + term;
    }
    let err = if converged { DD_EPS * m as f64 } else { 1e-20 };
    Ok(HighPrecisionReal::new(gamma, digits_for(gamma, err)))
}

/// `γ = 0.57721566490153286060651209…`
pub fn euler_gamma() -> HighPrecisionReal {
    euler_gamma_with(GAMMA_CUTOFF).expect("cut-off is valid")
}

/// `(2k−1)`-th derivative of `ln x / x²` at `x`, via
/// `f⁽ⁿ⁾(x) = (−1)ⁿ n! x^{−n−2} ((n+1)(ln x − H_n) + n)`.
fn log_over_square_derivative(n: u32, x: Dd, ln_x: Dd) -> Dd {
    let mut factorial = Dd::ONE;
    let mut harmonic = Dd::ZERO;
    for j in 1..=n {
        factorial = factorial * j as f64;
        harmonic = harmonic + Dd::ONE / j as f64;
    }
    let n1 = (n + 1) as f64;
    let bracket = (ln_x - harmonic) * n1 + n as f64;
    let value = factorial * bracket / x.powi(n + 2);
    if n % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Euler–Maclaurin tail `Σ_{d > m} ln d / d²`.
///
/// `(ln m + 1)/m − ln m/(2m²) − Σ_k B_2k/(2k)! · f^(2k−1)(m)`.
fn log_tail_em(m: Natural) -> (Dd, bool) {
    let x = Dd::from(m);
    let ln_x = x.ln();
    let mut tail = (ln_x + 1.0) / x - ln_x / (x.square() * 2.0);
    let mut factorial = Dd::ONE;
    let mut previous = f64::INFINITY;
    for k in 1..=BERNOULLI_EVEN.len() {
        factorial = factorial * ((2 * k - 1) * 2 * k) as f64;
        let n = (2 * k - 1) as u32;
        let term = bernoulli(k) / factorial * log_over_square_derivative(n, x, ln_x);
        let magnitude = term.abs().to_f64();
        if magnitude < EM_CUTOFF {
            return (tail, true);
        }
        if magnitude > previous {
            // the asymptotic series has started to diverge
            return (tail, false);
        }
        previous = magnitude;
        tail = tail - term;
    }
    (tail, false)
}

fn log_term(d: Natural) -> Dd {
    let x = Dd::from(d);
    x.ln() / x.square()
}

/// `Σ_{d > m} ln d / d²` for `m ≥ 2`.
///
/// For small `m` the terms up to a fixed cut-off are summed directly and the
/// remainder is taken from the Euler–Maclaurin expansion there.
pub fn log_tail(m: Natural) -> Result<HighPrecisionReal> {
    if m < 2 {
        return Err(Error::Range("log_tail needs M >= 2".into()));
    }
    let start = m.max(LOG_TAIL_EM_START);
    let (em, converged) = log_tail_em(start);
    let mut tail = em;
    for d in (m + 1..=start).rev() {
        tail = tail + log_term(d);
    }
    let err = if converged {
        DD_EPS * (1 + start - m) as f64
    } else {
        1e-20
    };
    Ok(HighPrecisionReal::new(tail, digits_for(tail, err)))
}

/// `Σ_{d ≤ m} ln d / d²`.
pub fn partial_theta(m: Natural) -> HighPrecisionReal {
    let mut sum = Dd::ZERO;
    for d in (2..=m).rev() {
        sum = sum + log_term(d);
    }
    let err = DD_EPS * (m as f64).max(1.0);
    HighPrecisionReal::new(sum, digits_for(sum, err))
}

/// `θ = Σ_{d ≥ 1} ln d / d²` as a direct sum up to `m` plus the tail beyond.
pub fn theta_with(m: Natural) -> Result<HighPrecisionReal> {
    Ok(partial_theta(m) + log_tail(m)?)
}

/// `θ = 0.93754825431584375370257409…` (equal to `−ζ′(2)`).
pub fn theta() -> HighPrecisionReal {
    theta_with(THETA_CUTOFF).expect("cut-off is valid")
}

/// The constants of the main term: `c1 = ζ(2)` multiplies `N ln N` and
/// `c0 = (2γ − 1)ζ(2) − 2θ` multiplies `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstants {
    pub zeta2: HighPrecisionReal,
    pub gamma: HighPrecisionReal,
    pub theta: HighPrecisionReal,
    pub c1: HighPrecisionReal,
    pub c0: HighPrecisionReal,
}

fn assemble_c0(
    zeta2: HighPrecisionReal,
    gamma: HighPrecisionReal,
    theta: HighPrecisionReal,
) -> HighPrecisionReal {
    let two = HighPrecisionReal::from_natural(2);
    let one = HighPrecisionReal::from_natural(1);
    (two * gamma - one) * zeta2 - two * theta
}

impl AsymptoticConstants {
    pub fn from_parts(
        zeta2: HighPrecisionReal,
        gamma: HighPrecisionReal,
        theta: HighPrecisionReal,
    ) -> Result<Self> {
        let k = AsymptoticConstants {
            zeta2,
            gamma,
            theta,
            c1: zeta2,
            c0: assemble_c0(zeta2, gamma, theta),
        };
        k.check()?;
        Ok(k)
    }

    /// Evaluates all constants from scratch.
    pub fn compute() -> Result<Self> {
        AsymptoticConstants::from_parts(zeta2(), euler_gamma(), theta())
    }

    /// Shared, lazily computed bundle.
    pub fn get() -> &'static AsymptoticConstants {
        static CONSTANTS: OnceLock<AsymptoticConstants> = OnceLock::new();
        CONSTANTS.get_or_init(|| AsymptoticConstants::compute().expect("constants assemble"))
    }

    /// Re-derives `c1` and `c0` and checks the export precision.
    pub fn check(&self) -> Result<()> {
        if self.c1 != self.zeta2 {
            return Err(Error::Range("c1 must equal zeta(2)".into()));
        }
        let c0 = assemble_c0(self.zeta2, self.gamma, self.theta);
        if (c0.value() - self.c0.value()).abs().to_f64() > 1e-28 {
            return Err(Error::Range(format!(
                "c0 = {} disagrees with (2γ−1)ζ(2) − 2θ = {}",
                self.c0, c0
            )));
        }
        for (name, v) in self.named() {
            if v.precision() < MIN_EXPORT_DIGITS {
                return Err(Error::Range(format!(
                    "{name} carries only {} digits",
                    v.precision()
                )));
            }
        }
        Ok(())
    }

    /// `(name, value)` pairs in display order.
    pub fn named(&self) -> [(&'static str, HighPrecisionReal); 5] {
        [
            ("zeta2", self.zeta2),
            ("gamma", self.gamma),
            ("theta", self.theta),
            ("c1", self.c1),
            ("c0", self.c0),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath at 40 digits: pi**2/6, euler, -zeta(2, derivative=1)
    const ZETA2_REF: &str = "1.644934066848226436472415166646";
    const GAMMA_REF: &str = "0.5772156649015328606065120900824";
    const THETA_REF: &str = "0.9375482543158437537025740945679";

    fn assert_close(v: HighPrecisionReal, reference: &str, tol: f64) {
        let want: Dd = reference.parse().unwrap();
        let diff = (v.value() - want).abs().to_f64();
        assert!(diff < tol, "{v} vs {reference}: |diff| = {diff:e}");
    }

    #[test]
    fn constants_match_reference() {
        assert_close(zeta2(), ZETA2_REF, 1e-29);
        assert_close(euler_gamma(), GAMMA_REF, 1e-28);
        assert_close(theta(), THETA_REF, 1e-28);
    }

    #[test]
    fn spec_digit_strings() {
        assert_eq!(zeta2().to_sig_string(26), "1.6449340668482264364724152");
        assert_eq!(
            euler_gamma().to_sig_string(25),
            "0.5772156649015328606065121"
        );
        assert_eq!(theta().to_sig_string(25), "0.9375482543158437537025741");
        let two_gamma_minus_one =
            euler_gamma() * HighPrecisionReal::from_natural(2) - HighPrecisionReal::from_natural(1);
        assert_eq!(
            two_gamma_minus_one.to_sig_string(25),
            "0.1544313298030657212130242"
        );
    }

    #[test]
    fn gamma_independent_of_cutoff() {
        let reference = euler_gamma().value();
        for m in [100, 10_000] {
            let g = euler_gamma_with(m).unwrap().value();
            assert!((g - reference).abs().to_f64() < 1e-27, "M = {m}");
        }
        assert!(euler_gamma_with(5).is_err());
    }

    #[test]
    fn partial_zeta2_examples() {
        assert_eq!(partial_zeta2(1).unwrap().value(), Dd::ONE);
        assert_eq!(
            partial_zeta2(10).unwrap().to_sig_string(20),
            "1.5497677311665406904"
        );
        assert!(partial_zeta2(0).is_err());
        for m in [10u64, 100, 1000] {
            let gap = (zeta2() - partial_zeta2(m).unwrap()).to_f64();
            assert!(
                gap > 1.0 / (m + 1) as f64 && gap < 1.0 / m as f64,
                "M = {m}"
            );
        }
    }

    #[test]
    fn log_tail_examples() {
        let t = log_tail(1000).unwrap();
        assert!(t.to_sig_string(5).starts_with("0.0079043"));
        assert!(log_tail(1_000_000).unwrap().to_f64() < 1.5e-5);
        assert!(log_tail(1).is_err());
        assert!(log_tail(2).unwrap().precision() >= 25);
    }

    #[test]
    fn em_derivative_formula() {
        // f'(x) = (1 − 2 ln x)/x³
        let x = Dd::from(7.0);
        let lx = x.ln();
        let d1 = log_over_square_derivative(1, x, lx).to_f64();
        assert!((d1 - (1.0 - 2.0 * 7f64.ln()) / 343.0).abs() < 1e-16);
        let d2 = log_over_square_derivative(2, x, lx).to_f64();
        // f'' = (6 ln x − 5)/x⁴
        assert!((d2 - (6.0 * 7f64.ln() - 5.0) / 2401.0).abs() < 1e-16);
        let d3 = log_over_square_derivative(3, x, lx).to_f64();
        // f''' = (26 − 24 ln x)/x⁵
        assert!((d3 - (26.0 - 24.0 * 7f64.ln()) / 16807.0).abs() < 1e-16);
    }

    #[test]
    fn bundle_assembles() {
        let k = AsymptoticConstants::compute().unwrap();
        assert_eq!(k.c1, k.zeta2);
        let c0 = k.c0.to_f64();
        assert!(c0 > -1.622 && c0 < -1.620, "c0 = {c0}");
        assert_eq!(k.c0.to_sig_string(25), "-1.621067153249950894786435");
        for (_, v) in k.named() {
            assert!(v.precision() >= MIN_EXPORT_DIGITS);
        }
    }

    #[test]
    fn tampered_bundle_is_rejected() {
        let mut k = *AsymptoticConstants::get();
        k.c0 = k.c0 + HighPrecisionReal::from_natural(1);
        assert!(k.check().is_err());
    }

    #[test]
    fn precision_is_min_of_operands() {
        let a = HighPrecisionReal::new(Dd::from(1.0), 30);
        let b = HighPrecisionReal::new(Dd::from(2.0), 12);
        assert_eq!((a + b).precision(), 12);
        assert_eq!((a * b).precision(), 12);
        assert_eq!((b - a).precision(), 12);
    }
}
