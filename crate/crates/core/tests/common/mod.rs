//! Oracles shared by the integration tests. None of them call into the
//! crate's own evaluators.

#![allow(dead_code)]

/// Neumaier-compensated sum.
pub fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `Σ_{d > m} ln d / d²` by direct summation up to `upto`, plus the integral
/// estimate `(ln u + 1)/u − ln u/(2u²)` of what lies beyond `upto`.
pub fn log_tail_by_summation(m: u64, upto: u64) -> f64 {
    let direct = compensated_sum((m + 1..=upto).rev().map(|d| {
        let x = d as f64;
        x.ln() / (x * x)
    }));
    let u = upto as f64;
    direct + (u.ln() + 1.0) / u - u.ln() / (2.0 * u * u)
}

/// `−ζ′(2)` from the alternating series
/// `η′(2) = Σ_{n ≥ 1} (−1)ⁿ ln n / n²` accelerated with the
/// Cohen–Rodriguez Villegas–Zagier weights, and
/// `ζ′(2) = 2η′(2) − 2η(2) ln 2` with `η(2) = π²/12`.
pub fn neg_zeta_prime_2() -> f64 {
    // Σ_{k ≥ 0} (−1)^k a_k with a_k = ln(k+1)/(k+1)²; η′(2) = −Σ (−1)^k a_k
    let n = 40usize;
    let a = |k: usize| {
        let x = (k + 1) as f64;
        x.ln() / (x * x)
    };
    let d = (3.0 + 8f64.sqrt()).powi(n as i32);
    let d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0f64;
    let mut c = -d;
    let mut s = 0.0f64;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        b *= (k as f64 + n as f64) * (k as f64 - n as f64) / ((k as f64 + 0.5) * (k as f64 + 1.0));
    }
    let alternating = s / d;
    let eta_prime = -alternating;
    let eta2 = std::f64::consts::PI.powi(2) / 12.0;
    let zeta_prime = 2.0 * eta_prime - 2.0 * eta2 * std::f64::consts::LN_2;
    -zeta_prime
}

/// `∫_a^∞ ln x / x² dx = (ln a + 1)/a`.
pub fn log_over_square_integral(a: f64) -> f64 {
    (a.ln() + 1.0) / a
}

/// Reference digits from an independent 40-digit computation (mpmath):
/// `pi**2/6`, `euler`, `-zeta(2, derivative=1)` and
/// `(2*euler - 1)*pi**2/6 + 2*zeta(2, derivative=1)`.
pub const ZETA2_REF: &str = "1.644934066848226436472415166646025";
pub const GAMMA_REF: &str = "0.5772156649015328606065120900824024";
pub const THETA_REF: &str = "0.9375482543158437537025740945678650";
pub const C0_REF: &str = "-1.621067153249950894786435151318345";

/// `S(N)` straight from the definition, with trial-division τ and Euclid gcd.
pub fn s_definition(n: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    fn tau(n: u64) -> u64 {
        (1..=n).filter(|&d| n.is_multiple_of(d)).count() as u64
    }
    let mut total = 0;
    for a in 1..=n {
        for b in 1..=n / a {
            total += tau(gcd(a, b));
        }
    }
    total
}
