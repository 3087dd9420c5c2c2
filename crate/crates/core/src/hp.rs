//! Double-double floating point: an unevaluated sum `hi + lo` of two `f64`s
//! with `|lo| ≤ ulp(hi)/2`, giving roughly 106 bits (about 31 decimal
//! digits) of significand.
//!
//! Only what the constant and main-term evaluators need is implemented:
//! the four operations, square root, `exp`, natural `ln`, and decimal
//! formatting to a fixed number of significant digits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Largest number of significant digits [`Dd::to_sig_string`] will emit.
pub const MAX_DIGITS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const LN_2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    /// Normalizes an arbitrary pair.
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (hi, lo) = two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Exact for every `u64`.
    pub fn from_u64(n: u64) -> Dd {
        let hi = n as f64;
        // |n - hi| < 2^11, so the residual is exact
        let lo = (n as i128 - hi as i128) as f64;
        Dd::new(hi, lo)
    }

    /// Exact for every `u128` below 2^106.
    pub fn from_u128(n: u128) -> Dd {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Dd::new(hi, lo)
    }

    /// `num / den` correctly rounded to double-double.
    pub fn ratio(num: i64, den: i64) -> Dd {
        let q = Dd::from(num.unsigned_abs()) / Dd::from(den.unsigned_abs());
        if (num < 0) != (den < 0) {
            -q
        } else {
            q
        }
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn floor(self) -> Dd {
        let hi = self.hi.floor();
        if hi == self.hi {
            Dd::new(hi, self.lo.floor())
        } else {
            Dd { hi, lo: 0.0 }
        }
    }

    pub fn square(self) -> Dd {
        self * self
    }

    /// Multiplication by `2^k`, exact barring overflow.
    pub fn ldexp(self, k: i32) -> Dd {
        let scale = 2f64.powi(k);
        Dd {
            hi: self.hi * scale,
            lo: self.lo * scale,
        }
    }

    pub fn powi(self, mut n: u32) -> Dd {
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            n >>= 1;
        }
        acc
    }

    /// `√x` for `x ≥ 0`, one Newton step from the `f64` root.
    pub fn sqrt(self) -> Dd {
        assert!(!self.is_sign_negative(), "sqrt of negative value");
        if self.is_zero() {
            return Dd::ZERO;
        }
        let y = Dd::from(self.hi.sqrt());
        y + (self - y.square()) / (y * 2.0)
    }

    pub fn exp(self) -> Dd {
        // exp(x) = 2^k · (1 + t)^1024 where t = expm1((x - k ln 2) / 1024)
        const SQUARINGS: u32 = 10;
        if self.hi > 709.0 {
            return Dd::from(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / Dd::LN_2.hi).round();
        let r = (self - Dd::LN_2 * k).ldexp(-(SQUARINGS as i32));

        let mut term = r;
        let mut t = r;
        let mut n = 1.0;
        loop {
            n += 1.0;
            term = term * r / n;
            t = t + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..SQUARINGS {
            t = t * 2.0 + t.square();
        }
        (t + 1.0).ldexp(k as i32)
    }

    /// Natural logarithm of a positive value.
    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "ln of nonpositive value");
        if self == Dd::ONE {
            return Dd::ZERO;
        }
        // Newton on exp(y) = x; each step doubles the correct digits
        let mut y = Dd::from(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - 1.0;
        }
        y
    }

    /// Decimal rendering with exactly `sig` significant digits (rounded half
    /// up). Plain notation for decimal exponents in `-5..21`, scientific
    /// otherwise. Deterministic and locale free.
    pub fn to_sig_string(self, sig: usize) -> String {
        assert!(
            (1..=MAX_DIGITS).contains(&sig),
            "digits must be in 1..={MAX_DIGITS}"
        );
        if self.is_zero() {
            return if sig == 1 {
                "0".to_string()
            } else {
                format!("0.{}", "0".repeat(sig - 1))
            };
        }
        let negative = self.is_sign_negative();
        let x = self.abs();
        let mut exp10 = x.hi.log10().floor() as i32;
        let mut m = x * pow10(-exp10);
        if m.hi >= 10.0 {
            m = m / 10.0;
            exp10 += 1;
        } else if m.hi < 1.0 {
            m = m * 10.0;
            exp10 -= 1;
        }

        let mut digits = Vec::with_capacity(sig + 1);
        for _ in 0..=sig {
            let d = m.floor();
            let d_val = d.to_f64().clamp(0.0, 9.0) as u8;
            digits.push(d_val);
            m = (m - Dd::from(d_val as f64)) * 10.0;
        }
        let round_up = digits.pop().unwrap() >= 5;
        if round_up {
            let mut i = digits.len();
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.pop();
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }

        let chars: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if (-5..21).contains(&exp10) {
            if exp10 < 0 {
                out.push_str("0.");
                out.push_str(&"0".repeat((-exp10 - 1) as usize));
                out.push_str(&chars);
            } else {
                let int_len = exp10 as usize + 1;
                if int_len >= chars.len() {
                    out.push_str(&chars);
                    out.push_str(&"0".repeat(int_len - chars.len()));
                } else {
                    out.push_str(&chars[..int_len]);
                    out.push('.');
                    out.push_str(&chars[int_len..]);
                }
            }
        } else {
            out.push_str(&chars[..1]);
            if chars.len() > 1 {
                out.push('.');
                out.push_str(&chars[1..]);
            }
            out.push_str(&format!("e{exp10}"));
        }
        out
    }
}

fn pow10(e: i32) -> Dd {
    let p = Dd::from(10.0).powi(e.unsigned_abs());
    if e < 0 {
        Dd::ONE / p
    } else {
        p
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }
}

impl From<u64> for Dd {
    fn from(n: u64) -> Dd {
        Dd::from_u64(n)
    }
}

impl FromStr for Dd {
    type Err = String;

    /// Parses `[-]digits[.digits][e[-]digits]`.
    fn from_str(s: &str) -> Result<Dd, String> {
        let bad = || format!("invalid decimal '{s}'");
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mantissa, exp) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], body[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (body, 0),
        };
        let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let mut value = Dd::ZERO;
        for c in int_part.chars().chain(frac_part.chars()) {
            let d = c.to_digit(10).ok_or_else(bad)?;
            value = value * 10.0 + d as f64;
        }
        let value = value * pow10(exp - frac_part.len() as i32);
        Ok(if negative { -value } else { value })
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

macro_rules! scalar_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<f64> for Dd {
            type Output = Dd;
            fn $method(self, b: f64) -> Dd {
                $trait::$method(self, Dd::from(b))
            }
        }
    )*};
}

scalar_ops!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(MAX_DIGITS).clamp(1, MAX_DIGITS);
        f.write_str(&self.to_sig_string(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, rel: f64) -> bool {
        ((a - b).abs().to_f64()) <= rel * b.abs().to_f64()
    }

    #[test]
    fn division_and_multiplication_invert() {
        let third = Dd::ONE / 3.0;
        assert!(close(third * 3.0, Dd::ONE, 1e-31));
        let x = Dd::ratio(-22, 7);
        assert!(close(x * 7.0, Dd::from(-22.0), 1e-31));
    }

    #[test]
    fn integers_convert_exactly() {
        let n = (1u64 << 62) + 12345;
        let d = Dd::from(n);
        assert_eq!(d.hi() as i128 + d.lo() as i128, n as i128);
        let big = (1u128 << 100) + 7;
        let d = Dd::from_u128(big);
        assert_eq!(d.hi() as i128 + d.lo() as i128, big as i128);
    }

    #[test]
    fn sqrt_squares_back() {
        let two = Dd::from(2.0);
        let r = two.sqrt();
        assert!(close(r.square(), two, 1e-31));
        assert_eq!(r.to_sig_string(30), "1.41421356237309504880168872421");
    }

    #[test]
    fn exp_ln_known_values() {
        // e = 2.71828182845904523536028747135266...
        assert_eq!(
            Dd::ONE.exp().to_sig_string(30),
            "2.71828182845904523536028747135"
        );
        assert_eq!(
            Dd::from(2.0).ln().to_sig_string(30),
            "0.693147180559945309417232121458"
        );
        // ln 10 = 2.30258509299404568401799145468436...
        assert_eq!(
            Dd::from(10.0).ln().to_sig_string(30),
            "2.30258509299404568401799145468"
        );
        assert!(Dd::ONE.ln().is_zero());
    }

    #[test]
    fn ln_inverts_exp() {
        for x in [1e-10, 0.3, 1.5, 7.0, 1000.0, 1e12, 4.5e13] {
            let v = Dd::from(x);
            assert!(close(v.ln().exp(), v, 1e-30), "x = {x}");
        }
    }

    #[test]
    fn pi_digits() {
        assert_eq!(Dd::PI.to_sig_string(30), "3.14159265358979323846264338328");
    }

    #[test]
    fn formatting_layouts() {
        assert_eq!(Dd::from(0.0).to_sig_string(3), "0.00");
        assert_eq!(Dd::from(31.0).to_sig_string(5), "31.000");
        assert_eq!(Dd::from(-1.5).to_sig_string(2), "-1.5");
        assert_eq!(Dd::from(9.995).to_sig_string(3), "9.99");
        assert_eq!(Dd::from(9.9996).to_sig_string(3), "10.0");
        assert_eq!(Dd::from(123456.0).to_sig_string(3), "123000");
        assert_eq!(Dd::from(0.000123).to_sig_string(2), "0.00012");
        assert_eq!(Dd::from(1.5e-7).to_sig_string(2), "1.5e-7");
        assert_eq!(Dd::from(2.5e22).to_sig_string(2), "2.5e22");
        assert_eq!(format!("{:.4}", Dd::from(0.5)), "0.5000");
    }

    #[test]
    fn parse_round_trips_formatting() {
        let pi: Dd = "3.14159265358979323846264338328".parse().unwrap();
        assert!((pi - Dd::PI).abs().to_f64() < 1e-30);
        for text in ["-1.5", "31.000", "1.5e-7", "2.5e22", "0.00012", "123000"] {
            let v: Dd = text.parse().unwrap();
            assert_eq!(v.to_f64(), text.parse::<f64>().unwrap(), "{text}");
        }
        assert!("".parse::<Dd>().is_err());
        assert!("1.2.3".parse::<Dd>().is_err());
        assert!("abc".parse::<Dd>().is_err());
    }
}
