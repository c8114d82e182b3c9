//! Floating-point image of Q(zeta_n) under zeta -> e^(2 pi i / n).
//!
//! The power-basis polynomial is evaluated in multiprecision arithmetic so that
//! cancellation between large coefficients does not eat the answer; the result
//! can then be rounded to `f64` or printed at the working precision.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_complex::Complex64;

use crate::arith::CyclotomicNumber;
use crate::error::{Error, Result};

/// Working precision used when none is requested.
pub const DEFAULT_DIGITS: usize = 30;

/// Precisions below this are raised to it.
pub const MIN_DIGITS: usize = 15;

const RM: RoundingMode = RoundingMode::ToEven;

/// A complex number held at a fixed decimal working precision.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    re: BigFloat,
    im: BigFloat,
    digits: usize,
}

impl ComplexApprox {
    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    /// Real and imaginary parts in scientific notation with `digits`
    /// significant figures.
    pub fn to_strings(&self) -> (String, String) {
        (round_sci(&self.re.to_string(), self.digits), round_sci(&self.im.to_string(), self.digits))
    }
}

impl std::fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.to_strings();
        match im.strip_prefix('-') {
            Some(abs) => write!(f, "{re} - {abs}i"),
            None => write!(f, "{re} + {im}i"),
        }
    }
}

fn bits_for(digits: usize) -> usize {
    // log2(10) < 3.33; add a guard word and round to whole 64-bit words.
    let bits = digits * 333 / 100 + 64;
    bits.div_ceil(64) * 64
}

fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse().unwrap_or(f64::NAN)
}

fn big_from_int(v: &num_bigint::BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&v.to_str_radix(10), Radix::Dec, p, RM, cc)
}

/// Evaluate `a` at `e^(2 pi i / n)` with `digits` decimal digits of working
/// precision (at least [`MIN_DIGITS`]).
pub fn embed_complex(a: &CyclotomicNumber, digits: usize) -> Result<ComplexApprox> {
    let digits = digits.max(MIN_DIGITS);
    let p = bits_for(digits);
    let mut cc = Consts::new().map_err(|e| Error::Domain(format!("float context: {e:?}")))?;
    let (num, den) = a.raw_parts();
    let n = BigFloat::from_u64(a.order() as u64, p);
    let two_pi = cc.pi(p, RM).mul(&BigFloat::from_u64(2, p), p, RM);

    let mut re = BigFloat::from_u64(0, p);
    let mut im = BigFloat::from_u64(0, p);
    for (k, c) in num.iter().enumerate() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let c = big_from_int(c, p, &mut cc);
        if k == 0 {
            re = re.add(&c, p, RM);
            continue;
        }
        let theta = two_pi.mul(&BigFloat::from_u64(k as u64, p), p, RM).div(&n, p, RM);
        let cos = theta.cos(p, RM, &mut cc);
        let sin = theta.sin(p, RM, &mut cc);
        re = re.add(&c.mul(&cos, p, RM), p, RM);
        im = im.add(&c.mul(&sin, p, RM), p, RM);
    }
    let den = big_from_int(den, p, &mut cc);
    Ok(ComplexApprox { re: re.div(&den, p, RM), im: im.div(&den, p, RM), digits })
}

// Round a `d.ddd...e±x` string to `sig` significant digits.
fn round_sci(s: &str, sig: usize) -> String {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (mant, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let mut digits: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    if digits.iter().all(|&d| d == 0) {
        return "0".into();
    }
    // Normalize so that the first digit is nonzero.
    let mut exp = exp;
    while digits.first() == Some(&0) {
        digits.remove(0);
        exp -= 1;
    }
    let round_up = digits.get(sig).is_some_and(|&d| d >= 5);
    digits.truncate(sig);
    digits.resize(sig, 0);
    if round_up {
        let mut i = sig;
        loop {
            if i == 0 {
                digits.insert(0, 1);
                digits.truncate(sig);
                exp += 1;
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
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + digits[0]) as char);
    if sig > 1 {
        out.push('.');
        out.extend(digits[1..].iter().map(|&d| (b'0' + d) as char));
    }
    out.push_str(&format!("e{exp}"));
    out
}

impl CyclotomicNumber {
    /// Shorthand for `embed_complex(self, DEFAULT_DIGITS)` rounded to `f64`.
    pub fn to_complex64(&self) -> Complex64 {
        embed_complex(self, DEFAULT_DIGITS)
            .expect("float context")
            .to_complex64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, unit_factor, CyclotomicField};

    #[test]
    fn u1_for_n4() {
        let z = embed_complex(&unit_factor(4, 1, 1).unwrap(), 30).unwrap().to_complex64();
        assert!((z - Complex64::new(0.5, 0.5)).norm() < 1e-12);
    }

    #[test]
    fn rational_embeds_on_real_axis() {
        let f = CyclotomicField::new(7).unwrap();
        let z = f.from_rational(&rat(3, 4)).to_complex64();
        assert_eq!(z, Complex64::new(0.75, 0.0));
    }

    #[test]
    fn u1_for_n3() {
        let z = embed_complex(&unit_factor(3, 1, 1).unwrap(), 20).unwrap().to_complex64();
        assert!((z - Complex64::new(0.5, 0.5 / 3f64.sqrt())).norm() < 1e-9);
    }

    #[test]
    fn cotangent_form() {
        for n in 2..=30u32 {
            for r in 1..n {
                let got = unit_factor(n, r as i64, 1).unwrap().to_complex64();
                let cot = 1.0 / (r as f64 * std::f64::consts::PI / n as f64).tan();
                let want = Complex64::new(0.5, 0.5 * cot);
                assert!((got - want).norm() <= 1e-9 * want.norm(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn printed_digits() {
        let a = embed_complex(&unit_factor(3, 1, 1).unwrap(), 20).unwrap();
        let (re, im) = a.to_strings();
        assert_eq!(re, "5.0000000000000000000e-1");
        assert_eq!(im, "2.8867513459481288225e-1");
        assert_eq!(a.to_string(), "5.0000000000000000000e-1 + 2.8867513459481288225e-1i");
    }

    #[test]
    fn rounding_helper() {
        assert_eq!(round_sci("9.996e2", 3), "1.00e3");
        assert_eq!(round_sci("-1.2345e-3", 2), "-1.2e-3");
        assert_eq!(round_sci("0.0", 5), "0");
    }
}
