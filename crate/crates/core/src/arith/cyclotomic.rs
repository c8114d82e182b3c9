//! The cyclotomic field Q(zeta_n) as the quotient ring Q[x]/(Phi_n).
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(n)-1)` as
//! an integer numerator vector over one positive common denominator, reduced
//! so that the content of the numerator is coprime to the denominator. That
//! makes the representation canonical: two elements are equal iff their
//! orders, numerators and denominators coincide.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::poly::{cyclotomic_polynomial, euler_phi, RationalPolynomial};
use crate::arith::Rational;
use crate::error::{domain, Error, Result};

/// Shared context for one field Q(zeta_n): the order, its degree and the
/// integer coefficients of Phi_n.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    modulus: RationalPolynomial,
    // Phi_n without its leading 1, lowest degree first; sparse.
    tail: Vec<(usize, i64)>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Arc<Self>> {
        if order < 2 {
            return domain(format!("cyclotomic field order must be >= 2, got {order}"));
        }
        let modulus = cyclotomic_polynomial(order)?;
        let degree = euler_phi(order) as usize;
        debug_assert_eq!(modulus.degree(), Some(degree));
        let tail = modulus.coeffs()[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let v = c.numer().to_i64().expect("cyclotomic coefficient fits in i64");
                (k, v)
            })
            .collect();
        Ok(Arc::new(CyclotomicField { order, degree, modulus, tail }))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// phi(n), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Phi_n.
    pub fn modulus(&self) -> &RationalPolynomial {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber {
            field: Arc::clone(self),
            num: vec![BigInt::zero(); self.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: &Rational) -> CyclotomicNumber {
        let mut num = vec![BigInt::zero(); self.degree];
        num[0] = q.numer().clone();
        CyclotomicNumber::normalized(Arc::clone(self), num, q.denom().clone())
    }

    pub fn from_integer(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        self.from_rational(&Rational::from(k))
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut num = vec![BigInt::zero(); e.max(self.degree - 1) + 1];
        num[e] = BigInt::one();
        self.reduce_in_place(&mut num);
        CyclotomicNumber::normalized(Arc::clone(self), num, BigInt::one())
    }

    /// Element with the given power-basis coefficients. Longer inputs are
    /// reduced modulo Phi_n.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[Rational]) -> CyclotomicNumber {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if num.len() < self.degree {
            num.resize(self.degree, BigInt::zero());
        }
        self.reduce_in_place(&mut num);
        CyclotomicNumber::normalized(Arc::clone(self), num, den)
    }

    /// `1 - zeta^r`.
    pub fn one_minus_zeta(self: &Arc<Self>, r: i64) -> CyclotomicNumber {
        &self.one() - &self.zeta_pow(r)
    }

    /// `u_r^s = (1 - zeta^r)^(-s)`. Negative `s` multiplies out
    /// `(1 - zeta^r)^|s|` without inverting.
    pub fn unit_factor(self: &Arc<Self>, r: i64, s: i64) -> Result<CyclotomicNumber> {
        let n = self.order as i64;
        if !(1..n).contains(&r) {
            return domain(format!("unit factor index r={r} outside 1..={}", n - 1));
        }
        if s == 0 {
            return domain("unit factor exponent must be nonzero");
        }
        let base = self.one_minus_zeta(r);
        if s < 0 {
            Ok(base.pow_u(s.unsigned_abs()))
        } else {
            Ok(base.inv()?.pow_u(s as u64))
        }
    }

    /// Product of two integral power-basis vectors, reduced modulo Phi_n.
    /// No normalization: the fast path for dynamic programs over Z[zeta].
    pub(crate) fn mul_integral(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce_in_place(&mut prod);
        prod
    }

    /// `num / den` for an integral numerator vector of length phi(n).
    pub(crate) fn from_integral(self: &Arc<Self>, num: Vec<BigInt>, den: BigInt) -> CyclotomicNumber {
        CyclotomicNumber::normalized(Arc::clone(self), num, den)
    }

    // Reduce an integer polynomial modulo the monic Phi_n, truncating to degree.
    fn reduce_in_place(&self, num: &mut Vec<BigInt>) {
        let d = self.degree;
        for k in (d..num.len()).rev() {
            if num[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut num[k]);
            for &(j, t) in &self.tail {
                num[k - d + j] -= &c * t;
            }
        }
        num.truncate(d);
        num.resize(d, BigInt::zero());
    }
}

/// An element of Q(zeta_n).
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    fn normalized(field: Arc<CyclotomicField>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), field.degree);
        if num.iter().all(Zero::is_zero) {
            return CyclotomicNumber { field, num, den: BigInt::one() };
        }
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -std::mem::take(c));
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            num.iter_mut().for_each(|c| *c /= &g);
            den /= &g;
        }
        CyclotomicNumber { field, num, den }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Power-basis coefficients, exactly phi(n) of them.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()).expect("positive denominator"))
            .collect()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        Rational::new(self.num[k].clone(), self.den.clone()).expect("positive denominator")
    }

    /// Integer numerator vector and common denominator of the canonical form.
    pub fn raw_parts(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeff(0))
        } else {
            Err(Error::NotRational(Box::new(self.clone())))
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::OrderMismatch { left: self.field.order, right: other.field.order });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let num = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            let den = self.den.lcm(&other.den);
            let fa = &den / &self.den;
            let fb = &den / &other.den;
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a * &fa - b * &fb } else { a * &fa + b * &fb })
                .collect();
            return Self::normalized(Arc::clone(&self.field), num, den);
        };
        Self::normalized(Arc::clone(&self.field), num, self.den.clone())
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.field.degree;
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce_in_place(&mut prod);
        Self::normalized(Arc::clone(&self.field), prod, &self.den * &other.den)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::normalized(Arc::clone(&self.field), num, &self.den * q.denom())
    }

    pub fn to_polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("inverse of zero in Q(zeta_n)");
        }
        let (g, s, _) = self.to_polynomial().xgcd(self.field.modulus())?;
        // Phi_n is irreducible, so any nonzero reduced element is coprime to it.
        debug_assert_eq!(g.degree(), Some(0));
        Ok(self.field.from_coeffs(s.coeffs()))
    }

    pub fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow_u(e as u64))
        } else {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        }
    }

    /// Image under the automorphism zeta -> zeta^k, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.field.order as i64;
        if k.gcd(&n) != 1 {
            return domain(format!("zeta -> zeta^{k} is not an automorphism of Q(zeta_{n})"));
        }
        let mut acc = self.field.zero();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.field.zeta_pow(k * j as i64);
            let scaled = term.scale(&Rational::from_integer(c.clone()));
            acc = acc.add_unchecked(&scaled, false);
        }
        Ok(Self::normalized(Arc::clone(&self.field), acc.num, acc.den * &self.den))
    }

    /// Complex conjugation, zeta -> zeta^(n-1).
    pub fn conjugate(&self) -> Self {
        self.galois(self.field.order as i64 - 1)
            .expect("n - 1 is coprime to n")
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{}){}", self.field.order, self)
    }
}

/// `[c_0, c_1, ...]` in the power basis.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

macro_rules! field_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        /// Panics when the operands live in different fields; use the
        /// `checked_*` methods to get an error instead.
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                if let Err(e) = self.check_order(rhs) {
                    panic!("{e}");
                }
                $body(self, rhs)
            }
        }
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(rhs)
            }
        }
    };
}

field_binop!(Add, add, |a: &CyclotomicNumber, b| a.add_unchecked(b, false));
field_binop!(Sub, sub, |a: &CyclotomicNumber, b| a.add_unchecked(b, true));
field_binop!(Mul, mul, |a: &CyclotomicNumber, b| a.mul_unchecked(b));

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

/// Wire form: `{"n": order, "coeffs": ["p/q", ...]}` with exactly phi(n) entries.
#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    n: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr { n: self.order(), coeffs: self.coeffs() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(de)?;
        let field = CyclotomicField::new(repr.n).map_err(serde::de::Error::custom)?;
        if repr.coeffs.len() != field.degree() {
            return Err(serde::de::Error::custom(format!(
                "expected {} coefficients for n = {}, got {}",
                field.degree(),
                repr.n,
                repr.coeffs.len()
            )));
        }
        Ok(field.from_coeffs(&repr.coeffs))
    }
}

/// `u_r^s = (1 - zeta_n^r)^(-s)` in Q(zeta_n).
pub fn unit_factor(n: u32, r: i64, s: i64) -> Result<CyclotomicNumber> {
    CyclotomicField::new(n)?.unit_factor(r, s)
}

/// Rational value of `a`, or `Error::NotRational`.
pub fn as_rational(a: &CyclotomicNumber) -> Result<Rational> {
    a.as_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn field(n: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(n).unwrap()
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = field(4);
        let z = f.zeta_pow(1);
        assert_eq!((&z * &z).coeffs(), vec![rat(-1, 1), rat(0, 1)]);
        assert_eq!(&z * &f.one(), z);
    }

    #[test]
    fn zeta3_times_zeta3_squared_is_one() {
        let f = field(3);
        assert!((f.zeta_pow(1) * f.zeta_pow(2)).is_one());
        assert_eq!(f.zeta_pow(-1), f.zeta_pow(2));
    }

    #[test]
    fn inverse_of_one_minus_i() {
        let f = field(4);
        let a = f.one_minus_zeta(1);
        let b = a.inv().unwrap();
        assert_eq!(b.coeffs(), vec![rat(1, 2), rat(1, 2)]);
        assert!((&a * &b).is_one());
        assert_eq!(b.inv().unwrap(), a);
    }

    #[test]
    fn inverse_of_rational_scalar() {
        let f = field(2);
        assert_eq!(f.from_integer(2).inv().unwrap().as_rational().unwrap(), rat(1, 2));
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn unit_factor_examples() {
        assert_eq!(unit_factor(4, 1, 1).unwrap().coeffs(), vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(unit_factor(2, 1, 1).unwrap().as_rational().unwrap(), rat(1, 2));
        assert_eq!(unit_factor(4, 2, -2).unwrap().as_rational().unwrap(), rat(4, 1));
        assert!(unit_factor(4, 0, 1).is_err());
        assert!(unit_factor(4, 4, 1).is_err());
        assert!(unit_factor(4, 1, 0).is_err());
    }

    #[test]
    fn as_rational_examples() {
        let f = field(4);
        assert_eq!(f.from_coeffs(&[rat(3, 4), rat(0, 1)]).as_rational().unwrap(), rat(3, 4));
        let e = f.from_coeffs(&[rat(1, 2), rat(1, 2)]).as_rational().unwrap_err();
        assert!(matches!(e, Error::NotRational(_)));
        let p = unit_factor(3, 1, 1).unwrap() * unit_factor(3, 2, 1).unwrap();
        assert_eq!(p.as_rational().unwrap(), rat(1, 3));
    }

    #[test]
    fn order_mismatch() {
        let a = field(3).one();
        let b = field(4).one();
        assert!(matches!(a.checked_mul(&b), Err(Error::OrderMismatch { left: 3, right: 4 })));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn operator_panics_on_mismatch() {
        let _ = field(3).one() * field(5).one();
    }

    #[test]
    fn canonical_form_after_cancellation() {
        let f = field(5);
        let a = f.from_coeffs(&[rat(1, 3), rat(2, 3), rat(0, 1), rat(1, 6)]);
        let b = &(&a + &a) - &a;
        assert_eq!(a, b);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).raw_parts().1, &BigInt::one());
    }

    #[test]
    fn long_input_is_reduced() {
        // 1 + x + x^2 + x^3 + x^4 = 0 in Q(zeta_5)
        let f = field(5);
        assert!(f.from_coeffs(&vec![rat(1, 1); 5]).is_zero());
    }

    #[test]
    fn u_r_times_one_minus_zeta_r_is_one() {
        for n in 2..=30u32 {
            let f = field(n);
            for r in 1..n as i64 {
                let u = f.unit_factor(r, 1).unwrap();
                assert!((&u * &f.one_minus_zeta(r)).is_one(), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn product_of_all_u_r_is_one_over_n() {
        for n in 2..=30u32 {
            let f = field(n);
            let p = (1..n as i64).fold(f.one(), |acc, r| acc * f.unit_factor(r, 1).unwrap());
            assert_eq!(p.as_rational().unwrap(), rat(1, n as i64), "n={n}");
        }
    }

    #[test]
    fn conjugation_maps_u_r_to_u_n_minus_r() {
        for n in 2..=30u32 {
            let f = field(n);
            for r in 1..n as i64 {
                for s in [-2, -1, 1, 2, 3] {
                    let u = f.unit_factor(r, s).unwrap();
                    assert_eq!(u.conjugate(), f.unit_factor(n as i64 - r, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn galois_rejects_non_units() {
        assert!(field(6).one().galois(2).is_err());
    }

    #[test]
    fn json_shape() {
        let u = unit_factor(4, 1, 1).unwrap();
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(s, r#"{"n":4,"coeffs":["1/2","1/2"]}"#);
        let back: CyclotomicNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<CyclotomicNumber>(r#"{"n":4,"coeffs":["1"]}"#).is_err());
    }
}
