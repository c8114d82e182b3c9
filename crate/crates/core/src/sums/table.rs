use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{domain, Result};

// Powers cached per position: u_r^1..=u_r^MAX_CACHED and (1 - zeta^r)^1..=MAX_CACHED.
const MAX_CACHED: usize = 6;

/// Read-only table of the unit factors `u_r^s = (1 - zeta_n^r)^(-s)` for one
/// `n`. Build it once and share it across evaluations; every sum evaluator in
/// this crate has a `UnitTable` method form.
#[derive(Debug, Clone)]
pub struct UnitTable {
    field: Arc<CyclotomicField>,
    // positive[r-1][k-1] = u_r^k, negative[r-1][k-1] = (1 - zeta^r)^k
    positive: Vec<Vec<CyclotomicNumber>>,
    negative: Vec<Vec<CyclotomicNumber>>,
    // Integral numerators: n u_r = prod_{j != r} (1 - zeta^j) lies in Z[zeta].
    // scaled[r-1][k-1] = (n u_r)^k, plain[r-1][k-1] = (1 - zeta^r)^k.
    scaled: Vec<Vec<Vec<BigInt>>>,
    plain: Vec<Vec<Vec<BigInt>>>,
}

impl UnitTable {
    pub fn new(n: u32) -> Result<Self> {
        let field = CyclotomicField::new(n)?;
        let mut positive = Vec::with_capacity(n as usize - 1);
        let mut negative = Vec::with_capacity(n as usize - 1);
        let mut scaled = Vec::with_capacity(n as usize - 1);
        let mut plain = Vec::with_capacity(n as usize - 1);
        for r in 1..n as i64 {
            let base = field.one_minus_zeta(r);
            let inv = base.inv()?;
            positive.push(powers(&inv));
            negative.push(powers(&base));
            let n_q = Rational::from(n as i64);
            let mut scale = n_q.clone();
            let mut sc = Vec::with_capacity(MAX_CACHED);
            for p in positive.last().expect("just pushed") {
                sc.push(integral(&p.scale(&scale)));
                scale = &scale * &n_q;
            }
            scaled.push(sc);
            plain.push(negative.last().expect("just pushed").iter().map(integral).collect());
        }
        Ok(UnitTable { field, positive, negative, scaled, plain })
    }

    pub fn n(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// `u_r^s` for `1 <= r <= n-1`, `s != 0`.
    pub fn factor(&self, r: usize, s: i64) -> Result<CyclotomicNumber> {
        if r == 0 || r >= self.n() as usize {
            return domain(format!("unit factor index r={r} outside 1..={}", self.n() - 1));
        }
        if s == 0 {
            return domain("unit factor exponent must be nonzero");
        }
        Ok(self.factor_unchecked(r, s))
    }

    pub(crate) fn factor_unchecked(&self, r: usize, s: i64) -> CyclotomicNumber {
        let row = if s > 0 { &self.positive[r - 1] } else { &self.negative[r - 1] };
        let k = s.unsigned_abs() as usize;
        match row.get(k - 1) {
            Some(v) => v.clone(),
            None => row[0].pow_u(k as u64),
        }
    }

    /// Integral numerator of `u_r^s`: `(n u_r)^s` for `s > 0`, `(1 - zeta^r)^|s|`
    /// for `s < 0`. The true value is this divided by `n^max(s, 0)`.
    pub(crate) fn integral_factor(&self, r: usize, s: i64) -> Vec<BigInt> {
        let row = if s > 0 { &self.scaled[r - 1] } else { &self.plain[r - 1] };
        let k = s.unsigned_abs() as usize;
        if let Some(v) = row.get(k - 1) {
            return v.clone();
        }
        let mut acc = row[MAX_CACHED - 1].clone();
        for _ in MAX_CACHED..k {
            acc = self.field.mul_integral(&acc, &row[0]);
        }
        acc
    }
}

fn integral(a: &CyclotomicNumber) -> Vec<BigInt> {
    let (num, den) = a.raw_parts();
    assert!(den.is_one(), "expected an algebraic integer");
    num.to_vec()
}

fn powers(base: &CyclotomicNumber) -> Vec<CyclotomicNumber> {
    let mut out = Vec::with_capacity(MAX_CACHED);
    out.push(base.clone());
    for k in 1..MAX_CACHED {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}
