//! Exact rational right-hand sides of the closed-form identities.
//!
//! Every binomial goes through [`binom`], which is total: it vanishes for a
//! negative top, a negative bottom, or a bottom above the top.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::Rational;
use crate::error::{domain, Result};
use crate::identities::{IdentityId, Param, Params};

/// `C(a, b)` as an integer, zero outside `0 <= b <= a`.
pub fn binom_int(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::from(0);
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

/// `C(a, b)` under the total convention (see module docs).
pub fn binom(a: i64, b: i64) -> Rational {
    Rational::from_integer(binom_int(a, b))
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn int(k: i64) -> Rational {
    Rational::from(k)
}

/// Depth-m all-ones sum: `C(n-1, m) / (m+1)`.
pub fn cf_all_ones(n: i64, m: i64) -> Rational {
    binom(n - 1, m) / int(m + 1)
}

/// Depth-1 sum `Z_n(s)` as the determinant of the `s x s` lower Hessenberg
/// matrix with first column `k/(k+1) C(n-1, k)`, entries
/// `C(n-1, i-j+1) / (i-j+2)` for `2 <= j <= i` and ones on the superdiagonal.
///
/// Expanding along the last row gives `D_k = sum_{j=1}^{k} (-1)^{k-j} H[k][j] D_{j-1}`
/// with `D_0 = 1`.
pub fn cf_depth1_det(n: i64, s: i64) -> Result<Rational> {
    if s < 1 {
        return domain(format!("determinant size must be >= 1, got {s}"));
    }
    let entry = |i: i64, j: i64| -> Rational {
        if j == 1 {
            int(i) / int(i + 1) * binom(n - 1, i)
        } else {
            binom(n - 1, i - j + 1) / int(i - j + 2)
        }
    };
    let mut d = vec![Rational::one()];
    for k in 1..=s {
        let mut acc = Rational::zero();
        for j in 1..=k {
            let term = entry(k, j) * &d[(j - 1) as usize];
            acc = acc + sign(k - j) * term;
        }
        d.push(acc);
    }
    Ok(d.pop().expect("s >= 1"))
}

/// `Z_n(-B, ..., -B)` with `l` entries: `C(n, l)` for `B = 1`,
/// `C(n, l) + 2 (-1)^{n-l-1} C(n, 2n-2l)` for `B = 2`.
pub fn cf_negative(n: i64, l: i64, b: i64) -> Result<Rational> {
    match b {
        1 => Ok(binom(n, l)),
        2 => Ok(binom(n, l) + int(2) * sign(n - l - 1) * binom(n, 2 * n - 2 * l)),
        _ => domain(format!("no closed form for negative power B = {b}")),
    }
}

/// `Z_n(1^a, 2, 1^b) + Z_n(1^b, 2, 1^a)` for `a + b + 1 = m`:
/// `-m! (n - 2m - 3) / (m+2)! * C(n-1, m)`.
pub fn cf_asym_pair(n: i64, m: i64) -> Rational {
    -(int(n - 2 * m - 3) / int((m + 1) * (m + 2))) * binom(n - 1, m)
}

/// `Y_n(2^r, 1^{m-r}) = C(m, r) (C(n-1, m) + (-1)^r C(n-1, m+r+1)) / ((r+1) n)`.
pub fn cf_y_two_one(n: i64, m: i64, r: i64) -> Result<Rational> {
    if r < 0 || r > m {
        return domain(format!("need 0 <= r <= m, got r={r}, m={m}"));
    }
    Ok(binom(m, r) * (binom(n - 1, m) + sign(r) * binom(n - 1, m + r + 1)) / int((r + 1) * n))
}

fn all_twos(n: i64, m: i64) -> Rational {
    binom(n - 1, m) + sign(m) * binom(n - 1, 2 * m + 1)
}

/// Exact right-hand side of an identity instance. Product expansions are
/// checked as `lhs - rhs = 0`, so their right-hand side is zero.
pub fn rhs_value(id: IdentityId, p: &Params) -> Result<Rational> {
    use IdentityId::*;
    id.check_domain(p)?;
    let n = p.get(Param::N)?;
    let get = |k: Param| p.get(k);
    Ok(match id {
        ThNeg1 => cf_negative(n, get(Param::L)?, 1)?,
        ThNeg2 => cf_negative(n, get(Param::L)?, 2)?,
        Zz1m => cf_all_ones(n, get(Param::M)?),
        ZzDet => cf_depth1_det(n, get(Param::S)?)?,
        Eq11112 => cf_asym_pair(n, get(Param::M)?),
        Th5 | Cor5Printed => {
            let (m, l) = (get(Param::M)?, get(Param::L)?);
            binom(n - 1, m) * (binom(n, l) - binom(m + 1, l)) / int(n * (m + 1))
        }
        Th5Rem1 => {
            let m = get(Param::M)?;
            int(n - m - 1) * binom(n - 1, m) / int(n * (m + 1))
        }
        Th5Rem2 => {
            let m = get(Param::M)?;
            int((n + m) * (n - m - 1)) * binom(n - 1, m) / int(2 * n * (m + 1))
        }
        Th7 => {
            let (m, l) = (get(Param::M)?, get(Param::L)?);
            all_twos(n, m) * binom(n, l) / int(n * (m + 1))
        }
        Th7Rem1 => {
            let m = get(Param::M)?;
            all_twos(n, m) / int(m + 1)
        }
        Th9Printed | Th9Corrected => {
            let (m, l) = (get(Param::M)?, get(Param::L)?);
            binom(n - 1, m) * (binom(n, n - l) + int(2) * sign(n - l - 1) * binom(n, 2 * n - 2 * l))
                / int(m + 1)
        }
        ThMl11 => {
            let (m, l) = (get(Param::M)?, get(Param::L)?);
            binom(n - 1, m) * binom(n - 1, l) / int((m + 1) * (l + 1))
        }
        Th222111 => cf_y_two_one(n, get(Param::M)?, get(Param::R)?)?,
        Th222111R0 => binom(n, get(Param::M)? + 1) / int(n),
        Th222111Rm1 => {
            let m = get(Param::M)?;
            (binom(n - 1, m) + sign(m - 1) * binom(n - 1, 2 * m)) / int(n)
        }
        Th222111Rm => {
            let m = get(Param::M)?;
            all_twos(n, m) / int((m + 1) * n)
        }
        ThMlNeg => {
            let (m, l) = (get(Param::M)?, get(Param::L)?);
            binom(n, m) * binom(n, l) / int(n * n)
        }
        Prp5 | Prp5GeneralA | Prp7 | Prp9Printed | Prp9Corrected | PrpMl11 | PrpMlNeg
        | ConjReversal => Rational::zero(),
    })
}
