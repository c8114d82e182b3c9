//! Left-hand sides, built only from `Z_n` and `Y_n` evaluations. Terms whose
//! index would contain a negative block length do not occur and are skipped.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{IdentityId, Param, Params};
use crate::arith::{CyclotomicNumber, Rational};
use crate::closed_forms::binom;
use crate::error::Result;
use crate::sums::{Composition, MultisetIndex, UnitTable};

/// Exact left-hand side of an identity instance.
pub fn lhs_value(id: IdentityId, p: &Params) -> Result<CyclotomicNumber> {
    id.check_domain(p)?;
    let table = UnitTable::new(p.get(Param::N)? as u32)?;
    lhs_value_with(&table, id, p)
}

/// As [`lhs_value`], reusing a prebuilt table whose order must equal `n`.
pub fn lhs_value_with(t: &UnitTable, id: IdentityId, p: &Params) -> Result<CyclotomicNumber> {
    use IdentityId::*;
    id.check_domain(p)?;
    let n = p.get(Param::N)?;
    if t.n() as i64 != n {
        return Err(crate::Error::OrderMismatch { left: t.n(), right: n as u32 });
    }
    let get = |k: Param| p.get(k).expect("domain checked");
    let ev = Eval { t };
    Ok(match id {
        ThNeg1 => ev.z_rep(-1, get(Param::L)),
        ThNeg2 => ev.z_rep(-2, get(Param::L)),
        Zz1m => ev.z_rep(1, get(Param::M)),
        ZzDet => t.power_sum(get(Param::S))?,
        Eq11112 => {
            let (a, b) = (get(Param::SplitA), get(Param::SplitB));
            &ev.z(&split_two(a, b)) + &ev.z(&split_two(b, a))
        }
        Th5 => ev.th5_sum(n, get(Param::M), get(Param::L), 1),
        Cor5Printed => ev.th5_sum(n, get(Param::M), get(Param::L), get(Param::PowerA)),
        Th5Rem1 => {
            let m = get(Param::M);
            ev.y(&[(2, m), (1, n - m - 2)])
        }
        Th5Rem2 => {
            let m = get(Param::M);
            let a = ev.y(&[(2, m - 1), (1, n - m - 1)]).scale(&int(n - m - 1));
            &a + &ev.y(&[(2, m), (1, n - m - 3)])
        }
        Prp5 => ev.prp5(n, get(Param::M), get(Param::L), 1),
        Prp5GeneralA => ev.prp5(n, get(Param::M), get(Param::L), get(Param::PowerA)),
        Th7 => ev.th7(n, get(Param::M), get(Param::L)),
        Th7Rem1 => {
            let m = get(Param::M);
            let tail = ev.y(&[(3, m), (1, n - m - 2)]).scale(&int(n));
            &ev.y(&[(2, m - 1), (1, 1)]) + &tail
        }
        Prp7 => {
            let (m, l) = (get(Param::M), get(Param::L));
            &(&ev.z_rep(2, m) * &ev.z_rep(-1, l)) - &ev.th7(n, m, l)
        }
        Th9Printed => ev.th9(n, get(Param::M), get(Param::L), true),
        Th9Corrected => ev.th9(n, get(Param::M), get(Param::L), false),
        Prp9Printed | Prp9Corrected => {
            let (m, l) = (get(Param::M), get(Param::L));
            let prod = &ev.z_rep(1, m) * &ev.z_rep(-2, l);
            &prod - &ev.th9(n, m, l, id == Prp9Printed)
        }
        ThMl11 => ev.ml11(n, get(Param::M), get(Param::L)),
        PrpMl11 => {
            let (m, l) = (get(Param::M), get(Param::L));
            &(&ev.z_rep(1, m) * &ev.z_rep(1, l)) - &ev.ml11(n, m, l)
        }
        Th222111 => {
            let (m, r) = (get(Param::M), get(Param::R));
            ev.y(&[(2, r), (1, m - r)])
        }
        Th222111R0 => ev.y(&[(1, get(Param::M))]),
        Th222111Rm1 => ev.y(&[(2, get(Param::M) - 1), (1, 1)]),
        Th222111Rm => ev.y(&[(2, get(Param::M))]),
        ThMlNeg => ev.ml_neg(n, get(Param::M), get(Param::L)),
        PrpMlNeg => {
            let (m, l) = (get(Param::M), get(Param::L));
            let prod = &ev.z_rep(-1, m) * &ev.z_rep(-1, l);
            &prod - &ev.ml_neg(n, m, l).scale(&int(n * n))
        }
        ConjReversal => {
            let c = conj_reversal_composition(n, get(Param::M), get(Param::S));
            &ev.z(&c).conjugate() - &ev.z(&c.reversed())
        }
    })
}

/// Deterministic composition of depth `m` with entries in `{±1, ±2, ±3}`,
/// drawn from a generator seeded by `(n, m, s)`.
pub fn conj_reversal_composition(n: i64, m: i64, s: i64) -> Composition {
    let seed = ((n as u64) << 40) ^ ((m as u64) << 32) ^ (s as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..m.max(0))
        .map(|_| {
            let mag = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                mag
            } else {
                -mag
            }
        })
        .collect();
    Composition::new(entries).expect("entries are nonzero")
}

fn int(k: i64) -> Rational {
    Rational::from(k)
}

fn split_two(a: i64, b: i64) -> Composition {
    let mut v = vec![1; a as usize];
    v.push(2);
    v.extend(std::iter::repeat_n(1, b as usize));
    Composition::new(v).expect("nonzero")
}

struct Eval<'a> {
    t: &'a UnitTable,
}

impl Eval<'_> {
    fn zero(&self) -> CyclotomicNumber {
        self.t.field().zero()
    }

    fn z(&self, c: &Composition) -> CyclotomicNumber {
        self.t.z_dp(c)
    }

    fn z_rep(&self, s: i64, len: i64) -> CyclotomicNumber {
        self.z(&Composition::repeated(s, len as usize).expect("nonzero exponent"))
    }

    fn y(&self, blocks: &[(i64, i64)]) -> CyclotomicNumber {
        match MultisetIndex::from_blocks(blocks) {
            Some(idx) => self.t.y_dp(&idx),
            None => self.zero(),
        }
    }

    // sum_j C(n-m+l-3-2j, l-1-j) Y(2A^(m-l+1+j), A^(n-m+l-3-2j))
    fn th5_sum(&self, n: i64, m: i64, l: i64, a: i64) -> CyclotomicNumber {
        let mut acc = self.zero();
        for j in 0..=n - m - 2 {
            let c = binom(n - m + l - 3 - 2 * j, l - 1 - j);
            if c.is_zero() {
                continue;
            }
            let y = self.y(&[(2 * a, m - l + 1 + j), (a, n - m + l - 3 - 2 * j)]);
            acc = &acc + &y.scale(&c);
        }
        acc
    }

    // Z(A^m) Z(-A^l) - [C(n-m+l-1, n-m-1) Z(A^(m-l)) + n^A * th5_sum]
    fn prp5(&self, n: i64, m: i64, l: i64, a: i64) -> CyclotomicNumber {
        let prod = &self.z_rep(a, m) * &self.z_rep(-a, l);
        let head = self.z_rep(a, m - l).scale(&binom(n - m + l - 1, n - m - 1));
        let tail = self.th5_sum(n, m, l, a).scale(&int(n).pow(a as i32));
        &prod - &(&head + &tail)
    }

    fn th7(&self, n: i64, m: i64, l: i64) -> CyclotomicNumber {
        let mut s = self.zero();
        for j in 0..=n - m - 2 {
            s = &s + &self.y(&[(3, m - l + 1 + j), (2, l - 1 - j), (1, n - m - 2 - j)]);
        }
        &self.y(&[(2, m - l), (1, l)]) + &s.scale(&int(n))
    }

    fn th9(&self, n: i64, m: i64, l: i64, printed: bool) -> CyclotomicNumber {
        let ones = if printed { n - m - l - 1 } else { n - m - 1 };
        let mut s = self.zero();
        for j in 0..=n - m - 2 {
            s = &s + &self.y(&[(3, m - l + 1 + j), (2, n - m - 2 - j), (1, l - 1 - j)]);
        }
        &self.y(&[(2, m - l), (1, ones)]).scale(&int(n)) + &s.scale(&int(n * n))
    }

    fn ml11(&self, n: i64, m: i64, l: i64) -> CyclotomicNumber {
        let mut acc = self.zero();
        for j in 0..=n - m - 1 {
            let y = self.y(&[(2, l - j), (1, m - l + 2 * j)]);
            acc = &acc + &y.scale(&binom(m - l + 2 * j, j));
        }
        acc
    }

    fn ml_neg(&self, n: i64, m: i64, l: i64) -> CyclotomicNumber {
        let mut acc = self.zero();
        for j in 0..=n - m - 1 {
            let y = self.y(&[(2, n - m - j - 1), (1, m - l + 2 * j)]);
            acc = &acc + &y.scale(&binom(m - l + 2 * j, j));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(pairs: &[(Param, i64)]) -> Params {
        Params::from_pairs(pairs)
    }

    fn q(x: CyclotomicNumber) -> Rational {
        x.as_rational().unwrap()
    }

    #[test]
    fn examples() {
        use Param::*;
        assert_eq!(q(lhs_value(IdentityId::Th5, &p(&[(N, 4), (M, 2), (L, 2)])).unwrap()), rat(3, 4));
        assert_eq!(q(lhs_value(IdentityId::Th7, &p(&[(N, 4), (M, 1), (L, 1)])).unwrap()), rat(1, 1));
        assert_eq!(q(lhs_value(IdentityId::ThMlNeg, &p(&[(N, 3), (M, 1), (L, 1)])).unwrap()), rat(1, 1));
        assert_eq!(q(lhs_value(IdentityId::Th222111, &p(&[(N, 3), (M, 2), (R, 1)])).unwrap()), rat(1, 3));
        assert_eq!(q(lhs_value(IdentityId::Th9Printed, &p(&[(N, 3), (M, 1), (L, 1)])).unwrap()), rat(0, 1));
        assert_eq!(q(lhs_value(IdentityId::Th9Corrected, &p(&[(N, 4), (M, 2), (L, 1)])).unwrap()), rat(4, 1));
        let cor = p(&[(N, 3), (M, 1), (L, 1), (PowerA, 2)]);
        assert_eq!(q(lhs_value(IdentityId::Cor5Printed, &cor).unwrap()), rat(-1, 9));
    }

    #[test]
    fn composition_is_seeded() {
        let a = conj_reversal_composition(7, 3, 2);
        assert_eq!(a, conj_reversal_composition(7, 3, 2));
        assert_eq!(a.depth(), 3);
        assert!(a.entries().iter().all(|e| (1..=3).contains(&e.abs())));
    }

    #[test]
    fn table_order_must_match() {
        let t = UnitTable::new(5).unwrap();
        let params = p(&[(Param::N, 4), (Param::M, 1)]);
        assert!(lhs_value_with(&t, IdentityId::Zz1m, &params).is_err());
    }
}
