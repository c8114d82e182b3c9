//! Finite q-multiple harmonic sums `Z_n` at `q = zeta_n` and their
//! permutation-symmetrized versions `Y_n`.
//!
//! Every quantity has two evaluators: a literal enumeration (`z_direct`,
//! `y_oracle`) kept deliberately naive, and a dynamic program (`z_dp`,
//! `y_dp`) used everywhere else. Tests hold the two against each other.

mod index;
mod table;

use std::collections::HashMap;
use std::sync::Arc;

pub use index::{Composition, MultisetIndex};
pub use table::UnitTable;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{CyclotomicField, CyclotomicNumber};
use crate::error::{domain, Result};

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return domain(format!("n must be >= 2, got {n}"));
    }
    Ok(())
}

/// `Z_n(s_1, ..., s_m)` by enumerating every tuple `1 <= i_1 < ... < i_m <= n-1`.
///
/// The empty composition gives 1 (one empty tuple); depth above `n - 1`
/// gives 0.
pub fn z_direct(n: u32, c: &Composition) -> Result<CyclotomicNumber> {
    check_n(n)?;
    let field = CyclotomicField::new(n)?;
    let mut memo = HashMap::new();
    z_direct_in(&field, c, &mut memo)
}

fn z_direct_in(
    field: &Arc<CyclotomicField>,
    c: &Composition,
    memo: &mut HashMap<(i64, i64), CyclotomicNumber>,
) -> Result<CyclotomicNumber> {
    let n = field.order() as i64;
    let s = c.entries();
    let m = s.len();
    let mut total = field.zero();
    if m as i64 > n - 1 {
        return Ok(total);
    }
    // idx holds i_1 < ... < i_m; advance like an odometer over combinations.
    let mut idx: Vec<i64> = (1..=m as i64).collect();
    loop {
        let mut term = field.one();
        for (&i, &e) in idx.iter().zip(s) {
            let u = match memo.get(&(i, e)) {
                Some(u) => u.clone(),
                None => {
                    let u = field.unit_factor(i, e)?;
                    memo.insert((i, e), u.clone());
                    u
                }
            };
            term = &term * &u;
        }
        total = &total + &term;

        let mut k = m;
        loop {
            if k == 0 {
                return Ok(total);
            }
            k -= 1;
            // largest value slot k may take is n-1-(m-1-k)
            if idx[k] < n - (m - k) as i64 {
                idx[k] += 1;
                for t in k + 1..m {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `Z_n(s_1, ..., s_m)` by the prefix-sum recurrence
/// `F_t(i) = F_t(i-1) + u_i^{s_t} F_{t-1}(i-1)`, `F_0 = 1`, `F_t(0) = 0`.
pub fn z_dp(n: u32, c: &Composition) -> Result<CyclotomicNumber> {
    check_n(n)?;
    Ok(UnitTable::new(n)?.z_dp(c))
}

/// Symmetrized sum `Y_n(idx)`: `Z_n` summed over every distinct ordering of
/// the multiset, each ordering enumerated explicitly. `Y_n` of the empty
/// multiset is 0.
pub fn y_oracle(n: u32, idx: &MultisetIndex) -> Result<CyclotomicNumber> {
    check_n(n)?;
    let field = CyclotomicField::new(n)?;
    let mut total = field.zero();
    if idx.is_empty() {
        return Ok(total);
    }
    let mut memo = HashMap::new();
    let mut seq = idx.sorted_entries();
    loop {
        total = &total + &z_direct_in(&field, &Composition::new(seq.clone())?, &mut memo)?;
        if !next_permutation(&mut seq) {
            return Ok(total);
        }
    }
}

// Lexicographic successor; false once `seq` is the last (descending) arrangement.
fn next_permutation(seq: &mut [i64]) -> bool {
    let Some(i) = seq.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = seq.iter().rposition(|&x| x > seq[i]).expect("pivot has a successor");
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

/// `Y_n(idx)` by a counts dynamic program over positions `1..n-1`.
pub fn y_dp(n: u32, idx: &MultisetIndex) -> Result<CyclotomicNumber> {
    check_n(n)?;
    Ok(UnitTable::new(n)?.y_dp(idx))
}

/// Depth-1 sum `Z_n(s) = sum_i u_i^s`, rational for every `s >= 1`.
pub fn power_sum(n: u32, s: i64) -> Result<CyclotomicNumber> {
    check_n(n)?;
    UnitTable::new(n)?.power_sum(s)
}

/// Elementary symmetric polynomial `e_l` of the values `(1 - zeta^j)^s`,
/// `j = 1..n-1`, by the product expansion of `prod_j (1 + (1 - zeta^j)^s X)`.
/// Equals `Z_n(-s, ..., -s)` with `l` entries; 0 when `l > n - 1`.
pub fn elem_sym_of_powers(n: u32, s: i64, l: usize) -> Result<CyclotomicNumber> {
    check_n(n)?;
    if s < 1 {
        return domain(format!("power s must be >= 1, got {s}"));
    }
    let field = CyclotomicField::new(n)?;
    if l > n as usize - 1 {
        return Ok(field.zero());
    }
    let mut e = vec![field.zero(); l + 1];
    e[0] = field.one();
    for j in 1..n as i64 {
        let v = field.one_minus_zeta(j).pow_u(s as u64);
        for k in (1..=l.min(j as usize)).rev() {
            e[k] = &e[k] + &(&v * &e[k - 1]);
        }
    }
    Ok(e.swap_remove(l))
}

impl UnitTable {
    /// See [`z_dp`]. Runs over integral numerators (see
    /// [`UnitTable::integral_factor`]) and divides once at the end.
    pub fn z_dp(&self, c: &Composition) -> CyclotomicNumber {
        let n = self.n() as usize;
        let field = self.field();
        if c.depth() > n - 1 {
            return field.zero();
        }
        let zero = vec![BigInt::zero(); field.degree()];
        // prev[i] = F_{t-1}(i) for i = 0..n-1
        let mut prev = vec![unit_vector(field.degree()); n];
        let mut weight = 0u32;
        for (t, &s) in c.entries().iter().enumerate() {
            weight += s.max(0) as u32;
            let mut cur = vec![zero.clone(); n];
            // F_t(i) vanishes for i < t + 1
            for i in t + 1..n {
                let term = field.mul_integral(&self.integral_factor(i, s), &prev[i - 1]);
                cur[i] = add(&cur[i - 1], &term);
            }
            prev = cur;
        }
        let den = BigInt::from(n).pow(weight);
        field.from_integral(prev.swap_remove(n - 1), den)
    }

    /// See [`y_dp`]. State is the vector of multiplicities consumed so far
    /// (one digit per distinct exponent, mixed radix); positions are swept in
    /// increasing order and each state is updated in place from states of
    /// smaller index, which still hold the previous position's values.
    /// Arithmetic is over integral numerators, as in [`UnitTable::z_dp`].
    pub fn y_dp(&self, idx: &MultisetIndex) -> CyclotomicNumber {
        let n = self.n() as usize;
        let field = self.field();
        if idx.is_empty() || idx.depth() > n - 1 {
            return field.zero();
        }
        let pairs: Vec<(i64, usize)> = idx.pairs().collect();
        let factors: Vec<Vec<Vec<BigInt>>> = pairs
            .iter()
            .map(|&(e, _)| (1..n).map(|i| self.integral_factor(i, e)).collect())
            .collect();
        let weight: u32 = pairs.iter().map(|&(e, c)| e.max(0) as u32 * c as u32).sum();
        let mut stride = Vec::with_capacity(pairs.len());
        let mut states = 1usize;
        for &(_, c) in &pairs {
            stride.push(states);
            states *= c + 1;
        }
        let digits = |state: usize, t: usize| (state / stride[t]) % (pairs[t].1 + 1);
        let depth_of: Vec<usize> = (0..states)
            .map(|st| (0..pairs.len()).map(|t| digits(st, t)).sum())
            .collect();
        let total = idx.depth();

        let mut g: Vec<Option<Vec<BigInt>>> = vec![None; states];
        g[0] = Some(unit_vector(field.degree()));
        for i in 1..n {
            for st in (1..states).rev() {
                // at most i positions are available so far, and the
                // remaining entries must still fit in positions i+1..n-1
                if depth_of[st] > i || total - depth_of[st] > n - 1 - i {
                    continue;
                }
                let mut acc: Option<Vec<BigInt>> = None;
                for t in 0..pairs.len() {
                    if digits(st, t) == 0 {
                        continue;
                    }
                    let Some(prev) = &g[st - stride[t]] else { continue };
                    let term = field.mul_integral(&factors[t][i - 1], prev);
                    acc = Some(match acc {
                        Some(a) => add(&a, &term),
                        None => term,
                    });
                }
                if let Some(extra) = acc {
                    g[st] = Some(match g[st].take() {
                        Some(old) => add(&old, &extra),
                        None => extra,
                    });
                }
            }
        }
        match g.pop().flatten() {
            Some(num) => field.from_integral(num, BigInt::from(n).pow(weight)),
            None => field.zero(),
        }
    }

    /// See [`power_sum`].
    pub fn power_sum(&self, s: i64) -> Result<CyclotomicNumber> {
        if s < 1 {
            return domain(format!("power sum exponent must be >= 1, got {s}"));
        }
        Ok(self.z_dp(&Composition::repeated(s, 1)?))
    }
}

fn unit_vector(d: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d];
    v[0] = BigInt::one();
    v
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};

    fn comp(v: &[i64]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn ms(v: &[(i64, usize)]) -> MultisetIndex {
        MultisetIndex::from_pairs(v).unwrap()
    }

    fn q(x: CyclotomicNumber) -> Rational {
        x.as_rational().unwrap()
    }

    #[test]
    fn z_direct_examples() {
        assert_eq!(q(z_direct(5, &comp(&[1, 1])).unwrap()), rat(2, 1));
        assert_eq!(q(z_direct(7, &Composition::empty()).unwrap()), rat(1, 1));
        assert_eq!(q(z_direct(4, &comp(&[-2, -2])).unwrap()), rat(4, 1));
        assert!(z_direct(1, &Composition::empty()).is_err());
    }

    #[test]
    fn z_dp_examples() {
        assert_eq!(q(z_dp(4, &comp(&[2])).unwrap()), rat(1, 4));
        let y = z_dp(3, &comp(&[2, 1])).unwrap() + z_dp(3, &comp(&[1, 2])).unwrap();
        assert_eq!(q(y), rat(1, 3));
        let c = comp(&[3, -1, 2]);
        assert_eq!(z_dp(12, &c).unwrap(), z_direct(12, &c).unwrap());
    }

    #[test]
    fn depth_beyond_n_minus_one_is_zero() {
        let c = comp(&[1, 2, 1, 1]);
        assert!(z_dp(4, &c).unwrap().is_zero());
        assert!(z_direct(4, &c).unwrap().is_zero());
        assert!(y_dp(4, &ms(&[(1, 4)])).unwrap().is_zero());
    }

    #[test]
    fn y_examples() {
        assert_eq!(q(y_oracle(4, &ms(&[(2, 1), (1, 1)])).unwrap()), rat(3, 4));
        assert!(y_oracle(9, &MultisetIndex::empty()).unwrap().is_zero());
        assert!(y_dp(9, &MultisetIndex::empty()).unwrap().is_zero());
        assert_eq!(q(y_oracle(3, &ms(&[(2, 1), (1, 1)])).unwrap()), rat(1, 3));
        assert_eq!(q(y_dp(4, &ms(&[(2, 2)])).unwrap()), rat(1, 4));
        assert_eq!(q(y_dp(4, &ms(&[(3, 2)])).unwrap()), rat(1, 16));
        let idx = ms(&[(2, 2), (1, 3)]);
        assert_eq!(y_dp(10, &idx).unwrap(), y_oracle(10, &idx).unwrap());
    }

    #[test]
    fn y4_of_three_one() {
        // p_3 p_1 - p_4 = (-3/8)(3/2) + 7/16
        assert_eq!(q(y_dp(4, &ms(&[(3, 1), (1, 1)])).unwrap()), rat(-1, 8));
    }

    #[test]
    fn power_sums() {
        assert_eq!(q(power_sum(4, 1).unwrap()), rat(3, 2));
        assert_eq!(q(power_sum(4, 2).unwrap()), rat(1, 4));
        assert_eq!(q(power_sum(3, 3).unwrap()), rat(0, 1));
        assert_eq!(q(power_sum(3, 4).unwrap()), rat(-1, 9));
        assert!(power_sum(4, 0).is_err());
    }

    #[test]
    fn elementary_symmetric_of_powers() {
        assert_eq!(q(elem_sym_of_powers(5, 1, 2).unwrap()), rat(10, 1));
        assert_eq!(q(elem_sym_of_powers(4, 2, 2).unwrap()), rat(4, 1));
        for n in 2..8 {
            assert!(elem_sym_of_powers(n, 3, 0).unwrap().is_one());
            assert!(elem_sym_of_powers(n, 1, n as usize).unwrap().is_zero());
        }
        assert!(elem_sym_of_powers(4, 0, 1).is_err());
    }

    #[test]
    fn next_permutation_walks_distinct_orderings() {
        let mut v = vec![1, 1, 2, 2, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 10);
        assert_eq!(v, vec![2, 2, 2, 1, 1]);
    }

    #[test]
    fn conjugation_reverses_the_index() {
        let t = UnitTable::new(9).unwrap();
        for c in [comp(&[1, 2]), comp(&[3, -1, 1]), comp(&[-2, 1, 1, 2])] {
            assert_eq!(t.z_dp(&c).conjugate(), t.z_dp(&c.reversed()));
        }
    }
}
