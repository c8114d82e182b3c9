//! Rational closed forms, checked against the sums they evaluate.
//!
//! ```bash
//! cargo run -p qmhs --example closed_forms
//! ```

use qmhs::closed_forms::{binom, cf_all_ones, cf_asym_pair, cf_depth1_det, cf_negative, cf_y_two_one};
use qmhs::sums::{power_sum, y_dp, z_dp};
use qmhs::{Composition, MultisetIndex};

fn main() -> qmhs::Result<()> {
    println!("C(7,3) = {}, C(3,7) = {}, C(-1,0) = {}", binom(7, 3), binom(3, 7), binom(-1, 0));

    let n = 11;
    for m in 0..n as i64 {
        let z = z_dp(n, &Composition::repeated(1, m as usize)?)?;
        assert_eq!(z.as_rational()?, cf_all_ones(n as i64, m));
    }
    println!("Z_{n}(1^m) = C(n-1,m)/(m+1) for every m");

    for s in 1..=6 {
        let det = cf_depth1_det(n as i64, s)?;
        assert_eq!(power_sum(n, s)?.as_rational()?, det);
        println!("Z_{n}({s}) = {det}");
    }

    for b in [1, 2] {
        let l = 4;
        let z = z_dp(n, &Composition::repeated(-b, l)?)?;
        println!("Z_{n}(-{b}^{l}) = {} = {}", z.as_rational()?, cf_negative(n as i64, l as i64, b)?);
    }

    let pair = &z_dp(n, &"1,2,1".parse()?)? + &z_dp(n, &"1,2,1".parse()?)?;
    println!("2 Z_{n}(1,2,1) = {} = {}", pair.as_rational()?, cf_asym_pair(n as i64, 3));

    let y = y_dp(n, &MultisetIndex::from_pairs(&[(2, 2), (1, 3)])?)?;
    println!("Y_{n}(2^2,1^3) = {} = {}", y.as_rational()?, cf_y_two_one(n as i64, 5, 2)?);
    Ok(())
}
