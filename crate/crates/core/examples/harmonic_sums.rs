//! Finite q-multiple harmonic sums `Z_n(s_1, ..., s_m)` at `q = zeta_n`.
//!
//! ```bash
//! cargo run -p qmhs --example harmonic_sums
//! ```

use qmhs::sums::{elem_sym_of_powers, power_sum, z_direct, z_dp};
use qmhs::{Composition, UnitTable};

fn main() -> qmhs::Result<()> {
    let c: Composition = "1,1".parse()?;
    println!("Z_5{c} = {}", z_dp(5, &c)?.as_rational()?);

    // negative entries give polynomials in zeta, still rational here
    let c: Composition = "-2,-2".parse()?;
    println!("Z_4{c} = {}", z_dp(4, &c)?.as_rational()?);
    println!("e_2 of (1 - zeta^j)^2 = {}", elem_sym_of_powers(4, 2, 2)?.as_rational()?);

    // a mixed index is generally irrational
    let c: Composition = "2,1".parse()?;
    let v = z_dp(6, &c)?;
    println!("Z_6{c} = {v}");
    assert_eq!(v, z_direct(6, &c)?);
    println!("conj Z_6{c} = Z_6{} : {}", c.reversed(), v.conjugate() == z_dp(6, &c.reversed())?);

    // depth-one sums are rational for s >= 1
    for s in 1..=4 {
        println!("Z_7({s}) = {}", power_sum(7, s)?.as_rational()?);
    }

    // reuse one table across many evaluations
    let t = UnitTable::new(10)?;
    for m in 0..10 {
        let v = t.z_dp(&Composition::repeated(1, m)?);
        println!("Z_10(1^{m}) = {}", v.as_rational()?);
    }
    Ok(())
}
