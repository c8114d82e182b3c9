//! Exact arithmetic in Q(zeta_n).
//!
//! ```bash
//! cargo run -p qmhs --example cyclotomic_arithmetic
//! ```

use qmhs::arith::{cyclotomic_polynomial, unit_factor};
use qmhs::{CyclotomicField, Rational};

fn main() -> qmhs::Result<()> {
    let n = 12;
    println!("Phi_{n}(x) = {}", cyclotomic_polynomial(n)?);

    let k = CyclotomicField::new(n)?;
    let z = k.zeta_pow(1);
    println!("zeta^{n} = {}", z.pow_u(n as u64));
    println!("zeta^6 = {}", k.zeta_pow(6));

    // u_1 = 1 / (1 - zeta); times (1 - zeta) gives 1 back
    let u1 = unit_factor(n, 1, 1)?;
    println!("u_1 = {u1}");
    println!("u_1 (1 - zeta) = {}", &u1 * &k.one_minus_zeta(1));

    // the product of every u_r is the rational 1/n
    let prod = (1..n as i64).map(|r| k.unit_factor(r, 1)).collect::<qmhs::Result<Vec<_>>>()?;
    let prod = prod.iter().fold(k.one(), |acc, u| &acc * u);
    println!("u_1 ... u_{} = {}", n - 1, prod.as_rational()?);

    // complex conjugation swaps u_r and u_{n-r}
    assert_eq!(u1.conjugate(), k.unit_factor(n as i64 - 1, 1)?);

    let half = k.from_rational(&"1/2".parse::<Rational>()?);
    println!("1/2 + zeta = {}", &half + &z);
    println!("(1/2 + zeta)^-1 = {}", (&half + &z).inv()?);
    println!("as JSON: {}", serde_json::to_string(&u1).expect("serializable"));
    Ok(())
}
