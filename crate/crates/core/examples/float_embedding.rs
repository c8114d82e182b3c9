//! Complex embeddings of exact values at a chosen precision.
//!
//! ```bash
//! cargo run -p qmhs --example float_embedding
//! ```

use qmhs::arith::{embed_complex, unit_factor};
use qmhs::sums::z_dp;

fn main() -> qmhs::Result<()> {
    // u_1 = 1/2 + (i/2) cot(pi/n)
    let u = unit_factor(3, 1, 1)?;
    let approx = embed_complex(&u, 20)?;
    let (re, im) = approx.to_strings();
    println!("u_1 for n = 3: {re} + {im}i");
    println!("(1/2) cot(pi/3) = {:.17e}", 0.5 / (std::f64::consts::PI / 3.0).tan());

    let v = z_dp(17, &"2,-1,3".parse()?)?;
    for digits in [15, 30, 60] {
        println!("Z_17(2,-1,3) ~ {} ({digits} digits)", embed_complex(&v, digits)?);
    }
    println!("as f64: {}", v.to_complex64());
    Ok(())
}
