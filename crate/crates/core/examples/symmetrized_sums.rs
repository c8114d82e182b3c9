//! `Y_n`: the sum of `Z_n` over every distinct ordering of a multiset index.
//!
//! ```bash
//! cargo run -p qmhs --example symmetrized_sums
//! ```

use qmhs::sums::{y_dp, y_oracle, z_dp};
use qmhs::{Composition, MultisetIndex};

fn main() -> qmhs::Result<()> {
    let idx: MultisetIndex = "2:1,1:1".parse()?;
    let y = y_dp(4, &idx)?;
    println!("Y_4{idx} = {}", y.as_rational()?);
    let by_hand = &z_dp(4, &"2,1".parse::<Composition>()?)? + &z_dp(4, &"1,2".parse::<Composition>()?)?;
    assert_eq!(y, by_hand);

    // symmetric in the unit factors, hence always rational
    for text in ["3:2", "3:1,1:1", "2:3,1:2", "-1:2,2:1"] {
        let idx: MultisetIndex = text.parse()?;
        let v = y_dp(9, &idx)?;
        println!("Y_9{idx} = {}  (orderings: {})", v.as_rational()?, idx.permutation_count());
        assert_eq!(v, y_oracle(9, &idx)?);
    }

    println!("Y_5{{}} = {}", y_dp(5, &MultisetIndex::empty())?.as_rational()?);
    Ok(())
}
