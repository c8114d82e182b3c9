//! Check single identity instances exactly.
//!
//! ```bash
//! cargo run -p qmhs --example verify_identity
//! ```

use qmhs::identities::{lhs_value, verify_one};
use qmhs::report::ExactValue;
use qmhs::{IdentityId, Param, Params};

fn main() -> qmhs::Result<()> {
    let cases = [
        ("TH222111", Params::new().with(Param::N, 4).with(Param::M, 2).with(Param::R, 1)),
        ("TH5", Params::new().with(Param::N, 4).with(Param::M, 2).with(Param::L, 2)),
        ("TH9_CORRECTED", Params::new().with(Param::N, 4).with(Param::M, 2).with(Param::L, 1)),
        ("TH9_PRINTED", Params::new().with(Param::N, 3).with(Param::M, 1).with(Param::L, 1)),
        (
            "COR5_PRINTED",
            Params::new().with(Param::N, 3).with(Param::M, 1).with(Param::L, 1).with(Param::PowerA, 2),
        ),
    ];
    for (tag, p) in cases {
        let id: IdentityId = tag.parse()?;
        let r = verify_one(id, &p)?;
        let lhs = ExactValue::from_number(&r.lhs).to_string();
        println!("{:<14} {:<16} lhs={lhs:<5} rhs={:<5} {}", id.tag(), p.to_string(), r.rhs.to_string(), r.status);
    }

    // product identities compare lhs - rhs against zero
    let p = Params::new().with(Param::N, 7).with(Param::M, 3).with(Param::L, 2);
    println!("PRPML11 {p}: difference = {}", lhs_value(IdentityId::PrpMl11, &p)?);

    // out-of-domain parameters are an error, not a failure
    let bad = Params::new().with(Param::N, 4).with(Param::M, 1).with(Param::L, 2);
    println!("TH5 {bad}: {}", verify_one(IdentityId::Th5, &bad).unwrap_err());
    Ok(())
}
