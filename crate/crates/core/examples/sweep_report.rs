//! Sweep identities over their domains and write machine-readable reports.
//!
//! ```bash
//! cargo run -p qmhs --example sweep_report
//! ```

use qmhs::identities::{domain_instances, sweep, SweepOptions};
use qmhs::report::{parse_json_reports, write_reports, Format, Summary};
use qmhs::{IdentityId, Status};

fn main() -> qmhs::Result<()> {
    println!("ZZ1M instances up to n = 6: {}", domain_instances(IdentityId::Zz1m, 6).len());

    let opts = SweepOptions { n_max: 7, jobs: 2, timing: false };
    let reports = sweep(IdentityId::Th9Printed, &opts)?;
    let summary = Summary::of(&reports);
    println!("TH9_PRINTED up to n = 7: {summary}");
    let first_bad = reports.iter().find(|r| r.status == Status::ExpectedDiscrepancyConfirmed);
    if let Some(r) = first_bad {
        println!("  e.g. {}: lhs {} vs rhs {}", r.params, r.lhs, r.rhs);
    }

    let mut out = std::io::stdout();
    let few = sweep(IdentityId::Th222111, &SweepOptions { n_max: 3, ..opts })?;
    write_reports(&mut out, &few, Format::Table)?;
    write_reports(&mut out, &few, Format::Csv)?;

    let mut json = Vec::new();
    write_reports(&mut json, &few, Format::Json)?;
    let (back, _) = parse_json_reports(std::str::from_utf8(&json).expect("utf-8"))?;
    assert_eq!(back, few);
    println!("JSON round trip of {} reports ok", back.len());
    Ok(())
}
