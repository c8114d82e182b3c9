use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::{lhs, registry, CheckReport, IdentityId, Param, Params, Status};
use crate::closed_forms::rhs_value;
use crate::error::{domain, Result};
use crate::sums::{elem_sym_of_powers, UnitTable};

/// Read-only unit tables for every order `2..=n_max`, built once and shared
/// across threads.
#[derive(Debug, Default)]
pub struct TableCache {
    tables: BTreeMap<u32, UnitTable>,
}

impl TableCache {
    pub fn new(n_max: u32) -> Result<Self> {
        let tables = (2..=n_max)
            .into_par_iter()
            .map(|n| UnitTable::new(n).map(|t| (n, t)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(TableCache { tables })
    }

    pub fn get(&self, n: u32) -> Option<&UnitTable> {
        self.tables.get(&n)
    }

    pub fn n_max(&self) -> u32 {
        self.tables.keys().next_back().copied().unwrap_or(0)
    }
}

/// Sweep configuration.
#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub n_max: u32,
    /// Worker threads; output does not depend on it.
    pub jobs: usize,
    /// Record per-instance wall time.
    pub timing: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { n_max: 16, jobs: 1, timing: false }
    }
}

/// Check one instance exactly. Wall time is always recorded.
pub fn verify_one(id: IdentityId, p: &Params) -> Result<CheckReport> {
    id.check_domain(p)?;
    let table = UnitTable::new(p.get(Param::N)? as u32)?;
    verify_one_with(&table, id, p, true)
}

/// As [`verify_one`] with a prebuilt table for `n`.
pub fn verify_one_with(t: &UnitTable, id: IdentityId, p: &Params, timing: bool) -> Result<CheckReport> {
    let start = Instant::now();
    let lhs = lhs::lhs_value_with(t, id, p)?;
    let rhs = rhs_value(id, p)?;
    let mut equal = lhs == t.field().from_rational(&rhs);
    // negative-power sums are also elementary symmetric functions; both
    // evaluators must agree
    if let IdentityId::ThNeg1 | IdentityId::ThNeg2 = id {
        let b = if id == IdentityId::ThNeg1 { 1 } else { 2 };
        let alt = elem_sym_of_powers(t.n(), b, p.get(Param::L)? as usize)?;
        if alt != lhs {
            equal = false;
        }
    }
    let wall_time = timing.then(|| start.elapsed());
    Ok(CheckReport {
        id,
        params: p.clone(),
        lhs,
        rhs,
        status: Status::from_comparison(equal, id.expectation()),
        wall_time,
        extrapolated: registry::is_extrapolated(id, p),
    })
}

/// Every in-domain parameter tuple of `id` with `n <= n_max`, sorted.
pub fn domain_instances(id: IdentityId, n_max: u32) -> Vec<Params> {
    registry::instances(id, n_max as i64)
}

/// Exhaustive check of one identity. Reports come back in
/// [`domain_instances`] order whatever the thread count.
pub fn sweep(id: IdentityId, opts: &SweepOptions) -> Result<Vec<CheckReport>> {
    let cache = TableCache::new(opts.n_max)?;
    run(&[id], &cache, opts)
}

/// [`sweep`] over every registered identity, in registry order.
pub fn sweep_all(opts: &SweepOptions) -> Result<Vec<CheckReport>> {
    let cache = TableCache::new(opts.n_max)?;
    run(&IdentityId::ALL, &cache, opts)
}

fn run(ids: &[IdentityId], cache: &TableCache, opts: &SweepOptions) -> Result<Vec<CheckReport>> {
    if opts.n_max < 2 {
        return domain(format!("n_max must be >= 2, got {}", opts.n_max));
    }
    let work: Vec<(IdentityId, Params)> = ids
        .iter()
        .flat_map(|&id| domain_instances(id, opts.n_max).into_iter().map(move |p| (id, p)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| crate::Error::Domain(format!("thread pool: {e}")))?;
    pool.install(|| {
        work.par_iter()
            .map(|(id, p)| {
                let n = p.get(Param::N)? as u32;
                let t = cache.get(n).expect("cache covers every swept n");
                verify_one_with(t, *id, p, opts.timing)
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn printed_th9_example_is_a_confirmed_discrepancy() {
        let p = Params::from_pairs(&[(Param::N, 3), (Param::M, 1), (Param::L, 1)]);
        let r = verify_one(IdentityId::Th9Printed, &p).unwrap();
        assert_eq!(r.status, Status::ExpectedDiscrepancyConfirmed);
        assert_eq!(r.lhs_rational(), Some(rat(0, 1)));
        assert_eq!(r.rhs, rat(3, 1));
    }

    #[test]
    fn corrected_th9_example_passes() {
        let p = Params::from_pairs(&[(Param::N, 4), (Param::M, 2), (Param::L, 1)]);
        let r = verify_one(IdentityId::Th9Corrected, &p).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.rhs, rat(4, 1));
    }

    #[test]
    fn cor5_example() {
        let p = Params::from_pairs(&[(Param::N, 3), (Param::M, 1), (Param::L, 1), (Param::PowerA, 2)]);
        let r = verify_one(IdentityId::Cor5Printed, &p).unwrap();
        assert_eq!(r.lhs_rational(), Some(rat(-1, 9)));
        assert_eq!(r.rhs, rat(1, 3));
        assert_eq!(r.status, Status::ExpectedDiscrepancyConfirmed);
    }

    #[test]
    fn all_ones_sweep_size() {
        let opts = SweepOptions { n_max: 6, ..Default::default() };
        let reports = sweep(IdentityId::Zz1m, &opts).unwrap();
        assert_eq!(reports.len(), 20);
        assert!(reports.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn extrapolated_flag() {
        let p = Params::from_pairs(&[(Param::N, 4), (Param::M, 1), (Param::SplitA, 0), (Param::SplitB, 0)]);
        let r = verify_one(IdentityId::Eq11112, &p).unwrap();
        assert!(r.extrapolated);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn out_of_domain_is_an_error() {
        let p = Params::from_pairs(&[(Param::N, 4), (Param::M, 5)]);
        assert!(verify_one(IdentityId::Zz1m, &p).is_err());
    }
}
