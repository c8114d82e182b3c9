use super::{Expectation, IdentityId, Param, Params};
use crate::error::{domain, Result};

use Expectation::{ExpectDiscrepancy, ExpectPass};
use Param::{PowerA, SplitA, SplitB, L, M, N, R, S};

pub(super) struct Entry {
    pub tag: &'static str,
    pub reference: &'static str,
    pub domain: &'static str,
    pub expect: Expectation,
    pub params: &'static [Param],
}

const NML: &[Param] = &[N, M, L];
const NM: &[Param] = &[N, M];

macro_rules! entry {
    ($tag:expr, $params:expr, $expect:expr, $domain:expr, $reference:expr) => {
        &Entry { tag: $tag, params: $params, expect: $expect, domain: $domain, reference: $reference }
    };
}

pub(super) fn entry(id: IdentityId) -> &'static Entry {
    use IdentityId::*;
    match id {
        ThNeg1 => entry!("THNEG1", &[N, L], ExpectPass, "n ≥ 2, 0 ≤ ℓ ≤ n−1",
            "negative powers, B=1: Z_n(-1^ℓ) = C(n,ℓ)"),
        ThNeg2 => entry!("THNEG2", &[N, L], ExpectPass, "n ≥ 2, 0 ≤ ℓ ≤ n−1",
            "negative powers, B=2: Z_n(-2^ℓ) = C(n,ℓ) + 2(-1)^(n-ℓ-1) C(n,2n-2ℓ)"),
        Zz1m => entry!("ZZ1M", NM, ExpectPass, "n ≥ 2, 0 ≤ m ≤ n−1",
            "all-ones sum: Z_n(1^m) = C(n-1,m)/(m+1)"),
        ZzDet => entry!("ZZDET", &[N, S], ExpectPass, "n ≥ 2, s ≥ 1 (sweep: s ≤ 8)",
            "depth-one sum Z_n(s) as a lower Hessenberg determinant"),
        Eq11112 => entry!("EQ11112", &[N, M, SplitA, SplitB], ExpectPass,
            "a, b ≥ 0, m = a+b+1, a+b ≤ n−3 (m = 1 extrapolated)",
            "Z_n(1^a,2,1^b) + Z_n(1^b,2,1^a) = -m!(n-2m-3)/(m+2)! C(n-1,m)"),
        Th5 => entry!("TH5", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 0",
            "weighted sum of Y_n(2^(m-ℓ+1+j),1^(n-m+ℓ-3-2j)) = C(n-1,m)(C(n,ℓ)-C(m+1,ℓ))/(n(m+1))"),
        Th5Rem1 => entry!("TH5_REM1", NM, ExpectPass, "n−1 ≥ m ≥ 1",
            "ℓ=1 case of TH5: Y_n(2^m,1^(n-m-2)) = (n-m-1)/(n(m+1)) C(n-1,m)"),
        Th5Rem2 => entry!("TH5_REM2", NM, ExpectPass, "n−1 ≥ m ≥ 2",
            "ℓ=2 case of TH5"),
        Prp5 => entry!("PRP5", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 0",
            "product expansion Z_n(1^m) Z_n(-1^ℓ), checked as lhs - rhs = 0"),
        Cor5Printed => entry!("COR5_PRINTED", &[N, M, L, PowerA], ExpectDiscrepancy,
            "n−1 ≥ m ≥ ℓ ≥ 1, A ≥ 2 (sweep: A ≤ 3)",
            "TH5 with exponents {2A, A} and the A-independent right side, as printed"),
        Prp5GeneralA => entry!("PRP5_GENERAL_A", &[N, M, L, PowerA], ExpectPass,
            "n−1 ≥ m ≥ ℓ ≥ 0, A ≥ 1 (sweep: A ≤ 3)",
            "Z_n(A^m) Z_n(-A^ℓ) expansion with exponents {2A, A} and factor n^A (generalization of PRP5, not a published claim)"),
        Th7 => entry!("TH7", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 0, m ≥ 1",
            "Y_n(2^(m-ℓ),1^ℓ) + n Σ_j Y_n(3^(m-ℓ+1+j),2^(ℓ-1-j),1^(n-m-2-j))"),
        Th7Rem1 => entry!("TH7_REM1", NM, ExpectPass, "n−1 ≥ m ≥ 1",
            "ℓ=1 case of TH7"),
        Prp7 => entry!("PRP7", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 0, m ≥ 1",
            "product expansion Z_n(2^m) Z_n(-1^ℓ), checked as lhs - rhs = 0"),
        Th9Printed => entry!("TH9_PRINTED", NML, ExpectDiscrepancy, "n−1 ≥ m ≥ ℓ ≥ 1",
            "interchanged powers, leading 1-block of length n-m-ℓ-1 as printed"),
        Th9Corrected => entry!("TH9_CORRECTED", NML, ExpectPass,
            "n−1 ≥ m ≥ ℓ ≥ 0, (m,ℓ) ≠ (n−1,n−1)",
            "interchanged powers, leading 1-block of length n-m-1"),
        Prp9Printed => entry!("PRP9_PRINTED", NML, ExpectDiscrepancy, "n−1 ≥ m ≥ ℓ ≥ 1",
            "product expansion Z_n(1^m) Z_n(-2^ℓ), 1-block n-m-ℓ-1 as printed"),
        Prp9Corrected => entry!("PRP9_CORRECTED", NML, ExpectPass,
            "n−1 ≥ m ≥ ℓ ≥ 0, (m,ℓ) ≠ (n−1,n−1)",
            "product expansion Z_n(1^m) Z_n(-2^ℓ), 1-block n-m-1"),
        PrpMl11 => entry!("PRPML11", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 1",
            "product expansion Z_n(1^m) Z_n(1^ℓ), checked as lhs - rhs = 0"),
        ThMl11 => entry!("THML11", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 1",
            "Σ_j C(m-ℓ+2j,j) Y_n(2^(ℓ-j),1^(m-ℓ+2j)) = C(n-1,m)C(n-1,ℓ)/((m+1)(ℓ+1))"),
        Th222111 => entry!("TH222111", &[N, M, R], ExpectPass, "n−1 ≥ m ≥ r ≥ 0, m ≥ 1",
            "Y_n(2^r,1^(m-r)) = C(m,r)(C(n-1,m) + (-1)^r C(n-1,m+r+1))/((r+1)n)"),
        Th222111R0 => entry!("TH222111_R0", NM, ExpectPass, "n−1 ≥ m ≥ 1",
            "r=0 case: Y_n(1^m) = C(n,m+1)/n"),
        Th222111Rm1 => entry!("TH222111_RM1", NM, ExpectPass, "n−1 ≥ m ≥ 1",
            "r=m-1 case: Y_n(2^(m-1),1) = (C(n-1,m) + (-1)^(m-1) C(n-1,2m))/n"),
        Th222111Rm => entry!("TH222111_RM", NM, ExpectPass, "n−1 ≥ m ≥ 1",
            "r=m case: Y_n(2^m) = (C(n-1,m) + (-1)^m C(n-1,2m+1))/((m+1)n)"),
        PrpMlNeg => entry!("PRPMLNEG", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 1, (m,ℓ) ≠ (n−1,n−1)",
            "product expansion Z_n(-1^m) Z_n(-1^ℓ), checked as lhs - rhs = 0"),
        ThMlNeg => entry!("THMLNEG", NML, ExpectPass, "n−1 ≥ m ≥ ℓ ≥ 1, (m,ℓ) ≠ (n−1,n−1)",
            "Σ_j C(m-ℓ+2j,j) Y_n(2^(n-m-j-1),1^(m-ℓ+2j)) = C(n,m)C(n,ℓ)/n^2"),
        ConjReversal => entry!("CONJ_REVERSAL", &[N, M, S], ExpectPass,
            "n ≥ 2, depth 1 ≤ m ≤ 4, seed s ≥ 0 (sweep: n ≤ 12, s ≤ 3)",
            "conj(Z_n(c)) = Z_n(reverse c) for seeded random compositions c"),
    }
}

pub(super) fn check_domain(id: IdentityId, p: &Params) -> Result<()> {
    let e = entry(id);
    for k in p.keys() {
        if !e.params.contains(&k) {
            return domain(format!("{} does not take parameter `{}`", e.tag, k.name()));
        }
    }
    for &k in e.params {
        p.get(k)?;
    }
    let g = |k: Param| p.get(k).expect("checked above");
    let n = g(N);
    if n < 2 {
        return domain(format!("{}: n must be >= 2, got {n}", e.tag));
    }
    let ok = match id {
        IdentityId::ThNeg1 | IdentityId::ThNeg2 => (0..n).contains(&g(L)),
        IdentityId::Zz1m => (0..n).contains(&g(M)),
        IdentityId::ZzDet => g(S) >= 1,
        IdentityId::Eq11112 => {
            let (m, a, b) = (g(M), g(SplitA), g(SplitB));
            a >= 0 && b >= 0 && m == a + b + 1 && a + b <= n - 3
        }
        IdentityId::Th5 | IdentityId::Prp5 => chain(n, g(M), g(L), 0),
        IdentityId::Prp5GeneralA => chain(n, g(M), g(L), 0) && g(PowerA) >= 1,
        IdentityId::Cor5Printed => chain(n, g(M), g(L), 1) && g(PowerA) >= 2,
        IdentityId::Th5Rem1 | IdentityId::Th7Rem1 => (1..n).contains(&g(M)),
        IdentityId::Th222111R0 | IdentityId::Th222111Rm1 | IdentityId::Th222111Rm => {
            (1..n).contains(&g(M))
        }
        IdentityId::Th5Rem2 => (2..n).contains(&g(M)),
        IdentityId::Th7 | IdentityId::Prp7 => chain(n, g(M), g(L), 0) && g(M) >= 1,
        IdentityId::Th9Printed | IdentityId::Prp9Printed => chain(n, g(M), g(L), 1),
        IdentityId::Th9Corrected | IdentityId::Prp9Corrected => {
            chain(n, g(M), g(L), 0) && !(g(M) == n - 1 && g(L) == n - 1)
        }
        IdentityId::PrpMl11 | IdentityId::ThMl11 => chain(n, g(M), g(L), 1),
        IdentityId::PrpMlNeg | IdentityId::ThMlNeg => {
            chain(n, g(M), g(L), 1) && !(g(M) == n - 1 && g(L) == n - 1)
        }
        IdentityId::Th222111 => chain(n, g(M), g(R), 0) && g(M) >= 1,
        IdentityId::ConjReversal => (1..=4).contains(&g(M)) && g(S) >= 0,
    };
    if !ok {
        return domain(format!("{} parameters {p} outside domain {}", e.tag, e.domain));
    }
    Ok(())
}

// n-1 >= m >= low >= floor
fn chain(n: i64, m: i64, low: i64, floor: i64) -> bool {
    n > m && m >= low && low >= floor
}

/// Instance lies outside the range the formula is stated for.
pub(super) fn is_extrapolated(id: IdentityId, p: &Params) -> bool {
    id == IdentityId::Eq11112 && p.get(M).is_ok_and(|m| m < 2)
}

/// Every in-domain parameter tuple with `n <= n_max`, in sorted order.
pub(super) fn instances(id: IdentityId, n_max: i64) -> Vec<Params> {
    use IdentityId::*;
    let mut out = Vec::new();
    let n_top = if id == ConjReversal { n_max.min(12) } else { n_max };
    for n in 2..=n_top {
        let base = Params::new().with(N, n);
        match id {
            ThNeg1 | ThNeg2 => out.extend((0..n).map(|l| base.clone().with(L, l))),
            ZzDet => out.extend((1..=8).map(|s| base.clone().with(S, s))),
            Eq11112 => {
                for m in 1..=n - 2 {
                    for a in 0..m {
                        out.push(base.clone().with(M, m).with(SplitA, a).with(SplitB, m - 1 - a));
                    }
                }
            }
            Th222111 => {
                for m in 0..n {
                    out.extend((0..=m).map(|r| base.clone().with(M, m).with(R, r)));
                }
            }
            Cor5Printed | Prp5GeneralA => {
                for a in 1..=3 {
                    for m in 0..n {
                        out.extend((0..=m).map(|l| base.clone().with(M, m).with(L, l).with(PowerA, a)));
                    }
                }
            }
            ConjReversal => {
                for m in 1..=4 {
                    out.extend((0..4).map(|s| base.clone().with(M, m).with(S, s)));
                }
            }
            _ if entry(id).params == NM => out.extend((0..n).map(|m| base.clone().with(M, m))),
            _ => {
                for m in 0..n {
                    out.extend((0..=m).map(|l| base.clone().with(M, m).with(L, l)));
                }
            }
        }
    }
    out.retain(|p| check_domain(id, p).is_ok());
    out.sort();
    out
}
