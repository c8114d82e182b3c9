//! Registry of closed-form identities as executable (left side, right side,
//! parameter domain) triples, with exact single-instance checks and sweeps.

mod lhs;
mod registry;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};

pub use lhs::{conj_reversal_composition, lhs_value, lhs_value_with};
pub use verify::{domain_instances, sweep, sweep_all, verify_one, verify_one_with, SweepOptions, TableCache};

/// Tag of a registered identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    ThNeg1,
    ThNeg2,
    Zz1m,
    ZzDet,
    Eq11112,
    Th5,
    Th5Rem1,
    Th5Rem2,
    Prp5,
    Cor5Printed,
    Prp5GeneralA,
    Th7,
    Th7Rem1,
    Prp7,
    Th9Printed,
    Th9Corrected,
    Prp9Printed,
    Prp9Corrected,
    PrpMl11,
    ThMl11,
    Th222111,
    Th222111R0,
    Th222111Rm1,
    Th222111Rm,
    PrpMlNeg,
    ThMlNeg,
    ConjReversal,
}

/// Whether the identity is expected to hold as registered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Expectation {
    ExpectPass,
    ExpectDiscrepancy,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::ExpectPass => "EXPECT_PASS",
            Expectation::ExpectDiscrepancy => "EXPECT_DISCREPANCY",
        })
    }
}

impl IdentityId {
    pub const ALL: [IdentityId; 27] = [
        IdentityId::ThNeg1,
        IdentityId::ThNeg2,
        IdentityId::Zz1m,
        IdentityId::ZzDet,
        IdentityId::Eq11112,
        IdentityId::Th5,
        IdentityId::Th5Rem1,
        IdentityId::Th5Rem2,
        IdentityId::Prp5,
        IdentityId::Cor5Printed,
        IdentityId::Prp5GeneralA,
        IdentityId::Th7,
        IdentityId::Th7Rem1,
        IdentityId::Prp7,
        IdentityId::Th9Printed,
        IdentityId::Th9Corrected,
        IdentityId::Prp9Printed,
        IdentityId::Prp9Corrected,
        IdentityId::PrpMl11,
        IdentityId::ThMl11,
        IdentityId::Th222111,
        IdentityId::Th222111R0,
        IdentityId::Th222111Rm1,
        IdentityId::Th222111Rm,
        IdentityId::PrpMlNeg,
        IdentityId::ThMlNeg,
        IdentityId::ConjReversal,
    ];

    pub fn tag(self) -> &'static str {
        registry::entry(self).tag
    }

    /// Short description of where the identity comes from.
    pub fn reference(self) -> &'static str {
        registry::entry(self).reference
    }

    /// Human-readable parameter domain.
    pub fn domain_text(self) -> &'static str {
        registry::entry(self).domain
    }

    pub fn expectation(self) -> Expectation {
        registry::entry(self).expect
    }

    pub fn params(self) -> &'static [Param] {
        registry::entry(self).params
    }

    /// Errors unless `p` carries exactly this identity's parameters and
    /// satisfies its domain predicate.
    pub fn check_domain(self, p: &Params) -> Result<()> {
        registry::check_domain(self, p)
    }

    pub fn tags() -> Vec<&'static str> {
        Self::ALL.iter().map(|id| id.tag()).collect()
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Named integer parameter of an identity instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    #[serde(rename = "n")]
    N,
    #[serde(rename = "m")]
    M,
    #[serde(rename = "l")]
    L,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "a")]
    SplitA,
    #[serde(rename = "b")]
    SplitB,
    #[serde(rename = "A")]
    PowerA,
    #[serde(rename = "B")]
    PowerB,
    #[serde(rename = "s")]
    S,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::M => "m",
            Param::L => "l",
            Param::R => "r",
            Param::SplitA => "a",
            Param::SplitB => "b",
            Param::PowerA => "A",
            Param::PowerB => "B",
            Param::S => "s",
        }
    }
}

/// Parameter tuple of one identity instance, ordered by [`Param`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<Param, i64>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn from_pairs(pairs: &[(Param, i64)]) -> Self {
        Params(pairs.iter().copied().collect())
    }

    pub fn with(mut self, k: Param, v: i64) -> Self {
        self.0.insert(k, v);
        self
    }

    pub fn set(&mut self, k: Param, v: i64) {
        self.0.insert(k, v);
    }

    pub fn get(&self, k: Param) -> Result<i64> {
        self.0
            .get(&k)
            .copied()
            .ok_or_else(|| Error::Domain(format!("missing parameter `{}`", k.name())))
    }

    pub fn keys(&self) -> impl Iterator<Item = Param> + '_ {
        self.0.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Param, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }
}

/// `n=4;m=2;l=1`
impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{}={v}", k.name())).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Outcome of one exact comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    ExpectedDiscrepancyConfirmed,
    UnexpectedPass,
}

impl Status {
    pub const ALL: [Status; 4] =
        [Status::Pass, Status::Fail, Status::ExpectedDiscrepancyConfirmed, Status::UnexpectedPass];

    pub fn from_comparison(equal: bool, expect: Expectation) -> Self {
        match (equal, expect) {
            (true, Expectation::ExpectPass) => Status::Pass,
            (false, Expectation::ExpectPass) => Status::Fail,
            (false, Expectation::ExpectDiscrepancy) => Status::ExpectedDiscrepancyConfirmed,
            (true, Expectation::ExpectDiscrepancy) => Status::UnexpectedPass,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedDiscrepancyConfirmed => "EXPECTED_DISCREPANCY_CONFIRMED",
            Status::UnexpectedPass => "UNEXPECTED_PASS",
        }
    }

    /// Statuses that count as success for a single `verify`.
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::ExpectedDiscrepancyConfirmed)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of checking one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: IdentityId,
    pub params: Params,
    pub lhs: CyclotomicNumber,
    pub rhs: Rational,
    pub status: Status,
    /// Wall time, when measured.
    pub wall_time: Option<std::time::Duration>,
    /// Instance lies outside the range the source states the formula for.
    pub extrapolated: bool,
}

impl CheckReport {
    /// The left side as a rational when it is one.
    pub fn lhs_rational(&self) -> Option<Rational> {
        self.lhs.as_rational().ok()
    }

    /// Wall time in milliseconds, rounded to microseconds.
    pub fn ms(&self) -> Option<f64> {
        self.wall_time.map(|d| (d.as_secs_f64() * 1e6).round() / 1e3)
    }
}
