use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered index string `(s_1, ..., s_m)` of a harmonic sum. Entries are
/// nonzero; negative entries put the factor `(1 - zeta^i)^|s|` in the
/// numerator. The empty string is the depth-0 sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Composition(Vec<i64>);

impl Composition {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&s| s == 0) {
            return Err(Error::Domain(format!("composition entry {pos} is zero")));
        }
        Ok(Composition(entries))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `s` repeated `count` times.
    pub fn repeated(s: i64, count: usize) -> Result<Self> {
        Self::new(vec![s; count])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl TryFrom<Vec<i64>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<i64> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

/// Comma-separated, e.g. `1,2,-1`; the empty string is the empty composition.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad index entry `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Unordered exponent multiset, the argument of the symmetrized sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultisetIndex(BTreeMap<i64, usize>);

impl MultisetIndex {
    pub fn empty() -> Self {
        MultisetIndex(BTreeMap::new())
    }

    /// Builds from `(exponent, multiplicity)` pairs. Zero multiplicities are
    /// dropped and repeated exponents accumulate.
    pub fn from_pairs(pairs: &[(i64, usize)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(e, c) in pairs {
            if e == 0 {
                return Err(Error::Domain("multiset exponent 0".into()));
            }
            if c > 0 {
                *map.entry(e).or_insert(0) += c;
            }
        }
        Ok(MultisetIndex(map))
    }

    /// Exponent blocks with signed lengths, as they come out of closed-form
    /// formulas. Returns `None` when any block length is negative: such a
    /// term does not occur.
    pub fn from_blocks(blocks: &[(i64, i64)]) -> Option<Self> {
        if blocks.iter().any(|&(_, len)| len < 0) {
            return None;
        }
        let pairs: Vec<(i64, usize)> = blocks.iter().map(|&(e, len)| (e, len as usize)).collect();
        Some(Self::from_pairs(&pairs).expect("block exponents are nonzero"))
    }

    pub fn depth(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct exponents in increasing order with their multiplicities.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn multiplicity(&self, e: i64) -> usize {
        self.0.get(&e).copied().unwrap_or(0)
    }

    /// Entries sorted ascending, each exponent repeated by its multiplicity.
    pub fn sorted_entries(&self) -> Vec<i64> {
        self.pairs().flat_map(|(e, c)| std::iter::repeat_n(e, c)).collect()
    }

    /// Number of distinct orderings, `m! / prod c_e!`.
    pub fn permutation_count(&self) -> u128 {
        let mut total = 1u128;
        let mut placed = 0u128;
        for (_, c) in self.pairs() {
            for k in 1..=c as u128 {
                placed += 1;
                total = total * placed / k;
            }
        }
        total
    }
}

/// `e1:c1,e2:c2,...`; the empty string is the empty multiset.
impl FromStr for MultisetIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(MultisetIndex::empty());
        }
        let mut pairs = Vec::new();
        for part in s.split(',') {
            let bad = || Error::Parse(format!("bad multiset entry `{}` (want exponent:count)", part.trim()));
            let (e, c) = part.split_once(':').ok_or_else(bad)?;
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            let c: usize = c.trim().parse().map_err(|_| bad())?;
            if e == 0 || c == 0 {
                return Err(bad());
            }
            pairs.push((e, c));
        }
        MultisetIndex::from_pairs(&pairs)
    }
}

impl fmt::Display for MultisetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().rev().map(|(e, c)| format!("{e}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
