//! Linear and cyclic permutation statistics and their distributions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::Error;
use crate::perm_core::{Cycle, IndexSet, Word};

/// Identifier for one of the statistics in scope.
///
/// Linear: `Des`, `des`, `Pk`, `pk`, `maj`, `bru`.
/// Cyclic: `cDes`, `cdes`, `cPk`, `cpk`, `cbru`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StatisticId {
    Des,
    DesNum,
    Pk,
    PkNum,
    Maj,
    Bru,
    CDes,
    CDesNum,
    CPk,
    CPkNum,
    CBru,
}

impl StatisticId {
    pub const ALL: [StatisticId; 11] = [
        StatisticId::Des,
        StatisticId::DesNum,
        StatisticId::Pk,
        StatisticId::PkNum,
        StatisticId::Maj,
        StatisticId::Bru,
        StatisticId::CDes,
        StatisticId::CDesNum,
        StatisticId::CPk,
        StatisticId::CPkNum,
        StatisticId::CBru,
    ];

    pub fn is_cyclic(self) -> bool {
        matches!(
            self,
            StatisticId::CDes
                | StatisticId::CDesNum
                | StatisticId::CPk
                | StatisticId::CPkNum
                | StatisticId::CBru
        )
    }

    pub fn is_linear(self) -> bool {
        !self.is_cyclic()
    }

    /// Conventional name, case-sensitive: set-valued statistics are
    /// capitalized, counts are lowercase.
    pub fn name(self) -> &'static str {
        match self {
            StatisticId::Des => "Des",
            StatisticId::DesNum => "des",
            StatisticId::Pk => "Pk",
            StatisticId::PkNum => "pk",
            StatisticId::Maj => "maj",
            StatisticId::Bru => "bru",
            StatisticId::CDes => "cDes",
            StatisticId::CDesNum => "cdes",
            StatisticId::CPk => "cPk",
            StatisticId::CPkNum => "cpk",
            StatisticId::CBru => "cbru",
        }
    }
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StatisticId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

impl Serialize for StatisticId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Value of a statistic: a count, a position set, or a multiset of position
/// sets.  The multiset variant keeps its sets sorted, so the derived ordering
/// and equality act on canonical encodings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StatValue {
    Int(u64),
    Positions(IndexSet),
    PositionsMultiset(Vec<IndexSet>),
}

impl StatValue {
    pub fn multiset(mut sets: Vec<IndexSet>) -> StatValue {
        sets.sort();
        StatValue::PositionsMultiset(sets)
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, s: &IndexSet) -> fmt::Result {
    write!(f, "{{")?;
    for (k, e) in s.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Int(n) => write!(f, "{n}"),
            StatValue::Positions(s) => fmt_set(f, s),
            StatValue::PositionsMultiset(sets) => {
                write!(f, "{{{{")?;
                for (k, s) in sets.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    fmt_set(f, s)?;
                }
                write!(f, "}}}}")
            }
        }
    }
}

impl Serialize for StatValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            StatValue::Int(n) => serializer.serialize_u64(*n),
            StatValue::Positions(s) => {
                let mut seq = serializer.serialize_seq(Some(s.len()))?;
                for e in s {
                    seq.serialize_element(e)?;
                }
                seq.end()
            }
            StatValue::PositionsMultiset(sets) => {
                let mut seq = serializer.serialize_seq(Some(sets.len()))?;
                for s in sets {
                    let v: Vec<u32> = s.iter().copied().collect();
                    seq.serialize_element(&v)?;
                }
                seq.end()
            }
        }
    }
}

/// `Des w = {i | w_i > w_{i+1}}`, 1-based.
pub fn descent_set(w: &Word) -> IndexSet {
    let e = w.entries();
    (1..w.len())
        .filter(|&i| e[i - 1] > e[i])
        .map(|i| i as u32)
        .collect()
}

/// `Pk w = {i : 2 <= i <= n-1 | w_{i-1} < w_i > w_{i+1}}`.
pub fn peak_set(w: &Word) -> IndexSet {
    let e = w.entries();
    (2..w.len())
        .filter(|&i| e[i - 2] < e[i - 1] && e[i - 1] > e[i])
        .map(|i| i as u32)
        .collect()
}

/// Number of maximal monotone factors (biruns).  A single entry counts as
/// one birun; the empty word has none.
pub fn birun_count(w: &Word) -> u64 {
    let e = w.entries();
    let n = e.len();
    if n == 0 {
        return 0;
    }
    let mut runs = 1u64;
    for i in 1..n.saturating_sub(1) {
        let rising_in = e[i] > e[i - 1];
        let rising_out = e[i + 1] > e[i];
        if rising_in != rising_out {
            runs += 1;
        }
    }
    runs
}

/// `cDes w`: descent positions with the index taken modulo `n`, so the pair
/// `(w_n, w_1)` is also tested.  Rejects the empty word.
pub fn cdes_set_linear(w: &Word) -> Result<IndexSet, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let e = w.entries();
    let n = e.len();
    Ok((1..=n)
        .filter(|&i| e[i - 1] > e[i % n])
        .map(|i| i as u32)
        .collect())
}

/// `cPk w`: peak positions with both neighbor indices taken modulo `n`.
/// Rejects the empty word.
pub fn cpk_set_linear(w: &Word) -> Result<IndexSet, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let e = w.entries();
    let n = e.len();
    Ok((1..=n)
        .filter(|&i| {
            let prev = e[(i + n - 2) % n];
            let next = e[i % n];
            prev < e[i - 1] && e[i - 1] > next
        })
        .map(|i| i as u32)
        .collect())
}

fn cyclic_valley_count(w: &Word) -> u64 {
    let e = w.entries();
    let n = e.len();
    (0..n)
        .filter(|&i| {
            let prev = e[(i + n - 1) % n];
            let next = e[(i + 1) % n];
            prev > e[i] && e[i] < next
        })
        .count() as u64
}

/// Number of maximal monotone circular factors.  For `n >= 2` every such
/// factor runs from a cyclic peak to a cyclic valley or vice versa, so the
/// count is `#cPk + #cValleys`; a 1-cycle is a single monotone factor.
pub fn cyclic_birun_count(c: &Cycle) -> u64 {
    if c.len() == 1 {
        return 1;
    }
    let w = c.canonical();
    cpk_set_linear(w).expect("cycle is nonempty").len() as u64 + cyclic_valley_count(w)
}

/// Evaluate a linear statistic on a word.
pub fn linear_stat(id: StatisticId, w: &Word) -> Result<StatValue, Error> {
    match id {
        StatisticId::Des => Ok(StatValue::Positions(descent_set(w))),
        StatisticId::DesNum => Ok(StatValue::Int(descent_set(w).len() as u64)),
        StatisticId::Pk => Ok(StatValue::Positions(peak_set(w))),
        StatisticId::PkNum => Ok(StatValue::Int(peak_set(w).len() as u64)),
        StatisticId::Maj => Ok(StatValue::Int(
            descent_set(w).iter().map(|&i| i as u64).sum(),
        )),
        StatisticId::Bru => Ok(StatValue::Int(birun_count(w))),
        _ => Err(Error::NotLinear(id)),
    }
}

/// Evaluate a cyclic statistic on a cycle.
pub fn cyclic_stat(id: StatisticId, c: &Cycle) -> Result<StatValue, Error> {
    match id {
        StatisticId::CDes => {
            let sets: Result<Vec<IndexSet>, Error> =
                c.rotations().iter().map(cdes_set_linear).collect();
            Ok(StatValue::multiset(sets?))
        }
        StatisticId::CDesNum => Ok(StatValue::Int(cdes_set_linear(c.canonical())?.len() as u64)),
        StatisticId::CPk => {
            let sets: Result<Vec<IndexSet>, Error> =
                c.rotations().iter().map(cpk_set_linear).collect();
            Ok(StatValue::multiset(sets?))
        }
        StatisticId::CPkNum => Ok(StatValue::Int(cpk_set_linear(c.canonical())?.len() as u64)),
        StatisticId::CBru => Ok(StatValue::Int(cyclic_birun_count(c))),
        _ => Err(Error::NotCyclic(id)),
    }
}

/// A multiset of statistic values with order-insensitive, multiplicity-exact
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Distribution {
    counts: BTreeMap<StatValue, usize>,
}

impl Distribution {
    pub fn new() -> Self {
        Distribution::default()
    }

    pub fn insert(&mut self, v: StatValue) {
        *self.counts.entry(v).or_insert(0) += 1;
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> impl Iterator<Item = (&StatValue, usize)> {
        self.counts.iter().map(|(v, &k)| (v, k))
    }
}

impl FromIterator<StatValue> for Distribution {
    fn from_iter<I: IntoIterator<Item = StatValue>>(iter: I) -> Self {
        let mut d = Distribution::new();
        for v in iter {
            d.insert(v);
        }
        d
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{")?;
        for (k, (v, mult)) in self.counts().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        write!(f, "}}}}")
    }
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Sorted array with repeats explicit.
        let mut seq = serializer.serialize_seq(Some(self.total()))?;
        for (v, mult) in self.counts() {
            for _ in 0..mult {
                seq.serialize_element(v)?;
            }
        }
        seq.end()
    }
}

/// Distribution of a linear statistic over a collection of words.
pub fn word_distribution<'a, I>(id: StatisticId, words: I) -> Result<Distribution, Error>
where
    I: IntoIterator<Item = &'a Word>,
{
    if !id.is_linear() {
        return Err(Error::NotLinear(id));
    }
    words.into_iter().map(|w| linear_stat(id, w)).collect()
}

/// Distribution of a cyclic statistic over a collection of cycles.
pub fn cycle_distribution<'a, I>(id: StatisticId, cycles: I) -> Result<Distribution, Error>
where
    I: IntoIterator<Item = &'a Cycle>,
{
    if !id.is_cyclic() {
        return Err(Error::NotCyclic(id));
    }
    cycles.into_iter().map(|c| cyclic_stat(id, c)).collect()
}
