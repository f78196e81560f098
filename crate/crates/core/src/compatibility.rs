//! Exhaustive verification engines for shuffle compatibility and for the
//! lifting hypotheses relating cyclic statistics to linear ones.
//!
//! All searches run in increasing total length, then lexicographically on
//! canonical representatives, so the first counterexample is deterministic.
//! Distribution computation fans out to parallel workers; comparisons are
//! replayed in sequential order so the reported witness matches what a
//! sequential search would find.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{max_removal, split};
use crate::error::Error;
use crate::perm_core::{interval, shifted_interval, Cycle, IndexSet, Word};
use crate::shuffles::{cyclic_shuffles, linear_shuffles};
use crate::statistics::{
    cyclic_stat, linear_stat, Distribution, StatValue, StatisticId,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Linear,
    Cyclic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Linear => "linear",
            Mode::Cyclic => "cyclic",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Compatible,
    Counterexample,
}

/// How the quadruple hypothesis is searched.
///
/// `Reduced` runs the pairs-on-one-side reduction in both directions; the
/// two single-direction strategies and the full quadruple search exist so
/// their verdicts can be compared against each other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchStrategy {
    Reduced,
    PairsLeftOnly,
    PairsRightOnly,
    FullQuadruple,
}

/// A quadruple violating the compatibility statement, with the two differing
/// distributions as evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quad<T> {
    pub pi: T,
    pub pi_prime: T,
    pub sigma: T,
    pub sigma_prime: T,
    pub left_distribution: Distribution,
    pub right_distribution: Distribution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CompatCounterexample {
    Linear(Quad<Word>),
    Cyclic(Quad<Cycle>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    pub statistic: StatisticId,
    pub mode: Mode,
    pub max_total_length: u32,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CompatCounterexample>,
    pub pairs_checked: u64,
}

impl CompatReport {
    /// Re-evaluates a stored counterexample from scratch: the recomputed
    /// distributions must match the stored ones and differ from each other.
    pub fn replay_counterexample(&self) -> Result<bool, Error> {
        let Some(cex) = &self.counterexample else {
            return Ok(false);
        };
        match cex {
            CompatCounterexample::Linear(q) => {
                let left = Word::shuffle_dist(self.statistic, &q.pi, &q.sigma)?;
                let right = Word::shuffle_dist(self.statistic, &q.pi_prime, &q.sigma_prime)?;
                Ok(left == q.left_distribution
                    && right == q.right_distribution
                    && left != right)
            }
            CompatCounterexample::Cyclic(q) => {
                let left = Cycle::shuffle_dist(self.statistic, &q.pi, &q.sigma)?;
                let right = Cycle::shuffle_dist(self.statistic, &q.pi_prime, &q.sigma_prime)?;
                Ok(left == q.left_distribution
                    && right == q.right_distribution
                    && left != right)
            }
        }
    }
}

/// The two element kinds the search engine runs over.
pub trait ShuffleUniverse: Clone + Ord + Send + Sync + Sized {
    const MODE: Mode;

    /// All permutations of the alphabet, sorted lexicographically on the
    /// canonical representative.
    fn universe(alphabet: &IndexSet) -> Vec<Self>;
    fn stat(id: StatisticId, x: &Self) -> Result<StatValue, Error>;
    fn shuffle_dist(id: StatisticId, a: &Self, b: &Self) -> Result<Distribution, Error>;
    fn wrap(q: Quad<Self>) -> CompatCounterexample;
}

impl ShuffleUniverse for Word {
    const MODE: Mode = Mode::Linear;

    fn universe(alphabet: &IndexSet) -> Vec<Word> {
        let letters: Vec<u32> = alphabet.iter().copied().collect();
        letters
            .iter()
            .copied()
            .permutations(letters.len())
            .map(|v| Word::new(v).expect("distinct entries"))
            .collect()
    }

    fn stat(id: StatisticId, x: &Word) -> Result<StatValue, Error> {
        linear_stat(id, x)
    }

    fn shuffle_dist(id: StatisticId, a: &Word, b: &Word) -> Result<Distribution, Error> {
        linear_shuffles(a, b)?
            .iter()
            .map(|w| linear_stat(id, w))
            .collect()
    }

    fn wrap(q: Quad<Word>) -> CompatCounterexample {
        CompatCounterexample::Linear(q)
    }
}

impl ShuffleUniverse for Cycle {
    const MODE: Mode = Mode::Cyclic;

    fn universe(alphabet: &IndexSet) -> Vec<Cycle> {
        let letters: Vec<u32> = alphabet.iter().copied().collect();
        let first = letters[0];
        let rest = &letters[1..];
        rest.iter()
            .copied()
            .permutations(rest.len())
            .map(|perm| {
                let mut v = vec![first];
                v.extend(perm);
                Cycle::from_entries(v).expect("distinct entries")
            })
            .collect()
    }

    fn stat(id: StatisticId, x: &Cycle) -> Result<StatValue, Error> {
        cyclic_stat(id, x)
    }

    fn shuffle_dist(id: StatisticId, a: &Cycle, b: &Cycle) -> Result<Distribution, Error> {
        cyclic_shuffles(a, b)?
            .iter()
            .map(|c| cyclic_stat(id, c))
            .collect()
    }

    fn wrap(q: Quad<Cycle>) -> CompatCounterexample {
        CompatCounterexample::Cyclic(q)
    }
}

fn group_by_stat<T: ShuffleUniverse>(
    id: StatisticId,
    elems: &[T],
) -> Result<BTreeMap<StatValue, Vec<usize>>, Error> {
    let mut groups: BTreeMap<StatValue, Vec<usize>> = BTreeMap::new();
    for (k, x) in elems.iter().enumerate() {
        groups.entry(T::stat(id, x)?).or_default().push(k);
    }
    Ok(groups)
}

/// One reduction pass: vary equal-statistic pairs on `left`, holding each
/// `right` element fixed.  `swapped` flips which side is reported as the
/// sigma pair in a counterexample.
fn scan_pairs<T: ShuffleUniverse>(
    id: StatisticId,
    left: &[T],
    right: &[T],
    swapped: bool,
    pairs_checked: &mut u64,
) -> Result<Option<Quad<T>>, Error> {
    let groups = group_by_stat(id, left)?;
    let needed: Vec<usize> = groups
        .values()
        .filter(|g| g.len() > 1)
        .flatten()
        .copied()
        .sorted()
        .collect();
    if needed.is_empty() {
        return Ok(None);
    }
    for sigma in right {
        let dists: Vec<Distribution> = needed
            .par_iter()
            .map(|&k| T::shuffle_dist(id, &left[k], sigma))
            .collect::<Result<_, Error>>()?;
        let dist_of = |k: usize| &dists[needed.binary_search(&k).expect("precomputed")];
        for g in groups.values().filter(|g| g.len() > 1) {
            for (&x, &y) in g.iter().tuple_combinations() {
                *pairs_checked += 1;
                let (dx, dy) = (dist_of(x), dist_of(y));
                if dx != dy {
                    let (pi, pi_prime) = (left[x].clone(), left[y].clone());
                    let q = if swapped {
                        Quad {
                            pi: sigma.clone(),
                            pi_prime: sigma.clone(),
                            sigma: pi,
                            sigma_prime: pi_prime,
                            left_distribution: dx.clone(),
                            right_distribution: dy.clone(),
                        }
                    } else {
                        Quad {
                            pi,
                            pi_prime,
                            sigma: sigma.clone(),
                            sigma_prime: sigma.clone(),
                            left_distribution: dx.clone(),
                            right_distribution: dy.clone(),
                        }
                    };
                    return Ok(Some(q));
                }
            }
        }
    }
    Ok(None)
}

/// Full quadruple search on one `(m, n)` block, no reduction.
fn scan_full<T: ShuffleUniverse>(
    id: StatisticId,
    left: &[T],
    right: &[T],
    pairs_checked: &mut u64,
) -> Result<Option<Quad<T>>, Error> {
    let ga = group_by_stat(id, left)?;
    let gb = group_by_stat(id, right)?;
    let dists: Vec<Vec<Distribution>> = left
        .par_iter()
        .map(|a| {
            right
                .iter()
                .map(|b| T::shuffle_dist(id, a, b))
                .collect::<Result<Vec<_>, Error>>()
        })
        .collect::<Result<_, Error>>()?;
    for la in ga.values() {
        for lb in gb.values() {
            let cells: Vec<(usize, usize)> = la
                .iter()
                .cartesian_product(lb.iter())
                .map(|(&a, &b)| (a, b))
                .collect();
            for (&c1, &c2) in cells.iter().tuple_combinations() {
                *pairs_checked += 1;
                if dists[c1.0][c1.1] != dists[c2.0][c2.1] {
                    return Ok(Some(Quad {
                        pi: left[c1.0].clone(),
                        pi_prime: left[c2.0].clone(),
                        sigma: right[c1.1].clone(),
                        sigma_prime: right[c2.1].clone(),
                        left_distribution: dists[c1.0][c1.1].clone(),
                        right_distribution: dists[c2.0][c2.1].clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn search<T: ShuffleUniverse>(
    id: StatisticId,
    max_total: u32,
    strategy: SearchStrategy,
) -> Result<CompatReport, Error> {
    if max_total < 2 {
        return Err(Error::BoundTooSmall {
            min: 2,
            got: max_total,
        });
    }
    let mut pairs_checked = 0u64;
    let mut counterexample = None;
    'outer: for total in 2..=max_total {
        for m in 1..total {
            let n = total - m;
            let left = T::universe(&interval(m));
            let right = T::universe(&shifted_interval(n, m));
            let found = match strategy {
                SearchStrategy::Reduced => {
                    match scan_pairs(id, &left, &right, false, &mut pairs_checked)? {
                        Some(q) => Some(q),
                        None => scan_pairs(id, &right, &left, true, &mut pairs_checked)?,
                    }
                }
                SearchStrategy::PairsLeftOnly => {
                    scan_pairs(id, &left, &right, false, &mut pairs_checked)?
                }
                SearchStrategy::PairsRightOnly => {
                    scan_pairs(id, &right, &left, true, &mut pairs_checked)?
                }
                SearchStrategy::FullQuadruple => {
                    scan_full(id, &left, &right, &mut pairs_checked)?
                }
            };
            if let Some(q) = found {
                counterexample = Some(T::wrap(q));
                break 'outer;
            }
        }
    }
    Ok(CompatReport {
        statistic: id,
        mode: T::MODE,
        max_total_length: max_total,
        verdict: if counterexample.is_some() {
            Verdict::Counterexample
        } else {
            Verdict::Compatible
        },
        counterexample,
        pairs_checked,
    })
}

/// Exhaustively checks linear shuffle compatibility of `id` over all
/// standardized operand pairs with total length up to `max_total`.
pub fn check_linear_compat(id: StatisticId, max_total: u32) -> Result<CompatReport, Error> {
    if !id.is_linear() {
        return Err(Error::NotLinear(id));
    }
    search::<Word>(id, max_total, SearchStrategy::Reduced)
}

pub fn check_linear_compat_with(
    id: StatisticId,
    max_total: u32,
    strategy: SearchStrategy,
) -> Result<CompatReport, Error> {
    if !id.is_linear() {
        return Err(Error::NotLinear(id));
    }
    search::<Word>(id, max_total, strategy)
}

/// Exhaustively checks cyclic shuffle compatibility of `id` over all
/// standardized operand pairs with total length up to `max_total`.
pub fn check_cyclic_compat(id: StatisticId, max_total: u32) -> Result<CompatReport, Error> {
    if !id.is_cyclic() {
        return Err(Error::NotCyclic(id));
    }
    search::<Cycle>(id, max_total, SearchStrategy::Reduced)
}

pub fn check_cyclic_compat_with(
    id: StatisticId,
    max_total: u32,
    strategy: SearchStrategy,
) -> Result<CompatReport, Error> {
    if !id.is_cyclic() {
        return Err(Error::NotCyclic(id));
    }
    search::<Cycle>(id, max_total, strategy)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftCondition {
    A,
    B,
}

impl fmt::Display for LiftCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftCondition::A => "a",
            LiftCondition::B => "b",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftVerdict {
    Holds,
    Violation,
}

/// Witness pair of cycles violating a lifting hypothesis; replayable through
/// the statistics module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingViolation {
    pub first: Cycle,
    pub second: Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingReport {
    pub cyclic_statistic: StatisticId,
    pub linear_statistic: StatisticId,
    pub condition: LiftCondition,
    pub bound: u32,
    pub verdict: LiftVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<LiftingViolation>,
}

fn check_stat_tags(cid: StatisticId, lid: StatisticId) -> Result<(), Error> {
    if !cid.is_cyclic() {
        return Err(Error::NotCyclic(cid));
    }
    if !lid.is_linear() {
        return Err(Error::NotLinear(lid));
    }
    Ok(())
}

fn lifting_search<K, F>(
    cid: StatisticId,
    lid: StatisticId,
    condition: LiftCondition,
    bound: u32,
    keys: F,
) -> Result<LiftingReport, Error>
where
    K: PartialEq,
    F: Fn(&Cycle) -> Result<(StatValue, K), Error>,
{
    let mut violation = None;
    'outer: for n in 1..=bound {
        let cycles = Cycle::universe(&interval(n));
        // (grouping key, value that must agree within a group)
        let keyed: Vec<(StatValue, K)> =
            cycles.iter().map(&keys).collect::<Result<_, Error>>()?;
        let mut groups: BTreeMap<&StatValue, Vec<usize>> = BTreeMap::new();
        for (k, (key, _)) in keyed.iter().enumerate() {
            groups.entry(key).or_default().push(k);
        }
        for g in groups.values() {
            for (&x, &y) in g.iter().tuple_combinations() {
                if keyed[x].1 != keyed[y].1 {
                    violation = Some(LiftingViolation {
                        first: cycles[x].clone(),
                        second: cycles[y].clone(),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(LiftingReport {
        cyclic_statistic: cid,
        linear_statistic: lid,
        condition,
        bound,
        verdict: if violation.is_some() {
            LiftVerdict::Violation
        } else {
            LiftVerdict::Holds
        },
        violation,
    })
}

/// Hypothesis (a): equal linear statistic on the maximum-removed words
/// forces equal cyclic statistic on the cycles, for all equal-length cycle
/// pairs over `[n]`, `n <= max_n`.
pub fn check_lifting_a(
    cid: StatisticId,
    lid: StatisticId,
    max_n: u32,
) -> Result<LiftingReport, Error> {
    check_stat_tags(cid, lid)?;
    lifting_search(cid, lid, LiftCondition::A, max_n, |c| {
        Ok((linear_stat(lid, &max_removal(c))?, cyclic_stat(cid, c)?))
    })
}

/// Multiset of the linear statistic over all splits of a cycle.  Equality of
/// these multisets is exactly the existence of the index bijection `f` in
/// hypothesis (b).
pub fn split_value_multiset(c: &Cycle, lid: StatisticId) -> Result<Distribution, Error> {
    c.alphabet()
        .into_iter()
        .map(|i| linear_stat(lid, &split(c, i)?))
        .collect()
}

/// Hypothesis (b): cycles over `[m]` with equal cyclic statistic admit an
/// index bijection matching the linear statistic of their splits, for all
/// `m <= max_m`.
pub fn check_lifting_b(
    cid: StatisticId,
    lid: StatisticId,
    max_m: u32,
) -> Result<LiftingReport, Error> {
    check_stat_tags(cid, lid)?;
    lifting_search(cid, lid, LiftCondition::B, max_m, |c| {
        Ok((cyclic_stat(cid, c)?, split_value_multiset(c, lid)?))
    })
}

/// Replays a lifting violation: returns true when the stored pair really
/// does satisfy the hypothesis' premise while breaking its conclusion.
pub fn replay_lifting_violation(report: &LiftingReport) -> Result<bool, Error> {
    let Some(v) = &report.violation else {
        return Ok(false);
    };
    let (cid, lid) = (report.cyclic_statistic, report.linear_statistic);
    match report.condition {
        LiftCondition::A => {
            let premise = linear_stat(lid, &max_removal(&v.first))?
                == linear_stat(lid, &max_removal(&v.second))?;
            let conclusion = cyclic_stat(cid, &v.first)? == cyclic_stat(cid, &v.second)?;
            Ok(premise && !conclusion)
        }
        LiftCondition::B => {
            let premise = cyclic_stat(cid, &v.first)? == cyclic_stat(cid, &v.second)?;
            let conclusion =
                split_value_multiset(&v.first, lid)? == split_value_multiset(&v.second, lid)?;
            Ok(premise && !conclusion)
        }
    }
}
