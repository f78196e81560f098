//! Constructive maps between shuffle sets: splitting, maximum removal, the
//! adjacent-value swap, and the statistic-preserving bijections built from
//! them.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Error;
use crate::perm_core::{interval, shifted_interval, Cycle, Word};
use crate::shuffles::{cyclic_shuffles_at, linear_shuffles};
use crate::statistics::{linear_stat, StatValue, StatisticId};

/// `S_i`: the unique rotation of the cycle that starts with entry `i`.
pub fn split(c: &Cycle, i: u32) -> Result<Word, Error> {
    let e = c.canonical().entries();
    let pos = e
        .iter()
        .position(|&x| x == i)
        .ok_or(Error::MissingEntry(i))?;
    let mut v = e[pos..].to_vec();
    v.extend_from_slice(&e[..pos]);
    Ok(Word::new(v).expect("rotation of a valid word"))
}

/// `M`: split at the maximum entry, then delete it.  A bijection from
/// cycles on `A` to words on `A` minus its maximum.
pub fn max_removal(c: &Cycle) -> Word {
    let top = *c
        .canonical()
        .entries()
        .iter()
        .max()
        .expect("cycle is nonempty");
    let w = split(c, top).expect("maximum is present");
    Word::new(w.entries()[1..].to_vec()).expect("subword of a valid word")
}

/// Inverse of `M`: prepend `top` (which must exceed every entry of `w`) and
/// close up into a cycle.
pub fn max_removal_inv(w: &Word, top: u32) -> Result<Cycle, Error> {
    if top == 0 {
        return Err(Error::NonPositiveEntry);
    }
    if let Some(&e) = w.entries().iter().find(|&&e| e >= top) {
        return Err(Error::TopNotMaximal { top, entry: e });
    }
    let mut v = vec![top];
    v.extend_from_slice(w.entries());
    Cycle::from_entries(v)
}

/// `T_i`: exchange the entries `i-1` and `i` unless they are cyclically
/// adjacent, in which case the cycle is returned unchanged.  Preserves
/// `cDes`.
pub fn swap_map(t: &Cycle, i: u32) -> Result<Cycle, Error> {
    if i < 2 {
        return Err(Error::MissingEntry(i.wrapping_sub(1)));
    }
    let e = t.canonical().entries();
    let n = e.len();
    let pos_lo = e
        .iter()
        .position(|&x| x == i - 1)
        .ok_or(Error::MissingEntry(i - 1))?;
    let pos_hi = e
        .iter()
        .position(|&x| x == i)
        .ok_or(Error::MissingEntry(i))?;
    let diff = (pos_hi + n - pos_lo) % n;
    let adjacent = diff == 1 || diff == n - 1;
    if adjacent {
        return Ok(t.clone());
    }
    let mut v = e.to_vec();
    v.swap(pos_lo, pos_hi);
    Cycle::from_entries(v)
}

/// An explicit bijection between two sets, stored as source/target pairs so
/// it can be inspected, replayed, and serialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionWitness<T> {
    pub pairs: Vec<(T, T)>,
}

impl<T: Ord> BijectionWitness<T> {
    /// Sources distinct, targets distinct, equal counts.
    pub fn is_bijection(&self) -> bool {
        let sources: BTreeSet<&T> = self.pairs.iter().map(|(a, _)| a).collect();
        let targets: BTreeSet<&T> = self.pairs.iter().map(|(_, b)| b).collect();
        sources.len() == self.pairs.len() && targets.len() == self.pairs.len()
    }
}

/// A statistic-preserving bijection between two word sets with equal
/// distributions, pairing within equal-value groups by canonical sort
/// order.  Unequal distributions are the failure signal that the statistic
/// is not shuffle compatible on this instance.
pub fn build_theta(
    src: &BTreeSet<Word>,
    dst: &BTreeSet<Word>,
    id: StatisticId,
) -> Result<BijectionWitness<Word>, Error> {
    if !id.is_linear() {
        return Err(Error::NotLinear(id));
    }
    let group = |set: &BTreeSet<Word>| -> Result<BTreeMap<StatValue, Vec<Word>>, Error> {
        let mut m: BTreeMap<StatValue, Vec<Word>> = BTreeMap::new();
        for w in set {
            m.entry(linear_stat(id, w)?).or_default().push(w.clone());
        }
        Ok(m)
    };
    let gs = group(src)?;
    let gd = group(dst)?;
    if gs.keys().collect::<Vec<_>>() != gd.keys().collect::<Vec<_>>() {
        return Err(Error::DistributionMismatch);
    }
    let mut pairs = Vec::with_capacity(src.len());
    for (value, ws) in &gs {
        let wd = &gd[value];
        if ws.len() != wd.len() {
            return Err(Error::DistributionMismatch);
        }
        pairs.extend(ws.iter().cloned().zip(wd.iter().cloned()));
    }
    Ok(BijectionWitness { pairs })
}

/// Pair the split indices of two cycles with equal cyclic-statistic value so
/// that matched splits carry equal linear-statistic values: the bijection
/// `f` of the lifting hypothesis, built by sorting splits on their values.
/// Fails when the split-value multisets differ.
pub fn matching_split_bijection(
    p: &Cycle,
    p2: &Cycle,
    id: StatisticId,
) -> Result<Vec<(u32, u32)>, Error> {
    if !id.is_linear() {
        return Err(Error::NotLinear(id));
    }
    if p.len() != p2.len() {
        return Err(Error::SizeMismatch {
            word: p.len(),
            target: p2.len(),
        });
    }
    let keyed = |c: &Cycle| -> Result<Vec<(StatValue, u32)>, Error> {
        let mut v: Vec<(StatValue, u32)> = c
            .alphabet()
            .into_iter()
            .map(|i| Ok((linear_stat(id, &split(c, i)?)?, i)))
            .collect::<Result<_, Error>>()?;
        v.sort();
        Ok(v)
    };
    let a = keyed(p)?;
    let b = keyed(p2)?;
    if a.iter().map(|(v, _)| v).ne(b.iter().map(|(v, _)| v)) {
        return Err(Error::DistributionMismatch);
    }
    Ok(a.into_iter().zip(b).map(|((_, i), (_, j))| (i, j)).collect())
}

/// The lifted bijection from the cell `p sh_i s` to `p2 sh_j s`: apply `M`,
/// then the linear-statistic-preserving pairing, then `M^{-1}` with top
/// `m+n`.
pub fn theta_prime(
    p: &Cycle,
    i: u32,
    p2: &Cycle,
    j: u32,
    s: &Cycle,
    id: StatisticId,
) -> Result<BijectionWitness<Cycle>, Error> {
    let m = p.len() as u32;
    let n = s.len() as u32;
    if p2.len() != p.len() {
        return Err(Error::SizeMismatch {
            word: p.len(),
            target: p2.len(),
        });
    }
    if p.alphabet() != interval(m) || p2.alphabet() != interval(m) {
        return Err(Error::BadAlphabet {
            expected: format!("[{m}]"),
        });
    }
    if s.alphabet() != shifted_interval(n, m) {
        return Err(Error::BadAlphabet {
            expected: format!("[{n}]+{m}"),
        });
    }
    let top = m + n;
    let s_removed = max_removal(s);
    let src = linear_shuffles(&split(p, i)?, &s_removed)?;
    let dst = linear_shuffles(&split(p2, j)?, &s_removed)?;
    let theta = build_theta(&src, &dst, id)?;
    let forward: BTreeMap<&Word, &Word> = theta.pairs.iter().map(|(a, b)| (a, b)).collect();

    let mut pairs = Vec::new();
    for tau in cyclic_shuffles_at(p, i, s)? {
        let removed = max_removal(&tau);
        let image = forward
            .get(&removed)
            .expect("M maps the cell into the source shuffle set");
        let tau2 = max_removal_inv(image, top)?;
        pairs.push((tau, tau2));
    }
    Ok(BijectionWitness { pairs })
}
