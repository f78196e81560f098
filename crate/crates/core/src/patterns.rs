//! Cyclic pattern containment, avoidance enumeration, and the cyclic
//! descent generating polynomial of the avoiders.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::Error;
use crate::perm_core::{interval, Cycle, Word};
use crate::qpoly::QPoly;
use crate::statistics::cdes_set_linear;

/// A set of patterns, each standardized to `[k]` for its own length `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PatternSet {
    patterns: BTreeSet<Cycle>,
}

impl PatternSet {
    /// Rejects any pattern that is not its own cyclic standardization,
    /// naming the standardized form in the error.
    pub fn new<I: IntoIterator<Item = Cycle>>(patterns: I) -> Result<Self, Error> {
        let mut out = BTreeSet::new();
        for p in patterns {
            let std = p.standardize(&interval(p.len() as u32))?;
            if std != p {
                return Err(Error::NotStandardized {
                    given: p.to_string(),
                    expected: std.to_string(),
                });
            }
            out.insert(p);
        }
        Ok(PatternSet { patterns: out })
    }

    pub fn empty() -> Self {
        PatternSet::default()
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Cycle> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

/// True iff some circular subword of `s` cyclically standardizes to the
/// (standardized) pattern `p`.  Subwords are enumerated as subsequences of
/// the canonical representative; rotating the host rotates every subsequence
/// cyclically, so the answer is rotation-invariant.
pub fn cyclic_contains(s: &Cycle, p: &Cycle) -> Result<bool, Error> {
    let k = p.len();
    let std_p = p.standardize(&interval(k as u32))?;
    if std_p != *p {
        return Err(Error::NotStandardized {
            given: p.to_string(),
            expected: std_p.to_string(),
        });
    }
    if k > s.len() {
        return Ok(false);
    }
    let entries = s.canonical().entries();
    for positions in (0..s.len()).combinations(k) {
        let sub: Vec<u32> = positions.iter().map(|&i| entries[i]).collect();
        let candidate = Cycle::from_word(&Word::new(sub).expect("distinct entries"))?
            .standardize(&interval(k as u32))?;
        if candidate == *p {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All cycles of `[n]` avoiding every pattern in `ps`, sorted on canonical
/// representatives.
pub fn avoiders(n: u32, ps: &PatternSet) -> Result<Vec<Cycle>, Error> {
    if n == 0 {
        return Err(Error::NonPositiveLength);
    }
    let mut out = Vec::new();
    for rest in (2..=n).permutations(n as usize - 1) {
        let mut v = vec![1];
        v.extend(rest);
        let c = Cycle::from_entries(v)?;
        let mut avoids = true;
        for p in ps.patterns() {
            if cyclic_contains(&c, p)? {
                avoids = false;
                break;
            }
        }
        if avoids {
            out.push(c);
        }
    }
    Ok(out)
}

/// `D_n = sum over the avoiders of q^cdes`.
pub fn avoidance_poly(n: u32, ps: &PatternSet) -> Result<QPoly, Error> {
    let mut poly = QPoly::zero();
    for c in avoiders(n, ps)? {
        let cdes = cdes_set_linear(c.canonical())?.len();
        poly.add_monomial(cdes, 1);
    }
    Ok(poly)
}
