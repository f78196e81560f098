//! Core permutation representations: words, cycles, standardization, and
//! index-set arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::Error;

/// A set of 1-based positions in `[n]` for some associated length `n`.
pub type IndexSet = BTreeSet<u32>;

/// A linear permutation: a finite sequence of distinct positive integers.
///
/// The empty word is valid.  Entries need not be `1..n`; any finite subset of
/// the positive integers may serve as the alphabet.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    entries: Vec<u32>,
}

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for &e in &entries {
            if e == 0 {
                return Err(Error::NonPositiveEntry);
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEntry(e));
            }
        }
        Ok(Word { entries })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn alphabet(&self) -> IndexSet {
        self.entries.iter().copied().collect()
    }

    /// All rotations of the word, the word itself first and then successive
    /// left-rotations.  The empty word has a single (empty) rotation.
    pub fn rotations(&self) -> Vec<Word> {
        if self.entries.is_empty() {
            return vec![Word::empty()];
        }
        (0..self.len())
            .map(|k| {
                let mut v = self.entries[k..].to_vec();
                v.extend_from_slice(&self.entries[..k]);
                Word { entries: v }
            })
            .collect()
    }

    /// Order-preserving relabeling onto `target`: the k-th smallest entry is
    /// replaced by the k-th smallest element of `target`.
    pub fn standardize(&self, target: &IndexSet) -> Result<Word, Error> {
        if target.len() != self.len() {
            return Err(Error::SizeMismatch {
                word: self.len(),
                target: target.len(),
            });
        }
        if target.contains(&0) {
            return Err(Error::NonPositiveEntry);
        }
        let map: BTreeMap<u32, u32> = self
            .alphabet()
            .into_iter()
            .zip(target.iter().copied())
            .collect();
        Ok(Word {
            entries: self.entries.iter().map(|e| map[e]).collect(),
        })
    }

    /// The subsequence of entries lying in `alphabet`, order preserved.
    pub fn restrict(&self, alphabet: &IndexSet) -> Word {
        Word {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|e| alphabet.contains(e))
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "\u{3b5}");
        }
        if self.entries.iter().all(|&e| e < 10) {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// A cyclic permutation: the rotation class of a nonempty [`Word`], stored as
/// the unique rotation whose first entry is minimal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cycle {
    canonical: Word,
}

impl Cycle {
    /// Canonicalizes any rotation of the class.  Empty input is rejected.
    pub fn from_word(w: &Word) -> Result<Self, Error> {
        if w.is_empty() {
            return Err(Error::EmptyCycle);
        }
        let min = *w.entries.iter().min().expect("nonempty");
        let pos = w.entries.iter().position(|&e| e == min).expect("present");
        let mut v = w.entries[pos..].to_vec();
        v.extend_from_slice(&w.entries[..pos]);
        Ok(Cycle {
            canonical: Word { entries: v },
        })
    }

    pub fn from_entries(entries: Vec<u32>) -> Result<Self, Error> {
        Cycle::from_word(&Word::new(entries)?)
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet(&self) -> IndexSet {
        self.canonical.alphabet()
    }

    /// Rotations of the canonical representative.
    pub fn rotations(&self) -> Vec<Word> {
        self.canonical.rotations()
    }

    /// Standardizes the canonical word entrywise, then re-canonicalizes.
    pub fn standardize(&self, target: &IndexSet) -> Result<Cycle, Error> {
        Cycle::from_word(&self.canonical.standardize(target)?)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical)
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.canonical.serialize(serializer)
    }
}

/// `{a + n (mod m) | a in s}` with representatives chosen in `[m]`.
pub fn shift_mod(s: &IndexSet, n: u32, m: u32) -> Result<IndexSet, Error> {
    let mut out = IndexSet::new();
    for &a in s {
        if a == 0 || a > m {
            return Err(Error::OutOfRange {
                element: a,
                bound: m,
            });
        }
        out.insert((a - 1 + n) % m + 1);
    }
    Ok(out)
}

/// The interval `{1, ..., n}` as an [`IndexSet`].
pub fn interval(n: u32) -> IndexSet {
    (1..=n).collect()
}

/// The shifted interval `{lo+1, ..., lo+n}`.
pub fn shifted_interval(n: u32, lo: u32) -> IndexSet {
    (lo + 1..=lo + n).collect()
}
