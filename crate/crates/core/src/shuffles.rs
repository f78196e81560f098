//! Linear and cyclic shuffle sets, the indexed decomposition of cyclic
//! shuffles, and the counting / q-polynomial identities.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::Error;
use crate::perm_core::{interval, shifted_interval, Cycle, Word};
use crate::qpoly::{binomial, QPoly};
use crate::statistics::{linear_stat, StatValue, StatisticId};

fn check_disjoint(p: &Word, s: &Word) -> Result<(), Error> {
    let pa = p.alphabet();
    if let Some(&x) = s.entries().iter().find(|e| pa.contains(e)) {
        return Err(Error::OverlappingAlphabets(x));
    }
    Ok(())
}

/// All interleavings of `p` and `s` preserving both internal orders.
/// The operands must have disjoint alphabets; either may be empty.
pub fn linear_shuffles(p: &Word, s: &Word) -> Result<BTreeSet<Word>, Error> {
    check_disjoint(p, s)?;
    let total = p.len() + s.len();
    let mut out = BTreeSet::new();
    for combo in (0..total).combinations(p.len()) {
        let chosen: BTreeSet<usize> = combo.into_iter().collect();
        let mut pi = p.entries().iter();
        let mut si = s.entries().iter();
        let entries: Vec<u32> = (0..total)
            .map(|k| {
                if chosen.contains(&k) {
                    *pi.next().expect("p entry")
                } else {
                    *si.next().expect("s entry")
                }
            })
            .collect();
        out.insert(Word::new(entries).expect("disjoint distinct entries"));
    }
    Ok(out)
}

/// All cycles on the union alphabet whose restrictions to the operand
/// alphabets are rotations of `p` and `s` respectively.
///
/// Generation is constructive: fix the representative starting at `p`'s
/// first canonical entry, choose slots for the remaining entries of `p` in
/// order, and fill the rest with each rotation of `s`.  Each choice yields a
/// distinct cycle, so the size is `(m+n-1) * C(m+n-2, m-1)` by construction.
pub fn cyclic_shuffles(p: &Cycle, s: &Cycle) -> Result<BTreeSet<Cycle>, Error> {
    check_disjoint(p.canonical(), s.canonical())?;
    let m = p.len();
    let n = s.len();
    let total = m + n;
    let pw = p.canonical().entries();
    let mut out = BTreeSet::new();
    for combo in (1..total).combinations(m - 1) {
        let chosen: BTreeSet<usize> = combo.into_iter().collect();
        for rot in s.rotations() {
            let mut pi = pw[1..].iter();
            let mut si = rot.entries().iter();
            let mut entries = Vec::with_capacity(total);
            entries.push(pw[0]);
            for k in 1..total {
                if chosen.contains(&k) {
                    entries.push(*pi.next().expect("p entry"));
                } else {
                    entries.push(*si.next().expect("s entry"));
                }
            }
            let inserted = out.insert(Cycle::from_entries(entries).expect("valid cycle"));
            debug_assert!(inserted, "constructive generation must not repeat");
        }
    }
    Ok(out)
}

fn expect_standard_alphabets(p: &Cycle, s: &Cycle) -> Result<(u32, u32), Error> {
    let m = p.len() as u32;
    let n = s.len() as u32;
    if p.alphabet() != interval(m) {
        return Err(Error::BadAlphabet {
            expected: format!("[{m}]"),
        });
    }
    if s.alphabet() != shifted_interval(n, m) {
        return Err(Error::BadAlphabet {
            expected: format!("[{n}]+{m}"),
        });
    }
    Ok((m, n))
}

/// The cell of the shuffle-set partition in which `i` is the first element
/// of `[m]` met cyclically after `m+n`.  Requires the standardized
/// alphabets `[m]` and `[n]+m`.
pub fn cyclic_shuffles_at(p: &Cycle, i: u32, s: &Cycle) -> Result<BTreeSet<Cycle>, Error> {
    let (m, n) = expect_standard_alphabets(p, s)?;
    if i == 0 || i > m {
        return Err(Error::OutOfRange {
            element: i,
            bound: m,
        });
    }
    let top = m + n;
    let full = cyclic_shuffles(p, s)?;
    Ok(full
        .into_iter()
        .filter(|c| first_low_entry_after(c, top, m) == i)
        .collect())
}

/// First entry `<= m` encountered walking cyclically rightward from `top`.
fn first_low_entry_after(c: &Cycle, top: u32, m: u32) -> u32 {
    let e = c.canonical().entries();
    let n = e.len();
    let start = e.iter().position(|&x| x == top).expect("top present");
    for k in 1..n {
        let x = e[(start + k) % n];
        if x <= m {
            return x;
        }
    }
    unreachable!("a cycle on both alphabets has an entry <= m")
}

/// `(m+n-1) * C(m+n-2, m-1)`, the size of a cyclic shuffle set.
pub fn cyclic_shuffle_count(m: u32, n: u32) -> Result<u64, Error> {
    if m == 0 || n == 0 {
        return Err(Error::NonPositiveLength);
    }
    let (m, n) = (m as u64, n as u64);
    Ok((m + n - 1) * binomial(m + n - 2, m - 1))
}

fn maj(w: &Word) -> u64 {
    match linear_stat(StatisticId::Maj, w).expect("maj is linear") {
        StatValue::Int(v) => v,
        _ => unreachable!(),
    }
}

/// `sum over tau in p sh s of q^(maj tau)`.  By the shuffle identity this
/// equals `q^(maj p + maj s) * [m+n choose m]_q`; the equality is verified
/// in the test suite rather than assumed here.
pub fn maj_shuffle_poly(p: &Word, s: &Word) -> Result<QPoly, Error> {
    let mut poly = QPoly::zero();
    for tau in linear_shuffles(p, s)? {
        poly.add_monomial(maj(&tau) as usize, 1);
    }
    Ok(poly)
}
