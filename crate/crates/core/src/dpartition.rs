//! d-partitions: nondecreasing residue sequences in `[0, d)` that sum to
//! 0 mod d while no nonempty proper sub-multiset does. Apart from the
//! trivial `(0)` these are the minimal zero-sum sequences over Z_d.
//!
//! Enumeration is a depth-first search over nondecreasing sequences that
//! carries the set of subset sums reachable mod d as a bit mask. A prefix
//! stays alive only while it is zero-sum free; appending a part that brings
//! the total to 0 yields a d-partition, since any zero-sum proper subset of
//! the result would leave a zero-sum complement inside the prefix.

use std::cmp::Ordering;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::{Limits, MASK_MAX_D};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DPartition {
    d: u64,
    parts: Vec<u64>,
}

impl DPartition {
    /// Validates `parts` (in any order) as a d-partition and stores it sorted.
    pub fn new(mut parts: Vec<u64>, d: u64) -> Result<Self> {
        parts.sort_unstable();
        let signed: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        if !is_d_partition(&signed, d) {
            return Err(Error::BadInput(format!("{parts:?} is not a {d}-partition")));
        }
        Ok(Self { d, parts })
    }

    pub fn trivial(d: u64) -> Self {
        Self { d, parts: vec![0] }
    }

    fn from_sorted_unchecked(parts: Vec<u64>, d: u64) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(parts.len() as u64 <= d);
        Self { d, parts }
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts == [0]
    }

    /// The enumeration function: how many parts equal `n`.
    pub fn multiplicity(&self, n: u64) -> Result<usize> {
        if n >= self.d {
            return Err(Error::OutOfRange {
                value: n,
                d: self.d,
            });
        }
        Ok(self.parts.iter().filter(|&&p| p == n).count())
    }

    /// Multiplicities for every residue `0..d`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.d as usize];
        for &p in &self.parts {
            counts[p as usize] += 1;
        }
        counts
    }

    /// `(d - λ_m, ..., d - λ_1)`; `None` for the trivial partition.
    pub fn complement(&self) -> Option<Self> {
        if self.is_trivial() {
            return None;
        }
        let parts = self.parts.iter().rev().map(|&p| self.d - p).collect();
        Some(Self::from_sorted_unchecked(parts, self.d))
    }

    /// Sort key for listings: shorter first, then lexicographic.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for DPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// A multiset of residues mod d whose sum is 0 mod d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSequence {
    d: u64,
    residues: Vec<u64>,
}

impl ResidueSequence {
    pub fn new(residues: Vec<u64>, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDenominator);
        }
        if let Some(&value) = residues.iter().find(|&&r| r >= d) {
            return Err(Error::OutOfRange { value, d });
        }
        let sum = residues.iter().fold(0u64, |acc, &r| (acc + r) % d);
        if sum != 0 {
            return Err(Error::BadResidueSum { d, sum });
        }
        Ok(Self { d, residues })
    }

    /// Reduces arbitrary integers mod d first.
    pub fn from_integers(values: &[u64], d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::new(values.iter().map(|v| v % d).collect(), d)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

/// Checks the three defining conditions on `parts` after sorting.
///
/// Out-of-range or negative entries make the answer `false`.
pub fn is_d_partition(parts: &[i64], d: u64) -> bool {
    if d == 0 || parts.is_empty() {
        return false;
    }
    if parts.iter().any(|&p| p < 0 || p as u64 >= d) {
        return false;
    }
    let mut sorted: Vec<u64> = parts.iter().map(|&p| p as u64).collect();
    sorted.sort_unstable();
    if sorted.iter().fold(0, |acc, &p| (acc + p) % d) != 0 {
        return false;
    }
    // With total 0, a zero-sum proper subset exists iff dropping one part
    // leaves a sequence with a nonempty zero-sum subset.
    let (_, rest) = sorted.split_last().expect("nonempty");
    zero_sum_free(rest, d)
}

fn zero_sum_free(seq: &[u64], d: u64) -> bool {
    let d = d as usize;
    let mut reach = vec![false; d];
    for &p in seq {
        let p = p as usize;
        let mut next = reach.clone();
        next[p] = true;
        for (r, _) in reach.iter().enumerate().filter(|(_, &b)| b) {
            next[(r + p) % d] = true;
        }
        if next[0] {
            return false;
        }
        reach = next;
    }
    true
}

/// P(d) in canonical order: by length, then lexicographically.
pub fn enumerate_d_partitions(d: u64, limits: &Limits) -> Result<Vec<DPartition>> {
    limits.check(d)?;
    let mut avail = vec![d as usize; d as usize];
    avail[0] = 1;
    let mut out = Vec::new();
    let _ = search(d, &mut avail, &mut |parts| {
        out.push(DPartition::from_sorted_unchecked(parts.to_vec(), d));
        ControlFlow::Continue(())
    });
    out.sort_by(DPartition::canonical_cmp);
    Ok(out)
}

/// |P(d)|.
pub fn count_d_partitions(d: u64, limits: &Limits) -> Result<usize> {
    limits.check(d)?;
    let mut avail = vec![d as usize; d as usize];
    avail[0] = 1;
    let mut n = 0;
    let _ = search(d, &mut avail, &mut |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}

/// Splits `rs` into d-partitions whose multiset union is `rs`.
///
/// Repeatedly removes the lexicographically smallest sub-multiset that is a
/// d-partition, so the output is deterministic. Zeros come out as `(0)`.
pub fn decompose(rs: &ResidueSequence) -> Result<Vec<DPartition>> {
    let d = rs.d;
    if d > MASK_MAX_D {
        return Err(Error::LimitExceeded { d, max: MASK_MAX_D });
    }
    let mut avail = vec![0usize; d as usize];
    for &r in &rs.residues {
        avail[r as usize] += 1;
    }
    let mut pieces = Vec::new();
    let mut remaining = rs.residues.len();
    while remaining > 0 {
        let mut found = None;
        let _ = search(d, &mut avail, &mut |parts| {
            found = Some(parts.to_vec());
            ControlFlow::Break(())
        });
        // Any nonempty zero-sum multiset contains a minimal zero-sum one.
        let parts = found.expect("zero-sum remainder always contains a d-partition");
        for &p in &parts {
            avail[p as usize] -= 1;
        }
        remaining -= parts.len();
        pieces.push(DPartition::from_sorted_unchecked(parts, d));
    }
    Ok(pieces)
}

// Visits every d-partition drawable from the residue counts in `avail`, in
// lexicographic order. `avail` is restored before returning.
fn search<F>(d: u64, avail: &mut [usize], visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    debug_assert!((1..=MASK_MAX_D).contains(&d));
    if avail[0] > 0 {
        visit(&[0])?;
    }
    let mut dfs = Dfs {
        d,
        full: if d == 64 { u64::MAX } else { (1u64 << d) - 1 },
        avail,
        stack: Vec::with_capacity(d as usize),
        visit,
    };
    dfs.extend(1, 0, 0)
}

struct Dfs<'a, F> {
    d: u64,
    full: u64,
    avail: &'a mut [usize],
    stack: Vec<u64>,
    visit: &'a mut F,
}

impl<F> Dfs<'_, F>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    fn rotate(&self, mask: u64, by: u64) -> u64 {
        ((mask << by) | (mask >> (self.d - by))) & self.full
    }

    // `reach`: residues hit by nonempty subsets of the stack (never 0).
    fn extend(&mut self, start: u64, reach: u64, total: u64) -> ControlFlow<()> {
        for p in start..self.d {
            if self.avail[p as usize] == 0 {
                continue;
            }
            let t = (total + p) % self.d;
            if t == 0 {
                self.stack.push(p);
                debug_assert!(self.stack.len() as u64 <= self.d);
                let flow = (self.visit)(&self.stack);
                self.stack.pop();
                flow?;
                continue;
            }
            if reach >> (self.d - p) & 1 == 1 {
                continue;
            }
            let next = reach | (1 << p) | self.rotate(reach, p);
            self.avail[p as usize] -= 1;
            self.stack.push(p);
            let flow = self.extend(p, next, t);
            self.stack.pop();
            self.avail[p as usize] += 1;
            flow?;
        }
        ControlFlow::Continue(())
    }
}
