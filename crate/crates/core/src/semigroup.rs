//! Numerical semigroups: construction, membership and the usual invariants.
//!
//! A semigroup is stored as its membership table up to `frobenius + 1`;
//! every integer past the end of the table is an element. The minimal
//! generating set is derived from the table through the Apéry set of the
//! multiplicity, so two semigroups compare equal exactly when they contain
//! the same integers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of positive integers, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorSet(Vec<u64>);

impl GeneratorSet {
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        if elements.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self(elements))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |acc, &g| acc.gcd(&g))
    }

    pub fn smallest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }
}

impl TryFrom<Vec<u64>> for GeneratorSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<GeneratorSet> for Vec<u64> {
    fn from(g: GeneratorSet) -> Self {
        g.0
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `"7,9,13"`.
    fn from_str(s: &str) -> Result<Self> {
        let elements = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// A numerical semigroup: a submonoid of N with finite complement.
///
/// Immutable once built. `frobenius == -1` encodes the full monoid N.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_gens: GeneratorSet,
    frobenius: i64,
    // Indices 0..=frobenius+1.
    membership: Vec<bool>,
}

/// Builds `<gens>`; the generators need not be minimal.
pub fn make_semigroup(gens: &GeneratorSet) -> Result<NumericalSemigroup> {
    NumericalSemigroup::generated_by(gens)
}

impl NumericalSemigroup {
    /// The full monoid N.
    pub fn full() -> Self {
        Self::from_membership(vec![true])
    }

    pub fn generated_by(gens: &GeneratorSet) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let g = gens.gcd();
        if g != 1 {
            return Err(Error::NonCoprimeGenerators(g));
        }
        let apery = apery_by_shortest_paths(gens.as_slice());
        let m = gens.as_slice()[0];
        let frobenius = *apery.iter().max().expect("nonempty") as i64 - m as i64;
        Ok(Self::from_membership(sieve(
            gens.as_slice(),
            (frobenius + 2) as usize,
        )))
    }

    pub fn from_str_gens(s: &str) -> Result<Self> {
        Self::generated_by(&s.parse()?)
    }

    /// Builds a semigroup from a membership table in which every integer
    /// at or beyond `table.len()` is taken to be an element.
    ///
    /// The table must be closed under addition with `table[0] == true`;
    /// this is not re-verified (see [`NumericalSemigroup::is_closed`]).
    pub fn from_membership(mut table: Vec<bool>) -> Self {
        assert!(table.first().copied().unwrap_or(true), "0 must be a member");
        let frobenius = table.iter().rposition(|&b| !b).map_or(-1, |f| f as i64);
        table.resize((frobenius + 2) as usize, true);
        let mut s = Self {
            min_gens: GeneratorSet(Vec::new()),
            frobenius,
            membership: table,
        };
        s.min_gens = s.reduce_generators();
        s
    }

    // The multiplicity m together with every nonzero Apéry element of m that
    // is not the sum of two nonzero Apéry elements. Any decomposition of an
    // Apéry element into two nonzero members uses Apéry elements only.
    fn reduce_generators(&self) -> GeneratorSet {
        let m = self.multiplicity();
        let apery = self.apery_unchecked(m);
        let mut nonzero: Vec<u64> = apery.iter().copied().filter(|&w| w != 0).collect();
        nonzero.sort_unstable();
        let is_ap = |x: u64| apery[(x % m) as usize] == x;
        let mut gens = vec![m];
        for &w in &nonzero {
            let decomposable = nonzero
                .iter()
                .take_while(|&&a| 2 * a <= w)
                .any(|&a| is_ap(w - a));
            if !decomposable {
                gens.push(w);
            }
        }
        gens.sort_unstable();
        GeneratorSet(gens)
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.min_gens
    }

    /// ν(S), the number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.min_gens.len()
    }

    /// Largest integer outside S, or -1 for N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.membership
            .iter()
            .skip(1)
            .position(|&b| b)
            .map_or(self.membership.len() as u64, |p| p as u64 + 1)
    }

    pub fn contains(&self, x: u64) -> bool {
        usize::try_from(x)
            .ok()
            .and_then(|i| self.membership.get(i).copied())
            .unwrap_or(true)
    }

    /// The membership table `0..=frobenius+1`.
    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(x, _)| x as u64)
            .collect()
    }

    /// Number of gaps (the genus).
    pub fn genus(&self) -> usize {
        self.membership.iter().filter(|&&b| !b).count()
    }

    /// `result[i]` is the least element of S congruent to `i` mod `n`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::ApNotMember(n));
        }
        Ok(self.apery_unchecked(n))
    }

    fn apery_unchecked(&self, n: u64) -> Vec<u64> {
        let mut ap = vec![u64::MAX; n as usize];
        let mut missing = n;
        let mut x = 0u64;
        while missing > 0 {
            let r = (x % n) as usize;
            if ap[r] == u64::MAX && self.contains(x) {
                ap[r] = x;
                missing -= 1;
            }
            x += 1;
        }
        ap
    }

    /// For every integer z, exactly one of z and F(S) - z lies in S.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.is_full() {
            return Err(Error::FullMonoid);
        }
        let f = self.frobenius as u64;
        Ok((0..=f).all(|z| self.contains(z) != self.contains(f - z)))
    }

    /// Checks additive closure of the stored table.
    pub fn is_closed(&self) -> bool {
        let members: Vec<usize> = (1..self.membership.len())
            .filter(|&x| self.membership[x])
            .collect();
        let len = self.membership.len();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if a + b >= len {
                    break;
                }
                if !self.membership[a + b] {
                    return false;
                }
            }
        }
        self.membership[0]
    }

    /// Elements of S in `0..=bound`.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }

    pub fn to_json(&self) -> SemigroupJson {
        SemigroupJson {
            min_gens: self.min_gens.as_slice().to_vec(),
            frobenius: self.frobenius,
            gaps: self.gaps(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.min_gens)
    }
}

/// JSON object form of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub min_gens: Vec<u64>,
    pub frobenius: i64,
    pub gaps: Vec<u64>,
}

impl TryFrom<SemigroupJson> for NumericalSemigroup {
    type Error = Error;

    /// Rebuilds from `min_gens` and checks the other fields agree.
    fn try_from(j: SemigroupJson) -> Result<Self> {
        let s = make_semigroup(&GeneratorSet::new(j.min_gens.clone())?)?;
        if s.min_gens.as_slice() != j.min_gens.as_slice()
            || s.frobenius != j.frobenius
            || s.gaps() != j.gaps
        {
            return Err(Error::BadInput(
                "JSON fields are inconsistent with min_gens".into(),
            ));
        }
        Ok(s)
    }
}

/// S/d = {x : dx in S}, computed straight from the definition.
pub fn quotient_oracle(s: &NumericalSemigroup, d: u64) -> Result<NumericalSemigroup> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    if s.is_full() {
        return Ok(NumericalSemigroup::full());
    }
    let top = s.frobenius as u64 / d + 1;
    let table = (0..=top).map(|x| s.contains(d * x)).collect();
    Ok(NumericalSemigroup::from_membership(table))
}

// Least element of <gens> in each residue class mod min(gens): shortest
// paths on the residue graph, edge r -> r+g of weight g.
fn apery_by_shortest_paths(gens: &[u64]) -> Vec<u64> {
    let m = gens[0];
    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0u64))]);
    while let Some(Reverse((w, r))) = heap.pop() {
        if w > dist[r as usize] {
            continue;
        }
        for &g in &gens[1..] {
            let next = ((r + g) % m) as usize;
            let nw = w + g;
            if nw < dist[next] {
                dist[next] = nw;
                heap.push(Reverse((nw, next as u64)));
            }
        }
    }
    dist
}

/// Membership of `<gens>` on `0..len` by the coin-problem recurrence.
pub(crate) fn sieve(gens: &[u64], len: usize) -> Vec<bool> {
    let mut table = vec![false; len.max(1)];
    table[0] = true;
    for x in 1..table.len() {
        table[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && table[x - g as usize]);
    }
    table
}
