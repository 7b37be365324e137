//! The explicit generating set Γ(S/d) of a quotient.
//!
//! Split a generating set G of S by residue mod d into classes G_0..G_{d-1}.
//! For every d-partition λ, pick generators from the classes named by the
//! parts of λ (a multiset of φ_λ(i) generators from G_i for each i); their
//! sum is divisible by d, and the quotient is an element of S/d. The union
//! over all λ generates S/d, usually with redundancy.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::dpartition::{enumerate_d_partitions, DPartition};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::{make_semigroup, quotient_oracle, GeneratorSet, NumericalSemigroup};

/// The classes G_i = {g in G : g ≡ i mod d}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueClasses {
    d: u64,
    classes: Vec<Vec<u64>>,
}

impl ResidueClasses {
    pub fn new(gens: &GeneratorSet, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDenominator);
        }
        let mut classes = vec![Vec::new(); d as usize];
        for g in gens.iter() {
            classes[(g % d) as usize].push(g);
        }
        Ok(Self { d, classes })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn class(&self, residue: u64) -> &[u64] {
        &self.classes[residue as usize]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// One derivation of a Γ element: a d-partition and a generator multiset
/// residue-matched to it, with `sum(generators) == d * element`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub partition: DPartition,
    pub generators: Vec<u64>,
}

/// Γ(S/d) with one witness per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    d: u64,
    elements: BTreeMap<u64, Witness>,
}

impl GammaSet {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> Vec<u64> {
        self.elements.keys().copied().collect()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains_key(&x)
    }

    pub fn witness(&self, x: u64) -> Option<&Witness> {
        self.elements.get(&x)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = (u64, &Witness)> {
        self.elements.iter().map(|(&x, w)| (x, w))
    }

    pub fn as_generator_set(&self) -> GeneratorSet {
        GeneratorSet::new(self.elements()).expect("Γ elements are positive")
    }
}

// Each Γ_λ element with the generator multiset that produced it, in the
// order combinations-with-repetition are generated.
fn gamma_lambda_with_witnesses(rc: &ResidueClasses, p: &DPartition) -> Vec<(u64, Vec<u64>)> {
    assert_eq!(rc.d, p.d(), "partition and classes disagree on d");
    let d = rc.d as u128;
    let per_class: Vec<Vec<Vec<u64>>> = p
        .multiplicities()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            rc.classes[i]
                .iter()
                .copied()
                .combinations_with_replacement(k)
                .collect()
        })
        .collect();
    if per_class.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    per_class
        .into_iter()
        .multi_cartesian_product()
        .map(|choice| {
            let gens: Vec<u64> = choice.into_iter().flatten().collect();
            let sum: u128 = gens.iter().map(|&g| g as u128).sum();
            debug_assert_eq!(sum % d, 0);
            ((sum / d) as u64, gens)
        })
        .collect()
}

/// Γ_λ(S/d) for one d-partition; empty when a required class is empty.
pub fn gamma_lambda(rc: &ResidueClasses, p: &DPartition) -> Vec<u64> {
    let mut out: Vec<u64> = gamma_lambda_with_witnesses(rc, p)
        .into_iter()
        .map(|(x, _)| x)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Γ(S/d) built from `gens` (the minimal generators of `s` when `None`).
pub fn gamma(
    s: &NumericalSemigroup,
    d: u64,
    gens: Option<&GeneratorSet>,
    limits: &Limits,
) -> Result<GammaSet> {
    let partitions = enumerate_d_partitions(d, limits)?;
    let gens = match gens {
        None => s.generators().clone(),
        Some(g) => {
            if make_semigroup(g).ok().as_ref() != Some(s) {
                return Err(Error::NotAGeneratingSet);
            }
            g.clone()
        }
    };
    gamma_from_generators(&gens, d, &partitions)
}

fn gamma_from_generators(
    gens: &GeneratorSet,
    d: u64,
    partitions: &[DPartition],
) -> Result<GammaSet> {
    let rc = ResidueClasses::new(gens, d)?;
    let mut elements = BTreeMap::new();
    for p in partitions {
        for (x, generators) in gamma_lambda_with_witnesses(&rc, p) {
            elements.entry(x).or_insert_with(|| Witness {
                partition: p.clone(),
                generators,
            });
        }
    }
    Ok(GammaSet { d, elements })
}

/// S/d as the semigroup generated by Γ(S/d).
pub fn quotient_via_gamma(
    s: &NumericalSemigroup,
    d: u64,
    limits: &Limits,
) -> Result<NumericalSemigroup> {
    let g = gamma(s, d, None, limits)?;
    make_semigroup(&g.as_generator_set())
}

/// Binomial coefficient with C(n, 0) = 1 and C(n, k) = 0 for n < k.
pub fn binomial(n: i64, k: i64) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    if k < 0 || n < k {
        return Ok(0);
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(n as u128 - k + i).ok_or(Error::Overflow)? / i;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// Upper bound on |Γ_λ|: Π_i C(|G_i| + φ_λ(i) - 1, φ_λ(i)).
pub fn gamma_lambda_bound(rc: &ResidueClasses, p: &DPartition) -> Result<u64> {
    p.multiplicities()
        .iter()
        .zip(rc.sizes())
        .try_fold(1u64, |acc, (&phi, size)| {
            let b = binomial(size as i64 + phi as i64 - 1, phi as i64)?;
            acc.checked_mul(b).ok_or(Error::Overflow)
        })
}

/// Σ over P(d) of the per-partition bound, for the minimal generators of `s`.
pub fn bound_partitioned(s: &NumericalSemigroup, d: u64, limits: &Limits) -> Result<u64> {
    let rc = ResidueClasses::new(s.generators(), d)?;
    enumerate_d_partitions(d, limits)?
        .iter()
        .try_fold(0u64, |acc, p| {
            acc.checked_add(gamma_lambda_bound(&rc, p)?)
                .ok_or(Error::Overflow)
        })
}

/// C(ν + d - 1, d).
pub fn bound_binomial(embedding_dimension: usize, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroDenominator);
    }
    binomial(embedding_dimension as i64 + d as i64 - 1, d as i64)
}

/// Both embedding-dimension bounds next to the realized value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub d: u64,
    pub nu: usize,
    pub nu_quotient: usize,
    pub gamma_size: usize,
    pub bound_partitioned: u64,
    pub bound_binomial: u64,
    pub sharp_partitioned: bool,
    pub sharp_binomial: bool,
}

impl BoundReport {
    pub fn compute(s: &NumericalSemigroup, d: u64, limits: &Limits) -> Result<Self> {
        let g = gamma(s, d, None, limits)?;
        let quotient = make_semigroup(&g.as_generator_set())?;
        let nu_quotient = quotient.embedding_dimension();
        let bound_partitioned = bound_partitioned(s, d, limits)?;
        let bound_binomial = bound_binomial(s.embedding_dimension(), d)?;
        Ok(Self {
            d,
            nu: s.embedding_dimension(),
            nu_quotient,
            gamma_size: g.len(),
            bound_partitioned,
            bound_binomial,
            sharp_partitioned: nu_quotient as u64 == bound_partitioned,
            sharp_binomial: nu_quotient as u64 == bound_binomial,
        })
    }

    /// ν(S/d) ≤ |Γ| ≤ partitioned bound and ν(S/d) ≤ binomial bound.
    pub fn chain_holds(&self) -> bool {
        self.nu_quotient <= self.gamma_size
            && self.gamma_size as u64 <= self.bound_partitioned
            && self.nu_quotient as u64 <= self.bound_binomial
    }
}

/// Generators of S_d = <d+1, d², d²+2d, ..., d²+(d-1)d>.
pub fn family_s_d_generators(d: u64) -> Result<GeneratorSet> {
    if d < 2 {
        return Err(Error::BadParameter(format!("S_d needs d >= 2, got {d}")));
    }
    let sq = d.checked_mul(d).ok_or(Error::Overflow)?;
    let mut gens = vec![d + 1, sq];
    for k in 2..d {
        gens.push(sq.checked_add(k * d).ok_or(Error::Overflow)?);
    }
    GeneratorSet::new(gens)
}

/// The family attaining the partitioned bound: ν(S_d/d) = d.
pub fn family_s_d(d: u64) -> Result<NumericalSemigroup> {
    make_semigroup(&family_s_d_generators(d)?)
}

/// Largest allowed value of d^n for the S_{n,d} family.
pub const FAMILY_POWER_LIMIT: u64 = 1 << 62;

/// G_{n,d} = {d^n - d - 1 + 2^(i-1) d : i = 1..n}.
pub fn family_s_n_d_generators(n: u64, d: u64) -> Result<GeneratorSet> {
    if n < 2 || d < 2 {
        return Err(Error::BadParameter(format!(
            "S_(n,d) needs n, d >= 2, got n={n}, d={d}"
        )));
    }
    let power = u32::try_from(n)
        .ok()
        .and_then(|n| d.checked_pow(n))
        .filter(|&p| p <= FAMILY_POWER_LIMIT)
        .ok_or(Error::Overflow)?;
    let base = power - d - 1;
    let gens = (0..n)
        .map(|i| {
            1u64.checked_shl(i as u32)
                .filter(|_| i < 63)
                .and_then(|t| t.checked_mul(d))
                .and_then(|t| t.checked_add(base))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    let set = GeneratorSet::new(gens)?;
    // max < 2 min makes every generator minimal.
    if set.largest() >= set.smallest().map(|m| 2 * m) {
        return Err(Error::BadParameter(format!(
            "G_({n},{d}) is not minimal: max {} >= 2 * min {}",
            set.largest().unwrap_or(0),
            set.smallest().unwrap_or(0)
        )));
    }
    Ok(set)
}

/// The family attaining the binomial bound.
pub fn family_s_n_d(n: u64, d: u64) -> Result<NumericalSemigroup> {
    make_semigroup(&family_s_n_d_generators(n, d)?)
}

/// Result of checking one family member against a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessCheck {
    pub family: String,
    pub generators: Vec<u64>,
    pub d: u64,
    pub nu_quotient: usize,
    pub gamma_size: usize,
    pub bound: u64,
    pub quotient_matches_oracle: bool,
    pub sharp: bool,
}

/// ν(S_d/d) against the partitioned bound, with S_d/d = {0, d, d+1, ...}.
pub fn check_s_d(d: u64, limits: &Limits) -> Result<SharpnessCheck> {
    let s = family_s_d(d)?;
    let report = BoundReport::compute(&s, d, limits)?;
    let oracle = quotient_oracle(&s, d)?;
    let expected = NumericalSemigroup::from_membership((0..d).map(|x| x == 0).collect());
    let via_gamma = quotient_via_gamma(&s, d, limits)?;
    Ok(SharpnessCheck {
        family: format!("S_{d}"),
        generators: s.generators().as_slice().to_vec(),
        d,
        nu_quotient: oracle.embedding_dimension(),
        gamma_size: report.gamma_size,
        bound: report.bound_partitioned,
        quotient_matches_oracle: via_gamma == oracle,
        sharp: oracle == expected
            && oracle.embedding_dimension() as u64 == d
            && report.bound_partitioned == d,
    })
}

/// ν(S_{n,d}/d) against C(n + d - 1, d).
pub fn check_s_n_d(n: u64, d: u64, limits: &Limits) -> Result<SharpnessCheck> {
    let s = family_s_n_d(n, d)?;
    let report = BoundReport::compute(&s, d, limits)?;
    let oracle = quotient_oracle(&s, d)?;
    let via_gamma = quotient_via_gamma(&s, d, limits)?;
    Ok(SharpnessCheck {
        family: format!("S_({n},{d})"),
        generators: s.generators().as_slice().to_vec(),
        d,
        nu_quotient: oracle.embedding_dimension(),
        gamma_size: report.gamma_size,
        bound: report.bound_binomial,
        quotient_matches_oracle: via_gamma == oracle,
        sharp: oracle.embedding_dimension() as u64 == report.bound_binomial,
    })
}
