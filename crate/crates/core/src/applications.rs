//! Symmetric closures, symmetric covers of a semigroup under division by d,
//! and the closed form for two-generator quotients by 3.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{quotient_oracle, sieve, GeneratorSet, NumericalSemigroup};

/// T = S ∪ {x ≥ F/2 : x > 0, F - x ∉ S}, for S with odd Frobenius number F.
///
/// The result is symmetric with the same Frobenius number.
pub fn symmetric_closure(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_full() {
        return Err(Error::FullMonoid);
    }
    let f = s.frobenius();
    if f % 2 == 0 {
        return Err(Error::EvenFrobenius(f));
    }
    let f = f as u64;
    let half = f.div_ceil(2);
    let table = (0..=f + 1)
        .map(|x| s.contains(x) || (x >= half && x > 0 && !s.contains(f - x)))
        .collect();
    let t = NumericalSemigroup::from_membership(table);
    debug_assert_eq!(t.frobenius(), f as i64);
    Ok(t)
}

/// ρ for a symmetric cover of S by division by d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverParameters {
    pub d: u64,
    pub rho: u64,
}

impl CoverParameters {
    /// Checks ρ odd, d ∤ ρ and ρ > 2·d·F(S).
    pub fn validate(&self, s: &NumericalSemigroup) -> Result<()> {
        if s.is_full() {
            return Err(Error::FullMonoid);
        }
        let bad = |reason: &str| {
            Err(Error::BadRho {
                rho: self.rho,
                reason: reason.into(),
            })
        };
        if self.d < 2 {
            return Err(Error::BadParameter(format!(
                "cover needs d >= 2, got {}",
                self.d
            )));
        }
        if self.rho.is_multiple_of(2) {
            return bad("rho must be odd");
        }
        if self.rho.is_multiple_of(self.d) {
            return bad("rho must not be a multiple of d");
        }
        let floor = 2 * self.d * s.frobenius() as u64;
        if self.rho <= floor {
            return bad(&format!("rho must exceed 2 d F(S) = {floor}"));
        }
        Ok(())
    }
}

/// Admissible ρ for (S, d) in increasing order.
pub fn admissible_rhos(s: &NumericalSemigroup, d: u64) -> Result<impl Iterator<Item = u64>> {
    if s.is_full() {
        return Err(Error::FullMonoid);
    }
    if d < 2 {
        return Err(Error::BadParameter(format!("cover needs d >= 2, got {d}")));
    }
    let floor = 2 * d * s.frobenius() as u64;
    Ok((floor + 1..)
        .filter(|r| r % 2 == 1)
        .filter(move |r| r % d != 0))
}

/// A symmetric T with F(T) = ρ and T/d = S.
///
/// Builds S_ρ = <d·g_1, ..., d·g_n> ∪ {ρ+1, ρ+2, ...} as a table and takes
/// its symmetric closure.
pub fn symmetric_cover(
    s: &NumericalSemigroup,
    params: CoverParameters,
) -> Result<NumericalSemigroup> {
    params.validate(s)?;
    let scaled: Vec<u64> = s.generators().iter().map(|g| g * params.d).collect();
    let rho = params.rho as usize;
    let mut table = sieve(&scaled, rho + 2);
    table[rho + 1] = true;
    let s_rho = NumericalSemigroup::from_membership(table);
    debug_assert_eq!(s_rho.frobenius(), params.rho as i64);
    symmetric_closure(&s_rho)
}

/// Cover plus the checks that make it one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub rho: u64,
    #[serde(rename = "T_min_gens")]
    pub t_min_gens: Vec<u64>,
    #[serde(rename = "frobenius_T")]
    pub frobenius_t: i64,
    pub symmetric: bool,
    pub quotient_check: bool,
}

impl CoverReport {
    pub fn compute(s: &NumericalSemigroup, params: CoverParameters) -> Result<Self> {
        let t = symmetric_cover(s, params)?;
        Ok(Self {
            rho: params.rho,
            t_min_gens: t.generators().as_slice().to_vec(),
            frobenius_t: t.frobenius(),
            symmetric: t.is_symmetric()?,
            quotient_check: &quotient_oracle(&t, params.d)? == s,
        })
    }
}

/// Closed-form generators of <n1, n2>/3 when n1, n2, 3 are pairwise coprime.
///
/// Returns {n1, n2, (n1+n2)/3} if 3 | n1+n2, otherwise
/// {n1, n2, (n1+2n2)/3, (2n1+n2)/3}. The set need not be minimal.
pub fn quotient_two_gens_d3(n1: u64, n2: u64) -> Result<GeneratorSet> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::BadInput("generators must be positive".into()));
    }
    if n1.gcd(&n2) != 1 || n1.is_multiple_of(3) || n2.is_multiple_of(3) {
        return Err(Error::BadInput(format!(
            "{n1}, {n2} and 3 must be pairwise coprime"
        )));
    }
    let gens = if (n1 + n2).is_multiple_of(3) {
        vec![n1, n2, (n1 + n2) / 3]
    } else {
        debug_assert_eq!((n1 + 2 * n2) % 3, 0);
        vec![n1, n2, (n1 + 2 * n2) / 3, (2 * n1 + n2) / 3]
    };
    GeneratorSet::new(gens)
}
