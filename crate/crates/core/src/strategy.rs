//! Interchangeable ways of computing S/d, looked up by name.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gamma::quotient_via_gamma;
use crate::limits::Limits;
use crate::semigroup::{quotient_oracle, NumericalSemigroup};

pub trait QuotientStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn quotient(
        &self,
        s: &NumericalSemigroup,
        d: u64,
        limits: &Limits,
    ) -> Result<NumericalSemigroup>;
}

/// Tests `d·x ∈ S` for every `x` up to `F(S)/d + 1`.
#[derive(Debug, Default, Clone, Copy)]
pub struct DefinitionalQuotient;

impl QuotientStrategy for DefinitionalQuotient {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "membership test of d*x straight from the definition"
    }

    fn quotient(
        &self,
        s: &NumericalSemigroup,
        d: u64,
        _limits: &Limits,
    ) -> Result<NumericalSemigroup> {
        quotient_oracle(s, d)
    }
}

/// Generates S/d from Γ(S/d) and reduces.
#[derive(Debug, Default, Clone, Copy)]
pub struct GammaQuotient;

impl QuotientStrategy for GammaQuotient {
    fn name(&self) -> &'static str {
        "gamma"
    }

    fn description(&self) -> &'static str {
        "semigroup generated by the d-partition generating set"
    }

    fn quotient(
        &self,
        s: &NumericalSemigroup,
        d: u64,
        limits: &Limits,
    ) -> Result<NumericalSemigroup> {
        quotient_via_gamma(s, d, limits)
    }
}

pub struct QuotientRegistry {
    strategies: BTreeMap<&'static str, Box<dyn QuotientStrategy>>,
}

impl QuotientRegistry {
    pub fn empty() -> Self {
        Self {
            strategies: BTreeMap::new(),
        }
    }

    /// Adds a strategy, replacing any previous one with the same name.
    pub fn register(mut self, strategy: Box<dyn QuotientStrategy>) -> Self {
        self.strategies.insert(strategy.name(), strategy);
        self
    }

    pub fn get(&self, name: &str) -> Result<&dyn QuotientStrategy> {
        self.strategies
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| {
                Error::BadParameter(format!(
                    "unknown quotient method {name:?}; known: {}",
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn QuotientStrategy> {
        self.strategies.values().map(|b| b.as_ref())
    }
}

impl Default for QuotientRegistry {
    fn default() -> Self {
        Self::empty()
            .register(Box::new(DefinitionalQuotient))
            .register(Box::new(GammaQuotient))
    }
}
