//! Random semigroups for property checks and self-tests.

use rand::Rng;

use crate::semigroup::{make_semigroup, GeneratorSet, NumericalSemigroup};

/// A random semigroup from between 1 and `max_gens` generators drawn from
/// `2..=max_value`, redrawn until the gcd is 1. A single generator yields N.
pub fn random_semigroup<R: Rng + ?Sized>(
    rng: &mut R,
    max_gens: usize,
    max_value: u64,
) -> NumericalSemigroup {
    assert!(max_gens >= 1 && max_value >= 3);
    loop {
        let k = rng.gen_range(1..=max_gens);
        let raw: Vec<u64> = if k == 1 {
            vec![1]
        } else {
            (0..k).map(|_| rng.gen_range(2..=max_value)).collect()
        };
        let gens = GeneratorSet::new(raw).expect("positive");
        if let Ok(s) = make_semigroup(&gens) {
            return s;
        }
    }
}

/// A random proper semigroup (S ≠ N) whose Frobenius number is odd.
pub fn random_odd_frobenius<R: Rng + ?Sized>(
    rng: &mut R,
    max_gens: usize,
    max_value: u64,
) -> NumericalSemigroup {
    loop {
        let s = random_semigroup(rng, max_gens, max_value);
        if s.frobenius() > 0 && s.frobenius() % 2 == 1 {
            return s;
        }
    }
}

/// A random proper semigroup.
pub fn random_proper<R: Rng + ?Sized>(
    rng: &mut R,
    max_gens: usize,
    max_value: u64,
) -> NumericalSemigroup {
    loop {
        let s = random_semigroup(rng, max_gens, max_value);
        if !s.is_full() {
            return s;
        }
    }
}
