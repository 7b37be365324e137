//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

// Membership in <gens> by exhaustive search over representations.
pub fn representable(x: u64, gens: &[u64]) -> bool {
    fn go(x: u64, gens: &[u64]) -> bool {
        match gens.split_first() {
            None => x == 0,
            Some((&g, rest)) => (0..=x / g).any(|k| go(x - k * g, rest)),
        }
    }
    go(x, gens)
}

// Definitional check: no nonempty proper sub-multiset (by index) sums to 0.
pub fn brute_is_d_partition(parts: &[u64], d: u64) -> bool {
    let m = parts.len();
    if m == 0 || parts.iter().any(|&p| p >= d) || parts.iter().sum::<u64>() % d != 0 {
        return false;
    }
    let full = (1u32 << m) - 1;
    (1..full).all(|mask| {
        let s: u64 = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| parts[i])
            .sum();
        !s.is_multiple_of(d)
    })
}

fn nondecreasing(len: usize, lo: u64, hi: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    let start = prefix.last().copied().unwrap_or(lo);
    for p in start..=hi {
        prefix.push(p);
        nondecreasing(len, lo, hi, prefix, out);
        prefix.pop();
    }
}

pub fn brute_partitions(d: u64) -> BTreeSet<Vec<u64>> {
    let mut all = Vec::new();
    for len in 1..=d as usize {
        nondecreasing(len, 0, d - 1, &mut Vec::new(), &mut all);
    }
    all.into_iter()
        .filter(|p| brute_is_d_partition(p, d))
        .collect()
}
