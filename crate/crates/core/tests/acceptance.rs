//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p numsg --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use numsg::applications::{
    admissible_rhos, quotient_two_gens_d3, symmetric_closure, symmetric_cover, CoverParameters,
};
use numsg::dpartition::{count_d_partitions, enumerate_d_partitions};
use numsg::gamma::{
    binomial, bound_binomial, bound_partitioned, family_s_d, family_s_n_d, gamma,
    quotient_via_gamma, BoundReport,
};
use numsg::sample::{random_odd_frobenius, random_proper};
use numsg::{make_semigroup, quotient_oracle, GeneratorSet, Limits, NumericalSemigroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::brute_partitions;

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn partition_lists(d: u64) -> BTreeSet<Vec<u64>> {
    enumerate_d_partitions(d, &Limits::default())
        .unwrap()
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

fn sets(lists: &[&[u64]]) -> BTreeSet<Vec<u64>> {
    lists.iter().map(|l| l.to_vec()).collect()
}

fn sg(gens: &str) -> NumericalSemigroup {
    NumericalSemigroup::from_str_gens(gens).unwrap()
}

fn c1_small_partitions() -> Outcome {
    ensure(partition_lists(1) == sets(&[&[0]]), || {
        "P(1) mismatch".into()
    })?;
    ensure(partition_lists(2) == sets(&[&[0], &[1, 1]]), || {
        "P(2) mismatch".into()
    })?;
    ensure(
        partition_lists(3) == sets(&[&[0], &[1, 1, 1], &[1, 2], &[2, 2, 2]]),
        || format!("P(3) = {:?}", partition_lists(3)),
    )?;
    Ok("P(1), P(2), P(3) exact".into())
}

fn c2_length_bound() -> Outcome {
    for d in 2..=8 {
        let ps = enumerate_d_partitions(d, &Limits::default()).unwrap();
        if let Some(p) = ps.iter().find(|p| p.len() as u64 > d) {
            return Err(format!("{p} longer than d = {d}"));
        }
    }
    for d in 1..=6 {
        ensure(partition_lists(d) == brute_partitions(d), || {
            format!("d = {d}: enumeration differs from brute force")
        })?;
    }
    Ok("lengths <= d for d = 2..8; brute force agrees for d <= 6".into())
}

// Shared by criteria 3 and 7.
fn random_suite() -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..500).map(|_| random_proper(&mut rng, 6, 300)).collect()
}

fn c3_oracle_equivalence(suite: &[NumericalSemigroup]) -> Outcome {
    let limits = Limits::default();
    let mut pairs = 0;
    for s in suite {
        for d in 1..=8 {
            let via_gamma = quotient_via_gamma(s, d, &limits).map_err(|e| e.to_string())?;
            let oracle = quotient_oracle(s, d).unwrap();
            ensure(via_gamma == oracle, || {
                format!("{s} / {d}: gamma {via_gamma} vs oracle {oracle}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{} semigroups x d = 1..8, {pairs} exact matches",
        suite.len()
    ))
}

fn c4_worked_example() -> Outcome {
    let s = sg("7,9,13");
    let limits = Limits::default();
    let g = gamma(&s, 3, None, &limits).unwrap();
    ensure(g.elements() == [3, 7, 9, 11, 13], || {
        format!("Γ = {:?}", g.elements())
    })?;
    let q = quotient_via_gamma(&s, 3, &limits).unwrap();
    ensure(q.generators().as_slice() == [3, 7, 11], || {
        format!("quotient {q}")
    })?;
    ensure(q == quotient_oracle(&s, 3).unwrap(), || {
        "oracle disagrees".into()
    })?;
    let bp = bound_partitioned(&s, 3, &limits).unwrap();
    ensure(bp == 5, || format!("bound_partitioned = {bp}"))?;
    let bb = bound_binomial(s.embedding_dimension(), 3).unwrap();
    ensure(bb == 10, || format!("bound_binomial = {bb}"))?;
    let without_13 = make_semigroup(&GeneratorSet::new(vec![3, 7, 9, 11]).unwrap()).unwrap();
    ensure(
        g.contains(3) && g.contains(7) && without_13.contains(13),
        || "13 = 7 + 3*2 fails".into(),
    )?;
    ensure(!q.generators().as_slice().contains(&13), || {
        "13 is minimal".into()
    })?;
    Ok("Γ = {3,7,9,11,13}, min gens {3,7,11}, bounds 5 / 10, 13 redundant".into())
}

fn c5_partitioned_sharpness() -> Outcome {
    let limits = Limits::default();
    for d in 2..=5u64 {
        let s = family_s_d(d).unwrap();
        let q = quotient_oracle(&s, d).unwrap();
        let expected = NumericalSemigroup::from_membership((0..d).map(|x| x == 0).collect());
        ensure(q == expected, || {
            format!("S_{d}/{d} = {q}, expected {{0, {d}, {}, ...}}", d + 1)
        })?;
        let nu = q.embedding_dimension() as u64;
        let bp = bound_partitioned(&s, d, &limits).unwrap();
        ensure(nu == d && bp == d, || {
            format!("d = {d}: nu = {nu}, bound = {bp}")
        })?;
        ensure(quotient_via_gamma(&s, d, &limits).unwrap() == q, || {
            format!("d = {d}: Γ disagrees")
        })?;
    }
    Ok("nu(S_d/d) = d = bound for d = 2..5".into())
}

fn c6_binomial_sharpness() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (n, d) in [(2u64, 2u64), (3, 2), (4, 2), (2, 3), (3, 3)] {
        let s = family_s_n_d(n, d).unwrap();
        let q = quotient_oracle(&s, d).unwrap();
        let nu = q.embedding_dimension() as u64;
        let target = binomial((n + d - 1) as i64, d as i64).unwrap();
        let bb = bound_binomial(s.embedding_dimension(), d).unwrap();
        let gamma_size = gamma(&s, d, None, &limits).unwrap().len();
        details.push(format!("({n},{d}): nu={nu} |Γ|={gamma_size} C={target}"));
        if nu != target || bb != target {
            failures.push(format!(
                "({n},{d}): nu = {nu}, |Γ| = {gamma_size}, C(n+d-1,d) = {target}"
            ));
        }
    }
    if failures.is_empty() {
        Ok(details.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

fn c7_bounds_hold(suite: &[NumericalSemigroup]) -> Outcome {
    let limits = Limits::default();
    let mut sharp = 0;
    for s in suite {
        for d in 1..=8 {
            let r = BoundReport::compute(s, d, &limits).map_err(|e| e.to_string())?;
            ensure(r.chain_holds(), || format!("{s} / {d}: {r:?}"))?;
            sharp += usize::from(r.sharp_partitioned);
        }
    }
    Ok(format!(
        "chain holds on all {} instances ({sharp} attain the partitioned bound)",
        suite.len() * 8
    ))
}

fn c8_symmetric_closure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for _ in 0..200 {
        let s = random_odd_frobenius(&mut rng, 5, 60);
        let t = symmetric_closure(&s).map_err(|e| e.to_string())?;
        ensure(t.is_symmetric() == Ok(true), || {
            format!("closure of {s} not symmetric")
        })?;
        ensure(t.frobenius() == s.frobenius(), || {
            format!("closure of {s} moved F")
        })?;
        ensure(t.is_closed(), || {
            format!("closure of {s} not additively closed")
        })?;
        let f = s.frobenius() as u64;
        ensure((0..=f + 1).all(|x| !s.contains(x) || t.contains(x)), || {
            format!("{s} not inside {t}")
        })?;
        ensure(symmetric_closure(&t).unwrap() == t, || {
            format!("closure of {s} not idempotent")
        })?;
    }
    Ok("200 semigroups: symmetric, same F, S ⊆ T, idempotent".into())
}

fn c9_symmetric_covers() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut covers = 0;
    for _ in 0..50 {
        let s = random_proper(&mut rng, 5, 30);
        for d in 2..=5 {
            let rhos: Vec<u64> = admissible_rhos(&s, d).unwrap().take(3).collect();
            let mut frobs = BTreeSet::new();
            for rho in rhos {
                let t =
                    symmetric_cover(&s, CoverParameters { d, rho }).map_err(|e| e.to_string())?;
                ensure(t.is_symmetric() == Ok(true), || {
                    format!("{s}, d={d}, rho={rho}: not symmetric")
                })?;
                ensure(t.frobenius() == rho as i64, || {
                    format!("{s}, d={d}, rho={rho}: F = {}", t.frobenius())
                })?;
                ensure(quotient_oracle(&t, d).unwrap() == s, || {
                    format!("{s}, d={d}, rho={rho}: T/d != S")
                })?;
                frobs.insert(t.frobenius());
                covers += 1;
            }
            ensure(frobs.len() == 3, || {
                format!("{s}, d={d}: covers not distinct")
            })?;
        }
    }
    Ok(format!(
        "{covers} covers symmetric with F = rho and T/d = S"
    ))
}

fn c10_two_generators_by_three() -> Outcome {
    let mut checked = 0;
    for n1 in 1..=60u64 {
        for n2 in 1..=60u64 {
            if num_integer::gcd(n1, n2) != 1 || (n1 * n2) % 3 == 0 {
                continue;
            }
            let closed = make_semigroup(&quotient_two_gens_d3(n1, n2).unwrap()).unwrap();
            let s = make_semigroup(&GeneratorSet::new(vec![n1, n2]).unwrap()).unwrap();
            let oracle = quotient_oracle(&s, 3).unwrap();
            ensure(closed == oracle, || {
                format!("<{n1},{n2}>/3: closed form {closed} vs oracle {oracle}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} ordered pairs agree with the oracle"))
}

fn c11_counting_table() -> Outcome {
    let limits = Limits::default();
    let first: Vec<usize> = (1..=8)
        .map(|d| count_d_partitions(d, &limits).unwrap())
        .collect();
    let second: Vec<usize> = (1..=8)
        .map(|d| enumerate_d_partitions(d, &limits).unwrap().len())
        .collect();
    ensure(first == second, || {
        format!("unstable counts {first:?} vs {second:?}")
    })?;
    ensure(first[..3] == [1, 2, 4], || {
        format!("|P(1..3)| = {:?}", &first[..3])
    })?;
    for d in 4..=8u64 {
        let brute = brute_partitions(d).len();
        ensure(first[d as usize - 1] == brute, || {
            format!(
                "|P({d})| = {} but brute force gives {brute}",
                first[d as usize - 1]
            )
        })?;
    }
    ensure(first[3] == 7, || format!("|P(4)| = {}", first[3]))?;
    let table: Vec<String> = first
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{}:{c}", i + 1))
        .collect();
    Ok(format!("|P(d)| = {}", table.join(" ")))
}

type Criterion<'a> = (u32, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let suite = random_suite();
    let criteria: Vec<Criterion<'_>> = vec![
        (1, Duration::from_secs(1), Box::new(c1_small_partitions)),
        (2, Duration::from_secs(30), Box::new(c2_length_bound)),
        (
            3,
            Duration::from_secs(120),
            Box::new(|| c3_oracle_equivalence(&suite)),
        ),
        (4, Duration::from_secs(1), Box::new(c4_worked_example)),
        (
            5,
            Duration::from_secs(5),
            Box::new(c5_partitioned_sharpness),
        ),
        (6, Duration::from_secs(10), Box::new(c6_binomial_sharpness)),
        (
            7,
            Duration::from_secs(120),
            Box::new(|| c7_bounds_hold(&suite)),
        ),
        (8, Duration::from_secs(30), Box::new(c8_symmetric_closure)),
        (9, Duration::from_secs(60), Box::new(c9_symmetric_covers)),
        (
            10,
            Duration::from_secs(20),
            Box::new(c10_two_generators_by_three),
        ),
        (11, Duration::from_secs(30), Box::new(c11_counting_table)),
    ];
    let mut failed = 0;
    for (id, budget, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > *budget => {
                Err(format!("{msg}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {id:>2}: PASS  [{elapsed:.2?}] {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  [{elapsed:.2?}] {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
