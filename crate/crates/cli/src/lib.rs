//! Command-line front end: each verb prints a plain-text table, or JSON
//! with `--json`.
//!
//! Exit codes: 0 on success, 1 on domain errors or failed checks, 2 on
//! usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use numsg::applications::{
    admissible_rhos, quotient_two_gens_d3, symmetric_closure, CoverParameters, CoverReport,
};
use numsg::dpartition::enumerate_d_partitions;
use numsg::gamma::{check_s_d, check_s_n_d, gamma, BoundReport, SharpnessCheck};
use numsg::limits::DEFAULT_MAX_D;
use numsg::sample::random_proper;
use numsg::{
    make_semigroup, quotient_oracle, GeneratorSet, Limits, NumericalSemigroup, QuotientRegistry,
    SemigroupJson,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// One line per verb, echoed on usage errors.
pub const SYNOPSIS: &[&str] = &[
    "numsg quotient --gens <csv> --d <int> [--method gamma|oracle]",
    "numsg dpartitions --d <int>",
    "numsg gamma --gens <csv> --d <int>",
    "numsg bounds --gens <csv> --d <int>",
    "numsg sharpness --d <int> [--n <int>]",
    "numsg sym-closure --gens <csv>",
    "numsg sym-cover --gens <csv> --d <int> [--rho <int>]",
    "numsg check-cor19 [--gens <n1,n2>]",
    "numsg selftest [--seed <int>]",
];

#[derive(Debug, Parser)]
#[command(name = "numsg", version, about = "Quotients of numerical semigroups")]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest d accepted by d-partition enumeration.
    #[arg(long = "max-d", global = true, default_value_t = DEFAULT_MAX_D)]
    max_d: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators of S/d.
    Quotient {
        #[command(flatten)]
        input: GensAndD,
        #[arg(long, default_value = "gamma")]
        method: String,
    },
    /// List the d-partitions P(d).
    Dpartitions {
        #[arg(long)]
        d: u64,
    },
    /// The generating set Γ(S/d) with witnesses.
    Gamma {
        #[command(flatten)]
        input: GensAndD,
    },
    /// Embedding-dimension bounds for S/d.
    Bounds {
        #[command(flatten)]
        input: GensAndD,
    },
    /// Check the families attaining the bounds.
    Sharpness {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Symmetric closure of a semigroup with odd Frobenius number.
    SymClosure {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// Symmetric T with T/d = S.
    SymCover {
        #[command(flatten)]
        input: GensAndD,
        #[arg(long)]
        rho: Option<u64>,
    },
    /// Closed form for <n1,n2>/3 against the oracle.
    #[command(name = "check-cor19")]
    CheckCor19 {
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<u64>>,
    },
    /// Run the built-in golden cases.
    Selftest,
}

#[derive(Debug, Args)]
struct GensAndD {
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
    #[arg(long)]
    d: u64,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
    Check(String),
}

impl From<numsg::Error> for Failure {
    fn from(e: numsg::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
    seed: u64,
    limits: Limits,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Outcome {
        let rendered = if self.json {
            serde_json::to_string_pretty(value).expect("serializable report")
        } else {
            text()
        };
        writeln!(self.out, "{}", rendered.trim_end()).map_err(|e| Failure::Domain(e.to_string()))
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            print_synopsis(err);
            return 2;
        }
    };
    let mut ctx = Ctx {
        out,
        json: cli.json,
        seed: cli.seed,
        limits: Limits::with_max_d(cli.max_d),
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            print_synopsis(err);
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            1
        }
    }
}

fn print_synopsis(err: &mut dyn Write) {
    let _ = writeln!(err, "usage:");
    for line in SYNOPSIS {
        let _ = writeln!(err, "  {line}");
    }
}

fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup, Failure> {
    Ok(make_semigroup(&GeneratorSet::new(gens.to_vec())?)?)
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Outcome {
    match command {
        Command::Quotient { input, method } => cmd_quotient(ctx, &input, &method),
        Command::Dpartitions { d } => cmd_dpartitions(ctx, d),
        Command::Gamma { input } => cmd_gamma(ctx, &input, false),
        Command::Bounds { input } => cmd_gamma(ctx, &input, true),
        Command::Sharpness { d, n } => cmd_sharpness(ctx, d, n),
        Command::SymClosure { gens } => cmd_sym_closure(ctx, &gens),
        Command::SymCover { input, rho } => cmd_sym_cover(ctx, &input, rho),
        Command::CheckCor19 { gens } => cmd_cor19(ctx, gens.as_deref()),
        Command::Selftest => cmd_selftest(ctx),
    }
}

#[derive(Serialize)]
struct QuotientReport {
    gens: Vec<u64>,
    d: u64,
    method: String,
    quotient: SemigroupJson,
    agrees_with: BTreeMap<String, bool>,
}

fn cmd_quotient(ctx: &mut Ctx<'_>, input: &GensAndD, method: &str) -> Outcome {
    let registry = QuotientRegistry::default();
    let strategy = registry
        .get(method)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let s = semigroup(&input.gens)?;
    let q = strategy.quotient(&s, input.d, &ctx.limits)?;
    let mut agrees_with = BTreeMap::new();
    for other in registry.iter().filter(|o| o.name() != method) {
        match other.quotient(&s, input.d, &ctx.limits) {
            Ok(r) => {
                agrees_with.insert(other.name().to_string(), r == q);
            }
            Err(numsg::Error::LimitExceeded { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let report = QuotientReport {
        gens: s.generators().as_slice().to_vec(),
        d: input.d,
        method: method.to_string(),
        quotient: q.to_json(),
        agrees_with,
    };
    ctx.emit(&report, || {
        let mut t = format!("S          {s}\nd          {}\nS/d        {q}\n", input.d);
        t += &format!(
            "frobenius  {}\ngenus      {}\nmethod     {method}\n",
            q.frobenius(),
            q.genus()
        );
        for (name, ok) in &report.agrees_with {
            t += &format!("agrees with {name}: {ok}\n");
        }
        t
    })?;
    if report.agrees_with.values().all(|&ok| ok) {
        Ok(())
    } else {
        Err(Failure::Check("quotient strategies disagree".into()))
    }
}

fn cmd_dpartitions(ctx: &mut Ctx<'_>, d: u64) -> Outcome {
    let ps = enumerate_d_partitions(d, &ctx.limits)?;
    let lists: Vec<Vec<u64>> = ps.iter().map(|p| p.parts().to_vec()).collect();
    ctx.emit(&lists, || {
        let mut t = format!("P({d}): {} partitions\n", ps.len());
        for p in &ps {
            t += &format!("  {p}\n");
        }
        t
    })
}

#[derive(Serialize)]
struct WitnessJson {
    partition: Vec<u64>,
    generators: Vec<u64>,
}

fn cmd_gamma(ctx: &mut Ctx<'_>, input: &GensAndD, bounds_only: bool) -> Outcome {
    let s = semigroup(&input.gens)?;
    let d = input.d;
    let g = gamma(&s, d, None, &ctx.limits)?;
    let r = BoundReport::compute(&s, d, &ctx.limits)?;
    let witnesses: BTreeMap<String, WitnessJson> = g
        .witnesses()
        .map(|(x, w)| {
            (
                x.to_string(),
                WitnessJson {
                    partition: w.partition.parts().to_vec(),
                    generators: w.generators.clone(),
                },
            )
        })
        .collect();
    let report = json!({
        "gens": s.generators().as_slice(),
        "d": d,
        "gamma": g.elements(),
        "witnesses": witnesses,
        "gamma_size": r.gamma_size,
        "nu": r.nu,
        "nu_quotient": r.nu_quotient,
        "bound_partitioned": r.bound_partitioned,
        "bound_binomial": r.bound_binomial,
        "sharp": {"partitioned": r.sharp_partitioned, "binomial": r.sharp_binomial},
    });
    ctx.emit(&report, || {
        let mut t = format!("S = {s}, d = {d}\n");
        if !bounds_only {
            t += "Γ(S/d):\n";
            for (x, w) in g.witnesses() {
                let parts: Vec<String> = w.generators.iter().map(u64::to_string).collect();
                t += &format!("  {x:>8}  = ({}) / {d}   via {}\n", parts.join("+"), w.partition);
            }
        }
        t += &format!(
            "nu(S)              {}\nnu(S/d)            {}\n|Γ|                {}\nbound_partitioned  {}{}\nbound_binomial     {}{}\n",
            r.nu,
            r.nu_quotient,
            r.gamma_size,
            r.bound_partitioned,
            if r.sharp_partitioned { "  (sharp)" } else { "" },
            r.bound_binomial,
            if r.sharp_binomial { "  (sharp)" } else { "" },
        );
        t
    })
}

fn sharpness_line(c: &SharpnessCheck) -> String {
    format!(
        "{:<10} gens {:?}  nu(S/d) = {}  |Γ| = {}  bound = {}  sharp = {}  Γ matches oracle = {}\n",
        c.family,
        c.generators,
        c.nu_quotient,
        c.gamma_size,
        c.bound,
        c.sharp,
        c.quotient_matches_oracle
    )
}

fn cmd_sharpness(ctx: &mut Ctx<'_>, d: u64, n: Option<u64>) -> Outcome {
    let mut checks = vec![check_s_d(d, &ctx.limits)?];
    let ns: Vec<u64> = n.map_or_else(|| vec![2, 3], |n| vec![n]);
    for n in ns {
        checks.push(check_s_n_d(n, d, &ctx.limits)?);
    }
    ctx.emit(&checks, || checks.iter().map(sharpness_line).collect())
}

fn cmd_sym_closure(ctx: &mut Ctx<'_>, gens: &[u64]) -> Outcome {
    let s = semigroup(gens)?;
    let t = symmetric_closure(&s)?;
    let report = json!({
        "input": s.to_json(),
        "closure": t.to_json(),
        "symmetric": t.is_symmetric()?,
        "added": t.elements_up_to(t.frobenius() as u64).into_iter().filter(|&x| !s.contains(x)).collect::<Vec<_>>(),
    });
    ctx.emit(&report, || {
        format!(
            "S          {s}\nT          {t}\nfrobenius  {}\nsymmetric  {}\n",
            t.frobenius(),
            report["symmetric"]
        )
    })
}

fn cmd_sym_cover(ctx: &mut Ctx<'_>, input: &GensAndD, rho: Option<u64>) -> Outcome {
    let s = semigroup(&input.gens)?;
    let rho = match rho {
        Some(r) => r,
        None => admissible_rhos(&s, input.d)?
            .next()
            .expect("unbounded iterator"),
    };
    let report = CoverReport::compute(&s, CoverParameters { d: input.d, rho })?;
    ctx.emit(&report, || {
        format!(
            "S           {s}\nd           {}\nrho         {rho}\nT min gens  {:?}\nF(T)        {}\nsymmetric   {}\nT/d == S    {}\n",
            input.d, report.t_min_gens, report.frobenius_t, report.symmetric, report.quotient_check
        )
    })?;
    if report.quotient_check && report.symmetric {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "cover for rho = {rho} is not valid"
        )))
    }
}

#[derive(Serialize)]
struct Cor19Case {
    n1: u64,
    n2: u64,
    closed_form: Vec<u64>,
    oracle_min_gens: Vec<u64>,
    agrees: bool,
}

fn cor19_case(n1: u64, n2: u64) -> Result<Cor19Case, Failure> {
    let closed = quotient_two_gens_d3(n1, n2)?;
    let oracle = quotient_oracle(&semigroup(&[n1, n2])?, 3)?;
    Ok(Cor19Case {
        n1,
        n2,
        agrees: make_semigroup(&closed)? == oracle,
        closed_form: closed.as_slice().to_vec(),
        oracle_min_gens: oracle.generators().as_slice().to_vec(),
    })
}

fn cmd_cor19(ctx: &mut Ctx<'_>, gens: Option<&[u64]>) -> Outcome {
    let cases = match gens {
        Some(&[n1, n2]) => vec![cor19_case(n1, n2)?],
        Some(_) => {
            return Err(Failure::Usage(
                "check-cor19 takes exactly two generators".into(),
            ))
        }
        None => {
            let mut cases = Vec::new();
            for n1 in 1..=60u64 {
                for n2 in n1..=60 {
                    if num_integer::gcd(n1, n2) == 1 && (n1 * n2) % 3 != 0 {
                        cases.push(cor19_case(n1, n2)?);
                    }
                }
            }
            cases
        }
    };
    let mismatches: Vec<&Cor19Case> = cases.iter().filter(|c| !c.agrees).collect();
    if gens.is_some() {
        ctx.emit(&cases[0], || {
            let c = &cases[0];
            format!(
                "<{},{}>/3\nclosed form  {:?}\noracle       {:?}\nagrees       {}\n",
                c.n1, c.n2, c.closed_form, c.oracle_min_gens, c.agrees
            )
        })?;
    } else {
        let summary = json!({"pairs_checked": cases.len(), "mismatches": mismatches});
        ctx.emit(&summary, || {
            format!(
                "pairs checked  {}\nmismatches     {}\n",
                cases.len(),
                mismatches.len()
            )
        })?;
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} closed forms disagree with the oracle",
            mismatches.len()
        )))
    }
}

#[derive(Serialize)]
struct SelftestLine {
    name: String,
    passed: bool,
    detail: String,
}

fn selftest_cases(seed: u64, limits: &Limits) -> Vec<SelftestLine> {
    let mut lines = Vec::new();
    let mut check = |name: &str, result: Result<(bool, String), numsg::Error>| {
        let (passed, detail) = result.unwrap_or_else(|e| (false, e.to_string()));
        lines.push(SelftestLine {
            name: name.to_string(),
            passed,
            detail,
        });
    };
    let lists = |d| -> Result<Vec<Vec<u64>>, numsg::Error> {
        Ok(enumerate_d_partitions(d, limits)?
            .iter()
            .map(|p| p.parts().to_vec())
            .collect())
    };
    check(
        "P(2)",
        lists(2).map(|l| (l == vec![vec![0], vec![1, 1]], format!("{l:?}"))),
    );
    check(
        "P(3)",
        lists(3).map(|l| {
            (
                l == vec![vec![0], vec![1, 2], vec![1, 1, 1], vec![2, 2, 2]],
                format!("{l:?}"),
            )
        }),
    );
    check(
        "<7,9,13>/3",
        (|| {
            let s = NumericalSemigroup::from_str_gens("7,9,13")?;
            let g = gamma(&s, 3, None, limits)?;
            let q = make_semigroup(&g.as_generator_set())?;
            let ok = g.elements() == [3, 7, 9, 11, 13]
                && q.generators().as_slice() == [3, 7, 11]
                && q == quotient_oracle(&s, 3)?;
            Ok((ok, format!("Γ = {:?}, quotient {q}", g.elements())))
        })(),
    );
    for d in 2..=4 {
        check(
            &format!("S_{d} sharpness"),
            check_s_d(d, limits).map(|c| {
                (
                    c.sharp && c.quotient_matches_oracle,
                    sharpness_line(&c).trim().into(),
                )
            }),
        );
    }
    for (n, d) in [(2, 2), (3, 2), (4, 2), (2, 3)] {
        check(
            &format!("S_({n},{d}) sharpness"),
            check_s_n_d(n, d, limits).map(|c| {
                (
                    c.sharp && c.quotient_matches_oracle,
                    sharpness_line(&c).trim().into(),
                )
            }),
        );
    }
    let registry = QuotientRegistry::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = 0;
    let mut total = 0;
    for _ in 0..40 {
        let s = random_proper(&mut rng, 5, 120);
        for d in 1..=6 {
            let results: Vec<_> = registry
                .iter()
                .map(|st| st.quotient(&s, d, limits))
                .collect();
            total += 1;
            if results.windows(2).all(|w| w[0].is_ok() && w[0] == w[1]) {
                agree += 1;
            }
        }
    }
    check(
        "random oracle equivalence",
        Ok((
            agree == total,
            format!("{agree}/{total} agree (seed {seed})"),
        )),
    );
    lines
}

fn cmd_selftest(ctx: &mut Ctx<'_>) -> Outcome {
    let lines = selftest_cases(ctx.seed, &ctx.limits);
    let failed = lines.iter().filter(|l| !l.passed).count();
    ctx.emit(&lines, || {
        let mut t = String::new();
        for l in &lines {
            t += &format!(
                "{}  {:<28} {}\n",
                if l.passed { "PASS" } else { "FAIL" },
                l.name,
                l.detail
            );
        }
        t += &format!("{} of {} passed\n", lines.len() - failed, lines.len());
        t
    })?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} self-test cases failed")))
    }
}
