use std::path::PathBuf;
use std::time::Instant;

use anyhow::{Context, Result, anyhow, bail};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use progfree::claims::{
    ClaimOptions, ScanOutcome, find_3ap_nondiv, find_rs_witness, verify_degs_11_claim_with,
};
use progfree::count::{
    CountMethod, CountOptions, CountReport, count_progression_free_with,
    verify_recursive_inequality,
};
use progfree::density::{
    BlockConditionSpec, DensityKind, IntervalFamily, density_profile, theoretical_densities,
    verify_block_conditions,
};
use progfree::{
    ExecMode, PermutationStream, ProgressionPattern, Rational, SequenceView, SignPolicy, Witness,
    ap_free_permutation, find_progression, find_progression_filtered,
};

use crate::VerdictFalse;
use crate::io_util::{emit, read_integers};

pub const VERDICT_FALSE: &str = "claim verdict is false";

#[derive(Parser)]
#[command(
    name = "progfree",
    version,
    about = "Constructions, detection, exact counts, and density profiles for \
             permutations avoiding generalized arithmetic progressions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Bound the worker-thread count; results are identical at any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report elapsed wall time on standard error.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a construction as integers (newline-separated or a JSON array).
    Construct(ConstructArgs),
    /// Search a sequence for a progression occurrence.
    Detect(DetectArgs),
    /// Count progression-avoiding permutations of 1..=n exactly.
    Count(CountArgs),
    /// Run an exhaustive or streaming claim check; exit 0 iff it holds.
    VerifyClaims(ClaimsArgs),
    /// Closed-form membership counts and density profiles.
    Density(DensityArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Both,
    PositiveOnly,
}

impl From<PolicyArg> for SignPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Both => SignPolicy::Both,
            PolicyArg::PositiveOnly => SignPolicy::PositiveOnly,
        }
    }
}

pub fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let started = Instant::now();
    let result = match cli.command {
        Command::Construct(args) => construct(args, cli.out.as_deref()),
        Command::Detect(args) => detect(args, cli.out.as_deref()),
        Command::Count(args) => count(args, cli.out.as_deref()),
        Command::VerifyClaims(args) => verify_claims(args, cli.out.as_deref()),
        Command::Density(args) => density(args, cli.out.as_deref()),
    };
    if cli.timings {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    result
}

// ---------------------------------------------------------------------------
// construct

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    /// Progression-free permutation of 1..=n (needs --n, optional --pattern).
    Apfree,
    /// Permutation of the integers with no 6-term progression (--blocks).
    Z6,
    /// Dense 3-term-free permuted subset of the integers (--blocks).
    Z3Density,
    /// 4-term-free permuted subset of the positives (--b-num/--b-den, --blocks).
    Beta4,
    /// (r,s)-free permuted subset of the positives (--r --s --a-* --b-*, --blocks).
    RsPos,
    /// (r,s)-free permuted subset of the integers (--r --s --a-* --b-*, --blocks).
    RsZ,
    /// Permutation of the integers free of the degree-weighted 6-term
    /// pattern (--r --s --a-num, --blocks).
    Rs6,
    /// Seeded random permutation of 1..=n, for detector test data (--n --seed).
    Random,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: ConstructKind,
    /// Number of construction blocks to emit.
    #[arg(long)]
    blocks: Option<u32>,
    /// Ground-set size for apfree/random.
    #[arg(long)]
    n: Option<u32>,
    /// Pattern coefficients, comma separated (e.g. 1,1).
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    a_num: Option<i64>,
    #[arg(long, default_value_t = 1)]
    a_den: i64,
    #[arg(long)]
    b_num: Option<i64>,
    #[arg(long, default_value_t = 1)]
    b_den: i64,
    /// Seed for --kind random.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

fn construct(args: ConstructArgs, out: Option<&std::path::Path>) -> Result<()> {
    let values = build_construction(&args)?;
    let text = match args.format {
        OutputFormat::Plain => {
            let mut s = values
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            s.push('\n');
            s
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string(&values)?;
            s.push('\n');
            s
        }
        OutputFormat::Csv => bail!("construct emits plain integers or json, not csv"),
    };
    emit(out, &text)
}

fn build_construction(args: &ConstructArgs) -> Result<Vec<i64>> {
    let blocks = || args.blocks.context("--blocks is required for this kind");
    let rs = || -> Result<(u32, u32)> {
        Ok((
            args.r.context("--r is required for this kind")?,
            args.s.context("--s is required for this kind")?,
        ))
    };
    match args.kind {
        ConstructKind::Apfree => {
            let n = args.n.context("--n is required for apfree")?;
            let pattern = parse_pattern(args.pattern.as_deref().unwrap_or("1,1"))?;
            Ok(ap_free_permutation(n, &pattern)?)
        }
        ConstructKind::Random => {
            let n = args.n.context("--n is required for random")?;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(0));
            Ok(seeded_permutation(&mut rng, n as i64))
        }
        ConstructKind::Z6 => Ok(PermutationStream::ap6_free_integers(blocks()?)?.collect()),
        ConstructKind::Z3Density => {
            Ok(PermutationStream::dense_ap3_free_integers(blocks()?)?.collect())
        }
        ConstructKind::Beta4 => {
            let b = required_rational(args.b_num, args.b_den, "--b-num")?;
            Ok(PermutationStream::ap4_free_positives(b, blocks()?)?.collect())
        }
        ConstructKind::RsPos => {
            let (r, s) = rs()?;
            let a = required_rational(args.a_num, args.a_den, "--a-num")?;
            let b = required_rational(args.b_num, args.b_den, "--b-num")?;
            Ok(PermutationStream::rs3_free_positives(r, s, a, b, blocks()?)?.collect())
        }
        ConstructKind::RsZ => {
            let (r, s) = rs()?;
            let a = required_rational(args.a_num, args.a_den, "--a-num")?;
            let b = required_rational(args.b_num, args.b_den, "--b-num")?;
            Ok(PermutationStream::rs3_free_integers(r, s, a, b, blocks()?)?.collect())
        }
        ConstructKind::Rs6 => {
            let (r, s) = rs()?;
            if args.a_den != 1 {
                bail!("rs6 needs an integer base: pass --a-num with --a-den 1");
            }
            let a = args.a_num.context("--a-num is required for rs6")?;
            Ok(PermutationStream::rs6_free_integers(r, s, a, blocks()?)?.collect())
        }
    }
}

fn seeded_permutation(rng: &mut ChaCha8Rng, n: i64) -> Vec<i64> {
    use rand::RngExt;
    let mut values: Vec<i64> = (1..=n).collect();
    for i in (1..values.len()).rev() {
        let j = rng.random_range(0..=i);
        values.swap(i, j);
    }
    values
}

// ---------------------------------------------------------------------------
// detect

#[derive(Args)]
struct DetectArgs {
    /// File of integers (whitespace/newline separated or a JSON array);
    /// `-` reads standard input.
    #[arg(long)]
    input: String,
    /// Pattern coefficients, comma separated.
    #[arg(long, conflicts_with = "ap_length")]
    pattern: Option<String>,
    /// Shorthand for the plain arithmetic progression of this length.
    #[arg(long)]
    ap_length: Option<usize>,
    /// Restrict to occurrences whose parameter is not divisible by this.
    #[arg(long, conflicts_with_all = ["pattern", "ap_length"])]
    k_div: Option<u32>,
    #[arg(long, value_enum, default_value_t = PolicyArg::Both)]
    policy: PolicyArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Serialize)]
struct DetectReport<'a> {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Witness>,
}

fn detect(args: DetectArgs, out: Option<&std::path::Path>) -> Result<()> {
    let values = read_integers(&args.input)?;
    let seq = SequenceView::new(values).map_err(|e| anyhow!("invalid input sequence: {e}"))?;
    let policy: SignPolicy = args.policy.into();
    let witness = match args.k_div {
        Some(k) => {
            if k < 2 {
                bail!("--k-div must be at least 2");
            }
            find_progression_filtered(&seq, k, policy)
        }
        None => {
            let pattern = match (&args.pattern, args.ap_length) {
                (Some(p), None) => parse_pattern(p)?,
                (None, Some(k)) => {
                    ProgressionPattern::plain_ap(k).map_err(|e| anyhow!("--ap-length: {e}"))?
                }
                (None, None) => ProgressionPattern::plain_ap(3).unwrap(),
                (Some(_), Some(_)) => unreachable!("clap conflict"),
            };
            find_progression(&seq, &pattern, policy)
        }
    };
    let text = match args.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(&DetectReport {
                found: witness.is_some(),
                witness: witness.as_ref(),
            })?;
            s.push('\n');
            s
        }
        _ => match &witness {
            Some(w) => format!(
                "witness positions={:?} values={:?} d={}\n",
                w.positions, w.values, w.d
            ),
            None => "absent\n".to_string(),
        },
    };
    emit(out, &text)
}

// ---------------------------------------------------------------------------
// count

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Backtrack,
    Naive,
}

#[derive(Args)]
struct CountArgs {
    /// Single ground-set size to count.
    #[arg(long, conflicts_with = "n_max")]
    n: Option<u32>,
    /// Table mode: count every size from 1 up to this.
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, conflicts_with = "ap_length")]
    pattern: Option<String>,
    #[arg(long)]
    ap_length: Option<usize>,
    #[arg(long, value_enum, default_value_t = PolicyArg::Both)]
    policy: PolicyArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Backtrack)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

fn count(args: CountArgs, out: Option<&std::path::Path>) -> Result<()> {
    let pattern = match (&args.pattern, args.ap_length) {
        (Some(p), None) => parse_pattern(p)?,
        (None, Some(k)) => {
            ProgressionPattern::plain_ap(k).map_err(|e| anyhow!("--ap-length: {e}"))?
        }
        (None, None) => ProgressionPattern::plain_ap(3).unwrap(),
        (Some(_), Some(_)) => unreachable!("clap conflict"),
    };
    let policy: SignPolicy = args.policy.into();
    let options = CountOptions {
        method: Some(match args.method {
            MethodArg::Backtrack => CountMethod::Backtrack,
            MethodArg::Naive => CountMethod::Naive,
        }),
        exec: ExecMode::Parallel,
    };
    let sizes: Vec<u32> = match (args.n, args.n_max) {
        (Some(n), None) => vec![n],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => bail!("pass --n for one count or --n-max for a table"),
        (Some(_), Some(_)) => unreachable!("clap conflict"),
    };
    let mut reports = Vec::with_capacity(sizes.len());
    for n in sizes {
        reports.push(count_progression_free_with(n, &pattern, policy, options)?);
    }
    let text = render_counts(&reports, args.format)?;
    emit(out, &text)
}

fn render_counts(reports: &[CountReport], format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => {
            let mut s = if reports.len() == 1 {
                serde_json::to_string(&reports[0])?
            } else {
                serde_json::to_string(reports)?
            };
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,pattern,policy,count\n");
            for r in reports {
                s.push_str(&format!(
                    "{},\"{}\",{},{}\n",
                    r.n, r.pattern, r.policy, r.count
                ));
            }
            s
        }
        OutputFormat::Plain => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!("{}\n", r.count));
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// verify-claims

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimKind {
    /// Exhaustive 11-element claim for divisor k (--k).
    Degs11,
    /// Streaming (r,s) witness on an input or the identity stream
    /// (--r --s --budget [--input]).
    RsWitness,
    /// Streaming 3-term search with parameter not divisible by k
    /// (--k --budget [--input]).
    ApNondiv,
    /// Product inequality on exact counts (--k --n).
    RecursiveInequality,
    /// Exact per-block growth inequalities (--kind ... --i-max).
    BlockConditions,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConditionKind {
    Z3Density,
    Beta4,
    RsPos,
    RsZ,
    Rs6,
    Z6,
}

#[derive(Args)]
struct ClaimsArgs {
    #[arg(long, value_enum)]
    claim: ClaimKind,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 100)]
    budget: u64,
    /// Input sequence for the streaming claims; defaults to the identity
    /// permutation 1, 2, 3, ...
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum)]
    policy: Option<PolicyArg>,
    /// Construction for block-conditions.
    #[arg(long, value_enum)]
    kind: Option<ConditionKind>,
    #[arg(long, default_value_t = 10)]
    i_max: u32,
    #[arg(long)]
    a_num: Option<i64>,
    #[arg(long, default_value_t = 1)]
    a_den: i64,
    #[arg(long)]
    b_num: Option<i64>,
    #[arg(long, default_value_t = 1)]
    b_den: i64,
    /// Report enumeration progress on standard error.
    #[arg(long)]
    progress: bool,
}

#[derive(Serialize)]
struct ScanReport {
    claim: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u32>,
    budget: u64,
    verdict: bool,
    #[serde(flatten)]
    outcome: ScanOutcome,
}

fn verify_claims(args: ClaimsArgs, out: Option<&std::path::Path>) -> Result<()> {
    let (text, verdict) = match args.claim {
        ClaimKind::Degs11 => {
            let k = args.k.context("--k is required for degs11")?;
            if k < 2 {
                bail!("--k must be at least 2");
            }
            let options = ClaimOptions {
                policy: args.policy.map(SignPolicy::from),
                exec: ExecMode::Parallel,
                progress: args.progress.then(|| {
                    std::sync::Arc::new(|done: u64| eprintln!("checked {done} permutations"))
                        as progfree::claims::ProgressFn
                }),
            };
            let result = verify_degs_11_claim_with(k, &options);
            (to_json_line(&result)?, result.verdict)
        }
        ClaimKind::RsWitness => {
            let r = args.r.context("--r is required for rs-witness")?;
            let s = args.s.context("--s is required for rs-witness")?;
            let outcome = match &args.input {
                Some(path) => {
                    let values = read_integers(path)?;
                    find_rs_witness(values, r, s, args.budget)?
                }
                None => find_rs_witness(1.., r, s, args.budget)?,
            };
            let verdict = outcome.witness().is_some();
            let report = ScanReport {
                claim: "rs-witness",
                k: None,
                r: Some(r),
                s: Some(s),
                budget: args.budget,
                verdict,
                outcome,
            };
            (to_json_line(&report)?, verdict)
        }
        ClaimKind::ApNondiv => {
            let k = args.k.context("--k is required for ap-nondiv")?;
            if k < 2 {
                bail!("--k must be at least 2");
            }
            let policy = args
                .policy
                .map(SignPolicy::from)
                .unwrap_or(SignPolicy::Both);
            let outcome = match &args.input {
                Some(path) => {
                    let values = read_integers(path)?;
                    find_3ap_nondiv(values, k, policy, args.budget)?
                }
                None => find_3ap_nondiv(1.., k, policy, args.budget)?,
            };
            let verdict = outcome.witness().is_some();
            let report = ScanReport {
                claim: "ap-nondiv",
                k: Some(k),
                r: None,
                s: None,
                budget: args.budget,
                verdict,
                outcome,
            };
            (to_json_line(&report)?, verdict)
        }
        ClaimKind::RecursiveInequality => {
            let k = args.k.context("--k is required for recursive-inequality")?;
            let n = args.n.context("--n is required for recursive-inequality")?;
            let policy = args
                .policy
                .map(SignPolicy::from)
                .unwrap_or(SignPolicy::Both);
            let report = verify_recursive_inequality(k, n, policy)?;
            (to_json_line(&report)?, report.holds)
        }
        ClaimKind::BlockConditions => {
            let kind = args
                .kind
                .context("--kind is required for block-conditions")?;
            let spec = condition_spec(kind, &args)?;
            let report = verify_block_conditions(&spec, args.i_max)?;
            (to_json_line(&report)?, report.all_hold)
        }
    };
    emit(out, &text)?;
    if !verdict {
        return Err(VerdictFalse.into());
    }
    Ok(())
}

fn condition_spec(kind: ConditionKind, args: &ClaimsArgs) -> Result<BlockConditionSpec> {
    Ok(match kind {
        ConditionKind::Z3Density => BlockConditionSpec::Z3Density,
        ConditionKind::Z6 => BlockConditionSpec::Z6,
        ConditionKind::Beta4 => BlockConditionSpec::Beta4 {
            b: required_rational(args.b_num, args.b_den, "--b-num")?,
        },
        ConditionKind::RsPos => BlockConditionSpec::RsPos {
            r: args.r.context("--r is required")?,
            s: args.s.context("--s is required")?,
            a: required_rational(args.a_num, args.a_den, "--a-num")?,
            b: required_rational(args.b_num, args.b_den, "--b-num")?,
        },
        ConditionKind::RsZ => BlockConditionSpec::RsZ {
            r: args.r.context("--r is required")?,
            s: args.s.context("--s is required")?,
            a: required_rational(args.a_num, args.a_den, "--a-num")?,
            b: required_rational(args.b_num, args.b_den, "--b-num")?,
        },
        ConditionKind::Rs6 => {
            if args.a_den != 1 {
                bail!("rs6 needs an integer base: pass --a-num with --a-den 1");
            }
            BlockConditionSpec::Rs6 {
                r: args.r.context("--r is required")?,
                s: args.s.context("--s is required")?,
                a: args.a_num.context("--a-num is required")?,
            }
        }
    })
}

// ---------------------------------------------------------------------------
// density

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DensityKindArg {
    Beta4,
    Z3Density,
    RsPos,
    RsZ,
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long, value_enum)]
    kind: DensityKindArg,
    /// Profile endpoint: evaluate densities for the set up to this bound.
    #[arg(long)]
    n: i64,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    a_num: Option<i64>,
    #[arg(long, default_value_t = 1)]
    a_den: i64,
    #[arg(long)]
    b_num: Option<i64>,
    #[arg(long, default_value_t = 1)]
    b_den: i64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Serialize)]
struct DensityBounds {
    lower: Rational,
    upper: Rational,
}

#[derive(Serialize)]
struct DensitySummary {
    kind: &'static str,
    n_max: i64,
    theoretical: DensityBounds,
    observed: DensityBounds,
    gap: DensityBounds,
    decimal_observed_lower: String,
    decimal_observed_upper: String,
}

fn density(args: DensityArgs, out: Option<&std::path::Path>) -> Result<()> {
    if args.n < 1 {
        bail!("--n must be at least 1");
    }
    let (family, kind) = match args.kind {
        DensityKindArg::Beta4 => {
            let b = required_rational(args.b_num, args.b_den, "--b-num")?;
            (IntervalFamily::beta4(b, args.n)?, DensityKind::Beta4 { b })
        }
        DensityKindArg::Z3Density => (IntervalFamily::z3_density(args.n)?, DensityKind::Z3Density),
        DensityKindArg::RsPos => {
            let (r, s) = (
                args.r.context("--r is required for rs-pos")?,
                args.s.context("--s is required for rs-pos")?,
            );
            let a = required_rational(args.a_num, args.a_den, "--a-num")?;
            let b = required_rational(args.b_num, args.b_den, "--b-num")?;
            (
                IntervalFamily::rs_pos(a, b, args.n)?,
                DensityKind::RsPos { r, s },
            )
        }
        DensityKindArg::RsZ => {
            let (r, s) = (
                args.r.context("--r is required for rs-z")?,
                args.s.context("--s is required for rs-z")?,
            );
            let a = required_rational(args.a_num, args.a_den, "--a-num")?;
            let b = required_rational(args.b_num, args.b_den, "--b-num")?;
            (
                IntervalFamily::rs_z(a, b, args.n)?,
                DensityKind::RsZ { r, s },
            )
        }
    };
    let records = density_profile(&family, args.n);
    let text = match args.format {
        OutputFormat::Csv => {
            let mut s = String::from("n,count,ratio,running_inf,running_sup\n");
            for rec in &records {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    rec.n, rec.member_count, rec.ratio, rec.running_inf, rec.running_sup
                ));
            }
            s
        }
        OutputFormat::Json => {
            let (lower, upper) = theoretical_densities(&kind)?;
            let last = records.last().expect("profile is never empty");
            let summary = DensitySummary {
                kind: family.kind(),
                n_max: args.n,
                theoretical: DensityBounds { lower, upper },
                observed: DensityBounds {
                    lower: last.running_inf,
                    upper: last.running_sup,
                },
                gap: DensityBounds {
                    lower: last.running_inf.checked_sub(lower)?.abs(),
                    upper: last.running_sup.checked_sub(upper)?.abs(),
                },
                decimal_observed_lower: last.running_inf.to_decimal(12),
                decimal_observed_upper: last.running_sup.to_decimal(12),
            };
            to_json_line(&summary)?
        }
        OutputFormat::Plain => bail!("density emits csv or json"),
    };
    emit(out, &text)
}

// ---------------------------------------------------------------------------
// shared helpers

fn parse_pattern(text: &str) -> Result<ProgressionPattern> {
    text.parse::<ProgressionPattern>()
        .map_err(|e| anyhow!("--pattern: {e}"))
}

fn required_rational(num: Option<i64>, den: i64, flag: &str) -> Result<Rational> {
    let num = num.with_context(|| format!("{flag} is required for this kind"))?;
    Rational::new(num, den).map_err(|e| anyhow!("{flag}: {e}"))
}

fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}
