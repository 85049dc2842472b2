//! `kunz` — numerical semigroups through Kunz coordinates.
//!
//! Five subcommands cover the library surface: `analyze` (full descriptor),
//! `decompose` (minimal intersections of same-multiplicity irreducibles,
//! plus the Frobenius-parity variant), `family` (arithmetic-progression
//! semigroups), `enumerate` (box scans of valid coordinate vectors), and
//! `verify` (closed forms against the brute-force oracle).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
//! `--json` switches every subcommand to a single versioned document.

use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kunz::engine::{self, Parity};
use kunz::{gas, mult3, mult4, oracle, verify};
use kunz::{GeneratorSet, KunzVector, Semigroup};
use kunz_cli::output;

#[derive(Parser)]
#[command(
    name = "kunz",
    version,
    about = "Numerical semigroups via Kunz coordinates: analysis, \
             irreducible decomposition, families, and cross-validation"
)]
struct Cli {
    /// Emit one versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full descriptor of one semigroup.
    Analyze(InputArgs),
    /// Decompose into irreducible semigroups of the same multiplicity.
    Decompose(DecomposeArgs),
    /// Build the arithmetic-progression semigroup <m, mh+d, ..., mh+kd>.
    Family(FamilyArgs),
    /// List valid Kunz vectors with coordinates in 1..=max-coord.
    Enumerate(EnumerateArgs),
    /// Cross-validate closed forms against the brute-force oracle.
    Verify(VerifyArgs),
}

/// One semigroup, given either by generators or by Kunz coordinates.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Generators, comma separated; the multiplicity is the smallest.
    #[arg(long, value_delimiter = ',', value_name = "A,B,...")]
    gens: Option<Vec<i64>>,

    /// Kunz coordinates with explicit multiplicity, as m:x1,x2,...
    #[arg(long, value_parser = parse_kunz_arg, value_name = "M:X1,X2,...")]
    kunz: Option<KunzArg>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: InputArgs,

    /// List every minimal decomposition instead of only the first.
    #[arg(long, conflicts_with_all = ["count", "frobenius_parity"])]
    all: bool,

    /// Print only the number of minimal decompositions.
    #[arg(long, conflicts_with = "frobenius_parity")]
    count: bool,

    /// Ask instead whether the input is an intersection of same-multiplicity
    /// irreducibles whose Frobenius numbers all have this parity.
    #[arg(long, value_enum, value_name = "PARITY")]
    frobenius_parity: Option<ParityArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Args)]
struct FamilyArgs {
    /// Multiplicity (3 or 4).
    #[arg(long)]
    m: i64,
    /// Height: the generators sit at mh + d, mh + 2d, ..., mh + kd.
    #[arg(long)]
    h: i64,
    /// Common difference; must be coprime to the multiplicity.
    #[arg(long)]
    d: i64,
    /// Number of progression generators, 1..=m-1.
    #[arg(long)]
    k: i64,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Multiplicity of the vectors to enumerate.
    #[arg(long)]
    m: i64,
    /// Upper bound for every coordinate.
    #[arg(long)]
    max_coord: i64,
    /// Keep only matching vectors: all, irreducible, or genus=N.
    #[arg(long, default_value = "all")]
    filter: String,
    /// Revalidate every emitted vector against the brute-force oracle
    /// (requires oracle-sized bounds).
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Multiplicity of the corpus (at most 6).
    #[arg(long)]
    m: i64,
    /// Upper bound for every coordinate (at most 8).
    #[arg(long)]
    max_coord: i64,
}

/// Kunz-coordinate input as typed on the command line.
#[derive(Clone, Debug)]
struct KunzArg {
    m: i64,
    coords: Vec<i64>,
}

fn parse_kunz_arg(s: &str) -> Result<KunzArg, String> {
    let (m_part, coord_part) = s
        .split_once(':')
        .ok_or_else(|| format!("expected m:x1,x2,... (e.g. 3:13,7), got {s:?}"))?;
    let m: i64 = m_part
        .trim()
        .parse()
        .map_err(|_| format!("invalid multiplicity {m_part:?}"))?;
    let mut coords = Vec::new();
    if !coord_part.trim().is_empty() {
        for piece in coord_part.split(',') {
            let value: i64 = piece
                .trim()
                .parse()
                .map_err(|_| format!("invalid coordinate {piece:?}"))?;
            coords.push(value);
        }
    }
    Ok(KunzArg { m, coords })
}

/// A failed invocation: exit code plus a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<kunz::Error> for Failure {
    /// Library errors are input-validation problems by construction here.
    fn from(e: kunz::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Restore the default SIGPIPE disposition so pipelines such as
/// `kunz enumerate … | head` end the process quietly instead of panicking
/// when stdout closes early.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    if let Err(failure) = run(cli) {
        eprintln!("error: {}", failure.message);
        exit(failure.code);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Analyze(input) => cmd_analyze(input, cli.json),
        Command::Decompose(args) => cmd_decompose(args, cli.json),
        Command::Family(args) => cmd_family(args, cli.json),
        Command::Enumerate(args) => cmd_enumerate(args, cli.json),
        Command::Verify(args) => cmd_verify(args, cli.json),
    }
}

/// Build the semigroup named by `--gens`/`--kunz` plus its echo string.
fn build_input(input: &InputArgs) -> Result<(Semigroup, String), Failure> {
    if let Some(gens) = &input.gens {
        let echo = format!("--gens {}", join(gens));
        let set = GeneratorSet::new(gens.clone())?;
        Ok((Semigroup::from_generators(&set)?, echo))
    } else {
        let arg = input.kunz.as_ref().expect("clap requires one input form");
        let echo = format!("--kunz {}:{}", arg.m, join(&arg.coords));
        let x = KunzVector::new(arg.m, arg.coords.clone())?;
        Ok((Semigroup::from_kunz(x), echo))
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn list_or_none(values: &[i64]) -> String {
    if values.is_empty() {
        "none".to_string()
    } else {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn factor_generators(z: &KunzVector) -> Vec<i64> {
    z.minimal_generators()
}

fn format_decomposition(factors: &[Vec<i64>]) -> String {
    factors
        .iter()
        .map(|gens| format!("<{}>", join(gens)))
        .collect::<Vec<_>>()
        .join(" ∩ ")
}

fn print_json<T: serde::Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("output documents serialize")
    );
}

fn cmd_analyze(input: &InputArgs, json: bool) -> Result<(), Failure> {
    let (s, input_echo) = build_input(input)?;
    let x = s.kunz();
    let m = s.multiplicity();
    let classification = if m >= 2 {
        let c = engine::classify(x)?;
        Some(output::ClassificationDoc {
            irreducible: c.irreducible,
            symmetric: c.symmetric,
            pseudosymmetric: c.pseudosymmetric,
            m_irreducible: c.m_irreducible,
            m_symmetric: c.m_symmetric,
            m_pseudosymmetric: c.m_pseudosymmetric,
        })
    } else {
        None
    };
    let doc = output::SemigroupDoc {
        multiplicity: m,
        kunz: x.coords().to_vec(),
        generators: s.minimal_generators().to_vec(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        gaps: s.gaps(),
        special_gaps: engine::special_gaps(x).into_values(),
        classification,
    };
    if json {
        print_json(&output::document(format!("analyze {input_echo}"), doc));
        return Ok(());
    }
    println!("multiplicity: {}", doc.multiplicity);
    println!("kunz: {}:{}", doc.multiplicity, join(&doc.kunz));
    println!("generators: <{}>", join(&doc.generators));
    println!("frobenius: {}", doc.frobenius);
    println!("genus: {}", doc.genus);
    println!("gaps: {}", list_or_none(&doc.gaps));
    println!(
        "special gaps above {}: {}",
        doc.multiplicity,
        list_or_none(&doc.special_gaps)
    );
    match &doc.classification {
        Some(c) => {
            println!("irreducible: {}", c.irreducible);
            println!("symmetric: {}", c.symmetric);
            println!("pseudosymmetric: {}", c.pseudosymmetric);
            println!("{}-irreducible: {}", m, c.m_irreducible);
            println!("{}-symmetric: {}", m, c.m_symmetric);
            println!("{}-pseudosymmetric: {}", m, c.m_pseudosymmetric);
        }
        None => {
            println!("classification: none (multiplicity 1 names the whole set of naturals)");
        }
    }
    Ok(())
}

fn cmd_decompose(args: &DecomposeArgs, json: bool) -> Result<(), Failure> {
    let (s, input_echo) = build_input(&args.input)?;
    let x = s.kunz().clone();

    if let Some(parity_arg) = args.frobenius_parity {
        return cmd_decompose_parity(&x, parity_arg, &input_echo, json);
    }

    // Closed-form fast paths at multiplicities 3 and 4; cover search elsewhere.
    let decompositions: Vec<Vec<KunzVector>> = if args.all || args.count {
        match x.m() {
            3 => mult3::decompose_all(&x)?,
            4 => mult4::decompose_all(&x)?,
            _ => engine::decompose_all(&x)?,
        }
    } else {
        vec![match x.m() {
            3 => mult3::decompose(&x)?,
            4 => mult4::decompose(&x)?,
            _ => engine::decompose(&x)?,
        }]
    };

    let factor_lists: Vec<Vec<Vec<i64>>> = decompositions
        .iter()
        .map(|d| d.iter().map(factor_generators).collect())
        .collect();
    let mode = if args.all {
        " --all"
    } else if args.count {
        " --count"
    } else {
        ""
    };
    let doc = output::DecomposeDoc {
        multiplicity: x.m(),
        kunz: x.coords().to_vec(),
        decompositions: if args.count {
            Vec::new()
        } else {
            factor_lists.clone()
        },
        count: if args.count {
            Some(factor_lists.len())
        } else {
            None
        },
    };
    if json {
        print_json(&output::document(
            format!("decompose {input_echo}{mode}"),
            doc,
        ));
        return Ok(());
    }
    if args.count {
        println!("{}", factor_lists.len());
    } else {
        for factors in &factor_lists {
            println!("{}", format_decomposition(factors));
        }
    }
    Ok(())
}

fn cmd_decompose_parity(
    x: &KunzVector,
    parity_arg: ParityArg,
    input_echo: &str,
    json: bool,
) -> Result<(), Failure> {
    let parity = match parity_arg {
        ParityArg::Odd => Parity::Odd,
        ParityArg::Even => Parity::Even,
    };
    let outcome = engine::decomposable_with_frobenius_parity(x, parity)?;
    let doc = output::ParityDoc {
        multiplicity: x.m(),
        kunz: x.coords().to_vec(),
        parity: parity.to_string(),
        decomposable: outcome.decomposable,
        witness: outcome
            .witness
            .as_ref()
            .map(|w| w.iter().map(factor_generators).collect()),
        blocking_gap: outcome.blocking_gap,
    };
    if json {
        print_json(&output::document(
            format!("decompose {input_echo} --frobenius-parity {parity}"),
            doc,
        ));
        return Ok(());
    }
    println!(
        "decomposable into factors with {} frobenius numbers: {}",
        doc.parity, doc.decomposable
    );
    if let Some(witness) = &doc.witness {
        println!("witness: {}", format_decomposition(witness));
    }
    if let Some(gap) = doc.blocking_gap {
        println!("blocking gap: {gap}");
    }
    Ok(())
}

fn cmd_family(args: &FamilyArgs, json: bool) -> Result<(), Failure> {
    let spec = gas::GasSpec::new(args.m, args.h, args.d, args.k)?;
    let s = spec.build()?;
    let c = spec.classification();
    let doc = output::FamilyDoc {
        m: args.m,
        h: args.h,
        d: args.d,
        k: args.k,
        generators: s.minimal_generators().to_vec(),
        kunz: s.kunz().coords().to_vec(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        irreducible: c.irreducible,
        symmetric: c.symmetric,
        pseudosymmetric: c.pseudosymmetric,
    };
    if json {
        print_json(&output::document(
            format!(
                "family --m {} --h {} --d {} --k {}",
                args.m, args.h, args.d, args.k
            ),
            doc,
        ));
        return Ok(());
    }
    println!("generators: <{}>", join(&doc.generators));
    println!("kunz: {}:{}", doc.m, join(&doc.kunz));
    println!("frobenius: {}", doc.frobenius);
    println!("genus: {}", doc.genus);
    println!("irreducible: {}", doc.irreducible);
    println!("symmetric: {}", doc.symmetric);
    println!("pseudosymmetric: {}", doc.pseudosymmetric);
    Ok(())
}

enum Filter {
    All,
    Irreducible,
    Genus(i64),
}

fn parse_filter(s: &str) -> Result<Filter, Failure> {
    match s {
        "all" => Ok(Filter::All),
        "irreducible" => Ok(Filter::Irreducible),
        _ => {
            if let Some(rest) = s.strip_prefix("genus=") {
                let genus: i64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| Failure::usage(format!("invalid genus value {rest:?}")))?;
                if genus < 0 {
                    return Err(Failure::usage(format!(
                        "genus must be nonnegative, got {genus}"
                    )));
                }
                Ok(Filter::Genus(genus))
            } else {
                Err(Failure::usage(format!(
                    "unknown filter {s:?}: expected all, irreducible, or genus=N"
                )))
            }
        }
    }
}

/// Oracle re-check of one emitted vector under `--verify`.
fn oracle_agrees(x: &KunzVector, filter: &Filter) -> Result<bool, Failure> {
    if !oracle::is_semigroup_coords(x.m(), x.coords())? {
        return Ok(false);
    }
    let gaps = oracle::brute_gaps(x)?;
    Ok(match filter {
        Filter::All => true,
        Filter::Irreducible => {
            let frobenius = gaps.iter().copied().max().unwrap_or(-1);
            gaps.len() as i64 == (frobenius + 2) / 2
        }
        Filter::Genus(genus) => gaps.len() as i64 == *genus,
    })
}

fn cmd_enumerate(args: &EnumerateArgs, json: bool) -> Result<(), Failure> {
    let filter = parse_filter(&args.filter)?;
    if args.verify
        && (args.m > verify::MAX_VERIFY_MULTIPLICITY || args.max_coord > verify::MAX_VERIFY_BOUND)
    {
        return Err(Failure::usage(format!(
            "--verify is limited to --m <= {} and --max-coord <= {}, got m={} max-coord={}",
            verify::MAX_VERIFY_MULTIPLICITY,
            verify::MAX_VERIFY_BOUND,
            args.m,
            args.max_coord
        )));
    }

    let mut vectors: Vec<Vec<i64>> = Vec::new();
    for x in engine::enumerate_kunz(args.m, args.max_coord)? {
        let keep = match filter {
            Filter::All => true,
            Filter::Irreducible => engine::classify(&x)?.irreducible,
            Filter::Genus(genus) => x.genus() == genus,
        };
        if !keep {
            continue;
        }
        if args.verify && !oracle_agrees(&x, &filter)? {
            return Err(Failure::verification(format!(
                "oracle disagrees with the engine on {x}"
            )));
        }
        if json {
            vectors.push(x.coords().to_vec());
        } else {
            println!("{x}");
        }
    }

    if json {
        let doc = output::EnumerateDoc {
            multiplicity: args.m,
            max_coord: args.max_coord,
            filter: args.filter.clone(),
            count: vectors.len(),
            vectors,
            verified: args.verify,
        };
        let verify_echo = if args.verify { " --verify" } else { "" };
        print_json(&output::document(
            format!(
                "enumerate --m {} --max-coord {} --filter {}{verify_echo}",
                args.m, args.max_coord, args.filter
            ),
            doc,
        ));
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn run_cross_validation(m: i64, bound: i64) -> kunz::Result<verify::VerifyReport> {
    verify::par_cross_validate(m, bound)
}

#[cfg(not(feature = "parallel"))]
fn run_cross_validation(m: i64, bound: i64) -> kunz::Result<verify::VerifyReport> {
    verify::cross_validate(m, bound)
}

fn cmd_verify(args: &VerifyArgs, json: bool) -> Result<(), Failure> {
    let report = run_cross_validation(args.m, args.max_coord)?;
    let doc = output::VerifyDoc {
        multiplicity: report.m,
        max_coord: report.bound,
        checked: report.checked as u64,
        clean: report.is_clean(),
        checks: report
            .checks
            .iter()
            .map(|c| output::CheckDoc {
                name: c.name.to_string(),
                passed: c.passed as u64,
                failed: c.failed as u64,
            })
            .collect(),
        failures: report.failures.clone(),
        notes: report.notes.clone(),
    };
    if json {
        print_json(&output::document(
            format!("verify --m {} --max-coord {}", args.m, args.max_coord),
            doc.clone(),
        ));
    } else {
        println!(
            "cross-validation m={} max-coord={}: {} vectors",
            doc.multiplicity, doc.max_coord, doc.checked
        );
        for check in &doc.checks {
            if check.failed == 0 {
                println!("  {}: pass ({} checked)", check.name, check.passed);
            } else {
                println!(
                    "  {}: fail ({} passed, {} failed)",
                    check.name, check.passed, check.failed
                );
            }
        }
        for failure in &doc.failures {
            println!("  mismatch: {failure}");
        }
        for note in &doc.notes {
            println!("note: {note}");
        }
        println!("result: {}", if doc.clean { "pass" } else { "fail" });
    }
    if !doc.clean {
        return Err(Failure::verification(format!(
            "cross-validation found {} mismatch(es)",
            doc.failures.len()
        )));
    }
    Ok(())
}
