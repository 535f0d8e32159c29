//! `galois-param`: build descriptors, specialize them, run criteria and case studies.

use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use galois_param_core::algebra::{parse_rational, RatPoly};
use galois_param_core::criteria::{
    eval_branch_point_criterion, eval_branch_point_hypothesis, eval_inertia_criterion, eval_inertia_hypothesis,
    eval_ramification_variant, parse_small_group, run_case_study, CriterionError, CriterionReport, CASE_IDS,
};
use galois_param_core::extensions::builders::{cyclotomic_realization, morse, morse_data, sqrt, sqrt_factored, trinomial, trinomial_for, trinomial_params};
use galois_param_core::extensions::{specialize, ExtensionDescriptor, ExtensionError};
use galois_param_core::fixtures;
use galois_param_core::groups::{find_class_set_cor53, is_g_complete, Group, PermGroup};
use galois_param_core::numbertheory::prime_divisor_census;

const EXIT_USAGE: u8 = 64;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "galois-param", version, about = "Non-parametricity criteria for regular Galois extensions of Q(T)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build an extension descriptor (always printed as JSON).
    #[command(subcommand)]
    Build(Build),
    /// Specialize a descriptor at T = t0.
    Specialize {
        /// Descriptor file, or the name of a bundled fixture.
        descriptor: String,
        #[arg(long, allow_hyphen_values = true)]
        t0: String,
    },
    /// Evaluate one criterion on a pair (E1, E2).
    Check(CheckArgs),
    /// Run a packaged case study (`all` runs every one).
    Case {
        id: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Finite group computations.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Classify the primes up to a bound as prime divisors of a polynomial.
    Primes {
        /// Polynomial in wire format, e.g. '["1","1","1","1","1"]'.
        poly: String,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
}

#[derive(Subcommand)]
enum Build {
    /// k(T)(sqrt P); pass --factor once per irreducible factor for degree > 4.
    Sqrt {
        poly: Option<String>,
        #[arg(long = "factor")]
        factors: Vec<String>,
    },
    /// Y^n - T^q Y^m + T^s.
    Trinomial {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, requires = "s")]
        q: Option<u64>,
        #[arg(long, requires = "q")]
        s: Option<u64>,
    },
    /// M(Y) - T for a Morse polynomial M, or class data for Y^n + Y with --n.
    Morse {
        poly: Option<String>,
        #[arg(long, conflicts_with = "poly")]
        n: Option<u64>,
    },
    /// The cyclic Z/n realization inside Q(zeta_n)(T).
    Cyclotomic {
        #[arg(long)]
        n: u64,
    },
    /// Validate a hand-written descriptor and print it normalized.
    Manual { descriptor: String },
    /// Print a bundled fixture, or list them without a name.
    Fixture { name: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionKind {
    Ic1,
    Ic2,
    Ic3,
    Bpc,
    Bph,
    Ih,
    Ramvar,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    criterion: CriterionKind,
    /// Descriptor file or bundled fixture name.
    #[arg(long)]
    e1: String,
    #[arg(long)]
    e2: String,
    #[arg(long, default_value_t = 10_000)]
    prime_bound: u64,
    #[arg(long, default_value_t = 10)]
    min_witnesses: usize,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Conjugacy classes of a group (S5, A5, Z6, D4, V4, or group JSON).
    Classes { group: String },
    /// Search for generating classes with some class outside their powers.
    Cor53 { group: String },
    /// Is the set of classes (by index, as listed by `classes`) g-complete?
    GComplete {
        group: String,
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<usize>,
    },
}

/// Failure modes, each with its exit code.
enum Failure {
    Usage(String),
    Operation(String),
}

impl From<CriterionError> for Failure {
    fn from(e: CriterionError) -> Self {
        match e {
            CriterionError::UnknownCase(_) => Failure::Usage(e.to_string()),
            e => Failure::Operation(e.to_string()),
        }
    }
}

impl From<ExtensionError> for Failure {
    fn from(e: ExtensionError) -> Self {
        match e {
            ExtensionError::Parse(_) => Failure::Usage(e.to_string()),
            e => Failure::Operation(e.to_string()),
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn op(msg: impl std::fmt::Display) -> Failure {
    Failure::Operation(msg.to_string())
}

fn read_poly(s: &str) -> Result<RatPoly, Failure> {
    RatPoly::parse_json(s).map_err(|e| usage(format!("bad polynomial {s:?}: {e}")))
}

/// A descriptor from a file, falling back to the bundled fixtures by name.
fn load_descriptor(arg: &str) -> Result<ExtensionDescriptor, Failure> {
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
        return ExtensionDescriptor::parse_json(&text).map_err(|e| usage(format!("{arg}: {e}")));
    }
    let name = Path::new(arg).file_name().and_then(|s| s.to_str()).unwrap_or(arg);
    match fixtures::load(name) {
        Some(r) => r.map_err(|e| op(format!("bundled fixture {name}: {e}"))),
        None => Err(usage(format!("{arg}: no such file or bundled fixture"))),
    }
}

fn load_group(s: &str) -> Result<PermGroup, Failure> {
    if s.trim_start().starts_with('{') {
        let g = Group::parse_json(s).map_err(|e| usage(format!("bad group JSON: {e}")))?;
        return g.perm_group().map(|p| p.into_owned()).map_err(op);
    }
    parse_small_group(s).map_err(|e| usage(e.to_string()))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

struct Output {
    body: String,
    code: u8,
}

fn done(body: String) -> Output {
    Output { body, code: 0 }
}

fn report_output(r: &CriterionReport, format: Format) -> Output {
    let body = match format {
        Format::Json => json(r),
        Format::Text => r.to_text(),
    };
    Output { body, code: r.exit_code() as u8 }
}

fn build(b: Build) -> Result<Output, Failure> {
    let e = match b {
        Build::Sqrt { poly, factors } => match (poly, factors.is_empty()) {
            (Some(p), true) => sqrt(&read_poly(&p)?)?,
            (None, false) => {
                let fs = factors.iter().map(|f| read_poly(f)).collect::<Result<Vec<_>, _>>()?;
                sqrt_factored(&fs)?
            }
            _ => return Err(usage("give either a polynomial or --factor arguments")),
        },
        Build::Trinomial { n, m, q, s } => match (q, s) {
            (Some(q), Some(s)) => trinomial(n, m, q, s)?,
            _ => {
                if trinomial_params(n, m).is_none() {
                    return Err(op(format!("no trinomial with n = {n}, m = {m}")));
                }
                trinomial_for(n, m)?
            }
        },
        Build::Morse { poly, n } => match (poly, n) {
            (Some(p), None) => morse(&read_poly(&p)?)?,
            (None, Some(n)) => morse_data(n)?,
            _ => return Err(usage("give a polynomial or --n")),
        },
        Build::Cyclotomic { n } => cyclotomic_realization(n)?,
        Build::Manual { descriptor } => load_descriptor(&descriptor)?,
        Build::Fixture { name: None } => {
            let names: Vec<&str> = fixtures::FIXTURES.iter().map(|(n, _)| *n).collect();
            return Ok(done(names.join("\n")));
        }
        Build::Fixture { name: Some(n) } => {
            fixtures::load(&n).ok_or_else(|| usage(format!("no bundled fixture {n:?}")))??
        }
    };
    Ok(done(e.to_json()))
}

fn check(a: CheckArgs, format: Format) -> Result<Output, Failure> {
    let e1 = load_descriptor(&a.e1)?;
    let e2 = load_descriptor(&a.e2)?;
    let r = match a.criterion {
        CriterionKind::Ic1 => eval_inertia_criterion(1, &e1, &e2, None),
        CriterionKind::Ic2 => eval_inertia_criterion(2, &e1, &e2, None),
        CriterionKind::Ic3 => eval_inertia_criterion(3, &e1, &e2, None),
        CriterionKind::Bpc => eval_branch_point_criterion(&e1, &e2, a.prime_bound, a.min_witnesses),
        CriterionKind::Bph => eval_branch_point_hypothesis(&e1, &e2, a.prime_bound, a.min_witnesses),
        CriterionKind::Ih => eval_inertia_hypothesis(&e1, &e2, None),
        CriterionKind::Ramvar => {
            let mut r = CriterionReport::new("ramvar");
            r.push("ramification indices", eval_ramification_variant(&e1, &e2));
            r.conclude_all()
        }
    };
    Ok(report_output(&r, format))
}

fn group(cmd: GroupCmd, format: Format) -> Result<Output, Failure> {
    match cmd {
        GroupCmd::Classes { group } => {
            let g = load_group(&group)?;
            let cc = g.conjugacy_classes().map_err(op)?;
            let rows: Vec<serde_json::Value> = cc
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    serde_json::json!({
                        "index": i,
                        "representative": c.representative.to_string(),
                        "order": c.representative.order(),
                        "size": c.size,
                    })
                })
                .collect();
            Ok(done(match format {
                Format::Json => json(&rows),
                Format::Text => cc
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{i}: {} (order {}, size {})", c.representative, c.representative.order(), c.size))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }))
        }
        GroupCmd::Cor53 { group } => {
            let g = load_group(&group)?;
            let found = find_class_set_cor53(&g).map_err(op)?;
            let cc = g.conjugacy_classes().map_err(op)?;
            let (body, code) = match &found {
                Some(w) => {
                    let classes: Vec<String> = w.classes.iter().map(|&i| cc[i].representative.to_string()).collect();
                    let outside = cc[w.outside].representative.to_string();
                    let body = match format {
                        Format::Json => json(&serde_json::json!({
                            "group": group, "classes": classes, "outside": outside
                        })),
                        Format::Text => format!("{group}: classes of {} generate and no power of them lands in the class of {outside}", classes.join(", ")),
                    };
                    (body, 0)
                }
                None => {
                    let body = match format {
                        Format::Json => json(&serde_json::json!({ "group": group, "classes": null })),
                        Format::Text => format!("{group}: no such class set"),
                    };
                    (body, 2)
                }
            };
            Ok(Output { body, code })
        }
        GroupCmd::GComplete { group, classes } => {
            let g = load_group(&group)?;
            let res = is_g_complete(&g, &classes).map_err(op)?;
            let witness: Option<Vec<String>> =
                res.witness.as_ref().map(|w| w.iter().map(|p| p.to_string()).collect());
            let body = match format {
                Format::Json => json(&serde_json::json!({ "complete": res.complete, "witness": witness })),
                Format::Text => match &witness {
                    None => format!("g-complete: {}", res.complete),
                    Some(w) => format!("g-complete: {} (proper subgroup generated by {})", res.complete, w.join(", ")),
                },
            };
            Ok(Output { body, code: if res.complete { 0 } else { 2 } })
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Build(b) => build(b),
        Command::Specialize { descriptor, t0 } => {
            let e = load_descriptor(&descriptor)?;
            let t0 = parse_rational(&t0).map_err(|e| usage(format!("bad --t0: {e}")))?;
            let r = specialize(&e, &t0)?;
            Ok(done(match format {
                Format::Json => json(&r),
                Format::Text => {
                    let mut s = format!("P(t0, Y) = {}\nseparable: {}\nreal roots: {}\n", r.polynomial.to_string().replace('T', "Y"), r.separable, r.real_roots);
                    if let Some(k) = &r.quadratic_kernel {
                        s.push_str(&format!("quadratic field: Q(sqrt({k}))\n"));
                    }
                    if let Some(g) = r.cubic_group.or(r.quartic_group) {
                        s.push_str(&format!("Galois group: {g:?}\n"));
                    }
                    s
                }
            }))
        }
        Command::Check(a) => check(a, format),
        Command::Case { id, params } => {
            if id != "all" && !CASE_IDS.contains(&id.as_str()) {
                return Err(usage(format!("unknown case {id:?}; known: all, {}", CASE_IDS.join(", "))));
            }
            let r = run_case_study(&id, &params)?;
            let body = match format {
                Format::Json => json(&r),
                Format::Text => r.to_text(),
            };
            Ok(Output { body, code: r.exit_code() as u8 })
        }
        Command::Group(g) => group(g, format),
        Command::Primes { poly, bound } => {
            let p = read_poly(&poly)?;
            let c = prime_divisor_census(&p, bound).map_err(op)?;
            Ok(done(match format {
                Format::Json => json(&c),
                Format::Text => format!(
                    "primes up to {bound}: {} divisors, {} non-divisors, {} excluded\ndivisors: {:?}\nexcluded: {:?}",
                    c.divisors.len(),
                    c.non_divisors.len(),
                    c.excluded.len(),
                    c.divisors,
                    c.excluded
                ),
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{}", out.body.trim_end());
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nrun `galois-param --help` for usage");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Operation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INCONCLUSIVE)
        }
    }
}
