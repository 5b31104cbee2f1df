//! Argument parsing and dispatch for the `lrcforge` binary.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrcforge::good::{
    classify_gn, construct_witness, count_split_places_with, extract_good_sets_with, genus_bound,
    s5_quintic_window, split_bounds, witness_bounds, SplitBounds, SplitMethod,
};
use lrcforge::lrc::{build_code, min_distance_bruteforce_with, Codeword, LrcCode, BRUTEFORCE_CAP};
use lrcforge::monodromy::{
    candidates_for_degree, cycle_census_with, even_subgroup_test, identify_group, reference_distribution, Sample,
};
use lrcforge::report::{cmd_tables, table_rows, tables_csv, RunReport, Table};
use lrcforge::sweep::{default_threads, THREADS_ENV};
use lrcforge::{parse_field, Error, Field, FieldElement, Poly};

#[derive(Parser, Debug)]
#[command(name = "lrcforge", version, about = "Good polynomials and optimal locally recoverable codes over finite fields")]
pub struct Cli {
    /// Worker threads for sweeps (results do not depend on it).
    #[arg(long, global = true, env = THREADS_ENV)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Field as `q` or `p^m`.
    #[arg(long)]
    field: String,
    /// Monic modulus coefficients, constant term first, e.g. `1,1,0,1`.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct PolyArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Polynomial as `x^5+x^3+x^2` or a coefficient list, constant first.
    #[arg(long)]
    poly: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Tally,
    Roots,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a field.
    FieldInfo(FieldArgs),
    /// Minimal monodromy order G_n(q).
    Classify {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Witness polynomial realizing G_n(q).
    Construct {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Count totally split places of a polynomial.
    SplitCount {
        #[command(flatten)]
        poly: PolyArgs,
        /// Monodromy group assumed for the bounds (default S_n).
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value = "tally")]
        method: Method,
        /// Also list good sets, at most this many.
        #[arg(long)]
        max_sets: Option<usize>,
    },
    /// Cycle-type census of f - t and group identification.
    Census {
        #[command(flatten)]
        poly: PolyArgs,
        /// Number of random specializations; all of F_q when omitted.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated candidate groups (default: all of the degree).
        #[arg(long)]
        candidates: Option<String>,
    },
    /// Build, encode with, repair, or measure a code.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Recompute the split-place tables.
    Tables {
        #[arg(long, default_value = "all")]
        which: String,
        /// Emit CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[command(flatten)]
    poly: PolyArgs,
    /// Message parameter; dimension is k = r t.
    #[arg(long)]
    t: usize,
    /// Use at most this many repair groups.
    #[arg(long)]
    max_sets: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum CodeAction {
    /// Code parameters and evaluation groups.
    Build {
        #[command(flatten)]
        code: CodeArgs,
        /// Emit the generator matrix as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Encode a message of k comma-separated symbols.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        message: String,
    },
    /// Erase positions of a word and recover them locally.
    Repair {
        #[command(flatten)]
        code: CodeArgs,
        /// Codeword symbols; alternatively give --message.
        #[arg(long, conflicts_with = "message")]
        codeword: Option<String>,
        #[arg(long)]
        message: Option<String>,
        /// Comma-separated positions to erase.
        #[arg(long)]
        erase: String,
    },
    /// Minimum distance by enumerating all messages.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = BRUTEFORCE_CAP)]
        cap: u128,
    },
}

/// What a successful command prints.
pub enum Output {
    Report(RunReport),
    Text(String),
}

/// Failure with a kind name and message, printed as JSON.
#[derive(Debug)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind, "message": self.message } })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let debug = format!("{e:?}");
        let kind = debug.split(['{', '(', ' ']).next().unwrap_or("Error").to_string();
        CliError { kind, message: e.to_string(), exit_code: 1 }
    }
}

fn usage(message: String) -> CliError {
    CliError { kind: "UsageError".into(), message, exit_code: 2 }
}

fn make(args: &FieldArgs) -> Result<Field, CliError> {
    let modulus = args
        .modulus
        .as_deref()
        .map(|m| {
            m.split(',')
                .map(|c| c.trim().parse::<u64>().map_err(|_| usage(format!("bad modulus coefficient {c:?}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(parse_field(&args.field, modulus.as_deref())?)
}

fn poly_of(args: &PolyArgs) -> Result<(Field, Poly), CliError> {
    let field = make(&args.field)?;
    let f = Poly::parse(&field, &args.poly)?;
    Ok((field, f))
}

fn field_params(args: &FieldArgs, field: &Field) -> Value {
    json!({ "field": args.field, "modulus": field.modulus() })
}

fn elements(field: &Field, text: &str) -> Result<Vec<FieldElement>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(field.parse_element(cur.trim())?);
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(field.parse_element(cur.trim())?);
    }
    Ok(out)
}

fn positions(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| usage(format!("bad position {s:?}"))))
        .collect()
}

/// Group order and bounds assumed by `split-count`.
fn assumed_bounds(f: &Poly, group: Option<&str>) -> Result<(Value, Option<SplitBounds>, Option<u64>), CliError> {
    let n = f.deg();
    let q = f.field().order() as u64;
    let (name, order) = match group {
        Some(g) => {
            let r = reference_distribution(g)?;
            (r.name.to_string(), r.order)
        }
        None => (format!("S{n}"), (1..=n as u64).product()),
    };
    let (bounds, genus) = match genus_bound(n, order, q) {
        Ok(g) => (Some(split_bounds(q, order, g, n)), Some(g)),
        // Outside the tame range the S_5 quintic window keeps genus constant 36.
        Err(_) if n == 5 && order == 120 => (Some(s5_quintic_window(q)), Some(36)),
        Err(_) => (None, None),
    };
    Ok((json!(name), bounds, genus))
}

fn build(args: &CodeArgs, threads: usize) -> Result<(Field, LrcCode, Value), CliError> {
    let (field, f) = poly_of(&args.poly)?;
    let report = extract_good_sets_with(&f, args.max_sets, threads)?;
    let code = build_code(&report, args.t)?;
    let mut params = field_params(&args.poly.field, &field);
    params["poly"] = json!(f.to_string());
    params["t"] = json!(args.t);
    params["max_sets"] = json!(args.max_sets);
    Ok((field, code, params))
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let threads = cli.threads.filter(|&t| t > 0).unwrap_or_else(default_threads);
    let started = Instant::now();
    let report = |command: &str, params: Value, results: Value| {
        Ok(Output::Report(RunReport::new(command, params, results, started)))
    };
    match cli.command {
        Command::FieldInfo(args) => {
            let field = make(&args)?;
            report("field-info", field_params(&args, &field), field.describe())
        }
        Command::Classify { degree, field: args } => {
            let field = make(&args)?;
            let class = classify_gn(degree, field.order() as u64)?;
            let mut params = field_params(&args, &field);
            params["degree"] = json!(degree);
            report(
                "classify",
                params,
                json!({
                    "G_n": class.group_order,
                    "group": class.group_name,
                    "n": degree,
                    "q": field.order(),
                    "modulus": field.modulus(),
                }),
            )
        }
        Command::Construct { degree, field: args } => {
            let field = make(&args)?;
            let q = field.order() as u64;
            let class = classify_gn(degree, q)?;
            let f = construct_witness(degree, &field)?;
            let mut params = field_params(&args, &field);
            params["degree"] = json!(degree);
            report(
                "construct",
                params,
                json!({
                    "poly": f.to_string(),
                    "coeffs": f.coeffs().iter().map(|&c| field.to_json(c)).collect::<Vec<_>>(),
                    "G_n": class.group_order,
                    "group": class.group_name,
                    "genus_bound": genus_bound(degree, class.group_order, q).ok(),
                    "bounds": witness_bounds(&class, q),
                    "q": q,
                    "modulus": field.modulus(),
                }),
            )
        }
        Command::SplitCount { poly, group, method, max_sets } => {
            let (field, f) = poly_of(&poly)?;
            let method = match method {
                Method::Tally => SplitMethod::FiberTally,
                Method::Roots => SplitMethod::RootCount,
            };
            let ell = count_split_places_with(&f, method, threads)?;
            let (group, bounds, genus) = assumed_bounds(&f, group.as_deref())?;
            let mut params = field_params(&poly.field, &field);
            params["poly"] = json!(f.to_string());
            let mut results = json!({
                "q": field.order(),
                "modulus": field.modulus(),
                "poly": f.to_string(),
                "ell": ell,
                "group": group,
                "genus": genus,
                "lower": bounds.map(|b| b.lower),
                "upper": bounds.map(|b| b.upper),
            });
            if let Some(m) = max_sets {
                results["good_sets"] = extract_good_sets_with(&f, Some(m), threads)?.to_json()["good_sets"].take();
            }
            report("split-count", params, results)
        }
        Command::Census { poly, sample, seed, candidates } => {
            let (field, f) = poly_of(&poly)?;
            let mode = match sample {
                Some(count) => Sample::Random { count, seed },
                None => Sample::All,
            };
            let census = cycle_census_with(&f, mode, threads)?;
            let names: Vec<String> = match candidates {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => candidates_for_degree(f.deg()).iter().map(|s| s.to_string()).collect(),
            };
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let identification = identify_group(&census, &names)?;
            let even = match even_subgroup_test(&f) {
                Ok(b) => json!(b),
                Err(_) => Value::Null,
            };
            let mut params = field_params(&poly.field, &field);
            params["poly"] = json!(f.to_string());
            params["sample"] = json!(sample);
            params["seed"] = json!(seed);
            report(
                "census",
                params,
                json!({
                    "q": field.order(),
                    "modulus": field.modulus(),
                    "census": census.to_json(),
                    "identification": identification.to_json(),
                    "discriminant_square": even,
                }),
            )
        }
        Command::Code { action } => match action {
            CodeAction::Build { code: args, csv } => {
                let (_, code, params) = build(&args, threads)?;
                if csv {
                    return Ok(Output::Text(code.generator_csv()));
                }
                let mut results = code.to_json();
                results["modulus"] = json!(code.field.modulus());
                report("code build", params, results)
            }
            CodeAction::Encode { code: args, message } => {
                let (field, code, mut params) = build(&args, threads)?;
                let msg = elements(&field, &message)?;
                let w = code.encode(&msg)?;
                params["message"] = json!(message);
                let mut results = code.codeword_json(&w);
                results["modulus"] = json!(field.modulus());
                report("code encode", params, results)
            }
            CodeAction::Repair { code: args, codeword, message, erase } => {
                let (field, code, mut params) = build(&args, threads)?;
                let symbols = match (codeword, message) {
                    (Some(w), _) => {
                        params["codeword"] = json!(w);
                        let symbols = elements(&field, &w)?;
                        if symbols.len() != code.n {
                            return Err(Error::WrongCodewordLength { expected: code.n, actual: symbols.len() }.into());
                        }
                        symbols
                    }
                    (None, Some(m)) => {
                        params["message"] = json!(m);
                        code.encode(&elements(&field, &m)?)?.symbols
                    }
                    (None, None) => return Err(usage("repair needs --codeword or --message".into())),
                };
                let original = Codeword::new(symbols);
                let mut received = original.clone();
                let erased = positions(&erase)?;
                for &p in &erased {
                    if p >= code.n {
                        return Err(usage(format!("position {p} out of range 0..{}", code.n)));
                    }
                    received.erase(p);
                }
                params["erase"] = json!(erased);
                let mut repaired = Vec::new();
                for &p in &erased {
                    let value = code.repair_at(&received, p)?;
                    let group = &code.groups[code.group_of(p)];
                    repaired.push(json!({
                        "position": p,
                        "point": field.to_json(code.points[p]),
                        "value": field.to_json(value),
                        "helpers": group.clone().filter(|&i| i != p).collect::<Vec<_>>(),
                    }));
                }
                report("code repair", params, json!({ "modulus": field.modulus(), "repaired": repaired }))
            }
            CodeAction::Distance { code: args, cap } => {
                let (field, code, mut params) = build(&args, threads)?;
                params["cap"] = json!(cap.to_string());
                let d = min_distance_bruteforce_with(&code, cap, threads)?;
                report(
                    "code distance",
                    params,
                    json!({
                        "n": code.n,
                        "k": code.k,
                        "r": code.r,
                        "distance": d,
                        "optimal_distance": code.optimal_distance(),
                        "optimal": d == code.optimal_distance(),
                        "modulus": field.modulus(),
                    }),
                )
            }
        },
        Command::Tables { which, csv } => {
            if csv {
                let tables = Table::parse_selection(&which)?;
                return Ok(Output::Text(tables_csv(&table_rows(&tables, threads)?)));
            }
            Ok(Output::Report(cmd_tables(&which, threads)?))
        }
    }
}

/// Parses `argv` (including the program name), runs the command, and returns
/// the exit code with the text to print.
pub fn cmd_dispatch<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            return (2, usage(e.to_string()).to_json().to_string());
        }
    };
    match run(cli) {
        Ok(Output::Report(r)) => (0, serde_json::to_string_pretty(&r.to_json()).expect("json")),
        Ok(Output::Text(t)) => (0, t),
        Err(e) => (e.exit_code, e.to_json().to_string()),
    }
}
