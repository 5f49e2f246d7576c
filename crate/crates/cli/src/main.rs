mod config;
mod input;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use rankone_core::branching::freudenthal::freudenthal_oracle;
use rankone_core::branching::{restrict_to_m, KTypeWeight, MTypeWeight};
use rankone_core::collingwood_tables::build_table;
use rankone_core::golden;
use rankone_core::pforms::{self, PFormSpec, ResidueRow};
use rankone_core::plancherel::pole_set;
use rankone_core::resolver::Resolver;
use rankone_core::{build_case_with_limit, CaseId, Family, GroupCase, HalfInt, SCHEMA_VERSION};

use config::{Config, Format, Overrides};

#[derive(Parser)]
#[command(
    name = "rankone",
    version,
    about = "Residue representations of Spin(2n,1), SU(n,1) and Sp(n,1)"
)]
struct Cli {
    /// Output format; defaults to the config file, then text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Include the resolver's derivation in the output.
    #[arg(long, global = true)]
    trace: bool,
    /// Largest accepted rank.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Largest pole index to list.
    #[arg(long, global = true)]
    max_k: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CaseArgs {
    /// real, complex or quaternionic.
    #[arg(long, value_parser = parse_family)]
    case: Family,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Root data of the group.
    CaseInfo(CaseArgs),
    /// Restriction of a K-type to M.
    Branch {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        tau: String,
        /// Also compare with the weight-multiplicity oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Poles of the Plancherel density of an M-type.
    Poles {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        sigma: String,
    },
    /// Residue representations of a K-type.
    Resolve {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        tau: String,
        /// Only this M-type.
        #[arg(long)]
        sigma: Option<String>,
        /// Only this pole; needs --sigma.
        #[arg(long, requires = "sigma")]
        q: Option<String>,
    },
    /// All K-types of the p-forms and their residues.
    #[command(group(ArgGroup::new("what").required(true).args(["p", "tau"])))]
    Pforms {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        tau: Option<String>,
    },
    /// Principal series with trivial infinitesimal character.
    Tables(CaseArgs),
    /// Runs the reference suite.
    Selftest,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: rankone_core::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Compute(rankone_core::Error),
    /// The command ran but reports a failed check.
    Check,
}

impl From<rankone_core::Error> for Failure {
    fn from(e: rankone_core::Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute(e)
        }
    }
}

struct Output {
    case: Option<CaseId>,
    result: Value,
    text: String,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output serializes")
}

fn load_case(args: &CaseArgs, config: &Config) -> Result<GroupCase, Failure> {
    Ok(build_case_with_limit(
        CaseId::new(args.case, args.n),
        config.max_n,
    )?)
}

fn usage<T>(r: Result<T, String>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn case_info(g: &GroupCase) -> Output {
    let result = json!({
        "group": g.family().group_name(g.n()),
        "dim": g.dim(),
        "alpha": g.alpha,
        "rho": g.rho,
        "rho_m": g.rho_m,
        "rho_a": g.rho_a,
        "rho_k": g.rho_k,
        "rho_alpha": g.rho_alpha,
        "mult_alpha": g.mult_alpha,
        "mult_half_alpha": g.mult_half_alpha,
        "positive_roots": g.pos_roots.len(),
        "positive_roots_m": g.pos_roots_m.len(),
        "positive_roots_k": g.pos_roots_k.len(),
        "simple_roots": g.simple_roots,
        "simple_roots_m": g.simple_roots_m,
        "simple_roots_k": g.simple_roots_k,
    });
    Output {
        case: Some(g.id),
        text: render::case_info(g),
        result,
    }
}

#[derive(Serialize)]
struct BranchRow<'a> {
    sigma: &'a MTypeWeight,
    multiplicity: u32,
    dimension: u128,
}

fn branch(g: &GroupCase, tau: &KTypeWeight, oracle: bool) -> Result<Output, Failure> {
    let rule = restrict_to_m(g, tau)?;
    let oracle_agrees = if oracle {
        Some(freudenthal_oracle(g, tau)? == rule)
    } else {
        None
    };
    let rows: Vec<BranchRow> = rule
        .entries
        .iter()
        .map(|e| BranchRow {
            sigma: &e.sigma,
            multiplicity: e.multiplicity,
            dimension: e.sigma.dimension(g),
        })
        .collect();
    let mut result = json!({
        "tau": tau,
        "dimension": tau.dimension(g),
        "restriction": rows,
    });
    if let Some(agree) = oracle_agrees {
        result["oracle_agrees"] = json!(agree);
    }
    let text = render::branch(g, tau, &rule, oracle_agrees);
    Ok(Output {
        case: Some(g.id),
        result,
        text,
    })
}

fn poles(g: &GroupCase, sigma: &MTypeWeight, max_k: usize) -> Result<Output, Failure> {
    let set = pole_set(g, sigma)?;
    let qs: Vec<HalfInt> = set.up_to(max_k).into_iter().map(|p| p.q).collect();
    let result = json!({
        "sigma": sigma,
        "lattice_offset": set.lattice_offset,
        "zeros": set.zeros,
        "poles": qs,
    });
    let text = render::poles(sigma, &set, &qs);
    Ok(Output {
        case: Some(g.id),
        result,
        text,
    })
}

fn rows_value(rows: &[ResidueRow], trace: bool) -> Value {
    let mut v = to_value(&rows);
    if !trace {
        for row in v.as_array_mut().into_iter().flatten() {
            if let Some(res) = row.get_mut("residue").and_then(Value::as_object_mut) {
                res.remove("trace");
            }
        }
    }
    v
}

fn resolve(
    g: &GroupCase,
    tau: &KTypeWeight,
    sigma: Option<MTypeWeight>,
    q: Option<HalfInt>,
    config: &Config,
) -> Result<Output, Failure> {
    let resolver = Resolver::new(g, tau)?;
    let sigmas = match &sigma {
        Some(s) => {
            if resolver.branching().multiplicity(&s.coords) == 0 {
                return Err(Failure::Usage(format!("{s} does not occur in {tau}")));
            }
            vec![s.clone()]
        }
        None => resolver.m_types(),
    };
    let mut rows = Vec::new();
    for s in sigmas {
        let set = resolver.poles(&s).expect("pole set for each M-type");
        let points: Vec<(HalfInt, usize)> = match q {
            Some(q) => {
                let index = set
                    .index_of(q)
                    .ok_or_else(|| Failure::Usage(format!("q = {q} is not a pole for {s}")))?;
                vec![(q, index)]
            }
            None => set
                .up_to(config.max_k)
                .into_iter()
                .map(|p| (p.q, p.pole_index))
                .collect(),
        };
        for (q, pole_index) in points {
            let (residue, error) = match resolver.resolve(&s, q) {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e.to_string())),
            };
            rows.push(ResidueRow {
                sigma: s.clone(),
                q,
                pole_index,
                residue,
                error,
            });
        }
    }
    let result = json!({
        "tau": tau,
        "rows": rows_value(&rows, config.trace),
    });
    let text = render::residues(tau, &rows, config.trace);
    Ok(Output {
        case: Some(g.id),
        result,
        text,
    })
}

fn pforms_cmd(g: &GroupCase, spec: &PFormSpec, config: &Config) -> Result<Output, Failure> {
    let report = pforms::report(g, spec, config.max_k)?;
    let ktypes: Vec<Value> = report
        .ktypes
        .iter()
        .map(|k| {
            json!({
                "tau": k.tau,
                "dimension": k.dimension,
                "restriction": k.restriction,
                "residues": rows_value(&k.residues, config.trace),
            })
        })
        .collect();
    let result = json!({ "spec": spec, "ktypes": ktypes });
    let text = render::pforms(&report, config.trace);
    Ok(Output {
        case: Some(g.id),
        result,
        text,
    })
}

fn tables(g: &GroupCase) -> Result<Output, Failure> {
    let report = build_table(g)?.report();
    Ok(Output {
        case: Some(g.id),
        result: to_value(&report),
        text: render::table(&report),
    })
}

fn selftest() -> (Output, bool) {
    let suites = golden::run_all();
    let passed = suites.iter().all(|s| s.passed());
    let result = json!({
        "passed": passed,
        "suites": suites,
        "deviations": golden::DEVIATIONS,
    });
    let text = render::selftest(&suites);
    (
        Output {
            case: None,
            result,
            text,
        },
        passed,
    )
}

fn run(cli: Cli, config: &Config) -> Result<(Output, bool), Failure> {
    let out = match cli.command {
        Command::CaseInfo(c) => case_info(&load_case(&c, config)?),
        Command::Branch { case, tau, oracle } => {
            let g = load_case(&case, config)?;
            let tau = usage(input::parse_tau(&g, &tau))?;
            branch(&g, &tau, oracle)?
        }
        Command::Poles { case, sigma } => {
            let g = load_case(&case, config)?;
            let sigma = usage(input::parse_sigma(&g, &sigma))?;
            poles(&g, &sigma, config.max_k)?
        }
        Command::Resolve {
            case,
            tau,
            sigma,
            q,
        } => {
            let g = load_case(&case, config)?;
            let tau = usage(input::parse_tau(&g, &tau))?;
            let sigma = sigma
                .map(|s| usage(input::parse_sigma(&g, &s)))
                .transpose()?;
            let q = q.map(|s| usage(input::parse_half(&s))).transpose()?;
            resolve(&g, &tau, sigma, q, config)?
        }
        Command::Pforms { case, p, tau } => {
            let g = load_case(&case, config)?;
            let spec = match (p, tau) {
                (Some(p), _) => PFormSpec::degree(g.id, p)?,
                (None, Some(t)) => {
                    let label = usage(input::parse_k_label(g.family(), &t))?;
                    PFormSpec::direct(g.id, label)?
                }
                (None, None) => {
                    return Err(Failure::Usage("one of --p or --tau is required".into()))
                }
            };
            pforms_cmd(&g, &spec, config)?
        }
        Command::Tables(c) => tables(&load_case(&c, config)?)?,
        Command::Selftest => return Ok(selftest()),
    };
    Ok((out, true))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CaseInfo(_) => "case-info",
        Command::Branch { .. } => "branch",
        Command::Poles { .. } => "poles",
        Command::Resolve { .. } => "resolve",
        Command::Pforms { .. } => "pforms",
        Command::Tables(_) => "tables",
        Command::Selftest => "selftest",
    }
}

fn envelope(command: &str, case: Option<CaseId>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Some(c) = case {
        m.insert("case".into(), to_value(&c));
    }
    m
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: serde_json::Map<String, Value>) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(&Value::Object(v)).expect("json")
    ));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = command_name(&cli.command);
    let config = match Config::load(Overrides {
        max_n: cli.max_n,
        max_k: cli.max_k,
        format: cli.format,
        trace: cli.trace,
    }) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let json_mode = config.format == Format::Json;

    let (code, failure) = match run(cli, &config) {
        Ok((out, ok)) => {
            if json_mode {
                let mut env = envelope(command, out.case);
                env.insert("result".into(), out.result);
                print_json(env);
            } else {
                emit(&out.text);
            }
            if ok {
                return ExitCode::SUCCESS;
            }
            (1, Failure::Check)
        }
        Err(f @ Failure::Usage(_)) => (2, f),
        Err(f) => (1, f),
    };
    let (kind, message) = match &failure {
        Failure::Usage(m) => ("usage", m.clone()),
        Failure::Compute(e) => (e.kind(), e.to_string()),
        Failure::Check => return ExitCode::from(code),
    };
    if json_mode {
        let mut env = envelope(command, None);
        env.insert("error".into(), json!({ "kind": kind, "message": message }));
        print_json(env);
    } else {
        eprintln!("error ({kind}): {message}");
    }
    ExitCode::from(code)
}
