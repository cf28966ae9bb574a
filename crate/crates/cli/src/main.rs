use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use operad_gf::analysis::{
    classify_growth, dependence_graph, guess_algebraic, guess_algebraic_auto, guess_rational, RATIONAL_SPARE,
};
use operad_gf::enumerate::{basis_dims_weighted_with, basis_dims_with, OracleConfig, DEFAULT_CEILING};
use operad_gf::eqsys::{
    build_incl_excl_system_nonsym, build_stump_system, build_symmetric_regular_system, emit_system, EmitFormat,
    EqSystem,
};
use operad_gf::presentation::{builtin, parse_presentation, Presentation};
use operad_gf::series::{Coeff, Series};
use operad_gf::tree::Kind;
use operad_gf::Error;

#[derive(Parser)]
#[command(name = "operad-gf", version, about = "Generating series of monomial operads")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for oracle counting (1 disables parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions from the oracle or from an equation system.
    Dims(DimsArgs),
    /// Build, solve and print an equation system.
    Solve(SolveArgs),
    /// Guess a rational or algebraic closed form.
    Guess(GuessArgs),
    /// Regularity report.
    Check(InputArg),
    /// Compare oracle dimensions with every applicable system.
    Crosscheck(CrosscheckArgs),
    /// Dependence graph and growth report.
    Growth(GrowthArgs),
    /// Print the presentation in normalized form.
    Export(InputArg),
}

#[derive(Args)]
struct InputArg {
    /// Built-in name or path to a presentation file.
    input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SystemChoice {
    Stump,
    InclExcl,
    Symmetric,
}

#[derive(Args)]
struct DimsArgs {
    input: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Count basis monomials directly.
    #[arg(long, conflicts_with = "system")]
    oracle: bool,
    #[arg(long, value_enum)]
    system: Option<SystemChoice>,
    /// Grade by total generator weight.
    #[arg(long)]
    weighted: bool,
}

#[derive(Args)]
struct SolveArgs {
    input: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, value_enum)]
    system: Option<SystemChoice>,
    #[arg(long, default_value = "text", value_parser = ["text", "json", "ode"])]
    emit: String,
    /// Keep the weight variable `t`.
    #[arg(long)]
    weighted: bool,
}

#[derive(Args)]
struct GuessArgs {
    input: String,
    #[arg(long, conflicts_with = "algebraic")]
    rational: bool,
    #[arg(long)]
    algebraic: bool,
    #[arg(long, default_value_t = 2)]
    deg_y: usize,
    /// Largest z-degree; by default the largest the order supports.
    #[arg(long)]
    deg_z: Option<usize>,
    /// Largest degree of numerator and denominator of a rational fit.
    #[arg(long)]
    max_deg: Option<usize>,
    #[arg(long, default_value_t = 30)]
    n: usize,
    #[arg(long, value_enum)]
    system: Option<SystemChoice>,
}

#[derive(Args)]
struct CrosscheckArgs {
    input: String,
    /// Oracle arity bound (default 7 for shuffle, 10 for nonsym).
    #[arg(long)]
    n_oracle: Option<usize>,
    #[arg(long, default_value_t = 12)]
    n_system: usize,
    /// Check a system read from JSON instead of the built ones.
    #[arg(long, value_name = "FILE")]
    system_file: Option<PathBuf>,
}

#[derive(Args)]
struct GrowthArgs {
    input: String,
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, value_enum)]
    system: Option<SystemChoice>,
}

enum Failure {
    Input(String),
    NotFound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<Output, Failure>;

/// Rendered command output; `code` is nonzero for a reported mismatch.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, code: 0 }
    }
}

fn load(input: &str) -> Result<Presentation, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        return parse_presentation(&text).map_err(|e| Failure::Input(format!("{input}: {e}")));
    }
    builtin(input).map_err(|e| match e {
        Error::UnknownBuiltin(_) => Failure::Input(format!("`{input}` is neither a file nor a built-in presentation")),
        e => e.into(),
    })
}

fn build(p: &Presentation, choice: Option<SystemChoice>) -> Result<EqSystem, Failure> {
    Ok(match choice {
        None | Some(SystemChoice::Stump) => build_stump_system(p)?,
        Some(SystemChoice::InclExcl) => build_incl_excl_system_nonsym(p)?,
        Some(SystemChoice::Symmetric) => build_symmetric_regular_system(p)?,
    })
}

fn oracle_config(threads: Option<usize>) -> OracleConfig {
    OracleConfig {
        ceiling: DEFAULT_CEILING,
        parallel: threads != Some(1),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn cmd_dims(a: &DimsArgs, threads: Option<usize>) -> CmdResult {
    let p = load(&a.input)?;
    if a.weighted {
        let polys: Vec<operad_gf::series::TPoly> = if a.oracle {
            basis_dims_weighted_with(&p, a.n, oracle_config(threads))?
        } else {
            let s = build(&p, a.system)?;
            let sol = s.solve_weighted(a.n)?.total;
            let ord = match sol.flavor() {
                operad_gf::series::Flavor::Ordinary => sol,
                operad_gf::series::Flavor::Exponential => sol.exp_to_ord(),
            };
            ord.coeffs()[1..].to_vec()
        };
        let one = num_rational::BigRational::from_integer(1.into());
        let dims: Vec<String> = polys.iter().map(|q| operad_gf::series::fmt_rational(&q.eval(&one))).collect();
        let text = polys.iter().enumerate().map(|(i, q)| format!("{}: {q}\n", i + 1)).collect();
        let json = json!({
            "dims": dims.iter().map(|d| d.parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(d.clone()))).collect::<Vec<_>>(),
            "weighted": polys.iter().map(Coeff::to_json).collect::<Vec<_>>(),
        });
        return Ok(Output::ok(text, json));
    }
    let dims: Vec<String> = if a.oracle {
        basis_dims_with(&p, a.n, oracle_config(threads))?.iter().map(u64::to_string).collect()
    } else {
        build(&p, a.system)?.solve(a.n)?.total.dims()?.iter().map(|d| d.to_string()).collect()
    };
    let json = json!({
        "dims": dims.iter().map(|d| d.parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(d.clone()))).collect::<Vec<_>>(),
    });
    Ok(Output::ok(format!("{}\n", join(&dims)), json))
}

fn cmd_solve(a: &SolveArgs) -> CmdResult {
    let p = load(&a.input)?;
    let s = build(&p, a.system)?;
    let format: EmitFormat = a.emit.parse()?;
    let emitted = emit_system(&s, format, a.weighted)?;
    let sol = s.solve(a.n)?;
    let dims = sol.total.dims().ok();
    let mut text = emitted.clone();
    if format != EmitFormat::Json {
        text.push_str(&format!("\nseries: {}\n", sol.total));
        if let Some(d) = &dims {
            text.push_str(&format!("dims: {}\n", join(d)));
        }
    }
    let mut out = json!({
        "system": s.to_json(),
        "total": sol.total.to_json(),
        "dims": dims.map(|d| d.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    });
    if a.weighted {
        out["weighted_total"] = s.solve_weighted(a.n)?.total.to_json();
    }
    if format == EmitFormat::Ode {
        out["ode"] = Value::from(emitted);
    }
    Ok(Output::ok(text, out))
}

fn guess_series(p: &Presentation, n: usize, choice: Option<SystemChoice>) -> Result<Series, Failure> {
    Ok(build(p, choice)?.solve(n)?.total)
}

fn cmd_guess(a: &GuessArgs) -> CmdResult {
    if a.rational == a.algebraic {
        return Err(Failure::Input("choose one of --rational and --algebraic".into()));
    }
    let p = load(&a.input)?;
    let f = guess_series(&p, a.n, a.system)?;
    if a.rational {
        let max_deg = a.max_deg.unwrap_or(a.n.saturating_sub(RATIONAL_SPARE) / 3);
        return match guess_rational(&f, max_deg)? {
            Some(r) => Ok(Output::ok(
                format!("G = {r}\ncertified to order {}\n", a.n),
                json!({"rational": r.to_json(), "text": r.to_string(), "certified_order": a.n}),
            )),
            None => Err(Failure::NotFound(format!("no rational function of degree <= {max_deg} fits"))),
        };
    }
    let q = match a.deg_z {
        Some(dz) => guess_algebraic(&f, a.deg_y, dz)?,
        None => guess_algebraic_auto(&f, a.deg_y)?,
    };
    match q {
        Some(q) => {
            let series = if p.kind() == Kind::Shuffle { "E" } else { "G" };
            Ok(Output::ok(
                format!("{q} = 0    (y = {series})\ncertified to order {}\n", a.n),
                json!({"algebraic": q.to_json(), "text": q.to_string(), "certified_order": a.n}),
            ))
        }
        None => Err(Failure::NotFound(format!("no equation of y-degree <= {} fits", a.deg_y))),
    }
}

fn cmd_check(a: &InputArg) -> CmdResult {
    let p = load(&a.input)?;
    let mut text = format!("kind: {}\nreduced: {}\n", p.kind(), p.is_reduced());
    let mut out = json!({"kind": p.kind().to_string(), "reduced": p.is_reduced()});
    if p.kind() == Kind::Shuffle {
        let enc = |v: Vec<operad_gf::tree::Tree>| v.iter().map(|t| p.encode(t)).collect::<Vec<_>>();
        let shuffle = enc(p.shuffle_regular_missing()?);
        let symmetric = enc(p.symmetric_regular_missing()?);
        for (label, missing) in [("shuffle regular", &shuffle), ("symmetric regular", &symmetric)] {
            text.push_str(&format!("{label}: {}\n", missing.is_empty()));
            for m in missing {
                text.push_str(&format!("  missing {m}\n"));
            }
        }
        out["shuffle_regular"] = Value::from(shuffle.is_empty());
        out["symmetric_regular"] = Value::from(symmetric.is_empty());
        out["missing_shuffle"] = json!(shuffle);
        out["missing_symmetric"] = json!(symmetric);
    }
    Ok(Output::ok(text, out))
}

fn compare(oracle: &[u64], system: &[String]) -> Option<usize> {
    oracle
        .iter()
        .zip(system)
        .position(|(o, s)| o.to_string() != *s)
        .map(|i| i + 1)
}

fn cmd_crosscheck(a: &CrosscheckArgs, threads: Option<usize>) -> CmdResult {
    let p = load(&a.input)?;
    let n_oracle = a.n_oracle.unwrap_or(if p.kind() == Kind::Shuffle { 7 } else { 10 });
    let oracle = basis_dims_with(&p, n_oracle, oracle_config(threads))?;
    let mut systems: Vec<(String, Result<EqSystem, Failure>)> = Vec::new();
    if let Some(path) = &a.system_file {
        let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let s = EqSystem::from_json(&v, p.generators().to_vec())?;
        systems.push((path.display().to_string(), Ok(s)));
    } else {
        systems.push(("stump".into(), build(&p, Some(SystemChoice::Stump))));
        match p.kind() {
            Kind::Nonsym => systems.push(("incl-excl".into(), build(&p, Some(SystemChoice::InclExcl)))),
            Kind::Shuffle => {
                if p.check_symmetric_regular() {
                    systems.push(("symmetric".into(), build(&p, Some(SystemChoice::Symmetric))));
                }
            }
        }
    }
    let mut text = format!("oracle: {}\n", join(&oracle));
    let mut rows = Vec::new();
    let mut failed = false;
    let mut checked = 0;
    for (name, s) in systems {
        let s = match s {
            Ok(s) => s,
            Err(Failure::Input(msg)) => {
                text.push_str(&format!("{name}: skipped ({msg})\n"));
                rows.push(json!({"system": name, "skipped": msg}));
                continue;
            }
            Err(e) => return Err(e),
        };
        let dims: Vec<String> = match s.solve(a.n_system.max(n_oracle)).and_then(|sol| sol.total.dims()) {
            Ok(d) => d.iter().map(|x| x.to_string()).collect(),
            Err(e) => {
                failed = true;
                text.push_str(&format!("{name}: FAIL ({e})\n"));
                rows.push(json!({"system": name, "pass": false, "error": e.to_string()}));
                continue;
            }
        };
        checked += 1;
        match compare(&oracle, &dims) {
            None => {
                text.push_str(&format!("{name}: pass ({})\n", join(&dims)));
                rows.push(json!({"system": name, "pass": true, "dims": dims}));
            }
            Some(k) => {
                failed = true;
                text.push_str(&format!(
                    "{name}: FAIL at arity {k}: oracle {} system {}\n",
                    oracle[k - 1],
                    dims[k - 1]
                ));
                rows.push(json!({"system": name, "pass": false, "first_diverging_arity": k, "dims": dims}));
            }
        }
    }
    if checked == 0 && !failed {
        return Err(Failure::Input(format!("no equation system applies\n{text}")));
    }
    let json = json!({"oracle": oracle, "systems": rows, "pass": !failed});
    Ok(Output {
        text,
        json,
        code: if failed { 4 } else { 0 },
    })
}

fn cmd_growth(a: &GrowthArgs) -> CmdResult {
    let p = load(&a.input)?;
    let s = build(&p, a.system)?;
    let g = dependence_graph(&s);
    let report = classify_growth(&g, &s.solve(a.n)?);
    let mut text = String::from("dependence graph:\n");
    for e in &g.edges {
        text.push_str(&format!(
            "  {} -> {}{}\n",
            g.names[e.from],
            g.names[e.to],
            if e.nonlinear { " (nonlinear)" } else { "" }
        ));
    }
    text.push_str(&report.to_string());
    Ok(Output::ok(text, json!({"graph": g.to_json(), "report": report.to_json()})))
}

fn cmd_export(a: &InputArg) -> CmdResult {
    let p = load(&a.input)?;
    Ok(Output::ok(p.to_dsl(), p.to_json()))
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let result = match &cli.command {
        Command::Dims(a) => cmd_dims(a, cli.threads),
        Command::Solve(a) => cmd_solve(a),
        Command::Guess(a) => cmd_guess(a),
        Command::Check(a) => cmd_check(a),
        Command::Crosscheck(a) => cmd_crosscheck(a, cli.threads),
        Command::Growth(a) => cmd_growth(a),
        Command::Export(a) => cmd_export(a),
    };
    let out = result?;
    let body = if cli.json {
        serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
    } else {
        out.text
    };
    emit(cli, &body)?;
    Ok(out.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NotFound(msg)) => {
            eprintln!("not found: {msg}");
            ExitCode::from(3)
        }
    }
}
