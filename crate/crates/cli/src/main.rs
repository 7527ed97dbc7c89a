use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chambers::arrangement::{validate_subgroup_of_aut, Arrangement, ValidationMode, DEFAULT_EXHAUSTIVE_LIMIT};
use chambers::engine::{run_report, whitney_numbers, Engine, OrbitId, SymmetryOptions, WhitneyVector};
use chambers::families::{self, Family, Platonic};
use chambers::io::{read_arrangement_json, read_group_json, read_matrix_json, write_arrangement_json, Input};
use chambers::perm::{PermGroup, DEFAULT_ORBIT_BUDGET};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Whitney numbers, characteristic polynomials and chamber counts of
/// hyperplane arrangements.
#[derive(Parser)]
#[command(name = "chambers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Arrangement file (row format); `-` reads stdin
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Arrangement file with normals as matrix columns
    #[arg(long, global = true, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Group file; replaces any group given with the arrangement
    #[arg(long, global = true, value_name = "FILE")]
    group: Option<PathBuf>,
    /// Skip the automorphism check of a group read from a file
    #[arg(long, global = true)]
    trust_group: bool,
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Symmetry)]
    engine: EngineArg,
    #[arg(long, global = true, value_enum, default_value_t = OrbitArg::Pseudo)]
    orbit_id: OrbitArg,
    /// Largest orbit enumerated by `--orbit-id exact`
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_BUDGET)]
    orbit_budget: usize,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Disable the one-hyperplane shortcut for central arrangements
    #[arg(long, global = true)]
    no_central_shortcut: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Whitney numbers b_0 … b_d
    Whitney(Source),
    /// Print the characteristic polynomial
    Charpoly(Source),
    /// Print the number of chambers
    Chambers(Source),
    /// Print Whitney numbers with level sizes, group orders and timings
    Report(Source),
    /// Check that the group permutes the hyperplanes as automorphisms
    ValidateGroup(Source),
    /// Print a built-in family as an arrangement file
    Gen(GenArgs),
}

#[derive(Args)]
struct Source {
    #[command(subcommand)]
    gen: Option<GenSource>,
}

#[derive(Subcommand)]
enum GenSource {
    /// Use a built-in family instead of a file
    Gen(GenArgs),
}

#[derive(Args)]
struct GenArgs {
    /// resonance, threshold, crosspolytope, permutohedron, demicube (d);
    /// discriminantal (d n); icosahedron, dodecahedron, dodecahedron-phi, cell24
    family: String,
    params: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Simple,
    Extended,
    Symmetry,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrbitArg {
    Pseudo,
    Exact,
    None,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl From<chambers::Error> for Failure {
    fn from(e: chambers::Error) -> Self {
        Failure {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

fn fail(kind: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        kind,
        message: message.into(),
    }
}

/// An arrangement with the group to use and whether it still needs checking.
struct Loaded {
    arrangement: Arrangement,
    group: Option<PermGroup>,
    trusted: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report_failure(&fail("usage", e.to_string().trim_end()));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            report_failure(&f);
            ExitCode::FAILURE
        }
    }
}

fn report_failure(f: &Failure) {
    eprintln!("{}", json!({ "error": { "kind": f.kind, "message": f.message } }));
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let opts = &cli.opts;
    let source = match &cli.command {
        Command::Gen(args) => {
            let f = generate(args, opts.seed)?;
            return Ok(write_arrangement_json(&f.arrangement, Some(&f.group)));
        }
        Command::Whitney(s) | Command::Charpoly(s) | Command::Chambers(s) | Command::Report(s) | Command::ValidateGroup(s) => s,
    };
    let loaded = load(source, opts)?;
    let json = opts.format == Format::Json;

    if let Command::ValidateGroup(_) = cli.command {
        let group = loaded.group.as_ref().ok_or_else(|| fail("usage", "no group given"))?;
        let mode = validation_mode(&loaded.arrangement, opts.seed);
        let valid = validate_subgroup_of_aut(&loaded.arrangement, group, mode)?;
        let mode_name = match mode {
            ValidationMode::Exhaustive { .. } => "exhaustive",
            ValidationMode::Sampled { .. } => "sampled",
        };
        return Ok(if json {
            json!({ "valid": valid, "group_order": group.order(), "mode": mode_name }).to_string()
        } else {
            valid.to_string()
        });
    }

    let engine = match opts.engine {
        EngineArg::Simple => Engine::Simple,
        EngineArg::Extended => Engine::Extended,
        EngineArg::Symmetry => Engine::Symmetry,
    };
    if engine == Engine::Symmetry && !loaded.trusted {
        if let Some(g) = &loaded.group {
            if !validate_subgroup_of_aut(&loaded.arrangement, g, validation_mode(&loaded.arrangement, opts.seed))? {
                return Err(chambers::Error::NotAutomorphism.into());
            }
        }
    }
    let sym = symmetry_options(opts);
    let arr = &loaded.arrangement;

    if let Command::Report(_) = cli.command {
        let trivial = PermGroup::trivial(arr.len());
        let group = loaded.group.as_ref().unwrap_or(&trivial);
        let (w, report) = run_report(arr, group, &sym)?;
        return Ok(if json {
            json!({
                "whitney": w,
                "chambers": w.chambers(),
                "group_order": group.order(),
                "report": report,
            })
            .to_string()
        } else {
            let sizes: Vec<String> = report.stats.level_sizes.iter().map(usize::to_string).collect();
            [
                format!("whitney {w}"),
                format!("chambers {}", w.chambers()),
                format!("group order {}", group.order()),
                format!("level sizes {}", sizes.join(" ")),
                format!("nodes {}", report.stats.total_nodes()),
                format!("identifications {}", report.stats.identifications),
                format!("stabilizer time {:.3} ms", report.stabilizer_time.as_secs_f64() * 1e3),
                format!("total time {:.3} ms", report.total_time.as_secs_f64() * 1e3),
            ]
            .join("\n")
        });
    }

    let w: WhitneyVector = whitney_numbers(arr, loaded.group.as_ref(), engine, &sym)?;
    Ok(match (&cli.command, json) {
        (Command::Whitney(_), false) => w.to_string(),
        (Command::Whitney(_), true) => json!({ "whitney": w }).to_string(),
        (Command::Charpoly(_), false) => w.char_poly().to_string(),
        (Command::Charpoly(_), true) => {
            let p = w.char_poly();
            json!({ "charpoly": p, "text": p.to_string() }).to_string()
        }
        (Command::Chambers(_), false) => w.chambers().to_string(),
        (Command::Chambers(_), true) => json!({ "chambers": w.chambers() }).to_string(),
        _ => unreachable!("handled above"),
    })
}

fn symmetry_options(opts: &Opts) -> SymmetryOptions {
    SymmetryOptions {
        orbit_id: match opts.orbit_id {
            OrbitArg::Pseudo => OrbitId::Pseudo,
            OrbitArg::Exact => OrbitId::Exact {
                budget: opts.orbit_budget,
            },
            OrbitArg::None => OrbitId::None,
        },
        threads: opts.threads,
        seed: opts.seed,
        central_shortcut: !opts.no_central_shortcut,
        ..SymmetryOptions::default()
    }
}

fn validation_mode(arr: &Arrangement, seed: u64) -> ValidationMode {
    if arr.len() <= DEFAULT_EXHAUSTIVE_LIMIT {
        ValidationMode::Exhaustive {
            limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    } else {
        ValidationMode::Sampled { samples: 4000, seed }
    }
}

fn load(source: &Source, opts: &Opts) -> Result<Loaded, Failure> {
    let given = [opts.input.is_some(), opts.matrix.is_some(), source.gen.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(fail("usage", "give exactly one of --input FILE, --matrix FILE or gen <family> <params>"));
    }
    let mut loaded = if let Some(GenSource::Gen(args)) = &source.gen {
        let f = generate(args, opts.seed)?;
        Loaded {
            arrangement: f.arrangement,
            group: Some(f.group),
            trusted: true,
        }
    } else {
        let Input { arrangement, group } = match (&opts.input, &opts.matrix) {
            (Some(path), _) => read_arrangement_json(&read(path)?)?,
            (_, Some(path)) => read_matrix_json(&read(path)?)?,
            _ => unreachable!("checked above"),
        };
        Loaded {
            arrangement,
            group,
            trusted: opts.trust_group,
        }
    };
    if let Some(path) = &opts.group {
        loaded.group = Some(read_group_json(&read(path)?, loaded.arrangement.len())?);
        loaded.trusted = opts.trust_group;
    }
    Ok(loaded)
}

fn read(path: &Path) -> Result<String, Failure> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    };
    text.map_err(|e| fail("io", format!("{}: {e}", path.display())))
}

fn generate(args: &GenArgs, seed: u64) -> Result<Family, Failure> {
    let p = &args.params;
    let int = |i: usize| -> Result<usize, Failure> {
        let text = p.get(i).ok_or_else(|| fail("invalid_family", format!("{} needs more parameters", args.family)))?;
        text.parse()
            .map_err(|_| fail("invalid_family", format!("parameter {text:?} is not a non-negative integer")))
    };
    let arity = |k: usize| -> Result<(), Failure> {
        if p.len() != k {
            return Err(fail("invalid_family", format!("{} takes {k} parameter(s), got {}", args.family, p.len())));
        }
        Ok(())
    };
    let family = match args.family.as_str() {
        "resonance" | "threshold" | "crosspolytope" | "permutohedron" | "demicube" => {
            arity(1)?;
            let d = int(0)?;
            match args.family.as_str() {
                "resonance" => families::resonance(d),
                "threshold" => families::threshold(d),
                "crosspolytope" => families::crosspolytope(d),
                "permutohedron" => families::permutohedron(d),
                _ => families::demicube(d),
            }
        }
        "discriminantal" => {
            arity(2)?;
            families::discriminantal(int(0)?, int(1)?, seed)
        }
        other => {
            let which: Platonic = other.parse().map_err(|_| {
                fail(
                    "invalid_family",
                    format!(
                        "unknown family {other:?}; expected resonance, threshold, crosspolytope, permutohedron, \
                         demicube, discriminantal, icosahedron, dodecahedron, dodecahedron-phi or cell24"
                    ),
                )
            })?;
            arity(0)?;
            families::platonic(which)
        }
    };
    Ok(family?)
}
