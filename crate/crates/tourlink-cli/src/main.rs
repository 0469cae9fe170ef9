use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tourlink_core::constructions;
use tourlink_core::digraph::Tournament;
use tourlink_core::gf2::{select_index_set, simulate_zcycle_linking, Gf2Matrix, Gf2Vector};
use tourlink_core::iso::enumerate_tournaments;
use tourlink_core::linking::gap_table;
use tourlink_core::report::{verify, VerifyTarget};

/// Exhaustive certificate search and construction tooling for tournament
/// linking and knotting.
#[derive(Parser)]
#[command(name = "tourlink", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
    Dot,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate isomorphism classes of n-vertex tournaments.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Machine-check a negative result over every isomorphism class.
    Verify {
        /// k7-linkless | k7-knotless | k8-knotless
        target: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a named construction.
    Build {
        name: String,
        /// Link count for the nlinked family.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a named construction (or read a tournament file) and run the
    /// matching structural validator.
    Validate {
        /// Construction name, or a path to a tournament JSON file.
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Random index-set selection demo.
    Gf2Demo(Gf2DemoArgs),
    /// Print the consistency-gap bounds.
    GapTable {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Export a construction or tournament file as DOT.
    Export {
        /// Construction name, or a path to a tournament JSON file.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Gf2DemoArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn emit(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn load_tournament(name: &str, n: Option<usize>) -> anyhow::Result<(Tournament, Option<String>)> {
    if constructions::NAMES.contains(&name) {
        let c = constructions::build(name, n)?;
        Ok((c.tournament, Some(c.name)))
    } else {
        let data = std::fs::read_to_string(name)?;
        Ok((Tournament::from_json(&data)?, None))
    }
}

const USAGE_ERROR: u8 = 2;
const FAILURE: u8 = 1;
const SUCCESS: u8 = 0;

fn usage(msg: &str) -> anyhow::Result<u8> {
    eprintln!("usage error: {msg}");
    eprintln!("run `tourlink --help` for the command list");
    Ok(USAGE_ERROR)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Enumerate { n, format, out } => {
            let classes = enumerate_tournaments(n)?;
            let content = match format {
                Format::Jsonl => {
                    let mut s = String::new();
                    for t in &classes {
                        s.push_str(&t.to_json());
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<serde_json::Value> = classes
                        .iter()
                        .map(|t| serde_json::from_str(&t.to_json()).unwrap())
                        .collect();
                    serde_json::to_string_pretty(&rows)? + "\n"
                }
                _ => return usage("enumerate supports json or jsonl"),
            };
            eprintln!("{} classes on {n} vertices", classes.len());
            emit(&out, &content)?;
            Ok(SUCCESS)
        }
        Command::Verify {
            target,
            jobs,
            report,
            format,
        } => {
            if jobs == 0 {
                return usage("--jobs must be >= 1");
            }
            let Ok(target) = VerifyTarget::parse(&target) else {
                return usage("verify targets: k7-linkless, k7-knotless, k8-knotless");
            };
            let r = verify(target, jobs)?;
            eprintln!(
                "{} classes, {} certified, {} leftovers in {} ms",
                r.classes,
                r.certified,
                r.leftovers.len(),
                r.elapsed_ms
            );
            let content = match format {
                Format::Json => r.to_json() + "\n",
                Format::Md => r.to_markdown(),
                _ => return usage("verify supports json or md"),
            };
            emit(&report, &content)?;
            Ok(if r.success { SUCCESS } else { FAILURE })
        }
        Command::Build { name, n, out, format } => {
            if !constructions::NAMES.contains(&name.as_str()) {
                return usage(&format!("unknown construction '{name}'"));
            }
            let c = constructions::build(&name, n)?;
            let content = match format {
                Format::Json => c.tournament.to_json() + "\n",
                Format::Dot => c.tournament.to_dot(),
                _ => return usage("build supports json or dot"),
            };
            eprintln!("{}: {} vertices", c.name, c.tournament.n());
            emit(&out, &content)?;
            Ok(SUCCESS)
        }
        Command::Validate { name, n } => {
            if constructions::NAMES.contains(&name.as_str()) {
                let c = constructions::build(&name, n)?;
                match constructions::validate(&c, n) {
                    Ok(()) => {
                        println!("{}: valid ({} vertices)", c.name, c.tournament.n());
                        Ok(SUCCESS)
                    }
                    Err(e) => {
                        println!("{}: INVALID: {e}", c.name);
                        Ok(FAILURE)
                    }
                }
            } else {
                let data = std::fs::read_to_string(&name)?;
                let t = Tournament::from_json(&data)?;
                println!("{name}: well-formed tournament on {} vertices", t.n());
                Ok(SUCCESS)
            }
        }
        Command::Gf2Demo(args) => {
            if args.n < 2 {
                return usage("--n must be >= 2");
            }
            use rand::{Rng, SeedableRng};
            let side = (2 * args.n - 3) * (2 * args.n - 3);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
            let mut m = Gf2Matrix::identity(side);
            for r in 0..side {
                for c in 0..side {
                    if r != c && rng.gen_bool(0.5) {
                        m.set(r, c, true);
                    }
                }
            }
            let mut c = Gf2Vector::zero(side);
            for _ in 0..args.n - 2 {
                c.set(rng.gen_range(0..side), true);
            }
            let sel = select_index_set(&m, args.n)?;
            let linked = simulate_zcycle_linking(&m, &c, args.n)?;
            println!("n = {}, matrix {side}x{side}, seed {}", args.n, args.seed);
            for r in 0..side {
                let row: String = (0..side).map(|j| if m.get(r, j) { '1' } else { '0' }).collect();
                println!("  {row}");
            }
            println!(
                "I = {{{}}}",
                sel.indices
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let v: String = (0..side).map(|j| if sel.v.get(j) { '1' } else { '0' }).collect();
            println!("V = {v} (weight {})", sel.v.weight());
            println!("linked targets: {} (need >= {})", linked.len(), args.n - 1);
            Ok(SUCCESS)
        }
        Command::GapTable { max_n, format } => {
            let t = gap_table(max_n)?;
            let content = match format {
                Format::Md => t.to_markdown(),
                Format::Json => serde_json::to_string_pretty(&t)? + "\n",
                _ => return usage("gap-table supports md or json"),
            };
            print!("{content}");
            Ok(SUCCESS)
        }
        Command::Export { name, n, format, out } => {
            if format != Format::Dot {
                return usage("export supports dot only");
            }
            let (t, label) = load_tournament(&name, n)?;
            if let Some(l) = label {
                eprintln!("exporting {l} ({} vertices)", t.n());
            }
            emit(&out, &t.to_dot())?;
            Ok(SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // exits 2 on flag errors
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(FAILURE)
        }
    }
}
