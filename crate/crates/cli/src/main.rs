use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twisted_birack::birack::format::{parse_birack, write_birack, write_birack_stream};
use twisted_birack::birack::tsr_construct;
use twisted_birack::diagram::{builtin, parse, BUILTIN_NAMES};
use twisted_birack::enumerate::{enumerate_tvb, enumerate_twist_structures};
use twisted_birack::invariants::{enhanced, invariant_json, Enhancement};
use twisted_birack::{Diagram, Move, MoveKind, Semiarc, Structure, TwistedVirtualBirack};

#[derive(Parser)]
#[command(
    name = "tvb",
    version,
    about = "Twisted virtual biracks and their link invariants"
)]
struct Cli {
    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every axiom check on a birack file.
    Check { file: String },
    /// List every structure on n elements.
    Enumerate { n: usize },
    /// Print the rank and the kink permutation.
    Rank { file: String },
    /// Name a structure (quandle, rack, biquandle, ...).
    Classify { file: String },
    /// Build the linear structure B(x,y) = (ty, rx), V(x,y) = (vy, x/v), T(x) = Tx on Z_m.
    Tsr {
        m: u64,
        t: u64,
        r: u64,
        v: u64,
        twist: u64,
    },
    /// List the twist columns compatible with the B and V blocks of a file.
    Twists { file: String },
    /// Compute the counting invariant of a diagram.
    Invariant {
        /// Diagram file, or a builtin name (optionally prefixed `builtin:`).
        #[arg(short, long)]
        diagram: String,
        /// Birack file.
        #[arg(short, long)]
        birack: String,
        #[arg(long, value_parser = ["image", "writhe", "poly"])]
        enhance: Option<String>,
    },
    /// Apply a local move to a diagram.
    Moves {
        #[arg(short, long)]
        diagram: String,
        /// One of bar-cancel, bar-slide-virtual, twist-conjugate,
        /// kink-pair-cancel, kink-bar-swap.
        #[arg(short, long)]
        r#move: MoveKind,
        /// Semiarc id addressing the site.
        #[arg(short, long)]
        site: u32,
        /// Apply the move right to left.
        #[arg(long)]
        inverse: bool,
    },
}

/// Failure with a message; always exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// What a verb prints: text for humans and the same data as JSON.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))
}

fn load_structure(path: &str) -> Result<Structure, Failure> {
    parse_birack(&read(path)?).map_err(|e| Failure(format!("{path}: {e}")))
}

fn load_birack(path: &str) -> Result<TwistedVirtualBirack, Failure> {
    TwistedVirtualBirack::new(load_structure(path)?).map_err(|e| Failure(format!("{path}: {e}")))
}

fn load_diagram(arg: &str) -> Result<Diagram, Failure> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    if !Path::new(arg).exists() && BUILTIN_NAMES.contains(&arg) {
        return Ok(builtin(arg)?);
    }
    parse(&read(arg)?).map_err(|e| Failure(format!("{arg}: {e}")))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&e| e + 1).collect()
}

fn run(command: Command) -> Result<Report, Failure> {
    Ok(match command {
        Command::Check { file } => {
            let s = load_structure(&file)?;
            let report = s.validate();
            let results: Vec<Value> = report
                .results()
                .iter()
                .map(|(c, passed)| json!({ "check": c.name(), "passed": passed }))
                .collect();
            Report {
                text: format!("{report}\n"),
                json: json!({
                    "valid": report.is_valid(),
                    "biquandle": report.is_biquandle(),
                    "results": results,
                }),
                ok: report.is_valid(),
            }
        }
        Command::Enumerate { n } => {
            let r = enumerate_tvb(n)?;
            let structures: Vec<&Structure> = r.structures.iter().map(|x| x.structure()).collect();
            let mut text = write_birack_stream(structures.iter().copied());
            text.push_str(&format!("# {} structures\n", structures.len()));
            Report::ok(
                text,
                json!({
                    "n": n,
                    "count": structures.len(),
                    "structures": structures.iter().map(|s| s.to_matrix()).collect::<Vec<_>>(),
                    "stats": r.stats,
                }),
            )
        }
        Command::Rank { file } => {
            let x = load_birack(&file)?;
            let kink = one_based(&x.derived().kink);
            let cells: Vec<String> = kink.iter().map(ToString::to_string).collect();
            Report::ok(
                format!("rank {}\nkink {}\n", x.rank(), cells.join(" ")),
                json!({ "rank": x.rank(), "kink": kink }),
            )
        }
        Command::Classify { file } => {
            let x = load_birack(&file)?;
            let name = x.classify();
            Report::ok(format!("{name}\n"), json!({ "class": name }))
        }
        Command::Tsr { m, t, r, v, twist } => {
            let x = tsr_construct(m, t, r, v, twist)?;
            Report::ok(
                write_birack(x.structure()),
                json!({ "matrix": x.to_matrix() }),
            )
        }
        Command::Twists { file } => {
            let s = load_structure(&file)?;
            let columns: Vec<Vec<usize>> = enumerate_twist_structures(&s)?
                .iter()
                .map(|t| one_based(t))
                .collect();
            let text: String = columns
                .iter()
                .map(|t| {
                    t.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                        + "\n"
                })
                .collect();
            Report::ok(
                format!("{text}# {} twist columns\n", columns.len()),
                json!({ "twists": columns }),
            )
        }
        Command::Invariant {
            diagram,
            birack,
            enhance,
        } => {
            let d = load_diagram(&diagram)?;
            let x = load_birack(&birack)?;
            let which = enhance.map(|e| e.parse::<Enhancement>()).transpose()?;
            let json = invariant_json(&d, &x, which);
            let text = match which {
                None => format!("{json}\n"),
                Some(_) => format!("{json}\n# {}\n", enhanced(&d, &x, which)),
            };
            Report::ok(text, json)
        }
        Command::Moves {
            diagram,
            r#move,
            site,
            inverse,
        } => {
            let d = load_diagram(&diagram)?;
            let mv = if inverse {
                Move::inverse(r#move)
            } else {
                Move::forward(r#move)
            };
            let out = d.apply_move(mv, Semiarc(site))?;
            Report::ok(out.serialize(), json!({ "diagram": out.serialize() }))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            match cli.output {
                Output::Text => print!("{}", report.text),
                Output::Json => println!("{}", report.json),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
