//! `koethe`: classify group rings `R[G]` as Köthe / pure semisimple rings,
//! inspect the structural oracles behind the verdicts, and run the
//! oracle/theorem agreement corpus.
//!
//! Exit codes: 0 completed (Unknown verdicts included), 2 invalid input,
//! 3 cap exceeded with no symbolic fallback, 4 corpus disagreement.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use koethe::classify::{Assumptions, Caps};
use koethe::ring::ideal::Sidedness;
use koethe::{Error, GroupDescriptor, RingDescriptor};
use koethe_cli::oracle::OracleKind;
use koethe_cli::{caps_from_env, render_verdict_text, JobSpec, Question};

#[derive(Parser)]
#[command(
    name = "koethe",
    version,
    about = "Exact classification of group rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuestionArg {
    Kothe,
    Pss,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Pir,
    Idempotents,
    Radical,
    #[value(name = "local-decomp")]
    LocalDecomp,
}

#[derive(Args, Clone)]
struct CapArgs {
    /// Largest ring cardinality to materialize.
    #[arg(long)]
    cap_ring: Option<usize>,
    /// Largest ideal-lattice closure.
    #[arg(long)]
    cap_ideals: Option<usize>,
    /// Largest quotient group ring the necessary-condition scan builds.
    #[arg(long)]
    cap_scan: Option<usize>,
}

impl CapArgs {
    fn apply(&self, mut caps: Caps) -> Caps {
        if let Some(v) = self.cap_ring {
            caps.ring_size = v;
        }
        if let Some(v) = self.cap_ideals {
            caps.ideal_lattice = v;
        }
        if let Some(v) = self.cap_scan {
            caps.scan_quotient_size = v;
        }
        caps
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a group ring: is `R[G]` a Köthe ring / pure semisimple?
    Classify {
        question: QuestionArg,
        /// Ring descriptor as JSON, e.g. '{"kind":"zmod","n":4}'.
        #[arg(long)]
        ring: Option<String>,
        /// Group descriptor as JSON, e.g. '{"kind":"cyclic","n":2}'.
        #[arg(long)]
        group: Option<String>,
        /// Full JobSpec JSON from a file, or "-" for stdin (overrides
        /// --ring/--group/question).
        #[arg(long)]
        job: Option<String>,
        /// Assert abelianness of `R[G]` when it is too large to check.
        #[arg(long)]
        assume_abelian: Option<bool>,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a structural oracle on a materialized ring.
    Oracle {
        kind: OracleArg,
        /// Ring descriptor as JSON.
        #[arg(long)]
        ring: String,
        /// Side for the principal-ideal oracle.
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a bundled demonstration; `paper-examples` is the only bundle.
    Demo {
        which: String,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
    /// Sweep small coefficient rings and groups, compare theorem verdicts
    /// against the exhaustive oracle, and emit the agreement table as CSV.
    Corpus {
        #[arg(long, default_value_t = 9)]
        max_ring_card: usize,
        #[arg(long, default_value_t = 8)]
        max_group_order: usize,
        /// Largest group-ring cardinality included in the sweep.
        #[arg(long, default_value_t = 4096)]
        size_cap: u128,
        /// Also write the CSV table to this path.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        json: bool,
    },
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::CapExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn parse_ring(s: &str) -> Result<RingDescriptor, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid ring descriptor: {e}"))
}

fn parse_group(s: &str) -> Result<GroupDescriptor, String> {
    serde_json::from_str(s).map_err(|e| format!("invalid group descriptor: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Classify {
            question,
            ring,
            group,
            job,
            assume_abelian,
            caps,
            json,
        } => {
            let job_spec = if let Some(source) = job {
                let text = if source == "-" {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| e.to_string())?;
                    buf
                } else {
                    std::fs::read_to_string(&source).map_err(|e| e.to_string())?
                };
                let parsed: JobSpec =
                    serde_json::from_str(&text).map_err(|e| format!("invalid job: {e}"))?;
                parsed.validate()?;
                parsed
            } else {
                let ring = parse_ring(&ring.ok_or("missing --ring")?)?;
                let group = parse_group(&group.ok_or("missing --group")?)?;
                JobSpec {
                    v: 1,
                    ring,
                    group,
                    question: match question {
                        QuestionArg::Kothe => Question::Kothe,
                        QuestionArg::Pss => Question::Pss,
                    },
                    assumptions: Assumptions {
                        abelian_group_ring: assume_abelian,
                        caps: caps.apply(caps_from_env()),
                    },
                }
            };
            match koethe_cli::run_job(&job_spec) {
                Ok(verdict) => {
                    if json {
                        println!("{}", serde_json::to_string(&verdict).unwrap());
                    } else {
                        print!("{}", render_verdict_text(&verdict));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(exit_for(&e))
                }
            }
        }
        Command::Oracle {
            kind,
            ring,
            side,
            caps,
            json,
        } => {
            let rd = parse_ring(&ring)?;
            let caps = caps.apply(caps_from_env());
            let kind = match kind {
                OracleArg::Pir => OracleKind::Pir,
                OracleArg::Idempotents => OracleKind::Idempotents,
                OracleArg::Radical => OracleKind::Radical,
                OracleArg::LocalDecomp => OracleKind::LocalDecomp,
            };
            let side = match side {
                SideArg::Left => Sidedness::Left,
                SideArg::Right => Sidedness::Right,
            };
            match koethe_cli::oracle::run(kind, &rd, side, &caps) {
                Ok(report) => {
                    if json {
                        println!("{}", serde_json::to_string(&report).unwrap());
                    } else {
                        print!("{}", koethe_cli::oracle::render_text(&report));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(exit_for(&e))
                }
            }
        }
        Command::Demo { which, caps, json } => {
            if which != "paper-examples" {
                return Err(format!("unknown demo bundle '{which}'; try paper-examples"));
            }
            let caps = caps.apply(caps_from_env());
            match koethe_cli::demo::run(&caps) {
                Ok(results) => {
                    if json {
                        println!("{}", serde_json::to_string(&results).unwrap());
                    } else {
                        print!("{}", koethe_cli::demo::render_text(&results));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(exit_for(&e))
                }
            }
        }
        Command::Corpus {
            max_ring_card,
            max_group_order,
            size_cap,
            csv,
            caps,
            json,
        } => {
            let caps = caps.apply(caps_from_env());
            let rings = koethe_cli::corpus::default_rings(max_ring_card);
            let groups = koethe_cli::corpus::default_groups(max_group_order);
            match koethe_cli::corpus::run(&rings, &groups, size_cap, &caps) {
                Ok(report) => {
                    let table = koethe_cli::corpus::to_csv(&report);
                    if let Some(path) = csv {
                        std::fs::write(&path, &table).map_err(|e| e.to_string())?;
                    }
                    if json {
                        println!("{}", serde_json::to_string(&report).unwrap());
                    } else {
                        print!("{table}");
                    }
                    if report.disagreements > 0 {
                        Ok(ExitCode::from(4))
                    } else {
                        Ok(ExitCode::SUCCESS)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(exit_for(&e))
                }
            }
        }
    }
}
