use clap::{Parser, Subcommand, ValueEnum};
use kummerlab_cli::commands::{self, CmdError};
use kummerlab_cli::report::Report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kummerlab",
    about = "Exact local invariants of elliptic curves over small number rings and the \
             admissibility certificate for the Kummer construction",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// b/c-invariants, discriminant and j-invariant of a curve file
    Invariants { file: PathBuf },
    /// Kodaira symbol, components and conductor at the relevant primes
    Tate {
        file: PathBuf,
        /// "auto" for all relevant primes, or an index into that list
        #[arg(long, default_value = "auto")]
        prime: String,
    },
    /// Effective model of the sign involution and its fixed-scheme fiber
    Effmodel {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        prime: String,
    },
    /// The single-curve admissibility certificate
    Admissible { file: PathBuf },
    /// The pair admissibility certificate
    Pair { file1: PathBuf, file2: PathBuf },
    /// RDP configuration of the quotient fibers from local data
    Predict {
        /// residue characteristic of the fiber
        #[arg(long = "char")]
        residue_char: u64,
        /// z2 | mu2 | alpha2
        #[arg(long)]
        fiber: String,
        /// number of two-torsion points of the abelian fiber (constant row)
        #[arg(long)]
        n: Option<u32>,
        /// pair of fixed-scheme component counts (unipotent row), e.g. 2,2
        #[arg(long)]
        fix_components: Option<String>,
    },
    /// Simultaneous-resolution hypothesis checklist for a pair
    Checklist {
        file1: PathBuf,
        file2: Option<PathBuf>,
    },
    /// ADE lattice data and the partial-resolution traces
    Lattice {
        /// a Dynkin name such as D4 or E8
        #[arg(long)]
        graph: Option<String>,
        /// also compute the fundamental cycle
        #[arg(long)]
        fundamental_cycle: bool,
        /// replay a resolution trace: two-d8 | four-d4 | resolved
        #[arg(long)]
        trace: Option<String>,
    },
    /// Recompute every corpus expectation and report pass/fail lines
    VerifyPaper {
        /// only run expectations whose name contains this substring
        #[arg(long)]
        filter: Option<String>,
    },
}

fn run(cmd: &Cmd) -> Result<Report, CmdError> {
    match cmd {
        Cmd::Invariants { file } => commands::cmd_invariants(file),
        Cmd::Tate { file, prime } => commands::cmd_tate(file, prime),
        Cmd::Effmodel { file, prime } => commands::cmd_effmodel(file, prime),
        Cmd::Admissible { file } => commands::cmd_admissible(file),
        Cmd::Pair { file1, file2 } => commands::cmd_pair(file1, file2),
        Cmd::Predict { residue_char, fiber, n, fix_components } => {
            let fix = match fix_components {
                None => None,
                Some(s) => {
                    let parts: Vec<&str> = s.split(',').collect();
                    if parts.len() != 2 {
                        return Err(CmdError::Unsupported(
                            "--fix-components expects two counts like 2,2".into(),
                        ));
                    }
                    let a = parts[0].trim().parse().map_err(|_| {
                        CmdError::Unsupported("bad component count".into())
                    })?;
                    let b = parts[1].trim().parse().map_err(|_| {
                        CmdError::Unsupported("bad component count".into())
                    })?;
                    Some((a, b))
                }
            };
            commands::cmd_predict(*residue_char, fiber, *n, fix)
        }
        Cmd::Checklist { file1, file2 } => commands::cmd_checklist(file1, file2.as_deref()),
        Cmd::Lattice { graph, fundamental_cycle, trace } => {
            commands::cmd_lattice(graph.as_deref(), *fundamental_cycle, trace.as_deref())
        }
        Cmd::VerifyPaper { filter } => commands::cmd_verify(filter.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", report.render_json()),
            }
            if report.pass {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
