//! `tauspin` command line. Half-integers are passed doubled: `rep info 59 58` is `(59/2, 29)`.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "tauspin", version, about = "Lorentz representations, Clifford/CPT structure, SU(3) octets and mass splitting")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Minimal rest mass in MeV (overrides the config file).
    #[arg(long, global = true)]
    mu0: Option<f64>,
    /// key=value file with mu0_mev, masses_path, matrix_cap.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Representation data for (2l, 2ldot).
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Spin line (s + i/2, i/2) for i = 0..count.
    Line {
        s2: u32,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        dual: bool,
    },
    /// The 2s+1 labels of a spin multiplet.
    Multiplet {
        s2: u32,
        #[arg(long, default_value_t = 0)]
        shift: u32,
    },
    /// Labels on a spin line nearest a mass ratio m/mu0.
    SearchMass {
        #[arg(long)]
        ratio: f64,
        #[arg(long)]
        spin: u32,
        #[arg(long, default_value_t = 5)]
        top: usize,
    },
    Clifford {
        #[command(subcommand)]
        cmd: CliffordCmd,
    },
    Cpt {
        #[command(subcommand)]
        cmd: CptCmd,
    },
    Rwe {
        #[command(subcommand)]
        cmd: RweCmd,
    },
    Su3 {
        #[command(subcommand)]
        cmd: Su3Cmd,
    },
    /// Catalog of one octet.
    Octet {
        name: tauspin::OctetName,
        #[arg(long)]
        validate: bool,
        #[arg(long)]
        quarks: bool,
    },
    Gmo {
        #[command(subcommand)]
        cmd: GmoCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    Info { l2: u32, ldot2: u32 },
}

#[derive(Subcommand, Debug)]
pub enum CliffordCmd {
    /// Ring, charge class and parity square of Cl(p,q).
    Classify { p: u32, q: u32 },
    /// Pseudoautomorphism matrix of Cl(p,q).
    Pi { p: u32, q: u32 },
}

#[derive(Subcommand, Debug)]
pub enum CptCmd {
    /// Multiplication table; phases accept complex literals such as `0+1i`.
    Table {
        #[arg(long = "eta-p", default_value = "1")]
        eta_p: num_complex::Complex64,
        #[arg(long = "eta-t", default_value = "1")]
        eta_t: num_complex::Complex64,
        #[arg(long = "eta-c", default_value = "1")]
        eta_c: num_complex::Complex64,
    },
}

#[derive(Subcommand, Debug)]
pub enum RweCmd {
    BivectorMetric {
        #[arg(long, value_enum, default_value_t = commands::MetricKind::Minkowski)]
        metric: commands::MetricKind,
    },
    Lambda3 {
        l2: u32,
        ldot2: u32,
        /// Comma-separated block indices, 0 = largest mdot.
        #[arg(long, value_delimiter = ',')]
        blocks: Option<Vec<usize>>,
    },
    DiracL {
        #[arg(long, default_value_t = 2.0)]
        c: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Su3Cmd {
    Degrees {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    Admissible {
        #[arg(long = "max-degree", default_value_t = 160)]
        max_degree: u64,
    },
    OkuboCheck,
}

#[derive(Args, Debug)]
pub struct MassInput {
    #[arg(long)]
    octet: tauspin::OctetName,
    /// CSV with header name,Q,Y,I2,U2,B,spin2,parity,mass_mev; catalog masses when absent.
    #[arg(long)]
    masses: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GmoCmd {
    Fit {
        #[command(flatten)]
        input: MassInput,
        #[arg(long)]
        quadratic: bool,
        #[arg(long = "hypercharge-only")]
        hypercharge_only: bool,
        /// Fixed m0 (m0^2 with --quadratic); the mean of the inputs otherwise.
        #[arg(long)]
        m0: Option<f64>,
    },
    Relations {
        #[command(flatten)]
        input: MassInput,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(report) => {
            let stdout = std::io::stdout();
            if let Err(e) = report.write(cli.format, &mut stdout.lock()) {
                let closed = e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
                if !closed {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(commands::EXIT_USAGE);
                }
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
