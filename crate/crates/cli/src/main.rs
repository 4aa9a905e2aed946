use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use swevortex_cli::commands::{cmd_converge, cmd_fields, cmd_profile, CliError};
use swevortex_cli::config::RawConfig;

/// Exact-vortex benchmark tool for the 2D shallow water equations:
/// radial profiles, WENO5 convergence studies, and field export.
#[derive(Parser)]
#[command(name = "swevortex", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample h, u_theta and their radial derivatives along r
    Profile(CommonArgs),
    /// Run a mesh-refinement study and report errors and observed orders
    Converge(CommonArgs),
    /// Export exact fields (shallow water or Euler) on an N×N grid
    Fields(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Optional key=value config file; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,

    /// Vortex family
    #[arg(long, value_name = "cos|gauss|expbump|arctan")]
    family: Option<String>,
    /// Smoothness parameter p (cos, expbump, arctan families)
    #[arg(long)]
    p: Option<String>,
    /// Vortex radius r0
    #[arg(long)]
    r0: Option<String>,
    /// Far-field depth h0
    #[arg(long)]
    h0: Option<String>,
    /// Depth at the vortex center (calibrates the amplitude; excludes --gamma-amp)
    #[arg(long)]
    hmin: Option<String>,
    /// Vortex amplitude Γ (excludes --hmin)
    #[arg(long)]
    gamma_amp: Option<String>,
    /// Gravitational acceleration
    #[arg(long)]
    g: Option<String>,
    /// Vortex center
    #[arg(long, value_name = "X,Y")]
    center: Option<String>,
    /// Background advection velocity
    #[arg(long, value_name = "X,Y")]
    uinf: Option<String>,
    /// Grid resolution (cells per direction)
    #[arg(long = "N")]
    n: Option<String>,
    /// Mesh list for converge, e.g. 8,16,32,64,128
    #[arg(long)]
    meshes: Option<String>,
    /// CFL number
    #[arg(long)]
    cfl: Option<String>,
    /// Final time
    #[arg(long)]
    tfinal: Option<String>,
    /// Gauss-Legendre points per direction for cell averages
    #[arg(long)]
    quad: Option<String>,
    /// Export an Euler-equation analogue instead of shallow water
    #[arg(long, value_name = "isentropic|isochoric")]
    euler: Option<String>,
    /// Ratio of specific heats for the Euler analogue
    #[arg(long)]
    gas_gamma: Option<String>,
    /// Far-field density for the Euler analogue
    #[arg(long)]
    rho0: Option<String>,
    /// Far-field pressure for the isochoric Euler analogue
    #[arg(long)]
    p0: Option<String>,
    /// Domain rectangle (default 0,0,1,1)
    #[arg(long, value_name = "X0,Y0,X1,Y1")]
    domain: Option<String>,
    /// Evaluation time for fields
    #[arg(long)]
    time: Option<String>,
    /// Radial sample count for profile
    #[arg(long)]
    points: Option<String>,
    /// Largest radius sampled by profile (default max(2 r0, 1))
    #[arg(long)]
    rmax: Option<String>,
    /// Export cell averages instead of cell-center point values
    #[arg(long)]
    averages: bool,
    /// Encode values with shortest round-trip precision
    #[arg(long)]
    full_precision: bool,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn to_raw(&self) -> RawConfig {
        RawConfig {
            family: self.family.clone(),
            p: self.p.clone(),
            r0: self.r0.clone(),
            h0: self.h0.clone(),
            hmin: self.hmin.clone(),
            gamma_amp: self.gamma_amp.clone(),
            g: self.g.clone(),
            center: self.center.clone(),
            uinf: self.uinf.clone(),
            n: self.n.clone(),
            meshes: self.meshes.clone(),
            cfl: self.cfl.clone(),
            tfinal: self.tfinal.clone(),
            quad: self.quad.clone(),
            euler: self.euler.clone(),
            gas_gamma: self.gas_gamma.clone(),
            rho0: self.rho0.clone(),
            p0: self.p0.clone(),
            domain: self.domain.clone(),
            time: self.time.clone(),
            points: self.points.clone(),
            rmax: self.rmax.clone(),
            averages: self.averages,
            full_precision: self.full_precision,
        }
    }

    fn layered(&self) -> Result<RawConfig, CliError> {
        let flags = self.to_raw();
        Ok(match &self.config {
            Some(path) => flags.or(RawConfig::from_file(path).map_err(CliError::from)?),
            None => flags,
        })
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Profile(args) => cmd_profile(&args.layered()?, args.out.as_ref()),
        Command::Converge(args) => cmd_converge(&args.layered()?, args.out.as_ref()),
        Command::Fields(args) => cmd_fields(&args.layered()?, args.out.as_ref()),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("swevortex: {e}");
            match e {
                CliError::Config(_) => ExitCode::from(2),
                CliError::Solver(_) => ExitCode::from(3),
            }
        }
    }
}
