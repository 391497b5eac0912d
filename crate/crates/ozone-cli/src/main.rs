use clap::{Parser, Subcommand};

use ozone_cli::scan::{cmd_scan, ScanArgs};
use ozone_cli::verify::{cmd_verify, VerifyArgs};
use ozone_cli::{cmd_center, cmd_report, CenterArgs, ReportArgs};

/// Classify PI skew polynomial rings given by a root-of-unity order and a
/// skew-symmetric integer exponent matrix.
#[derive(Parser, Debug)]
#[command(name = "ozone", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one ring and emit a full report
    Report(ReportArgs),
    /// Tabulate every ring on a parameter grid as TSV
    Scan(ScanArgs),
    /// Cross-check the fast path against brute-force enumeration
    OracleVerify(VerifyArgs),
    /// Present the center: generators and Hilbert series
    Center(CenterArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Scan(args) => cmd_scan(args),
        Command::OracleVerify(args) => cmd_verify(args),
        Command::Center(args) => cmd_center(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
