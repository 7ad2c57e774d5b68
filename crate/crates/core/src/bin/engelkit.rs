use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use engelkit::catalog::{self, VerificationReport};
use engelkit::lie::{certify, LieScenario};
use engelkit::nq::{nilpotent_quotient, FpPresentation};

#[derive(Parser)]
#[command(name = "engelkit", version, about = "Verify powerful Engel p-group examples and Lie ring certificates")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify one catalog entry or a .fp file; prints the JSON report.
    Verify { target: String },
    /// Verify the whole catalog.
    VerifyAll {
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Structural profile of a presentation's nilpotent quotient.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        class_bound: usize,
        #[arg(long, default_value_t = 3)]
        engel: usize,
        /// grid, exhaustive or random:k
        #[arg(long, default_value = "grid")]
        policy: String,
    },
    /// Write the nilpotent quotient as a .pcp file.
    Nq {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 6)]
        class_bound: usize,
    },
    /// Certify a Lie ring scenario.
    Lie {
        #[arg(long)]
        scale: u64,
    },
}

const DISCREPANCY: u8 = 1;
const USAGE: u8 = 2;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn read_fp(path: &Path) -> Result<FpPresentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    FpPresentation::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn status(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(DISCREPANCY)
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed;
    match cli.cmd {
        Cmd::Verify { target } => {
            let path = Path::new(&target);
            let spec = if path.is_file() {
                match read_fp(path) {
                    Ok(fp) => catalog::adhoc(&path.file_stem().unwrap_or_default().to_string_lossy(), &fp),
                    Err(e) => return usage(e),
                }
            } else {
                match catalog::find(&target) {
                    Ok(s) => s,
                    Err(e) => return usage(e),
                }
            };
            let r = catalog::verify(&spec, seed);
            println!("{}", r.to_json());
            status(&[r])
        }
        Cmd::VerifyAll { report } => {
            let reports = catalog::verify_all(seed);
            for r in &reports {
                println!("{:<12} {}", r.name, if r.passed() { "pass" } else { "DISCREPANCY" });
                for d in &r.discrepancies {
                    println!("    {}: expected {}, computed {}", d.check, d.expected, d.computed);
                }
            }
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, to_json(&reports) + "\n") {
                    return usage(format!("{}: {e}", path.display()));
                }
            }
            status(&reports)
        }
        Cmd::Analyze { file, class_bound, engel, policy } => {
            let Some(policy) = catalog::parse_policy(&policy, seed) else {
                return usage(format!("unknown policy {policy}"));
            };
            let fp = match read_fp(&file) {
                Ok(fp) => fp,
                Err(e) => return usage(e),
            };
            match catalog::analyze(&fp, class_bound, engel, policy, seed) {
                Ok(a) => {
                    println!("{}", to_json(&a));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Cmd::Nq { file, output, class_bound } => {
            let fp = match read_fp(&file) {
                Ok(fp) => fp,
                Err(e) => return usage(e),
            };
            let q = match nilpotent_quotient(&fp, class_bound) {
                Ok(q) => q,
                Err(e) => return usage(e),
            };
            if let Err(e) = std::fs::write(&output, q.pc.to_pcp()) {
                return usage(format!("{}: {e}", output.display()));
            }
            println!(
                "order {}^{}, class {}, layers {:?}, stabilized {}",
                q.pc.prime(),
                q.pc.order_exponent(),
                q.class,
                q.layer_exponents,
                q.stabilized
            );
            ExitCode::SUCCESS
        }
        Cmd::Lie { scale } => match catalog::find(&format!("lie_s{scale}")) {
            Ok(spec) => {
                let r = catalog::verify(&spec, seed);
                println!("{}", r.to_json());
                status(&[r])
            }
            // scales outside the catalog have nothing to compare against
            Err(_) => match certify(&LieScenario::new(scale), catalog::LIE_SAMPLES, seed) {
                Ok(c) => {
                    println!("{}", to_json(&c));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            },
        },
    }
}
