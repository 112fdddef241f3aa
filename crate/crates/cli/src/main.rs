//! Command-line front end for the exact point-generation engine.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or schema error,
//! 3 degeneracy report (structured JSON on stderr), 4 height overflow aborted
//! a run that produced no points.

mod io;
mod svg;

use clap::{Args, Parser, Subcommand};
use ramify_core::error::FibrationError;
use ramify_core::fano::{v1_generate, V1GenConfig};
use ramify_core::fibration::{
    build_fibration, find_multisections, generate_points, six_lines_generate, GenConfig,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ramify",
    about = "Exact rational point generation on double covers of the plane and a weighted threefold",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Clone)]
struct RunFlags {
    /// Fiber scan bound: pencil parameters up to this height.
    #[arg(long, global = true, default_value_t = 50)]
    t_height: u32,
    /// Multiples of each non-torsion generator to emit.
    #[arg(long, global = true, default_value_t = 8)]
    k_max: u32,
    /// Height bound for multisection sweeps.
    #[arg(long, global = true, default_value_t = 30)]
    search_height: u32,
    /// Bit-length cap for group-law coordinates.
    #[arg(long, global = true, default_value_t = 100_000)]
    height_cap_bits: u64,
    /// Worker threads; 0 uses the available parallelism.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write an SVG scatter of points per fiber.
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Seed recorded for randomized property suites; generation itself is
    /// deterministic and ignores it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Multisection index to generate from.
    #[arg(long, global = true, default_value_t = 0)]
    multisection: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, reducedness and rational singular points of a plane curve.
    AnalyzeCurve {
        /// Curve file: JSON sparse monomial list [[i, j, "c"], ...].
        #[arg(long)]
        input: PathBuf,
    },
    /// Intersection multiplicities of a six-line configuration.
    SixLines {
        /// Lines file: JSON [["a","b","c"], ...] with six entries.
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the pencil fibration at a double point of a branch sextic.
    BuildFibration {
        /// JSON {"curve": [...], "base_point": ["x","y"]}.
        #[arg(long)]
        input: PathBuf,
    },
    /// Sweep for multisections of the fibration.
    FindMultisections {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate rational points on the double cover.
    GeneratePoints {
        #[arg(long)]
        input: PathBuf,
    },
    /// Full six-line pipeline: analyze, fiber, sweep, generate.
    SixLinesGenerate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Threefold pipeline on a weighted model (built-in fixture by default).
    FanoDemo {
        /// JSON {"c": "...", "q2": [...], "q4": [...], "q6": [...],
        /// "p": {"x": [...], "z": "..."}}; omit for the built-in model.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Family-member lattice height.
        #[arg(long, default_value_t = 1)]
        member_height: u32,
        /// Write the model (with its tangency point) to this path and exit.
        #[arg(long)]
        emit_model: Option<PathBuf>,
    },
    /// Re-check emitted points against their defining equation.
    Verify {
        /// Points file (JSON lines).
        #[arg(long)]
        input: PathBuf,
        /// Curve file for surface points.
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Model file for threefold points.
        #[arg(long)]
        model: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.run.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.run.threads)
            .build_global()
        {
            eprintln!("failed to size the thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => err.emit(),
    }
}

/// Structured failure carrying the exit code and a JSON payload for code 3.
pub struct Failure {
    code: u8,
    message: String,
    degeneracy: Option<serde_json::Value>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
            degeneracy: None,
        }
    }

    fn emit(self) -> ExitCode {
        if let Some(d) = &self.degeneracy {
            eprintln!("{}", serde_json::to_string(d).expect("report serializes"));
        } else {
            eprintln!("error: {}", self.message);
        }
        ExitCode::from(self.code)
    }
}

impl From<FibrationError> for Failure {
    fn from(e: FibrationError) -> Failure {
        match e {
            FibrationError::Degenerate(report) => Failure {
                code: 3,
                message: report.to_string(),
                degeneracy: Some(serde_json::to_value(&report).expect("report serializes")),
            },
            other => Failure {
                code: 2,
                message: other.to_string(),
                degeneracy: None,
            },
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Failure> {
    let flags = cli.run.clone();
    let gen_cfg = GenConfig {
        t_height: flags.t_height,
        k_max: flags.k_max,
        height_cap_bits: flags.height_cap_bits,
    };
    match cli.command {
        Command::AnalyzeCurve { input } => io::cmd_analyze_curve(&input, &flags),
        Command::SixLines { input } => io::cmd_six_lines(&input, &flags),
        Command::BuildFibration { input } => io::cmd_build_fibration(&input, &flags),
        Command::FindMultisections { input } => {
            let (surface, base) = io::read_fibration_input(&input)?;
            let fib = build_fibration(surface, base)?;
            let found = find_multisections(&fib, flags.search_height);
            io::emit_multisections(&fib, &found, flags.search_height, &flags)
        }
        Command::GeneratePoints { input } => {
            let (surface, base) = io::read_fibration_input(&input)?;
            let fib = build_fibration(surface, base)?;
            let found = find_multisections(&fib, flags.search_height);
            let Some(ms) = found.get(flags.multisection) else {
                return io::emit_no_multisection(flags.search_height, &flags);
            };
            let (points, report) = generate_points(&fib, ms, flags.multisection, &gen_cfg);
            let overflow_only = report.points_emitted == 0 && report.height_overflow_fibers > 0;
            io::emit_surface_points(&points, &report, &flags)?;
            if overflow_only {
                return Ok(ExitCode::from(4));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SixLinesGenerate { input } => {
            let lines = io::read_lines_file(&input)?;
            let run =
                six_lines_generate(&lines, flags.search_height, flags.multisection, &gen_cfg)?;
            let overflow_only = run
                .report
                .as_ref()
                .is_some_and(|r| r.points_emitted == 0 && r.height_overflow_fibers > 0);
            io::emit_six_line_run(&run, &flags)?;
            if overflow_only {
                return Ok(ExitCode::from(4));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::FanoDemo {
            input,
            member_height,
            emit_model,
        } => {
            let (model, point) = match input {
                Some(path) => io::read_model_file(&path)?,
                None => ramify_core::fixtures::pinned_v1(),
            };
            if let Some(path) = emit_model {
                io::write_model_file(&path, &model, &point)?;
                return Ok(ExitCode::SUCCESS);
            }
            let cfg = V1GenConfig {
                member_height,
                search_height: flags.search_height.min(12),
                surface: gen_cfg,
                stop_after_first_success: true,
            };
            let (points, report) = v1_generate(&model, &point, &cfg).map_err(io::fano_failure)?;
            io::emit_threefold_points(&points, &report, &flags)
        }
        Command::Verify {
            input,
            curve,
            model,
        } => io::cmd_verify(&input, curve.as_deref(), model.as_deref()),
    }
}
