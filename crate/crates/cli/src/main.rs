//! `fock-radial`: Bargmann-transform numerics from the shell.
//!
//! Subcommands: `synth` (build test inputs), `transform` (evaluate 𝔙f on a
//! grid), `stft` (Gaussian-window STFT on a phase-space grid), `radial`
//! (radiality report), `reduce` (canonical 1-D representative), and `verify`
//! (the deterministic check suite).
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 valid-but-non-radial input. `FOCK_RADIAL_THREADS` caps the worker
//! thread count.

mod grid;
mod verify;

use bargmann_fock::fock::{
    bargmann_of_expansion, bargmann_of_samples, ComplexPoint, SampledFunction,
};
use bargmann_fock::hermite::HermiteExpansion;
use bargmann_fock::io;
use bargmann_fock::multi_index::MultiIndex;
use bargmann_fock::radial::{radial_test, synth_gaussian, synth_radial};
use bargmann_fock::stft::{stft_gaussian, PhasePoint};
use clap::{Parser, Subcommand, ValueEnum};
use grid::GridSpec;
use num_complex::Complex;
use rayon::prelude::*;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fock-radial",
    version,
    about = "Bargmann transform and radial-symmetry toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a preset Hermite expansion as JSON.
    Synth {
        /// h0 | h2-shell | gaussian:A | profile:FILE
        #[arg(long)]
        preset: String,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        /// Truncation degree for series presets.
        #[arg(long, default_value_t = 40)]
        degree: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the Bargmann transform of an expansion on a real grid (CSV).
    Transform {
        /// Input expansion JSON.
        input: PathBuf,
        /// Axis grid min:max:count; one flag per axis, or one for all axes.
        #[arg(long, required = true, allow_hyphen_values = true)]
        grid: Vec<GridSpec>,
        /// Evaluation route.
        #[arg(long, value_enum, default_value_t = Route::Series)]
        path: Route,
        /// Gauss–Hermite order for the kernel route.
        #[arg(long, default_value_t = 32)]
        quad_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gaussian-window STFT on a phase-space grid (CSV).
    Stft {
        /// Input expansion JSON.
        input: PathBuf,
        /// Axis grid min:max:count; 2·dim flags (x axes then ξ axes), dim
        /// flags used for both, or one for all axes.
        #[arg(long, required = true, allow_hyphen_values = true)]
        grid: Vec<GridSpec>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Radiality report for an expansion (exit 3 when not radial).
    Radial {
        /// Input expansion JSON.
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a radial expansion to its 1-D representative (exit 3 with the
    /// report when not radial).
    Reduce {
        /// Input expansion JSON.
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the deterministic verification suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run only checks whose name contains this substring.
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Route {
    Kernel,
    Series,
}

const EXIT_INPUT: u8 = 2;
const EXIT_NOT_RADIAL: u8 = 3;

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("FOCK_RADIAL_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("error: FOCK_RADIAL_THREADS must be a positive integer");
                return ExitCode::from(EXIT_INPUT);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Synth {
            preset,
            dim,
            degree,
            out,
        } => {
            let f = build_preset(&preset, dim, degree)?;
            emit(out.as_deref(), &io::expansion_to_json(&f))?;
            Ok(0)
        }
        Command::Transform {
            input,
            grid,
            path,
            quad_order,
            out,
        } => {
            let f = read_expansion(&input)?;
            cmd_transform(&f, &grid, path, quad_order, out.as_deref())
        }
        Command::Stft { input, grid, out } => {
            let f = read_expansion(&input)?;
            cmd_stft(&f, &grid, out.as_deref())
        }
        Command::Radial { input, tol, out } => {
            let f = read_expansion(&input)?;
            if tol <= 0.0 {
                return Err("--tol must be positive".into());
            }
            let report = radial_test(&f, tol);
            emit(out.as_deref(), &io::report_to_json(&report))?;
            Ok(if report.is_radial { 0 } else { EXIT_NOT_RADIAL })
        }
        Command::Reduce { input, tol, out } => {
            let f = read_expansion(&input)?;
            if tol <= 0.0 {
                return Err("--tol must be positive".into());
            }
            let report = radial_test(&f, tol);
            match &report.profile {
                Some(p) => {
                    let f0 = bargmann_fock::radial::expansion_from_profile_1d(p);
                    emit(out.as_deref(), &io::expansion_to_json(&f0))?;
                    Ok(0)
                }
                None => {
                    emit(out.as_deref(), &io::report_to_json(&report))?;
                    Ok(EXIT_NOT_RADIAL)
                }
            }
        }
        Command::Verify { seed, check, out } => {
            let (text, all_pass) = verify::run(seed, check.as_deref());
            emit(out.as_deref(), &text)?;
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn build_preset(preset: &str, dim: usize, degree: u32) -> Result<HermiteExpansion<f64>, String> {
    if dim == 0 {
        return Err("--dim must be at least 1".into());
    }
    if preset == "h0" {
        return Ok(HermiteExpansion::basis(MultiIndex::zeros(dim)));
    }
    if preset == "h2-shell" {
        let mut f = HermiteExpansion::new(dim, 2);
        for j in 0..dim {
            let mut alpha = vec![0u32; dim];
            alpha[j] = 2;
            f.set(MultiIndex::new(alpha), Complex::new(1.0, 0.0))
                .unwrap();
        }
        return Ok(f);
    }
    if let Some(a) = preset.strip_prefix("gaussian:") {
        let a: f64 = a
            .parse()
            .map_err(|_| format!("bad gaussian parameter `{a}`"))?;
        if a <= 0.0 {
            return Err("gaussian parameter must be positive".into());
        }
        return Ok(synth_gaussian(a, dim, (degree / 2) as usize));
    }
    if let Some(path) = preset.strip_prefix("profile:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
        let p = io::profile_from_json::<f64>(&text).map_err(|e| format!("parsing {path}: {e}"))?;
        return Ok(synth_radial(&p, dim));
    }
    Err(format!(
        "unknown preset `{preset}` (expected h0, h2-shell, gaussian:A, profile:FILE)"
    ))
}

fn cmd_transform(
    f: &HermiteExpansion<f64>,
    specs: &[GridSpec],
    route: Route,
    quad_order: usize,
    out: Option<&std::path::Path>,
) -> Result<u8, String> {
    if quad_order == 0 {
        return Err("--quad-order must be at least 1".into());
    }
    let dim = f.dim();
    let axes: Vec<Vec<f64>> = grid::per_axis(specs, dim)?
        .iter()
        .map(GridSpec::points)
        .collect();
    let points = grid::product(&axes);

    type Eval = Box<dyn Fn(&ComplexPoint<f64>) -> Complex<f64> + Sync>;
    let eval: Eval = match route {
        Route::Series => {
            let ev = bargmann_of_expansion(f).evaluator();
            Box::new(move |z| ev.eval(z).unwrap())
        }
        Route::Kernel => {
            let sampled = SampledFunction::from_expansion(f, quad_order);
            Box::new(move |z| bargmann_of_samples(&sampled, z).unwrap())
        }
    };
    let values: Vec<Complex<f64>> = points
        .par_iter()
        .map(|x| eval(&ComplexPoint::from_real(x)))
        .collect();

    let mut csv = String::new();
    for j in 1..=dim {
        let _ = write!(csv, "z{j},");
    }
    csv.push_str("re,im\n");
    for (x, v) in points.iter().zip(&values) {
        for xj in x {
            let _ = write!(csv, "{},", fmt17(*xj));
        }
        let _ = writeln!(csv, "{},{}", fmt17(v.re), fmt17(v.im));
    }
    emit(out, &csv)?;
    Ok(0)
}

fn cmd_stft(
    f: &HermiteExpansion<f64>,
    specs: &[GridSpec],
    out: Option<&std::path::Path>,
) -> Result<u8, String> {
    let dim = f.dim();
    let per_axis = if specs.len() == dim {
        // same grid for x and ξ axes
        let mut both = specs.to_vec();
        both.extend_from_slice(specs);
        both
    } else {
        grid::per_axis(specs, 2 * dim)?
    };
    let axes: Vec<Vec<f64>> = per_axis.iter().map(GridSpec::points).collect();
    let points = grid::product(&axes);

    let values: Vec<Complex<f64>> = points
        .par_iter()
        .map(|p| {
            let (x, xi) = p.split_at(dim);
            stft_gaussian(f, &PhasePoint::new(x.to_vec(), xi.to_vec())).unwrap()
        })
        .collect();

    let mut csv = String::new();
    for j in 1..=dim {
        let _ = write!(csv, "x{j},");
    }
    for j in 1..=dim {
        let _ = write!(csv, "xi{j},");
    }
    csv.push_str("re,im,abs\n");
    for (p, v) in points.iter().zip(&values) {
        for c in p {
            let _ = write!(csv, "{},", fmt17(*c));
        }
        let _ = writeln!(csv, "{},{},{}", fmt17(v.re), fmt17(v.im), fmt17(v.norm()));
    }
    emit(out, &csv)?;
    Ok(0)
}

fn read_expansion(path: &std::path::Path) -> Result<HermiteExpansion<f64>, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    io::expansion_from_json(&text).map_err(|e| format!("parsing {}: {e}", path.display()))
}

/// 17 significant digits: round-trippable f64.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), String> {
    let text = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
