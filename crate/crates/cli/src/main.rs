//! Command-line frontend: evaluate kernels on grids, run verification suites
//! and write figure data.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use fresnelkit::figures::{figure, linspace, midpoints, write_csv, FIGURE_IDS};
use fresnelkit::fracrod::{bernstein_eval, u2nu_eval, u_fourthirds_airy, FracOrder};
use fresnelkit::plates::{disk_heat_kernels, disk_vibration_kernels, plate_kernel, DiskSpec};
use fresnelkit::pseudo::{npoint_density, PathGrid};
use fresnelkit::rod::{
    finite_rod_solution, fresnel_kernel, fresnel_kernel_drift, halfline_solution, BoundaryKind, BoundarySpec, DriftSpec,
};
use fresnelkit::subord::{biquadratic_from_subordination, double_cauchy_density, iterated_density, IterationDepth};
use fresnelkit::verify::{run_suite, VerificationReport};
use fresnelkit::Error;

const KERNELS: [&str; 14] = [
    "fresnel",
    "fresnel-drift",
    "halfline",
    "finite-rod",
    "frac-series",
    "frac-airy",
    "bernstein",
    "plate",
    "disk-heat",
    "disk-vibration",
    "npoint",
    "double-cauchy",
    "biquadratic",
    "iterated",
];
const FINITE_ROD_TERMS: usize = 50;

#[derive(Parser)]
#[command(name = "fresnelkit", version, about = "Fresnel rod-vibration kernels and their verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a kernel on a grid of x values.
    Eval(EvalArgs),
    /// Run a verification suite (rod, fracrod, plates, pseudo, subord, all).
    Verify {
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write `<figure-id>_<curve>.csv` files for a figure.
    Figure {
        id: String,
        /// Output directory (default: working directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Boundary {
    Absorbing,
    Reflecting,
    Elastic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    P,
    Q,
}

#[derive(Args)]
struct EvalArgs {
    kernel: String,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    t: f64,
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Start point (half-line, finite rod), second coordinate (plate) or
    /// position at t/2 (npoint).
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[arg(long = "L", allow_negative_numbers = true)]
    length: Option<f64>,
    #[arg(long = "R", allow_negative_numbers = true)]
    radius: Option<f64>,
    #[arg(long = "mu-drift", allow_negative_numbers = true)]
    mu_drift: Option<f64>,
    #[arg(long)]
    depth: Option<u32>,
    #[arg(long, value_enum, default_value_t = Boundary::Absorbing)]
    boundary: Boundary,
    /// Disk density component.
    #[arg(long, value_enum, default_value_t = Form::Q)]
    form: Form,
    #[arg(long, allow_negative_numbers = true)]
    xmin: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    xmax: Option<f64>,
    #[arg(long, default_value_t = 201)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Meta {
    kernel: String,
    params: BTreeMap<String, f64>,
    t: f64,
    generated_unix: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Profile {
    meta: Meta,
    grid: Vec<f64>,
    values: Vec<f64>,
}

enum Failure {
    Unknown(String),
    Domain(String),
    Runtime(String),
    ChecksFailed(usize),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::ChecksFailed(_) | Failure::Runtime(_) => 1,
            Failure::Unknown(_) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownSuite(_) => Failure::Unknown(e.to_string()),
            Error::Domain(_)
            | Error::NonPositiveTime(_)
            | Error::Range(_)
            | Error::Pole(_)
            | Error::Overflow(_)
            | Error::DimensionGuard { .. }
            | Error::UnsupportedOrder(_)
            | Error::NearZeroDenominator(_)
            | Error::Empty => Failure::Domain(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(&args),
        Command::Verify { suite, format, out } => cmd_verify(&suite, format, out.as_deref()),
        Command::Figure { id, out } => cmd_figure(&id, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Unknown(m) | Failure::Domain(m) | Failure::Runtime(m) => eprintln!("fresnelkit: {m}"),
                Failure::ChecksFailed(n) => eprintln!("fresnelkit: {n} check(s) failed"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

type Eval = Box<dyn Fn(f64) -> fresnelkit::Result<f64>>;

fn cmd_eval(a: &EvalArgs) -> Result<(), Failure> {
    if !KERNELS.contains(&a.kernel.as_str()) {
        return Err(Failure::Unknown(format!("unknown kernel '{}' (known: {})", a.kernel, KERNELS.join(", "))));
    }
    if a.points == 0 {
        return Err(Failure::Domain("--points must be positive".into()));
    }
    let t = a.t;
    let mut params = BTreeMap::new();
    let mut record = |k: &str, v: f64| {
        params.insert(k.to_string(), v);
        v
    };
    let (f, default_range, open): (Eval, (f64, f64), bool) = match a.kernel.as_str() {
        "fresnel" => (Box::new(move |x| fresnel_kernel(x, t)), (-5.0, 5.0), false),
        "fresnel-drift" => {
            let d = DriftSpec::new(record("mu_drift", a.mu_drift.unwrap_or(0.0)))?;
            (Box::new(move |x| fresnel_kernel_drift(x, t, d)), (-5.0, 5.0), false)
        }
        "halfline" => {
            let y = record("y", a.y.unwrap_or(1.0));
            let kind = match a.boundary {
                Boundary::Absorbing => BoundaryKind::Absorbing,
                Boundary::Reflecting => BoundaryKind::Reflecting,
                Boundary::Elastic => BoundaryKind::Elastic(record("alpha", a.alpha.unwrap_or(1.0))),
            };
            let b = BoundarySpec::half_line(kind, y)?;
            (Box::new(move |x| halfline_solution(x, t, b)), (0.0, 5.0), false)
        }
        "finite-rod" => {
            let l = record("L", a.length.unwrap_or(1.0));
            let b = BoundarySpec::finite(record("y", a.y.unwrap_or(0.5 * l)), l)?;
            (Box::new(move |x| Ok(finite_rod_solution(x, t, b, FINITE_ROD_TERMS)?.value)), (0.0, l), false)
        }
        "frac-series" => {
            let o = FracOrder::new(record("nu", a.nu.unwrap_or(0.5)))?;
            (Box::new(move |x| u2nu_eval(x, t, o)), (-5.0, 5.0), false)
        }
        "frac-airy" => (Box::new(move |x| u_fourthirds_airy(x, t)), (-5.0, 5.0), false),
        "bernstein" => (Box::new(move |x| bernstein_eval(x, t)), (-5.0, 5.0), false),
        "plate" => {
            let y = record("y", a.y.unwrap_or(0.0));
            (Box::new(move |x| plate_kernel(&[x, y], t)), (-5.0, 5.0), false)
        }
        "disk-heat" | "disk-vibration" => {
            let disk = DiskSpec::new(record("R", a.radius.unwrap_or(1.0)))?;
            let heat = a.kernel == "disk-heat";
            let form = a.form;
            let f: Eval = Box::new(move |r| {
                let (q, p) = if heat { disk_heat_kernels(r, t, disk)? } else { disk_vibration_kernels(r, t, disk)? };
                Ok(if form == Form::Q { q } else { p })
            });
            (f, (0.0, disk.radius), true)
        }
        "npoint" => {
            let y = record("y", a.y.unwrap_or(0.0));
            (Box::new(move |x| Ok(npoint_density(&PathGrid::new(vec![t / 2.0, t], vec![y, x])?))), (-5.0, 5.0), false)
        }
        "double-cauchy" => (Box::new(move |x| double_cauchy_density(x, t)), (-5.0, 5.0), false),
        "biquadratic" => (Box::new(move |x| biquadratic_from_subordination(x, t)), (-5.0, 5.0), false),
        "iterated" => {
            let depth = IterationDepth::new(a.depth.unwrap_or(1));
            record("depth", depth.n as f64);
            (Box::new(move |x| iterated_density(x, t, depth)), (-5.0, 5.0), false)
        }
        _ => unreachable!("registry checked above"),
    };
    let grid = match (a.xmin, a.xmax) {
        (None, None) if open => midpoints(default_range.0, default_range.1, a.points),
        (lo, hi) => {
            let (lo, hi) = (lo.unwrap_or(default_range.0), hi.unwrap_or(default_range.1));
            if !(lo <= hi) {
                return Err(Failure::Domain(format!("--xmin {lo} exceeds --xmax {hi}")));
            }
            linspace(lo, hi, a.points)
        }
    };
    let values = grid.iter().map(|&x| f(x)).collect::<fresnelkit::Result<Vec<_>>>()?;
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Failure::Runtime(format!("non-finite value at x = {}", grid[i])));
    }
    let mut w = sink(a.out.as_deref())?;
    match a.format {
        Format::Csv => write_csv(&mut w, &grid, &values)?,
        Format::Json => {
            let generated_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            let profile = Profile { meta: Meta { kernel: a.kernel.clone(), params, t, generated_unix }, grid, values };
            serde_json::to_writer(&mut w, &profile).map_err(io::Error::from)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_verify(suite: &str, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let reports: Vec<VerificationReport> = run_suite(suite)?;
    let mut w = sink(out)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &reports).map_err(io::Error::from)?;
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(w, "check_name,measured,tolerance,passed,evaluations,notes")?;
            for r in &reports {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    csv_field(&r.check_name),
                    fresnelkit::figures::format_g17(r.measured),
                    fresnelkit::figures::format_g17(r.tolerance),
                    r.passed,
                    r.evaluations,
                    csv_field(&r.notes)
                )?;
            }
        }
    }
    w.flush()?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Failure::ChecksFailed(failed));
    }
    Ok(())
}

fn cmd_figure(id: &str, out: Option<&Path>) -> Result<(), Failure> {
    if !FIGURE_IDS.contains(&id) {
        return Err(Failure::Unknown(format!("unknown figure '{id}' (known: {})", FIGURE_IDS.join(", "))));
    }
    let dir = out.unwrap_or(Path::new("."));
    for curve in figure(id)? {
        let path = dir.join(curve.file_name(id));
        let mut w = BufWriter::new(File::create(&path)?);
        write_csv(&mut w, &curve.grid, &curve.values)?;
        w.flush()?;
        println!("{}", path.display());
    }
    Ok(())
}
