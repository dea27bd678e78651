//! Command-line surface. Subcommands map one-to-one onto library calls;
//! all real work lives in the other modules.
//!
//! Exit codes: 0 success, 1 usage or parse problem, 2 certificate failure,
//! 3 I/O failure.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_3;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{dilation_upper_bound, spanning_ratio};
use crate::certificates::run_certificate_suite;
use crate::generators::{GenKind, GenSpec};
use crate::geometry::Aperture;
use crate::graph::build_cyao;
use crate::io::{
    self, read_graph_json, read_points_csv, write_certificates_jsonl, write_graph_json,
    write_points_csv, write_report_json, GraphFile, IoError, ReportFile,
};
use crate::svg::{render_svg, PlotOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CERT_FAILURE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cyao",
    about = "Continuous Yao graphs: generators, construction, analysis, certificates, figures",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AngleUnit {
    Rad,
    Deg,
}

impl AngleUnit {
    fn to_radians(self, value: f64) -> f64 {
        match self {
            AngleUnit::Rad => value,
            AngleUnit::Deg => value.to_radians(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "ellipse-chain")]
    EllipseChain,
    #[value(name = "double-polygon")]
    DoublePolygon,
    #[value(name = "two-segments")]
    TwoSegments,
    #[value(name = "uniform", alias = "uniform-random")]
    Uniform,
    #[value(name = "perturbed")]
    Perturbed,
}

impl From<KindArg> for GenKind {
    fn from(k: KindArg) -> GenKind {
        match k {
            KindArg::EllipseChain => GenKind::EllipseChain,
            KindArg::DoublePolygon => GenKind::DoublePolygon,
            KindArg::TwoSegments => GenKind::TwoSegments,
            KindArg::Uniform => GenKind::UniformRandom,
            KindArg::Perturbed => GenKind::Perturbed,
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Which construction to generate.
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Vertical stretch of the ellipse (ellipse-chain, >= 1).
    #[arg(long)]
    r: Option<f64>,
    /// Aperture excess of the disconnection construction (double-polygon).
    #[arg(long)]
    epsilon: Option<f64>,
    /// Angle between the two segments (two-segments), radians.
    #[arg(long)]
    alpha: Option<f64>,
    /// Points per segment (two-segments).
    #[arg(long)]
    m: Option<usize>,
    /// Point count (uniform / perturbed).
    #[arg(long)]
    n: Option<usize>,
    /// Perturbation radius (perturbed).
    #[arg(long)]
    delta: Option<f64>,
    /// RNG seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GenArgs {
    fn to_spec(&self) -> GenSpec {
        let mut params = BTreeMap::new();
        if let Some(r) = self.r {
            params.insert("r".into(), r);
        }
        if let Some(e) = self.epsilon {
            params.insert("epsilon".into(), e);
        }
        if let Some(a) = self.alpha {
            params.insert("alpha".into(), a);
        }
        if let Some(m) = self.m {
            params.insert("m".into(), m as f64);
        }
        if let Some(n) = self.n {
            params.insert("n".into(), n as f64);
        }
        if let Some(d) = self.delta {
            params.insert("delta".into(), d);
        }
        GenSpec {
            kind: self.kind.into(),
            params,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated point set as CSV.
    Generate {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build cY(theta) over a point CSV and write the edge list as JSON.
    Build {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        theta: f64,
        #[arg(long, value_enum, default_value = "rad")]
        unit: AngleUnit,
        #[arg(long)]
        out: PathBuf,
    },
    /// Analyze a built graph: spanning ratio, connectivity, degree stats.
    Analyze {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full certificate suite and write JSON lines.
    Verify {
        #[arg(long)]
        out: PathBuf,
        /// Boundary samples per region in the sampling oracles.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Sweep a generator parameter against a list of apertures.
    Sweep {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Comma-separated aperture list.
        #[arg(long)]
        thetas: String,
        /// Comma-separated generator parameter list (r, epsilon, m, or n).
        #[arg(long)]
        params: String,
        /// Comma-separated seeds (uniform / perturbed / two-segments).
        #[arg(long, default_value = "0")]
        seeds: String,
        #[arg(long, value_enum, default_value = "rad")]
        unit: AngleUnit,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a point set (and optionally its graph) as SVG.
    Plot {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Overlay the inductive-set boundary at these stretch values.
        #[arg(long, value_delimiter = ',')]
        inductive_t: Vec<f64>,
        /// Frame pair "i,j" whose points act as a and b for overlays.
        #[arg(long, default_value = "0,1")]
        frame: String,
        #[arg(long, default_value_t = false)]
        cones: bool,
        #[arg(long, default_value_t = false)]
        named_points: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum CmdError {
    Usage(String),
    Io(IoError),
    CertificateFailure(usize),
}

impl From<IoError> for CmdError {
    fn from(e: IoError) -> CmdError {
        match e {
            IoError::Io(_) => CmdError::Io(e),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

impl From<crate::generators::GenError> for CmdError {
    fn from(e: crate::generators::GenError) -> CmdError {
        CmdError::Usage(e.to_string())
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<f64>, CmdError> {
    let vals: Result<Vec<f64>, _> = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<f64>())
        .collect();
    match vals {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(CmdError::Usage(format!("expected a comma-separated {what} list, got `{text}`"))),
    }
}

fn aperture(theta_rad: f64) -> Result<Aperture, CmdError> {
    Aperture::new(theta_rad)
        .map_err(|_| CmdError::Usage(format!("theta = {theta_rad} rad outside (0, 2*pi]")))
}

/// Caps rayon's global pool from the CYAO_THREADS environment variable.
/// Call once at process start.
pub fn init_threads_from_env() {
    if let Ok(v) = std::env::var("CYAO_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn run_command(cmd: Command) -> Result<(), CmdError> {
    match cmd {
        Command::Generate { gen, out } => {
            let points = gen.to_spec().generate()?;
            write_points_csv(&out, &points)?;
            Ok(())
        }
        Command::Build {
            points,
            theta,
            unit,
            out,
        } => {
            let pts = read_points_csv(&points)?;
            let theta_rad = unit.to_radians(theta);
            let ap = aperture(theta_rad)?;
            let graph = build_cyao(&pts, ap)
                .map_err(|e| CmdError::Usage(e.to_string()))?;
            write_graph_json(&out, &GraphFile::new(&graph, theta_rad))?;
            Ok(())
        }
        Command::Analyze { points, graph, out } => {
            let pts = read_points_csv(&points)?;
            let gfile = read_graph_json(&graph)?;
            if gfile.n != pts.len() {
                return Err(CmdError::from(IoError::DimensionMismatch {
                    points: pts.len(),
                    graph: gfile.n,
                }));
            }
            let g = gfile.to_graph()?;
            let report = spanning_ratio(&g, &pts).map_err(|e| CmdError::Usage(e.to_string()))?;
            let bound = if gfile.theta_rad > 0.0 && gfile.theta_rad <= 2.0 * FRAC_PI_3 {
                dilation_upper_bound(aperture(gfile.theta_rad)?).ok()
            } else {
                None
            };
            write_report_json(&out, &ReportFile::new(&report, gfile.theta_rad, bound))?;
            Ok(())
        }
        Command::Verify { out, samples } => {
            let certs = run_certificate_suite(samples);
            write_certificates_jsonl(&out, &certs)?;
            let failed = certs.iter().filter(|c| !c.pass).count();
            for c in &certs {
                eprintln!(
                    "{} {:<32} computed {:+.10e}  residual {:+.3e}  tol {:.1e}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.computed,
                    c.residual,
                    c.tolerance
                );
            }
            if failed > 0 {
                Err(CmdError::CertificateFailure(failed))
            } else {
                Ok(())
            }
        }
        Command::Sweep {
            kind,
            thetas,
            params,
            seeds,
            unit,
            out,
        } => {
            let thetas = parse_list(&thetas, "theta")?;
            let params = parse_list(&params, "parameter")?;
            let seeds = parse_list(&seeds, "seed")?;
            let param_name = match kind {
                KindArg::EllipseChain => "r",
                KindArg::DoublePolygon => "epsilon",
                KindArg::TwoSegments => "m",
                KindArg::Uniform | KindArg::Perturbed => "n",
            };
            let mut csv = String::from(
                "# format: 1\nkind,param,seed,theta_rad,n_points,edge_count,connected,component_count,spanning_ratio\n",
            );
            for &param in &params {
                for &seed in &seeds {
                    let mut p = BTreeMap::new();
                    p.insert(param_name.to_string(), param);
                    if kind == KindArg::TwoSegments {
                        p.insert("alpha".to_string(), FRAC_PI_3);
                    }
                    let spec = GenSpec {
                        kind: kind.into(),
                        params: p,
                        seed: seed as u64,
                    };
                    let pts = spec.generate()?;
                    for &th in &thetas {
                        let theta_rad = unit.to_radians(th);
                        let g = build_cyao(&pts, aperture(theta_rad)?)
                            .map_err(|e| CmdError::Usage(e.to_string()))?;
                        let rep = spanning_ratio(&g, &pts)
                            .map_err(|e| CmdError::Usage(e.to_string()))?;
                        let ratio = if rep.spanning_ratio.is_finite() {
                            io::fmt_g17(rep.spanning_ratio)
                        } else {
                            "inf".to_string()
                        };
                        csv.push_str(&format!(
                            "{:?},{},{},{},{},{},{},{},{}\n",
                            kind,
                            param,
                            seed as u64,
                            io::fmt_g17(theta_rad),
                            pts.len(),
                            rep.edge_count,
                            rep.connected,
                            rep.component_count,
                            ratio
                        ));
                    }
                }
            }
            io::atomic_write(&out, csv.as_bytes())?;
            Ok(())
        }
        Command::Plot {
            points,
            graph,
            inductive_t,
            frame,
            cones,
            named_points,
            out,
        } => {
            let pts = read_points_csv(&points)?;
            let g = match graph {
                Some(path) => {
                    let gfile = read_graph_json(&path)?;
                    if gfile.n != pts.len() {
                        return Err(CmdError::from(IoError::DimensionMismatch {
                            points: pts.len(),
                            graph: gfile.n,
                        }));
                    }
                    Some(gfile.to_graph()?)
                }
                None => None,
            };
            let frame_pair = frame
                .split_once(',')
                .and_then(|(a, b)| {
                    Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?))
                })
                .ok_or_else(|| CmdError::Usage(format!("bad --frame `{frame}`")))?;
            let opts = PlotOptions {
                inductive_t,
                frame: frame_pair,
                show_cones: cones,
                show_named_points: named_points,
                ..PlotOptions::default()
            };
            let svg = render_svg(&pts, g.as_ref(), &opts);
            io::atomic_write(&out, svg.as_bytes())?;
            Ok(())
        }
    }
}

/// Parses `args` (excluding the binary name is fine for clap when using
/// `try_parse_from` with a leading program name) and runs. Returns the exit
/// code; never panics on user error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(()) => EXIT_OK,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CmdError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
        Err(CmdError::CertificateFailure(k)) => {
            eprintln!("error: {k} certificate(s) failed");
            EXIT_CERT_FAILURE
        }
    }
}
