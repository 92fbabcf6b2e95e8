//! Command-line front end.
//!
//! Exit codes: 0 success (and verification passed), 1 verification
//! counterexample, 2 usage or I/O error.

use digitop_cli::{pts, render};

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use digitop::harness::{registry, run_suite, SuiteParams, Window};
use digitop::jordan::bracket;
use digitop::khalimsky::{KClass, KSet};
use digitop::rosenfeld::{Adjacency, GridSet, PathClass};
use digitop::slant::{expand, slant_set, unslant_set};
use digitop::{ComponentPartition, Plane, VerificationReport};

/// Digital-plane topology toolkit: grid adjacency, the Khalimsky
/// plane, slant-map transforms, and exhaustive theorem verification.
#[derive(Parser)]
#[command(name = "digitop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a point set: path/closed-curve shape on the grid,
    /// arc/Jordan-curve shape on the Khalimsky plane
    Classify { file: PathBuf },

    /// Apply a plane-to-plane transform and write the result
    Transform {
        file: PathBuf,
        /// gamma: slant map (Z2 -> K2); gamma-inv: its preimage
        /// (K2 -> Z2, mixed points dropped); gamma-star: expansion
        /// (Z2 -> K2); bracket: mixed padding of a side against a curve
        /// (Z2 + --curve K2 -> K2)
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Curve file (K2) for --op bracket
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Output file
        #[arg(short, long)]
        output: PathBuf,
    },

    /// List connected components, or complement components with --complement
    Components {
        file: PathBuf,
        /// Grid adjacency, 4 or 8 (Z2 inputs only) [default: 8]
        #[arg(long)]
        adjacency: Option<u8>,
        /// Analyze the complement inside the bounding box inflated by
        /// margin 2; the border-touching component is flagged as the
        /// window-relative unbounded one
        #[arg(long)]
        complement: bool,
    },

    /// Run a verification suite (unknown names list the registry)
    Verify {
        suite: String,
        /// Enumeration window as WxH, anchored at the origin; the
        /// registry says per suite whether it is a grid or Khalimsky
        /// box. Area is capped (default 100 cells, override with the
        /// DIGITOP_WINDOW_CAP environment variable).
        #[arg(long)]
        window: Option<String>,
        /// Largest generated set size
        #[arg(long)]
        max_size: Option<usize>,
        /// Seed for randomized portions
        #[arg(long)]
        seed: Option<u64>,
        /// Random sets per density
        #[arg(long)]
        samples: Option<u32>,
        /// Comma-separated inclusion probabilities
        #[arg(long, value_delimiter = ',')]
        densities: Option<Vec<f64>>,
        /// Admit the size-4 curves the theorems exclude, exposing the
        /// sharpness of the size hypothesis
        #[arg(long)]
        include_small: bool,
        /// Machine-readable report (schema v1)
        #[arg(long)]
        json: bool,
    },

    /// Draw a point set as ASCII art or SVG.
    ///
    /// ASCII legend: `.` empty, `#` grid point, `O` closed pure,
    /// `o` open pure, `+` mixed, `*` overlay. SVG draws pure/grid
    /// points as circles and mixed points as squares.
    Render {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        /// Additional point sets drawn on top (same plane)
        #[arg(long)]
        overlay: Vec<PathBuf>,
        /// Draw adjacency segments
        #[arg(long)]
        edges: bool,
        /// Grid adjacency for Z2 edges, 4 or 8 [default: 8]
        #[arg(long)]
        adjacency: Option<u8>,
        /// Output file (stdout when absent)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Gamma,
    GammaInv,
    GammaStar,
    Bracket,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Classify { file } => classify(&file),
        Command::Transform {
            file,
            op,
            curve,
            output,
        } => transform(&file, op, curve.as_deref(), &output),
        Command::Components {
            file,
            adjacency,
            complement,
        } => components(&file, adjacency, complement),
        Command::Verify {
            suite,
            window,
            max_size,
            seed,
            samples,
            densities,
            include_small,
            json,
        } => verify(
            &suite,
            window.as_deref(),
            max_size,
            seed,
            samples,
            densities,
            include_small,
            json,
        ),
        Command::Render {
            file,
            format,
            overlay,
            edges,
            adjacency,
            output,
        } => render_cmd(&file, format, &overlay, edges, adjacency, output.as_deref()),
    }
}

fn load(path: &Path) -> Result<pts::PointSetFile, String> {
    let file = pts::load(path).map_err(|e| e.to_string())?;
    if file.duplicates > 0 {
        eprintln!(
            "warning: {} duplicate point(s) collapsed in {}",
            file.duplicates,
            path.display()
        );
    }
    Ok(file)
}

fn grid_set(points: &[(i32, i32)]) -> GridSet {
    points.iter().copied().collect()
}

fn k_set(points: &[(i32, i32)]) -> KSet {
    points.iter().copied().collect()
}

fn parse_adjacency(value: Option<u8>) -> Result<Adjacency, String> {
    match value {
        None | Some(8) => Ok(Adjacency::Eight),
        Some(4) => Ok(Adjacency::Four),
        Some(other) => Err(format!("adjacency must be 4 or 8, got {other}")),
    }
}

fn classify(path: &Path) -> Result<ExitCode, String> {
    let file = load(path)?;
    println!("plane: {}", file.plane);
    if file.points.is_empty() {
        println!("empty set");
        return Ok(ExitCode::SUCCESS);
    }
    match file.plane {
        Plane::Z2 => {
            let set = grid_set(&file.points);
            println!("points: {}", set.len());
            for adj in [Adjacency::Four, Adjacency::Eight] {
                let line = match set.classify(adj) {
                    PathClass::Path(a, b) => format!("{adj}-path, endpoints {a} {b}"),
                    PathClass::ClosedCurve => format!("closed {adj}-curve"),
                    PathClass::Neither => "neither".to_string(),
                };
                println!("{adj}-adjacency: {line}");
            }
        }
        Plane::K2 => {
            let set = k_set(&file.points);
            let open = set.iter().filter(|p| p.is_open()).count();
            let closed = set.iter().filter(|p| p.is_closed()).count();
            println!(
                "points: {} (pure {} [open {open}, closed {closed}], mixed {})",
                set.len(),
                set.pure_points().len(),
                set.mixed_points().len()
            );
            let line = match set.classify() {
                KClass::Arc(a, b) => format!("arc, endpoints {a} {b}"),
                KClass::JordanCurve => format!("jordan-curve, {} points", set.len()),
                KClass::Neither => "neither".to_string(),
            };
            println!("classification: {line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn transform(
    path: &Path,
    op: TransformOp,
    curve: Option<&Path>,
    output: &Path,
) -> Result<ExitCode, String> {
    let file = load(path)?;
    let expect_plane = |want: Plane| -> Result<(), String> {
        if file.plane != want {
            return Err(format!(
                "plane mismatch: {} expects a {want} input, {} is {}",
                op_name(op),
                path.display(),
                file.plane
            ));
        }
        Ok(())
    };
    let (plane, points): (Plane, Vec<(i32, i32)>) = match op {
        TransformOp::Gamma => {
            expect_plane(Plane::Z2)?;
            let image = slant_set(&grid_set(&file.points));
            (Plane::K2, image.iter().map(|p| (p.x, p.y)).collect())
        }
        TransformOp::GammaInv => {
            expect_plane(Plane::K2)?;
            let back = unslant_set(&k_set(&file.points));
            (Plane::Z2, back.iter().map(|p| (p.x, p.y)).collect())
        }
        TransformOp::GammaStar => {
            expect_plane(Plane::Z2)?;
            let star = expand(&grid_set(&file.points));
            (Plane::K2, star.iter().map(|p| (p.x, p.y)).collect())
        }
        TransformOp::Bracket => {
            expect_plane(Plane::Z2)?;
            let curve_path =
                curve.ok_or_else(|| "--op bracket requires --curve <file>".to_string())?;
            let curve_file = load(curve_path)?;
            if curve_file.plane != Plane::K2 {
                return Err(format!(
                    "plane mismatch: --curve expects a K2 file, {} is {}",
                    curve_path.display(),
                    curve_file.plane
                ));
            }
            let padded = bracket(&grid_set(&file.points), &k_set(&curve_file.points));
            (Plane::K2, padded.iter().map(|p| (p.x, p.y)).collect())
        }
    };
    pts::save(output, plane, &points).map_err(|e| e.to_string())?;
    println!("{} points written to {}", points.len(), output.display());
    Ok(ExitCode::SUCCESS)
}

fn op_name(op: TransformOp) -> &'static str {
    match op {
        TransformOp::Gamma => "gamma",
        TransformOp::GammaInv => "gamma-inv",
        TransformOp::GammaStar => "gamma-star",
        TransformOp::Bracket => "bracket",
    }
}

fn print_partition<S, F>(parts: &ComponentPartition<S>, describe: F, complement: bool)
where
    F: Fn(&S) -> (usize, String),
{
    println!("{} component(s)", parts.len());
    for (i, comp) in parts.components().iter().enumerate() {
        let (len, listing) = describe(comp);
        let point_word = if len == 1 { "point" } else { "points" };
        if Some(i) == parts.outer_index() {
            println!(
                "component {} (outer, window-relative): {len} {point_word}",
                i + 1
            );
        } else {
            println!("component {}: {len} {point_word}: {listing}", i + 1);
        }
    }
    if complement {
        println!("window: bounding box inflated by margin 2");
    }
}

fn components(path: &Path, adjacency: Option<u8>, complement: bool) -> Result<ExitCode, String> {
    let file = load(path)?;
    match file.plane {
        Plane::Z2 => {
            let adj = parse_adjacency(adjacency)?;
            let set = grid_set(&file.points);
            println!("plane: Z2 ({adj}-adjacency)");
            let parts = if complement {
                set.complement_components(adj).map_err(|e| e.to_string())?
            } else {
                set.components(adj)
            };
            print_partition(
                &parts,
                |c: &GridSet| {
                    (
                        c.len(),
                        c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                    )
                },
                complement,
            );
        }
        Plane::K2 => {
            if adjacency.is_some() {
                return Err("--adjacency applies only to Z2 inputs".to_string());
            }
            let set = k_set(&file.points);
            println!("plane: K2");
            let parts = if complement {
                set.complement_components().map_err(|e| e.to_string())?
            } else {
                set.components()
            };
            print_partition(
                &parts,
                |c: &KSet| {
                    (
                        c.len(),
                        c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                    )
                },
                complement,
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_window(spec: &str) -> Result<Window, String> {
    let cap = match std::env::var("DIGITOP_WINDOW_CAP") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| format!("DIGITOP_WINDOW_CAP must be an integer, got `{v}`"))?,
        Err(_) => Window::DEFAULT_AREA_CAP,
    };
    let (w, h) = spec
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("window must look like 7x7, got `{spec}`"))?;
    let w: i32 = w
        .trim()
        .parse()
        .map_err(|_| format!("bad window width `{w}`"))?;
    let h: i32 = h
        .trim()
        .parse()
        .map_err(|_| format!("bad window height `{h}`"))?;
    if w < 1 || h < 1 {
        return Err("window dimensions must be positive".to_string());
    }
    Window::with_cap(0, w - 1, 0, h - 1, cap).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: u32,
    params: &'a SuiteParams,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    window: Option<&str>,
    max_size: Option<usize>,
    seed: Option<u64>,
    samples: Option<u32>,
    densities: Option<Vec<f64>>,
    include_small: bool,
    json: bool,
) -> Result<ExitCode, String> {
    let mut params = SuiteParams::default();
    if let Some(spec) = window {
        params.window = parse_window(spec)?;
    }
    if let Some(m) = max_size {
        params.max_size = m;
    }
    if let Some(s) = seed {
        params.seed = s;
    }
    if let Some(s) = samples {
        params.samples = s;
    }
    if let Some(d) = densities {
        if d.is_empty() {
            return Err("densities must not be empty".to_string());
        }
        if d.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
            return Err("densities must lie in [0, 1]".to_string());
        }
        params.densities = d;
    }
    params.include_small = include_small;

    let report = match run_suite(suite, &params) {
        Ok(report) => report,
        Err(e) => {
            let mut listing = String::new();
            for info in registry() {
                let _ = writeln!(
                    listing,
                    "  {:<24} [{} window] {}",
                    info.name, info.window_plane, info.summary
                );
            }
            return Err(format!("{e}\navailable suites:\n{listing}"));
        }
    };

    if json {
        let doc = JsonReport {
            schema_version: 1,
            params: &params,
            report: &report,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("report serializes")
        );
    } else {
        println!(
            "window {} | max size {} | seed {}",
            params.window, params.max_size, params.seed
        );
        print!("{report}");
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render_cmd(
    path: &Path,
    format: Format,
    overlays: &[PathBuf],
    edges: bool,
    adjacency: Option<u8>,
    output: Option<&Path>,
) -> Result<ExitCode, String> {
    let primary = load(path)?;
    let mut layers = vec![render::Layer {
        plane: primary.plane,
        points: primary.points,
    }];
    for overlay_path in overlays {
        let overlay = load(overlay_path)?;
        if overlay.plane != layers[0].plane {
            return Err(format!(
                "overlay plane mismatch: {} is {}, expected {}",
                overlay_path.display(),
                overlay.plane,
                layers[0].plane
            ));
        }
        layers.push(render::Layer {
            plane: overlay.plane,
            points: overlay.points,
        });
    }
    let adj = parse_adjacency(adjacency)?;
    let drawn = match format {
        Format::Ascii => render::ascii(&layers),
        Format::Svg => render::svg(&layers, edges, adj),
    };
    match output {
        Some(out) => {
            std::fs::write(out, drawn).map_err(|e| format!("{}: {e}", out.display()))?
        }
        None => print!("{drawn}"),
    }
    Ok(ExitCode::SUCCESS)
}
