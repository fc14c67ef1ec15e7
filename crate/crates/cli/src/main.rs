use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use trimax_core::calabi::{solve_calabi, sweep_isosceles, CalabiSolution};
use trimax_core::{ConstructionRegistry, Point, SideId, Triangle};
use trimax_cli::atlas::{render_atlas, sample_atlas, write_atlas_csv, MIN_GRID};
use trimax_cli::report::Report;
use trimax_cli::svg::render_figure;
use trimax_cli::sweep::write_sweep_csv;

#[derive(Parser)]
#[command(name = "trimax", version, about = "Maximal squares, rectangles and parallelograms in triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve every maximal polygon for one triangle and emit a JSON report.
    Report {
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Compare closed forms against brute-force oracles; exit 2 on mismatch.
        #[arg(long)]
        verify: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enclosed-square areas of obtuse isosceles triangles over a range of apex angles.
    Sweep {
        #[arg(long, default_value_t = 95.0)]
        min: f64,
        #[arg(long, default_value_t = 105.0)]
        max: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, default_value_t = 2.0)]
        legs: f64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Constants of the equal-squares triangle.
    Calabi {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u8).range(1..=15))]
        digits: u8,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Classify apex positions of the normalized frame by square-size ordering.
    Atlas {
        #[arg(long, default_value_t = 64)]
        nx: usize,
        #[arg(long, default_value_t = 64)]
        ny: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Draw one construction as SVG.
    Figure {
        /// parallelogram, rectangle, square, polya, wedged-square or wedged-rect.
        #[arg(long)]
        which: String,
        #[command(flatten)]
        triangle: TriangleArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Args)]
struct TriangleArgs {
    /// Vertices A B C as `x,y` pairs.
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_names = ["A", "B", "C"], conflicts_with_all = ["angles", "side"])]
    vertices: Option<Vec<String>>,
    /// Two angles in degrees at the ends of --side, in label order.
    #[arg(long, num_args = 2, allow_negative_numbers = true, requires = "side")]
    angles: Option<Vec<f64>>,
    /// The side between the two angles, e.g. `c=2`.
    #[arg(long, requires = "angles")]
    side: Option<String>,
}

enum Failure {
    Input(anyhow::Error),
    Check(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type CmdResult = Result<(), Failure>;

fn parse_point(s: &str) -> anyhow::Result<Point> {
    let (x, y) = s.split_once(',').ok_or_else(|| anyhow!("expected `x,y`, got `{s}`"))?;
    Ok(Point::new(x.trim().parse()?, y.trim().parse()?))
}

impl TriangleArgs {
    fn triangle(&self) -> anyhow::Result<Triangle> {
        if let Some(v) = &self.vertices {
            let [a, b, c] = [&v[0], &v[1], &v[2]].map(|s| parse_point(s));
            return Ok(Triangle::new(a?, b?, c?)?);
        }
        match (&self.angles, &self.side) {
            (Some(angles), Some(side)) => {
                let (name, len) = side.split_once('=').ok_or_else(|| anyhow!("expected `--side <a|b|c>=<length>`"))?;
                let id = SideId::parse(name.trim()).ok_or_else(|| anyhow!("unknown side `{name}`"))?;
                let len: f64 = len.trim().parse().context("side length")?;
                Ok(Triangle::from_angles_on_side(id, angles[0].to_radians(), angles[1].to_radians(), len)?)
            }
            _ => bail!("give either --vertices or --angles with --side"),
        }
    }
}

fn sink(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot write {}", p.display()))?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> anyhow::Result<()> {
    let mut out = sink(path)?;
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

fn report(triangle: &TriangleArgs, verify: bool, json: Option<&Path>) -> CmdResult {
    let t = triangle.triangle()?;
    let r = Report::build(&t, verify);
    write_json(&r, json)?;
    if let Some(v) = &r.verification {
        if !v.pass {
            let failed: Vec<_> = v.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            return Err(Failure::Check(anyhow!("oracle mismatch: {}", failed.join(", "))));
        }
    }
    Ok(())
}

fn sweep(min: f64, max: f64, step: f64, legs: f64, csv: Option<&Path>) -> CmdResult {
    let s = sweep_isosceles(min, max, step, legs).map_err(anyhow::Error::from)?;
    let out = sink(csv)?;
    write_sweep_csv(&s, out).map_err(anyhow::Error::from)?;
    Ok(())
}

#[derive(Serialize)]
struct CalabiOutput {
    #[serde(flatten)]
    solution: CalabiSolution,
    theta_deg: f64,
    apex_angle_deg: f64,
    cubic_residual: f64,
}

fn calabi(digits: u8, json: Option<&Path>) -> CmdResult {
    let c = solve_calabi();
    if json.is_some() {
        let out = CalabiOutput {
            solution: c,
            theta_deg: c.theta.to_degrees(),
            apex_angle_deg: c.apex_angle.to_degrees(),
            cubic_residual: c.cubic_residual(),
        };
        write_json(&out, json)?;
        return Ok(());
    }
    let d = digits as usize;
    let mut out = io::stdout().lock();
    let lines = [
        format!("ratio           {:.d$}", c.ratio),
        format!("theta_deg       {:.d$}", c.theta.to_degrees()),
        format!("apex_angle_deg  {:.d$}", c.apex_angle.to_degrees()),
        format!("square_side     {:.d$}", c.s),
        format!("cubic_residual  {:e}", c.cubic_residual()),
    ];
    for l in lines {
        writeln!(out, "{l}").map_err(anyhow::Error::from)?;
    }
    Ok(())
}

fn atlas(nx: usize, ny: usize, csv: Option<&Path>, svg: Option<&Path>) -> CmdResult {
    if nx < MIN_GRID || ny < MIN_GRID {
        return Err(Failure::Input(anyhow!("grid must be at least {MIN_GRID} × {MIN_GRID}")));
    }
    let samples = sample_atlas(nx, ny).map_err(anyhow::Error::from)?;
    if csv.is_some() || svg.is_none() {
        write_atlas_csv(&samples, sink(csv)?).map_err(anyhow::Error::from)?;
    }
    if let Some(path) = svg {
        let mut out = sink(Some(path))?;
        out.write_all(render_atlas(&samples, nx, ny).as_bytes()).map_err(anyhow::Error::from)?;
        out.flush().map_err(anyhow::Error::from)?;
    }
    Ok(())
}

fn figure(which: &str, triangle: &TriangleArgs, svg: Option<&Path>) -> CmdResult {
    let registry = ConstructionRegistry::builtin();
    let Some(construction) = registry.get(which) else {
        let names: Vec<_> = registry.names().collect();
        return Err(Failure::Input(anyhow!("unknown construction `{which}`; expected one of {}", names.join(", "))));
    };
    let t = triangle.triangle()?;
    let fig = construction
        .build(&t)
        .map_err(|e| Failure::Check(anyhow!("{which} does not apply: {e}")))?;
    let mut out = sink(svg)?;
    out.write_all(render_figure(&fig).as_bytes()).map_err(anyhow::Error::from)?;
    out.flush().map_err(anyhow::Error::from)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Report { triangle, verify, json } => report(triangle, *verify, json.as_deref()),
        Command::Sweep { min, max, step, legs, csv } => sweep(*min, *max, *step, *legs, csv.as_deref()),
        Command::Calabi { digits, json } => calabi(*digits, json.as_deref()),
        Command::Atlas { nx, ny, csv, svg } => atlas(*nx, *ny, csv.as_deref(), svg.as_deref()),
        Command::Figure { which, triangle, svg } => figure(which, triangle, svg.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Check(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
