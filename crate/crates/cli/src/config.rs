//! Command-line flags and the validated run configuration.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gamow_core::Complex64;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "gamow",
    version,
    about = "Resonances, S-matrix maps and complex Darboux deformations of the radial square well"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Well depth v0 (V = -v0 inside r <= a).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub v0: Option<f64>,

    /// Well radius a.
    #[arg(long, global = true)]
    pub a: Option<f64>,

    /// Angular momentum.
    #[arg(long, global = true, default_value_t = 0)]
    pub ell: u32,

    /// Largest resonance offset m listed by `resonances`.
    #[arg(long = "m-max", global = true, default_value_t = 7)]
    pub m_max: u32,

    /// Resonance offset m selecting k_alpha (default: smallest allowed).
    #[arg(long, global = true)]
    pub m: Option<u32>,

    /// Radial grid `rmin:rmax:n` (default `1e-4 a : 3a : 1201`).
    #[arg(long, global = true, value_parser = parse_grid)]
    pub grid: Option<GridArg>,

    /// Complex k window `remin:remax:immin:immax:nx:ny`.
    #[arg(long = "k-window", global = true, value_parser = parse_window, allow_hyphen_values = true)]
    pub k_window: Option<WindowArg>,

    /// Kinetic parameter `re` or `re:im` of the solution fed to `transform`.
    #[arg(long, global = true, value_parser = parse_complex, allow_hyphen_values = true)]
    pub k: Option<Complex64>,

    /// Transform the n-th bound state (1 = deepest) instead of a scattering state.
    #[arg(long, global = true)]
    pub bound: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Matched)]
    pub mode: ModeArg,

    /// Newton-refine resonance poles.
    #[arg(long, global = true)]
    pub refine: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Analytic resonance table, optionally with refined poles.
    Resonances,
    /// s-wave bound states by bisection.
    BoundStates,
    /// |S(k)| over a window of the complex k plane.
    SmatrixMap,
    /// Gamow-Siegert function on a radial grid.
    Gamow,
    /// Darboux-deformed potential on a radial grid.
    Darboux,
    /// Darboux image of a scattering or bound state.
    Transform,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Resonances => "resonances",
            Command::BoundStates => "bound-states",
            Command::SmatrixMap => "smatrix-map",
            Command::Gamow => "gamow",
            Command::Darboux => "darboux",
            Command::Transform => "transform",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Pure,
    Matched,
}

impl ModeArg {
    pub fn name(self) -> &'static str {
        match self {
            ModeArg::Pure => "pure",
            ModeArg::Matched => "matched",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridArg {
    pub r_min: f64,
    pub r_max: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowArg {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl WindowArg {
    /// Cell centres, row by row in increasing `Im k`.
    pub fn points(&self) -> Vec<Complex64> {
        let axis = |lo: f64, hi: f64, n: usize, i: usize| {
            if n == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        };
        (0..self.ny)
            .flat_map(|j| {
                (0..self.nx).map(move |i| {
                    Complex64::new(
                        axis(self.re_min, self.re_max, self.nx, i),
                        axis(self.im_min, self.im_max, self.ny, j),
                    )
                })
            })
            .collect()
    }
}

fn fields(s: &str, n: usize) -> Result<Vec<&str>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != n {
        return Err(format!(
            "expected {n} ':'-separated fields, got {}",
            parts.len()
        ));
    }
    Ok(parts)
}

fn real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {s:?}"))?;
    if !v.is_finite() {
        return Err(format!("not finite: {s:?}"));
    }
    Ok(v)
}

fn count(s: &str) -> Result<usize, String> {
    let n: usize = s
        .trim()
        .parse()
        .map_err(|_| format!("not a count: {s:?}"))?;
    if n == 0 {
        return Err("counts must be at least 1".into());
    }
    Ok(n)
}

pub fn parse_grid(s: &str) -> Result<GridArg, String> {
    let p = fields(s, 3)?;
    let g = GridArg {
        r_min: real(p[0])?,
        r_max: real(p[1])?,
        count: count(p[2])?,
    };
    if !(g.r_min > 0.0) || g.r_max < g.r_min {
        return Err("grid needs 0 < rmin <= rmax".into());
    }
    Ok(g)
}

pub fn parse_window(s: &str) -> Result<WindowArg, String> {
    let p = fields(s, 6)?;
    let w = WindowArg {
        re_min: real(p[0])?,
        re_max: real(p[1])?,
        im_min: real(p[2])?,
        im_max: real(p[3])?,
        nx: count(p[4])?,
        ny: count(p[5])?,
    };
    if w.re_max < w.re_min || w.im_max < w.im_min {
        return Err("window ranges must be non-empty".into());
    }
    Ok(w)
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    match s.split(':').collect::<Vec<_>>()[..] {
        [re] => Ok(Complex64::new(real(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(real(re)?, real(im)?)),
        _ => Err(format!("expected `re` or `re:im`, got {s:?}")),
    }
}

/// Validated parameters of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub v0: f64,
    pub a: f64,
    pub ell: u32,
    pub m_max: u32,
    pub m: Option<u32>,
    pub grid: GridArg,
    pub k_window: Option<WindowArg>,
    pub k: Complex64,
    pub bound: Option<usize>,
    pub mode: ModeArg,
    pub refine: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let v0 = cli
            .v0
            .ok_or_else(|| CliError::Usage("--v0 is required".into()))?;
        let a = cli
            .a
            .ok_or_else(|| CliError::Usage("--a is required".into()))?;
        if !(a > 0.0) || !(v0 >= 0.0) {
            return Err(CliError::Usage(format!(
                "need v0 >= 0 and a > 0, got v0 = {v0}, a = {a}"
            )));
        }
        if cli.command == Command::SmatrixMap && cli.k_window.is_none() {
            return Err(CliError::Usage("smatrix-map needs --k-window".into()));
        }
        let grid = cli.grid.unwrap_or(GridArg {
            r_min: 1e-4 * a,
            r_max: 3.0 * a,
            count: 1201,
        });
        Ok(Self {
            command: cli.command,
            v0,
            a,
            ell: cli.ell,
            m_max: cli.m_max,
            m: cli.m,
            grid,
            k_window: cli.k_window,
            k: cli.k.unwrap_or(Complex64::new(1.0, 0.0)),
            bound: cli.bound,
            mode: cli.mode,
            refine: cli.refine,
            format: cli.format,
            out: cli.out,
        })
    }
}
