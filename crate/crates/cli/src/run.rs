//! One function per subcommand, each producing a [`Table`].

use gamow_core::{
    analytic_resonance, bound_states, darboux_potential, gamow_function, refine_pole,
    resonance_indices, s_matrix, transform_solution, AngularMomentum, Complex64, Error,
    FunctionLabel, GamowFunction, GamowMode, PotentialSpec, RadialFunction, RadialGrid,
    RadialSolution, ScatteringSolution,
};
use rayon::prelude::*;

use crate::config::{Command, ModeArg, RunConfig};
use crate::table::{Cell, Meta, Plot, Table};
use crate::CliError;

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    match cfg.command {
        Command::Resonances => run_resonances(cfg),
        Command::BoundStates => run_bound_states(cfg),
        Command::SmatrixMap => run_smatrix_map(cfg),
        Command::Gamow => run_gamow(cfg),
        Command::Darboux => run_darboux(cfg),
        Command::Transform => run_transform(cfg),
    }
}

fn spec(cfg: &RunConfig) -> Result<PotentialSpec, Error> {
    PotentialSpec::new(cfg.v0, cfg.a, AngularMomentum::new(cfg.ell)?)
}

fn meta(cfg: &RunConfig) -> Meta {
    Meta {
        command: cfg.command.name(),
        v0: cfg.v0,
        a: cfg.a,
        ell: cfg.ell,
        k_alpha: None,
        eps: None,
        mode: None,
    }
}

pub fn run_resonances(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = spec(cfg)?;
    let idx = resonance_indices(&spec)?;
    let ms: Vec<u32> = idx.allowed_m(cfg.m_max).collect();
    let records = ms
        .par_iter()
        .map(|&m| {
            let mut rec = analytic_resonance(&spec, m)?;
            if cfg.refine {
                rec.refine(&spec)?;
            }
            Ok(rec)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut columns = vec![
        "n_inf",
        "m",
        "n",
        "re_eps_analytic",
        "im_eps_analytic",
        "re_k_seed",
        "im_k_seed",
    ];
    if cfg.refine {
        columns.extend(["re_k_refined", "im_k_refined", "pole_residual"]);
    }
    let rows = records
        .iter()
        .map(|r| {
            let mut row = vec![
                Cell::Int(r.n_inf.into()),
                Cell::Int(r.m.into()),
                Cell::Int(r.n.into()),
                Cell::Real(r.eps_estimate.re),
                Cell::Real(r.eps_estimate.im),
                Cell::Real(r.k_seed.re),
                Cell::Real(r.k_seed.im),
            ];
            if let Some(k) = r.k_refined {
                row.extend([
                    Cell::Real(k.re),
                    Cell::Real(k.im),
                    Cell::Real(r.pole_residual),
                ]);
            }
            row
        })
        .collect();
    Ok(Table {
        meta: meta(cfg),
        columns,
        rows,
        plot: Plot::Argand { re: 3, im: 4 },
    })
}

pub fn run_bound_states(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = spec(cfg)?;
    let states = bound_states(&spec)?;
    let rows = states
        .iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                Cell::Int(i as i64 + 1),
                Cell::Real(s.kappa),
                Cell::Real(s.energy),
                Cell::Real(s.norm),
            ]
        })
        .collect();
    Ok(Table {
        meta: meta(cfg),
        columns: vec!["index", "kappa", "energy", "norm"],
        rows,
        plot: Plot::Columns { x: 0, ys: vec![2] },
    })
}

pub fn run_smatrix_map(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = spec(cfg)?;
    let window = cfg
        .k_window
        .ok_or_else(|| CliError::Usage("smatrix-map needs --k-window".into()))?;
    let points = window.points();
    if points.iter().any(|k| *k == Complex64::new(0.0, 0.0)) {
        return Err(Error::Domain("k window contains k = 0".into()).into());
    }
    let cells = points
        .par_iter()
        .map(|&k| match s_matrix(&spec, k) {
            Ok(sd) => Ok((k, sd.s_value.norm(), sd.s_value.re, sd.s_value.im)),
            Err(Error::AtPole { .. }) => Ok((k, f64::INFINITY, f64::NAN, f64::NAN)),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let rows = cells
        .into_iter()
        .map(|(k, abs, re, im)| {
            vec![
                Cell::Real(k.re),
                Cell::Real(k.im),
                Cell::Real(abs),
                Cell::Real(re),
                Cell::Real(im),
            ]
        })
        .collect();
    Ok(Table {
        meta: meta(cfg),
        columns: vec!["re_k", "im_k", "abs_S", "re_S", "im_S"],
        rows,
        plot: Plot::Grouped {
            group: 1,
            x: 0,
            y: 2,
        },
    })
}

/// `k_alpha` for the selected resonance: the analytic seed, or the refined
/// pole when refinement is requested or pure mode needs an exact pole.
fn transformation_function(cfg: &RunConfig, spec: &PotentialSpec) -> Result<GamowFunction, Error> {
    let idx = resonance_indices(spec)?;
    let m = cfg.m.unwrap_or_else(|| idx.first_m());
    let rec = analytic_resonance(spec, m)?;
    let k_alpha = if cfg.refine || cfg.mode == ModeArg::Pure {
        if !cfg.refine {
            log::info!("pure mode needs an exact pole; refining the seed");
        }
        refine_pole(spec, rec.k_seed)?.k
    } else {
        rec.k_seed
    };
    let mode = match cfg.mode {
        ModeArg::Pure => GamowMode::PureOutgoing,
        ModeArg::Matched => GamowMode::FullMatched,
    };
    gamow_function(spec, k_alpha, mode)
}

fn radial_grid(cfg: &RunConfig) -> Result<RadialGrid, Error> {
    RadialGrid::linear(cfg.grid.r_min, cfg.grid.r_max, cfg.grid.count)
}

fn sampled_table(cfg: &RunConfig, g: &GamowFunction, f: &RadialFunction, plot: Plot) -> Table {
    let rows = f
        .iter()
        .map(|(r, v)| vec![Cell::Real(r), Cell::Real(v.re), Cell::Real(v.im)])
        .collect();
    Table {
        meta: Meta {
            k_alpha: Some(g.k_alpha),
            eps: Some(g.point.eps),
            mode: Some(cfg.mode.name()),
            ..meta(cfg)
        },
        columns: vec!["r", "re_value", "im_value"],
        rows,
        plot,
    }
}

fn re_im() -> Plot {
    Plot::Columns {
        x: 0,
        ys: vec![1, 2],
    }
}

pub fn run_gamow(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = spec(cfg)?;
    let g = transformation_function(cfg, &spec)?;
    let f = g.sample(&radial_grid(cfg)?, FunctionLabel::Wavefunction)?;
    Ok(sampled_table(cfg, &g, &f, re_im()))
}

pub fn run_darboux(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = spec(cfg)?;
    let g = transformation_function(cfg, &spec)?;
    let dp = darboux_potential(&spec, &g, &radial_grid(cfg)?)?;
    Ok(sampled_table(
        cfg,
        &g,
        &dp.values,
        Plot::Argand { re: 1, im: 2 },
    ))
}

pub fn run_transform(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = spec(cfg)?;
    let g = transformation_function(cfg, &spec)?;
    let grid = radial_grid(cfg)?;
    let y = match cfg.bound {
        Some(n) => {
            let states = bound_states(&spec)?;
            let state = n
                .checked_sub(1)
                .and_then(|i| states.get(i))
                .ok_or_else(|| {
                    Error::Input(format!("bound state {n} out of range 1..={}", states.len()))
                })?;
            let u = state.solution(&spec);
            transform_solution(&g, &u, &grid)?
        }
        None => {
            let u = ScatteringSolution::new(&spec, cfg.k)?;
            transform_solution(&g, &u, &grid)?
        }
    };
    Ok(sampled_table(cfg, &g, &y, re_im()))
}
