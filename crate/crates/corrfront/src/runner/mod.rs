//! CLI front-end: reproduces the front, moment, random-matrix and
//! initial-state tables as CSV, and runs the self-verification suite.
//!
//! Grid sweeps are computed in parallel over cells but always written in
//! deterministic grid order, so output bytes do not depend on the thread
//! count. Floats are printed with 17 significant digits.

pub mod config;
pub mod verify;

pub use config::{parse_config, Command, ExperimentConfig, SGrid};

use crate::error::Result;
use crate::initcond;
use crate::lattice::{correlator_batch, PeriodicPattern};
use crate::moments::{moments_with, FrontWindow};
use crate::rmt::{g_goe_with_nodes, g_gse_with_nodes, predicted_moment, tw1_cdf_with_nodes};
use rayon::prelude::*;
use std::io::Write;

/// Largest number of samples per axis the `front` grid will emit; wider
/// ranges are strided down to keep the table plottable and the file bounded.
const FRONT_MAX_AXIS: usize = 401;

/// Execute a fully validated configuration.
pub fn run(config: &ExperimentConfig) -> Result<()> {
    match config.command {
        Command::Front => front_table(config),
        Command::Moments => moments_table(config),
        Command::Rmt => rmt_table(config),
        Command::Initstate => initstate_table(config),
        Command::Verify => verify::run_verify(config.verbose),
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn config_comment(config: &ExperimentConfig) -> String {
    let t: Vec<String> = config.t_list.iter().map(|v| v.to_string()).collect();
    let lambda: Vec<String> = config.lambda_list.iter().map(|v| v.to_string()).collect();
    format!(
        "# corrfront {} command={} t={} s={}:{}:{} lambda={} pattern={} nodes={}",
        env!("CARGO_PKG_VERSION"),
        config.command.name(),
        t.join(","),
        config.s_grid.min,
        config.s_grid.max,
        config.s_grid.step,
        lambda.join(","),
        config.pattern,
        config.nodes,
    )
}

fn emit(config: &ExperimentConfig, header: &str, rows: Vec<String>) -> Result<()> {
    let mut body = String::new();
    body.push_str(&config_comment(config));
    body.push('\n');
    body.push_str(header);
    body.push('\n');
    for row in rows {
        body.push_str(&row);
        body.push('\n');
    }
    if config.output_path.is_empty() {
        let stdout = std::io::stdout();
        stdout.lock().write_all(body.as_bytes())?;
    } else {
        std::fs::write(&config.output_path, body)?;
        if config.verbose {
            eprintln!("[run] wrote {}", config.output_path);
        }
    }
    Ok(())
}

/// |C_{m,n}(t)| grids around the light cone, one block per t.
fn front_table(config: &ExperimentConfig) -> Result<()> {
    let mut rows = Vec::new();
    for &t in &config.t_list {
        let reach = (2.0 * t + 4.0 * (2.0 * t).cbrt() + 4.0).ceil() as i64;
        let span = (2 * reach + 1) as usize;
        let stride = span.div_ceil(FRONT_MAX_AXIS).max(1) as i64;
        let axis: Vec<i64> = (-reach..=reach).step_by(stride as usize).collect();
        let cells: Vec<(i64, i64)> = axis
            .iter()
            .flat_map(|&m| axis.iter().map(move |&n| (m, n)))
            .collect();
        let values = correlator_batch(&config.pattern, t, &cells)?;
        rows.extend(
            cells
                .iter()
                .zip(&values)
                .map(|(&(m, n), c)| format!("{t},{m},{n},{}", fmt(c.norm()))),
        );
    }
    emit(config, "t,m,n,abs_c", rows)
}

/// Lattice moments against their soft-edge predictions over the (t, s) grid.
fn moments_table(config: &ExperimentConfig) -> Result<()> {
    let cells: Vec<(f64, f64)> = config
        .t_list
        .iter()
        .flat_map(|&t| config.s_grid.values().into_iter().map(move |s| (t, s)))
        .collect();
    let rows: Vec<Option<String>> = cells
        .par_iter()
        .map(|&(t, s)| {
            let window = match FrontWindow::new(t, s) {
                Ok(w) => w,
                // (t, s) pairs whose cutoff leaves the positive axis are
                // inadmissible and skipped.
                Err(_) => return Ok(None),
            };
            let table = moments_with(&config.pattern, t, window.l, 2)?;
            if config.verbose && !table.is_resolved(2) {
                eprintln!(
                    "[moments] M2 at (t = {t}, l = {}) sits below the extraction noise floor",
                    window.l
                );
            }
            let se = window.edge_s();
            let p1 = predicted_moment(1, se)?;
            let p2 = predicted_moment(2, se)?;
            Ok(Some(format!(
                "{t},{s},{},{},{},{},{},{}",
                window.l,
                fmt(se),
                fmt(table.m(1)),
                fmt(table.m(2)),
                fmt(p1),
                fmt(p2)
            )))
        })
        .collect::<Result<_>>()?;
    emit(
        config,
        "t,s,l,s_edge,m1,m2,predicted_m1,predicted_m2",
        rows.into_iter().flatten().collect(),
    )
}

/// Soft-edge functionals over the s grid: the Tracy-Widom CDF and the
/// GSE/GOE generating functions at each requested lambda.
fn rmt_table(config: &ExperimentConfig) -> Result<()> {
    let svals = config.s_grid.values();
    let mut header = String::from("s,tw1_cdf");
    for lambda in &config.lambda_list {
        header.push_str(&format!(",g_gse_{lambda},g_goe_{lambda}"));
    }
    let nodes = config.nodes;
    let rows: Vec<String> = svals
        .par_iter()
        .map(|&s| {
            let mut row = format!("{s},{}", fmt(tw1_cdf_with_nodes(s, nodes)?));
            for &lambda in &config.lambda_list {
                row.push_str(&format!(
                    ",{},{}",
                    fmt(g_gse_with_nodes(lambda, s, nodes)?),
                    fmt(g_goe_with_nodes(lambda, s, nodes)?)
                ));
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    emit(config, &header, rows)
}

/// Raw and rescaled moment curves for the configured pattern next to the
/// alternating-state reference at the same windows.
fn initstate_table(config: &ExperimentConfig) -> Result<()> {
    let report = initcond::analyze(&config.pattern);
    if config.verbose {
        eprintln!(
            "[initstate] pattern {} coefficient {} admits_rmt {} rescale {:?}",
            report.pattern, report.coefficient, report.admits_rmt, report.rescale
        );
    }
    let (a1, a2) = report.rescale.unwrap_or((f64::NAN, f64::NAN));
    let alternating = PeriodicPattern::alternating();
    let cells: Vec<(f64, f64)> = config
        .t_list
        .iter()
        .flat_map(|&t| config.s_grid.values().into_iter().map(move |s| (t, s)))
        .collect();
    let rows: Vec<Option<String>> = cells
        .par_iter()
        .map(|&(t, s)| {
            let window = match FrontWindow::new(t, s) {
                Ok(w) => w,
                Err(_) => return Ok(None),
            };
            let table = moments_with(&config.pattern, t, window.l, 2)?;
            let reference = moments_with(&alternating, t, window.l, 2)?;
            Ok(Some(format!(
                "{t},{s},{},{},{},{},{},{},{}",
                window.l,
                fmt(table.m(1)),
                fmt(table.m(2)),
                fmt(a1 * table.m(1)),
                fmt(a2 * table.m(2)),
                fmt(reference.m(1)),
                fmt(reference.m(2))
            )))
        })
        .collect::<Result<_>>()?;
    emit(
        config,
        "t,s,l,m1,m2,m1_rescaled,m2_rescaled,alt_m1,alt_m2",
        rows.into_iter().flatten().collect(),
    )
}
