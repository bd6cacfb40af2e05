//! Command-line front end for the qwalk-core recurrence toolkit.
//!
//! Subcommands emit CSV (simulation series, figure sweeps) or JSON (scalar
//! recurrence probabilities) to stdout or a file. Every command is
//! deterministic given its flags: quadrature nodes are fixed by the
//! resolution knobs and nothing draws randomness.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 I/O error.

pub mod figures;
pub mod output;
pub mod statespec;

use clap::{Parser, Subcommand, ValueEnum};
use output::{emit, fmt15, round15};
use qwalk_core::recurrence::{
    alpha1_weight, polya_number, polya_quadrature, polya_series, q_closed, state_recurrence,
};
use qwalk_core::simulate::survival_series;
use qwalk_core::CoinParameter;
use statespec::StateSpec;
use std::path::PathBuf;

pub use output::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "qwalk",
    version,
    about = "Recurrence probabilities of a monitored three-state quantum walk on the line"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simulate the monitored walk and emit the survival series as CSV
    /// (columns n, s_n, q_n, partial_sum).
    Simulate {
        /// Coin parameter in (0, 1); 0.5773502691896258 is the Grover point.
        #[arg(long)]
        rho: f64,
        /// Initial coin state: alpha1|alpha2|alpha3|spec, or
        /// std:re,im;re,im;re,im, or alpha:re,im;re,im;re,im.
        #[arg(long)]
        state: StateSpec,
        /// Number of monitored steps (at least 1).
        #[arg(long)]
        steps: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the site recurrence probability P as JSON.
    Polya {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        state: StateSpec,
        /// closed: exact formula; quadrature: boundary integral of the
        /// return operator; series: partial sum of simulated q_n.
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
        /// Quadrature nodes (method=quadrature, at least 128).
        #[arg(long, default_value_t = 16384)]
        n_points: usize,
        /// Series terms (method=series, at least 1).
        #[arg(long, default_value_t = 5000)]
        n_terms: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the state recurrence probability S as JSON, with the site
    /// recurrence P alongside.
    StateRecurrence {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        state: StateSpec,
        /// Quadrature nodes on the circle (at least 512).
        #[arg(long, default_value_t = 4096)]
        n_points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the data behind one of the survey figures as CSV.
    Figure {
        /// Which sweep to run.
        #[arg(value_enum)]
        which: FigureId,
        #[arg(long, default_value_t = 0.01)]
        rho_min: f64,
        #[arg(long, default_value_t = 0.99)]
        rho_max: f64,
        /// Grid points in rho (fig1, fig2, fig3, fig7).
        #[arg(long, default_value_t = 99)]
        rho_points: usize,
        /// Grid points in the alpha1 weight p1 (fig1).
        #[arg(long, default_value_t = 101)]
        p1_points: usize,
        /// Grid points in the relative phase phi (fig5).
        #[arg(long, default_value_t = 256)]
        phi_points: usize,
        /// Grid points in the mixing amplitude a (fig6).
        #[arg(long, default_value_t = 101)]
        a_points: usize,
        /// Quadrature nodes per state-recurrence evaluation (fig3, fig5,
        /// fig6, fig7).
        #[arg(long, default_value_t = 4096)]
        n_points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Closed,
    Quadrature,
    Series,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig5,
    Fig6,
    Fig7,
}

fn coin_parameter(rho: f64) -> Result<CoinParameter, CliError> {
    CoinParameter::new(rho).map_err(CliError::from)
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Simulate {
            rho,
            state,
            steps,
            out,
        } => {
            let rho = coin_parameter(rho)?;
            if steps < 1 {
                return Err(CliError::Usage("steps must be at least 1".into()));
            }
            let psi = state.resolve(rho)?;
            let series = survival_series(rho, &psi, steps)?;
            let mut partial = 0.0;
            let rows: Vec<String> = series
                .iter()
                .map(|pt| {
                    partial += pt.first_return;
                    format!(
                        "{},{},{},{}",
                        pt.n,
                        fmt15(pt.survival),
                        fmt15(pt.first_return),
                        fmt15(partial)
                    )
                })
                .collect();
            emit(out.as_deref(), &output::csv_document("n,s_n,q_n,partial_sum", &rows))
        }
        Command::Polya {
            rho,
            state,
            method,
            n_points,
            n_terms,
            out,
        } => {
            let rho = coin_parameter(rho)?;
            let psi = state.resolve(rho)?;
            let result = match method {
                MethodArg::Closed => polya_number(rho, &psi)?,
                MethodArg::Quadrature => polya_quadrature(rho, &psi, n_points)?,
                MethodArg::Series => polya_series(rho, &psi, n_terms)?,
            };
            let body = serde_json::json!({
                "P": round15(result.value),
                "Q": round15(q_closed(rho)),
                "p1": round15(alpha1_weight(rho, &psi)?),
                "method": result.method.to_string(),
                "n_points_or_terms": result.resolution,
                "error_estimate": round15(result.error_estimate),
            });
            emit(out.as_deref(), &format!("{body}\n"))
        }
        Command::StateRecurrence {
            rho,
            state,
            n_points,
            out,
        } => {
            let rho = coin_parameter(rho)?;
            let psi = state.resolve(rho)?;
            let s = state_recurrence(rho, &psi, n_points)?;
            let p = polya_number(rho, &psi)?;
            let body = serde_json::json!({
                "S": round15(s.result.value),
                "P": round15(p.value),
                "n_points": s.result.resolution,
                "warnings": s.warnings,
            });
            emit(out.as_deref(), &format!("{body}\n"))
        }
        Command::Figure {
            which,
            rho_min,
            rho_max,
            rho_points,
            p1_points,
            phi_points,
            a_points,
            n_points,
            out,
        } => {
            let doc = match which {
                FigureId::Fig1 => figures::fig1(p1_points, rho_min, rho_max, rho_points)?,
                FigureId::Fig2 => figures::fig2(rho_min, rho_max, rho_points)?,
                FigureId::Fig3 => figures::fig3(rho_min, rho_max, rho_points, n_points)?,
                FigureId::Fig5 => figures::fig5(phi_points, n_points)?,
                FigureId::Fig6 => figures::fig6(a_points, n_points)?,
                FigureId::Fig7 => figures::fig7(rho_min, rho_max, rho_points, n_points)?,
            };
            emit(out.as_deref(), &doc)
        }
    }
}
