//! Standard figure presets: the parameter sets behind the library's stock
//! plots, emitted as plain data files (plotting is left to external tools;
//! each document carries a gnuplot hint in its metadata).

use esl_core::families::ECParams;
use esl_core::fock::adequate_dim;
use esl_core::observables::{
    photon_distribution_closed, photon_stats_closed, quadrature_variances_closed,
};
use esl_core::quasiprob::{husimi_closed, wigner_closed, GridSpec};
use num_complex::Complex64;

use crate::config::Cli;
use crate::error::{CliError, Result};
use crate::output::{angle_label, Cell, Document};

const PI: f64 = std::f64::consts::PI;

fn ec(mag: f64, theta: f64, dtheta: f64) -> ECParams {
    ECParams::new(mag, theta, dtheta).expect("preset parameters are valid")
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Figure presets:
///
/// 1. photon distribution at `|α| = 4` for `δθ ∈ {0, π/4, π/2}`;
/// 2. photon-number fluctuation vs `δθ` for `|α| ∈ {1, 2, 3, 4}`;
/// 3. Mandel Q vs `|α|` for `δθ ∈ {0, π/20, π/10, π/5, 3π/10, π/2}`;
/// 4. X₁ variance vs `|α|` for `Δθ, δθ ∈ {0, π/8, π/4, π/2}`;
/// 5. Husimi grids at `β = 1` for `δθ ∈ {0, π/4, π/2}`;
/// 6. Wigner grids at `β = 1` for `δθ ∈ {0, π/4, π/2}`.
pub fn figure_doc(cli: &Cli, id: usize) -> Result<Document> {
    let tol = cli.tolerances()?;
    let mut doc = match id {
        1 => {
            let mag = 4.0;
            let dthetas = [0.0, PI / 4.0, PI / 2.0];
            let n_max = 40;
            let dists: Vec<Vec<f64>> = dthetas
                .iter()
                .map(|&dt| photon_distribution_closed(&ec(mag, 0.0, dt), n_max))
                .collect::<std::result::Result<_, _>>()?;
            let mut cols = vec!["n".to_string()];
            cols.extend(dthetas.iter().map(|&dt| format!("p_n[dtheta={}]", angle_label(dt))));
            let mut doc = Document::new("figure")
                .meta("figure", 1)
                .meta("quantity", "photon distribution of the empty-coherent state")
                .meta("mag", mag)
                .meta("gnuplot", "plot FILE using 1:2 with impulses")
                .column_names(cols);
            for n in 0..=n_max {
                let mut row = vec![Cell::Int(n as i64)];
                row.extend(dists.iter().map(|d| Cell::Num(d[n])));
                doc.push_row(row);
            }
            doc
        }
        2 => {
            let mags = [1.0, 2.0, 3.0, 4.0];
            let mut cols = vec!["dtheta_over_pi".to_string()];
            cols.extend(mags.iter().map(|m| format!("delta_n[mag={m}]")));
            let mut doc = Document::new("figure")
                .meta("figure", 2)
                .meta("quantity", "photon-number fluctuation vs phase difference")
                .meta("gnuplot", "plot FILE using 1:2 with lines")
                .column_names(cols);
            for x in linspace(0.0, 1.0, 181) {
                let mut row = vec![Cell::Num(x)];
                row.extend(
                    mags.iter()
                        .map(|&m| Cell::Num(photon_stats_closed(&ec(m, 0.0, x * PI)).delta_n)),
                );
                doc.push_row(row);
            }
            doc
        }
        3 => {
            let dthetas = [0.0, PI / 20.0, PI / 10.0, PI / 5.0, 3.0 * PI / 10.0, PI / 2.0];
            let mut cols = vec!["mag".to_string()];
            cols.extend(dthetas.iter().map(|&dt| format!("mandel_q[dtheta={}]", angle_label(dt))));
            let mut doc = Document::new("figure")
                .meta("figure", 3)
                .meta("quantity", "Mandel Q vs coherent amplitude")
                .meta("gnuplot", "plot FILE using 1:2 with lines")
                .column_names(cols);
            for mag in linspace(0.025, 6.0, 240) {
                let mut row = vec![Cell::Num(mag)];
                row.extend(
                    dthetas
                        .iter()
                        .map(|&dt| Cell::Num(photon_stats_closed(&ec(mag, 0.0, dt)).mandel_q)),
                );
                doc.push_row(row);
            }
            doc
        }
        4 => {
            let angles = [0.0, PI / 8.0, PI / 4.0, PI / 2.0];
            let mut cols = vec!["mag".to_string()];
            for &src in &angles {
                for &ds in &angles {
                    cols.push(format!(
                        "var_x1[Dtheta={},dtheta={}]",
                        angle_label(src),
                        angle_label(ds)
                    ));
                }
            }
            let mut doc = Document::new("figure")
                .meta("figure", 4)
                .meta("quantity", "X1 quadrature variance vs coherent amplitude")
                .meta("gnuplot", "plot FILE using 1:2 with lines")
                .column_names(cols);
            for mag in linspace(0.0, 4.0, 161) {
                let mut row = vec![Cell::Num(mag)];
                for &src in &angles {
                    for &ds in &angles {
                        // θ = Δθ − δθ keeps the phase difference at ds.
                        let p = ec(mag, src - ds, src);
                        row.push(Cell::Num(quadrature_variances_closed(&p).0));
                    }
                }
                doc.push_row(row);
            }
            doc
        }
        5 | 6 => {
            let dthetas = [0.0, PI / 4.0, PI / 2.0];
            let spec = GridSpec::new(-2.0, 4.0, -3.0, 3.0, 201, 201)?;
            let prefix = if id == 5 { "husimi" } else { "wigner" };
            let mut cols = vec!["re".to_string(), "im".to_string()];
            cols.extend(dthetas.iter().map(|&dt| format!("{prefix}[dtheta={}]", angle_label(dt))));
            let mut doc = Document::new("figure")
                .meta("figure", id)
                .meta(
                    "quantity",
                    if id == 5 {
                        "Husimi distribution grids of the empty-coherent state"
                    } else {
                        "Wigner distribution grids of the empty-coherent state"
                    },
                )
                .meta("beta_re", 1.0)
                .meta("beta_im", 0.0)
                .meta("grid", "-2,4,-3,3,201,201")
                .meta("gnuplot", "splot FILE using 1:2:3 with pm3d")
                .column_names(cols);
            let params: Vec<ECParams> = dthetas.iter().map(|&dt| ec(1.0, 0.0, dt)).collect();
            for iy in 0..spec.ny {
                for ix in 0..spec.nx {
                    let point = Complex64::new(spec.re_node(ix), spec.im_node(iy));
                    let mut row = vec![Cell::Num(point.re), Cell::Num(point.im)];
                    row.extend(params.iter().map(|p| {
                        Cell::Num(if id == 5 {
                            husimi_closed(p, point)
                        } else {
                            wigner_closed(p, point)
                        })
                    }));
                    doc.push_row(row);
                }
            }
            doc
        }
        _ => {
            return Err(CliError::Config(format!(
                "figure id must be between 1 and 6, got {id}"
            )))
        }
    };
    doc = doc
        .meta("trunc", format!("n/a (closed forms; rule dim would be {})", adequate_dim(4.0) - 1))
        .meta("norm_tol", format!("{:e}", tol.norm_tol))
        .meta("limit_tol", format!("{:e}", tol.limit_tol))
        .meta("grid_tol", format!("{:e}", tol.grid_tol))
        .meta("truncation_tail_tol", format!("{:e}", tol.truncation_tail_tol));
    Ok(doc)
}
