//! Command implementations: each builds a [`Document`] and writes it in
//! the requested format.

use esl_core::builder::{build_empty_state, empty_fock_double_limit};
use esl_core::families::{
    coherent_family, ec_state, r_state_family, ECParams, RStateParams,
};
use esl_core::fock::{FockVector, Tolerances};
use esl_core::observables::{
    phase_distribution, photon_distribution_closed, photon_stats_closed,
    quadrature_variances_closed, squeezing_report,
};
use esl_core::quasiprob::{evaluate_grid, GridKind, GridSource};
use esl_core::validation;

use crate::config::{BuildArgs, Cli, Command, EcArgs, FamilyKind, GridArgs, QuadratureArgs};
use crate::error::{CliError, Result};
use crate::figures;
use crate::output::{Cell, Document};

pub fn dispatch(cli: &Cli) -> Result<i32> {
    let tol = cli.tolerances()?;
    let doc = match &cli.command {
        Command::PhotonDist(args) => photon_dist_doc(cli, args, &tol)?,
        Command::Stats(args) => stats_doc(cli, args, &tol)?,
        Command::PhaseDist { ec, resolution } => phase_dist_doc(cli, ec, *resolution, &tol)?,
        Command::Quadrature(args) => quadrature_doc(cli, args, &tol)?,
        Command::Husimi(args) => grid_doc(cli, args, GridKind::Husimi, &tol)?,
        Command::Wigner(args) => grid_doc(cli, args, GridKind::Wigner, &tol)?,
        Command::BuildEmpty(args) => build_empty_doc(cli, args, &tol)?,
        Command::EmptyFock(args) => {
            let aux = RStateParams::real(args.n, args.m, 0.0)?;
            let dim = cli.dim_or(args.n.max(args.m) + 3);
            let phase = cli.angle(args.dtheta);
            let state = empty_fock_double_limit(&aux, phase, &tol, dim)?;
            let mut doc = Document::new("empty-fock")
                .meta("quantity", "double-limit empty state of a Fock level")
                .meta("n", args.n)
                .meta("m", args.m)
                .meta("delta_theta", phase)
                .meta("trunc", dim - 1);
            doc = with_tolerances(doc, &tol).columns(&["n", "re", "im"]);
            push_state_rows(&mut doc, &state);
            doc
        }
        Command::Validate => {
            let outcomes = validation::run_all();
            let mut failed = 0;
            for o in &outcomes {
                println!("{}", o.line());
                if !o.passed {
                    failed += 1;
                }
            }
            println!(
                "{} of {} checks passed",
                outcomes.len() - failed,
                outcomes.len()
            );
            return Ok(if failed == 0 { 0 } else { 1 });
        }
        Command::Figure { id } => figures::figure_doc(cli, *id)?,
    };
    doc.write(cli.format, &cli.out)?;
    Ok(0)
}

impl Cli {
    /// Truncation dimension with an explicit fallback (flag and environment
    /// still take precedence).
    pub fn dim_or(&self, fallback: usize) -> usize {
        if let Some(n) = self.trunc {
            return n + 1;
        }
        if let Ok(value) = std::env::var(crate::config::TRUNC_ENV) {
            if let Ok(n) = value.parse::<usize>() {
                return n + 1;
            }
        }
        fallback
    }
}

fn with_tolerances(doc: Document, tol: &Tolerances) -> Document {
    doc.meta("norm_tol", format!("{:e}", tol.norm_tol))
        .meta("limit_tol", format!("{:e}", tol.limit_tol))
        .meta("grid_tol", format!("{:e}", tol.grid_tol))
        .meta("truncation_tail_tol", format!("{:e}", tol.truncation_tail_tol))
}

fn with_ec_meta(doc: Document, p: &ECParams) -> Document {
    doc.meta("mag", p.mag())
        .meta("theta", p.theta())
        .meta("delta_theta", p.delta_theta())
        .meta("delta_small_theta", p.delta_small())
        .meta("k_factor", p.k_factor())
}

fn push_state_rows(doc: &mut Document, state: &FockVector) {
    for (n, amp) in state.amps().iter().enumerate() {
        doc.push_row(vec![Cell::Int(n as i64), Cell::Num(amp.re), Cell::Num(amp.im)]);
    }
}

fn photon_dist_doc(cli: &Cli, args: &EcArgs, tol: &Tolerances) -> Result<Document> {
    let p = args.params(cli)?;
    let dim = cli.dim_for(p.mag())?;
    let dist = photon_distribution_closed(&p, dim - 1)?;
    let mut doc = Document::new("photon-dist")
        .meta("quantity", "photon-number distribution of the empty-coherent state");
    doc = with_ec_meta(doc, &p).meta("trunc", dim - 1);
    doc = with_tolerances(doc, tol).columns(&["n", "p_n"]);
    for (n, value) in dist.iter().enumerate() {
        doc.push_row(vec![Cell::Int(n as i64), Cell::Num(*value)]);
    }
    Ok(doc)
}

fn stats_doc(cli: &Cli, args: &EcArgs, tol: &Tolerances) -> Result<Document> {
    let p = args.params(cli)?;
    let stats = photon_stats_closed(&p);
    let mut doc = Document::new("stats")
        .meta("quantity", "photon statistics of the empty-coherent state");
    doc = with_ec_meta(doc, &p);
    doc = with_tolerances(doc, tol).columns(&[
        "mag",
        "theta",
        "delta_theta",
        "mean_n",
        "mean_n2",
        "delta_n",
        "mandel_q",
        "m_ratio",
        "emptiness",
    ]);
    doc.push_row(vec![
        Cell::Num(p.mag()),
        Cell::Num(p.theta()),
        Cell::Num(p.delta_theta()),
        Cell::Num(stats.mean_n),
        Cell::Num(stats.mean_n2),
        Cell::Num(stats.delta_n),
        Cell::Num(stats.mandel_q),
        Cell::Num(stats.m_ratio.expect("closed stats carry M")),
        Cell::num_or_inf(stats.emptiness.expect("closed stats carry emptiness")),
    ]);
    Ok(doc)
}

fn phase_dist_doc(cli: &Cli, args: &EcArgs, resolution: usize, tol: &Tolerances) -> Result<Document> {
    if resolution < 64 {
        return Err(CliError::Config(format!(
            "--resolution must be at least 64, got {resolution}"
        )));
    }
    let p = args.params(cli)?;
    let dim = cli.dim_for(p.mag())?;
    let state = ec_state(&p, dim)?;
    let dist = phase_distribution(&state, resolution);
    let mut doc = Document::new("phase-dist")
        .meta("quantity", "phase distribution of the empty-coherent state");
    doc = with_ec_meta(doc, &p)
        .meta("trunc", dim - 1)
        .meta("resolution", resolution)
        .meta("integral", dist.integral())
        .meta("peaks", dist.peak_count());
    doc = with_tolerances(doc, tol).columns(&["phi", "density"]);
    for (phi, density) in dist.angles.iter().zip(&dist.densities) {
        doc.push_row(vec![Cell::Num(*phi), Cell::Num(*density)]);
    }
    Ok(doc)
}

fn quadrature_doc(cli: &Cli, args: &QuadratureArgs, tol: &Tolerances) -> Result<Document> {
    let p = args.params(cli)?;
    let (var_x1, var_x2) = quadrature_variances_closed(&p);
    let report = squeezing_report(&p);
    let mut doc = Document::new("quadrature")
        .meta("quantity", "quadrature variances and squeezing verdict");
    doc = with_ec_meta(doc, &p);
    doc = with_tolerances(doc, tol).columns(&[
        "mag",
        "theta",
        "delta_theta",
        "var_x1",
        "var_x2",
        "squeezed_x1",
        "squeezed_x2",
        "margin",
    ]);
    doc.push_row(vec![
        Cell::Num(p.mag()),
        Cell::Num(p.theta()),
        Cell::Num(p.delta_theta()),
        Cell::Num(var_x1),
        Cell::Num(var_x2),
        Cell::bool(report.squeezed_x1),
        Cell::bool(report.squeezed_x2),
        Cell::Num(report.margin),
    ]);
    Ok(doc)
}

fn grid_doc(cli: &Cli, args: &GridArgs, kind: GridKind, tol: &Tolerances) -> Result<Document> {
    let p = args.params(cli)?;
    let spec = args.grid_spec()?;
    let grid = evaluate_grid(kind, &GridSource::Closed(p), &spec)?;
    let (name, quantity) = match kind {
        GridKind::Husimi => ("husimi", "Husimi distribution of the empty-coherent state"),
        GridKind::Wigner => ("wigner", "Wigner distribution of the empty-coherent state"),
    };
    let mut doc = Document::new(name).meta("quantity", quantity);
    doc = with_ec_meta(doc, &p)
        .meta("beta_re", p.alpha().re)
        .meta("beta_im", p.alpha().im)
        .meta(
            "grid",
            format!(
                "{},{},{},{},{},{}",
                spec.re_min, spec.re_max, spec.im_min, spec.im_max, spec.nx, spec.ny
            ),
        )
        .meta("min_value", grid.min_value())
        .meta("max_value", grid.max_value())
        .meta("gnuplot", "splot FILE using 1:2:3 with pm3d");
    doc = with_tolerances(doc, tol).columns(&["re", "im", "value"]);
    for iy in 0..spec.ny {
        for ix in 0..spec.nx {
            doc.push_row(vec![
                Cell::Num(spec.re_node(ix)),
                Cell::Num(spec.im_node(iy)),
                Cell::Num(grid.value(ix, iy)),
            ]);
        }
    }
    Ok(doc)
}

fn build_empty_doc(cli: &Cli, args: &BuildArgs, tol: &Tolerances) -> Result<Document> {
    let phase = cli.angle(args.dtheta);
    let (report, mut doc) = match args.family {
        FamilyKind::Coherent => {
            let mag = args.mag.ok_or_else(|| {
                CliError::Config("--mag is required for the coherent family".into())
            })?;
            let theta = cli.angle(args.theta);
            let dim = cli.dim_for(mag)?;
            let fam = coherent_family(dim);
            let report = build_empty_state(&fam, &[mag, theta], phase, tol)?;
            let doc = Document::new("build-empty")
                .meta("quantity", "numeric empty state of a coherent state")
                .meta("family", "coherent")
                .meta("mag", mag)
                .meta("theta", theta)
                .meta("trunc", dim - 1);
            (report, doc)
        }
        FamilyKind::RState => {
            let (n, m) = match (args.n, args.m) {
                (Some(n), Some(m)) => (n, m),
                _ => {
                    return Err(CliError::Config(
                        "--n and --m are required for the r-state family".into(),
                    ))
                }
            };
            let r = args.r.ok_or_else(|| {
                CliError::Config("--R is required for the r-state family".into())
            })?;
            let dim = cli.dim_or(n.max(m) + 3);
            let fam = r_state_family(n, m, dim)?;
            let report = build_empty_state(&fam, &[r], phase, tol)?;
            let doc = Document::new("build-empty")
                .meta("quantity", "numeric empty state of a two-level family")
                .meta("family", "r-state")
                .meta("n", n)
                .meta("m", m)
                .meta("R", r)
                .meta("trunc", dim - 1);
            (report, doc)
        }
    };
    if !report.condition_met {
        return Err(CliError::ConditionNotMet { g1: report.g1_real });
    }
    doc = doc
        .meta("delta_theta", phase)
        .meta("g1_real", format!("{:e}", report.g1_real))
        .meta("g2_real", report.g2_real)
        .meta("extrapolation_error", format!("{:e}", report.extrapolation_error))
        .meta("condition_met", report.condition_met)
        .meta(
            "steps",
            report
                .steps_used
                .iter()
                .map(|h| format!("{h:e}"))
                .collect::<Vec<_>>()
                .join(";"),
        );
    doc = with_tolerances(doc, tol).columns(&["n", "re", "im"]);
    push_state_rows(&mut doc, &report.state);
    Ok(doc)
}
