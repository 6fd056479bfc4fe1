//! Cross-validation suite: every closed form checked against an
//! independent numeric route at a pinned tolerance.
//!
//! Each criterion is a standalone function returning a [`CheckOutcome`];
//! the acceptance test target asserts them one by one and the CLI
//! `validate` command prints them. Tolerances are written out literally at
//! each check site so they cannot drift.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::builder::{
    build_empty_state, difference_quotients, empty_fock_double_limit, estimate_g_coefficients,
};
use crate::families::{
    coherent, coherent_family, ec_state, ec_vacuum_limit, empty_r_state, r_state,
    r_state_family, ECParams, RStateParams, StateFamily,
};
use crate::fock::{
    adequate_dim, apply_annihilation, inner_product, FockVector, Tolerances,
};
use crate::observables::{
    phase_distribution, photon_distribution_closed, photon_stats_closed, photon_stats_generic,
    quadrature_variances_closed,
};
use crate::quasiprob::{
    evaluate_grid, husimi_closed, wigner_closed, wigner_numeric, GridKind, GridSource, GridSpec,
    WIGNER_BOUND,
};

const PI: f64 = std::f64::consts::PI;

/// Result of one validation criterion.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        Self { name, passed: true, detail }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self { name, passed: false, detail }
    }

    fn from(name: &'static str, passed: bool, detail: String) -> Self {
        if passed {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }

    /// One line suitable for terminal output.
    pub fn line(&self) -> String {
        format!(
            "{} {} — {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

fn ec(mag: f64, theta: f64, dtheta: f64) -> ECParams {
    ECParams::new(mag, theta, dtheta).expect("valid EC parameters")
}

/// Fidelity `|⟨a|b⟩|²` between normalized states.
fn fidelity(a: &FockVector, b: &FockVector) -> f64 {
    inner_product(a, b).expect("matching dims").norm_sqr()
}

/// Mean photon number bound `1 + |α|² ≤ ⟨n̂⟩ ≤ 2 + |α|²` on 50 random
/// parameter points, with closed and generic statistics agreeing to 1e-8.
pub fn criterion_mean_photon_bound() -> CheckOutcome {
    const NAME: &str = "mean-photon-bound";
    let mut rng = StdRng::seed_from_u64(0x00E5_1A7E);
    let mut worst_gap: f64 = 0.0;
    for _ in 0..50 {
        let mag: f64 = rng.random_range(1e-3..=6.0_f64);
        let dtheta: f64 = rng.random_range(0.0..=PI);
        let p = ec(mag, 0.0, dtheta);
        let closed = photon_stats_closed(&p);
        let b2 = mag * mag;
        if closed.mean_n < 1.0 + b2 - 1e-12 || closed.mean_n > 2.0 + b2 + 1e-12 {
            return CheckOutcome::fail(
                NAME,
                format!("⟨n̂⟩ = {} out of bounds at |α| = {mag}, δθ = {dtheta}", closed.mean_n),
            );
        }
        let state = match ec_state(&p, adequate_dim(mag)) {
            Ok(s) => s,
            Err(e) => return CheckOutcome::fail(NAME, format!("state build failed: {e}")),
        };
        let generic = match photon_stats_generic(&state) {
            Ok(s) => s,
            Err(e) => return CheckOutcome::fail(NAME, format!("generic stats failed: {e}")),
        };
        for (c, g) in [
            (closed.mean_n, generic.mean_n),
            (closed.mean_n2, generic.mean_n2),
            (closed.delta_n, generic.delta_n),
            (closed.mandel_q, generic.mandel_q),
        ] {
            let gap = (c - g).abs();
            worst_gap = worst_gap.max(gap);
            if gap > 1e-8 {
                return CheckOutcome::fail(
                    NAME,
                    format!("closed vs generic gap {gap:.2e} at |α| = {mag}, δθ = {dtheta}"),
                );
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("50 random points in bounds; max closed-vs-generic gap {worst_gap:.2e}"),
    )
}

/// `⟨Δn⟩ = sqrt(3)·|α|` at `δθ = 0` for `|α| ∈ {1, 2, 4}`.
pub fn criterion_fluctuation_endpoints() -> CheckOutcome {
    const NAME: &str = "fluctuation-endpoints";
    let mut worst: f64 = 0.0;
    for mag in [1.0, 2.0, 4.0] {
        let s = photon_stats_closed(&ec(mag, 0.0, 0.0));
        let gap = (s.delta_n - 3.0_f64.sqrt() * mag).abs();
        worst = worst.max(gap);
        if gap > 1e-9 {
            return CheckOutcome::fail(NAME, format!("⟨Δn⟩ off by {gap:.2e} at |α| = {mag}"));
        }
    }
    CheckOutcome::pass(NAME, format!("sqrt(3)·|α| reproduced, max gap {worst:.2e}"))
}

/// Interference zero: `P_4 = 0` at `δθ = 0`, `|α| = 2`.
pub fn criterion_interference_zero() -> CheckOutcome {
    const NAME: &str = "interference-zero";
    match photon_distribution_closed(&ec(2.0, 0.0, 0.0), 8) {
        Ok(dist) => CheckOutcome::from(
            NAME,
            dist[4].abs() <= 1e-12,
            format!("P_4 = {:.2e}", dist[4]),
        ),
        Err(e) => CheckOutcome::fail(NAME, format!("distribution failed: {e}")),
    }
}

/// `⟨R|E_R⟩ = 0` for `R ∈ {0.5, 1, 3}`.
pub fn criterion_orthogonality() -> CheckOutcome {
    const NAME: &str = "r-state-orthogonality";
    let mut worst: f64 = 0.0;
    for r in [0.5, 1.0, 3.0] {
        let p = RStateParams::real(0, 1, r).expect("valid params");
        let src = r_state(&p, 6).expect("source state");
        let empty = empty_r_state(&p, 6).expect("empty state");
        let overlap = inner_product(&src, &empty).expect("dims").norm();
        worst = worst.max(overlap);
        if overlap > 1e-12 {
            return CheckOutcome::fail(NAME, format!("⟨R|E_R⟩ = {overlap:.2e} at R = {r}"));
        }
    }
    CheckOutcome::pass(NAME, format!("orthogonal at all R, max |⟨R|E_R⟩| = {worst:.2e}"))
}

/// Both vacuum-limit routes land on `e^{iΔθ}·|1⟩`: the closed-form limit
/// exactly, the numeric double limit with fidelity ≥ 1 − 1e-6 and the
/// source phase preserved.
pub fn criterion_vacuum_limit() -> CheckOutcome {
    const NAME: &str = "vacuum-limit";
    let tol = Tolerances::default();
    let dim = 8;
    let one = FockVector::basis(dim, 1);
    let mut detail = String::new();
    for dtheta in [0.0, PI / 2.0] {
        let aux = RStateParams::real(0, 1, 0.0).expect("valid params");
        let numeric = match empty_fock_double_limit(&aux, dtheta, &tol, dim) {
            Ok(v) => v,
            Err(e) => return CheckOutcome::fail(NAME, format!("double limit failed: {e}")),
        };
        let closed = ec_vacuum_limit(dtheta, dim).expect("vacuum limit");
        let f_num = fidelity(&numeric, &one);
        let f_closed = fidelity(&closed, &one);
        if f_num < 1.0 - 1e-6 || f_closed < 1.0 - 1e-6 {
            return CheckOutcome::fail(
                NAME,
                format!("fidelity to |1⟩: numeric {f_num}, closed {f_closed} at Δθ = {dtheta}"),
            );
        }
        let phase = Complex64::from_polar(1.0, dtheta);
        let phase_gap = (numeric.amp(1) - phase).norm().max((closed.amp(1) - phase).norm());
        if phase_gap > 1e-6 {
            return CheckOutcome::fail(
                NAME,
                format!("source phase not preserved: gap {phase_gap:.2e} at Δθ = {dtheta}"),
            );
        }
        detail = format!("fidelities ≥ {:.12}, phase gap ≤ {phase_gap:.2e}", f_num.min(f_closed));
    }
    CheckOutcome::pass(NAME, detail)
}

/// Closed-form empty state of the two-level family for an arbitrary real
/// source direction, derived from the parameter derivative of
/// `(|n⟩ + R|m⟩)/sqrt(1 + |R + h·e^{iΔθ}|²)` — independent of the builder:
///
/// ```text
/// |E⟩ ∝ sqrt(1+R²)·e^{iΔθ}|m⟩ − R·cos Δθ·(|n⟩ + R|m⟩)/sqrt(1+R²)
/// ```
fn empty_r_closed_directed(n: usize, m: usize, r: f64, dtheta: f64, dim: usize) -> FockVector {
    let u = 1.0 + r * r;
    let mut v = FockVector::basis(dim, m)
        .scaled(Complex64::from_polar(u.sqrt(), dtheta))
        .sub(
            &FockVector::basis(dim, n)
                .scaled(Complex64::new(r * dtheta.cos() / u.sqrt(), 0.0)),
        )
        .expect("dims");
    v = v
        .sub(&FockVector::basis(dim, m).scaled(Complex64::new(r * r * dtheta.cos() / u.sqrt(), 0.0)))
        .expect("dims");
    v.normalized().expect("nonzero")
}

/// Numeric-vs-closed empty states on a 3×3×3 grid per family, fidelity
/// ≥ 1 − 1e-8, plus first-order convergence of the difference quotients.
pub fn criterion_numeric_vs_closed() -> CheckOutcome {
    const NAME: &str = "numeric-vs-closed-empty-state";
    let tol = Tolerances::default();
    let mut min_fidelity: f64 = 1.0;

    // Coherent family over (|α|, θ, Δθ).
    for mag in [0.5, 1.0, 2.0] {
        let dim = adequate_dim(mag);
        let fam = coherent_family(dim);
        for theta in [0.0, 2.0 * PI / 5.0, -PI / 3.0] {
            for dtheta in [0.0, PI / 4.0, PI / 2.0] {
                let report = match build_empty_state(&fam, &[mag, theta], dtheta, &tol) {
                    Ok(r) => r,
                    Err(e) => return CheckOutcome::fail(NAME, format!("build failed: {e}")),
                };
                if !report.condition_met {
                    return CheckOutcome::fail(
                        NAME,
                        format!("condition unmet at ({mag},{theta},{dtheta})"),
                    );
                }
                let closed = ec_state(&ec(mag, theta, dtheta), dim).expect("closed form");
                let f = fidelity(&report.state, &closed.normalized().expect("nonzero"));
                min_fidelity = min_fidelity.min(f);
                if f < 1.0 - 1e-8 {
                    return CheckOutcome::fail(
                        NAME,
                        format!("coherent fidelity {f} at ({mag},{theta},{dtheta})"),
                    );
                }
            }
        }
    }

    // Two-level family over (R, level pair, Δθ).
    for r in [0.5, 1.0, 2.0] {
        for (n, m) in [(0, 1), (0, 3), (2, 5)] {
            let dim = 8;
            let fam = r_state_family(n, m, dim).expect("family");
            for dtheta in [0.0, PI / 4.0, PI / 2.0] {
                let report = match build_empty_state(&fam, &[r], dtheta, &tol) {
                    Ok(rep) => rep,
                    Err(e) => return CheckOutcome::fail(NAME, format!("build failed: {e}")),
                };
                if !report.condition_met {
                    return CheckOutcome::fail(
                        NAME,
                        format!("condition unmet at R = {r}, ({n},{m}), Δθ = {dtheta}"),
                    );
                }
                let closed = empty_r_closed_directed(n, m, r, dtheta, dim);
                let f = fidelity(&report.state, &closed);
                min_fidelity = min_fidelity.min(f);
                if f < 1.0 - 1e-8 {
                    return CheckOutcome::fail(
                        NAME,
                        format!("two-level fidelity {f} at R = {r}, ({n},{m}), Δθ = {dtheta}"),
                    );
                }
            }
        }
    }

    // Convergence order: the difference quotient error against the closed
    // form scales linearly in h. The quotients are rescaled from the fitted
    // g₂ to the exact one so the h → 0 limit is the closed form itself.
    let mut slopes: Vec<f64> = Vec::new();
    {
        let (mag, theta, dtheta) = (1.0, 0.0, PI / 4.0);
        let dim = adequate_dim(mag);
        let fam = coherent_family(dim);
        let closed = ec_state(&ec(mag, theta, dtheta), dim).expect("closed form");
        let g2_true = 1.0 + mag * mag * (dtheta - theta).sin().powi(2);
        match convergence_slopes(&fam, &[mag, theta], dtheta, &closed, g2_true, &tol) {
            Ok(mut s) => slopes.append(&mut s),
            Err(e) => return CheckOutcome::fail(NAME, e),
        }
    }
    {
        let (n, m, r) = (0, 1, 1.0);
        let dim = 8;
        let fam = r_state_family(n, m, dim).expect("family");
        let closed = empty_r_closed_directed(n, m, r, 0.0, dim);
        let g2_true = 1.0 / ((1.0 + r * r) * (1.0 + r * r));
        match convergence_slopes(&fam, &[r], 0.0, &closed, g2_true, &tol) {
            Ok(mut s) => slopes.append(&mut s),
            Err(e) => return CheckOutcome::fail(NAME, e),
        }
    }
    for s in &slopes {
        if (s - 1.0).abs() > 0.2 {
            return CheckOutcome::fail(NAME, format!("convergence slope {s:.3} not linear"));
        }
    }

    CheckOutcome::pass(
        NAME,
        format!(
            "54 grid points with fidelity ≥ {min_fidelity:.12}; slopes {:?}",
            slopes.iter().map(|s| (s * 1000.0).round() / 1000.0).collect::<Vec<_>>()
        ),
    )
}

fn convergence_slopes(
    fam: &StateFamily,
    params: &[f64],
    dtheta: f64,
    closed: &FockVector,
    g2_true: f64,
    tol: &Tolerances,
) -> std::result::Result<Vec<f64>, String> {
    let (_, g2_fit) = estimate_g_coefficients(fam, params, dtheta, tol)
        .map_err(|e| format!("g fit failed: {e}"))?;
    let quotients =
        difference_quotients(fam, params, dtheta, tol).map_err(|e| format!("quotients: {e}"))?;
    let rescale = Complex64::new((g2_fit / g2_true).sqrt(), 0.0);
    let errors: Vec<f64> = quotients
        .iter()
        .map(|(_, d)| {
            d.scaled(rescale)
                .max_abs_diff(closed)
                .expect("matching dims")
        })
        .collect();
    Ok(errors
        .windows(2)
        .map(|w| (w[0] / w[1]).log2())
        .collect())
}

/// Squeezing endpoints `(3/16, 3/8)` and the variance-product bounds
/// `[1/16, 9/16]` on a 20×20×20 parameter sweep.
pub fn criterion_squeezing() -> CheckOutcome {
    const NAME: &str = "squeezing";
    let p = ec(3.0_f64.sqrt(), 0.0, PI / 2.0);
    let (v1, v2) = quadrature_variances_closed(&p);
    if (v1 - 3.0 / 16.0).abs() > 1e-10 || (v2 - 3.0 / 8.0).abs() > 1e-10 {
        return CheckOutcome::fail(NAME, format!("variances ({v1}, {v2}) off the endpoints"));
    }
    let (mut lo, mut hi): (f64, f64) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..20 {
        let mag = 0.05 + 5.95 * i as f64 / 19.0;
        for j in 0..20 {
            let ds = PI * j as f64 / 19.0;
            for k in 0..20 {
                let dtheta = PI * k as f64 / 19.0;
                // θ chosen so the phase difference is exactly ds.
                let p = ec(mag, dtheta - ds, dtheta);
                let (v1, v2) = quadrature_variances_closed(&p);
                let prod = v1 * v2;
                lo = lo.min(prod);
                hi = hi.max(prod);
                if !(1.0 / 16.0 - 1e-12..=9.0 / 16.0 + 1e-12).contains(&prod) {
                    return CheckOutcome::fail(
                        NAME,
                        format!("product {prod} out of bounds at ({mag}, {ds}, {dtheta})"),
                    );
                }
            }
        }
    }
    CheckOutcome::pass(
        NAME,
        format!("endpoints exact; product within [{lo:.6}, {hi:.6}] over 8000 points"),
    )
}

/// Closed-form Wigner function against the displaced-parity oracle on
/// 21×21 grids, the `−2/π` minimum at `δθ = 0`, and negativity everywhere
/// in the angle sample.
pub fn criterion_wigner_cross_validation() -> CheckOutcome {
    const NAME: &str = "wigner-cross-validation";
    let spec = GridSpec::new(-2.0, 4.0, -3.0, 3.0, 21, 21).expect("grid");
    let mut worst: f64 = 0.0;
    for mag in [0.5, 1.0, 2.0] {
        for dtheta in [0.0, PI / 4.0, PI / 2.0] {
            let p = ec(mag, 0.0, dtheta);
            let state = ec_state(&p, adequate_dim(mag)).expect("state");
            let mut grid_min = f64::INFINITY;
            for iy in 0..spec.ny {
                for ix in 0..spec.nx {
                    let point = spec.node(ix, iy);
                    let closed = wigner_closed(&p, point);
                    let numeric = match wigner_numeric(&state, point) {
                        Ok(w) => w,
                        Err(e) => {
                            return CheckOutcome::fail(NAME, format!("oracle failed: {e}"))
                        }
                    };
                    let gap = (closed - numeric).abs();
                    worst = worst.max(gap);
                    grid_min = grid_min.min(closed);
                    if gap > 1e-6 {
                        return CheckOutcome::fail(
                            NAME,
                            format!(
                                "closed vs parity gap {gap:.2e} at |β| = {mag}, δθ = {dtheta}, α = {point}"
                            ),
                        );
                    }
                }
            }
            if grid_min >= 0.0 {
                return CheckOutcome::fail(
                    NAME,
                    format!("no negative region at |β| = {mag}, δθ = {dtheta}"),
                );
            }
            if mag == 1.0 && dtheta == 0.0 && (grid_min + WIGNER_BOUND).abs() > 1e-8 {
                return CheckOutcome::fail(
                    NAME,
                    format!("minimum {grid_min} differs from −2/π at δθ = 0, β = 1"),
                );
            }
        }
    }
    CheckOutcome::pass(NAME, format!("9 grids agree, max closed-vs-parity gap {worst:.2e}"))
}

/// Husimi positivity on grids and the `δθ = 0` ring reduction.
pub fn criterion_husimi_ring() -> CheckOutcome {
    const NAME: &str = "husimi-ring";
    let spec = GridSpec::new(-2.0, 4.0, -3.0, 3.0, 21, 21).expect("grid");
    for mag in [0.5, 1.0, 2.0] {
        for dtheta in [0.0, PI / 4.0, PI / 2.0] {
            let p = ec(mag, 0.0, dtheta);
            let grid =
                match evaluate_grid(GridKind::Husimi, &GridSource::Closed(p), &spec) {
                    Ok(g) => g,
                    Err(e) => return CheckOutcome::fail(NAME, format!("grid failed: {e}")),
                };
            if grid.min_value() < -1e-12 {
                return CheckOutcome::fail(
                    NAME,
                    format!("negative Husimi value {:.2e}", grid.min_value()),
                );
            }
        }
        // δθ = 0: zero at the ring center, reduced form everywhere.
        let p = ec(mag, 0.0, 0.0);
        let beta = Complex64::new(mag, 0.0);
        let center = husimi_closed(&p, beta);
        if center > 1e-12 {
            return CheckOutcome::fail(NAME, format!("ring center value {center:.2e} at |β| = {mag}"));
        }
        for iy in 0..spec.ny {
            for ix in 0..spec.nx {
                let point = spec.node(ix, iy);
                let d2 = (point - beta).norm_sqr();
                let reduced = d2 * (-d2).exp() / PI;
                if (husimi_closed(&p, point) - reduced).abs() > 1e-10 {
                    return CheckOutcome::fail(
                        NAME,
                        format!("ring form mismatch at {point}, |β| = {mag}"),
                    );
                }
            }
        }
    }
    CheckOutcome::pass(NAME, "grids nonnegative; δθ = 0 reduces to the ring".into())
}

/// Phase distribution: unit integral at resolution 1024, two peaks at
/// `δθ = 0` and one at `δθ = π/2` for `|α| = 4`.
pub fn criterion_phase_distribution() -> CheckOutcome {
    const NAME: &str = "phase-distribution";
    let dim = adequate_dim(4.0);
    let two = phase_distribution(&ec_state(&ec(4.0, 0.0, 0.0), dim).expect("state"), 1024);
    let one = phase_distribution(&ec_state(&ec(4.0, 0.0, PI / 2.0), dim).expect("state"), 1024);
    let int_gap = (two.integral() - 1.0).abs().max((one.integral() - 1.0).abs());
    if int_gap > 1e-6 {
        return CheckOutcome::fail(NAME, format!("integral off by {int_gap:.2e}"));
    }
    if two.peak_count() != 2 || one.peak_count() != 1 {
        return CheckOutcome::fail(
            NAME,
            format!("peak counts ({}, {}) differ from (2, 1)", two.peak_count(), one.peak_count()),
        );
    }
    CheckOutcome::pass(NAME, format!("integral gap {int_gap:.2e}; peaks (2, 1)"))
}

/// Eigen-equation residual `‖(2â − â²/α)|E_α⟩ − α|E_α⟩‖ ≤ 1e-8`.
pub fn criterion_eigen_equation() -> CheckOutcome {
    const NAME: &str = "eigen-equation";
    let mut worst: f64 = 0.0;
    for mag in [0.5, 1.0, 2.0] {
        for theta in [0.0, 2.0 * PI / 5.0] {
            for dtheta in [0.0, PI / 4.0, PI / 2.0] {
                let p = ec(mag, theta, dtheta);
                let dim = adequate_dim(mag);
                let e = ec_state(&p, dim).expect("state");
                let alpha = p.alpha();
                let lowered = apply_annihilation(&e);
                let twice_lowered = apply_annihilation(&lowered);
                let residual = lowered
                    .scaled(Complex64::new(2.0, 0.0))
                    .sub(&twice_lowered.scaled(1.0 / alpha))
                    .and_then(|v| v.sub(&e.scaled(alpha)))
                    .expect("dims");
                let norm = residual.norm_sqr().sqrt();
                worst = worst.max(norm);
                if norm > 1e-8 {
                    return CheckOutcome::fail(
                        NAME,
                        format!("residual {norm:.2e} at ({mag}, {theta}, {dtheta})"),
                    );
                }
            }
        }
    }
    CheckOutcome::pass(NAME, format!("max residual {worst:.2e} over the parameter grid"))
}

/// Necessary-condition detector: the coherent family passes
/// (`|Re g₁| < 1e-6` everywhere sampled), and a family whose perturbed
/// states drift in norm is rejected with `condition_met = false`.
pub fn criterion_necessary_condition() -> CheckOutcome {
    const NAME: &str = "necessary-condition";
    let tol = Tolerances::default();
    let mut worst: f64 = 0.0;
    for mag in [0.5, 1.0, 2.0] {
        let fam = coherent_family(adequate_dim(mag));
        for theta in [0.0, 2.0 * PI / 5.0] {
            for dtheta in [0.0, PI / 4.0, PI / 2.0] {
                match estimate_g_coefficients(&fam, &[mag, theta], dtheta, &tol) {
                    Ok((g1, _)) => {
                        worst = worst.max(g1.abs());
                        if g1.abs() >= 1e-6 {
                            return CheckOutcome::fail(
                                NAME,
                                format!("Re g₁ = {g1:.2e} at ({mag}, {theta}, {dtheta})"),
                            );
                        }
                    }
                    Err(e) => return CheckOutcome::fail(NAME, format!("estimate failed: {e}")),
                }
            }
        }
    }

    // Magnitude-scaled amplitudes with renormalization deliberately
    // skipped: the norm drifts linearly with the source, so Re g₁ ≠ 0.
    let dim = adequate_dim(1.0);
    let violating = StateFamily::custom(
        "norm-drift",
        vec!["r"],
        vec![(0.0, 1.0)],
        0,
        dim,
        Box::new(move |_params: &[f64], delta: Complex64| {
            Ok(coherent(Complex64::ONE, dim)?.scaled(Complex64::new(1.0 + delta.norm(), 0.0)))
        }),
        Box::new(move |cparams: &[Complex64]| {
            Ok(coherent(Complex64::ONE, dim)?.scaled(Complex64::new(1.0 + cparams[0].norm(), 0.0)))
        }),
    )
    .expect("family");
    match build_empty_state(&violating, &[0.0], 0.0, &Tolerances::default()) {
        Ok(report) => {
            if report.condition_met {
                return CheckOutcome::fail(NAME, "violating family was not rejected".into());
            }
            CheckOutcome::pass(
                NAME,
                format!(
                    "coherent family max |Re g₁| = {worst:.2e}; violating family rejected \
                     with Re g₁ = {:.2e}",
                    report.g1_real
                ),
            )
        }
        Err(e) => CheckOutcome::fail(NAME, format!("violating family build errored: {e}")),
    }
}

/// Runs the full suite in criterion order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        criterion_mean_photon_bound(),
        criterion_fluctuation_endpoints(),
        criterion_interference_zero(),
        criterion_orthogonality(),
        criterion_vacuum_limit(),
        criterion_numeric_vs_closed(),
        criterion_squeezing(),
        criterion_wigner_cross_validation(),
        criterion_husimi_ring(),
        criterion_phase_distribution(),
        criterion_eigen_equation(),
        criterion_necessary_condition(),
    ]
}
