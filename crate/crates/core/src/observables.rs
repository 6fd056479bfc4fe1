//! Photon statistics, phase distribution, and quadrature squeezing of the
//! EC state — each quantity in two forms, a closed form in the EC
//! parameters and a generic Fock-space computation, so the two routes can
//! cross-validate each other.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::{ECParams, VACUUM_EPS};
use crate::fock::FockVector;

/// Photon-number statistics.
///
/// `m_ratio` is the excess `⟨n̂⟩ − |α|²`, bounded by `1 ≤ M ≤ 2` for EC
/// states, and `emptiness` is the derivative-state share `1/(|α|·|sin δθ|)`
/// (infinite at `δθ = 0`, where the state is purely the derivative state).
/// Both are only defined for EC-derived statistics and stay `None` on the
/// generic route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonStats {
    pub mean_n: f64,
    pub mean_n2: f64,
    pub delta_n: f64,
    pub mandel_q: f64,
    pub m_ratio: Option<f64>,
    pub emptiness: Option<f64>,
}

impl PhotonStats {
    fn checked(self) -> Self {
        let var = self.mean_n2 - self.mean_n * self.mean_n;
        assert!(
            var >= -1e-10,
            "photon-number variance {var:.3e} below zero beyond tolerance"
        );
        self
    }
}

/// Photon probability distribution of the EC state for `n = 0..=n_max`:
///
/// ```text
/// P_n = e^{−|α|²}·|α|^{2n}·[ n²/|α|² + cos²δθ·(|α|² − 2n) ]
///       / ( n!·(1 + |α|²·sin²δθ) )
/// ```
///
/// The bracket vanishes at the interference zero `n = |α|²` when `δθ = 0`.
/// Floating-point noise there may dip to `−1e-14`; such values are clamped
/// to zero.
pub fn photon_distribution_closed(p: &ECParams, n_max: usize) -> Result<Vec<f64>> {
    let b = p.mag();
    if b <= VACUUM_EPS {
        return Err(Error::SingularPoint(
            "closed-form distribution divides by |α|²; use the vacuum limit |1⟩".into(),
        ));
    }
    let b2 = b * b;
    let ds = p.delta_small();
    let c2 = ds.cos() * ds.cos();
    let denom = 1.0 + b2 * ds.sin() * ds.sin();

    let mut out = Vec::with_capacity(n_max + 1);
    // Poisson weight w_n = e^{−|α|²}·|α|^{2n}/n! by recurrence.
    let mut w = (-b2).exp();
    for n in 0..=n_max {
        let nf = n as f64;
        let bracket = nf * nf / b2 + c2 * (b2 - 2.0 * nf);
        let p_n = w * bracket / denom;
        assert!(p_n >= -1e-14, "P_{n} = {p_n:.3e} below the noise floor");
        out.push(p_n.max(0.0));
        w *= b2 / (nf + 1.0);
    }
    Ok(out)
}

/// Closed-form photon statistics of the EC state:
///
/// ```text
/// M     = (1 + 2|α|²·sin²δθ)/(1 + |α|²·sin²δθ)
/// ⟨n̂⟩   = |α|² + M
/// ⟨n̂²⟩  = |α|⁴ + 5|α|² + M
/// ⟨Δn⟩  = sqrt(|α|²·(5 − 2M) + M·(1 − M))
/// Q     = (2|α|²·(2 − M) − M²)/(|α|² + M)
/// ```
///
/// As `|α| → 0` these reproduce the one-photon limit (`⟨n̂⟩ = 1`, `Q = −1`).
pub fn photon_stats_closed(p: &ECParams) -> PhotonStats {
    let b2 = p.mag() * p.mag();
    let s = p.delta_small().sin();
    let s2 = s * s;
    let m = (1.0 + 2.0 * b2 * s2) / (1.0 + b2 * s2);
    let mean_n = b2 + m;
    let mean_n2 = b2 * b2 + 5.0 * b2 + m;
    let delta_n = (b2 * (5.0 - 2.0 * m) + m * (1.0 - m)).sqrt();
    let mandel_q = (2.0 * b2 * (2.0 - m) - m * m) / (b2 + m);
    let emptiness = if s == 0.0 {
        f64::INFINITY
    } else {
        1.0 / (p.mag() * s.abs())
    };
    PhotonStats {
        mean_n,
        mean_n2,
        delta_n,
        mandel_q,
        m_ratio: Some(m),
        emptiness: Some(emptiness),
    }
    .checked()
}

/// Photon statistics of an arbitrary normalized state from its
/// number-basis moments. `m_ratio` and `emptiness` stay unset.
pub fn photon_stats_generic(v: &FockVector) -> Result<PhotonStats> {
    let mut mean_n = 0.0;
    let mut mean_n2 = 0.0;
    for (n, c) in v.amps().iter().enumerate() {
        let p = c.norm_sqr();
        mean_n += n as f64 * p;
        mean_n2 += (n * n) as f64 * p;
    }
    if mean_n == 0.0 {
        return Err(Error::QUndefined);
    }
    let var = mean_n2 - mean_n * mean_n;
    let delta_n = var.max(0.0).sqrt();
    let mandel_q = (var - mean_n) / mean_n;
    Ok(PhotonStats {
        mean_n,
        mean_n2,
        delta_n,
        mandel_q,
        m_ratio: None,
        emptiness: None,
    }
    .checked())
}

/// Phase density sampled on a uniform angle grid over `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDistribution {
    pub angles: Vec<f64>,
    pub densities: Vec<f64>,
    pub resolution: usize,
}

impl PhaseDistribution {
    /// Trapezoidal integral over the full period (the grid is periodic, so
    /// this coincides with the rectangle rule).
    pub fn integral(&self) -> f64 {
        let step = std::f64::consts::TAU / self.resolution as f64;
        self.densities.iter().sum::<f64>() * step
    }

    /// Strict local maxima on the discrete grid, with wraparound.
    ///
    /// Side-lobe ripples show up as genuine local maxima at relative
    /// heights of 1e-9 and below; anything under `1e-6` of the global
    /// maximum is not counted as a peak.
    pub fn peak_count(&self) -> usize {
        let n = self.densities.len();
        let floor = 1e-6 * self.densities.iter().cloned().fold(0.0, f64::max);
        (0..n)
            .filter(|&k| {
                let prev = self.densities[(k + n - 1) % n];
                let next = self.densities[(k + 1) % n];
                self.densities[k] > prev && self.densities[k] > next && self.densities[k] >= floor
            })
            .count()
    }
}

/// Phase distribution over number-state phases:
/// `𝒫(φ) = |Σ_n conj(e^{inφ})·v_n|² / 2π`.
///
/// Panics if `resolution < 64`; the peak structure is not resolvable below
/// that.
pub fn phase_distribution(v: &FockVector, resolution: usize) -> PhaseDistribution {
    assert!(resolution >= 64, "phase grid needs at least 64 angles");
    let tau = std::f64::consts::TAU;
    let mut angles = Vec::with_capacity(resolution);
    let mut densities = Vec::with_capacity(resolution);
    for k in 0..resolution {
        let phi = tau * k as f64 / resolution as f64;
        // Σ_n v_n·e^{−inφ} by Horner evaluation in z = e^{−iφ}.
        let z = Complex64::from_polar(1.0, -phi);
        let mut acc = Complex64::ZERO;
        for c in v.amps().iter().rev() {
            acc = acc * z + c;
        }
        angles.push(phi);
        densities.push(acc.norm_sqr() / tau);
    }
    PhaseDistribution { angles, densities, resolution }
}

/// Closed-form quadrature variances of the EC state:
///
/// ```text
/// ⟨(ΔX₁)²⟩ = 1/4 + K²·[1/2 − |α|²·K²·sin²δθ·sin²Δθ]
/// ⟨(ΔX₂)²⟩ = 1/4 + K²·[1/2 − |α|²·K²·sin²δθ·cos²Δθ]
/// ```
///
/// Both angles matter: `δθ` through `K`, and the source phase `Δθ` picks
/// which quadrature squeezes.
pub fn quadrature_variances_closed(p: &ECParams) -> (f64, f64) {
    let b2 = p.mag() * p.mag();
    let k2 = p.k_factor() * p.k_factor();
    let s2 = {
        let s = p.delta_small().sin();
        s * s
    };
    let sin_src = p.delta_theta().sin();
    let cos_src = p.delta_theta().cos();
    let var_x1 = 0.25 + k2 * (0.5 - b2 * k2 * s2 * sin_src * sin_src);
    let var_x2 = 0.25 + k2 * (0.5 - b2 * k2 * s2 * cos_src * cos_src);
    (var_x1, var_x2)
}

/// Squeezing verdict: a quadrature is squeezed when its variance drops
/// below the 1/4 vacuum level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezingReport {
    pub squeezed_x1: bool,
    pub squeezed_x2: bool,
    /// `1/4 − min(var_x1, var_x2)`; positive means squeezing.
    pub margin: f64,
}

pub fn squeezing_report(p: &ECParams) -> SqueezingReport {
    let (v1, v2) = quadrature_variances_closed(p);
    SqueezingReport {
        squeezed_x1: v1 < 0.25,
        squeezed_x2: v2 < 0.25,
        margin: 0.25 - v1.min(v2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{coherent, ec_state, ECParams};
    use crate::fock::{adequate_dim, quadrature_moments, FockVector, DEFAULT_TAIL_TOL};

    const PI: f64 = std::f64::consts::PI;

    fn ec(mag: f64, theta: f64, dtheta: f64) -> ECParams {
        ECParams::new(mag, theta, dtheta).unwrap()
    }

    #[test]
    fn distribution_interference_zero_and_amplitude_oracle() {
        let p = ec(2.0, 0.0, 0.0);
        let dist = photon_distribution_closed(&p, 30).unwrap();
        assert_eq!(dist[4], 0.0);

        // Componentwise against |⟨n|E_α⟩|² from the amplitude construction.
        let state = ec_state(&p, 40).unwrap();
        for (n, prob) in state.probabilities().iter().take(31).enumerate() {
            assert!((dist[n] - prob).abs() < 1e-10, "P_{n}");
        }
    }

    #[test]
    fn distribution_concentrates_on_one_photon_near_vacuum() {
        let p = ec(1e-4, 0.0, 0.7);
        let dist = photon_distribution_closed(&p, 10).unwrap();
        assert!(dist[1] > 0.9999);
        assert!(dist.iter().sum::<f64>() > 0.9999);
    }

    #[test]
    fn closed_stats_endpoints() {
        // δθ = 0: ⟨n̂⟩ = |α|² + 1 and ⟨Δn⟩ = sqrt(3)·|α|.
        for mag in [1.0, 2.0, 4.0] {
            let s = photon_stats_closed(&ec(mag, 0.3, 0.3));
            assert!((s.mean_n - (mag * mag + 1.0)).abs() < 1e-12);
            assert!((s.delta_n - 3.0_f64.sqrt() * mag).abs() < 1e-12);
            assert_eq!(s.emptiness, Some(f64::INFINITY));
        }
        // δθ = π/2, |α| ≫ 1: ⟨n̂⟩ → |α|² + 2.
        let s = photon_stats_closed(&ec(10.0, 0.0, PI / 2.0));
        assert!((s.mean_n - 102.0).abs() < 0.01);

        // Substituting into the Q formula at |α| = 1, δθ = 0 gives 1/2.
        let s = photon_stats_closed(&ec(1.0, 0.0, 0.0));
        assert!((s.mandel_q - 0.5).abs() < 1e-12);
    }

    #[test]
    fn generic_stats_baselines() {
        let v = coherent(Complex64::new(1.3, 0.4), adequate_dim(1.4)).unwrap();
        let s = photon_stats_generic(&v).unwrap();
        assert!(s.mandel_q.abs() < 1e-8, "coherent states are Poissonian");

        let s = photon_stats_generic(&FockVector::basis(6, 3)).unwrap();
        assert!((s.mandel_q + 1.0).abs() < 1e-14);

        assert!(matches!(
            photon_stats_generic(&FockVector::vacuum(4)),
            Err(Error::QUndefined)
        ));
    }

    #[test]
    fn closed_and_generic_stats_agree_on_ec_states() {
        for (mag, theta, dtheta) in [(1.0, 0.0, 0.0), (2.0, 0.5, 1.3), (0.5, -0.2, 1.0)] {
            let p = ec(mag, theta, dtheta);
            let closed = photon_stats_closed(&p);
            let state = ec_state(&p, adequate_dim(mag)).unwrap();
            let generic = photon_stats_generic(&state).unwrap();
            assert!((closed.mean_n - generic.mean_n).abs() < 1e-8);
            assert!((closed.mean_n2 - generic.mean_n2).abs() < 1e-8);
            assert!((closed.delta_n - generic.delta_n).abs() < 1e-8);
            assert!((closed.mandel_q - generic.mandel_q).abs() < 1e-8);
        }
    }

    #[test]
    fn mandel_q_changes_sign_along_the_phase_difference() {
        let positive = photon_stats_closed(&ec(3.0, 0.0, 0.0)).mandel_q;
        assert!(positive > 0.0);
        let negative = (1..=8)
            .map(|k| photon_stats_closed(&ec(3.0, 0.0, k as f64 * PI / 16.0)).mandel_q)
            .fold(f64::INFINITY, f64::min);
        assert!(negative < 0.0, "no sub-Poissonian point found");
    }

    #[test]
    fn phase_distribution_of_vacuum_is_flat() {
        let d = phase_distribution(&FockVector::vacuum(5), 128);
        let flat = 1.0 / std::f64::consts::TAU;
        for v in &d.densities {
            assert!((v - flat).abs() < 1e-12);
        }
        assert!((d.integral() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn phase_distribution_peaks() {
        let dim = adequate_dim(4.0);
        let two = phase_distribution(&ec_state(&ec(4.0, 0.0, 0.0), dim).unwrap(), 1024);
        assert_eq!(two.peak_count(), 2);
        assert!((two.integral() - 1.0).abs() < 1e-6);

        let one = phase_distribution(&ec_state(&ec(4.0, 0.0, PI / 2.0), dim).unwrap(), 1024);
        assert_eq!(one.peak_count(), 1);
        // The single peak sits near the coherent phase θ = 0.
        let argmax = one
            .densities
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        let phi = one.angles[argmax];
        let dist_to_zero = phi.min(std::f64::consts::TAU - phi);
        assert!(dist_to_zero < 0.3, "peak at φ = {phi}");
    }

    #[test]
    fn quadrature_variance_endpoints() {
        let (v1, v2) = quadrature_variances_closed(&ec(1.0, 0.2, 0.2));
        assert!((v1 - 0.75).abs() < 1e-12);
        assert!((v2 - 0.75).abs() < 1e-12);

        let p = ec(3.0_f64.sqrt(), 0.0, PI / 2.0);
        let (v1, v2) = quadrature_variances_closed(&p);
        assert!((v1 - 3.0 / 16.0).abs() < 1e-12);
        assert!((v2 - 3.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn closed_variances_match_ladder_moments() {
        // The first case has δθ = 0, where both variances sit at 3/4.
        for (mag, theta, dtheta) in
            [(1.5, 0.4, 0.4), (1.0, 0.0, 0.8), (2.0, 0.6, 1.5), (0.7, -0.4, 0.3)]
        {
            let p = ec(mag, theta, dtheta);
            let state = ec_state(&p, adequate_dim(mag) + 5).unwrap();
            let m = quadrature_moments(&state, DEFAULT_TAIL_TOL).unwrap();
            let (v1, v2) = quadrature_variances_closed(&p);
            assert!((m.var_x1() - v1).abs() < 1e-8, "var X₁ at ({mag},{theta},{dtheta})");
            assert!((m.var_x2() - v2).abs() < 1e-8, "var X₂ at ({mag},{theta},{dtheta})");
        }
    }

    #[test]
    fn squeezing_verdicts() {
        let r = squeezing_report(&ec(1.0, 0.1, 0.1));
        assert!(!r.squeezed_x1 && !r.squeezed_x2);

        let r = squeezing_report(&ec(3.0_f64.sqrt(), 0.0, PI / 2.0));
        assert!(r.squeezed_x1);
        assert!((r.margin - (0.25 - 3.0 / 16.0)).abs() < 1e-12);

        // |α| = 0.1 cannot squeeze anything: |α|·K·sin δθ·sin Δθ ≤ 0.1 < 1/4.
        for i in 0..8 {
            for j in 0..8 {
                let p = ec(0.1, i as f64 * PI / 8.0, j as f64 * PI / 8.0);
                let r = squeezing_report(&p);
                assert!(!r.squeezed_x1 && !r.squeezed_x2);
            }
        }
    }

    #[test]
    fn mean_photon_number_bound_on_a_sweep() {
        for i in 1..=12 {
            for j in 0..=12 {
                let mag = 0.5 * i as f64;
                let p = ec(mag, 0.0, j as f64 * PI / 12.0);
                let s = photon_stats_closed(&p);
                let m = s.m_ratio.unwrap();
                assert!((1.0..=2.0).contains(&m), "M = {m}");
                assert!(s.mean_n >= 1.0 + mag * mag - 1e-12);
                assert!(s.mean_n <= 2.0 + mag * mag + 1e-12);
            }
        }
    }

    #[test]
    fn emptiness_maximum_aligns_with_the_interference_zero() {
        // δθ = 0 maximizes emptiness; there the distribution truly touches
        // zero at n = |α|² when |α|² is an integer.
        for mag in [1.0, 2.0_f64.sqrt(), 2.0] {
            let p = ec(mag, 0.0, 0.0);
            assert_eq!(photon_stats_closed(&p).emptiness, Some(f64::INFINITY));
            let n_zero = (mag * mag).round() as usize;
            let dist = photon_distribution_closed(&p, 2 * n_zero + 2).unwrap();
            let min = dist
                .iter()
                .take(2 * n_zero + 1)
                .cloned()
                .fold(f64::INFINITY, f64::min);
            assert!(min <= 1e-12);
            assert!((dist[n_zero] - min).abs() <= 1e-12);
        }
    }
}
