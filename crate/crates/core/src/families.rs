//! Closed-form constructors for the concrete states of the crate: coherent
//! states, the two-level `|R⟩` example family, the radial derivative of a
//! coherent state, the empty-coherent (EC) state and its vacuum limit, plus
//! the generic [`StateFamily`] abstraction fed to the numeric empty-state
//! builder.
//!
//! An *empty state* is the nontrivial limit of the difference of two copies
//! of the same parametrized state,
//!
//! ```text
//! |E_r⟩ = lim_{|Δr|→0} C_r · ( |r + |Δr|·e^{iΔθ}⟩ − |r⟩ )
//! ```
//!
//! whose direction `Δθ` (the source phase) survives the limit. For the
//! coherent family the limit has the closed form implemented by
//! [`ec_state`]; everything here depends on the angles only through
//! `δθ = Δθ − θ`, except the quadrature means where `Δθ` itself enters.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{adequate_dim, apply_annihilation, apply_creation, FockVector, DEFAULT_TAIL_TOL};

/// Below this amplitude the EC closed form (which divides by `|α|`) is
/// routed to [`ec_vacuum_limit`].
pub const VACUUM_EPS: f64 = 1e-8;

/// Wraps an angle to `(−π, π]`.
pub fn reduce_angle(a: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut r = a.rem_euclid(two_pi);
    if r > std::f64::consts::PI {
        r -= two_pi;
    }
    r
}

/// Parameters of an empty-coherent state: amplitude `|α|`, its phase `θ`,
/// and the source phase `Δθ`. The phase difference `δθ = Δθ − θ` is always
/// derived, never set independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ECParams {
    mag: f64,
    theta: f64,
    delta_theta: f64,
}

impl ECParams {
    pub fn new(mag: f64, theta: f64, delta_theta: f64) -> Result<Self> {
        if mag < 0.0 || !mag.is_finite() || !theta.is_finite() || !delta_theta.is_finite() {
            return Err(Error::InvalidInput(format!(
                "EC parameters must be finite with mag ≥ 0, got ({mag}, {theta}, {delta_theta})"
            )));
        }
        Ok(Self {
            mag,
            theta: reduce_angle(theta),
            delta_theta: reduce_angle(delta_theta),
        })
    }

    pub fn mag(&self) -> f64 {
        self.mag
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Source phase `Δθ`.
    pub fn delta_theta(&self) -> f64 {
        self.delta_theta
    }

    /// Phase difference `δθ = Δθ − θ`, reduced to `(−π, π]`.
    pub fn delta_small(&self) -> f64 {
        reduce_angle(self.delta_theta - self.theta)
    }

    /// Complex amplitude `α = |α|·e^{iθ}`.
    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.mag, self.theta)
    }

    /// `K = 1/sqrt(1 + |α|²·sin²δθ)`, always in `(0, 1]`.
    pub fn k_factor(&self) -> f64 {
        let s = self.delta_small().sin();
        1.0 / (1.0 + self.mag * self.mag * s * s).sqrt()
    }
}

/// Parameters of the two-level example family `|R⟩ = F(|n⟩ + R|m⟩)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RStateParams {
    pub n: usize,
    pub m: usize,
    pub r: Complex64,
}

impl RStateParams {
    pub fn new(n: usize, m: usize, r: Complex64) -> Result<Self> {
        if n == m {
            return Err(Error::InvalidFamily(format!(
                "|R⟩ family needs two distinct number states, got n = m = {n}"
            )));
        }
        Ok(Self { n, m, r })
    }

    pub fn real(n: usize, m: usize, r: f64) -> Result<Self> {
        Self::new(n, m, Complex64::new(r, 0.0))
    }
}

/// Coherent state `|α⟩`, amplitudes `c_n = e^{−|α|²/2}·αⁿ/sqrt(n!)`.
///
/// Built by the stable recurrence `c_{n+1} = c_n·α/sqrt(n+1)`. Fails when
/// the truncation leaves more than [`DEFAULT_TAIL_TOL`] probability above
/// the cutoff.
pub fn coherent(alpha: Complex64, dim: usize) -> Result<FockVector> {
    if dim < 1 {
        return Err(Error::InvalidInput("dim must be at least 1".into()));
    }
    let mut amps = Vec::with_capacity(dim);
    let mut c = Complex64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
    for n in 0..dim {
        amps.push(c);
        c *= alpha / ((n + 1) as f64).sqrt();
    }
    let v = FockVector::from_amplitudes(amps)?;
    let tail_mass = v.tail_amp() * v.tail_amp();
    if tail_mass > DEFAULT_TAIL_TOL {
        return Err(Error::TruncationOverflow {
            dim,
            required: adequate_dim(alpha.norm()),
            detail: format!(
                "coherent |α| = {:.3} carries {:.3e} probability at the cutoff",
                alpha.norm(),
                tail_mass
            ),
        });
    }
    Ok(v)
}

fn two_level(n: usize, m: usize, r: Complex64, dim: usize) -> Result<FockVector> {
    if n == m {
        return Err(Error::InvalidFamily(format!(
            "two-level family needs n ≠ m, got n = m = {n}"
        )));
    }
    let top = n.max(m);
    if top >= dim {
        return Err(Error::TruncationOverflow {
            dim,
            required: top + 1,
            detail: format!("family uses |{top}⟩"),
        });
    }
    let f = 1.0 / (1.0 + r.norm_sqr()).sqrt();
    let mut amps = vec![Complex64::ZERO; dim];
    amps[n] = Complex64::new(f, 0.0);
    amps[m] = r * f;
    FockVector::from_amplitudes(amps)
}

/// `|R⟩ = (|n⟩ + R|m⟩)/sqrt(1 + |R|²)`.
///
/// Probabilities: `P_n = 1/(1+|R|²)`, `P_m = |R|²/(1+|R|²)`.
pub fn r_state(p: &RStateParams, dim: usize) -> Result<FockVector> {
    two_level(p.n, p.m, p.r, dim)
}

/// Empty state of `|R⟩` for real `R`:
/// `|E_R⟩ = (−R|n⟩ + |m⟩)/sqrt(1 + R²)`, orthogonal to `|R⟩`, with the
/// `P_n`/`P_m` probabilities swapped relative to the source state.
///
/// The closed form holds for real `R` only; complex `R` goes through the
/// numeric builder instead.
pub fn empty_r_state(p: &RStateParams, dim: usize) -> Result<FockVector> {
    if p.r.im != 0.0 {
        return Err(Error::InvalidFamily(
            "closed-form empty |R⟩ state is derived for real R; \
             use the numeric builder for complex R"
                .into(),
        ));
    }
    two_level(p.m, p.n, Complex64::new(-p.r.re, 0.0), dim)
}

/// Radial derivative `∂|α⟩/∂|α|` (unnormalized):
/// componentwise `e^{−|α|²/2}·(αⁿ/sqrt(n!))·(n/|α| − |α|)`.
///
/// Has unit norm and is orthogonal to `|α⟩`. Singular at `α = 0`; callers
/// needing the vacuum limit of the EC state use [`ec_vacuum_limit`].
pub fn coherent_radial_derivative(alpha: Complex64, dim: usize) -> Result<FockVector> {
    let mag = alpha.norm();
    if mag <= 0.0 {
        return Err(Error::SingularPoint(
            "radial derivative of |α⟩ is undefined at α = 0".into(),
        ));
    }
    let base = coherent(alpha, dim)?;
    let amps = base
        .amps()
        .iter()
        .enumerate()
        .map(|(n, c)| c * Complex64::new(n as f64 / mag - mag, 0.0))
        .collect();
    FockVector::from_amplitudes(amps)
}

/// Empty-coherent (EC) state, amplitudes
///
/// ```text
/// c_n = e^{−|α|²/2} · (αⁿ/sqrt(n!)) · [e^{iδθ}·n/|α| − |α|·cos δθ] · K
/// ```
///
/// with `K = 1/sqrt(1 + |α|²·sin²δθ)`. The equivalent superposition form
/// `K·(e^{iδθ}·∂|α⟩/∂|α| + i|α|·sin δθ·|α⟩)` is kept as a test oracle, not
/// as the production path.
pub fn ec_state(p: &ECParams, dim: usize) -> Result<FockVector> {
    if p.mag <= VACUUM_EPS {
        return Err(Error::SingularPoint(format!(
            "EC closed form divides by |α| (got {:.2e}); use ec_vacuum_limit",
            p.mag
        )));
    }
    let base = coherent(p.alpha(), dim)?;
    let ds = p.delta_small();
    let k = p.k_factor();
    let phase = Complex64::from_polar(1.0, ds);
    let amps = base
        .amps()
        .iter()
        .enumerate()
        .map(|(n, c)| c * k * (phase * (n as f64 / p.mag) - p.mag * ds.cos()))
        .collect();
    FockVector::from_amplitudes(amps)
}

/// Vacuum limit of the EC state: `e^{iΔθ}·|1⟩`.
///
/// The photon distribution is `δ_{n,1}` regardless of the source phase;
/// only the overall phase remembers the direction of approach.
pub fn ec_vacuum_limit(delta_theta: f64, dim: usize) -> Result<FockVector> {
    if dim < 2 {
        return Err(Error::InvalidInput("vacuum limit needs dim ≥ 2".into()));
    }
    Ok(FockVector::basis(dim, 1).scaled(Complex64::from_polar(1.0, delta_theta)))
}

/// Closed-form overlap of a coherent state with an EC state,
///
/// ```text
/// ⟨α|E_β⟩ = K·e^{−|α|²/2 − |β|²/2 + β·conj(α)}
///           · [ e^{iδθ}·(β·conj(α)/|β| − |β|) + i·|β|·sin δθ ]
/// ```
///
/// At `α = β` this reduces to `i·|β|·sin δθ·K`.
pub fn ec_coherent_overlap(alpha: Complex64, p: &ECParams) -> Complex64 {
    let beta = p.alpha();
    let b = p.mag;
    let ds = p.delta_small();
    let k = p.k_factor();
    let gauss =
        (-0.5 * alpha.norm_sqr() - 0.5 * beta.norm_sqr() + beta * alpha.conj()).exp();
    let bracket = Complex64::from_polar(1.0, ds) * (beta * alpha.conj() / b - b)
        + Complex64::new(0.0, b * ds.sin());
    k * gauss * bracket
}

/// Applies the EC generator
/// `Â_α = K·[ e^{iδθ}·(α/|α|)·â† − cos δθ·(|α|/α)·â ]` to `v`.
///
/// For `v = |α⟩` the result is the EC state. At `δθ = 0` the operator is
/// `e^{iθ}·â† − e^{−iθ}·â`, which is skew-hermitian.
pub fn generator_operator_apply(
    p: &ECParams,
    v: &FockVector,
    tail_tol: f64,
) -> Result<FockVector> {
    if p.mag <= VACUUM_EPS {
        return Err(Error::SingularPoint(
            "EC generator is undefined at α = 0".into(),
        ));
    }
    let ds = p.delta_small();
    let k = p.k_factor();
    let alpha = p.alpha();
    let up = apply_creation(v, tail_tol)?;
    let down = apply_annihilation(v);
    let up_coef = Complex64::from_polar(k, ds) * alpha / p.mag;
    let down_coef = Complex64::new(k * ds.cos(), 0.0) * p.mag / alpha;
    up.scaled(up_coef).sub(&down.scaled(down_coef))
}

type DisplacedEval = dyn Fn(&[f64], Complex64) -> Result<FockVector> + Send + Sync;
type ComplexEval = dyn Fn(&[Complex64]) -> Result<FockVector> + Send + Sync;

/// A parametrized family `r ↦ |r⟩` of normalized states, the input to the
/// generic empty-state builder.
///
/// Two evaluation paths exist:
///
/// * [`StateFamily::eval_displaced`] — the family's natural limit variable
///   is displaced by a complex source `δ = |Δr|·e^{iΔθ}`. For the coherent
///   family the limit variable is the complex amplitude `α` itself, so the
///   displacement is `α + δ` whatever the real parametrization says.
/// * [`StateFamily::eval_perturbed_param`] — one designated real parameter
///   is complexified and shifted, which is what the many-variable builder
///   perturbs.
pub struct StateFamily {
    name: &'static str,
    param_names: Vec<&'static str>,
    domain: Vec<(f64, f64)>,
    var_index: usize,
    dim: usize,
    eval_displaced: Box<DisplacedEval>,
    eval_complex: Box<ComplexEval>,
}

impl StateFamily {
    /// Assembles a family from user-supplied evaluation closures.
    ///
    /// `eval_displaced` receives the real parameter vector and a complex
    /// displacement of the family's limit variable; `eval_complex` receives
    /// the fully complexified parameter vector. Both must return normalized
    /// states everywhere in the declared domain.
    pub fn custom(
        name: &'static str,
        param_names: Vec<&'static str>,
        domain: Vec<(f64, f64)>,
        var_index: usize,
        dim: usize,
        eval_displaced: Box<DisplacedEval>,
        eval_complex: Box<ComplexEval>,
    ) -> Result<Self> {
        if param_names.is_empty() || param_names.len() != domain.len() {
            return Err(Error::InvalidFamily(
                "family needs at least one parameter and one domain per parameter".into(),
            ));
        }
        if var_index >= param_names.len() {
            return Err(Error::InvalidFamily(format!(
                "var_index {var_index} out of range for {} parameters",
                param_names.len()
            )));
        }
        Ok(Self { name, param_names, domain, var_index, dim, eval_displaced, eval_complex })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn param_count(&self) -> usize {
        self.param_names.len()
    }

    pub fn param_names(&self) -> &[&'static str] {
        &self.param_names
    }

    /// Declared domain of each parameter.
    pub fn domain(&self) -> &[(f64, f64)] {
        &self.domain
    }

    /// Which parameter the empty-state limit perturbs by default.
    pub fn var_index(&self) -> usize {
        self.var_index
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The nominal state `|r⟩`.
    pub fn eval(&self, params: &[f64]) -> Result<FockVector> {
        self.eval_displaced(params, Complex64::ZERO)
    }

    /// The state with the limit variable displaced by `delta`.
    pub fn eval_displaced(&self, params: &[f64], delta: Complex64) -> Result<FockVector> {
        self.check_params(params.len())?;
        (self.eval_displaced)(params, delta)
    }

    /// The state with parameter `var` complexified and shifted by `delta`.
    pub fn eval_perturbed_param(
        &self,
        params: &[f64],
        var: usize,
        delta: Complex64,
    ) -> Result<FockVector> {
        self.check_params(params.len())?;
        if var >= self.param_count() {
            return Err(Error::InvalidInput(format!(
                "parameter index {var} out of range for family `{}` with {} parameters",
                self.name,
                self.param_count()
            )));
        }
        let mut cparams: Vec<Complex64> =
            params.iter().map(|&p| Complex64::new(p, 0.0)).collect();
        cparams[var] += delta;
        (self.eval_complex)(&cparams)
    }

    fn check_params(&self, got: usize) -> Result<()> {
        if got != self.param_count() {
            return Err(Error::InvalidInput(format!(
                "family `{}` expects {} parameters, got {got}",
                self.name,
                self.param_count()
            )));
        }
        Ok(())
    }
}

/// Coherent family with parameters `(|α|, θ)`. The limit variable is the
/// complex amplitude `α`, so a source displacement enters as `α + δ`.
pub fn coherent_family(dim: usize) -> StateFamily {
    StateFamily {
        name: "coherent",
        param_names: vec!["mag", "theta"],
        domain: vec![(0.0, 8.0), (-std::f64::consts::PI, std::f64::consts::PI)],
        var_index: 0,
        dim,
        eval_displaced: Box::new(move |params: &[f64], delta| {
            let alpha = Complex64::from_polar(params[0], params[1]) + delta;
            coherent(alpha, dim)
        }),
        eval_complex: Box::new(move |cparams: &[Complex64]| {
            let alpha = cparams[0] * (Complex64::I * cparams[1]).exp();
            coherent(alpha, dim)
        }),
    }
}

/// Two-level `|R⟩` family with the single parameter `R`; `|n⟩` and `|m⟩`
/// are fixed at construction.
pub fn r_state_family(n: usize, m: usize, dim: usize) -> Result<StateFamily> {
    // Validate the (n, m) pair once up front.
    two_level(n, m, Complex64::ZERO, dim)?;
    Ok(StateFamily {
        name: "r-state",
        param_names: vec!["R"],
        domain: vec![(0.0, 10.0)],
        var_index: 0,
        dim,
        eval_displaced: Box::new(move |params: &[f64], delta| {
            two_level(n, m, Complex64::new(params[0], 0.0) + delta, dim)
        }),
        eval_complex: Box::new(move |cparams: &[Complex64]| two_level(n, m, cparams[0], dim)),
    })
}

/// The built-in family catalog consumed by the builder and the CLI.
pub fn builtin_families(dim: usize) -> Vec<StateFamily> {
    vec![
        coherent_family(dim),
        r_state_family(0, 1, dim).expect("default |R⟩ family is valid"),
    ]
}
