//! Truncated Fock-space state vectors and the ladder/number/quadrature
//! operator actions used by every other module.
//!
//! A state is a dense vector of complex amplitudes `c_0 .. c_N` over the
//! photon-number basis. Operators are applied matrix-free (shift and scale),
//! never materialized as matrices; the only dense matrix in the crate is the
//! displacement matrix in [`crate::quasiprob`].

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `|Σ|c_n|² − 1|` for a vector to count as normalized.
pub const DEFAULT_NORM_TOL: f64 = 1e-10;
/// Tolerance for limit extrapolations (necessary-condition threshold).
pub const DEFAULT_LIMIT_TOL: f64 = 1e-6;
/// Tolerance for grid cross-validations.
pub const DEFAULT_GRID_TOL: f64 = 1e-8;
/// Bound on neglected truncation tail.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Imaginary residue allowed on observables that are real by hermiticity.
/// Anything larger is a phase bug, and the accessors panic loudly.
pub const IM_RESIDUE_TOL: f64 = 1e-10;

/// Numerical tolerances threaded through the limit and grid machinery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub norm_tol: f64,
    pub limit_tol: f64,
    pub grid_tol: f64,
    pub truncation_tail_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            norm_tol: DEFAULT_NORM_TOL,
            limit_tol: DEFAULT_LIMIT_TOL,
            grid_tol: DEFAULT_GRID_TOL,
            truncation_tail_tol: DEFAULT_TAIL_TOL,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let all = [
            ("norm_tol", self.norm_tol),
            ("limit_tol", self.limit_tol),
            ("grid_tol", self.grid_tol),
            ("truncation_tail_tol", self.truncation_tail_tol),
        ];
        for (name, t) in all {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "tolerance {name} must be strictly positive, got {t}"
                )));
            }
        }
        Ok(())
    }
}

/// Truncation level adequate for amplitudes up to `mag`, returned as a
/// vector dimension (level N plus one).
///
/// ```text
/// N = ceil(mag² + 10·sqrt(mag² + 1) + 20)
/// ```
///
/// The Poisson tail bound keeps the neglected probability mass below 1e-12
/// for `mag ≤ 6`. The underlying states are defined by infinite sums; this
/// cutoff rule is purely an artifact of finite-dimensional evaluation.
pub fn adequate_dim(mag: f64) -> usize {
    let m2 = mag * mag;
    let n = (m2 + 10.0 * (m2 + 1.0).sqrt() + 20.0).ceil() as usize;
    n + 1
}

/// State vector in a Fock space truncated at level `N = dim − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amps: Vec<Complex64>,
}

impl FockVector {
    /// Wraps raw amplitudes. Fails on an empty vector or non-finite entries.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::InvalidInput("state vector must have dim ≥ 1".into()));
        }
        if amps.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidInput(
                "state vector contains non-finite amplitudes".into(),
            ));
        }
        Ok(Self { amps })
    }

    /// All-zero vector (not a physical state until amplitudes are filled).
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "dim must be at least 1");
        Self { amps: vec![Complex64::ZERO; dim] }
    }

    /// Basis state `|n⟩` in a `dim`-dimensional truncation.
    pub fn basis(dim: usize, n: usize) -> Self {
        assert!(n < dim, "basis index {n} out of range for dim {dim}");
        let mut v = Self::zeros(dim);
        v.amps[n] = Complex64::ONE;
        v
    }

    /// Vacuum `|0⟩`.
    pub fn vacuum(dim: usize) -> Self {
        Self::basis(dim, 0)
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    /// Truncation level `N`.
    pub fn level(&self) -> usize {
        self.amps.len() - 1
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, n: usize) -> Complex64 {
        self.amps.get(n).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    /// Magnitude of the topmost amplitude `|c_N|`.
    pub fn tail_amp(&self) -> f64 {
        self.amps[self.amps.len() - 1].norm()
    }

    /// Photon-number probabilities `|c_n|²`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Returns the unit-norm rescaling of `self`.
    pub fn normalized(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 <= 0.0 || !n2.is_finite() {
            return Err(Error::InvalidInput(
                "cannot normalize a zero or non-finite vector".into(),
            ));
        }
        Ok(self.scaled(Complex64::new(1.0 / n2.sqrt(), 0.0)))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self { amps: self.amps.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            amps: self.amps.iter().zip(&other.amps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Max-norm distance, used by extrapolation diagnostics.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Zero-pads (or rejects shrinking) to `dim`.
    pub fn padded(&self, dim: usize) -> Result<Self> {
        if dim < self.dim() {
            return Err(Error::InvalidInput(format!(
                "cannot shrink a state from dim {} to dim {}",
                self.dim(),
                dim
            )));
        }
        let mut amps = self.amps.clone();
        amps.resize(dim, Complex64::ZERO);
        Ok(Self { amps })
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }
}

/// `⟨a|b⟩ = Σ_n conj(a_n)·b_n`.
///
/// Conjugate-symmetric: `inner_product(a, b) = conj(inner_product(b, a))`.
pub fn inner_product(a: &FockVector, b: &FockVector) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Annihilation `(âv)_n = sqrt(n+1)·v_{n+1}`; the topmost component is zero.
///
/// Panics if `dim < 2`.
pub fn apply_annihilation(v: &FockVector) -> FockVector {
    assert!(v.dim() >= 2, "annihilation needs dim ≥ 2, got {}", v.dim());
    let dim = v.dim();
    let mut amps = Vec::with_capacity(dim);
    for n in 0..dim - 1 {
        amps.push(((n + 1) as f64).sqrt() * v.amps[n + 1]);
    }
    amps.push(Complex64::ZERO);
    FockVector { amps }
}

/// Creation `(â†v)_n = sqrt(n)·v_{n−1}`; component 0 is zero.
///
/// The amplitude that would land above the truncation is dropped, so the
/// caller must bring a state whose tail amplitude is below `tail_tol`;
/// otherwise the spill-off is not negligible and the call fails.
pub fn apply_creation(v: &FockVector, tail_tol: f64) -> Result<FockVector> {
    let tail = v.tail_amp();
    if tail > tail_tol {
        return Err(Error::TruncationOverflow {
            dim: v.dim(),
            required: v.dim() + 1,
            detail: format!(
                "creation would spill |c_N| = {tail:.3e} (> {tail_tol:.1e}) past level N = {}; \
                 rebuild the state with a larger truncation",
                v.level()
            ),
        });
    }
    let dim = v.dim();
    let mut amps = Vec::with_capacity(dim);
    amps.push(Complex64::ZERO);
    for n in 1..dim {
        amps.push((n as f64).sqrt() * v.amps[n - 1]);
    }
    Ok(FockVector { amps })
}

/// `⟨n̂⟩ = Σ_n n·|v_n|²` for a normalized `v`. Real by construction.
pub fn expectation_number(v: &FockVector) -> f64 {
    v.amps
        .iter()
        .enumerate()
        .map(|(n, c)| n as f64 * c.norm_sqr())
        .sum()
}

/// First and second moments of the dimensionless quadratures
/// `X₁ = (â + â†)/2` and `X₂ = (â − â†)/(2i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureMoments {
    pub x1: f64,
    pub x2: f64,
    pub x1_sq: f64,
    pub x2_sq: f64,
}

impl QuadratureMoments {
    pub fn var_x1(&self) -> f64 {
        self.x1_sq - self.x1 * self.x1
    }

    pub fn var_x2(&self) -> f64 {
        self.x2_sq - self.x2 * self.x2
    }
}

/// Quadrature moments of a normalized state via ladder applications.
///
/// `⟨X_i⟩` is computed as `⟨v, X_i v⟩`; hermiticity makes it real, and the
/// imaginary residue is asserted below [`IM_RESIDUE_TOL`] before being
/// discarded. `⟨X_i²⟩ = ‖X_i v‖²` is real by construction.
pub fn quadrature_moments(v: &FockVector, tail_tol: f64) -> Result<QuadratureMoments> {
    let down = apply_annihilation(v);
    let up = apply_creation(v, tail_tol)?;

    let half = Complex64::new(0.5, 0.0);
    let half_over_i = Complex64::new(0.0, -0.5); // 1/(2i)
    let x1v = down.add(&up)?.scaled(half);
    let x2v = down.sub(&up)?.scaled(half_over_i);

    let m1 = inner_product(v, &x1v)?;
    let m2 = inner_product(v, &x2v)?;
    assert!(
        m1.im.abs() < IM_RESIDUE_TOL && m2.im.abs() < IM_RESIDUE_TOL,
        "quadrature mean has imaginary residue beyond {IM_RESIDUE_TOL:e}: \
         ⟨X₁⟩ = {m1}, ⟨X₂⟩ = {m2}"
    );

    Ok(QuadratureMoments {
        x1: m1.re,
        x2: m2.re,
        x1_sq: x1v.norm_sqr(),
        x2_sq: x2v.norm_sqr(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::coherent;

    const C_ONE: Complex64 = Complex64::ONE;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn inner_product_of_normalized_vector_is_one() {
        let v = FockVector::from_amplitudes(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let ip = inner_product(&v, &v).unwrap();
        assert!((ip.re - 1.0).abs() < 1e-15);
        assert!(ip.im.abs() < 1e-15);
    }

    #[test]
    fn inner_product_identical_coherent_states() {
        let v = coherent(C_ONE, 40).unwrap();
        let ip = inner_product(&v, &v).unwrap();
        assert!((ip.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inner_product_distinct_coherent_states() {
        // ⟨1|2⟩ = exp(−1/2 − 2 + 2) = exp(−1/2), checked against a brute
        // force sum of the amplitude products at N = 60.
        let dim = 61;
        let a = coherent(C_ONE, dim).unwrap();
        let b = coherent(c(2.0, 0.0), dim).unwrap();
        let ip = inner_product(&a, &b).unwrap();

        let brute: Complex64 = (0..dim)
            .map(|n| a.amp(n).conj() * b.amp(n))
            .sum();
        assert!((ip - brute).norm() < 1e-15);
        assert!((ip.re - (-0.5_f64).exp()).abs() < 1e-9, "got {}", ip.re);
        assert!(ip.im.abs() < 1e-12);
    }

    #[test]
    fn inner_product_rejects_dimension_mismatch() {
        let a = FockVector::vacuum(4);
        let b = FockVector::vacuum(5);
        assert!(matches!(
            inner_product(&a, &b),
            Err(Error::DimensionMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn annihilation_of_vacuum_is_zero() {
        let out = apply_annihilation(&FockVector::vacuum(5));
        assert!(out.norm_sqr() < 1e-30);
    }

    #[test]
    fn annihilation_lowers_one_photon() {
        let out = apply_annihilation(&FockVector::basis(5, 1));
        assert!((out.amp(0) - C_ONE).norm() < 1e-15);
        assert!(out.norm_sqr() - 1.0 < 1e-15);
    }

    #[test]
    fn coherent_state_is_annihilation_eigenvector() {
        // â|α⟩ = α|α⟩ componentwise away from the truncation edge.
        let alpha = c(1.3, -0.4);
        let dim = adequate_dim(alpha.norm());
        let v = coherent(alpha, dim).unwrap();
        let lowered = apply_annihilation(&v);
        let scaled = v.scaled(alpha);
        let upto = dim - (dim as f64).sqrt() as usize;
        for n in 0..upto {
            assert!(
                (lowered.amp(n) - scaled.amp(n)).norm() < DEFAULT_TAIL_TOL,
                "component {n} deviates"
            );
        }
    }

    #[test]
    fn creation_raises_vacuum_and_number_states() {
        let up = apply_creation(&FockVector::vacuum(5), DEFAULT_TAIL_TOL).unwrap();
        assert!((up.amp(1) - C_ONE).norm() < 1e-15);

        let up3 = apply_creation(&FockVector::basis(6, 3), DEFAULT_TAIL_TOL).unwrap();
        assert!((up3.amp(4) - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn creation_rejects_heavy_tail() {
        let v = FockVector::basis(4, 3);
        let err = apply_creation(&v, DEFAULT_TAIL_TOL).unwrap_err();
        match err {
            Error::TruncationOverflow { dim, required, .. } => {
                assert_eq!(dim, 4);
                assert_eq!(required, 5);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn creation_of_coherent_is_scaled_photon_added_state() {
        // â†|α⟩ = sqrt(1 + |α|²)·|α,1⟩ with |α,1⟩ the normalized
        // photon-added coherent state.
        let dim = 41;
        let v = coherent(C_ONE, dim).unwrap();
        let up = apply_creation(&v, DEFAULT_TAIL_TOL).unwrap();
        let photon_added = up.normalized().unwrap();
        let expect = photon_added.scaled(c(2.0_f64.sqrt(), 0.0));
        for n in 0..dim {
            assert!((up.amp(n) - expect.amp(n)).norm() < 1e-9);
        }
        assert!((up.norm_sqr().sqrt() - 2.0_f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn photon_number_of_vacuum_and_coherent() {
        assert_eq!(expectation_number(&FockVector::vacuum(3)), 0.0);
        let v = coherent(c(2.0, 0.0), 41).unwrap();
        assert!((expectation_number(&v) - 4.0).abs() < 1e-8);
    }

    #[test]
    fn photon_number_of_empty_coherent_state() {
        // Emptying |α| = 2 along its own phase adds exactly one photon.
        let p = crate::families::ECParams::new(2.0, 0.0, 0.0).unwrap();
        let e = crate::families::ec_state(&p, adequate_dim(2.0)).unwrap();
        assert!((expectation_number(&e) - 5.0).abs() < 1e-8);
    }

    #[test]
    fn ladder_consistency_on_number_states() {
        // â(â†|n⟩) = (n+1)|n⟩
        let dim = 12;
        for n in 0..dim - 2 {
            let v = FockVector::basis(dim, n);
            let round = apply_annihilation(&apply_creation(&v, DEFAULT_TAIL_TOL).unwrap());
            for k in 0..dim {
                let expect = if k == n {
                    c((n + 1) as f64, 0.0)
                } else {
                    Complex64::ZERO
                };
                assert!((round.amp(k) - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn vacuum_quadrature_fluctuations() {
        let m = quadrature_moments(&FockVector::vacuum(6), DEFAULT_TAIL_TOL).unwrap();
        assert!(m.x1.abs() < 1e-15);
        assert!(m.x2.abs() < 1e-15);
        assert!((m.x1_sq - 0.25).abs() < 1e-15);
        assert!((m.x2_sq - 0.25).abs() < 1e-15);
    }

    #[test]
    fn coherent_quadrature_displacement() {
        let alpha = 1.7;
        let v = coherent(c(alpha, 0.0), adequate_dim(alpha)).unwrap();
        let m = quadrature_moments(&v, DEFAULT_TAIL_TOL).unwrap();
        assert!((m.x1 - alpha).abs() < 1e-10);
        assert!(m.x2.abs() < 1e-10);
        assert!((m.var_x1() - 0.25).abs() < 1e-10);
        assert!((m.var_x2() - 0.25).abs() < 1e-10);
    }

    #[test]
    fn adequate_dim_grows_with_amplitude() {
        assert!(adequate_dim(0.0) >= 21);
        assert!(adequate_dim(2.0) > adequate_dim(1.0));
        // Poisson tail at the rule dimension is negligible.
        let mag: f64 = 2.0;
        let dim = adequate_dim(mag);
        let v = coherent(c(mag, 0.0), dim).unwrap();
        assert!(v.tail_amp() < 1e-10);
        assert!((v.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tolerances_validate_positivity() {
        assert!(Tolerances::default().validate().is_ok());
        let bad = Tolerances { norm_tol: 0.0, ..Tolerances::default() };
        assert!(bad.validate().is_err());
    }
}
