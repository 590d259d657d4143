use std::ops::{Add, Sub};
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Result, SolverError};
use crate::spectral::Grid;

/// Real-valued function sampled on the collocation nodes of a [`Grid`].
#[derive(Debug, Clone)]
pub struct RealField {
    grid: Arc<Grid>,
    values: Vec<f64>,
}

impl RealField {
    pub fn zeros(grid: &Arc<Grid>) -> Self {
        RealField {
            grid: grid.clone(),
            values: vec![0.0; grid.n_points()],
        }
    }

    pub fn constant(grid: &Arc<Grid>, c: f64) -> Self {
        RealField {
            grid: grid.clone(),
            values: vec![c; grid.n_points()],
        }
    }

    /// Samples `f` at every grid node.
    pub fn from_fn(grid: &Arc<Grid>, f: impl Fn(f64) -> f64) -> Self {
        RealField {
            grid: grid.clone(),
            values: grid.nodes().iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn from_values(grid: &Arc<Grid>, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(SolverError::GridMismatch(format!(
                "expected {} values, got {}",
                grid.n_points(),
                values.len()
            )));
        }
        Ok(RealField {
            grid: grid.clone(),
            values,
        })
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Trapezoid-free periodic quadrature `sum(u_j) * dx`.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.grid.dx()
    }
}

fn assert_same_grid(a: &RealField, b: &RealField) {
    assert!(
        a.grid.same_grid(&b.grid),
        "field arithmetic on mismatched grids"
    );
}

impl Add for &RealField {
    type Output = RealField;
    fn add(self, rhs: &RealField) -> RealField {
        assert_same_grid(self, rhs);
        RealField {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RealField {
    type Output = RealField;
    fn sub(self, rhs: &RealField) -> RealField {
        assert_same_grid(self, rhs);
        RealField {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Discrete Fourier coefficients of a field, in the grid's wavenumber
/// ordering. For a transform of a real field, Hermitian symmetry
/// `c[k] = conj(c[N-k])` holds up to roundoff.
#[derive(Debug, Clone)]
pub struct SpectralField {
    grid: Arc<Grid>,
    coefficients: Vec<Complex64>,
}

impl SpectralField {
    pub fn from_coefficients(grid: &Arc<Grid>, coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.len() != grid.n_points() {
            return Err(SolverError::GridMismatch(format!(
                "expected {} coefficients, got {}",
                grid.n_points(),
                coefficients.len()
            )));
        }
        Ok(SpectralField {
            grid: grid.clone(),
            coefficients,
        })
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn coefficients_mut(&mut self) -> &mut [Complex64] {
        &mut self.coefficients
    }

    pub fn max_abs(&self) -> f64 {
        self.coefficients.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    /// Largest deviation from Hermitian symmetry, relative to the largest
    /// coefficient magnitude. Zero for an exactly real-valued spectrum source.
    pub fn hermitian_asymmetry(&self) -> f64 {
        let n = self.coefficients.len();
        let scale = self.max_abs();
        if scale == 0.0 {
            return 0.0;
        }
        let mut worst: f64 = self.coefficients[0].im.abs();
        for k in 1..n {
            let diff = self.coefficients[k] - self.coefficients[n - k].conj();
            worst = worst.max(diff.norm());
        }
        worst / scale
    }
}

/// Unnormalized forward DFT: `c_k = sum_j u_j exp(-2 pi i j k / N)`.
pub fn forward_transform(u: &RealField) -> SpectralField {
    let mut buf: Vec<Complex64> = u.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    u.grid().fft_forward().process(&mut buf);
    SpectralField {
        grid: u.grid().clone(),
        coefficients: buf,
    }
}

/// Inverse DFT `u_j = (1/N) sum_k c_k exp(2 pi i j k / N)`, discarding the
/// imaginary residue after checking it stays below `1e-10 * max|c| / N`.
///
/// Fails with [`SolverError::SymmetryViolation`] when the residue exceeds the
/// bound, which signals a multiplier that broke Hermitian symmetry.
pub fn inverse_transform(spec: &SpectralField) -> Result<RealField> {
    inverse_transform_scaled(spec, 0.0)
}

/// Inverse DFT whose residue bound also admits `1e-10 * value_scale`, for
/// multiplier pipelines: a strongly damping symbol shrinks the output scale
/// by many orders while the roundoff inherited from the input field does
/// not, so the realness check has to reference the input's value scale.
pub(crate) fn inverse_transform_scaled(
    spec: &SpectralField,
    value_scale: f64,
) -> Result<RealField> {
    let n = spec.grid().n_points() as f64;
    let mut buf = spec.coefficients().to_vec();
    spec.grid().fft_inverse().process(&mut buf);
    let mut residue: f64 = 0.0;
    let values: Vec<f64> = buf
        .iter()
        .map(|c| {
            residue = residue.max(c.im.abs() / n);
            c.re / n
        })
        .collect();
    let bound = 1e-10 * (spec.max_abs() / n).max(value_scale);
    // written so a NaN residue also fails
    if !(residue <= bound) {
        return Err(SolverError::SymmetryViolation { residue, bound });
    }
    Ok(RealField {
        grid: spec.grid().clone(),
        values,
    })
}

/// Inverse DFT without the residue check, for spectra that are Hermitian by
/// construction. The relative bound of [`inverse_transform`] is meaningless
/// when the output nearly cancels (its scale collapses while the inherited
/// roundoff does not).
pub(crate) fn inverse_transform_unchecked(spec: &SpectralField) -> RealField {
    let n = spec.grid().n_points() as f64;
    let mut buf = spec.coefficients().to_vec();
    spec.grid().fft_inverse().process(&mut buf);
    RealField {
        grid: spec.grid().clone(),
        values: buf.iter().map(|c| c.re / n).collect(),
    }
}
