//! Fourier-multiplier operators.
//!
//! Conventions for the unpaired Nyquist mode: odd symbols (derivative, H_mu)
//! zero it, because an odd real symbol has no real representation there;
//! even symbols (sech, sech^2) keep it.

use num_complex::Complex64;

use crate::error::{Result, SolverError};
use crate::spectral::{forward_transform, inverse_transform_scaled, Grid, RealField, SpectralField};

/// Applies a Fourier multiplier given as a map `wavenumber -> complex`.
///
/// The symbol is evaluated at every mode including Nyquist; it must satisfy
/// conjugate symmetry `m(-xi) = conj(m(xi))` (and be real at Nyquist) for the
/// result to be real, otherwise the inverse transform reports a
/// `SymmetryViolation`.
pub fn apply_multiplier(u: &RealField, symbol: impl Fn(f64) -> Complex64) -> Result<RealField> {
    let m: Vec<Complex64> = u.grid().wavenumbers().iter().map(|&xi| symbol(xi)).collect();
    apply_symbol(u, &m)
}

/// Multiplier application with a precomputed per-mode symbol array. The
/// realness check references the input field's scale, so strongly damping
/// symbols do not trip it on inherited roundoff.
pub(crate) fn apply_symbol(u: &RealField, symbol: &[Complex64]) -> Result<RealField> {
    let mut spec = forward_transform(u);
    multiply_symbol(&mut spec, symbol);
    inverse_transform_scaled(&spec, u.max_abs())
}

pub(crate) fn multiply_symbol(spec: &mut SpectralField, symbol: &[Complex64]) {
    for (c, m) in spec.coefficients_mut().iter_mut().zip(symbol) {
        *c *= m;
    }
}

/// Symbol `i*xi` of `d/dx`, zeroed on the Nyquist mode.
pub(crate) fn derivative_symbol(grid: &Grid) -> Vec<Complex64> {
    let mut m: Vec<Complex64> = grid
        .wavenumbers()
        .iter()
        .map(|&xi| Complex64::new(0.0, xi))
        .collect();
    m[grid.nyquist_index()] = Complex64::new(0.0, 0.0);
    m
}

/// Symbol `-i*tanh(sqrt(mu)*xi)` of `H_mu = -tanh(sqrt(mu) D)/D d/dx`,
/// zeroed on the Nyquist mode; exactly zero at `xi = 0`.
pub(crate) fn h_mu_symbol(grid: &Grid, mu: f64) -> Vec<Complex64> {
    let s = mu.sqrt();
    let mut m: Vec<Complex64> = grid
        .wavenumbers()
        .iter()
        .map(|&xi| Complex64::new(0.0, -(s * xi).tanh()))
        .collect();
    m[grid.nyquist_index()] = Complex64::new(0.0, 0.0);
    m
}

/// Symbol `-tanh^2(sqrt(mu)*xi)` of `H_mu^2` (the composition of two
/// Nyquist-zeroed applications, fused into one pass).
pub(crate) fn h_mu_squared_symbol(grid: &Grid, mu: f64) -> Vec<Complex64> {
    let s = mu.sqrt();
    let mut m: Vec<Complex64> = grid
        .wavenumbers()
        .iter()
        .map(|&xi| {
            let t = (s * xi).tanh();
            Complex64::new(-t * t, 0.0)
        })
        .collect();
    m[grid.nyquist_index()] = Complex64::new(0.0, 0.0);
    m
}

/// Symbol `sech(sqrt(mu)*xi)`; even, Nyquist kept.
pub(crate) fn sech_symbol(grid: &Grid, mu: f64) -> Vec<Complex64> {
    let s = mu.sqrt();
    grid.wavenumbers()
        .iter()
        .map(|&xi| Complex64::new(1.0 / (s * xi).cosh(), 0.0))
        .collect()
}

/// Symbol `sech^2(sqrt(mu)*xi) = 1 - tanh^2(sqrt(mu)*xi)`; even, Nyquist kept.
pub(crate) fn sech_squared_symbol(grid: &Grid, mu: f64) -> Vec<Complex64> {
    let s = mu.sqrt();
    grid.wavenumbers()
        .iter()
        .map(|&xi| {
            let c = (s * xi).cosh();
            Complex64::new(1.0 / (c * c), 0.0)
        })
        .collect()
}

fn check_mu(mu: f64) -> Result<()> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(SolverError::InvalidParam(format!(
            "mu must be positive and finite, got {mu}"
        )));
    }
    Ok(())
}

/// Spectral derivative `d/dx`.
pub fn derivative(u: &RealField) -> Result<RealField> {
    apply_symbol(u, &derivative_symbol(u.grid()))
}

/// The nonlocal zero-order operator `H_mu` (symbol `-i tanh(sqrt(mu) xi)`).
pub fn apply_h_mu(u: &RealField, mu: f64) -> Result<RealField> {
    check_mu(mu)?;
    apply_symbol(u, &h_mu_symbol(u.grid(), mu))
}

/// The smoothing operator `H_mu^2 + 1` with symbol `sech^2(sqrt(mu) xi)`.
pub fn apply_smoothing(u: &RealField, mu: f64) -> Result<RealField> {
    check_mu(mu)?;
    apply_symbol(u, &sech_squared_symbol(u.grid(), mu))
}

/// The bathymetry operator `B_mu = sech(sqrt(mu) D)(b sech(sqrt(mu) D) . )`:
/// smooth, multiply pointwise by the bottom, smooth again.
pub fn apply_b_mu(u: &RealField, b: &RealField, mu: f64) -> Result<RealField> {
    check_mu(mu)?;
    if !u.grid().same_grid(b.grid()) {
        return Err(SolverError::GridMismatch(
            "bottom profile lives on a different grid".into(),
        ));
    }
    let sech = sech_symbol(u.grid(), mu);
    let inner = apply_symbol(u, &sech)?;
    let product: Vec<f64> = b
        .values()
        .iter()
        .zip(inner.values())
        .map(|(bi, ui)| bi * ui)
        .collect();
    apply_symbol(&RealField::from_values(u.grid(), product)?, &sech)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use std::sync::Arc;

    fn close(a: &RealField, b: &RealField, tol: f64) {
        let scale = a.max_abs().max(b.max_abs()).max(1.0);
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).abs() <= tol * scale, "{x} vs {y}");
        }
    }

    #[test]
    fn multiplier_identity_and_zero() {
        let g = Grid::new(30.0, 64).unwrap();
        let u = RealField::from_fn(&g, |x| (0.4 * x).sin() + 0.3);
        let id = apply_multiplier(&u, |_| Complex64::new(1.0, 0.0)).unwrap();
        close(&id, &u, 1e-12);
        let z = apply_multiplier(&u, |_| Complex64::new(0.0, 0.0)).unwrap();
        assert_eq!(z.max_abs(), 0.0);
    }

    #[test]
    fn multiplier_derivative_single_mode() {
        let g = Grid::new(30.0, 64).unwrap();
        let xi0 = PI / 30.0;
        let u = RealField::from_fn(&g, |x| (xi0 * x).sin());
        let d = apply_multiplier(&u, |xi| Complex64::new(0.0, xi)).unwrap();
        let expected = RealField::from_fn(&g, |x| xi0 * (xi0 * x).cos());
        close(&d, &expected, 1e-12);
    }

    #[test]
    fn derivative_basics() {
        let g = Grid::new(15.0, 64).unwrap();
        let c = RealField::constant(&g, 3.25);
        assert!(derivative(&c).unwrap().max_abs() < 1e-13);

        let xi0 = 2.0 * PI / 15.0;
        let u = RealField::from_fn(&g, |x| (xi0 * x).sin());
        let expected = RealField::from_fn(&g, |x| xi0 * (xi0 * x).cos());
        close(&derivative(&u).unwrap(), &expected, 1e-12);
    }

    #[test]
    fn derivative_is_linear() {
        let g = Grid::new(15.0, 64).unwrap();
        let xi1 = PI / 15.0;
        let xi2 = 3.0 * PI / 15.0;
        let u = RealField::from_fn(&g, |x| (xi1 * x).sin());
        let w = RealField::from_fn(&g, |x| (xi2 * x).cos());
        let combo = RealField::from_fn(&g, |x| 2.0 * (xi1 * x).sin() - 0.5 * (xi2 * x).cos());
        let lhs = derivative(&combo).unwrap();
        let du = derivative(&u).unwrap();
        let dw = derivative(&w).unwrap();
        let rhs = RealField::from_values(
            &g,
            du.values()
                .iter()
                .zip(dw.values())
                .map(|(a, b)| 2.0 * a - 0.5 * b)
                .collect(),
        )
        .unwrap();
        close(&lhs, &rhs, 1e-12);
    }

    #[test]
    fn h_mu_single_modes() {
        // xi0 = 1 needs L = pi
        let g = Grid::new(PI, 64).unwrap();
        let u = RealField::from_fn(&g, |x| x.cos());
        let out = apply_h_mu(&u, 1.0).unwrap();
        let expected = RealField::from_fn(&g, |x| 1.0_f64.tanh() * x.sin());
        close(&out, &expected, 1e-12);

        let v = RealField::from_fn(&g, |x| x.sin());
        let out = apply_h_mu(&v, 1.0).unwrap();
        let expected = RealField::from_fn(&g, |x| -1.0_f64.tanh() * x.cos());
        close(&out, &expected, 1e-12);

        // symbol vanishes at xi = 0
        let c = RealField::constant(&g, 2.0);
        assert!(apply_h_mu(&c, 1.0).unwrap().max_abs() < 1e-14);
    }

    #[test]
    fn h_mu_rejects_bad_mu() {
        let g = Grid::new(PI, 16).unwrap();
        let u = RealField::constant(&g, 1.0);
        assert!(matches!(
            apply_h_mu(&u, 0.0),
            Err(SolverError::InvalidParam(_))
        ));
        assert!(apply_h_mu(&u, -1.0).is_err());
        assert!(apply_smoothing(&u, 0.0).is_err());
    }

    #[test]
    fn smoothing_attenuates_modes() {
        let g = Grid::new(10.0, 128).unwrap();
        let mu = 2.0;
        let c = RealField::constant(&g, 1.5);
        close(&apply_smoothing(&c, mu).unwrap(), &c, 1e-13);

        let xi0 = 5.0 * PI / 10.0;
        let u = RealField::from_fn(&g, |x| (xi0 * x).sin());
        let damp = 1.0 / (mu.sqrt() * xi0).cosh().powi(2);
        let expected = RealField::from_fn(&g, |x| damp * (xi0 * x).sin());
        close(&apply_smoothing(&u, mu).unwrap(), &expected, 1e-12);
    }

    #[test]
    fn smoothing_attenuation_per_mode() {
        // spectral ratio after/before equals sech^2(sqrt(mu) xi_k) to 1e-14
        // relative on every energetic mode; the probe modes are kept mildly
        // damped so the FFT measurement noise (~4e-16 absolute per
        // coefficient) stays below the tolerance
        let g = Grid::new(10.0, 128).unwrap();
        let mu = 0.5;
        let u = RealField::from_fn(&g, |x| {
            (0.2 * PI * x).sin() + 0.8 * (0.4 * PI * x).cos() - 0.5 * (0.8 * PI * x).sin()
        });
        let before = crate::spectral::forward_transform(&u);
        let after = crate::spectral::forward_transform(&apply_smoothing(&u, mu).unwrap());
        for (k, &xi) in g.wavenumbers().iter().enumerate() {
            let b = before.coefficients()[k];
            if b.norm() < 1.0 {
                continue; // skip noise-level modes
            }
            let ratio = (after.coefficients()[k] / b).re;
            let expected = 1.0 / (mu.sqrt() * xi).cosh().powi(2);
            assert!(
                (ratio - expected).abs() <= 1e-14 * expected.max(1e-14),
                "mode {k}: {ratio} vs {expected}"
            );
        }
    }

    #[test]
    fn smoothing_equals_one_plus_h_mu_squared() {
        // Away from Nyquist the identity sech^2 = 1 + (-i tanh)^2 is exact;
        // the test field is band-limited to keep the Nyquist mode empty.
        let g = Grid::new(PI, 64).unwrap();
        let mu = 1.0;
        let u = RealField::from_fn(&g, |x| (3.0 * x).sin() - 0.7 * (11.0 * x).cos() + 0.2);
        let smoothed = apply_smoothing(&u, mu).unwrap();
        let hh = apply_h_mu(&apply_h_mu(&u, mu).unwrap(), mu).unwrap();
        let other = &u + &hh;
        close(&smoothed, &other, 1e-12);
    }

    #[test]
    fn b_mu_composes_sech() {
        let g = Grid::new(10.0, 128).unwrap();
        let mu = 1.0;
        let u = RealField::from_fn(&g, |x| (0.9 * x).sin() + 0.4 * (2.2 * x).cos());

        let zero = RealField::zeros(&g);
        assert_eq!(apply_b_mu(&u, &zero, mu).unwrap().max_abs(), 0.0);

        // b = 1 collapses to sech o sech = sech^2
        let one = RealField::constant(&g, 1.0);
        let via_b = apply_b_mu(&u, &one, mu).unwrap();
        let via_smooth = apply_smoothing(&u, mu).unwrap();
        close(&via_b, &via_smooth, 1e-12);

        // single mode with b = 1: damped by sech^2(sqrt(mu) xi0)
        let xi0 = 4.0 * PI / 10.0;
        let m = RealField::from_fn(&g, |x| (xi0 * x).cos());
        let damp = 1.0 / (mu.sqrt() * xi0).cosh().powi(2);
        let expected = RealField::from_fn(&g, |x| damp * (xi0 * x).cos());
        close(&apply_b_mu(&m, &one, mu).unwrap(), &expected, 1e-12);
    }

    #[test]
    fn b_mu_rejects_mismatched_grid() {
        let g1 = Grid::new(10.0, 64).unwrap();
        let g2 = Grid::new(10.0, 128).unwrap();
        let u = RealField::constant(&g1, 1.0);
        let b = RealField::constant(&g2, 1.0);
        assert!(matches!(
            apply_b_mu(&u, &b, 1.0),
            Err(SolverError::GridMismatch(_))
        ));
    }

    #[test]
    fn h_mu_commutes_with_derivative() {
        // band-limited field: both compositions agree mode by mode
        let g = Grid::new(20.0, 128).unwrap();
        let u = RealField::from_fn(&g, |x| (0.5 * x).sin() + 0.3 * (1.4 * x).cos());
        let a = apply_h_mu(&derivative(&u).unwrap(), 1.3).unwrap();
        let b = derivative(&apply_h_mu(&u, 1.3).unwrap()).unwrap();
        close(&a, &b, 1e-12);
    }

    #[test]
    fn grid_arc_sharing() {
        let g = Grid::new(5.0, 16).unwrap();
        let u = RealField::zeros(&g);
        assert!(Arc::ptr_eq(u.grid(), &g));
    }
}
