//! Exact propagator of the linear system (`eps = beta = 0`):
//! `d zeta/dt = H_mu v`, `d v/dt = -dx zeta`.

use num_complex::Complex64;

use crate::error::{Result, SolverError};
use crate::model::WaveState;
use crate::spectral::{forward_transform, inverse_transform_unchecked, SpectralField};

/// Evolves a state exactly under the linearized system for a time `t` by the
/// closed-form per-mode matrix exponential: each mode rotates with frequency
/// `omega(xi) = sqrt(xi tanh(sqrt(mu) xi))`,
///
/// ```text
/// zeta_k(t) = cos(omega t) zeta_k(0) - i tanh(sqrt(mu) xi) sin(omega t)/omega * v_k(0)
/// v_k(t)    = -i xi sin(omega t)/omega * zeta_k(0) + cos(omega t) v_k(0)
/// ```
///
/// Symbols follow the discrete conventions (zeroed at Nyquist), so the
/// mean mode and the Nyquist mode are constants of the motion, mirroring
/// the solver this serves as oracle for.
pub fn exact_linear_propagator(initial: &WaveState, mu: f64, t: f64) -> Result<WaveState> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(SolverError::InvalidParam(format!(
            "mu must be positive, got {mu}"
        )));
    }
    if !t.is_finite() {
        return Err(SolverError::InvalidParam(format!(
            "propagation time must be finite, got {t}"
        )));
    }
    let grid = initial.grid();
    let zeta_hat = forward_transform(initial.zeta());
    let v_hat = forward_transform(initial.v());
    let nyq = grid.nyquist_index();
    let n = grid.n_points();

    let mut zeta_out = vec![Complex64::new(0.0, 0.0); n];
    let mut v_out = vec![Complex64::new(0.0, 0.0); n];
    for (k, &xi) in grid.wavenumbers().iter().enumerate() {
        let zk = zeta_hat.coefficients()[k];
        let vk = v_hat.coefficients()[k];
        if k == 0 || k == nyq {
            zeta_out[k] = zk;
            v_out[k] = vk;
            continue;
        }
        let th = (mu.sqrt() * xi).tanh();
        let omega = (xi * th).sqrt(); // xi*tanh >= 0 for every real xi
        let (c, sinc) = if omega > 0.0 {
            ((omega * t).cos(), (omega * t).sin() / omega)
        } else {
            (1.0, t)
        };
        zeta_out[k] = c * zk + Complex64::new(0.0, -th * sinc) * vk;
        v_out[k] = Complex64::new(0.0, -xi * sinc) * zk + c * vk;
    }

    WaveState::new(
        inverse_transform_unchecked(&SpectralField::from_coefficients(grid, zeta_out)?),
        inverse_transform_unchecked(&SpectralField::from_coefficients(grid, v_out)?),
        initial.time() + t,
    )
}
