use std::fmt;
use std::sync::Arc;

use rustfft::{Fft, FftPlanner};

use crate::error::{Result, SolverError};

/// Periodic grid on `[-L, L)` with `N` equidistant nodes and the physical
/// wavenumbers `xi_j = pi*j/L`, `j in {-N/2, ..., N/2-1}`, stored in
/// transform ordering (`0, 1, ..., N/2-1, -N/2, ..., -1`).
///
/// The FFT plans are built once per grid; a `Grid` is immutable and can be
/// shared freely across threads.
pub struct Grid {
    half_length: f64,
    n_points: usize,
    dx: f64,
    nodes: Vec<f64>,
    wavenumbers: Vec<f64>,
    fft_forward: Arc<dyn Fft<f64>>,
    fft_inverse: Arc<dyn Fft<f64>>,
}

impl Grid {
    /// Builds a shared grid. `n_points` must be a power of two (>= 4) and
    /// `half_length` a positive finite length.
    pub fn new(half_length: f64, n_points: usize) -> Result<Arc<Self>> {
        if !(half_length.is_finite() && half_length > 0.0) {
            return Err(SolverError::InvalidParam(format!(
                "half_length must be positive and finite, got {half_length}"
            )));
        }
        if n_points < 4 || !n_points.is_power_of_two() {
            return Err(SolverError::InvalidParam(format!(
                "n_points must be a power of two >= 4, got {n_points}"
            )));
        }
        let n = n_points;
        let dx = 2.0 * half_length / n as f64;
        let nodes = (0..n).map(|j| -half_length + j as f64 * dx).collect();
        let wavenumbers = (0..n)
            .map(|k| {
                let j = if k < n / 2 { k as i64 } else { k as i64 - n as i64 };
                std::f64::consts::PI * j as f64 / half_length
            })
            .collect();
        let mut planner = FftPlanner::new();
        Ok(Arc::new(Grid {
            half_length,
            n_points,
            dx,
            nodes,
            wavenumbers,
            fft_forward: planner.plan_fft_forward(n),
            fft_inverse: planner.plan_fft_inverse(n),
        }))
    }

    /// Half-length `L` of the domain `[-L, L)`.
    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Node spacing `2L/N`.
    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Collocation nodes `x_j = -L + j*dx`.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Physical wavenumbers in transform ordering.
    pub fn wavenumbers(&self) -> &[f64] {
        &self.wavenumbers
    }

    /// Index of the unpaired Nyquist mode (`N/2`).
    pub fn nyquist_index(&self) -> usize {
        self.n_points / 2
    }

    /// Largest wavenumber magnitude, `pi*(N/2)/L`.
    pub fn max_wavenumber(&self) -> f64 {
        std::f64::consts::PI * (self.n_points / 2) as f64 / self.half_length
    }

    /// Two grids are interchangeable iff they discretize the same domain
    /// with the same resolution.
    pub fn same_grid(&self, other: &Grid) -> bool {
        self.n_points == other.n_points && self.half_length == other.half_length
    }

    pub(crate) fn fft_forward(&self) -> &Arc<dyn Fft<f64>> {
        &self.fft_forward
    }

    pub(crate) fn fft_inverse(&self) -> &Arc<dyn Fft<f64>> {
        &self.fft_inverse
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Grid")
            .field("half_length", &self.half_length)
            .field("n_points", &self.n_points)
            .field("dx", &self.dx)
            .finish()
    }
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.same_grid(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_layout() {
        let g = Grid::new(30.0, 16).unwrap();
        assert_eq!(g.n_points(), 16);
        assert_eq!(g.dx(), 60.0 / 16.0);
        assert_eq!(g.nodes()[0], -30.0);
        assert_eq!(g.dx() * g.n_points() as f64, 2.0 * g.half_length());
        // transform ordering: 0..N/2-1 then -N/2..-1
        assert_eq!(g.wavenumbers()[0], 0.0);
        assert_eq!(g.wavenumbers()[1], std::f64::consts::PI / 30.0);
        assert_eq!(g.wavenumbers()[8], -8.0 * std::f64::consts::PI / 30.0);
        assert_eq!(g.wavenumbers()[15], -std::f64::consts::PI / 30.0);
        assert_eq!(g.nyquist_index(), 8);
    }

    #[test]
    fn wavenumbers_pair_up() {
        let g = Grid::new(7.5, 32).unwrap();
        let xi = g.wavenumbers();
        for k in 1..g.n_points() {
            if k == g.nyquist_index() {
                continue;
            }
            let partner = g.n_points() - k;
            assert_eq!(xi[k], -xi[partner], "mode {k}");
        }
        assert_eq!(g.max_wavenumber(), -xi[g.nyquist_index()]);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(Grid::new(30.0, 12).is_err());
        assert!(Grid::new(30.0, 2).is_err());
        assert!(Grid::new(0.0, 16).is_err());
        assert!(Grid::new(f64::NAN, 16).is_err());
    }
}
