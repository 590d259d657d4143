//! Error metric and convergence-order estimation.

use crate::error::{Result, SolverError};
use crate::experiments::ErrorRow;
use crate::model::WaveState;
use crate::spectral::sobolev_norm;

/// Discrete `H^1 x L^2` distance between two states,
/// `sqrt(|zeta_a - zeta_b|_{H^1}^2 + |v_a - v_b|_{L^2}^2)`.
pub fn state_error(a: &WaveState, b: &WaveState) -> Result<f64> {
    if !a.grid().same_grid(b.grid()) {
        return Err(SolverError::GridMismatch(
            "states live on different grids".into(),
        ));
    }
    let dz = sobolev_norm(&(a.zeta() - b.zeta()), 1.0);
    let dv = sobolev_norm(&(a.v() - b.v()), 0.0);
    Ok((dz * dz + dv * dv).sqrt())
}

/// Least-squares fit of `log(error) = slope * log(dt) + c`.
#[derive(Debug, Clone, Copy)]
pub struct LogLogFit {
    pub slope: f64,
    /// RMS residual of the fit in log space.
    pub residual: f64,
}

/// Fits the convergence order from `(dt, error)` rows. Needs at least two
/// rows with positive dt and errors.
pub fn estimate_order(rows: &[ErrorRow]) -> Result<LogLogFit> {
    if rows.len() < 2 {
        return Err(SolverError::InsufficientPoints(format!(
            "need at least 2 rows, got {}",
            rows.len()
        )));
    }
    if rows.iter().any(|r| !(r.error > 0.0) || !(r.dt > 0.0)) {
        return Err(SolverError::InsufficientPoints(
            "errors and dt values must be positive".into(),
        ));
    }
    let n = rows.len() as f64;
    let xs: Vec<f64> = rows.iter().map(|r| r.dt.ln()).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.error.ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (y - y_mean);
    }
    if sxx == 0.0 {
        return Err(SolverError::InsufficientPoints(
            "dt values are all identical".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let ss: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    Ok(LogLogFit {
        slope,
        residual: (ss / n).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{Grid, RealField};

    #[test]
    fn error_of_identical_states_is_zero() {
        let g = Grid::new(30.0, 64).unwrap();
        let s = WaveState::new(
            RealField::from_fn(&g, |x| (0.3 * x).sin()),
            RealField::from_fn(&g, |x| (0.5 * x).cos()),
            0.0,
        )
        .unwrap();
        assert_eq!(state_error(&s, &s).unwrap(), 0.0);
    }

    #[test]
    fn constant_offset_error() {
        // zeta differs by c, v equal -> |c| sqrt(2L)
        let g = Grid::new(30.0, 64).unwrap();
        let c = 0.37;
        let a = WaveState::new(
            RealField::from_fn(&g, |x| (0.3 * x).sin()),
            RealField::zeros(&g),
            0.0,
        )
        .unwrap();
        let b = WaveState::new(
            RealField::from_fn(&g, |x| (0.3 * x).sin() + c),
            RealField::zeros(&g),
            0.0,
        )
        .unwrap();
        let expected = c * (2.0 * 30.0_f64).sqrt();
        assert!((state_error(&a, &b).unwrap() - expected).abs() < 1e-12);
        // symmetry
        assert_eq!(
            state_error(&a, &b).unwrap(),
            state_error(&b, &a).unwrap()
        );
    }

    #[test]
    fn triangle_inequality() {
        let g = Grid::new(10.0, 64).unwrap();
        let mk = |f: f64, p: f64| {
            WaveState::new(
                RealField::from_fn(&g, |x| (f * x).sin() + p),
                RealField::from_fn(&g, |x| (f * x + p).cos()),
                0.0,
            )
            .unwrap()
        };
        let (a, b, c) = (mk(0.4, 0.1), mk(0.9, -0.3), mk(1.7, 0.6));
        let ab = state_error(&a, &b).unwrap();
        let bc = state_error(&b, &c).unwrap();
        let ac = state_error(&a, &c).unwrap();
        assert!(ac <= ab + bc + 1e-12);
    }

    #[test]
    fn exact_first_and_second_order() {
        let rows: Vec<ErrorRow> = [0.1, 0.05, 0.025, 0.0125]
            .iter()
            .map(|&dt| ErrorRow { dt, error: 3.0 * dt })
            .collect();
        let fit = estimate_order(&rows).unwrap();
        assert!((fit.slope - 1.0).abs() < 1e-12);
        assert!(fit.residual < 1e-12);

        let rows2: Vec<ErrorRow> = [0.1, 0.05, 0.025]
            .iter()
            .map(|&dt| ErrorRow { dt, error: 0.5 * dt * dt })
            .collect();
        assert!((estimate_order(&rows2).unwrap().slope - 2.0).abs() < 1e-12);
    }

    #[test]
    fn noisy_first_order() {
        // 5% multiplicative noise, alternating sign
        let dts = [0.1, 0.05, 0.025, 0.0125];
        let noise = [1.05, 0.95, 1.05, 0.95];
        let rows: Vec<ErrorRow> = dts
            .iter()
            .zip(&noise)
            .map(|(&dt, &f)| ErrorRow {
                dt,
                error: 0.7 * dt * f,
            })
            .collect();
        let fit = estimate_order(&rows).unwrap();
        assert!(fit.slope > 0.9 && fit.slope < 1.1, "slope {}", fit.slope);
        assert!(fit.residual > 0.0 && fit.residual < 0.1);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(estimate_order(&[]).is_err());
        assert!(estimate_order(&[ErrorRow { dt: 0.1, error: 1.0 }]).is_err());
        let dup = [
            ErrorRow { dt: 0.1, error: 1.0 },
            ErrorRow { dt: 0.1, error: 2.0 },
        ];
        assert!(matches!(
            estimate_order(&dup),
            Err(SolverError::InsufficientPoints(_))
        ));
        let neg = [
            ErrorRow { dt: 0.1, error: 1.0 },
            ErrorRow { dt: 0.05, error: 0.0 },
        ];
        assert!(estimate_order(&neg).is_err());
    }
}
