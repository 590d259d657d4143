//! Right-hand sides of the split system.
//!
//! The dispersive part (all nonlocal terms):
//!
//! ```text
//! d zeta/dt =  H_mu v
//!             - eps*sqrt(mu) * ( 1/2 H_mu(v dx H_mu zeta) + H_mu(zeta dx H_mu v)
//!                                + zeta dx v - 1/2 dx zeta H_mu^2 v )
//!             + beta*sqrt(mu) * dx(B_mu v)
//! d v/dt    = -dx zeta + eps*sqrt(mu)/2 * dx zeta H_mu dx zeta
//!             + eps*sqrt(mu)/2 * v H_mu^2 dx v
//! ```
//!
//! Products are formed pointwise on the collocation grid, multipliers act in
//! spectral space, and no dealiasing filter is applied anywhere.

use num_complex::Complex64;

use crate::error::Result;
use crate::model::{check_state_bathy, Bathymetry, PhysicalParams, Tendency, WaveState};
use crate::spectral::{
    apply_symbol, derivative_symbol, forward_transform, h_mu_squared_symbol, h_mu_symbol,
    inverse_transform_scaled, multiply_symbol, sech_squared_symbol, sech_symbol, RealField,
    SpectralField,
};

/// Coefficient set for one normalization of the split system. The public
/// operations use the deep-water instantiation; the KdV experiment swaps in
/// the shallow-water one without touching the scheme itself.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SplitCoeffs {
    /// Shallowness parameter inside every `tanh`/`sech` symbol.
    pub mu: f64,
    /// Coefficient of the linear term `H_mu v`.
    pub dispersion: f64,
    /// Coefficient of the quadratic multiplier group in the zeta equation
    /// (and half of it on `v H_mu^2 dx v`).
    pub gradient: f64,
    /// The steepness `eps*sqrt(mu)` coming from the change of variables.
    pub steepness: f64,
    /// Coefficient of the bottom term `dx(B_mu v)`.
    pub bottom: f64,
}

impl SplitCoeffs {
    /// Deep-water normalization: every nonlinear term carries `eps*sqrt(mu)`.
    pub fn deep_water(p: &PhysicalParams) -> Self {
        let es = p.steepness();
        SplitCoeffs {
            mu: p.mu(),
            dispersion: 1.0,
            gradient: es,
            steepness: es,
            bottom: p.beta() * p.mu().sqrt(),
        }
    }

    /// Shallow-water normalization (the Boussinesq/KdV regime): the
    /// dispersive term scales like `1/sqrt(mu)` and the quadratic group
    /// like `eps`, so the linear phase speed stays near one as `mu -> 0`.
    pub fn shallow_water(p: &PhysicalParams) -> Self {
        SplitCoeffs {
            mu: p.mu(),
            dispersion: 1.0 / p.mu().sqrt(),
            gradient: p.epsilon(),
            steepness: p.steepness(),
            bottom: p.beta(),
        }
    }

    /// Advection coefficient of the zeta transport equation,
    /// `d zeta/dt + c ((H_mu^2+1) v) dx zeta = 0`.
    pub fn zeta_advection(&self) -> f64 {
        self.gradient - 0.5 * self.steepness
    }

    /// Advection coefficient of the v transport equation,
    /// `d v/dt + c v dx v = 0`.
    pub fn v_advection(&self) -> f64 {
        self.gradient + 0.5 * self.steepness
    }
}

/// Inverse transform of `symbol * spec` without consuming `spec`; the
/// realness bound references the source field's value scale.
fn inverse_with(spec: &SpectralField, symbol: &[Complex64], scale: f64) -> Result<RealField> {
    let mut scaled = spec.clone();
    multiply_symbol(&mut scaled, symbol);
    inverse_transform_scaled(&scaled, scale)
}

fn pointwise(a: &RealField, b: &RealField) -> Vec<f64> {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| x * y)
        .collect()
}

/// Dispersive tendency of the published deep-water system.
pub fn dispersive_rhs(
    state: &WaveState,
    params: &PhysicalParams,
    bathy: &Bathymetry,
) -> Result<Tendency> {
    dispersive_rhs_with(state, &SplitCoeffs::deep_water(params), bathy)
}

pub(crate) fn dispersive_rhs_with(
    state: &WaveState,
    co: &SplitCoeffs,
    bathy: &Bathymetry,
) -> Result<Tendency> {
    check_state_bathy(state, bathy)?;
    let grid = state.grid();
    let mu = co.mu;

    let zeta_hat = forward_transform(state.zeta());
    let v_hat = forward_transform(state.v());

    let deriv = derivative_symbol(grid);
    let h = h_mu_symbol(grid, mu);
    let h_sq = h_mu_squared_symbol(grid, mu);
    let deriv_h: Vec<Complex64> = deriv.iter().zip(&h).map(|(a, b)| a * b).collect();
    let deriv_h_sq: Vec<Complex64> = deriv.iter().zip(&h_sq).map(|(a, b)| a * b).collect();

    let z_scale = state.zeta().max_abs();
    let v_scale = state.v().max_abs();
    let h_v = inverse_with(&v_hat, &h, v_scale)?;
    let dx_zeta = inverse_with(&zeta_hat, &deriv, z_scale)?;
    let dx_h_zeta = inverse_with(&zeta_hat, &deriv_h, z_scale)?;
    let dx_h_v = inverse_with(&v_hat, &deriv_h, v_scale)?;
    let dx_v = inverse_with(&v_hat, &deriv, v_scale)?;
    let h_sq_v = inverse_with(&v_hat, &h_sq, v_scale)?;
    let h_sq_dx_v = inverse_with(&v_hat, &deriv_h_sq, v_scale)?;

    // quadratic terms wrapped in H_mu, products formed in physical space
    let t1 = apply_symbol(
        &RealField::from_values(grid, pointwise(state.v(), &dx_h_zeta))?,
        &h,
    )?;
    let t2 = apply_symbol(
        &RealField::from_values(grid, pointwise(state.zeta(), &dx_h_v))?,
        &h,
    )?;

    let bottom = if co.bottom != 0.0 {
        // dx(B_mu v) = sech-multiplier, pointwise product with b, then
        // the fused sech * i xi multiplier
        let sech = sech_symbol(grid, mu);
        let inner = inverse_with(&v_hat, &sech, v_scale)?;
        let prod = RealField::from_values(grid, pointwise(bathy.samples(), &inner))?;
        let mut spec = forward_transform(&prod);
        let sech_deriv: Vec<Complex64> = sech.iter().zip(&deriv).map(|(a, b)| a * b).collect();
        multiply_symbol(&mut spec, &sech_deriv);
        Some(inverse_transform_scaled(&spec, prod.max_abs())?)
    } else {
        None
    };

    let e1 = co.gradient;
    let za = co.zeta_advection();
    let n = grid.n_points();
    let zeta_vals = state.zeta().values();
    let v_vals = state.v().values();

    let mut d_zeta = vec![0.0; n];
    for j in 0..n {
        d_zeta[j] = co.dispersion * h_v.values()[j]
            - e1 * (0.5 * t1.values()[j] + t2.values()[j] + zeta_vals[j] * dx_v.values()[j])
            + za * dx_zeta.values()[j] * h_sq_v.values()[j];
        if let Some(ref s) = bottom {
            d_zeta[j] += co.bottom * s.values()[j];
        }
    }

    // H_mu dx zeta = dx H_mu zeta (multipliers commute)
    let e2 = co.steepness;
    let mut d_v = vec![0.0; n];
    for j in 0..n {
        d_v[j] = -dx_zeta.values()[j]
            + 0.5 * e2 * dx_zeta.values()[j] * dx_h_zeta.values()[j]
            + 0.5 * e1 * v_vals[j] * h_sq_dx_v.values()[j];
    }

    Ok(Tendency {
        d_zeta: RealField::from_values(grid, d_zeta)?,
        d_v: RealField::from_values(grid, d_v)?,
    })
}

/// The two transport speeds of the split system: the smoothed velocity
/// `w = (H_mu^2 + 1) v = sech^2(sqrt(mu) D) v` advecting `zeta`, and `v`
/// itself advecting `v`.
pub fn transport_speeds(
    state: &WaveState,
    params: &PhysicalParams,
) -> Result<(RealField, RealField)> {
    let w = apply_symbol(state.v(), &sech_squared_symbol(state.grid(), params.mu()))?;
    Ok((w, state.v().clone()))
}
