//! Periodic grid, transforms, Fourier multipliers, and discrete norms.

mod field;
mod grid;
mod norms;
mod ops;

pub use field::{forward_transform, inverse_transform, RealField, SpectralField};
pub use grid::Grid;
pub use norms::{energy, half_derivative_norm, sobolev_norm};
pub use ops::{apply_b_mu, apply_h_mu, apply_multiplier, apply_smoothing, derivative};

pub(crate) use field::{inverse_transform_scaled, inverse_transform_unchecked};
pub(crate) use ops::{
    apply_symbol, derivative_symbol, h_mu_squared_symbol, h_mu_symbol, multiply_symbol,
    sech_squared_symbol, sech_symbol,
};
