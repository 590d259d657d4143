//! Split-step solver for one-dimensional deep-water surface waves over a
//! variable bottom.
//!
//! The evolution system couples the surface elevation `zeta` and surface
//! velocity `v` through the nonlocal operators `H_mu = -tanh(sqrt(mu) D)/D d/dx`
//! and `B_mu = sech(sqrt(mu) D)(b sech(sqrt(mu) D) . )`. Each time step is a
//! Lie composition of two substeps:
//!
//! * the dispersive part, integrated by one forward-Euler step with all
//!   multipliers applied pseudospectrally on a periodic grid;
//! * the nonlinear transport part, integrated by a Lax-Wendroff scheme in
//!   physical space.
//!
//! Nonlinear products are formed pointwise on the collocation grid with no
//! dealiasing filter; keeping the transport terms out of spectral space is
//! what makes that safe.
//!
//! Crate layout:
//!
//! * [`spectral`] - grid, transforms, Fourier multipliers, discrete norms;
//! * [`model`] - parameters, state, right-hand sides, the change of
//!   variables, and the bathymetry/initial-data catalog;
//! * [`stepping`] - the two substeps, their composition, CFL control, and
//!   the simulation driver;
//! * [`experiments`] - convergence studies, the exact linear oracle, and the
//!   KdV / homogenization sweeps.
//!
//! # Example
//!
//! ```
//! use deepwater::model::{make_bathymetry, make_initial, PhysicalParams};
//! use deepwater::spectral::Grid;
//! use deepwater::stepping::{run, StepConfig};
//!
//! let grid = Grid::new(30.0, 64)?;
//! let params = PhysicalParams::new(0.1, 1.0, 0.5)?;
//! let bathy = make_bathymetry("bump_cos", &grid, &params, None)?;
//! let initial = make_initial("sech_pulse", &grid, None)?;
//! let cfg = StepConfig::cfl_default(&grid, params.mu())?;
//! let out = run(&initial, &params, &bathy, &cfg, 0.5, &[0.25, 0.5]).map_err(|f| f.error)?;
//! assert_eq!(out.snapshots.len(), 2);
//! assert!(out.final_state.all_finite());
//! # Ok::<(), deepwater::SolverError>(())
//! ```

// `!(x < y)` comparisons are load-bearing here: they must fail on NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiments;
pub mod model;
pub mod spectral;
pub mod stepping;

pub use error::{Result, SolverError};
pub use model::{Bathymetry, PhysicalParams, Tendency, WaveState};
pub use spectral::{Grid, RealField, SpectralField};
pub use stepping::{Diagnostics, RunOutput, StepConfig, StepRecord};
