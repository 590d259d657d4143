//! Shared fixtures for the solver benchmarks.

use std::sync::Arc;

use deepwater::model::{make_bathymetry, make_initial, Bathymetry, PhysicalParams, WaveState};
use deepwater::spectral::Grid;

pub struct Fixture {
    pub grid: Arc<Grid>,
    pub params: PhysicalParams,
    pub bathymetry: Bathymetry,
    pub state: WaveState,
}

/// Reference setup (bump bottom, sech pulse) at the given resolution.
pub fn example_fixture(n_points: usize) -> Fixture {
    let grid = Grid::new(30.0, n_points).unwrap();
    let params = PhysicalParams::new(0.1, 1.0, 0.5).unwrap();
    let bathymetry = make_bathymetry("bump_cos", &grid, &params, None).unwrap();
    let state = make_initial("sech_pulse", &grid, None).unwrap();
    Fixture {
        grid,
        params,
        bathymetry,
        state,
    }
}
