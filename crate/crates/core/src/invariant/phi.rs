use serde::{Deserialize, Serialize};

use super::{boltzmann_weight, ShadowColoring};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::holquandle::QuandleElement;

/// Default tolerance for placing a state sum on `{−V, 0, +V}`.
pub const LATTICE_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhiResult {
    pub phi: f64,
    pub volume: f64,
    pub k: i32,
    pub residual: f64,
    /// Boltzmann weight of each crossing.
    pub weights: Vec<f64>,
}

/// Nearest `k ∈ {−1, 0, 1}` to `phi / volume` and its residual
/// `|phi − k·volume|`.
pub fn nearest_multiple(phi: f64, volume: f64) -> (i32, f64) {
    let k = (phi / volume).round().clamp(-1.0, 1.0) as i32;
    (k, (phi - k as f64 * volume).abs())
}

pub fn classify(phi: f64, volume: f64, tol: f64) -> Result<(i32, f64)> {
    if !(volume.is_finite() && volume > 0.0) {
        return Err(Error::InvalidInput(format!(
            "reference volume {volume} is not positive"
        )));
    }
    let (k, residual) = nearest_multiple(phi, volume);
    if !(residual < tol) {
        return Err(Error::OutOfLattice {
            phi,
            volume,
            residual,
            tol,
        });
    }
    Ok((k, residual))
}

/// The state sum of `s` with base meridian `w`, classified against
/// `volume`.
pub fn phi(
    d: &Diagram,
    s: &ShadowColoring,
    w: &QuandleElement,
    volume: f64,
    tol: f64,
) -> Result<PhiResult> {
    let weights: Vec<f64> = (0..d.n_crossings())
        .map(|c| boltzmann_weight(d, s, c, w))
        .collect();
    let total = weights.iter().sum();
    let (k, residual) = classify(total, volume, tol)?;
    Ok(PhiResult {
        phi: total,
        volume,
        k,
        residual,
        weights,
    })
}
