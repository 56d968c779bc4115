//! Projective spin measurements used for the classical correlation.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{pauli, CMat2, C64};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasurementMode {
    /// σ_z and σ_x only. Written `"paper"` in scenario files.
    #[default]
    #[serde(rename = "paper", alias = "two_axis")]
    TwoAxis,
    /// Hemisphere grid with `resolution` polar rows and twice as many azimuths.
    BlochGrid(usize),
}

/// Default resolution of the Bloch-sphere search (64 azimuths × 32 polar rows).
pub const DEFAULT_GRID_RESOLUTION: usize = 32;

/// A set of two-outcome projective spin measurements, each given by the unit
/// Bloch vector n of its "+" outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSet {
    mode: MeasurementMode,
    directions: Vec<[f64; 3]>,
}

pub const Z_AXIS: [f64; 3] = [0.0, 0.0, 1.0];
pub const X_AXIS: [f64; 3] = [1.0, 0.0, 0.0];

impl MeasurementSet {
    pub fn two_axis() -> Self {
        MeasurementSet {
            mode: MeasurementMode::TwoAxis,
            directions: vec![Z_AXIS, X_AXIS],
        }
    }

    /// Polar angles θ_i = i·(π/2)/(N−1), i = 0..N, and azimuths φ_j = j·π/N,
    /// j = 0..2N. Since n and −n give the same measurement the upper
    /// hemisphere is enough; the pole is included once. Both σ_z and σ_x
    /// are always on the grid.
    pub fn bloch_grid(resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::InvalidMeasurement(format!(
                "grid resolution {resolution} must be at least 2"
            )));
        }
        let mut directions = vec![Z_AXIS];
        for i in 1..resolution {
            let theta = FRAC_PI_2 * i as f64 / (resolution - 1) as f64;
            for j in 0..2 * resolution {
                let phi = PI * j as f64 / resolution as f64;
                let (st, ct) = theta.sin_cos();
                let (sp, cp) = phi.sin_cos();
                directions.push([st * cp, st * sp, ct]);
            }
        }
        Ok(MeasurementSet {
            mode: MeasurementMode::BlochGrid(resolution),
            directions,
        })
    }

    pub fn from_mode(mode: MeasurementMode) -> Result<Self> {
        match mode {
            MeasurementMode::TwoAxis => Ok(Self::two_axis()),
            MeasurementMode::BlochGrid(n) => Self::bloch_grid(n),
        }
    }

    /// Arbitrary directions; each is normalised.
    pub fn custom(directions: Vec<[f64; 3]>) -> Result<Self> {
        if directions.is_empty() {
            return Err(Error::InvalidMeasurement("empty measurement set".into()));
        }
        let mut out = Vec::with_capacity(directions.len());
        for n in directions {
            let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
            if !(norm > 0.0 && norm.is_finite()) {
                return Err(Error::InvalidMeasurement(format!("degenerate direction {n:?}")));
            }
            out.push(n.map(|x| x / norm));
        }
        Ok(MeasurementSet {
            mode: MeasurementMode::TwoAxis,
            directions: out,
        })
    }

    pub fn mode(&self) -> MeasurementMode {
        self.mode
    }

    pub fn directions(&self) -> &[[f64; 3]] {
        &self.directions
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn projectors(&self) -> Vec<(CMat2, CMat2)> {
        self.directions.iter().map(projector_pair).collect()
    }
}

/// (I ± n·σ)/2.
pub fn projector_pair(n: &[f64; 3]) -> (CMat2, CMat2) {
    let [x, y, z] = pauli();
    let ns = x * C64::new(n[0], 0.0) + y * C64::new(n[1], 0.0) + z * C64::new(n[2], 0.0);
    let id = CMat2::identity();
    let half = C64::new(0.5, 0.0);
    ((id + ns) * half, (id - ns) * half)
}

/// Eigenvectors |±n⟩ in the (R, L) spin ordering, where R is the +1
/// eigenstate of σ_z.
pub fn eigenvectors(n: &[f64; 3]) -> [[C64; 2]; 2] {
    let theta = n[2].clamp(-1.0, 1.0).acos();
    let phi = n[1].atan2(n[0]);
    let (s, c) = (0.5 * theta).sin_cos();
    let e = C64::from_polar(1.0, phi);
    [[C64::new(c, 0.0), e * s], [C64::new(-s, 0.0), e * c]]
}

/// −2 log₂ c with c the largest overlap between eigenvectors of the two
/// measurements; 1 bit for σ_z and σ_x.
pub fn incompatibility_bits(n: &[f64; 3], m: &[f64; 3]) -> f64 {
    let dot = (n[0] * m[0] + n[1] * m[1] + n[2] * m[2]).abs();
    -(0.5 * (1.0 + dot)).log2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;

    #[test]
    fn projectors_are_complete() {
        for ms in [MeasurementSet::two_axis(), MeasurementSet::bloch_grid(5).unwrap()] {
            for (p, q) in ms.projectors() {
                assert!((p + q - CMat2::identity()).norm() < 1e-15);
                assert!((p * p - p).norm() < 1e-14);
                assert!((p * q).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn two_axis_set_is_z_and_x() {
        let (p, _) = projector_pair(&Z_AXIS);
        assert_eq!(p[(0, 0)], C64::new(1.0, 0.0));
        assert_eq!(p[(1, 1)], C64::new(0.0, 0.0));
        let (p, _) = projector_pair(&X_AXIS);
        assert!((p - CMat2::from_element(C64::new(0.5, 0.0))).norm() < 1e-15);
    }

    #[test]
    fn grid_contains_axes() {
        let ms = MeasurementSet::bloch_grid(DEFAULT_GRID_RESOLUTION).unwrap();
        assert_eq!(ms.len(), 1 + 31 * 64);
        let has = |t: [f64; 3]| ms.directions().iter().any(|d| (0..3).all(|k| (d[k] - t[k]).abs() < 1e-15));
        assert!(has(Z_AXIS) && has(X_AXIS));
        assert!(MeasurementSet::bloch_grid(1).is_err());
        assert!(MeasurementSet::custom(vec![]).is_err());
    }

    #[test]
    fn eigenvectors_match_projectors() {
        for n in MeasurementSet::bloch_grid(4).unwrap().directions() {
            let [up, down] = eigenvectors(n);
            let (p, q) = projector_pair(n);
            let outer = |v: [C64; 2]| CMat2::from_fn(|i, j| v[i] * v[j].conj());
            let pad = |m: CMat2| {
                let mut big = crate::linalg::CMat4::zeros();
                big.fixed_view_mut::<2, 2>(0, 0).copy_from(&m);
                big
            };
            assert!(max_abs_diff(&pad(outer(up)), &pad(p)) < 1e-14);
            assert!(max_abs_diff(&pad(outer(down)), &pad(q)) < 1e-14);
        }
    }

    #[test]
    fn z_x_incompatibility_is_one_bit() {
        assert_eq!(incompatibility_bits(&Z_AXIS, &X_AXIS), 1.0);
        assert_eq!(incompatibility_bits(&Z_AXIS, &Z_AXIS), 0.0);
    }
}
