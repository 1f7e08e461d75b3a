//! JSON state files.
//!
//! ```json
//! { "dims": [2, 2], "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]] }
//! { "dims": [2],    "vector": [[0.7071067811865476, 0], [0.7071067811865476, 0]] }
//! ```
//!
//! Each complex entry is a `[re, im]` pair; matrices are lists of rows.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{checked_side, validate_density, DensityMatrix, Operator, PureState, MAX_SIDE};
use crate::error::{Error, Result};

/// Norm slack accepted for vectors read from files; they are renormalized afterwards.
pub const FILE_NORM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<[f64; 2]>>,
}

/// A parsed but not yet validated state.
#[derive(Debug, Clone)]
pub enum LoadedState {
    Mixed(Operator),
    Pure(PureState),
}

impl LoadedState {
    pub fn dims(&self) -> &[usize] {
        match self {
            LoadedState::Mixed(op) => op.dims(),
            LoadedState::Pure(psi) => psi.dims(),
        }
    }

    /// Validates a matrix state; pure states are density matrices by construction.
    pub fn into_density(self, tol: f64) -> Result<DensityMatrix> {
        match self {
            LoadedState::Mixed(op) => validate_density(&op, tol),
            LoadedState::Pure(psi) => Ok(psi.to_density()),
        }
    }
}

fn c([re, im]: [f64; 2]) -> Complex64 {
    Complex64::new(re, im)
}

fn pair(z: &Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl StateFile {
    pub fn from_density(rho: &DensityMatrix) -> Self {
        Self::from_operator(rho.operator())
    }

    pub fn from_operator(op: &Operator) -> Self {
        let m = op.matrix();
        let rows = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| pair(&m[(i, j)])).collect())
            .collect();
        Self {
            dims: op.dims().to_vec(),
            matrix: Some(rows),
            vector: None,
        }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            dims: psi.dims().to_vec(),
            matrix: None,
            vector: Some(psi.amplitudes().iter().map(pair).collect()),
        }
    }

    pub fn into_state(self) -> Result<LoadedState> {
        let side = checked_side(&self.dims, MAX_SIDE)?;
        match (self.matrix, self.vector) {
            (Some(rows), None) => {
                if rows.len() != side {
                    return Err(Error::Parse(format!(
                        "matrix has {} rows but dims {:?} require {side}",
                        rows.len(),
                        self.dims
                    )));
                }
                if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != rows.len()) {
                    return Err(Error::Parse(format!(
                        "matrix is not square: row {i} has {} entries, expected {}",
                        row.len(),
                        rows.len()
                    )));
                }
                let m = DMatrix::from_fn(side, side, |i, j| c(rows[i][j]));
                Ok(LoadedState::Mixed(Operator::new(self.dims, m)?))
            }
            (None, Some(vector)) => {
                if vector.len() != side {
                    return Err(Error::Parse(format!(
                        "vector has {} entries but dims {:?} require {side}",
                        vector.len(),
                        self.dims
                    )));
                }
                let amps: Vec<Complex64> = vector.into_iter().map(c).collect();
                let psi = PureState::with_tolerance(self.dims.clone(), amps, FILE_NORM_TOL)?;
                let amps = psi.amplitudes().iter().copied().collect();
                Ok(LoadedState::Pure(PureState::normalized(self.dims, amps)?))
            }
            (Some(_), Some(_)) => Err(Error::Parse("both `matrix` and `vector` given".into())),
            (None, None) => Err(Error::Parse("one of `matrix` or `vector` is required".into())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("state file serializes")
    }
}

pub fn parse_state(json: &str) -> Result<LoadedState> {
    let file: StateFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_state()
}
