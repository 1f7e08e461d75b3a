//! Seeded random states.
//!
//! All generators are `ChaCha20Rng` seeded from an explicit `u64`, so a seed
//! reproduces the same state on every run and platform of the same build.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{checked_side, DensityMatrix, Operator, PureState, MAX_SIDE};
use crate::error::{Error, Result};

fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn complex_gaussian(rng: &mut ChaCha20Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

/// Sub-seed for sample `index` of a run seeded with `seed` (SplitMix64 finalizer).
///
/// Depends only on `(seed, index)`, so samples can be evaluated in any order.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes, normalized.
pub fn haar_random_pure(dims: &[usize], seed: u64) -> Result<PureState> {
    let side = checked_side(dims, MAX_SIDE)?;
    let mut rng = rng(seed);
    let amps: Vec<Complex64> = (0..side).map(|_| complex_gaussian(&mut rng)).collect();
    PureState::normalized(dims.to_vec(), amps)
}

/// Ginibre-ensemble mixed state `G G† / Tr(G G†)` with `G` of shape `D × rank`.
pub fn ginibre_random_mixed(dims: &[usize], rank: usize, seed: u64) -> Result<DensityMatrix> {
    let side = checked_side(dims, MAX_SIDE)?;
    if rank == 0 || rank > side {
        return Err(Error::InvalidRank { rank, side });
    }
    let mut rng = rng(seed);
    let g = DMatrix::from_fn(side, rank, |_, _| complex_gaussian(&mut rng));
    let gg = &g * g.adjoint();
    let tr = gg.trace().re;
    let m = DMatrix::from_fn(side, side, |i, j| {
        if i == j {
            Complex64::new(gg[(i, i)].re / tr, 0.0)
        } else {
            (gg[(i, j)] + gg[(j, i)].conj()) * (0.5 / tr)
        }
    });
    Ok(DensityMatrix::from_trusted(Operator::new(dims.to_vec(), m)?))
}

/// Haar-random unitary of size `side` (QR of a Ginibre matrix with phase fix).
pub fn random_unitary(side: usize, seed: u64) -> Result<DMatrix<Complex64>> {
    if side == 0 || side > MAX_SIDE {
        return Err(Error::InvalidDims(format!("unitary side {side}")));
    }
    let mut rng = rng(seed);
    let z = DMatrix::from_fn(side, side, |_, _| complex_gaussian(&mut rng));
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for k in 0..side {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..side {
            q[(i, k)] *= phase;
        }
    }
    Ok(q)
}
