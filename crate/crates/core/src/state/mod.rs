//! Dense multipartite operators and density matrices.
//!
//! Every operator carries the ordered list of its subsystem dimensions. A basis
//! label `(i1, ..., in)` maps to the flat index
//! `i1·(d2⋯dn) + i2·(d3⋯dn) + … + in`, so the first subsystem is the most
//! significant digit. Kronecker products and partial traces both follow this
//! convention.
//!
//! Entropies are measured in bits.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Invariant, Result};

pub mod io;
pub mod random;

pub use random::{derive_seed, ginibre_random_mixed, haar_random_pure, random_unitary};

/// Matrix entry and amplitude type.
pub type ComplexAmplitude = Complex64;

/// Largest operator side accepted by default.
pub const MAX_SIDE: usize = 4096;

/// Entrywise / trace / eigenvalue tolerance used when validating density matrices.
pub const DENSITY_TOL: f64 = 1e-10;

/// Norm tolerance for pure state vectors.
pub const NORM_TOL: f64 = 1e-10;

/// Eigenvalues below this are treated as exactly zero in entropy sums.
pub const ZERO_EIGENVALUE: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Product of `dims`, rejecting empty lists, zero dimensions and sides above `max_side`.
pub(crate) fn checked_side(dims: &[usize], max_side: usize) -> Result<usize> {
    if dims.is_empty() {
        return Err(Error::InvalidDims("at least one subsystem is required".into()));
    }
    let mut side = 1usize;
    for &d in dims {
        if d == 0 {
            return Err(Error::InvalidDims(format!("zero dimension in {dims:?}")));
        }
        side = side
            .checked_mul(d)
            .filter(|&s| s <= max_side)
            .ok_or(Error::SideTooLarge {
                side: dims.iter().fold(1usize, |a, &d| a.saturating_mul(d)),
                max: max_side,
            })?;
    }
    Ok(side)
}

/// Strides of each subsystem within a flat composite index.
fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// Flat-index offsets of every joint basis label of the subsystems in `positions`,
/// enumerated in big-endian order over those subsystems.
fn offsets(positions: &[usize], dims: &[usize], strides: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize];
    for &p in positions {
        let mut next = Vec::with_capacity(out.len() * dims[p]);
        for &base in &out {
            for digit in 0..dims[p] {
                next.push(base + digit * strides[p]);
            }
        }
        out = next;
    }
    out
}

/// Dense square complex matrix tagged with its subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    dims: Vec<usize>,
    matrix: DMatrix<Complex64>,
}

impl Operator {
    pub fn new(dims: Vec<usize>, matrix: DMatrix<Complex64>) -> Result<Self> {
        let side = checked_side(&dims, MAX_SIDE)?;
        if matrix.nrows() != side || matrix.ncols() != side {
            return Err(Error::ShapeMismatch {
                expected: side,
                found: if matrix.nrows() != side {
                    matrix.nrows()
                } else {
                    matrix.ncols()
                },
            });
        }
        Ok(Self { dims, matrix })
    }

    pub fn from_fn(
        dims: Vec<usize>,
        f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Self> {
        let side = checked_side(&dims, MAX_SIDE)?;
        Ok(Self {
            dims,
            matrix: DMatrix::from_fn(side, side, f),
        })
    }

    pub fn from_real_diagonal(dims: Vec<usize>, diagonal: &[f64]) -> Result<Self> {
        let side = checked_side(&dims, MAX_SIDE)?;
        if diagonal.len() != side {
            return Err(Error::ShapeMismatch {
                expected: side,
                found: diagonal.len(),
            });
        }
        Self::from_fn(dims, |i, j| {
            if i == j {
                Complex64::new(diagonal[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    pub fn identity(dims: Vec<usize>) -> Result<Self> {
        let side = checked_side(&dims, MAX_SIDE)?;
        Ok(Self {
            dims,
            matrix: DMatrix::identity(side, side),
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn side(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn scaled(&self, factor: f64) -> Operator {
        Operator {
            dims: self.dims.clone(),
            matrix: self.matrix.scale(factor),
        }
    }

    /// Reduced operator on the kept subsystems (order preserved).
    pub fn partial_trace(&self, keep: &Subsystems) -> Result<Operator> {
        let n = self.dims.len();
        keep.check_against(n)?;
        let traced: Vec<usize> = (0..n).filter(|p| !keep.contains(*p)).collect();
        let strides = strides(&self.dims);
        let kept_off = offsets(keep.positions(), &self.dims, &strides);
        let traced_off = offsets(&traced, &self.dims, &strides);

        let dk = kept_off.len();
        let mut out = DMatrix::from_element(dk, dk, ZERO);
        for (r, &ro) in kept_off.iter().enumerate() {
            for (c, &co) in kept_off.iter().enumerate() {
                let mut acc = ZERO;
                for &t in &traced_off {
                    acc += self.matrix[(ro + t, co + t)];
                }
                out[(r, c)] = acc;
            }
        }
        Ok(Operator {
            dims: keep.positions().iter().map(|&p| self.dims[p]).collect(),
            matrix: out,
        })
    }

    /// Largest entrywise deviation from hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        let side = self.side();
        let mut worst = 0.0f64;
        for i in 0..side {
            for j in i..side {
                let d = (self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Eigenvalues of the Hermitian part `(A + A†)/2`, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.matrix + self.matrix.adjoint()).scale(0.5);
        let mut ev: Vec<f64> = herm.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

/// Kronecker product `a ⊗ b` with dims concatenated.
pub fn tensor_product(a: &Operator, b: &Operator) -> Result<Operator> {
    tensor_product_capped(a, b, MAX_SIDE)
}

/// [`tensor_product`] with an explicit limit on the resulting side.
pub fn tensor_product_capped(a: &Operator, b: &Operator, max_side: usize) -> Result<Operator> {
    let dims: Vec<usize> = a.dims.iter().chain(&b.dims).copied().collect();
    checked_side(&dims, max_side)?;
    Ok(Operator {
        dims,
        matrix: a.matrix.kronecker(&b.matrix),
    })
}

/// Strictly increasing, non-empty list of subsystem positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Subsystems(Vec<usize>);

impl Subsystems {
    pub fn new(positions: impl Into<Vec<usize>>) -> Result<Self> {
        let positions = positions.into();
        if positions.is_empty() {
            return Err(Error::InvalidSelection("empty selection".into()));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSelection(format!(
                "positions {positions:?} are not strictly increasing"
            )));
        }
        Ok(Self(positions))
    }

    pub fn single(position: usize) -> Self {
        Self(vec![position])
    }

    /// Every position in `0..n`.
    pub fn all(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.binary_search(&position).is_ok()
    }

    pub fn check_against(&self, num_subsystems: usize) -> Result<()> {
        match self.0.last() {
            Some(&last) if last < num_subsystems => Ok(()),
            _ => Err(Error::InvalidSelection(format!(
                "positions {:?} out of range for {num_subsystems} subsystems",
                self.0
            ))),
        }
    }

    /// Positions of `0..n` not in this selection, or `None` when nothing remains.
    pub fn complement(&self, n: usize) -> Option<Subsystems> {
        let rest: Vec<usize> = (0..n).filter(|p| !self.contains(*p)).collect();
        (!rest.is_empty()).then_some(Subsystems(rest))
    }
}

/// Validated density operator: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    op: Operator,
}

impl DensityMatrix {
    /// Wraps an operator known to be a density matrix by construction.
    pub(crate) fn from_trusted(op: Operator) -> Self {
        Self { op }
    }

    pub fn operator(&self) -> &Operator {
        &self.op
    }

    pub fn into_operator(self) -> Operator {
        self.op
    }

    pub fn dims(&self) -> &[usize] {
        self.op.dims()
    }

    pub fn num_subsystems(&self) -> usize {
        self.op.num_subsystems()
    }

    pub fn side(&self) -> usize {
        self.op.side()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        self.op.matrix()
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Result<Self> {
        let id = Operator::identity(dims)?;
        let side = id.side() as f64;
        Ok(Self::from_trusted(id.scaled(1.0 / side)))
    }

    /// Diagonal state with the given probabilities.
    pub fn diagonal(dims: Vec<usize>, probabilities: &[f64]) -> Result<Self> {
        validate_density(
            &Operator::from_real_diagonal(dims, probabilities)?,
            DENSITY_TOL,
        )
    }

    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        tensor_product(&self.op, &other.op).map(Self::from_trusted)
    }

    pub fn partial_trace(&self, keep: &Subsystems) -> Result<DensityMatrix> {
        self.op.partial_trace(keep).map(Self::from_trusted)
    }

    /// Closest incoherent state: the diagonal of `self`.
    pub fn dephase(&self) -> DensityMatrix {
        let m = self.op.matrix();
        let side = self.side();
        let matrix = DMatrix::from_fn(side, side, |i, j| if i == j { m[(i, i)] } else { ZERO });
        Self::from_trusted(Operator {
            dims: self.op.dims.clone(),
            matrix,
        })
    }

    /// `U ρ U†` for a unitary acting on the full space.
    pub fn conjugate_by(&self, unitary: &DMatrix<Complex64>) -> Result<DensityMatrix> {
        if unitary.nrows() != self.side() || unitary.ncols() != self.side() {
            return Err(Error::ShapeMismatch {
                expected: self.side(),
                found: unitary.nrows(),
            });
        }
        let m = unitary * self.op.matrix() * unitary.adjoint();
        let side = self.side();
        // restore exact hermiticity lost to rounding
        let herm = DMatrix::from_fn(side, side, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
        Ok(Self::from_trusted(Operator {
            dims: self.op.dims.clone(),
            matrix: herm,
        }))
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.op.hermitian_eigenvalues()
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> f64 {
        if self.side() == 1 {
            return 0.0;
        }
        if is_diagonal(self.op.matrix()) {
            return shannon_bits(self.op.matrix().diagonal().iter().map(|z| z.re));
        }
        shannon_bits(self.eigenvalues())
    }
}

fn is_diagonal(m: &DMatrix<Complex64>) -> bool {
    let side = m.nrows();
    (0..side).all(|i| (0..side).all(|j| i == j || m[(i, j)] == ZERO))
}

/// `-Σ p log2 p` with values below [`ZERO_EIGENVALUE`] dropped.
///
/// A pure state can have an eigenvalue a few ulps above 1, which would make the
/// sum a tiny negative number; the result is floored at 0.
fn shannon_bits(values: impl IntoIterator<Item = f64>) -> f64 {
    let s: f64 = values
        .into_iter()
        .filter(|&p| p > ZERO_EIGENVALUE)
        .map(|p| -p * p.log2())
        .sum();
    s.max(0.0)
}

/// Von Neumann entropy `S(ρ)` in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.entropy()
}

/// Checks the density-matrix invariants, naming the first one violated.
pub fn validate_density(op: &Operator, tol: f64) -> Result<DensityMatrix> {
    if op.matrix().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Validation {
            invariant: Invariant::Hermiticity,
            magnitude: f64::INFINITY,
        });
    }
    let herm = op.hermiticity_defect();
    if herm > tol {
        return Err(Error::Validation {
            invariant: Invariant::Hermiticity,
            magnitude: herm,
        });
    }
    let trace_err = (op.trace() - Complex64::new(1.0, 0.0)).norm();
    if trace_err > tol {
        return Err(Error::Validation {
            invariant: Invariant::Trace,
            magnitude: trace_err,
        });
    }
    let min_ev = op.hermitian_eigenvalues().first().copied().unwrap_or(0.0);
    if min_ev < -tol {
        return Err(Error::Validation {
            invariant: Invariant::Positivity,
            magnitude: -min_ev,
        });
    }
    Ok(DensityMatrix::from_trusted(op.clone()))
}

/// Normalized state vector tagged with subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amplitudes: DVector<Complex64>,
}

impl PureState {
    /// Requires the Euclidean norm to be within [`NORM_TOL`] of one.
    pub fn new(dims: Vec<usize>, amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(dims, amplitudes, NORM_TOL)
    }

    pub fn with_tolerance(dims: Vec<usize>, amplitudes: Vec<Complex64>, tol: f64) -> Result<Self> {
        let side = checked_side(&dims, MAX_SIDE)?;
        if amplitudes.len() != side {
            return Err(Error::ShapeMismatch {
                expected: side,
                found: amplitudes.len(),
            });
        }
        let amplitudes = DVector::from_vec(amplitudes);
        let norm = amplitudes.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > tol {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { dims, amplitudes })
    }

    /// Divides by the Euclidean norm; fails only for a zero or non-finite vector.
    pub fn normalized(dims: Vec<usize>, amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Self::new(dims, amplitudes.into_iter().map(|z| z / norm).collect())
    }

    /// Basis vector `|label⟩` where `label` holds one digit per subsystem.
    pub fn basis(dims: Vec<usize>, label: &[usize]) -> Result<Self> {
        let side = checked_side(&dims, MAX_SIDE)?;
        if label.len() != dims.len() || label.iter().zip(&dims).any(|(l, d)| l >= d) {
            return Err(Error::InvalidSelection(format!(
                "basis label {label:?} does not fit dims {dims:?}"
            )));
        }
        let idx = label.iter().zip(&dims).fold(0, |acc, (l, d)| acc * d + l);
        let mut amps = vec![ZERO; side];
        amps[idx] = Complex64::new(1.0, 0.0);
        Self::new(dims, amps)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn to_density(&self) -> DensityMatrix {
        let m = &self.amplitudes * self.amplitudes.adjoint();
        DensityMatrix::from_trusted(Operator {
            dims: self.dims.clone(),
            matrix: m,
        })
    }
}

pub fn pure_to_density(psi: &PureState) -> DensityMatrix {
    psi.to_density()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn plus() -> PureState {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(vec![2], vec![c(h), c(h)]).unwrap()
    }

    fn bell() -> PureState {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(vec![2, 2], vec![c(h), c(0.0), c(0.0), c(h)]).unwrap()
    }

    fn ghz_mixture() -> DensityMatrix {
        let mut p = vec![0.0; 8];
        p[0] = 0.5;
        p[7] = 0.5;
        DensityMatrix::diagonal(vec![2, 2, 2], &p).unwrap()
    }

    #[test]
    fn identity_tensor_identity() {
        let i2 = Operator::identity(vec![2]).unwrap();
        let i4 = tensor_product(&i2, &i2).unwrap();
        assert_eq!(i4.dims(), &[2, 2]);
        assert_eq!(i4.matrix(), &DMatrix::<Complex64>::identity(4, 4));
    }

    #[test]
    fn basis_projector_tensor() {
        let p0 = PureState::basis(vec![2], &[0]).unwrap().to_density();
        let p1 = PureState::basis(vec![2], &[1]).unwrap().to_density();
        let p01 = PureState::basis(vec![2, 2], &[0, 1]).unwrap().to_density();
        assert_eq!(p0.tensor(&p1).unwrap(), p01);
    }

    #[test]
    fn tensor_rejects_oversized() {
        let big = Operator::identity(vec![64]).unwrap();
        let err = tensor_product_capped(&big, &big, 1000).unwrap_err();
        assert!(matches!(err, Error::SideTooLarge { max: 1000, .. }));
        assert!(tensor_product(&big, &big).is_ok());
        let huge = Operator::identity(vec![4096]).unwrap();
        assert!(tensor_product(&huge, &Operator::identity(vec![2]).unwrap()).is_err());
    }

    #[test]
    fn operator_rejects_bad_dims() {
        assert!(Operator::identity(vec![]).is_err());
        assert!(Operator::identity(vec![2, 0]).is_err());
        let m = DMatrix::<Complex64>::identity(3, 3);
        assert!(matches!(
            Operator::new(vec![2], m),
            Err(Error::ShapeMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn classical_bits_marginal() {
        let a = ghz_mixture().partial_trace(&Subsystems::single(0)).unwrap();
        assert_eq!(a.dims(), &[2]);
        assert_abs_diff_eq!(a.matrix()[(0, 0)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(a.matrix()[(1, 1)].re, 0.5, epsilon = 1e-15);
        assert_eq!(a.matrix()[(0, 1)], ZERO);
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let b = bell().to_density().partial_trace(&Subsystems::single(0)).unwrap();
        let expected = DensityMatrix::maximally_mixed(vec![2]).unwrap();
        assert!((b.matrix() - expected.matrix()).camax() < 1e-15);
    }

    #[test]
    fn selection_validation() {
        assert!(Subsystems::new(vec![]).is_err());
        assert!(Subsystems::new(vec![1, 0]).is_err());
        assert!(Subsystems::new(vec![1, 1]).is_err());
        let s = Subsystems::new(vec![0, 3]).unwrap();
        assert!(s.check_against(3).is_err());
        assert!(bell().to_density().partial_trace(&s).is_err());
        assert_eq!(Subsystems::new(vec![1]).unwrap().complement(3).unwrap().positions(), &[0, 2]);
        assert!(Subsystems::all(2).complement(2).is_none());
    }

    #[test]
    fn dephase_examples() {
        let d = DensityMatrix::diagonal(vec![3], &[0.2, 0.3, 0.5]).unwrap();
        assert_eq!(d.dephase(), d);
        let p = plus().to_density().dephase();
        let mm = DensityMatrix::maximally_mixed(vec![2]).unwrap();
        assert!((p.matrix() - mm.matrix()).camax() < 1e-15);
        let b = bell().to_density().dephase();
        let diag: Vec<f64> = b.matrix().diagonal().iter().map(|z| z.re).collect();
        for (x, y) in diag.iter().zip([0.5, 0.0, 0.0, 0.5]) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-15);
        }
        assert_eq!(b.matrix().iter().filter(|z| **z != ZERO).count(), 2);
    }

    #[test]
    fn entropy_examples() {
        assert_abs_diff_eq!(bell().to_density().entropy(), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(plus().to_density().entropy(), 0.0, epsilon = 1e-9);
        for d in 1..6 {
            let mm = DensityMatrix::maximally_mixed(vec![d]).unwrap();
            assert_abs_diff_eq!(mm.entropy(), (d as f64).log2(), epsilon = 1e-12);
        }
        assert_abs_diff_eq!(ghz_mixture().entropy(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn entropy_of_non_diagonal_mixed_state() {
        // ½|+⟩⟨+| + ½|0⟩⟨0| has eigenvalues (2 ± √2)/4
        let m = DMatrix::from_row_slice(2, 2, &[c(0.75), c(0.25), c(0.25), c(0.25)]);
        let rho = validate_density(&Operator::new(vec![2], m).unwrap(), DENSITY_TOL).unwrap();
        let s2 = std::f64::consts::SQRT_2;
        let l = [(2.0 + s2) / 4.0, (2.0 - s2) / 4.0];
        let expected: f64 = l.iter().map(|p| -p * p.log2()).sum();
        assert_abs_diff_eq!(rho.entropy(), expected, epsilon = 1e-12);
    }

    #[test]
    fn pure_to_density_examples() {
        let z = PureState::basis(vec![2], &[0]).unwrap().to_density();
        assert_eq!(z, DensityMatrix::diagonal(vec![2], &[1.0, 0.0]).unwrap());
        let p = plus().to_density();
        assert!(p.matrix().iter().all(|x| (x - c(0.5)).norm() < 1e-15));
        let b = bell().to_density();
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert_abs_diff_eq!(b.matrix()[(i, j)].re, 0.5, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(b.operator().trace().re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn pure_state_norm_checks() {
        assert!(matches!(
            PureState::new(vec![2], vec![c(1.0), c(1.0)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(PureState::normalized(vec![2], vec![c(0.0), c(0.0)]).is_err());
        let s = PureState::normalized(vec![2], vec![c(3.0), c(4.0)]).unwrap();
        assert_abs_diff_eq!(s.norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn validation_diagnostics() {
        let mm = Operator::from_real_diagonal(vec![2], &[0.5, 0.5]).unwrap();
        assert!(validate_density(&mm, DENSITY_TOL).is_ok());

        let two = Operator::from_real_diagonal(vec![2], &[1.0, 1.0]).unwrap();
        match validate_density(&two, DENSITY_TOL) {
            Err(Error::Validation { invariant: Invariant::Trace, magnitude }) => {
                assert_abs_diff_eq!(magnitude, 1.0, epsilon = 1e-15)
            }
            other => panic!("unexpected {other:?}"),
        }

        let neg = Operator::from_real_diagonal(vec![2], &[1.5, -0.5]).unwrap();
        match validate_density(&neg, DENSITY_TOL) {
            Err(Error::Validation { invariant: Invariant::Positivity, magnitude }) => {
                assert_abs_diff_eq!(magnitude, 0.5, epsilon = 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }

        let skew = DMatrix::from_row_slice(2, 2, &[c(0.5), c(0.1), c(0.0), c(0.5)]);
        match validate_density(&Operator::new(vec![2], skew).unwrap(), DENSITY_TOL) {
            Err(Error::Validation { invariant: Invariant::Hermiticity, magnitude }) => {
                assert_abs_diff_eq!(magnitude, 0.1, epsilon = 1e-15)
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
