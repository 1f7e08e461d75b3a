//! Monogamy and trade-off gaps for correlated coherence.
//!
//! Every check yields a [`GapReport`] holding both sides of a relation, the raw
//! gap `lhs − rhs` and whether it holds at the stated tolerance. Gaps are never
//! clamped.

use serde::Serialize;

use crate::coherence::{
    coherence, correlated_coherence, cut_correlated_coherence, marginal_entropy, mutual_information,
    require_tripartite, MeasureKind, Partition, ENTROPY_TOL,
};
use crate::error::{Error, Result};
use crate::state::{derive_seed, ginibre_random_mixed, haar_random_pure, DensityMatrix, Subsystems};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `lhs ≥ rhs`
    Inequality,
    /// `lhs = rhs`
    Equality,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub relation_name: String,
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub state_descriptor: String,
}

impl GapReport {
    pub fn new(relation_name: impl Into<String>, relation: Relation, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let gap = lhs - rhs;
        let passed = match relation {
            Relation::Inequality => gap >= -tolerance,
            Relation::Equality => gap.abs() <= tolerance,
        };
        Self {
            relation_name: relation_name.into(),
            relation,
            lhs,
            rhs,
            gap,
            tolerance,
            passed,
            state_descriptor: String::new(),
        }
    }

    pub fn inequality(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::new(name, Relation::Inequality, lhs, rhs, tolerance)
    }

    pub fn equality(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::new(name, Relation::Equality, lhs, rhs, tolerance)
    }

    pub fn describe(mut self, descriptor: impl Into<String>) -> Self {
        self.state_descriptor = descriptor.into();
        self
    }

    /// Re-evaluates `passed` at another tolerance.
    pub fn with_tolerance(self, tolerance: f64) -> Self {
        let d = self.state_descriptor.clone();
        Self::new(self.relation_name, self.relation, self.lhs, self.rhs, tolerance).describe(d)
    }

    /// Signed slack: positive when the relation holds with room to spare.
    pub fn margin(&self) -> f64 {
        match self.relation {
            Relation::Inequality => self.gap + self.tolerance,
            Relation::Equality => self.tolerance - self.gap.abs(),
        }
    }

    pub const CSV_HEADER: &'static str = "relation_name,relation,lhs,rhs,gap,tolerance,passed,state_descriptor";

    pub fn to_csv_row(&self) -> String {
        let rel = match self.relation {
            Relation::Inequality => "inequality",
            Relation::Equality => "equality",
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            csv_field(&self.relation_name),
            rel,
            self.lhs,
            self.rhs,
            self.gap,
            self.tolerance,
            self.passed,
            csv_field(&self.state_descriptor)
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn pair(a: usize, b: usize) -> Subsystems {
    Subsystems::new(if a < b { vec![a, b] } else { vec![b, a] }).expect("distinct positions")
}

/// Correlated coherence of the two-party reduced state on `{a, b}`.
fn pair_correlated(kind: MeasureKind, rho: &DensityMatrix, a: usize, b: usize) -> Result<f64> {
    let reduced = rho.partial_trace(&pair(a, b))?;
    correlated_coherence(kind, &reduced, &Partition::singletons(2)?)
}

/// `C(ABC) + ΣC(α) − ΣC(αβ)` from raw (uncorrelated) coherences.
fn raw_tradeoff_expression(kind: MeasureKind, rho: &DensityMatrix) -> Result<f64> {
    let mut value = coherence(kind, rho);
    for p in 0..3 {
        value += coherence(kind, &rho.partial_trace(&Subsystems::single(p))?);
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        value -= coherence(kind, &rho.partial_trace(&pair(a, b))?);
    }
    Ok(value)
}

fn others(pivot: usize) -> (usize, usize) {
    match pivot {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// `C^c(ρ_{p|rest}) ≥ C^c(ρ_{p,o1}) + C^c(ρ_{p,o2})` for pivot `p`.
///
/// The gap is cross-checked against `C(ABC) + ΣC(α) − ΣC(αβ)`; a mismatch
/// beyond `ENTROPY_TOL` is a [`Error::NumericalIntegrity`].
pub fn monogamy_gap(kind: MeasureKind, rho: &DensityMatrix, pivot: usize) -> Result<GapReport> {
    require_tripartite(rho)?;
    if pivot >= 3 {
        return Err(Error::InvalidSelection(format!("pivot {pivot} out of range")));
    }
    let (o1, o2) = others(pivot);
    let lhs = cut_correlated_coherence(kind, rho, pivot)?;
    let rhs = pair_correlated(kind, rho, pivot, o1)? + pair_correlated(kind, rho, pivot, o2)?;
    let report = GapReport::inequality(
        format!("monogamy[{kind}, pivot {}]", crate::coherence::subsystem_name(pivot)),
        lhs,
        rhs,
        ENTROPY_TOL,
    );
    let identity = raw_tradeoff_expression(kind, rho)?;
    if (identity - report.gap).abs() > ENTROPY_TOL {
        return Err(Error::NumericalIntegrity {
            quantity: format!("monogamy identity residual [{kind}]"),
            value: identity - report.gap,
            tolerance: ENTROPY_TOL,
        });
    }
    Ok(report)
}

/// `C^c(ρ_ABC) ≥ C^c(ρ_AB) + C^c(ρ_AC) + C^c(ρ_BC)`.
pub fn tripartite_tradeoff_gap(kind: MeasureKind, rho: &DensityMatrix) -> Result<GapReport> {
    require_tripartite(rho)?;
    let lhs = correlated_coherence(kind, rho, &Partition::singletons(3)?)?;
    let mut rhs = 0.0;
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        rhs += pair_correlated(kind, rho, a, b)?;
    }
    Ok(GapReport::inequality(format!("tripartite trade-off[{kind}]"), lhs, rhs, ENTROPY_TOL))
}

/// `C^c_l1(ρ_ABC) ≥ ½(C^c_l1(ρ_AB) + C^c_l1(ρ_AC) + C^c_l1(ρ_BC))`, valid for every state.
pub fn weak_tradeoff_gap(rho: &DensityMatrix) -> Result<GapReport> {
    let kind = MeasureKind::L1;
    require_tripartite(rho)?;
    let lhs = correlated_coherence(kind, rho, &Partition::singletons(3)?)?;
    let mut pairs = 0.0;
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        pairs += pair_correlated(kind, rho, a, b)?;
    }
    Ok(GapReport::inequality("weak trade-off[l1, 1/2]", lhs, 0.5 * pairs, ENTROPY_TOL))
}

/// Both sides of `C_l1(ρ_s) = Σ_{i≠l} |Σ_rest ρ_{i·,l·}| ≤ Σ_{i≠l} Σ_rest |ρ_{i·,l·}|`
/// for subsystem `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theorem2Check {
    pub subsystem: usize,
    /// `C_l1` of the reduced state.
    pub reduced_l1: f64,
    /// Sum of moduli of the entries that feed the reduced off-diagonals.
    pub entry_sum: f64,
    /// `entry_sum − reduced_l1`, non-negative by the triangle inequality.
    pub residual: f64,
    pub holds: bool,
}

/// Tolerance on the residual of [`theorem2_condition`].
pub const THEOREM2_TOL: f64 = 1e-10;

/// Evaluates the sufficient condition for l1 monogamy on `subsystem`.
pub fn theorem2_condition(rho: &DensityMatrix, subsystem: usize) -> Result<Theorem2Check> {
    require_tripartite(rho)?;
    if subsystem >= 3 {
        return Err(Error::InvalidSelection(format!("subsystem {subsystem} out of range")));
    }
    let reduced_l1 = crate::coherence::l1_coherence(&rho.partial_trace(&Subsystems::single(subsystem))?);

    let dims = rho.dims();
    let stride: usize = dims[subsystem + 1..].iter().product();
    let d = dims[subsystem];
    let m = rho.matrix();
    let mut entry_sum = 0.0;
    for row in 0..rho.side() {
        let i = (row / stride) % d;
        for l in (0..d).filter(|&l| l != i) {
            let col = row + l * stride - i * stride;
            entry_sum += m[(row, col)].norm();
        }
    }
    let residual = entry_sum - reduced_l1;
    Ok(Theorem2Check {
        subsystem,
        reduced_l1,
        entry_sum,
        residual,
        holds: residual.abs() <= THEOREM2_TOL,
    })
}

/// `0 ≤ C^c_re(ρ_XY) ≤ I(X:Y)` across a bipartition.
pub fn re_bound_check(rho: &DensityMatrix, cut: &Partition) -> Result<(GapReport, GapReport)> {
    let cc = correlated_coherence(MeasureKind::RelativeEntropy, rho, cut)?;
    let mi = mutual_information(rho, cut)?;
    Ok((
        GapReport::inequality(format!("C^c_re >= 0 [{cut}]"), cc, 0.0, ENTROPY_TOL),
        GapReport::inequality(format!("I >= C^c_re [{cut}]"), mi, cc, ENTROPY_TOL),
    ))
}

/// `C^Ic(ABC) − C^Ic(AB) − C^Ic(AC) ≥ 0`, which equals `S(AB) + S(AC) − S(ABC) − S(A)`.
pub fn strong_subadditivity_gap(rho: &DensityMatrix) -> Result<GapReport> {
    let kind = MeasureKind::IntrinsicRelativeEntropy;
    require_tripartite(rho)?;
    let lhs = correlated_coherence(kind, rho, &Partition::singletons(3)?)?;
    let rhs = pair_correlated(kind, rho, 0, 1)? + pair_correlated(kind, rho, 0, 2)?;
    Ok(GapReport::inequality("strong subadditivity[ire]", lhs, rhs, ENTROPY_TOL))
}

/// `S(AB) + S(AC) − S(ABC) − S(A)` straight from entropies.
pub fn conditional_mutual_information(rho: &DensityMatrix) -> Result<f64> {
    require_tripartite(rho)?;
    let s = |p: &[usize]| marginal_entropy(rho, p);
    Ok(s(&[0, 1])? + s(&[0, 2])? - s(&[0, 1, 2])? - s(&[0])?)
}

/// Intrinsic correlated coherence across a bipartition equals the mutual information.
pub fn theorem5_check(rho: &DensityMatrix, cut: &Partition) -> Result<GapReport> {
    let cc = correlated_coherence(MeasureKind::IntrinsicRelativeEntropy, rho, cut)?;
    let mi = mutual_information(rho, cut)?;
    Ok(GapReport::equality(format!("C^Ic_re = I [{cut}]"), cc, mi, ENTROPY_TOL))
}

/// Result of a randomized probe of l1 monogamy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchSummary {
    pub samples: usize,
    pub min_gap: f64,
    /// Seed that regenerates the minimizing state (pass it to the sampler directly).
    pub argmin_seed: u64,
    pub argmin_index: usize,
    pub violations: usize,
    pub dims: Vec<usize>,
    pub tolerance: f64,
    pub pure: bool,
}

/// State drawn for sample `index` of a search.
pub fn search_sample(dims: &[usize], seed: u64, index: usize, pure: bool) -> Result<(u64, DensityMatrix)> {
    let sub = derive_seed(seed, index as u64);
    let rho = if pure {
        haar_random_pure(dims, sub)?.to_density()
    } else {
        let side = dims.iter().product();
        ginibre_random_mixed(dims, side, sub)?
    };
    Ok((sub, rho))
}

fn sample_gap(dims: &[usize], seed: u64, index: usize, pure: bool) -> Result<(f64, u64)> {
    let (sub, rho) = search_sample(dims, seed, index, pure)?;
    Ok((monogamy_gap(MeasureKind::L1, &rho, 0)?.gap, sub))
}

/// Draws `samples` random tripartite states (Haar pure or full-rank Ginibre)
/// and records the l1 monogamy gap with pivot A for each.
pub fn conjecture_search(dims: &[usize], samples: usize, seed: u64, pure: bool) -> Result<SearchSummary> {
    if dims.len() != 3 {
        return Err(Error::WrongSubsystemCount {
            expected: 3,
            found: dims.len(),
        });
    }
    if samples == 0 {
        return Err(Error::NoSamples);
    }

    #[cfg(feature = "parallel")]
    let gaps: Vec<(f64, u64)> = {
        use rayon::prelude::*;
        (0..samples)
            .into_par_iter()
            .map(|i| sample_gap(dims, seed, i, pure))
            .collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let gaps: Vec<(f64, u64)> = (0..samples)
        .map(|i| sample_gap(dims, seed, i, pure))
        .collect::<Result<_>>()?;

    let (argmin_index, &(min_gap, argmin_seed)) = gaps
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .0.total_cmp(&b.1 .0))
        .expect("at least one sample");
    let violations = gaps.iter().filter(|(g, _)| *g < -ENTROPY_TOL).count();
    Ok(SearchSummary {
        samples,
        min_gap,
        argmin_seed,
        argmin_index,
        violations,
        dims: dims.to_vec(),
        tolerance: ENTROPY_TOL,
        pure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{acin_four, classical_bits, jiang_counterexample, phi_pe, real_amplitudes};
    use crate::state::PureState;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn report_pass_rules() {
        assert!(GapReport::inequality("x", 1.0, 1.0 + 5e-10, 1e-9).passed);
        assert!(!GapReport::inequality("x", 1.0, 1.0 + 2e-9, 1e-9).passed);
        assert!(GapReport::equality("x", 1.0, 1.0 - 5e-10, 1e-9).passed);
        assert!(!GapReport::equality("x", 1.0, 0.9, 1e-9).passed);
        let r = GapReport::inequality("a,b", 1.0, 0.0, 0.0).describe("phi_pe(1,0.5)");
        assert_eq!(r.to_csv_row(), "\"a,b\",inequality,1,0,1,0,true,\"phi_pe(1,0.5)\"");
    }

    #[test]
    fn jiang_gap_is_zero() {
        let rho = jiang_counterexample(Complex64::new(H, 0.0), Complex64::new(H, 0.0))
            .unwrap()
            .to_density();
        let r = monogamy_gap(MeasureKind::L1, &rho, 0).unwrap();
        assert!(r.gap.abs() < 1e-12, "{}", r.gap);
    }

    #[test]
    fn phi_gap_closed_form() {
        for (p, e) in [(1.0, 0.5), (0.3, 0.2), (0.7, 0.9), (0.5, 0.0)] {
            let rho = phi_pe(p, e).unwrap().to_density();
            let r = monogamy_gap(MeasureKind::L1, &rho, 0).unwrap();
            assert_abs_diff_eq!(r.gap, 2.0 * p * (e * (1.0 - e)).sqrt(), epsilon = 1e-9);
        }
    }

    #[test]
    fn theorem2_examples() {
        let phi = phi_pe(0.5, 0.5).unwrap().to_density();
        assert!(theorem2_condition(&phi, 0).unwrap().holds);

        let acin = acin_four(real_amplitudes([0.5, -0.5, 0.5, 0.5])).unwrap().to_density();
        let t = theorem2_condition(&acin, 0).unwrap();
        assert!(!t.holds);
        assert_abs_diff_eq!(t.reduced_l1, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.residual, 1.0, epsilon = 1e-12);

        let t = theorem2_condition(&classical_bits(), 1).unwrap();
        assert!(t.holds);
        assert_eq!(t.entry_sum, 0.0);
        assert!(theorem2_condition(&classical_bits(), 3).is_err());
    }

    #[test]
    fn re_bounds_for_bell() {
        let bell = crate::families::bell_pair().to_density();
        let (lo, hi) = re_bound_check(&bell, &Partition::singletons(2).unwrap()).unwrap();
        assert_abs_diff_eq!(lo.gap, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(hi.gap, 1.0, epsilon = 1e-9);
        let t5 = theorem5_check(&bell, &Partition::singletons(2).unwrap()).unwrap();
        assert_abs_diff_eq!(t5.lhs, 2.0, epsilon = 1e-9);
        assert!(t5.passed);
    }

    #[test]
    fn ssa_for_classical_bits() {
        let r = strong_subadditivity_gap(&classical_bits()).unwrap();
        assert_abs_diff_eq!(r.gap, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(conditional_mutual_information(&classical_bits()).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn single_sample_search_matches_direct_gap() {
        let s = conjecture_search(&[2, 2, 2], 1, 42, true).unwrap();
        let psi = haar_random_pure(&[2, 2, 2], s.argmin_seed).unwrap();
        let direct = monogamy_gap(MeasureKind::L1, &psi.to_density(), 0).unwrap();
        assert_eq!(s.min_gap, direct.gap);
        assert_eq!(s.argmin_seed, derive_seed(42, 0));
    }

    #[test]
    fn search_is_deterministic() {
        let a = conjecture_search(&[2, 2, 2], 50, 3, true).unwrap();
        assert_eq!(a, conjecture_search(&[2, 2, 2], 50, 3, true).unwrap());
        assert_eq!(a.violations, 0);
    }

    #[test]
    fn search_rejects_bad_input() {
        assert!(matches!(conjecture_search(&[2, 2, 2], 0, 1, true), Err(Error::NoSamples)));
        assert!(conjecture_search(&[2, 2], 5, 1, true).is_err());
    }

    #[test]
    fn mixed_search_records_violations() {
        let s = conjecture_search(&[2, 2, 2], 300, 1, false).unwrap();
        let (_, rho) = search_sample(&[2, 2, 2], 1, s.argmin_index, false).unwrap();
        assert_eq!(monogamy_gap(MeasureKind::L1, &rho, 0).unwrap().gap, s.min_gap);
        assert!(s.violations <= s.samples);
    }

    #[test]
    fn wrong_arity_is_rejected() {
        let bell = PureState::basis(vec![2, 2], &[0, 0]).unwrap().to_density();
        assert!(matches!(
            monogamy_gap(MeasureKind::L1, &bell, 0),
            Err(Error::WrongSubsystemCount { .. })
        ));
        assert!(weak_tradeoff_gap(&bell).is_err());
        assert!(tripartite_tradeoff_gap(MeasureKind::L1, &bell).is_err());
        assert!(strong_subadditivity_gap(&bell).is_err());
    }
}
