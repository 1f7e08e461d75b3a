//! Coherence and correlation functionals.
//!
//! Three base measures are provided, all evaluated in the fixed product basis
//! (except the intrinsic one, which is basis independent):
//!
//! | kind | value |
//! |------|-------|
//! | [`MeasureKind::L1`] | `Σ_{j≠k} |ρ_jk|` |
//! | [`MeasureKind::RelativeEntropy`] | `S(ρ_diag) − S(ρ)` |
//! | [`MeasureKind::IntrinsicRelativeEntropy`] | `log2 D − S(ρ)` |
//!
//! Correlated coherence of a state over a partition is the measure of the
//! whole minus the measures of each block's reduced state. All three kinds
//! give non-negative values, so a result below `-ENTROPY_TOL` is reported as
//! [`Error::NumericalIntegrity`] instead of being clamped.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{DensityMatrix, Subsystems};

/// Tolerance for quantities that pass through an eigendecomposition.
pub const ENTROPY_TOL: f64 = 1e-9;

/// Tolerance for entrywise algebraic identities.
pub const ALGEBRAIC_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeasureKind {
    L1,
    RelativeEntropy,
    IntrinsicRelativeEntropy,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 3] = [
        MeasureKind::L1,
        MeasureKind::RelativeEntropy,
        MeasureKind::IntrinsicRelativeEntropy,
    ];

    /// Short tag used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            MeasureKind::L1 => "l1",
            MeasureKind::RelativeEntropy => "re",
            MeasureKind::IntrinsicRelativeEntropy => "ire",
        }
    }

    pub fn measure(self, rho: &DensityMatrix) -> f64 {
        match self {
            MeasureKind::L1 => l1_coherence(rho),
            MeasureKind::RelativeEntropy => relative_entropy_coherence(rho),
            MeasureKind::IntrinsicRelativeEntropy => intrinsic_re_coherence(rho),
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for MeasureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "l1" => Ok(MeasureKind::L1),
            "re" => Ok(MeasureKind::RelativeEntropy),
            "ire" => Ok(MeasureKind::IntrinsicRelativeEntropy),
            other => Err(format!("unknown measure `{other}` (expected l1, re or ire)")),
        }
    }
}

/// Disjoint blocks of subsystems covering `0..n`, at least two of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Subsystems>,
}

impl Partition {
    pub fn new(blocks: Vec<Subsystems>) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::InvalidPartition(format!(
                "need at least 2 blocks, got {}",
                blocks.len()
            )));
        }
        let mut seen: Vec<usize> = blocks.iter().flat_map(|b| b.positions().iter().copied()).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("blocks overlap".into()));
        }
        if seen.iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::InvalidPartition(format!(
                "blocks do not cover 0..{}",
                seen.len()
            )));
        }
        Ok(Self { blocks })
    }

    /// `{0}, {1}, …, {n-1}`.
    pub fn singletons(n: usize) -> Result<Self> {
        Self::new((0..n).map(Subsystems::single).collect())
    }

    /// `{pivot} | rest` on `n` subsystems.
    pub fn cut(pivot: usize, n: usize) -> Result<Self> {
        if pivot >= n {
            return Err(Error::InvalidPartition(format!("pivot {pivot} out of range for {n} subsystems")));
        }
        let single = Subsystems::single(pivot);
        let rest = single
            .complement(n)
            .ok_or_else(|| Error::InvalidPartition("a cut needs at least 2 subsystems".into()))?;
        Self::new(vec![single, rest])
    }

    /// `block | complement` on `n` subsystems.
    pub fn bipartition(block: Subsystems, n: usize) -> Result<Self> {
        block.check_against(n)?;
        let rest = block
            .complement(n)
            .ok_or_else(|| Error::InvalidPartition("block covers every subsystem".into()))?;
        Self::new(vec![block, rest])
    }

    pub fn blocks(&self) -> &[Subsystems] {
        &self.blocks
    }

    pub fn num_subsystems(&self) -> usize {
        self.blocks.iter().map(Subsystems::len).sum()
    }

    pub fn is_bipartite(&self) -> bool {
        self.blocks.len() == 2
    }

    fn check_against(&self, rho: &DensityMatrix) -> Result<()> {
        if self.num_subsystems() != rho.num_subsystems() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} subsystems, state has {}",
                self.num_subsystems(),
                rho.num_subsystems()
            )));
        }
        Ok(())
    }

    /// Every partition of `0..n` into at least two blocks, blocks ordered by
    /// their smallest element.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        fn grow(k: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if k == n {
                out.push(cur.clone());
                return;
            }
            for b in 0..cur.len() {
                cur[b].push(k);
                grow(k + 1, n, cur, out);
                cur[b].pop();
            }
            cur.push(vec![k]);
            grow(k + 1, n, cur, out);
            cur.pop();
        }
        let mut raw = Vec::new();
        grow(0, n, &mut Vec::new(), &mut raw);
        raw.into_iter()
            .filter(|p| p.len() >= 2)
            .map(|p| {
                Partition::new(p.into_iter().map(|b| Subsystems::new(b).expect("sorted")).collect())
                    .expect("valid partition")
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.positions().iter().map(|&p| subsystem_name(p)).collect())
            .collect();
        f.write_str(&names.join("|"))
    }
}

/// `A`, `B`, `C`, … for positions 0, 1, 2, …
pub fn subsystem_name(position: usize) -> String {
    match u8::try_from(position) {
        Ok(p) if p < 26 => char::from(b'A' + p).to_string(),
        _ => format!("S{position}"),
    }
}

fn non_negative(quantity: impl FnOnce() -> String, value: f64) -> Result<f64> {
    if value < -ENTROPY_TOL {
        return Err(Error::NumericalIntegrity {
            quantity: quantity(),
            value,
            tolerance: ENTROPY_TOL,
        });
    }
    Ok(value)
}

/// Sum of the moduli of all off-diagonal entries.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let side = m.nrows();
    let mut total = 0.0;
    for i in 0..side {
        for j in 0..side {
            if i != j {
                total += m[(i, j)].norm();
            }
        }
    }
    total
}

/// `S(ρ_diag) − S(ρ)` in bits.
pub fn relative_entropy_coherence(rho: &DensityMatrix) -> f64 {
    rho.dephase().entropy() - rho.entropy()
}

/// Relative entropy to the maximally mixed state, `log2 D − S(ρ)`.
pub fn intrinsic_re_coherence(rho: &DensityMatrix) -> f64 {
    (rho.side() as f64).log2() - rho.entropy()
}

pub fn coherence(kind: MeasureKind, rho: &DensityMatrix) -> f64 {
    kind.measure(rho)
}

/// `C(ρ) − Σ_blocks C(ρ_block)`.
pub fn correlated_coherence(kind: MeasureKind, rho: &DensityMatrix, partition: &Partition) -> Result<f64> {
    partition.check_against(rho)?;
    let mut value = kind.measure(rho);
    for block in partition.blocks() {
        value -= kind.measure(&rho.partial_trace(block)?);
    }
    non_negative(|| format!("correlated {kind} coherence over {partition}"), value)
}

/// `S(ρ_X) + S(ρ_Y) − S(ρ_XY)` across a two-block partition.
pub fn mutual_information(rho: &DensityMatrix, cut: &Partition) -> Result<f64> {
    partition_check_bipartite(cut)?;
    cut.check_against(rho)?;
    let [x, y] = [&cut.blocks()[0], &cut.blocks()[1]];
    let value = rho.partial_trace(x)?.entropy() + rho.partial_trace(y)?.entropy() - rho.entropy();
    non_negative(|| format!("mutual information across {cut}"), value)
}

fn partition_check_bipartite(cut: &Partition) -> Result<()> {
    if !cut.is_bipartite() {
        return Err(Error::InvalidPartition(format!(
            "expected 2 blocks, got {}",
            cut.blocks().len()
        )));
    }
    Ok(())
}

pub(crate) fn require_tripartite(rho: &DensityMatrix) -> Result<()> {
    if rho.num_subsystems() != 3 {
        return Err(Error::WrongSubsystemCount {
            expected: 3,
            found: rho.num_subsystems(),
        });
    }
    Ok(())
}

/// Entropy of the reduced state on `positions`.
pub fn marginal_entropy(rho: &DensityMatrix, positions: &[usize]) -> Result<f64> {
    if positions.len() == rho.num_subsystems() {
        return Ok(rho.entropy());
    }
    Ok(rho.partial_trace(&Subsystems::new(positions.to_vec())?)?.entropy())
}

/// `S(AB) + S(AC) + S(BC) − S(ABC) − S(A) − S(B) − S(C)`; may be negative.
pub fn interaction_information(rho: &DensityMatrix) -> Result<f64> {
    require_tripartite(rho)?;
    let s = |p: &[usize]| marginal_entropy(rho, p);
    Ok(s(&[0, 1])? + s(&[0, 2])? + s(&[1, 2])?
        - s(&[0, 1, 2])?
        - s(&[0])?
        - s(&[1])?
        - s(&[2])?)
}

/// Correlated coherence between `pivot` and the other two subsystems taken as
/// a unit: `C(ρ_ABC) − C(ρ_pivot) − C(ρ_rest)`.
pub fn cut_correlated_coherence(kind: MeasureKind, rho: &DensityMatrix, pivot: usize) -> Result<f64> {
    require_tripartite(rho)?;
    correlated_coherence(kind, rho, &Partition::cut(pivot, 3)?)
}
