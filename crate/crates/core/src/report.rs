//! Every applicable measure of one state, as a serializable record.

use serde::Serialize;

use crate::coherence::{
    correlated_coherence, interaction_information, mutual_information, subsystem_name, MeasureKind, Partition,
};
use crate::error::Result;
use crate::monogamy::{
    monogamy_gap, strong_subadditivity_gap, theorem2_condition, tripartite_tradeoff_gap, weak_tradeoff_gap,
    Theorem2Check,
};
use crate::state::DensityMatrix;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerKind {
    pub l1: f64,
    pub re: f64,
    pub ire: f64,
}

impl PerKind {
    fn try_from_fn(mut f: impl FnMut(MeasureKind) -> Result<f64>) -> Result<Self> {
        Ok(Self {
            l1: f(MeasureKind::L1)?,
            re: f(MeasureKind::RelativeEntropy)?,
            ire: f(MeasureKind::IntrinsicRelativeEntropy)?,
        })
    }

    pub fn get(&self, kind: MeasureKind) -> f64 {
        match kind {
            MeasureKind::L1 => self.l1,
            MeasureKind::RelativeEntropy => self.re,
            MeasureKind::IntrinsicRelativeEntropy => self.ire,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionValue<T> {
    pub partition: String,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripartiteReport {
    pub interaction_information: f64,
    /// Monogamy gap per pivot (`A`, `B`, `C`), per measure.
    pub monogamy_gap: Vec<PartitionValue<PerKind>>,
    pub tradeoff_gap: PerKind,
    pub weak_tradeoff_gap_l1: f64,
    pub strong_subadditivity_gap: f64,
    pub theorem2: Vec<Theorem2Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub state: String,
    pub dims: Vec<usize>,
    pub entropy: f64,
    pub coherence: PerKind,
    /// Correlated coherence for every partition (singletons only beyond three subsystems).
    pub correlated_coherence: Vec<PartitionValue<PerKind>>,
    pub mutual_information: Vec<PartitionValue<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tripartite: Option<TripartiteReport>,
}

impl MeasureReport {
    pub fn compute(rho: &DensityMatrix, descriptor: impl Into<String>) -> Result<Self> {
        let n = rho.num_subsystems();
        let partitions = match n {
            1 => Vec::new(),
            2 | 3 => Partition::enumerate(n),
            _ => vec![Partition::singletons(n)?],
        };

        let mut correlated = Vec::new();
        let mut mutual = Vec::new();
        for part in &partitions {
            correlated.push(PartitionValue {
                partition: part.to_string(),
                value: PerKind::try_from_fn(|k| correlated_coherence(k, rho, part))?,
            });
            if part.is_bipartite() {
                mutual.push(PartitionValue {
                    partition: part.to_string(),
                    value: mutual_information(rho, part)?,
                });
            }
        }

        let tripartite = if n == 3 {
            Some(TripartiteReport {
                interaction_information: interaction_information(rho)?,
                monogamy_gap: (0..3)
                    .map(|p| {
                        Ok(PartitionValue {
                            partition: subsystem_name(p),
                            value: PerKind::try_from_fn(|k| Ok(monogamy_gap(k, rho, p)?.gap))?,
                        })
                    })
                    .collect::<Result<_>>()?,
                tradeoff_gap: PerKind::try_from_fn(|k| Ok(tripartite_tradeoff_gap(k, rho)?.gap))?,
                weak_tradeoff_gap_l1: weak_tradeoff_gap(rho)?.gap,
                strong_subadditivity_gap: strong_subadditivity_gap(rho)?.gap,
                theorem2: (0..3).map(|s| theorem2_condition(rho, s)).collect::<Result<_>>()?,
            })
        } else {
            None
        };

        Ok(Self {
            state: descriptor.into(),
            dims: rho.dims().to_vec(),
            entropy: rho.entropy(),
            coherence: PerKind::try_from_fn(|k| Ok(k.measure(rho)))?,
            correlated_coherence: correlated,
            mutual_information: mutual,
            tripartite,
        })
    }

    pub fn mutual_information(&self, partition: &str) -> Option<f64> {
        self.mutual_information
            .iter()
            .find(|p| p.partition == partition)
            .map(|p| p.value)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{classical_bits, phi_pe};

    #[test]
    fn classical_bits_report() {
        let r = MeasureReport::compute(&classical_bits(), "classical_bits").unwrap();
        assert!((r.mutual_information("A|BC").unwrap() - 1.0).abs() < 1e-10);
        assert_eq!(r.coherence.l1, 0.0);
        assert_eq!(r.correlated_coherence.len(), 4);
        assert_eq!(r.mutual_information.len(), 3);
        assert!((r.tripartite.unwrap().interaction_information + 1.0).abs() < 1e-10);
    }

    #[test]
    fn phi_report_monogamy() {
        let rho = phi_pe(1.0, 0.5).unwrap().to_density();
        let r = MeasureReport::compute(&rho, "phi_pe").unwrap();
        let t = r.tripartite.unwrap();
        assert!((t.monogamy_gap[0].value.l1 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn single_and_many_subsystems() {
        let one = DensityMatrix::maximally_mixed(vec![3]).unwrap();
        let r = MeasureReport::compute(&one, "").unwrap();
        assert!(r.correlated_coherence.is_empty() && r.tripartite.is_none());
        let four = DensityMatrix::maximally_mixed(vec![2; 4]).unwrap();
        let r = MeasureReport::compute(&four, "").unwrap();
        assert_eq!(r.correlated_coherence.len(), 1);
        assert!(r.mutual_information.is_empty());
    }
}
