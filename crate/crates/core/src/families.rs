//! Named three-qubit (and two-qubit) state families.
//!
//! Each constructor is a deterministic function of its parameters. Amplitude
//! families take complex coefficients; [`real_amplitudes`] converts plain reals.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::state::{DensityMatrix, PureState};

const QUBITS3: [usize; 3] = [2, 2, 2];

/// Amplitude normalization tolerance on `Σ|λ|²`.
pub const AMPLITUDE_TOL: f64 = 1e-10;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Converts real coefficients to complex ones.
pub fn real_amplitudes<const N: usize>(re: [f64; N]) -> [Complex64; N] {
    re.map(c)
}

fn unit_interval(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::ParameterOutOfRange { name, value })
    }
}

/// Three-qubit state with amplitude `coeffs[k]` on flat index `slots[k]`.
fn sparse_three_qubit(slots: &[usize], coeffs: &[Complex64]) -> Result<PureState> {
    let weight: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
    if !weight.is_finite() || (weight - 1.0).abs() > AMPLITUDE_TOL {
        return Err(Error::NotNormalized { norm: weight.sqrt() });
    }
    let mut amps = vec![c(0.0); 8];
    for (&slot, &z) in slots.iter().zip(coeffs) {
        amps[slot] += z;
    }
    PureState::new(QUBITS3.to_vec(), amps)
}

/// `½(|000⟩⟨000| + |111⟩⟨111|)`: perfectly correlated classical bits.
pub fn classical_bits() -> DensityMatrix {
    let mut p = [0.0; 8];
    p[0] = 0.5;
    p[7] = 0.5;
    DensityMatrix::diagonal(QUBITS3.to_vec(), &p).expect("valid diagonal state")
}

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell_pair() -> PureState {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    PureState::new(vec![2, 2], vec![c(h), c(0.0), c(0.0), c(h)]).expect("normalized")
}

/// `x(|00⟩_AB + |11⟩_AB)|j⟩_C + √(1−x²)(|00⟩_AC + |11⟩_AC)|j⟩_B`, divided by its norm.
///
/// `x = 1` correlates A with B only; `x = 0` correlates A with C only.
pub fn x_interpolation(x: f64, j: u8) -> Result<PureState> {
    let x = unit_interval("x", x)?;
    if j > 1 {
        return Err(Error::ParameterOutOfRange { name: "j", value: j as f64 });
    }
    let j = j as usize;
    let s = (1.0 - x * x).sqrt();
    let mut amps = vec![c(0.0); 8];
    // |a b c⟩ ↦ 4a + 2b + c
    amps[j] += c(x);
    amps[6 + j] += c(x);
    amps[2 * j] += c(s);
    amps[5 + 2 * j] += c(s);
    PureState::normalized(QUBITS3.to_vec(), amps)
}

/// `a000|000⟩ + a100|100⟩`.
pub fn jiang_counterexample(a000: Complex64, a100: Complex64) -> Result<PureState> {
    sparse_three_qubit(&[0, 4], &[a000, a100])
}

/// `λ1|000⟩ + λ2|001⟩ + λ3|010⟩ + λ4|100⟩ + λ5|111⟩`.
pub fn ghzw(l: [Complex64; 5]) -> Result<PureState> {
    sparse_three_qubit(&[0, 1, 2, 4, 7], &l)
}

/// `√(pε)|000⟩ + √(p(1−ε))|111⟩ + √((1−p)/2)(|110⟩ + |101⟩)`.
pub fn phi_pe(p: f64, eps: f64) -> Result<PureState> {
    let (p, eps) = (unit_interval("p", p)?, unit_interval("epsilon", eps)?);
    let side = ((1.0 - p) / 2.0).sqrt();
    sparse_three_qubit(
        &[0, 7, 6, 5],
        &[c((p * eps).sqrt()), c((p * (1.0 - eps)).sqrt()), c(side), c(side)],
    )
}

/// `√(pε)|000⟩ + √(p(1−ε))|111⟩ + √((1−p)/2)(|100⟩ + |011⟩)`.
pub fn psi_pe(p: f64, eps: f64) -> Result<PureState> {
    let (p, eps) = (unit_interval("p", p)?, unit_interval("epsilon", eps)?);
    let side = ((1.0 - p) / 2.0).sqrt();
    sparse_three_qubit(
        &[0, 7, 4, 3],
        &[c((p * eps).sqrt()), c((p * (1.0 - eps)).sqrt()), c(side), c(side)],
    )
}

/// `λ1|000⟩ + λ2|011⟩ + λ3|100⟩ + λ4|111⟩`.
pub fn acin_four(l: [Complex64; 4]) -> Result<PureState> {
    sparse_three_qubit(&[0, 3, 4, 7], &l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    ClassicalBits,
    BellPair,
    XInterpolation,
    JiangCounterexample,
    Ghzw,
    PhiPe,
    PsiPe,
    AcinFour,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::ClassicalBits,
        Family::BellPair,
        Family::XInterpolation,
        Family::JiangCounterexample,
        Family::Ghzw,
        Family::PhiPe,
        Family::PsiPe,
        Family::AcinFour,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::ClassicalBits => "classical_bits",
            Family::BellPair => "bell_pair",
            Family::XInterpolation => "x_interpolation",
            Family::JiangCounterexample => "jiang",
            Family::Ghzw => "ghzw",
            Family::PhiPe => "phi_pe",
            Family::PsiPe => "psi_pe",
            Family::AcinFour => "acin_four",
        }
    }

    /// Number of complex amplitudes for amplitude families.
    fn amplitude_count(self) -> Option<usize> {
        match self {
            Family::JiangCounterexample => Some(2),
            Family::Ghzw => Some(5),
            Family::AcinFour => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family tag together with its printed parameters.
///
/// Amplitude families (`jiang`, `ghzw`, `acin_four`) accept either `N` real
/// coefficients or `2N` numbers read as `re, im` pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyParams {
    pub family: Family,
    pub params: Vec<f64>,
}

impl FamilyParams {
    pub fn new(family: Family, params: Vec<f64>) -> Self {
        Self { family, params }
    }

    pub fn descriptor(&self) -> String {
        if self.params.is_empty() {
            return self.family.tag().to_string();
        }
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}({})", self.family, ps.join(","))
    }

    fn expect_count(&self, counts: &[usize]) -> Result<()> {
        if counts.contains(&self.params.len()) {
            return Ok(());
        }
        let expected: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
        Err(Error::ParamCount {
            family: self.family.tag(),
            expected: expected.join(" or "),
            found: self.params.len(),
        })
    }

    fn amplitudes(&self, n: usize) -> Result<Vec<Complex64>> {
        self.expect_count(&[n, 2 * n])?;
        Ok(if self.params.len() == n {
            self.params.iter().map(|&x| c(x)).collect()
        } else {
            self.params.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect()
        })
    }

    /// The state vector, or `None` for the mixed `classical_bits` family.
    pub fn pure_state(&self) -> Result<Option<PureState>> {
        let p = &self.params;
        let psi = match self.family {
            Family::ClassicalBits => {
                self.expect_count(&[0])?;
                return Ok(None);
            }
            Family::BellPair => {
                self.expect_count(&[0])?;
                bell_pair()
            }
            Family::XInterpolation => {
                self.expect_count(&[2])?;
                let j = if p[1] == 0.0 {
                    0
                } else if p[1] == 1.0 {
                    1
                } else {
                    return Err(Error::ParameterOutOfRange { name: "j", value: p[1] });
                };
                x_interpolation(p[0], j)?
            }
            Family::PhiPe => {
                self.expect_count(&[2])?;
                phi_pe(p[0], p[1])?
            }
            Family::PsiPe => {
                self.expect_count(&[2])?;
                psi_pe(p[0], p[1])?
            }
            fam => {
                let n = fam.amplitude_count().expect("amplitude family");
                let a = self.amplitudes(n)?;
                match fam {
                    Family::JiangCounterexample => jiang_counterexample(a[0], a[1])?,
                    Family::Ghzw => ghzw([a[0], a[1], a[2], a[3], a[4]])?,
                    Family::AcinFour => acin_four([a[0], a[1], a[2], a[3]])?,
                    _ => unreachable!(),
                }
            }
        };
        Ok(Some(psi))
    }

    pub fn density(&self) -> Result<DensityMatrix> {
        Ok(match self.pure_state()? {
            Some(psi) => psi.to_density(),
            None => classical_bits(),
        })
    }
}
