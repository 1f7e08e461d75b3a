//! Coherence measures, correlated coherence and monogamy checks for dense
//! multipartite density matrices.
//!
//! - [`state`]: operators, partial trace, dephasing, entropy, random states, JSON files
//! - [`coherence`]: l1 / relative-entropy / intrinsic measures and their correlated versions
//! - [`families`]: the named three-qubit families
//! - [`monogamy`]: gap reports for every monogamy and trade-off relation, plus a randomized probe
//! - [`suite`]: the bundled verification suite
//!
//! ```
//! use corrcoh::{families, monogamy, coherence::MeasureKind};
//!
//! let rho = families::phi_pe(1.0, 0.5).unwrap().to_density();
//! let gap = monogamy::monogamy_gap(MeasureKind::L1, &rho, 0).unwrap();
//! assert!((gap.gap - 1.0).abs() < 1e-9);
//! ```

pub mod coherence;
pub mod error;
pub mod families;
pub mod monogamy;
pub mod report;
pub mod state;
pub mod suite;

pub use coherence::{MeasureKind, Partition};
pub use error::{Error, Invariant, Result};
pub use monogamy::{GapReport, SearchSummary};
pub use state::{DensityMatrix, Operator, PureState, Subsystems};
