//! Bundled verification suite: fixed fixtures plus seeded random states for
//! every relation, aggregated into one row per relation.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::coherence::{
    correlated_coherence, interaction_information, l1_coherence, mutual_information, MeasureKind, Partition,
    ALGEBRAIC_TOL, ENTROPY_TOL,
};
use crate::error::{Error, Result};
use crate::families::{acin_four, classical_bits, ghzw, jiang_counterexample, phi_pe, psi_pe};
use crate::monogamy::{
    monogamy_gap, re_bound_check, strong_subadditivity_gap, theorem2_condition, theorem5_check,
    tripartite_tradeoff_gap, weak_tradeoff_gap, GapReport,
};
use crate::state::{derive_seed, ginibre_random_mixed, haar_random_pure, random_unitary, DensityMatrix, Subsystems};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// Random states per relation (per dims where a relation spans several).
    pub samples: usize,
    pub seed: u64,
    /// Tolerance for entropy-level relations.
    pub tolerance: f64,
    /// Points per axis for the `(p, ε)` family grids.
    pub grid_steps: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            samples: 200,
            seed: 1,
            tolerance: ENTROPY_TOL,
            grid_steps: 21,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteRow {
    pub relation: String,
    pub cases: usize,
    pub failures: usize,
    /// The report with the least slack.
    pub worst: Option<GapReport>,
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn push(&mut self, row: SuiteRow) {
        self.rows.push(row);
    }

    /// Fixed-width text table, one line per relation.
    pub fn to_table(&self) -> String {
        let width = self.rows.iter().map(|r| r.relation.len()).max().unwrap_or(8).max(8);
        let mut out = format!("{:<6} {:<width$} {:>7} {:>8} {:>24}\n", "status", "relation", "cases", "failures", "worst gap");
        for r in &self.rows {
            let worst = match (&r.worst, &r.error) {
                (_, Some(e)) => e.clone(),
                (Some(w), None) => format!("{:.6e}", w.gap),
                (None, None) => "-".into(),
            };
            out.push_str(&format!(
                "{:<6} {:<width$} {:>7} {:>8} {:>24}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.relation,
                r.cases,
                r.failures,
                worst
            ));
        }
        out
    }
}

/// Accumulates many reports for one relation.
pub struct RowBuilder {
    relation: String,
    cases: usize,
    failures: usize,
    worst: Option<GapReport>,
    error: Option<String>,
}

impl RowBuilder {
    pub fn new(relation: impl Into<String>) -> Self {
        Self {
            relation: relation.into(),
            cases: 0,
            failures: 0,
            worst: None,
            error: None,
        }
    }

    pub fn add(&mut self, report: Result<GapReport>) {
        self.cases += 1;
        match report {
            Ok(r) => {
                if !r.passed {
                    self.failures += 1;
                }
                if self.worst.as_ref().is_none_or(|w| r.margin() < w.margin()) {
                    self.worst = Some(r);
                }
            }
            Err(e) => {
                self.failures += 1;
                self.error.get_or_insert_with(|| e.to_string());
            }
        }
    }

    pub fn finish(self) -> SuiteRow {
        SuiteRow {
            passed: self.failures == 0 && self.cases > 0,
            relation: self.relation,
            cases: self.cases,
            failures: self.failures,
            worst: self.worst,
            error: self.error,
        }
    }
}

/// Failed row for a fixture that could not even be constructed.
pub fn failed_row(relation: impl Into<String>, err: &Error) -> SuiteRow {
    let mut b = RowBuilder::new(relation);
    b.add(Err(Error::Parse(err.to_string())));
    b.finish()
}

fn rng(seed: u64, stream: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(derive_seed(seed, stream))
}

fn random_amplitudes<const N: usize>(rng: &mut ChaCha20Rng, complex: bool) -> [Complex64; N] {
    let mut a = [Complex64::new(0.0, 0.0); N];
    for z in a.iter_mut() {
        *z = Complex64::new(rng.random::<f64>() - 0.5, if complex { rng.random::<f64>() - 0.5 } else { 0.0 });
    }
    let norm = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    a.map(|z| z / norm)
}

fn mixed(dims: &[usize], seed: u64, index: usize) -> Result<DensityMatrix> {
    let side: usize = dims.iter().product();
    ginibre_random_mixed(dims, 1 + index % side, derive_seed(seed, index as u64))
}

fn grid(steps: usize) -> Vec<f64> {
    (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect()
}

fn cut_ab() -> Partition {
    Partition::singletons(2).expect("two singletons")
}

/// Checks that apply to any user-supplied state.
pub fn check_state(descriptor: &str, rho: &DensityMatrix, tol: f64) -> Vec<SuiteRow> {
    let mut rows = Vec::new();
    let n = rho.num_subsystems();
    let mut t1 = RowBuilder::new(format!("{descriptor}: C^c_l1 >= 0"));
    for part in Partition::enumerate(n) {
        t1.add(
            correlated_coherence(MeasureKind::L1, rho, &part)
                .map(|v| GapReport::inequality(format!("C^c_l1 [{part}]"), v, 0.0, tol).describe(descriptor)),
        );
    }
    rows.push(t1.finish());
    if n == 2 {
        let mut b = RowBuilder::new(format!("{descriptor}: 0 <= C^c_re <= I, C^Ic = I"));
        match re_bound_check(rho, &cut_ab()) {
            Ok((lo, hi)) => {
                b.add(Ok(lo.with_tolerance(tol)));
                b.add(Ok(hi.with_tolerance(tol)));
            }
            Err(e) => b.add(Err(e)),
        }
        b.add(theorem5_check(rho, &cut_ab()).map(|r| r.with_tolerance(tol)));
        rows.push(b.finish());
    }
    if n == 3 {
        let mut b = RowBuilder::new(format!("{descriptor}: weak trade-off, SSA, identity"));
        b.add(weak_tradeoff_gap(rho).map(|r| r.with_tolerance(tol)));
        b.add(strong_subadditivity_gap(rho).map(|r| r.with_tolerance(tol)));
        for kind in MeasureKind::ALL {
            b.add(identity_report(kind, rho, tol));
        }
        rows.push(b.finish());
    }
    rows
}

/// `|monogamy gap − trade-off gap| = 0` and pivot independence, as one equality report.
fn identity_report(kind: MeasureKind, rho: &DensityMatrix, tol: f64) -> Result<GapReport> {
    let trade = tripartite_tradeoff_gap(kind, rho)?.gap;
    let mut worst = 0.0f64;
    for pivot in 0..3 {
        let m = monogamy_gap(kind, rho, pivot)?.gap;
        if (m - trade).abs() > worst.abs() {
            worst = m - trade;
        }
    }
    Ok(GapReport::equality(format!("monogamy = trade-off [{kind}]"), trade + worst, trade, tol))
}

/// Runs every relation and returns one row per relation.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let tol = cfg.tolerance;
    let n = cfg.samples;
    let mut report = SuiteReport { rows: Vec::new() };

    // classical bits: I(A:B) = I(A:C) = I(A:BC) = 1
    let mut b = RowBuilder::new("classical bits mutual information");
    let cb = classical_bits();
    for keep in [vec![0, 1], vec![0, 2]] {
        b.add(
            cb.partial_trace(&Subsystems::new(keep.clone()).expect("sorted"))
                .and_then(|r| mutual_information(&r, &cut_ab()))
                .map(|v| GapReport::equality(format!("I{keep:?}"), v, 1.0, tol).describe("classical_bits")),
        );
    }
    b.add(
        Partition::cut(0, 3)
            .and_then(|c| mutual_information(&cb, &c))
            .map(|v| GapReport::equality("I(A:BC)", v, 1.0, tol).describe("classical_bits")),
    );
    report.push(b.finish());

    // Jiang state: Yao's inequality fails by 1, correlated monogamy holds with equality
    let mut b = RowBuilder::new("jiang counterexample");
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    match jiang_counterexample(h, h).map(|p| p.to_density()) {
        Ok(rho) => {
            let l1 = |k: &[usize]| -> Result<f64> {
                Ok(l1_coherence(&rho.partial_trace(&Subsystems::new(k.to_vec())?)?))
            };
            b.add((|| {
                let yao = l1_coherence(&rho) - l1(&[0, 1])? - l1(&[0, 2])?;
                Ok(GapReport::equality("C(ABC) - C(AB) - C(AC) = -1", yao, -1.0, ALGEBRAIC_TOL))
            })());
            b.add(monogamy_gap(MeasureKind::L1, &rho, 0).map(|r| {
                GapReport::equality("l1 monogamy gap = 0", r.gap, 0.0, ALGEBRAIC_TOL).describe("jiang(1/√2,1/√2)")
            }));
        }
        Err(e) => b.add(Err(e)),
    }
    report.push(b.finish());

    // (p, ε) families
    let axis = grid(cfg.grid_steps.max(2));
    let mut phi = RowBuilder::new("phi_pe: M = 2p sqrt(e(1-e))");
    let mut psi = RowBuilder::new("psi_pe: M >= 0");
    for &p in &axis {
        for &e in &axis {
            let desc = format!("({p},{e})");
            phi.add(phi_pe(p, e).and_then(|s| monogamy_gap(MeasureKind::L1, &s.to_density(), 0)).map(|r| {
                GapReport::equality("M(p,e)", r.gap, 2.0 * p * (e * (1.0 - e)).sqrt(), tol).describe(&desc)
            }));
            psi.add(
                psi_pe(p, e)
                    .and_then(|s| monogamy_gap(MeasureKind::L1, &s.to_density(), 0))
                    .map(|r| r.with_tolerance(tol).describe(&desc)),
            );
        }
    }
    report.push(phi.finish());
    report.push(psi.finish());

    // nonnegativity of l1 correlated coherence over every partition
    let mut b = RowBuilder::new("C^c_l1 >= 0 (random mixed)");
    for dims in [&[2, 2][..], &[2, 2, 2], &[2, 3], &[3, 3]] {
        let parts = Partition::enumerate(dims.len());
        for i in 0..n {
            match mixed(dims, cfg.seed ^ 0x11, i) {
                Ok(rho) => {
                    for part in &parts {
                        b.add(correlated_coherence(MeasureKind::L1, &rho, part).map(|v| {
                            GapReport::inequality(format!("C^c_l1 [{part}]"), v, 0.0, tol).describe(format!("{dims:?}#{i}"))
                        }));
                    }
                }
                Err(e) => b.add(Err(e)),
            }
        }
    }
    report.push(b.finish());

    // sufficient condition and trade-off on the families that satisfy it
    let mut cond = RowBuilder::new("ghzw/phi_pe: sufficient condition holds");
    let mut trade = RowBuilder::new("ghzw/phi_pe: trade-off and monogamy");
    let mut r = rng(cfg.seed, 2);
    for i in 0..n {
        let states = [
            ghzw(random_amplitudes::<5>(&mut r, true)).map(|s| (format!("ghzw#{i}"), s.to_density())),
            phi_pe(r.random(), r.random()).map(|s| (format!("phi_pe#{i}"), s.to_density())),
        ];
        for st in states {
            match st {
                Ok((desc, rho)) => {
                    for s in 0..3 {
                        cond.add(theorem2_condition(&rho, s).map(|t| {
                            GapReport::equality(format!("residual[{s}]"), t.residual, 0.0, crate::monogamy::THEOREM2_TOL)
                                .describe(&desc)
                        }));
                    }
                    trade.add(tripartite_tradeoff_gap(MeasureKind::L1, &rho).map(|g| g.with_tolerance(tol).describe(&desc)));
                    trade.add(monogamy_gap(MeasureKind::L1, &rho, 0).map(|g| g.with_tolerance(tol).describe(&desc)));
                }
                Err(e) => {
                    cond.add(Err(e));
                }
            }
        }
    }
    report.push(cond.finish());
    report.push(trade.finish());

    // four-term family with complex phases
    let mut b = RowBuilder::new("acin_four (complex): l1 monogamy");
    let mut r = rng(cfg.seed, 3);
    for i in 0..n {
        b.add(
            acin_four(random_amplitudes::<4>(&mut r, true))
                .and_then(|s| monogamy_gap(MeasureKind::L1, &s.to_density(), 0))
                .map(|g| g.with_tolerance(tol).describe(format!("acin_four#{i}"))),
        );
    }
    report.push(b.finish());

    // weak trade-off for arbitrary states
    let mut b = RowBuilder::new("weak trade-off (random mixed)");
    for i in 0..n {
        b.add(
            mixed(&[2, 2, 2], cfg.seed ^ 0x22, i)
                .and_then(|rho| weak_tradeoff_gap(&rho))
                .map(|g| g.with_tolerance(tol).describe(format!("ginibre#{i}"))),
        );
    }
    report.push(b.finish());

    // monogamy gap equals trade-off gap for every measure and pivot
    let mut b = RowBuilder::new("monogamy = trade-off identity");
    for i in 0..n {
        match mixed(&[2, 2, 2], cfg.seed ^ 0x33, i) {
            Ok(rho) => {
                for kind in MeasureKind::ALL {
                    b.add(identity_report(kind, &rho, tol).map(|g| g.describe(format!("ginibre#{i}"))));
                }
            }
            Err(e) => b.add(Err(e)),
        }
    }
    report.push(b.finish());

    // bipartite relative-entropy relations
    let mut t5 = RowBuilder::new("C^Ic_re = I (bipartite)");
    let mut bounds = RowBuilder::new("0 <= C^c_re <= I (bipartite)");
    for dims in [&[2, 2][..], &[2, 3], &[3, 3]] {
        for i in 0..n {
            match mixed(dims, cfg.seed ^ 0x44, i) {
                Ok(rho) => {
                    let desc = format!("{dims:?}#{i}");
                    t5.add(theorem5_check(&rho, &cut_ab()).map(|g| g.with_tolerance(tol).describe(&desc)));
                    match re_bound_check(&rho, &cut_ab()) {
                        Ok((lo, hi)) => {
                            bounds.add(Ok(lo.with_tolerance(tol).describe(&desc)));
                            bounds.add(Ok(hi.with_tolerance(tol).describe(&desc)));
                        }
                        Err(e) => bounds.add(Err(e)),
                    }
                }
                Err(e) => t5.add(Err(e)),
            }
        }
    }
    report.push(t5.finish());
    report.push(bounds.finish());

    // pure tripartite: interaction information vanishes, intrinsic monogamy is an equality
    let mut b = RowBuilder::new("pure tripartite: T = 0, ire monogamy equality");
    for i in 0..n {
        match haar_random_pure(&[2, 2, 2], derive_seed(cfg.seed ^ 0x55, i as u64)).map(|p| p.to_density()) {
            Ok(rho) => {
                let desc = format!("haar#{i}");
                b.add(interaction_information(&rho).map(|t| GapReport::equality("T", t, 0.0, tol).describe(&desc)));
                b.add(monogamy_gap(MeasureKind::IntrinsicRelativeEntropy, &rho, 0).map(|g| {
                    GapReport::equality("ire monogamy gap", g.gap, 0.0, tol).describe(&desc)
                }));
            }
            Err(e) => b.add(Err(e)),
        }
    }
    report.push(b.finish());

    let mut b = RowBuilder::new("strong subadditivity (random mixed)");
    for i in 0..n {
        b.add(
            mixed(&[2, 2, 2], cfg.seed ^ 0x66, i)
                .and_then(|rho| strong_subadditivity_gap(&rho))
                .map(|g| g.with_tolerance(tol).describe(format!("ginibre#{i}"))),
        );
    }
    report.push(b.finish());

    // product states
    let mut b = RowBuilder::new("product identities");
    for i in 0..n {
        let res = (|| -> Result<Vec<GapReport>> {
            let ra = mixed(&[2], cfg.seed ^ 0x77, 2 * i)?;
            let rb = mixed(&[3], cfg.seed ^ 0x77, 2 * i + 1)?;
            let prod = ra.tensor(&rb)?;
            let l1 = correlated_coherence(MeasureKind::L1, &prod, &cut_ab())?;
            let re = correlated_coherence(MeasureKind::RelativeEntropy, &prod, &cut_ab())?;
            Ok(vec![
                GapReport::equality("C^c_l1 = C_l1(A) C_l1(B)", l1, l1_coherence(&ra) * l1_coherence(&rb), 1e-10),
                GapReport::equality("C^c_re = 0", re, 0.0, tol),
            ])
        })();
        match res {
            Ok(rs) => rs.into_iter().for_each(|g| b.add(Ok(g.describe(format!("product#{i}"))))),
            Err(e) => b.add(Err(e)),
        }
    }
    report.push(b.finish());

    // intrinsic coherence is unitarily invariant
    let mut b = RowBuilder::new("C^I_re basis independence");
    for i in 0..n {
        let res = (|| -> Result<GapReport> {
            let rho = mixed(&[2, 2], cfg.seed ^ 0x88, i)?;
            let u = random_unitary(4, derive_seed(cfg.seed ^ 0x99, i as u64))?;
            let rot = rho.conjugate_by(&u)?;
            let k = MeasureKind::IntrinsicRelativeEntropy;
            Ok(GapReport::equality("C^I(U rho U+) = C^I(rho)", k.measure(&rot), k.measure(&rho), tol))
        })();
        b.add(res);
    }
    report.push(b.finish());

    report
}
