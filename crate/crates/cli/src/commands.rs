use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use corrcoh::families::{Family, FamilyParams};
use corrcoh::monogamy::{conjecture_search, monogamy_gap};
use corrcoh::report::MeasureReport;
use corrcoh::state::io::{parse_state, StateFile};
use corrcoh::state::DENSITY_TOL;
use corrcoh::suite::{check_state, failed_row, run_suite, SuiteConfig};
use corrcoh::DensityMatrix;

use crate::{MeasureArgs, SearchArgs, StateSource, SweepArgs, VerifyArgs};

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Resolves a state source to `(descriptor, density matrix)`.
fn load(source: &StateSource, tol: f64) -> Result<(String, DensityMatrix)> {
    match (&source.family, &source.state_file) {
        (Some(tag), None) => {
            let family: Family = tag.parse()?;
            let fp = FamilyParams::new(family, source.params.clone());
            Ok((fp.descriptor(), fp.density()?))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let rho = parse_state(&text)
                .and_then(|s| s.into_density(tol))
                .with_context(|| format!("state file {}", path.display()))?;
            Ok((path.display().to_string(), rho))
        }
        (None, None) => bail!("one of --family or --state-file is required"),
        (Some(_), Some(_)) => bail!("--family and --state-file are mutually exclusive"),
    }
}

pub fn measure(args: &MeasureArgs) -> Result<ExitCode> {
    let (desc, rho) = load(&args.source, args.tolerance)?;
    let report = MeasureReport::compute(&rho, desc)?;
    if let Some(path) = &args.dump_state {
        let text = StateFile::from_density(&rho).to_json();
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut text = report.to_json_pretty();
    text.push('\n');
    emit(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn sweep(args: &SweepArgs) -> Result<ExitCode> {
    let family: Family = args.family.parse()?;
    let build = match family {
        Family::PhiPe => corrcoh::families::phi_pe,
        Family::PsiPe => corrcoh::families::psi_pe,
        other => bail!("sweep supports phi_pe and psi_pe, not {other}"),
    };
    let steps = args.grid_steps as usize;
    let axis: Vec<f64> = (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect();
    let mut csv = String::with_capacity(steps * steps * 32);
    csv.push_str("p,epsilon,M\n");
    for &p in &axis {
        for &e in &axis {
            let rho = build(p, e)?.to_density();
            let m = monogamy_gap(args.measure, &rho, args.pivot)?.gap;
            csv.push_str(&format!("{p},{e},{m}\n"));
        }
    }
    emit(args.out.as_deref(), &csv)?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let cfg = SuiteConfig {
        samples: args.samples,
        seed: args.seed,
        tolerance: args.tolerance,
        grid_steps: args.grid_steps as usize,
    };
    let mut report = run_suite(&cfg);
    if args.source.family.is_some() || args.source.state_file.is_some() {
        match load(&args.source, DENSITY_TOL) {
            Ok((desc, rho)) => check_state(&desc, &rho, args.tolerance)
                .into_iter()
                .for_each(|row| report.push(row)),
            Err(e) => {
                let name = args
                    .source
                    .state_file
                    .as_ref()
                    .map(|p| p.display().to_string())
                    .or_else(|| args.source.family.clone())
                    .unwrap_or_default();
                report.push(failed_row(
                    format!("{name}: load and validate"),
                    &corrcoh::Error::Parse(format!("{e:#}")),
                ));
            }
        }
    }
    print!("{}", report.to_table());
    if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&report)?;
        fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

pub fn search(args: &SearchArgs) -> Result<ExitCode> {
    if args.dims.len() != 3 || args.dims.contains(&0) {
        bail!("--dims needs three positive integers, got {:?}", args.dims);
    }
    let samples = usize::try_from(args.samples)?;
    let summary = conjecture_search(&args.dims, samples, args.seed, !args.mixed)?;
    if summary.violations > 0 {
        eprintln!(
            "note: {} of {} samples violate l1 monogamy (min gap {}, reproduce with seed {})",
            summary.violations, summary.samples, summary.min_gap, summary.argmin_seed
        );
    }
    let text = serde_json::to_string_pretty(&summary)? + "\n";
    emit(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}
