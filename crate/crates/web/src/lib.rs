//! Browser bindings for the demo page in `www/`.
//!
//! Each export has a plain-Rust twin returning `Result<_, String>` so the logic
//! is testable natively; the `#[wasm_bindgen]` wrappers only convert errors.

use corrcoh::coherence::MeasureKind;
use corrcoh::families::{phi_pe, psi_pe, Family, FamilyParams};
use corrcoh::monogamy::{conjecture_search, monogamy_gap};
use corrcoh::report::MeasureReport;
use wasm_bindgen::prelude::*;

/// Largest grid side accepted from the page.
pub const MAX_STEPS: u32 = 401;

/// Largest probe size accepted from the page (no threads in the browser).
pub const MAX_SAMPLES: u32 = 20_000;

/// Monogamy gap over `steps × steps` points of `[0,1]²`, row-major with `p` outer.
pub fn surface(family: &str, steps: u32, measure: &str) -> Result<Vec<f64>, String> {
    let build = match family.parse::<Family>().map_err(|e| e.to_string())? {
        Family::PhiPe => phi_pe,
        Family::PsiPe => psi_pe,
        other => return Err(format!("no (p, epsilon) surface for {other}")),
    };
    if !(2..=MAX_STEPS).contains(&steps) {
        return Err(format!("steps must be in 2..={MAX_STEPS}"));
    }
    let kind: MeasureKind = measure.parse()?;
    let n = steps as usize;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let p = i as f64 / (n - 1) as f64;
        for j in 0..n {
            let e = j as f64 / (n - 1) as f64;
            let rho = build(p, e).map_err(|e| e.to_string())?.to_density();
            out.push(monogamy_gap(kind, &rho, 0).map_err(|e| e.to_string())?.gap);
        }
    }
    Ok(out)
}

/// Full measure report for a family, `params` comma-separated.
pub fn measure(family: &str, params: &str) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: corrcoh::Error| e.to_string())?;
    let params = params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("bad number {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let fp = FamilyParams::new(family, params);
    let rho = fp.density().map_err(|e| e.to_string())?;
    let report = MeasureReport::compute(&rho, fp.descriptor()).map_err(|e| e.to_string())?;
    Ok(report.to_json_pretty())
}

/// l1 monogamy probe; `dims` like `"2,2,2"`.
pub fn probe(dims: &str, samples: u32, seed: u32, pure: bool) -> Result<String, String> {
    let dims = dims
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad dimension {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if dims.len() != 3 || dims.iter().any(|&d| d == 0 || d > 4) {
        return Err("dims must be three integers between 1 and 4".into());
    }
    if samples == 0 || samples > MAX_SAMPLES {
        return Err(format!("samples must be in 1..={MAX_SAMPLES}"));
    }
    let summary =
        conjecture_search(&dims, samples as usize, u64::from(seed), pure).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&summary).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn monogamy_surface(family: &str, steps: u32, measure: &str) -> Result<Vec<f64>, JsValue> {
    surface(family, steps, measure).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn measure_family(family: &str, params: &str) -> Result<String, JsValue> {
    measure(family, params).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn monogamy_probe(dims: &str, samples: u32, seed: u32, pure: bool) -> Result<String, JsValue> {
    probe(dims, samples, seed, pure).map_err(|e| JsValue::from_str(&e))
}
