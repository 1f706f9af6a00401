//! WebAssembly bindings behind `www/index.html`.
//!
//! Each export is a thin wrapper over a plain function returning
//! `Result<_, String>`, so the numerics can be tested natively.

use kmittag_core::identities::{verify_theorem_2_1, Theorem1Params, VerifyConfig};
use kmittag_core::{ext_k_beta, ml_k, ExtBetaParams, KOrder, MLParams, QuadratureConfig, SeriesConfig};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_POINTS: usize = 2000;

fn axis(start: f64, stop: f64, count: usize) -> Result<Vec<f64>, String> {
    if !(2..=MAX_POINTS).contains(&count) {
        return Err(format!("count must lie in 2..={MAX_POINTS}, got {count}"));
    }
    if !(start.is_finite() && stop.is_finite() && start < stop) {
        return Err(format!("need finite start < stop, got {start}, {stop}"));
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| if i + 1 == count { stop } else { start + i as f64 * step })
        .collect())
}

/// `[z_0, E(z_0), z_1, E(z_1), …]` for the k-Mittag-Leffler function with `δ = p = 1`.
#[allow(clippy::too_many_arguments)]
pub fn ml_curve(
    k: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    q: f64,
    z_min: f64,
    z_max: f64,
    count: usize,
) -> Result<Vec<f64>, String> {
    let params = MLParams::new(
        KOrder::new(k).map_err(|e| e.to_string())?,
        alpha,
        beta,
        gamma,
        1.0,
        1.0,
        q,
    )
    .map_err(|e| e.to_string())?;
    let cfg = SeriesConfig::default();
    let mut out = Vec::with_capacity(2 * count);
    for z in axis(z_min, z_max, count)? {
        let r = ml_k(&params, z, &cfg).map_err(|e| e.to_string())?;
        out.extend([z, if r.converged { r.value } else { f64::NAN }]);
    }
    Ok(out)
}

/// `[A_0, B(A_0), …]` for the cutoff k-beta integral over `A ∈ [0, a_max]`.
pub fn ext_beta_curve(k: f64, x: f64, y: f64, m: f64, a_max: f64, count: usize) -> Result<Vec<f64>, String> {
    let k = KOrder::new(k).map_err(|e| e.to_string())?;
    let cfg = QuadratureConfig::default();
    let mut out = Vec::with_capacity(2 * count);
    for a in axis(0.0, a_max, count)? {
        let p = ExtBetaParams::new(k, x, y, a, m).map_err(|e| e.to_string())?;
        out.extend([a, ext_k_beta(&p, &cfg).map_err(|e| e.to_string())?.value]);
    }
    Ok(out)
}

/// One check of the Euler-type formula on (0, 1), as a JSON object.
#[allow(clippy::too_many_arguments)]
pub fn verify_euler(
    k: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    a: f64,
    b: f64,
    cutoff: f64,
    z: f64,
) -> Result<String, String> {
    let ml = MLParams::new(
        KOrder::new(k).map_err(|e| e.to_string())?,
        alpha,
        beta,
        gamma,
        1.0,
        1.0,
        1.0,
    )
    .map_err(|e| e.to_string())?;
    let p = Theorem1Params {
        ml,
        a,
        b,
        m: 1.0,
        cutoff,
        z,
    };
    let r = verify_theorem_2_1(&p, &VerifyConfig::default()).map_err(|e| e.to_string())?;
    Ok(json!({
        "status": r.status.as_str(),
        "lhs": r.lhs.value,
        "rhs": r.rhs.value,
        "rel_err": r.rel_err,
        "ratio": r.ratio,
        "tolerance": r.tolerance,
        "lhs_evaluations": r.lhs.evaluations,
        "rhs_terms": r.rhs.inner_terms,
    })
    .to_string())
}

#[wasm_bindgen(js_name = mlCurve)]
#[allow(clippy::too_many_arguments)]
pub fn ml_curve_js(
    k: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    q: f64,
    z_min: f64,
    z_max: f64,
    count: usize,
) -> Result<Vec<f64>, JsError> {
    ml_curve(k, alpha, beta, gamma, q, z_min, z_max, count).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = extBetaCurve)]
pub fn ext_beta_curve_js(k: f64, x: f64, y: f64, m: f64, a_max: f64, count: usize) -> Result<Vec<f64>, JsError> {
    ext_beta_curve(k, x, y, m, a_max, count).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = verifyEuler)]
#[allow(clippy::too_many_arguments)]
pub fn verify_euler_js(
    k: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    a: f64,
    b: f64,
    cutoff: f64,
    z: f64,
) -> Result<String, JsError> {
    verify_euler(k, alpha, beta, gamma, a, b, cutoff, z).map_err(|e| JsError::new(&e))
}
