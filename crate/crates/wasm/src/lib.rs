//! Browser bindings. Every export takes `.hg` text and returns a JSON
//! string; failures come back as `{"error": "..."}`.

use serde_json::json;
use wasm_bindgen::prelude::*;

use hyperspec::battery::analyze;
use hyperspec::connectivity::CutCertifier;
use hyperspec::format::{parse_hg, to_hg_string};
use hyperspec::report::{to_json, AnalysisReport, CutJson, SpectrumJson, SubsetJson};
use hyperspec::{generators, spectral, Hypergraph};

fn respond(result: Result<String, String>) -> String {
    result.unwrap_or_else(|e| to_json(&json!({ "error": e })))
}

fn parse(text: &str) -> Result<Hypergraph, String> {
    parse_hg(text).map_err(|e| e.to_string())
}

fn numbers(params: &str) -> Result<Vec<usize>, String> {
    params
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("not a number: {s}")))
        .collect()
}

/// `.hg` text for a named family: `complete` (n, k), `star` (k, r),
/// `kpartite` (sizes…) or `random` (n, m, kmin, kmax, seed).
#[wasm_bindgen]
pub fn generate(family: &str, params: &str) -> String {
    respond((|| {
        let p = numbers(params)?;
        let h = match (family, p.as_slice()) {
            ("complete", &[n, k]) => generators::complete_k_graph(n, k),
            ("star", &[k, r]) => generators::star_k_graph(k, r),
            ("kpartite", sizes) => generators::complete_k_partite(sizes),
            ("random", &[n, m, kmin, kmax, seed]) => {
                generators::random_hypergraph(n, m, kmin, kmax, seed as u64)
            }
            _ => return Err(format!("bad family or parameters: {family} {params}")),
        }
        .map_err(|e| e.to_string())?;
        Ok(to_json(
            &json!({ "hg": to_hg_string(&h, Some(&format!("{family} {params}"))) }),
        ))
    })())
}

/// Laplacian spectrum and connectivity.
#[wasm_bindgen]
pub fn spectrum(hg: &str) -> String {
    respond((|| {
        let h = parse(hg)?;
        let s = spectral::laplacian_spectrum(&h).map_err(|e| e.to_string())?;
        let check = spectral::connectivity_check(&h, &s);
        Ok(to_json(&SpectrumJson::new("page", &h, &s, &check)))
    })())
}

/// Full analysis: bounds, cuts, sweep and any violated claims.
#[wasm_bindgen]
pub fn verify(hg: &str) -> String {
    respond((|| {
        let h = parse(hg)?;
        let a = analyze(&h).map_err(|e| e.to_string())?;
        Ok(to_json(&AnalysisReport::new("page", &h, &a)))
    })())
}

/// Boundary of a comma-separated label subset against its spectral bounds.
#[wasm_bindgen]
pub fn cut(hg: &str, subset: &str) -> String {
    respond((|| {
        let h = parse(hg)?;
        let vertices = subset
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|l| h.index_of(l).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let cert = CutCertifier::new(&h).map_err(|e| e.to_string())?;
        let report = cert.report(&vertices).map_err(|e| e.to_string())?;
        Ok(to_json(&SubsetJson {
            cut: CutJson::new(&h, &report),
            density_bounds: cert.edge_density_bounds(&vertices).ok().map(Into::into),
        }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNIFORM: &str = "1 2 3\n2 3 4\n4 5 6\n1 5 6\n";

    fn value(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn generated_text_round_trips_into_spectrum() {
        let g = value(&generate("complete", "4 3"));
        let s = value(&spectrum(g["hg"].as_str().unwrap()));
        assert_eq!(s["spectrum"], json!([0.0, 8.0, 8.0, 8.0]));
    }

    #[test]
    fn verify_and_cut() {
        let v = value(&verify(UNIFORM));
        assert_eq!(v["cuts"]["maxCut"], 4);
        assert_eq!(v["hardFailures"], json!([]));
        let c = value(&cut(UNIFORM, "1, 4"));
        assert_eq!(c["cut"]["boundarySize"], 4);
    }

    #[test]
    fn errors_are_json() {
        assert!(value(&spectrum("1\n"))["error"]
            .as_str()
            .unwrap()
            .contains("line 1"));
        assert!(value(&generate("wheel", "3"))["error"].is_string());
        assert!(value(&cut(UNIFORM, "7"))["error"].is_string());
    }
}
