//! Browser bindings for the demo page: JSON strings in, JSON strings
//! out, so the page never holds Rust objects across calls.
//!
//! The logic lives in plain-Rust `*_inner` functions, which the host
//! test suite exercises directly; the `#[wasm_bindgen]` wrappers only
//! translate errors. Suite runs execute single-threaded in the browser
//! and report `wall_time_ms: 0` (no monotonic clock on this target),
//! which is exactly the canonical report form.

use nestlab::{analyze_instance, list_claims, list_suites, Instance, SuiteSpec};
use wasm_bindgen::prelude::*;

fn fail(error: impl std::fmt::Display) -> JsError {
    JsError::new(&error.to_string())
}

/// Analyzes one instance document (`{"kind": "nest" | "nest_pair" |
/// "relation" | "family" | "topology", ...}`) and returns the full
/// analysis as pretty JSON.
#[wasm_bindgen]
pub fn analyze(instance_json: &str) -> Result<String, JsError> {
    analyze_inner(instance_json).map_err(fail)
}

fn analyze_inner(instance_json: &str) -> nestlab::Result<String> {
    let instance: Instance = serde_json::from_str(instance_json)?;
    Ok(analyze_instance(&instance)?.to_json())
}

/// Runs one suite described by a serialized suite spec (`{"suite_id": ...,
/// "max_n": ..., "mode": "exhaustive" | "sampled", ...}`) and returns
/// the report as pretty JSON.
#[wasm_bindgen]
pub fn run_suite(spec_json: &str) -> Result<String, JsError> {
    run_suite_inner(spec_json).map_err(fail)
}

fn run_suite_inner(spec_json: &str) -> nestlab::Result<String> {
    let spec: SuiteSpec = serde_json::from_str(spec_json)?;
    Ok(nestlab::run_suite(&spec, 1)?.to_json())
}

/// Scans a claim for counterexamples up to the given size and returns
/// the report as pretty JSON.
#[wasm_bindgen]
pub fn search(claim_id: &str, max_n: usize) -> Result<String, JsError> {
    search_inner(claim_id, max_n).map_err(fail)
}

fn search_inner(claim_id: &str, max_n: usize) -> nestlab::Result<String> {
    Ok(nestlab::search_counterexample(claim_id, max_n, None)?.to_json())
}

/// The suite and claim catalogs, for populating the page's selectors.
#[wasm_bindgen]
pub fn catalog() -> String {
    let suites: Vec<serde_json::Value> = list_suites()
        .iter()
        .map(|s| {
            serde_json::json!({
                "id": s.id,
                "kind": s.kind.name(),
                "exhaustive_cap": s.exhaustive_cap,
                "supports_sampling": s.supports_sampling,
                "summary": s.summary,
            })
        })
        .collect();
    let claims: Vec<serde_json::Value> = list_claims()
        .iter()
        .map(|c| {
            serde_json::json!({
                "id": c.id,
                "kind": c.kind.name(),
                "cap": c.cap,
                "summary": c.summary,
            })
        })
        .collect();
    let mut text =
        serde_json::to_string_pretty(&serde_json::json!({ "suites": suites, "claims": claims }))
            .expect("catalog serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_handles_families_and_relations() {
        let nest =
            analyze_inner(r#"{"kind":"nest","universe":["a","b","c"],"sets":[["a"],["a","b"]]}"#)
                .unwrap();
        assert!(nest.contains("\"is_nest\": true"));
        assert!(nest.contains("\"t0_separating\": true"));

        let relation =
            analyze_inner(r#"{"kind":"relation","universe":["a","b"],"pairs":[["a","b"]]}"#)
                .unwrap();
        assert!(relation.contains("\"transitive\": true"));
        assert!(relation.contains("\"condition1\""));

        assert!(analyze_inner("not json").is_err());
        assert!(analyze_inner(r#"{"kind":"nest","universe":["a"],"sets":[["z"]]}"#).is_err());
    }

    #[test]
    fn suite_runs_report_through_json() {
        let report =
            run_suite_inner(r#"{"suite_id":"NESTORD","max_n":2,"mode":"exhaustive"}"#).unwrap();
        let value: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(value["instances_checked"], 18);
        assert_eq!(value["failures"].as_array().unwrap().len(), 0);

        assert!(run_suite_inner(r#"{"suite_id":"NOPE","max_n":2,"mode":"exhaustive"}"#).is_err());
    }

    #[test]
    fn searches_report_their_status() {
        let report = search_inner("T4-forward", 2).unwrap();
        let value: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(value["status"], "exhausted");
        assert_eq!(value["failures"].as_array().unwrap().len(), 0);

        assert!(search_inner("NOPE", 2).is_err());
    }

    #[test]
    fn catalog_lists_every_suite_and_claim() {
        let value: serde_json::Value = serde_json::from_str(&catalog()).unwrap();
        assert_eq!(value["suites"].as_array().unwrap().len(), 13);
        assert_eq!(value["claims"].as_array().unwrap().len(), 3);
        assert_eq!(value["suites"][0]["id"], "NESTORD");
    }
}
