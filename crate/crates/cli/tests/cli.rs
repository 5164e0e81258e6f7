// Copyright 2026 The lme-wtype Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use lme_core::json::WireFormat;
use lme_core::lme::{LmeCertificate, Verdict};
use lme_core::qcore::{DensityMatrix, PureState};
use lme_core::search::{SearchConfig, SearchResult};
use lme_core::spectra::TraceDecomposition;
use lme_core::wtype::WTypeParams;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let mut argv = vec!["lme"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = lme_cli::run(argv, &mut out, &mut err);
    let stdout = String::from_utf8(out).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (code, json, String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> Value {
    let (code, json, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}, stdout: {json}");
    assert_eq!(json["version"], lme_cli::VERSION);
    json
}

const HALF_WEIGHT_STATE: &str = r#"{"n":3,"amps":[[0,0],[0.7071067811865476,0],[0.5,0],[0,0],[0.5,0],[0,0],[0,0],[0,0]]}"#;
const HALF_WEIGHT_CERT: &str = r#"{"n":3,"unitaries":[
    [[[0,0],[0,1]],[[0,-1],[0,0]]],
    [[[0,0],[1,0]],[[1,0],[0,0]]],
    [[[1,0],[0,0]],[[0,0],[-1,0]]]]}"#;

#[test]
fn state_outputs_validate() {
    let r = ok(&["state", "--w", "4"]);
    let s = PureState::from_json_value(r["outputs"]["state"].clone()).unwrap();
    assert_eq!(s.n_qubits(), 4);
    let r = ok(&["state", "--n", "3", "--x", "0", "--c", "0.25,0.25,0.5"]);
    assert_eq!(r["inputs"]["params"]["c"][2], 0.5);
    PureState::from_json_value(r["outputs"]["state"].clone()).unwrap();
    let r = ok(&["state", "--params", r#"{"n":3,"x":0.1,"c":[0.3,0.3,0.3]}"#]);
    WTypeParams::from_json_value(r["inputs"]["params"].clone()).unwrap();
}

#[test]
fn reduce_reports_closed_form_and_trace_decomposition() {
    let r = ok(&["reduce", "--n", "3", "--x", "0.5", "--c", "0.16666666666666666,0.16666666666666666,0.16666666666666669"]);
    let q1 = &r["outputs"]["qubits"][0];
    let closed = DensityMatrix::from_json_value(q1["closed_form"].clone()).unwrap();
    let generic = DensityMatrix::from_json_value(q1["partial_trace"].clone()).unwrap();
    assert!(closed.matrix().distance(generic.matrix()) < 1e-12);
    assert_eq!(q1["degenerate"], false);
    TraceDecomposition::from_json_value(r["outputs"]["trace_decomposition"].clone()).unwrap();

    let r = ok(&["reduce", "--state", HALF_WEIGHT_STATE, "--qubit", "3"]);
    assert_eq!(r["outputs"]["qubits"].as_array().unwrap().len(), 1);
    let (code, json, _) = run(&["reduce", "--state", HALF_WEIGHT_STATE, "--qubit", "4"]);
    assert_eq!(code, 1);
    assert_eq!(json["error"]["kind"], "IndexOutOfRange");
}

#[test]
fn construct_rejects_bad_angles_with_domain_error() {
    let (code, json, _) = run(&["construct", "--c1", "0.25", "--c2", "0.25", "--alpha1", "0", "--alpha2", "0"]);
    assert_eq!(code, 1);
    assert_eq!(json["error"]["kind"], "AngleConstraintViolated");
    let (code, json, _) = run(&["construct", "--c1", "0.3", "--c2", "0.3", "--alpha1", "1.5707963267948966", "--alpha2", "0"]);
    assert_eq!(code, 1);
    assert_eq!(json["error"]["kind"], "InvalidWeights");
}

#[test]
fn construct_exact_angles_are_not_snapped() {
    let r = ok(&["construct", "--c1", "0.3", "--c2", "0.2", "--alpha1", "4.71238898038469", "--alpha2", "3.141592653589793"]);
    assert_eq!(r["outputs"]["snapped"], false);
    assert_eq!(r["outputs"]["valid"], true);
    LmeCertificate::from_json_value(r["outputs"]["certificate"].clone()).unwrap();
}

#[test]
fn verify_and_protocol_accept_inline_json() {
    let r = ok(&["verify", "--state", HALF_WEIGHT_STATE, "--cert", HALF_WEIGHT_CERT]);
    assert_eq!(r["outputs"]["valid"], true);
    assert!(r["outputs"]["residual"].as_f64().unwrap() < 1e-12);
    assert_eq!(r["outputs"]["maximally_entangled"], true);

    let r = ok(&["protocol", "--state", HALF_WEIGHT_STATE, "--cert", HALF_WEIGHT_CERT]);
    let joint = PureState::from_json_value(r["outputs"]["protocol_state"].clone()).unwrap();
    assert_eq!(joint.n_qubits(), 6);
    assert!(r["outputs"]["flatness"].as_f64().unwrap() < 1e-12);
}

#[test]
fn verify_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("s.json");
    let cert = dir.path().join("c.json");
    std::fs::write(&state, HALF_WEIGHT_STATE).unwrap();
    std::fs::write(&cert, HALF_WEIGHT_CERT).unwrap();
    let r = ok(&["verify", "--state", state.to_str().unwrap(), "--cert", cert.to_str().unwrap()]);
    assert_eq!(r["outputs"]["valid"], true);
    let (code, json, _) = run(&["verify", "--state", "/nonexistent/s.json", "--cert", HALF_WEIGHT_CERT]);
    assert_eq!(code, 1);
    assert_eq!(json["error"]["kind"], "Io");
}

#[test]
fn obstruct_verdicts_parse() {
    for c in ["0.25,0.25,0.25,0.25", "0.5,0.125,0.125,0.125,0.125", "0.25,0.25,0.5", "0.3,0.3,0.4"] {
        let r = ok(&["obstruct", "--c", c]);
        Verdict::from_json_value(r["outputs"]["verdict"].clone()).unwrap();
    }
    let r = ok(&["obstruct", "--c", "0.5,0.125,0.125,0.125,0.125"]);
    assert_eq!(r["outputs"]["verdict"]["obstruction"]["case"], "UniqueDegenerate");
    assert_eq!(r["outputs"]["verdict"]["obstruction"]["degenerate_qubit"], 1);
}

#[test]
fn search_is_deterministic_and_thread_independent() {
    let args = ["search", "--w", "3", "--restarts", "4", "--seed", "42", "--max-iters", "300"];
    let a = ok(&args);
    let b = ok(&args);
    assert_eq!(a, b);
    assert_eq!(a["seed"], 42);
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "3"]);
    assert_eq!(ok(&threaded)["outputs"], a["outputs"]);
    SearchResult::from_json_value(a["outputs"]["result"].clone()).unwrap();
    SearchConfig::from_json_value(a["inputs"]["config"].clone()).unwrap();
}

#[test]
fn search_config_file_and_overrides() {
    let r = ok(&["search", "--c", "0.25,0.25,0.5", "--config", r#"{"restarts":16,"seed":3}"#, "--restarts", "8"]);
    assert_eq!(r["inputs"]["config"]["restarts"], 8);
    assert_eq!(r["seed"], 3);
    assert!(r["outputs"]["result"]["certificate"].is_object());
}

#[test]
fn classify_reports_verdicts() {
    let r = ok(&["classify", "--c", "0.3,0.2,0.5"]);
    assert_eq!(r["outputs"]["verdict"]["kind"], "CertifiedLme");
    let r = ok(&["classify", "--n", "4", "--c", "0.25,0.25,0.25,0.25"]);
    assert_eq!(r["outputs"]["verdict"]["kind"], "Obstructed");
    let r = ok(&["classify", "--x", "0.1", "--c", "0.3,0.3,0.3", "--restarts", "4", "--seed", "1"]);
    let kind = r["outputs"]["verdict"]["kind"].as_str().unwrap();
    assert!(kind == "Inconclusive" || kind == "CertifiedLme");
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["nope"][..], &["construct", "--c1", "0.25"], &["state", "--w", "three"], &[]] {
        let (code, json, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(json, Value::Null);
        assert!(!err.is_empty());
    }
    let (code, json, _) = run(&["search", "--restarts", "2"]);
    assert_eq!(code, 1);
    assert_eq!(json["error"]["kind"], "InvalidArguments");
}

#[test]
fn help_exits_zero() {
    let (code, _, err) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(err.is_empty());
}

#[test]
fn fuzz_corpus_argument_vectors_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/cli_args");
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let argv = std::iter::once("lme").chain(text.split('\0'));
        assert!(lme_cli::parse_args(argv).is_ok(), "{text:?}");
    }
}
