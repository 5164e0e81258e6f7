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

//! Command line front end: one subcommand per library capability, each
//! printing a single JSON report on standard output.
//!
//! Exit codes: `0` success, `1` domain error (error JSON on stdout),
//! `2` usage error (message on stderr).

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use lme_core::json::{parse_real_list, WireFormat};
use lme_core::lme::{
    construct_certificate_3q, is_max_entangleable_via, prop1_obstruction_with_tol, protocol_state,
    verify_certificate, LmeCertificate, MAX_PROTOCOL_QUBITS,
};
use lme_core::qcore::{PureState, INPUT_TOL};
use lme_core::search::{classify, search_certificate, SearchConfig};
use lme_core::spectra::{
    eigen_gap, is_degenerate, reduced_closed_form, reduced_det, trace_decomposition, DEGENERACY_TOL,
};
use lme_core::wtype::{canonical_state, w_state, WTypeParams};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default `|cos(α1 − α2)|` below which `construct` snaps α1 onto the
/// nearest exact solution.
pub const DEFAULT_SNAP_TOL: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "lme", version, about = "Certify and probe LME W-type states; JSON reports on stdout")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a W state or a canonical W-type state.
    State(StateArgs),
    /// Reduced single-qubit states, spectra and the trace decomposition.
    Reduce(ReduceArgs),
    /// Build the explicit three-qubit certificate.
    Construct(ConstructArgs),
    /// Check a certificate against a state.
    Verify(PairArgs),
    /// Run the analytic decision procedure on canonical parameters.
    Obstruct(ObstructArgs),
    /// Numerical certificate search.
    Search(SearchArgs),
    /// Analytic decision, falling back to numerical search.
    Classify(ClassifyArgs),
    /// Simulate the ancilla protocol and measure flatness.
    Protocol(PairArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Number of qubits.
    #[arg(long)]
    pub n: Option<usize>,
    /// Weight of |0…0⟩.
    #[arg(long)]
    pub x: Option<f64>,
    /// Comma-separated weights c_1,…,c_n.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// WTypeParams JSON, inline or a file path.
    #[arg(long, conflicts_with_all = ["n", "x", "c"])]
    pub params: Option<String>,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Emit |W_n⟩.
    #[arg(long, conflicts_with_all = ["n", "x", "c", "params"])]
    pub w: Option<usize>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// PureState JSON, inline or a file path.
    #[arg(long, visible_alias = "file", conflicts_with_all = ["n", "x", "c", "params"])]
    pub state: Option<String>,
    /// Restrict the report to one qubit (1-based).
    #[arg(long)]
    pub qubit: Option<usize>,
    #[arg(long, default_value_t = DEGENERACY_TOL)]
    pub degeneracy_tol: f64,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c1: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub c2: f64,
    /// Radians.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha1: f64,
    /// Radians.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha2: f64,
    /// Verification tolerance on the Gram residual.
    #[arg(long, default_value_t = INPUT_TOL)]
    pub tol: f64,
    /// Snap α1 onto the constraint when |cos(α1 − α2)| is below this.
    #[arg(long, default_value_t = DEFAULT_SNAP_TOL)]
    pub snap_tol: f64,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// PureState JSON, inline or a file path.
    #[arg(long)]
    pub state: String,
    /// Certificate JSON, inline or a file path.
    #[arg(long)]
    pub cert: String,
    #[arg(long, default_value_t = INPUT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ObstructArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = DEGENERACY_TOL)]
    pub degeneracy_tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SearchOptions {
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_iters: Option<usize>,
    /// Objective tolerance on the squared Gram residual.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub initial_step: Option<f64>,
    /// SearchConfig JSON, inline or a file path; flags override its fields.
    #[arg(long)]
    pub config: Option<String>,
    /// Worker threads for independent restarts.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// PureState JSON, inline or a file path.
    #[arg(long, visible_alias = "file", conflicts_with_all = ["n", "x", "c", "params", "w"])]
    pub state: Option<String>,
    /// Search on |W_n⟩.
    #[arg(long, conflicts_with_all = ["n", "x", "c", "params"])]
    pub w: Option<usize>,
    #[command(flatten)]
    pub search: SearchOptions,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub search: SearchOptions,
}

/// A domain failure, reported as JSON with exit code 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl From<lme_core::Error> for CliError {
    fn from(e: lme_core::Error) -> Self {
        CliError { kind: e.kind().to_owned(), message: e.to_string() }
    }
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { kind: "InvalidArguments".into(), message: message.into() }
    }
}

/// The JSON document printed on success.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub inputs: Value,
    pub outputs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct ErrorReport<'a> {
    command: &'a str,
    version: &'a str,
    error: CliError,
}

/// Parse `argv` (including the program name) without running anything.
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Run the tool; returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(cli.command) {
        Ok(report) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            0
        }
        Err(error) => {
            let report = ErrorReport { command: name, version: VERSION, error };
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            1
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::State(_) => "state",
        Command::Reduce(_) => "reduce",
        Command::Construct(_) => "construct",
        Command::Verify(_) => "verify",
        Command::Obstruct(_) => "obstruct",
        Command::Search(_) => "search",
        Command::Classify(_) => "classify",
        Command::Protocol(_) => "protocol",
    }
}

fn report(command: &str, seed: Option<u64>, inputs: Value, outputs: Value) -> Report {
    Report { command: command.to_owned(), version: VERSION.to_owned(), seed, inputs, outputs }
}

pub fn execute(command: Command) -> Result<Report, CliError> {
    match command {
        Command::State(a) => cmd_state(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Obstruct(a) => cmd_obstruct(a),
        Command::Search(a) => cmd_search(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Protocol(a) => cmd_protocol(a),
    }
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn load_json(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_owned());
    }
    std::fs::read_to_string(Path::new(arg))
        .map_err(|e| CliError { kind: "Io".into(), message: format!("{arg}: {e}") })
}

fn load<T: WireFormat>(arg: &str) -> Result<T, CliError> {
    Ok(T::from_json_str(&load_json(arg)?)?)
}

impl ParamArgs {
    fn is_given(&self) -> bool {
        self.params.is_some() || self.n.is_some() || self.x.is_some() || self.c.is_some()
    }

    fn resolve(&self) -> Result<WTypeParams, CliError> {
        if let Some(p) = &self.params {
            return load(p);
        }
        let c = self.c.as_deref().ok_or_else(|| CliError::usage("--c is required"))?;
        let c = parse_real_list(c)?;
        let x = self.x.unwrap_or(0.0);
        let n = self.n.unwrap_or(c.len());
        Ok(WTypeParams::with_n(n, x, c)?)
    }
}

fn cmd_state(a: StateArgs) -> Result<Report, CliError> {
    let (inputs, state) = match a.w {
        Some(n) => (json!({ "w": n }), w_state(n)?),
        None => {
            let p = a.params.resolve()?;
            (json!({ "params": p.to_json_value() }), canonical_state(&p))
        }
    };
    Ok(report("state", None, inputs, json!({ "state": state.to_json_value() })))
}

fn cmd_reduce(a: ReduceArgs) -> Result<Report, CliError> {
    let (inputs, state, params) = match &a.state {
        Some(s) => {
            let state: PureState = load(s)?;
            (json!({ "state": state.to_json_value() }), state, None)
        }
        None => {
            let p = a.params.resolve()?;
            (json!({ "params": p.to_json_value() }), canonical_state(&p), Some(p))
        }
    };
    let n = state.n_qubits();
    let qubits: Vec<usize> = match a.qubit {
        Some(l) if l == 0 || l > n => return Err(lme_core::Error::IndexOutOfRange { index: l, n }.into()),
        Some(l) => vec![l],
        None => (1..=n).collect(),
    };
    let mut per_qubit = Vec::new();
    for &l in &qubits {
        let mut entry = json!({
            "qubit": l,
            "partial_trace": state.partial_trace(&[l])?.to_json_value(),
        });
        if let Some(p) = &params {
            entry["closed_form"] = reduced_closed_form(p, l)?.to_json_value();
            entry["det"] = json!(reduced_det(p, l)?);
            entry["eigen_gap"] = json!(eigen_gap(p, l)?);
            entry["degenerate"] = json!(is_degenerate(p, l, a.degeneracy_tol)?);
        }
        per_qubit.push(entry);
    }
    let td = trace_decomposition(&state)?;
    let mut inputs = inputs;
    inputs["degeneracy_tol"] = json!(a.degeneracy_tol);
    Ok(report(
        "reduce",
        None,
        inputs,
        json!({ "qubits": per_qubit, "trace_decomposition": td.to_json_value() }),
    ))
}

/// Nearest `α1` with `cos(α1 − α2) = 0` exactly in floating point terms.
fn snap_alpha1(alpha1: f64, alpha2: f64) -> f64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let turns = ((alpha1 - alpha2 - half_pi) / std::f64::consts::PI).round();
    alpha2 + half_pi + turns * std::f64::consts::PI
}

fn cmd_construct(a: ConstructArgs) -> Result<Report, CliError> {
    let inputs = json!({
        "c1": a.c1, "c2": a.c2, "alpha1": a.alpha1, "alpha2": a.alpha2,
        "tol": a.tol, "snap_tol": a.snap_tol,
    });
    let cos = (a.alpha1 - a.alpha2).cos().abs();
    let snapped = cos >= INPUT_TOL && cos < a.snap_tol;
    let alpha1 = if snapped { snap_alpha1(a.alpha1, a.alpha2) } else { a.alpha1 };
    let cert = construct_certificate_3q(a.c1, a.c2, alpha1, a.alpha2)?;
    let state = canonical_state(&WTypeParams::new(0.0, vec![a.c1, a.c2, 0.5])?);
    let check = verify_certificate(&state, &cert, a.tol)?;
    let protocol = is_max_entangleable_via(&state, &cert, a.tol)?;
    Ok(report(
        "construct",
        None,
        inputs,
        json!({
            "alpha1_used": alpha1,
            "snapped": snapped,
            "state": state.to_json_value(),
            "certificate": cert.to_json_value(),
            "valid": check.valid,
            "residual": check.residual,
            "maximally_entangled": protocol.maximally_entangled,
            "flatness": protocol.flatness,
        }),
    ))
}

fn load_pair(a: &PairArgs) -> Result<(PureState, LmeCertificate, Value), CliError> {
    let state: PureState = load(&a.state)?;
    let cert: LmeCertificate = load(&a.cert)?;
    let inputs = json!({ "state": state.to_json_value(), "cert": cert.to_json_value(), "tol": a.tol });
    Ok((state, cert, inputs))
}

fn cmd_verify(a: PairArgs) -> Result<Report, CliError> {
    let (state, cert, inputs) = load_pair(&a)?;
    let check = verify_certificate(&state, &cert, a.tol)?;
    let mut outputs = json!({ "valid": check.valid, "residual": check.residual });
    if state.n_qubits() <= MAX_PROTOCOL_QUBITS {
        let protocol = is_max_entangleable_via(&state, &cert, a.tol)?;
        outputs["maximally_entangled"] = json!(protocol.maximally_entangled);
        outputs["flatness"] = json!(protocol.flatness);
    }
    Ok(report("verify", None, inputs, outputs))
}

fn cmd_protocol(a: PairArgs) -> Result<Report, CliError> {
    let (state, cert, inputs) = load_pair(&a)?;
    let joint = protocol_state(&state, &cert)?;
    let check = is_max_entangleable_via(&state, &cert, a.tol)?;
    Ok(report(
        "protocol",
        None,
        inputs,
        json!({
            "protocol_state": joint.to_json_value(),
            "maximally_entangled": check.maximally_entangled,
            "flatness": check.flatness,
        }),
    ))
}

fn cmd_obstruct(a: ObstructArgs) -> Result<Report, CliError> {
    let p = a.params.resolve()?;
    let verdict = prop1_obstruction_with_tol(&p, a.degeneracy_tol)?;
    Ok(report(
        "obstruct",
        None,
        json!({ "params": p.to_json_value(), "degeneracy_tol": a.degeneracy_tol }),
        json!({ "verdict": verdict.to_json_value() }),
    ))
}

impl SearchOptions {
    fn resolve(&self) -> Result<SearchConfig, CliError> {
        let mut cfg = match &self.config {
            Some(c) => load::<SearchConfig>(c)?,
            None => SearchConfig::default(),
        };
        if let Some(v) = self.restarts {
            cfg.restarts = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.max_iters {
            cfg.max_iters = v;
        }
        if let Some(v) = self.tol {
            cfg.objective_tol = v;
        }
        if let Some(v) = self.initial_step {
            cfg.initial_step = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn in_pool<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R, CliError> {
        match self.threads {
            None => Ok(f()),
            Some(0) => Err(CliError::usage("--threads must be at least 1")),
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| CliError { kind: "ThreadPool".into(), message: e.to_string() })?;
                Ok(pool.install(f))
            }
        }
    }
}

fn cmd_search(a: SearchArgs) -> Result<Report, CliError> {
    let (source, state) = if let Some(s) = &a.state {
        let state: PureState = load(s)?;
        (json!({ "state": state.to_json_value() }), state)
    } else if let Some(n) = a.w {
        (json!({ "w": n }), w_state(n)?)
    } else if a.params.is_given() {
        let p = a.params.resolve()?;
        (json!({ "params": p.to_json_value() }), canonical_state(&p))
    } else {
        return Err(CliError::usage("one of --state, --w or canonical parameters is required"));
    };
    let cfg = a.search.resolve()?;
    let result = a.search.in_pool(|| search_certificate(&state, &cfg))??;
    let mut inputs = source;
    inputs["config"] = cfg.to_json_value();
    Ok(report("search", Some(cfg.seed), inputs, json!({ "result": result.to_json_value() })))
}

fn cmd_classify(a: ClassifyArgs) -> Result<Report, CliError> {
    let p = a.params.resolve()?;
    let cfg = a.search.resolve()?;
    let verdict = a.search.in_pool(|| classify(&p, &cfg))??;
    Ok(report(
        "classify",
        Some(cfg.seed),
        json!({ "params": p.to_json_value(), "config": cfg.to_json_value() }),
        json!({ "verdict": verdict.to_json_value() }),
    ))
}
