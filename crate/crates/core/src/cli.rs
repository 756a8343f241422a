//! The `support-forge` command line: task files in, canonical JSON reports out.
//!
//! Exit codes: 0 verified, 2 computed but unverified, 3 invalid input,
//! 1 internal failure.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complexes::ModulePresentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{proj_compare, ConeIdeal, ProjRelation};
use crate::io::{canonical_json, module_hash, ring_hash, ModuleSpec, ResolutionCache, RingSpec};
use crate::linalg::FMatrix;
use crate::operators::koszul_cone;
use crate::realize::{realize, realize_pair, Params, Verdict};
use crate::ring::RingSetup;
use crate::support::{
    ext_table_from_resolution, hypersurface_oracle, oracle_compare, support_from_table, support_points, OracleCheck,
    DEFAULT_EXTENSION, DEFAULT_HORIZON, DEFAULT_WINDOW,
};

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_UNVERIFIED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "support-forge", version, about = "Cohomological supports over graded complete intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Validate the ring of a task file.
    CheckRing(Common),
    /// Minimal free resolution of a module.
    Resolve(Common),
    /// Ext table with the χ-action.
    Ext(Common),
    /// Support cone of a pair, cross-checked by the oracle.
    Support(Common),
    /// Iterated Koszul cones on operators.
    Cone(Common),
    /// Realize a closed cone as a support.
    Realize(Common),
    /// Check a claimed support.
    Verify(Common),
    /// Pointwise hypersurface test.
    Oracle(Common),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckRing(_) => "check-ring",
            Command::Resolve(_) => "resolve",
            Command::Ext(_) => "ext",
            Command::Support(_) => "support",
            Command::Cone(_) => "cone",
            Command::Realize(_) => "realize",
            Command::Verify(_) => "verify",
            Command::Oracle(_) => "oracle",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::CheckRing(c)
            | Command::Resolve(c)
            | Command::Ext(c)
            | Command::Support(c)
            | Command::Cone(c)
            | Command::Realize(c)
            | Command::Verify(c)
            | Command::Oracle(c) => c,
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Task file (JSON).
    #[arg(long)]
    pub task: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Ignore the resolution cache.
    #[arg(long)]
    pub no_cache: bool,
    /// List rational points of every computed cone over F_{p^e}, e up to this bound.
    #[arg(long, value_name = "E")]
    pub emit_points: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskParams {
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
}

impl TaskParams {
    pub fn resolve(&self) -> Params {
        Params {
            horizon: self.horizon.unwrap_or(DEFAULT_HORIZON),
            window: self.w.unwrap_or(DEFAULT_WINDOW),
            extension: self.e.unwrap_or(DEFAULT_EXTENSION),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskArgs {
    /// Module name: a key of `modules`, or `k` / `R`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<String>,
    /// Second argument of a pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    pub ring: RingSpec,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub params: TaskParams,
    #[serde(default)]
    pub args: TaskArgs,
}

impl TaskFile {
    pub fn load(path: &Path) -> Result<TaskFile> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    }
}

/// Options that do not come from the task file.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub cache: ResolutionCache,
    pub emit_points: Option<u32>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { cache: ResolutionCache::disabled(), emit_points: None }
    }
}

/// A finished run: the report and the exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
    /// Present when the oracle disagreed with an ideal computation.
    pub reproducer: Option<Value>,
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::StabilizationNotReached(_) | Error::Inconclusive(_) => EXIT_UNVERIFIED,
        Error::DecompositionFailed(_) | Error::VanishingFailed { .. } | Error::NotAChainMap(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

struct Ctx<'a> {
    ring: RingSetup,
    task: &'a TaskFile,
    params: Params,
    opts: &'a RunOptions,
    used: BTreeMap<String, Value>,
}

impl Ctx<'_> {
    fn module(&mut self, name: &str) -> Result<ModulePresentation> {
        let m = if let Some(spec) = self.task.modules.get(name) {
            spec.build(&self.ring)?
        } else {
            match name {
                "k" => ModulePresentation::residue_field(&self.ring),
                "R" => ModulePresentation::free(vec![0]),
                _ => return Err(Error::Input(format!("unknown module `{name}`"))),
            }
        };
        let entry = json!({ "presentation": ModuleSpec::of(&self.ring, &m), "hash": module_hash(&self.ring, &m) });
        self.used.insert(name.to_string(), entry);
        Ok(m)
    }

    fn module_arg(&mut self) -> Result<(String, ModulePresentation)> {
        let name = self.task.args.module.clone().unwrap_or_else(|| "k".into());
        let m = self.module(&name)?;
        Ok((name, m))
    }

    fn n_arg(&mut self) -> Result<(String, ModulePresentation)> {
        let name = self.task.args.n.clone().unwrap_or_else(|| "k".into());
        let m = self.module(&name)?;
        Ok((name, m))
    }

    fn chi_ideal(&self, gens: &[String]) -> Result<ConeIdeal> {
        let chi = self.ring.chi_ring();
        let polys = gens.iter().map(|g| chi.parse(g)).collect::<Result<Vec<_>>>()?;
        let x = ConeIdeal::new(chi, &polys);
        if !x.is_homogeneous() {
            return Err(Error::NonHomogeneous(gens.join(", ")));
        }
        Ok(x)
    }

    fn cone_json(&self, c: &ConeIdeal) -> Result<Value> {
        let sat = c.saturate();
        let mut v = json!({
            "ideal": sat.format_gens(),
            "saturated": true,
            "empty": sat.is_empty_in_proj(),
        });
        if let Some(e) = self.opts.emit_points {
            let mut pts = BTreeMap::new();
            for d in 1..=e {
                pts.insert(d.to_string(), support_points(&self.ring, &sat, d)?);
            }
            v["points"] = json!(pts);
        }
        Ok(v)
    }
}

fn matrix_rows(m: &FMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| m.field().format(*x)).collect()).collect()
}

fn oracle_json(checks: &[OracleCheck]) -> Value {
    json!(checks)
}

/// Runs one command on a parsed task.
pub fn run_task(command: &str, task: &TaskFile, opts: &RunOptions) -> Result<Outcome> {
    if let Some(c) = &task.command {
        if c != command {
            return Err(Error::Input(format!("task file is for `{c}`, not `{command}`")));
        }
    }
    let ring = task.ring.build()?;
    let params = task.params.resolve();
    if params.horizon < 2 * params.window + 4 {
        return Err(Error::Input(format!(
            "D = {} is too small for w = {} (need D >= 2w + 4)",
            params.horizon, params.window
        )));
    }
    if params.extension == 0 || params.extension > 4 {
        return Err(Error::Input("e must lie in 1..=4".into()));
    }
    let mut ctx = Ctx { ring, task, params, opts, used: BTreeMap::new() };
    let (body, verdict, reproducer) = match command {
        "check-ring" => check_ring(&mut ctx)?,
        "resolve" => resolve_cmd(&mut ctx)?,
        "ext" => ext_cmd(&mut ctx)?,
        "support" => support_cmd(&mut ctx)?,
        "cone" => cone_cmd(&mut ctx)?,
        "realize" => realize_cmd(&mut ctx)?,
        "verify" => verify_cmd(&mut ctx)?,
        "oracle" => oracle_cmd(&mut ctx)?,
        other => return Err(Error::Input(format!("unknown command `{other}`"))),
    };
    let report = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "ring": task.ring,
        "ring_hash": ring_hash(&ctx.ring),
        "modules": ctx.used,
        "params": { "D": params.horizon, "w": params.window, "e": params.extension },
        "args": task.args,
        "result": body,
        "verdict": verdict,
    });
    let exit_code = if verdict == Verdict::Verified { EXIT_VERIFIED } else { EXIT_UNVERIFIED };
    let reproducer = reproducer.map(|failures| json!({ "task": task, "command": command, "disagreements": failures }));
    Ok(Outcome { report, exit_code, reproducer })
}

type CmdOut = (Value, Verdict, Option<Value>);

const COEFFICIENT_NOTE: &str =
    "the second module is not k: the support is taken in Proj k[χ], ignoring the action of degree-0 operator coefficients from R";

fn verdict_of(ok: bool) -> Verdict {
    if ok {
        Verdict::Verified
    } else {
        Verdict::Unverified
    }
}

fn disagreements(checks: &[OracleCheck]) -> Option<Value> {
    let bad: Vec<&OracleCheck> = checks.iter().filter(|c| !c.agrees()).collect();
    if bad.is_empty() {
        None
    } else {
        Some(json!(bad))
    }
}

fn check_ring(ctx: &mut Ctx) -> Result<CmdOut> {
    let r = &ctx.ring;
    let body = json!({
        "n": r.nvars(),
        "c": r.codim(),
        "dim": r.dim(),
        "artinian": r.is_artinian(),
        "vector_space_dim": r.vector_space_dim(),
        "f_degrees": r.f_degrees(),
        "chi_vars": r.chi_ring().names(),
        "regular_sequence": true,
    });
    Ok((body, Verdict::Verified, None))
}

fn resolve_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let (_, m) = ctx.module_arg()?;
    let depth = ctx.task.args.depth.unwrap_or(ctx.params.horizon);
    let res = ctx.opts.cache.resolve(&ctx.ring, &m, depth)?;
    res.complex().check_d_squared(&ctx.ring)?;
    let diffs: Vec<Vec<Vec<String>>> = (1..=depth.min(res.complex().ranks().len().saturating_sub(1)))
        .map(|i| res.diff(i).format(&ctx.ring))
        .collect();
    let body = json!({
        "depth": depth,
        "betti": res.betti(),
        "graded_betti": res.graded_betti(),
        "terminated": res.terminated(),
        "projective_dimension": res.projective_dimension(),
        "differentials": diffs,
        "minimal_presentation": ModuleSpec::of(&ctx.ring, res.module()),
    });
    Ok((body, Verdict::Verified, None))
}

fn ext_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let (_, m) = ctx.module_arg()?;
    let (_, n) = ctx.n_arg()?;
    let d = ctx.task.args.depth.unwrap_or(ctx.params.horizon);
    let res = ctx.opts.cache.resolve(&ctx.ring, &m, d + 1)?;
    let t = ext_table_from_resolution(&ctx.ring, &res, &n, d)?;
    let actions: Vec<Vec<Vec<Vec<String>>>> = (0..t.codim())
        .map(|j| (0..d.saturating_sub(1)).map(|i| matrix_rows(t.action(j, i))).collect())
        .collect();
    let commute = t.actions_commute();
    let body = json!({ "dims": t.dims(), "actions": actions, "actions_commute": commute });
    Ok((body, verdict_of(commute), None))
}

fn support_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let (_, m) = ctx.module_arg()?;
    let (nname, n) = ctx.n_arg()?;
    let p = ctx.params;
    let res = ctx.opts.cache.resolve(&ctx.ring, &m, p.horizon + 1)?;
    let table = ext_table_from_resolution(&ctx.ring, &res, &n, p.horizon)?;
    let s = support_from_table(&ctx.ring, &table, p.window)?;
    let checks = if nname == "k" || n == ModulePresentation::residue_field(&ctx.ring) {
        oracle_compare(&ctx.ring, &m, &s.cone, p.extension)?
    } else {
        Vec::new()
    };
    let agreement = checks.iter().all(|c| c.agrees());
    let mut body = ctx.cone_json(&s.cone)?;
    body["pair"] = json!([module_hash(&ctx.ring, &m), module_hash(&ctx.ring, &n)]);
    body["stabilized"] = json!(s.stabilized());
    body["stabilization"] = json!(s.stabilization);
    body["ext_dims"] = json!(s.dims);
    body["oracle_points_checked"] = oracle_json(&checks);
    body["agreement"] = json!(agreement);
    if n != ModulePresentation::residue_field(&ctx.ring) {
        body["notes"] = json!([COEFFICIENT_NOTE]);
    }
    Ok((body, verdict_of(agreement && s.stabilized()), disagreements(&checks)))
}

fn cone_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let (_, m) = ctx.module_arg()?;
    let phis_text = ctx.task.args.phi.clone().ok_or_else(|| Error::Input("`cone` needs args.phi".into()))?;
    let chi = ctx.ring.chi_ring().clone();
    let phis = phis_text.iter().map(|s| chi.parse(s)).collect::<Result<Vec<_>>>()?;
    let (out, cert) = koszul_cone(&ctx.ring, &m, &phis)?;
    let p = ctx.params;
    let k = ModulePresentation::residue_field(&ctx.ring);
    let before = crate::support::support_pair(&ctx.ring, &m, &k, p.horizon, p.window)?;
    let after = crate::support::support_pair(&ctx.ring, &out, &k, p.horizon, p.window)?;
    let expected = before.cone.sum(&ConeIdeal::new(&chi, &phis)).saturate();
    let relation = proj_compare(&after.cone, &expected)?;
    let checks = oracle_compare(&ctx.ring, &out, &after.cone, p.extension)?;
    let ok = relation == ProjRelation::Equal && checks.iter().all(|c| c.agrees()) && after.stabilized() && before.stabilized();
    let body = json!({
        "module": ModuleSpec::of(&ctx.ring, &out),
        "module_hash": module_hash(&ctx.ring, &out),
        "certificate": cert,
        "support_before": ctx.cone_json(&before.cone)?,
        "support": ctx.cone_json(&after.cone)?,
        "expected": ctx.cone_json(&expected)?,
        "relation": relation.name(),
        "oracle_points_checked": oracle_json(&checks),
    });
    Ok((body, verdict_of(ok), disagreements(&checks)))
}

fn realize_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let target = ctx.task.args.target.clone().ok_or_else(|| Error::Input("`realize` needs args.target".into()))?;
    let x = ctx.chi_ideal(&target)?;
    let (_, m) = ctx.module_arg()?;
    if ctx.task.args.n.is_some() {
        let (_, n) = ctx.n_arg()?;
        let rep = realize_pair(&ctx.ring, &x, &m, &n, ctx.params)?;
        let mut body = json!({
            "target": x.format_gens(),
            "effective_target": ctx.cone_json(&rep.effective_target)?,
            "clipped": rep.clipped,
            "m_x": ModuleSpec::of(&ctx.ring, &rep.m_x),
            "n_x": ModuleSpec::of(&ctx.ring, &rep.n_x),
            "same_module": rep.same_module,
            "supp_mx_n": ctx.cone_json(&rep.supp_mx_n)?,
            "supp_m_nx": ctx.cone_json(&rep.supp_m_nx)?,
            "supp_mx_nx": ctx.cone_json(&rep.supp_mx_nx)?,
            "certificate_m": rep.certificate_m,
            "certificate_n": rep.certificate_n,
            "stabilized": rep.stabilized,
            "all_equal": rep.all_equal,
            "ext_m_r_vanishing": rep.vanishing,
        });
        if n != ModulePresentation::residue_field(&ctx.ring) {
            body["notes"] = json!([COEFFICIENT_NOTE]);
        }
        return Ok((body, rep.verdict(), None));
    }
    let rep = realize(&ctx.ring, &x, &m, ctx.params)?;
    let body = json!({
        "target": x.format_gens(),
        "base_support": ctx.cone_json(&rep.base_support)?,
        "effective_target": ctx.cone_json(&rep.effective_target)?,
        "clipped": rep.clipped,
        "phi": rep.phis.iter().map(|p| ctx.ring.chi_ring().format(p)).collect::<Vec<_>>(),
        "certificate": rep.certificate,
        "module": ModuleSpec::of(&ctx.ring, &rep.module),
        "module_hash": module_hash(&ctx.ring, &rep.module),
        "support": ctx.cone_json(&rep.support.cone)?,
        "stabilization": rep.support.stabilization,
        "relation": rep.relation.name(),
        "oracle_points_checked": oracle_json(&rep.oracle),
        "warnings": rep.warnings,
    });
    let repro = disagreements(&rep.oracle);
    Ok((body, rep.verdict(), repro))
}

fn verify_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let claimed = ctx.task.args.ideal.clone().ok_or_else(|| Error::Input("`verify` needs args.ideal".into()))?;
    let claimed = ctx.chi_ideal(&claimed)?;
    let (_, m) = ctx.module_arg()?;
    let (_, n) = ctx.n_arg()?;
    let p = ctx.params;
    let s = crate::support::support_pair(&ctx.ring, &m, &n, p.horizon, p.window)?;
    let relation = proj_compare(&s.cone, &claimed)?;
    let is_k = n == ModulePresentation::residue_field(&ctx.ring);
    let checks = if is_k { oracle_compare(&ctx.ring, &m, &claimed.saturate(), p.extension)? } else { Vec::new() };
    let ok = relation == ProjRelation::Equal && s.stabilized() && checks.iter().all(|c| c.agrees());
    let body = json!({
        "claimed": ctx.cone_json(&claimed)?,
        "computed": ctx.cone_json(&s.cone)?,
        "relation": relation.name(),
        "stabilized": s.stabilized(),
        "oracle_points_checked": oracle_json(&checks),
    });
    Ok((body, verdict_of(ok), disagreements(&checks)))
}

fn oracle_cmd(ctx: &mut Ctx) -> Result<CmdOut> {
    let (_, m) = ctx.module_arg()?;
    let point = ctx.task.args.point.clone().ok_or_else(|| Error::Input("`oracle` needs args.point".into()))?;
    let field = Field::extension(ctx.ring.field().characteristic() as u64, ctx.params.extension)?;
    let alpha = point.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
    let inside = hypersurface_oracle(&ctx.ring, &m, &field, &alpha)?;
    let body = json!({
        "point": alpha.iter().map(|a| field.format(*a)).collect::<Vec<_>>(),
        "extension_degree": ctx.params.extension,
        "in_support": inside,
    });
    Ok((body, Verdict::Verified, None))
}

/// Full command-line behaviour; returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let common = cli.command.common().clone();
    let cache = if common.no_cache { ResolutionCache::disabled() } else { ResolutionCache::from_env() };
    let opts = RunOptions { cache, emit_points: common.emit_points };
    let task = match TaskFile::load(&common.task) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let outcome = match run_task(cli.command.name(), &task, &opts) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let text = match canonical_json(&outcome.report) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    if let Some(repro) = &outcome.reproducer {
        let path = match &common.out {
            Some(p) => p.with_extension("repro.json"),
            None => PathBuf::from("support-forge.repro.json"),
        };
        match canonical_json(repro).map(|t| fs::write(&path, t)) {
            Ok(Ok(())) => eprintln!("oracle disagreement; reproducer written to {}", path.display()),
            _ => eprintln!("oracle disagreement; could not write reproducer"),
        }
    }
    match &common.out {
        Some(p) => {
            if let Err(e) = fs::write(p, &text) {
                eprintln!("error: {e}");
                return EXIT_INVALID;
            }
        }
        None => print!("{text}"),
    }
    outcome.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn task(command: &str, extra: Value) -> TaskFile {
        let mut v = json!({
            "command": command,
            "ring": {"p": 2, "vars": [{"name": "x", "deg": 1}, {"name": "y", "deg": 1}], "f": ["x^2", "y^2"]},
            "params": {"D": 8, "w": 2, "e": 2},
        });
        for (k, x) in extra.as_object().unwrap() {
            v[k] = x.clone();
        }
        serde_json::from_value(v).unwrap()
    }

    #[test]
    fn realize_report_is_verified() {
        let t = task("realize", json!({"args": {"target": ["x1+x2"]}}));
        let o = run_task("realize", &t, &RunOptions::default()).unwrap();
        assert_eq!(o.exit_code, 0);
        assert_eq!(o.report["verdict"], "verified");
        assert_eq!(o.report["result"]["support"]["ideal"], json!(["x1 + x2"]));
    }

    #[test]
    fn bad_ring_is_invalid_input() {
        let mut t = task("check-ring", json!({}));
        t.ring.f = vec!["x^2".into(), "x*y".into()];
        let e = run_task("check-ring", &t, &RunOptions::default()).unwrap_err();
        assert!(matches!(e, Error::NotRegularSequence { .. }));
        assert_eq!(exit_code_for(&e), EXIT_INVALID);
    }

    #[test]
    fn support_of_free_module_is_empty() {
        let t = task("support", json!({"args": {"module": "R"}}));
        let o = run_task("support", &t, &RunOptions::default()).unwrap();
        assert_eq!(o.report["result"]["ideal"], json!(["1"]));
        assert_eq!(o.report["result"]["empty"], json!(true));
        assert_eq!(o.exit_code, 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let t = task(
            "support",
            json!({"modules": {"M": {"gens": [{"deg": 0}], "relations": [["x"]]}}, "args": {"module": "M"}}),
        );
        let opts = RunOptions { cache: ResolutionCache::disabled(), emit_points: Some(2) };
        let a = canonical_json(&run_task("support", &t, &opts).unwrap().report).unwrap();
        let b = canonical_json(&run_task("support", &t, &opts).unwrap().report).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"points\""));
    }

    #[test]
    fn general_pairs_carry_a_note() {
        let mods = json!({"M": {"gens": [{"deg": 0}], "relations": [["x"]]}});
        let t = task("support", json!({"modules": mods, "args": {"module": "k", "n": "M"}}));
        let o = run_task("support", &t, &RunOptions::default()).unwrap();
        assert_eq!(o.report["result"]["notes"].as_array().unwrap().len(), 1);
        let t = task("support", json!({"args": {"module": "k"}}));
        let o = run_task("support", &t, &RunOptions::default()).unwrap();
        assert!(o.report["result"].get("notes").is_none());
    }
}
