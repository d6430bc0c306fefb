//! The operations behind the command line: each returns a plain-text table and a JSON value
//! built from the same data.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cohomology::{a_ext, a_ext_h, derived_coinvariants, ext_h};
use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::relative::SmashAlgebra;
use crate::report::Report;
use crate::suite::{self, SuiteOptions};
use crate::workspace::Workspace;

/// A command result in both output formats.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    /// Pretty JSON with a trailing newline; key order is sorted, so output is byte-stable.
    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

pub const COMPUTE_TARGETS: [&str; 7] = ["coinvariants", "cohomology", "ext", "isotypic", "integrals", "decompose", "smash"];

#[derive(Clone, Debug, Default)]
pub struct ComputeArgs {
    pub object: Option<String>,
    pub source: Option<String>,
    pub target: Option<String>,
    pub hopf: Option<String>,
    pub qmax: usize,
    pub cap: usize,
}

/// Per-object validation of a loaded workspace.
pub fn validate(ws: &Workspace) -> Output {
    let mut text = format!("field: {}\n", ws.field.label());
    let mut objects = serde_json::Map::new();
    for (object, report) in ws.reports() {
        let failing = report.failing();
        let status = if failing.is_empty() { "pass".to_string() } else { format!("fail: {}", failing.join(", ")) };
        writeln!(text, "{object}: {status}").unwrap();
        objects.insert(object, json!({"passed": report.passed(), "failing": failing}));
    }
    Output { text, json: json!({"field": ws.field.label(), "objects": objects}) }
}

/// Runs the theorem suite over named workspaces.
pub fn check(workspaces: &[(String, Workspace)], selector: &str, opts: &SuiteOptions) -> Result<(Report, Output)> {
    let report = suite::run_many(workspaces, selector, opts)?;
    let out = Output { text: report.to_text(), json: report.to_json() };
    Ok((report, out))
}

pub fn compute(ws: &Workspace, what: &str, args: &ComputeArgs) -> Result<Output> {
    match what {
        "coinvariants" => coinvariants(ws, args),
        "cohomology" => cohomology(ws, args),
        "ext" => ext(ws, args),
        "isotypic" => isotypic(ws, args),
        "integrals" => integrals(ws, args),
        "decompose" => decompose(ws, args),
        "smash" => smash(ws, args),
        other => Err(Error::UnknownName(format!("compute target \"{other}\" (expected one of {})", COMPUTE_TARGETS.join(", ")))),
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str, what: &str) -> Result<&'a str> {
    value.as_deref().ok_or_else(|| Error::Parse(format!("compute {what} needs --{flag}")))
}

/// A comodule by name, or the comodule underlying a relative Hopf module.
fn any_comodule<'a>(ws: &'a Workspace, name: &str) -> Result<&'a Comodule> {
    if let Some(c) = ws.comodules.get(name) {
        return Ok(&c.comodule);
    }
    if let Some(m) = ws.rel_hopf_modules.get(name) {
        return Ok(m.module.comodule());
    }
    Err(Error::UnknownName(format!("comodule \"{name}\"")))
}

fn basis_json(s: &Subspace) -> Value {
    json!(s.basis_vectors().iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn graded_table(title: &str, columns: &[(&str, &[usize])]) -> String {
    let mut text = format!("{title}\n{:>6}", "degree");
    for (name, _) in columns {
        write!(text, "  {name:>12}").unwrap();
    }
    text.push('\n');
    let len = columns.iter().map(|(_, d)| d.len()).max().unwrap_or(0);
    for p in 0..len {
        write!(text, "{p:>6}").unwrap();
        for (_, d) in columns {
            write!(text, "  {:>12}", d.get(p).map_or("-".into(), |x| x.to_string())).unwrap();
        }
        text.push('\n');
    }
    text
}

fn coinvariants(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let name = required(&args.object, "object", "coinvariants")?;
    let m = any_comodule(ws, name)?;
    let inv = m.coinvariants();
    let text = format!("coinvariants of {name}: dim {} (of {})\n", inv.dim(), m.dim());
    Ok(Output {
        text,
        json: json!({"target": "coinvariants", "object": name, "ambient_dim": m.dim(), "dim": inv.dim(), "basis": basis_json(&inv)}),
    })
}

fn cohomology(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let name = required(&args.object, "object", "cohomology")?;
    let m = any_comodule(ws, name)?;
    let dims = derived_coinvariants(m, args.qmax, args.cap)?;
    let text = graded_table(&format!("derived coinvariants R^p({name}), p <= {}", args.qmax), &[("dim", &dims)]);
    Ok(Output { text, json: json!({"target": "cohomology", "object": name, "qmax": args.qmax, "dims": dims}) })
}

fn ext(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let src = required(&args.source, "source", "ext")?;
    let dst = required(&args.target, "target", "ext")?;
    if let (Some(m), Some(n)) = (ws.rel_hopf_modules.get(src), ws.rel_hopf_modules.get(dst)) {
        let colinear = a_ext_h(&m.module, &n.module, args.qmax)?;
        let plain = a_ext(&m.module, &n.module, args.qmax)?.dims();
        let text = graded_table(
            &format!("relative Ext({src}, {dst}), p <= {}", args.qmax),
            &[("Ext^H", &colinear), ("EXT", &plain)],
        );
        return Ok(Output {
            text,
            json: json!({"target": "ext", "kind": "relative", "source": src, "target_object": dst, "qmax": args.qmax, "ext_h": colinear, "ext": plain}),
        });
    }
    let m = any_comodule(ws, src)?;
    let n = any_comodule(ws, dst)?;
    let dims = ext_h(m, n, args.qmax, args.cap)?;
    let text = graded_table(&format!("Ext^H({src}, {dst}), p <= {}", args.qmax), &[("dim", &dims)]);
    Ok(Output {
        text,
        json: json!({"target": "ext", "kind": "comodule", "source": src, "target_object": dst, "qmax": args.qmax, "ext_h": dims}),
    })
}

fn isotypic(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let name = required(&args.object, "object", "isotypic")?;
    let simple = required(&args.source, "source", "isotypic")?;
    let n = any_comodule(ws, name)?;
    let v = any_comodule(ws, simple)?;
    let iso = n.isotypic_component(v)?;
    let text = format!(
        "isotypic component of {name} at {simple}: dim {} (multiplicity {})\n",
        iso.component.dim(),
        iso.hom.dim()
    );
    Ok(Output {
        text,
        json: json!({
            "target": "isotypic", "object": name, "simple": simple,
            "dim": iso.component.dim(), "multiplicity": iso.hom.dim(), "basis": basis_json(&iso.component),
        }),
    })
}

fn pick_hopf<'a>(ws: &'a Workspace, args: &ComputeArgs) -> Result<(&'a str, &'a crate::hopf::HopfAlgebra)> {
    match &args.hopf {
        Some(name) => ws
            .hopf
            .get_key_value(name.as_str())
            .map(|(k, h)| (k.as_str(), &**h))
            .ok_or_else(|| Error::UnknownName(format!("Hopf algebra \"{name}\""))),
        None => match ws.hopf.len() {
            1 => {
                let (k, h) = ws.hopf.iter().next().expect("one entry");
                Ok((k.as_str(), &**h))
            }
            0 => Err(Error::UnknownName("the workspace has no Hopf algebra".into())),
            _ => Err(Error::Parse("several Hopf algebras: choose one with --hopf".into())),
        },
    }
}

fn integrals(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let (name, h) = pick_hopf(ws, args)?;
    let data = h.integrals();
    let normalized: Option<Vec<String>> = data.normalized.as_ref().map(|v| v.iter().map(|x| x.to_string()).collect());
    let mut text = format!("integrals of {name}: dim {}\ncosemisimple: {}\n", data.space.dim(), data.cosemisimple);
    if let Some(phi) = &normalized {
        writeln!(text, "normalized integral: [{}]", phi.join(", ")).unwrap();
    }
    Ok(Output {
        text,
        json: json!({
            "target": "integrals", "hopf": name, "dim": data.space.dim(), "basis": basis_json(&data.space),
            "cosemisimple": data.cosemisimple, "normalized": normalized,
        }),
    })
}

fn decompose(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let name = required(&args.object, "object", "decompose")?;
    let m = any_comodule(ws, name)?;
    let d = m.integral_projector()?;
    let verified = d.verify(m);
    let text = format!(
        "{name} = invariant part (dim {}) + ergodic part (dim {})\nverified: {verified}\n",
        d.invariant_part.dim(),
        d.ergodic_part.dim()
    );
    Ok(Output {
        text,
        json: json!({
            "target": "decompose", "object": name,
            "invariant_dim": d.invariant_part.dim(), "ergodic_dim": d.ergodic_part.dim(),
            "invariant_basis": basis_json(&d.invariant_part), "ergodic_basis": basis_json(&d.ergodic_part),
            "projector": d.projector.to_strings(), "verified": verified,
        }),
    })
}

fn smash(ws: &Workspace, args: &ComputeArgs) -> Result<Output> {
    let name = required(&args.object, "object", "smash")?;
    let entry = ws.comodule_algebra(name)?;
    let s = SmashAlgebra::new(&entry.algebra);
    let valid = s.algebra.validate().passed();
    let mut text = format!("smash product {name} # H*: dim {}, axioms {}\n", s.algebra.dim(), if valid { "pass" } else { "fail" });
    let mut modules = serde_json::Map::new();
    for (mn, m) in ws.rel_modules_over(name) {
        let module = s.to_module(m)?;
        let round_trip = s.from_module(&module)? == *m;
        writeln!(text, "  {mn}: dim {}, module axioms {}, round trip {}", m.dim(), module.validate().passed(), round_trip).unwrap();
        modules.insert(mn.to_string(), json!({"dim": m.dim(), "module_valid": module.validate().passed(), "round_trip": round_trip}));
    }
    Ok(Output {
        text,
        json: json!({"target": "smash", "object": name, "dim": s.algebra.dim(), "valid": valid, "modules": modules}),
    })
}

/// The fixture names, one per line.
pub fn fixture_list() -> Output {
    let names = crate::fixtures::FIXTURE_NAMES;
    Output { text: names.iter().map(|n| format!("{n}\n")).collect(), json: json!(names) }
}
