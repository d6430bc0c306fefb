//! Named objects loaded from, and written to, the JSON structure-constant format.
//!
//! Matrices are flat row-major arrays of strings such as `"3/2"`, using the global conventions:
//! multiplication is `dim x dim^2`, comultiplication `dim^2 x dim`, a coaction on `M` is
//! `(dim M * dim H) x dim M`, and an action of `R` on `M` is `dim M x (dim R * dim M)`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::linalg::Matrix;
use crate::modules::AlgebraModule;
use crate::relative::{CoinvariantAlgebra, ComoduleAlgebra, RelHopfModule};
use crate::report::ValidationReport;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    dim: usize,
    mult: Vec<String>,
    unit: Vec<String>,
    comult: Vec<String>,
    counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    antipode: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComodule {
    hopf: String,
    dim: usize,
    coaction: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComoduleAlgebra {
    hopf: String,
    dim: usize,
    mult: Vec<String>,
    unit: Vec<String>,
    coaction: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRelModule {
    algebra: String,
    dim: usize,
    coaction: Vec<String>,
    action: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBModule {
    algebra: String,
    dim: usize,
    action: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    field: RawField,
    #[serde(default)]
    hopf: BTreeMap<String, RawHopf>,
    #[serde(default)]
    comodules: BTreeMap<String, RawComodule>,
    #[serde(default)]
    comodule_algebras: BTreeMap<String, RawComoduleAlgebra>,
    #[serde(default)]
    rel_hopf_modules: BTreeMap<String, RawRelModule>,
    #[serde(default)]
    b_modules: BTreeMap<String, RawBModule>,
}

#[derive(Clone, Debug)]
pub struct NamedComodule {
    pub hopf: String,
    pub comodule: Comodule,
}

/// A comodule algebra with its coinvariant subalgebra `B`, computed once so every
/// `B`-module in the workspace shares it.
#[derive(Clone, Debug)]
pub struct NamedComoduleAlgebra {
    pub hopf: String,
    pub algebra: Arc<ComoduleAlgebra>,
    pub coinvariants: CoinvariantAlgebra,
}

#[derive(Clone, Debug)]
pub struct NamedRelModule {
    pub algebra: String,
    pub module: RelHopfModule,
}

/// A module over the coinvariant subalgebra of a named comodule algebra, written in the
/// canonical basis of the coinvariant subspace.
#[derive(Clone, Debug)]
pub struct NamedBModule {
    pub algebra: String,
    pub module: AlgebraModule,
}

#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: FieldSpec,
    pub hopf: BTreeMap<String, Arc<HopfAlgebra>>,
    pub comodules: BTreeMap<String, NamedComodule>,
    pub comodule_algebras: BTreeMap<String, NamedComoduleAlgebra>,
    pub rel_hopf_modules: BTreeMap<String, NamedRelModule>,
    pub b_modules: BTreeMap<String, NamedBModule>,
}

fn shape_error(object: &str, e: Error) -> Error {
    match e {
        Error::DimensionMismatch(msg) | Error::Parse(msg) => Error::Parse(format!("{object}: {msg}")),
        Error::FieldMismatch(a, b) => Error::Parse(format!("{object}: field mismatch {a} vs {b}")),
        Error::Validation { report, .. } => Error::Validation { object: object.to_string(), report },
        other => other,
    }
}

fn checked(object: &str, report: ValidationReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Validation { object: object.to_string(), report })
    }
}

fn matrix(field: FieldSpec, object: &str, what: &str, rows: usize, cols: usize, entries: &[String]) -> Result<Matrix> {
    if entries.len() != rows * cols {
        return Err(Error::Parse(format!(
            "{object}: {what} needs {rows}x{cols} = {} entries, got {}",
            rows * cols,
            entries.len()
        )));
    }
    Matrix::parse_row_major(field, rows, cols, entries).map_err(|e| shape_error(object, e))
}

fn vector(field: FieldSpec, object: &str, what: &str, len: usize, entries: &[String]) -> Result<Vec<Scalar>> {
    Ok(matrix(field, object, what, 1, len, entries)?.data().to_vec())
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str, referrer: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::UnknownName(format!("{kind} \"{name}\" referenced by {referrer}")))
}

impl Workspace {
    pub fn new(field: FieldSpec) -> Self {
        Workspace {
            field,
            hopf: BTreeMap::new(),
            comodules: BTreeMap::new(),
            comodule_algebras: BTreeMap::new(),
            rel_hopf_modules: BTreeMap::new(),
            b_modules: BTreeMap::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Parses and validates every object, stopping at the first failure.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, true)
    }

    /// Parses with shape checks only; the axioms are left to [`Workspace::validate`] or the suite.
    pub fn parse_unvalidated(text: &str) -> Result<Self> {
        Self::parse_with(text, false)
    }

    pub fn load_unvalidated(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_unvalidated(&text)
    }

    fn parse_with(text: &str, strict: bool) -> Result<Self> {
        let raw: RawWorkspace = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field = match (raw.field.kind.as_str(), raw.field.p) {
            ("Q", None) => FieldSpec::Rationals,
            ("GF", Some(p)) => FieldSpec::prime(p)?,
            (kind, p) => return Err(Error::Parse(format!("unsupported field kind {kind:?} with p = {p:?}"))),
        };
        let mut ws = Workspace::new(field);
        for (name, h) in &raw.hopf {
            let object = format!("Hopf algebra \"{name}\"");
            let n = h.dim;
            let mult = matrix(field, &object, "mult", n, n * n, &h.mult)?;
            let unit = vector(field, &object, "unit", n, &h.unit)?;
            let comult = matrix(field, &object, "comult", n * n, n, &h.comult)?;
            let counit = vector(field, &object, "counit", n, &h.counit)?;
            let antipode = h.antipode.as_ref().map(|s| matrix(field, &object, "antipode", n, n, s)).transpose()?;
            let algebra = Algebra::new(field, n, mult, unit).map_err(|e| shape_error(&object, e))?;
            let hopf = if strict {
                HopfAlgebra::new(algebra, comult, counit, antipode)
            } else {
                HopfAlgebra::from_parts(algebra, comult, counit, antipode)
            }.map_err(|e| shape_error(&object, e))?;
            ws.hopf.insert(name.clone(), Arc::new(hopf));
        }
        for (name, c) in &raw.comodules {
            let object = format!("comodule \"{name}\"");
            let hopf = lookup(&ws.hopf, "Hopf algebra", &c.hopf, &object)?.clone();
            let rho = matrix(field, &object, "coaction", c.dim * hopf.dim(), c.dim, &c.coaction)?;
            let comodule = if strict { Comodule::new(hopf, c.dim, rho) } else { Comodule::from_parts(hopf, c.dim, rho) }.map_err(|e| shape_error(&object, e))?;
            ws.comodules.insert(name.clone(), NamedComodule { hopf: c.hopf.clone(), comodule });
        }
        for (name, a) in &raw.comodule_algebras {
            let object = format!("comodule algebra \"{name}\"");
            let hopf = lookup(&ws.hopf, "Hopf algebra", &a.hopf, &object)?.clone();
            let n = a.dim;
            let mult = matrix(field, &object, "mult", n, n * n, &a.mult)?;
            let unit = vector(field, &object, "unit", n, &a.unit)?;
            let rho = matrix(field, &object, "coaction", n * hopf.dim(), n, &a.coaction)?;
            let algebra = Algebra::new(field, n, mult, unit).map_err(|e| shape_error(&object, e))?;
            let comodule = Comodule::from_parts(hopf, n, rho).map_err(|e| shape_error(&object, e))?;
            let base = if strict {
                ComoduleAlgebra::new(Arc::new(algebra), comodule)
            } else {
                ComoduleAlgebra::from_parts(Arc::new(algebra), comodule)
            }.map_err(|e| shape_error(&object, e))?;
            ws.add_comodule_algebra(name, &a.hopf, Arc::new(base))?;
        }
        for (name, m) in &raw.rel_hopf_modules {
            let object = format!("relative Hopf module \"{name}\"");
            let base = lookup(&ws.comodule_algebras, "comodule algebra", &m.algebra, &object)?.algebra.clone();
            let rho = matrix(field, &object, "coaction", m.dim * base.hopf().dim(), m.dim, &m.coaction)?;
            let action = matrix(field, &object, "action", m.dim, base.dim() * m.dim, &m.action)?;
            let comodule = Comodule::from_parts(base.hopf().clone(), m.dim, rho).map_err(|e| shape_error(&object, e))?;
            let module = if strict {
                RelHopfModule::new(base, comodule, action)
            } else {
                RelHopfModule::from_parts(base, comodule, action)
            }.map_err(|e| shape_error(&object, e))?;
            ws.rel_hopf_modules.insert(name.clone(), NamedRelModule { algebra: m.algebra.clone(), module });
        }
        for (name, m) in &raw.b_modules {
            let object = format!("B-module \"{name}\"");
            let b = &lookup(&ws.comodule_algebras, "comodule algebra", &m.algebra, &object)?.coinvariants;
            let action = matrix(field, &object, "action", m.dim, b.dim() * m.dim, &m.action)?;
            let module = if strict {
                AlgebraModule::new(b.algebra.clone(), m.dim, action)
            } else {
                AlgebraModule::from_parts(b.algebra.clone(), m.dim, action)
            }.map_err(|e| shape_error(&object, e))?;
            ws.b_modules.insert(name.clone(), NamedBModule { algebra: m.algebra.clone(), module });
        }
        Ok(ws)
    }

    /// The canonical rendering: sorted names, the stored antipode always written out.
    pub fn to_json(&self) -> String {
        let field = match self.field {
            FieldSpec::Rationals => RawField { kind: "Q".into(), p: None },
            FieldSpec::Prime(p) => RawField { kind: "GF".into(), p: Some(p) },
        };
        let hopf = self
            .hopf
            .iter()
            .map(|(name, h)| {
                let raw = RawHopf {
                    dim: h.dim(),
                    mult: h.algebra().mult().to_strings(),
                    unit: strings(h.unit()),
                    comult: h.comult().to_strings(),
                    counit: strings(h.counit()),
                    antipode: Some(h.antipode().to_strings()),
                };
                (name.clone(), raw)
            })
            .collect();
        let comodules = self
            .comodules
            .iter()
            .map(|(name, c)| {
                let raw = RawComodule {
                    hopf: c.hopf.clone(),
                    dim: c.comodule.dim(),
                    coaction: c.comodule.coaction().to_strings(),
                };
                (name.clone(), raw)
            })
            .collect();
        let comodule_algebras = self
            .comodule_algebras
            .iter()
            .map(|(name, a)| {
                let raw = RawComoduleAlgebra {
                    hopf: a.hopf.clone(),
                    dim: a.algebra.dim(),
                    mult: a.algebra.algebra().mult().to_strings(),
                    unit: strings(a.algebra.algebra().unit()),
                    coaction: a.algebra.comodule().coaction().to_strings(),
                };
                (name.clone(), raw)
            })
            .collect();
        let rel_hopf_modules = self
            .rel_hopf_modules
            .iter()
            .map(|(name, m)| {
                let raw = RawRelModule {
                    algebra: m.algebra.clone(),
                    dim: m.module.dim(),
                    coaction: m.module.comodule().coaction().to_strings(),
                    action: m.module.module().action().to_strings(),
                };
                (name.clone(), raw)
            })
            .collect();
        let b_modules = self
            .b_modules
            .iter()
            .map(|(name, m)| {
                let raw = RawBModule { algebra: m.algebra.clone(), dim: m.module.dim(), action: m.module.action().to_strings() };
                (name.clone(), raw)
            })
            .collect();
        let raw = RawWorkspace { field, hopf, comodules, comodule_algebras, rel_hopf_modules, b_modules };
        let mut text = serde_json::to_string_pretty(&raw).expect("plain data serializes");
        text.push('\n');
        text
    }

    pub fn add_hopf(&mut self, name: &str, hopf: Arc<HopfAlgebra>) -> Result<()> {
        if hopf.field() != self.field {
            return Err(Error::FieldMismatch(hopf.field().label(), self.field.label()));
        }
        self.hopf.insert(name.to_string(), hopf);
        Ok(())
    }

    /// Adds a comodule over the named Hopf algebra, which must be the one it was built over.
    pub fn add_comodule(&mut self, name: &str, hopf: &str, comodule: Comodule) -> Result<()> {
        let h = lookup(&self.hopf, "Hopf algebra", hopf, name)?;
        if **h != **comodule.hopf() {
            return Err(Error::HopfMismatch);
        }
        self.comodules.insert(name.to_string(), NamedComodule { hopf: hopf.to_string(), comodule });
        Ok(())
    }

    pub fn add_comodule_algebra(&mut self, name: &str, hopf: &str, algebra: Arc<ComoduleAlgebra>) -> Result<()> {
        let h = lookup(&self.hopf, "Hopf algebra", hopf, name)?;
        if **h != **algebra.hopf() {
            return Err(Error::HopfMismatch);
        }
        let coinvariants = algebra.coinvariant_subalgebra();
        self.comodule_algebras
            .insert(name.to_string(), NamedComoduleAlgebra { hopf: hopf.to_string(), algebra, coinvariants });
        Ok(())
    }

    pub fn add_rel_module(&mut self, name: &str, algebra: &str, module: RelHopfModule) -> Result<()> {
        let a = lookup(&self.comodule_algebras, "comodule algebra", algebra, name)?;
        if *a.algebra != **module.base() {
            return Err(Error::Hypothesis(format!("{name} is not over {algebra}")));
        }
        self.rel_hopf_modules.insert(name.to_string(), NamedRelModule { algebra: algebra.to_string(), module });
        Ok(())
    }

    pub fn add_b_module(&mut self, name: &str, algebra: &str, module: AlgebraModule) -> Result<()> {
        let a = lookup(&self.comodule_algebras, "comodule algebra", algebra, name)?;
        if **module.algebra() != *a.coinvariants.algebra {
            return Err(Error::Hypothesis(format!("{name} is not over the coinvariants of {algebra}")));
        }
        self.b_modules.insert(name.to_string(), NamedBModule { algebra: algebra.to_string(), module });
        Ok(())
    }

    pub fn hopf_algebra(&self, name: &str) -> Result<&Arc<HopfAlgebra>> {
        lookup(&self.hopf, "Hopf algebra", name, "the request")
    }

    pub fn comodule(&self, name: &str) -> Result<&Comodule> {
        Ok(&lookup(&self.comodules, "comodule", name, "the request")?.comodule)
    }

    pub fn comodule_algebra(&self, name: &str) -> Result<&NamedComoduleAlgebra> {
        lookup(&self.comodule_algebras, "comodule algebra", name, "the request")
    }

    pub fn rel_module(&self, name: &str) -> Result<&RelHopfModule> {
        Ok(&lookup(&self.rel_hopf_modules, "relative Hopf module", name, "the request")?.module)
    }

    pub fn b_module(&self, name: &str) -> Result<&NamedBModule> {
        lookup(&self.b_modules, "B-module", name, "the request")
    }

    /// Comodule names grouped by the Hopf algebra they live over.
    pub fn comodules_over(&self, hopf: &str) -> Vec<(&str, &Comodule)> {
        self.comodules.iter().filter(|(_, c)| c.hopf == hopf).map(|(n, c)| (n.as_str(), &c.comodule)).collect()
    }

    pub fn rel_modules_over(&self, algebra: &str) -> Vec<(&str, &RelHopfModule)> {
        self.rel_hopf_modules
            .iter()
            .filter(|(_, m)| m.algebra == algebra)
            .map(|(n, m)| (n.as_str(), &m.module))
            .collect()
    }

    pub fn b_modules_over(&self, algebra: &str) -> Vec<(&str, &AlgebraModule)> {
        self.b_modules.iter().filter(|(_, m)| m.algebra == algebra).map(|(n, m)| (n.as_str(), &m.module)).collect()
    }

    /// Every object's validation report, in file order.
    pub fn reports(&self) -> Vec<(String, ValidationReport)> {
        let mut out = Vec::new();
        for (name, h) in &self.hopf {
            out.push((format!("hopf/{name}"), h.validate()));
        }
        for (name, c) in &self.comodules {
            out.push((format!("comodules/{name}"), c.comodule.validate()));
        }
        for (name, a) in &self.comodule_algebras {
            out.push((format!("comodule_algebras/{name}"), a.algebra.validate()));
        }
        for (name, m) in &self.rel_hopf_modules {
            out.push((format!("rel_hopf_modules/{name}"), m.module.validate()));
        }
        for (name, m) in &self.b_modules {
            out.push((format!("b_modules/{name}"), m.module.validate()));
        }
        out
    }

    /// Fails with the first object whose axioms do not hold.
    pub fn validate(&self) -> Result<()> {
        for (object, report) in self.reports() {
            checked(&object, report)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn characteristic_four_is_a_parse_error() {
        let text = r#"{"field": {"kind": "GF", "p": 4}}"#;
        assert!(matches!(Workspace::parse(text), Err(Error::Parse(_))));
    }

    #[test]
    fn unknown_references_are_reported() {
        let text = r#"{"field": {"kind": "Q"}, "comodules": {"k": {"hopf": "H", "dim": 1, "coaction": ["1"]}}}"#;
        assert!(matches!(Workspace::parse(text), Err(Error::UnknownName(_))));
    }

    #[test]
    fn missing_antipode_is_solved() {
        let ws = fixtures::fixture_workspace("sweedler4_q").unwrap();
        let mut value: serde_json::Value = serde_json::from_str(&ws.to_json()).unwrap();
        value["hopf"]["H"].as_object_mut().unwrap().remove("antipode");
        let back = Workspace::parse(&value.to_string()).unwrap();
        assert_eq!(back.to_json(), ws.to_json());
    }

    #[test]
    fn broken_coassociativity_names_the_object() {
        let ws = fixtures::fixture_workspace("kc2_q").unwrap();
        let mut value: serde_json::Value = serde_json::from_str(&ws.to_json()).unwrap();
        // Delta(g) gains a 1 (x) 1 term
        value["hopf"]["H"]["comult"][1] = serde_json::json!("1");
        match Workspace::parse(&value.to_string()) {
            Err(Error::Validation { object, report }) => {
                assert!(object.contains("\"H\""));
                assert!(report.failing().contains(&"coassociativity"));
            }
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn fixtures_round_trip() {
        for name in fixtures::FIXTURE_NAMES {
            let ws = fixtures::fixture_workspace(name).unwrap();
            let text = ws.to_json();
            let back = Workspace::parse(&text).unwrap();
            assert_eq!(back.to_json(), text, "{name}");
            back.validate().unwrap();
        }
    }
}
