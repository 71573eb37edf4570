//! Text inputs: group JSON, builtin names, G-set expressions, functor specs
//! and module JSON.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::functor::{MackeyModule, ModuleJson};
use crate::group::{builtin_presentation, FiniteGroup};
use crate::gset::{GSet, Omega};

/// `{"degree": n, "generators": [[images…], …], "name": optional}` with
/// 1-indexed images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default)]
    pub name: Option<String>,
}

pub fn parse_group_json(text: &str, cap: usize) -> Result<FiniteGroup> {
    let spec: GroupJson = serde_json::from_str(text)?;
    let group = FiniteGroup::from_generators_capped(spec.degree, &spec.generators, cap)?;
    Ok(match spec.name {
        Some(name) => group.with_name(name),
        None => group,
    })
}

pub fn builtin_group(name: &str, cap: usize) -> Result<FiniteGroup> {
    let (degree, gens) = builtin_presentation(name)?;
    Ok(FiniteGroup::from_generators_capped(degree, &gens, cap)?.with_name(name))
}

/// A builtin name, or else a path to a group JSON file.
pub fn load_group(source: &str, cap: usize) -> Result<FiniteGroup> {
    match builtin_group(source, cap) {
        Err(Error::UnknownGroup(_)) if Path::new(source).is_file() => {
            let text = std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
            parse_group_json(&text, cap)
        }
        other => other,
    }
}

/// Parses `term (+ term)*` where a term is `G/i` (subgroup class `i`),
/// `Omega`, `Gc`, `pt` or `empty`.
pub fn parse_gset(group: &Arc<FiniteGroup>, expr: &str) -> Result<Arc<GSet>> {
    let mut parts = Vec::new();
    for raw in expr.split('+') {
        let term = raw.trim();
        let set = match term {
            "" => return Err(Error::Parse(format!("empty term in G-set expression {expr:?}"))),
            "Omega" => Omega::new(group).set,
            "Gc" => Arc::new(GSet::conjugation(group)),
            "pt" => Arc::new(GSet::point(group)),
            "empty" => Arc::new(GSet::empty(group)),
            _ => {
                let index = term
                    .strip_prefix("G/")
                    .ok_or_else(|| Error::Parse(format!("unknown G-set term {term:?}")))?;
                if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad subgroup class index in {term:?}")));
                }
                let class: usize = index.parse().map_err(|_| Error::Parse(format!("bad index in {term:?}")))?;
                let classes = group.subgroup_classes();
                if class >= classes.len() {
                    return Err(Error::Parse(format!(
                        "subgroup class {class} out of range (group has {})",
                        classes.len()
                    )));
                }
                Arc::new(GSet::transitive(group, classes[class].rep))
            }
        };
        parts.push(set);
    }
    if parts.len() == 1 {
        return Ok(parts.pop().expect("one part"));
    }
    GSet::sum(group, &parts)
}

/// Which Mackey functor a command acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorSpec {
    /// `yoneda:<G-set expression>`
    Yoneda(String),
    /// `burnside`, the Yoneda functor at a point.
    Burnside,
    /// `json:<path>`
    Json(String),
}

pub fn parse_functor_spec(text: &str) -> Result<FunctorSpec> {
    let text = text.trim();
    if text == "burnside" {
        return Ok(FunctorSpec::Burnside);
    }
    if let Some(x) = text.strip_prefix("yoneda:") {
        if x.trim().is_empty() {
            return Err(Error::Parse("yoneda: needs a G-set expression".into()));
        }
        return Ok(FunctorSpec::Yoneda(x.trim().to_string()));
    }
    if let Some(p) = text.strip_prefix("json:") {
        if p.is_empty() {
            return Err(Error::Parse("json: needs a path".into()));
        }
        return Ok(FunctorSpec::Json(p.to_string()));
    }
    Err(Error::Parse(format!("unknown functor spec {text:?}")))
}

/// Reads a module from JSON and checks it against the algebra.
pub fn parse_module_json(alg: &AlgebraData, text: &str) -> Result<MackeyModule> {
    let spec: ModuleJson = serde_json::from_str(text)?;
    if spec.action.len() != alg.rank() {
        return Err(Error::InvalidModule(format!(
            "expected {} action matrices, found {}",
            alg.rank(),
            spec.action.len()
        )));
    }
    if spec.component_ranks.len() != alg.group.subgroup_classes().len() {
        return Err(Error::InvalidModule("one rank per subgroup class is required".into()));
    }
    spec.into_module(alg)
}
