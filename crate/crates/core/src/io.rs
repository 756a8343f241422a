//! JSON forms of rings, modules and resolutions; content hashes; the
//! on-disk resolution cache.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::complexes::{minimal_resolution, FreeComplex, GradedFree, ModulePresentation, PolyMatrix, Resolution};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{MonomialOrder, PolyRing};
use crate::ring::RingSetup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarSpec {
    pub name: String,
    pub deg: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub p: u64,
    pub vars: Vec<VarSpec>,
    pub f: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    pub deg: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub gens: Vec<GenSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

impl RingSpec {
    pub fn build(&self) -> Result<RingSetup> {
        let field = Field::prime(self.p)?;
        let order = match &self.order {
            Some(o) => MonomialOrder::parse(o)?,
            None => MonomialOrder::Grevlex,
        };
        let names: Vec<String> = self.vars.iter().map(|v| v.name.clone()).collect();
        let weights: Vec<u32> = self.vars.iter().map(|v| v.deg).collect();
        if weights.contains(&0) {
            return Err(Error::Input("variable degrees must be positive".into()));
        }
        let q = PolyRing::from_owned(&field, names, weights, order)?;
        let f = self.f.iter().map(|s| q.parse(s)).collect::<Result<Vec<_>>>()?;
        RingSetup::build_ci(&q, f)
    }

    pub fn of(ring: &RingSetup) -> Self {
        let q = ring.q();
        let order = match q.order() {
            MonomialOrder::Grevlex => None,
            o => Some(o.name().to_string()),
        };
        RingSpec {
            p: ring.field().characteristic() as u64,
            vars: q.names().iter().zip(q.weights()).map(|(n, d)| VarSpec { name: n.clone(), deg: *d }).collect(),
            f: ring.f().iter().map(|p| q.format(p)).collect(),
            order,
        }
    }
}

impl ModuleSpec {
    pub fn build(&self, ring: &RingSetup) -> Result<ModulePresentation> {
        let gens: Vec<i64> = self.gens.iter().map(|g| g.deg).collect();
        let cols = self
            .relations
            .iter()
            .map(|c| c.iter().map(|s| ring.q().parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ModulePresentation::from_columns(ring, gens, cols)
    }

    pub fn of(ring: &RingSetup, m: &ModulePresentation) -> Self {
        ModuleSpec {
            gens: m.gens().iter().map(|&deg| GenSpec { deg }).collect(),
            relations: m.relations().format(ring),
        }
    }
}

/// Serializes with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(v: &T) -> Result<String> {
    let value: Value = serde_json::to_value(v)?;
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn ring_hash(ring: &RingSetup) -> String {
    sha256_hex(serde_json::to_string(&serde_json::to_value(RingSpec::of(ring)).unwrap()).unwrap().as_bytes())
}

pub fn module_hash(ring: &RingSetup, m: &ModulePresentation) -> String {
    let v = serde_json::json!({ "ring": ring_hash(ring), "module": ModuleSpec::of(ring, m) });
    sha256_hex(serde_json::to_string(&v).unwrap().as_bytes())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionSpec {
    pub module: ModuleSpec,
    pub terms: Vec<Vec<i64>>,
    /// `diffs[i]` is `d_{i+1}`, as columns.
    pub diffs: Vec<Vec<Vec<String>>>,
    pub bounded: bool,
    pub computed_to: usize,
}

impl ResolutionSpec {
    pub fn of(ring: &RingSetup, res: &Resolution) -> Self {
        let c = res.complex();
        let len = c.ranks().len();
        ResolutionSpec {
            module: ModuleSpec::of(ring, res.module()),
            terms: (0..len as i64).map(|i| c.term(i).degrees().to_vec()).collect(),
            diffs: (1..len as i64).map(|i| c.diff(i).unwrap().format(ring)).collect(),
            bounded: c.is_bounded(),
            computed_to: res.computed_to(),
        }
    }

    pub fn build(&self, ring: &RingSetup) -> Result<Resolution> {
        let module = self.module.build(ring)?;
        let terms: Vec<GradedFree> = self.terms.iter().map(|t| GradedFree::new(t.clone())).collect();
        let mut diffs = Vec::new();
        for (i, cols) in self.diffs.iter().enumerate() {
            let cols = cols
                .iter()
                .map(|c| c.iter().map(|s| ring.q().parse(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let tgt = self.terms.get(i).ok_or_else(|| Error::Input("malformed resolution".into()))?;
            let src = self.terms.get(i + 1).ok_or_else(|| Error::Input("malformed resolution".into()))?;
            if cols.len() != src.len() || cols.iter().any(|c| c.len() != tgt.len()) {
                return Err(Error::Input("malformed resolution".into()));
            }
            diffs.push(PolyMatrix::from_columns(tgt, src, &cols));
        }
        let complex = FreeComplex::new(0, terms, diffs, self.bounded)?;
        Ok(Resolution::from_parts(complex, module, true, self.computed_to))
    }
}

/// Resolutions on disk, keyed by `(ring hash, module hash, depth)`.
#[derive(Clone, Debug)]
pub struct ResolutionCache {
    root: Option<PathBuf>,
}

impl ResolutionCache {
    pub fn disabled() -> Self {
        ResolutionCache { root: None }
    }

    pub fn at(root: impl Into<PathBuf>) -> Self {
        ResolutionCache { root: Some(root.into()) }
    }

    /// Rooted at `SUPPORT_FORGE_CACHE`, if set.
    pub fn from_env() -> Self {
        match std::env::var_os("SUPPORT_FORGE_CACHE") {
            Some(p) if !p.is_empty() => Self::at(p),
            _ => Self::disabled(),
        }
    }

    pub fn root(&self) -> Option<&Path> {
        self.root.as_deref()
    }

    fn path(&self, ring: &RingSetup, m: &ModulePresentation, depth: usize) -> Option<PathBuf> {
        let key = sha256_hex(format!("{}:{}:{}", ring_hash(ring), module_hash(ring, m), depth).as_bytes());
        self.root.as_ref().map(|r| r.join(format!("{key}.json")))
    }

    pub fn resolve(&self, ring: &RingSetup, m: &ModulePresentation, depth: usize) -> Result<Resolution> {
        let Some(path) = self.path(ring, m, depth) else {
            return Ok(minimal_resolution(ring, m, depth));
        };
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(spec) = serde_json::from_str::<ResolutionSpec>(&text) {
                if let Ok(res) = spec.build(ring) {
                    return Ok(res);
                }
            }
        }
        let res = minimal_resolution(ring, m, depth);
        let dir = path.parent().expect("cache file has a parent");
        fs::create_dir_all(dir)?;
        let tmp = tempfile_path(&path);
        fs::write(&tmp, canonical_json(&ResolutionSpec::of(ring, &res))?)?;
        fs::rename(&tmp, &path)?;
        Ok(res)
    }
}

fn tempfile_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap().to_os_string();
    name.push(format!(".tmp{}", std::process::id()));
    path.with_file_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_round_trip() {
        let spec: RingSpec =
            serde_json::from_str(r#"{"p":2,"vars":[{"name":"x","deg":1},{"name":"y","deg":1}],"f":["x^2","y^2"]}"#).unwrap();
        let r = spec.build().unwrap();
        assert_eq!(RingSpec::of(&r), spec);
        assert_eq!(ring_hash(&r), ring_hash(&RingSetup::flagship()));
    }

    #[test]
    fn module_round_trip() {
        let r = RingSetup::flagship();
        let spec: ModuleSpec = serde_json::from_str(r#"{"gens":[{"deg":0}],"relations":[["x"],["y"]]}"#).unwrap();
        let m = spec.build(&r).unwrap();
        assert_eq!(ModuleSpec::of(&r, &m), spec);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(serde_json::from_str::<ModuleSpec>(r#"{"gens":[],"rels":[]}"#).is_err());
    }

    #[test]
    fn cached_resolution_matches_cold() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResolutionCache::at(dir.path());
        let r = RingSetup::flagship();
        let k = ModulePresentation::residue_field(&r);
        let a = cache.resolve(&r, &k, 4).unwrap();
        let b = cache.resolve(&r, &k, 4).unwrap();
        assert_eq!(ResolutionSpec::of(&r, &a), ResolutionSpec::of(&r, &b));
        assert_eq!(a.betti(), vec![1, 2, 3, 4, 5]);
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
