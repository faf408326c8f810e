//! Golden polynomial data, tower definitions and the identity checks run
//! against them.

mod sources;
mod towers;
mod verify;
#[cfg(test)]
mod tests;

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::gf::{make_field, FieldDescriptor, FieldError};
use crate::poly::{parse_poly, serial, GfRing, PolyError, Rationals, Ring, SparsePoly};

pub use sources::{Domain, Source, SOURCES};
pub use towers::{builtin_tower_files, parse_tower_file, parse_tower_json, tower_file_json, TowerDef, TowerKind};
pub use verify::*;

/// Subdirectory of the data root holding the current golden files.
pub const DATA_VERSION: &str = "v1";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("checksum mismatch for {0}")]
    Checksum(String),
    #[error("{0} is not listed in SHA256SUMS")]
    Unlisted(String),
    #[error("no catalog entry {0}")]
    MissingEntry(String),
    #[error("catalog entry {0} has no item {1}")]
    MissingItem(String, String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("extracted quotient matches the stored polynomial neither exactly nor modulo the curve")]
    PsiMismatch,
    #[error("modulus {0} divides the level")]
    BadModulus(String),
    #[error("no catalog modular polynomial for level {0}")]
    NotInCatalog(String),
    #[error("linear factor does not divide: {0}")]
    DivisionFails(String),
    #[error("no specialization certifies irreducibility")]
    NoCertifyingSpecialization,
    #[error("step polynomial has degree zero in {0}")]
    DegreeZeroStep(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Skew(#[from] crate::skew::SkewError),
}

/// Golden data root: `$TOWERFORGE_DATA` or the repository's `data/`.
pub fn data_root() -> PathBuf {
    match std::env::var_os("TOWERFORGE_DATA") {
        Some(p) => PathBuf::from(p),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

pub fn golden_dir() -> PathBuf {
    data_root().join(DATA_VERSION)
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CatalogError {
    CatalogError::Io { path: path.display().to_string(), msg: e.to_string() }
}

pub fn source_ring_gf(domain: Domain) -> Result<GfRing, CatalogError> {
    match domain {
        Domain::Gf(p, k) => Ok(GfRing::new(make_field(p, k, None)?)),
        Domain::Rationals => Err(CatalogError::Schema("expected a finite-field domain".into())),
    }
}

fn alpha_consts(r: &GfRing) -> HashMap<String, crate::gf::Gf> {
    let f = r.field();
    let mut m = HashMap::new();
    if f.degree() > 1 {
        m.insert("alpha".to_string(), f.beta_pow(1));
    }
    m
}

fn parse_item<R: Ring>(
    r: &R,
    vars: &[&str],
    consts: &HashMap<String, R::Elem>,
    text: &str,
) -> Result<Value, CatalogError> {
    let ser = |p: &SparsePoly<R>| serial::to_json(&p.compact_keep(vars));
    Ok(match text.split_once('=') {
        Some((l, r_)) => {
            let lhs = parse_poly(r, vars, consts, l)?;
            let rhs = parse_poly(r, vars, consts, r_)?;
            json!({"lhs": ser(&lhs), "rhs": ser(&rhs)})
        }
        None => json!({"poly": ser(&parse_poly(r, vars, consts, text)?)}),
    })
}

trait KeepVars {
    fn compact_keep(&self, vars: &[&str]) -> Self;
}

impl<R: Ring> KeepVars for SparsePoly<R> {
    /// Keeps the declared variable list so stored files are uniform per entry.
    fn compact_keep(&self, vars: &[&str]) -> Self {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        self.with_vars(&v).expect("parsed over the declared variables")
    }
}

/// Serialized golden file for one transcription.
pub fn build_entry(src: &Source) -> Result<Value, CatalogError> {
    let mut items = Vec::new();
    for (name, text) in src.items {
        let mut v = match src.domain {
            Domain::Gf(..) => {
                let r = source_ring_gf(src.domain)?;
                parse_item(&r, src.vars, &alpha_consts(&r), text)?
            }
            Domain::Rationals => parse_item(&Rationals, src.vars, &HashMap::new(), text)?,
        };
        let obj = v.as_object_mut().unwrap();
        obj.insert("name".into(), json!(name));
        obj.insert("source".into(), json!(text.split_whitespace().collect::<Vec<_>>().join(" ")));
        items.push(v);
    }
    Ok(json!({"id": src.id, "description": src.description, "items": items}))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Writes every golden file plus `SHA256SUMS` into `dir`; returns file names.
pub fn write_golden(dir: &Path) -> Result<Vec<String>, CatalogError> {
    fs::create_dir_all(dir.join("towers")).map_err(|e| io_err(dir, e))?;
    let mut files: BTreeMap<String, String> = BTreeMap::new();
    for src in SOURCES {
        let text = serde_json::to_string_pretty(&build_entry(src)?).unwrap() + "\n";
        files.insert(format!("{}.json", src.id), text);
    }
    let cat = Catalog::from_files(files.clone())?;
    for (name, v) in builtin_tower_files(&cat)? {
        files.insert(format!("towers/{name}.json"), serde_json::to_string_pretty(&v).unwrap() + "\n");
    }
    let mut sums = String::new();
    for (name, text) in &files {
        let path = dir.join(name);
        fs::write(&path, text).map_err(|e| io_err(&path, e))?;
        sums.push_str(&format!("{}  {}\n", sha256_hex(text.as_bytes()), name));
    }
    let path = dir.join("SHA256SUMS");
    fs::write(&path, sums).map_err(|e| io_err(&path, e))?;
    Ok(files.into_keys().collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct EntryFile {
    id: String,
    description: String,
    items: Vec<Value>,
}

/// Loaded golden entries, keyed by id.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<String, EntryFile>,
    towers: BTreeMap<String, Value>,
}

fn ring_of(v: &Value) -> Result<Result<GfRing, Rationals>, CatalogError> {
    let d = &v["domain"];
    match d["kind"].as_str() {
        Some("gf") => {
            let fd: FieldDescriptor = serde_json::from_value(d.clone()).map_err(|e| CatalogError::Schema(e.to_string()))?;
            Ok(Ok(GfRing::new(fd.resolve()?)))
        }
        Some("rational") => Ok(Err(Rationals)),
        _ => Err(CatalogError::Schema(format!("unknown domain {d}"))),
    }
}

impl Catalog {
    /// Loads and checksum-verifies the golden directory.
    pub fn load(dir: &Path) -> Result<Catalog, CatalogError> {
        let sums_path = dir.join("SHA256SUMS");
        let sums = fs::read_to_string(&sums_path).map_err(|e| io_err(&sums_path, e))?;
        let mut files = BTreeMap::new();
        for line in sums.lines().filter(|l| !l.trim().is_empty()) {
            let (hash, name) = line
                .split_once("  ")
                .ok_or_else(|| CatalogError::Schema(format!("bad SHA256SUMS line {line:?}")))?;
            let path = dir.join(name);
            let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
            if sha256_hex(text.as_bytes()) != hash {
                return Err(CatalogError::Checksum(name.to_string()));
            }
            files.insert(name.to_string(), text);
        }
        Catalog::from_files(files)
    }

    pub fn load_default() -> Result<Catalog, CatalogError> {
        Catalog::load(&golden_dir())
    }

    fn from_files(files: BTreeMap<String, String>) -> Result<Catalog, CatalogError> {
        let mut entries = BTreeMap::new();
        let mut towers = BTreeMap::new();
        for (name, text) in files {
            let v: Value = serde_json::from_str(&text).map_err(|e| CatalogError::Schema(format!("{name}: {e}")))?;
            if let Some(t) = name.strip_prefix("towers/") {
                towers.insert(t.trim_end_matches(".json").to_string(), v);
            } else {
                let e: EntryFile = serde_json::from_value(v).map_err(|e| CatalogError::Schema(format!("{name}: {e}")))?;
                entries.insert(e.id.clone(), e);
            }
        }
        Ok(Catalog { entries, towers })
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn description(&self, id: &str) -> Result<&str, CatalogError> {
        Ok(&self.entry(id)?.description)
    }

    fn entry(&self, id: &str) -> Result<&EntryFile, CatalogError> {
        self.entries.get(id).ok_or_else(|| CatalogError::MissingEntry(id.to_string()))
    }

    fn items(&self, id: &str, name: &str) -> Result<Vec<&Value>, CatalogError> {
        let out: Vec<&Value> = self.entry(id)?.items.iter().filter(|i| i["name"] == name).collect();
        if out.is_empty() {
            return Err(CatalogError::MissingItem(id.into(), name.into()));
        }
        Ok(out)
    }

    fn gf_value(v: &Value) -> Result<SparsePoly<GfRing>, CatalogError> {
        match ring_of(v)? {
            Ok(r) => Ok(serial::from_json(&r, v)?),
            Err(_) => Err(CatalogError::Schema("expected a finite-field polynomial".into())),
        }
    }

    /// All polynomials named `name` in entry `id`, over their finite field.
    pub fn gf_all(&self, id: &str, name: &str) -> Result<Vec<SparsePoly<GfRing>>, CatalogError> {
        self.items(id, name)?
            .into_iter()
            .map(|i| Self::gf_value(i.get("poly").ok_or_else(|| CatalogError::Schema(format!("{id}.{name} is an equation")))?))
            .collect()
    }

    pub fn gf(&self, id: &str, name: &str) -> Result<SparsePoly<GfRing>, CatalogError> {
        Ok(self.gf_all(id, name)?.remove(0))
    }

    /// Equations `lhs = rhs` named `name`.
    pub fn gf_equations(
        &self,
        id: &str,
        name: &str,
    ) -> Result<Vec<(SparsePoly<GfRing>, SparsePoly<GfRing>)>, CatalogError> {
        self.items(id, name)?
            .into_iter()
            .map(|i| Ok((Self::gf_value(&i["lhs"])?, Self::gf_value(&i["rhs"])?)))
            .collect()
    }

    pub fn rational(&self, id: &str, name: &str) -> Result<SparsePoly<Rationals>, CatalogError> {
        let v = &self.items(id, name)?[0]["poly"];
        Ok(serial::from_json(&Rationals, v)?)
    }

    pub fn tower_ids(&self) -> impl Iterator<Item = &str> {
        self.towers.keys().map(String::as_str)
    }

    pub fn tower(&self, id: &str) -> Result<TowerDef, CatalogError> {
        let v = self.towers.get(id).ok_or_else(|| CatalogError::MissingEntry(format!("tower {id}")))?;
        parse_tower_json(v)
    }
}
