//! Tower definitions and their JSON file format.
//!
//! ```json
//! {"id": "gs-q2", "notes": "...", "field": {"p": 2, "k": 2},
//!  "kind": "depth1", "f": <poly in X, Y>}
//! {"kind": "depth2", "phi": <poly in X, Y>, "psi": <poly in X, Y, Z>}
//! {"kind": "twisted-depth2", "phi": <poly in X, Y>, "backtrack": <poly in U, T>,
//!  "twist": 8, "alpha": 33}
//! ```
//! Polynomials use the serialized polynomial format and may live over any
//! subfield of `field`; they are embedded on load. `alpha`, when present,
//! asserts that the generator of the subfield used by `phi` maps to `β^alpha`.

use std::path::Path;
use std::sync::Arc;

use num_traits::Zero;
use serde_json::{json, Value};

use super::{Catalog, CatalogError};
use crate::gf::{make_field, Embedding, FieldSpec, Gf};
use crate::poly::{serial, GfRing, Rationals, Ring, SparsePoly};

#[derive(Clone, Debug)]
pub enum TowerKind {
    /// `f(u_{n-1}, u_n) = 0`; variables `X, Y`.
    Depth1 { f: SparsePoly<GfRing> },
    /// `Φ(u_0, u_1) = 0`, then `Ψ(u_{n-2}, u_{n-1}, u_n) = 0`; variables `X, Y(, Z)`.
    Depth2 { phi: SparsePoly<GfRing>, psi: SparsePoly<GfRing> },
    /// Step `n` is `Φ` with coefficients raised to `twist^(n-1)`, with the
    /// linear backtrack factor (in `U = u_{n-2}`, `T = u_n`, twisted by
    /// `twist^(n-2)`) divided out from level 2 on.
    TwistedDepth2 { phi: SparsePoly<GfRing>, backtrack: SparsePoly<GfRing>, twist: u64 },
}

#[derive(Clone, Debug)]
pub struct TowerDef {
    pub id: String,
    pub field: Arc<FieldSpec>,
    pub kind: TowerKind,
    pub notes: String,
}

impl TowerDef {
    pub fn ring(&self) -> GfRing {
        GfRing::new(self.field.clone())
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            TowerKind::Depth1 { .. } => "depth1",
            TowerKind::Depth2 { .. } => "depth2",
            TowerKind::TwistedDepth2 { .. } => "twisted-depth2",
        }
    }

    /// Degree of the level-`n` step in the new variable, after removing the
    /// backtrack factor.
    pub fn step_degree(&self, level: usize) -> u32 {
        let dy = |p: &SparsePoly<GfRing>, v: &str| p.degree_in(v).unwrap().unwrap_or(0);
        match &self.kind {
            TowerKind::Depth1 { f } => dy(f, "Y"),
            TowerKind::Depth2 { phi, psi } => {
                if level <= 1 {
                    dy(phi, "Y")
                } else {
                    dy(psi, "Z")
                }
            }
            TowerKind::TwistedDepth2 { phi, .. } => dy(phi, "Y") - u32::from(level >= 2),
        }
    }
}

fn schema(m: impl Into<String>) -> CatalogError {
    CatalogError::Schema(m.into())
}

pub fn embed_poly(p: &SparsePoly<GfRing>, target: &Arc<FieldSpec>) -> Result<SparsePoly<GfRing>, CatalogError> {
    let src = p.ring().field().clone();
    if *src == **target {
        return Ok(p.clone());
    }
    let e = Embedding::new(src, target.clone())?;
    Ok(p.map_coeffs(&GfRing::new(target.clone()), |c| e.map(*c)))
}

fn read_poly(v: &Value, key: &str, field: &Arc<FieldSpec>, vars: &[&str]) -> Result<SparsePoly<GfRing>, CatalogError> {
    let pv = v.get(key).ok_or_else(|| schema(format!("missing {key}")))?;
    let fd: crate::gf::FieldDescriptor =
        serde_json::from_value(pv["domain"].clone()).map_err(|e| schema(format!("{key}: domain: {e}")))?;
    let p = serial::from_json(&GfRing::new(fd.resolve()?), pv)?;
    let p = embed_poly(&p, field)?;
    let want: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    for u in p.used_vars() {
        if !want.contains(&u) {
            return Err(schema(format!("{key} uses variable {u}, expected {vars:?}")));
        }
    }
    Ok(p.with_vars(&want)?)
}

fn need_degree(p: &SparsePoly<GfRing>, var: &str) -> Result<(), CatalogError> {
    match p.degree_in(var)? {
        Some(d) if d > 0 => Ok(()),
        _ => Err(CatalogError::DegreeZeroStep(var.into())),
    }
}

pub fn parse_tower_json(v: &Value) -> Result<TowerDef, CatalogError> {
    let id = v["id"].as_str().ok_or_else(|| schema("missing id"))?.to_string();
    let notes = v["notes"].as_str().unwrap_or("").to_string();
    let fv = &v["field"];
    let p = fv["p"].as_u64().ok_or_else(|| schema("field.p"))?;
    let k = fv["k"].as_u64().ok_or_else(|| schema("field.k"))? as u32;
    let poly: Option<Vec<u64>> = match fv.get("poly") {
        Some(x) => Some(serde_json::from_value(x.clone()).map_err(|e| schema(e.to_string()))?),
        None => None,
    };
    let field = make_field(p, k, poly.as_deref())?;
    let kind = match v["kind"].as_str() {
        Some("depth1") => {
            let f = read_poly(v, "f", &field, &["X", "Y"])?;
            need_degree(&f, "Y")?;
            TowerKind::Depth1 { f }
        }
        Some("depth2") => {
            let phi = read_poly(v, "phi", &field, &["X", "Y"])?;
            let psi = read_poly(v, "psi", &field, &["X", "Y", "Z"])?;
            need_degree(&phi, "Y")?;
            need_degree(&psi, "Z")?;
            TowerKind::Depth2 { phi, psi }
        }
        Some("twisted-depth2") => {
            let phi = read_poly(v, "phi", &field, &["X", "Y"])?;
            let backtrack = read_poly(v, "backtrack", &field, &["U", "T"])?;
            need_degree(&phi, "Y")?;
            if backtrack.degree_in("T")? != Some(1) {
                return Err(schema("backtrack factor must be linear in T"));
            }
            let twist = v["twist"].as_u64().ok_or_else(|| schema("twist"))?;
            if !field.is_char_power(twist) {
                return Err(schema(format!("twist {twist} is not a power of the characteristic")));
            }
            if let Some(a) = v.get("alpha").and_then(Value::as_u64) {
                let sub = v["phi"]["domain"].clone();
                let fd: crate::gf::FieldDescriptor = serde_json::from_value(sub).map_err(|e| schema(e.to_string()))?;
                let sf = fd.resolve()?;
                let e = Embedding::new(sf.clone(), field.clone())?;
                if e.map(sf.beta_pow(1)) != field.beta_pow(a as i64) {
                    return Err(schema(format!("subfield generator does not embed as b^{a}")));
                }
            }
            TowerKind::TwistedDepth2 { phi, backtrack, twist }
        }
        other => return Err(schema(format!("unknown kind {other:?}"))),
    };
    Ok(TowerDef { id, field, kind, notes })
}

pub fn parse_tower_file(path: &Path) -> Result<TowerDef, CatalogError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CatalogError::Io { path: path.display().to_string(), msg: e.to_string() })?;
    let v: Value = serde_json::from_str(&text).map_err(|e| schema(e.to_string()))?;
    parse_tower_json(&v)
}

fn field_json(p: u64, k: u32) -> Value {
    json!({"p": p, "k": k})
}

/// JSON form of a tower definition over its natural coefficient fields.
pub fn tower_file_json(id: &str, notes: &str, field: (u64, u32), kind: &str, polys: &[(&str, &SparsePoly<GfRing>)]) -> Value {
    let mut v = json!({"id": id, "notes": notes, "field": field_json(field.0, field.1), "kind": kind});
    for (k, p) in polys {
        v[*k] = serial::to_json(p);
    }
    v
}

fn rational_to_prime_field(p: &SparsePoly<Rationals>, prime: u64) -> Result<SparsePoly<GfRing>, CatalogError> {
    // prime fields outside the Conway table: any degree-1 modulus will do
    let f = make_field(prime, 1, None).or_else(|_| make_field(prime, 1, Some(&[0, 1])))?;
    let r = GfRing::new(f.clone());
    let m = num_bigint::BigInt::from(prime);
    let bad = std::cell::Cell::new(false);
    let out = p.map_coeffs(&r, |c| {
        let n = (c.numer() % &m + &m) % &m;
        let d = (c.denom() % &m + &m) % &m;
        if d.is_zero() {
            bad.set(true);
            return Gf::ZERO;
        }
        let to_gf = |x: &num_bigint::BigInt| f.from_int(i64::try_from(x).unwrap());
        f.mul(to_gf(&n), f.inv(to_gf(&d)).unwrap())
    });
    if bad.get() {
        return Err(schema(format!("coefficient denominator divisible by {prime}")));
    }
    Ok(out)
}

/// Reduces a polynomial over F₂[T] (with `T` among its variables) at `T := t`.
fn at_t(p: &SparsePoly<GfRing>, t: i64, keep: &[&str]) -> Result<SparsePoly<GfRing>, CatalogError> {
    let r = p.ring().clone();
    let s = p.eval_var("T", &r.from_i64(t))?;
    Ok(s.with_vars(&keep.iter().map(|s| s.to_string()).collect::<Vec<_>>())?)
}

/// Tower files derived from the golden polynomials.
pub fn builtin_tower_files(cat: &Catalog) -> Result<Vec<(String, Value)>, CatalogError> {
    let mut out = Vec::new();
    let mut push = |id: &str, notes: &str, field: (u64, u32), kind: &str, polys: &[(&str, &SparsePoly<GfRing>)], extra: Value| {
        let mut v = tower_file_json(id, notes, field, kind, polys);
        if let Value::Object(m) = extra {
            for (k, x) in m {
                v[k] = x;
            }
        }
        out.push((id.to_string(), v));
    };
    let none = json!({});
    push(
        "gs-q2",
        "y^2+y = x^2/(x+1) over F4",
        (2, 2),
        "depth1",
        &[("f", &cat.gf("gs_q2", "f")?)],
        none.clone(),
    );
    push(
        "elkies-q2",
        "(y+1)y = x^2/(x+1) over F4 (reduction of X0(T^n) at T+1)",
        (2, 2),
        "depth1",
        &[("f", &cat.gf("elkies_q2", "f")?)],
        none.clone(),
    );
    let phi = at_t(&cat.gf("phi_t", "phi")?, 1, &["X", "Y"])?;
    let psi = at_t(&cat.gf("psi_t", "psi")?, 1, &["X", "Y", "Z"])?;
    push(
        "drinfeld-t",
        "X0(T^n) by the depth-two recursion, reduced at T+1, over F4",
        (2, 2),
        "depth2",
        &[("phi", &phi), ("psi", &psi)],
        none.clone(),
    );
    push(
        "ff-t2t1",
        "f_{T^2+T+1} mod T over F4",
        (2, 2),
        "depth1",
        &[("f", &cat.gf("f_t2t1_mod_t", "f")?)],
        none.clone(),
    );
    push(
        "ff-t2t",
        "f_{T^2+T} mod T^2+T+1 over F16",
        (2, 4),
        "depth1",
        &[("f", &cat.gf("f_t2t_mod_t2t1", "f")?)],
        none.clone(),
    );
    push(
        "elliptic",
        "Phi(alpha^(8^n), u_n, u_(n+1)) = 0 over F1024 with alpha = b^33",
        (2, 10),
        "twisted-depth2",
        &[("phi", &cat.gf("phi_alpha", "phi")?), ("backtrack", &cat.gf("level2_factor", "factor")?)],
        json!({"twist": 8, "alpha": 33}),
    );
    let lo = cat.rational("loetter", "scaled")?;
    let lo7 = rational_to_prime_field(&lo, 7)?.with_vars(&["X".to_string(), "Y".to_string()])?;
    for (id, k) in [("loetter-2401", 4), ("loetter-49", 2)] {
        push(
            id,
            "y^5 = x(x^4-3x^3+4x^2-2x+1)/(x^4+2x^3+4x^2+3x+1) mod 7",
            (7, k),
            "depth1",
            &[("f", &lo7)],
            none.clone(),
        );
    }
    Ok(out)
}

pub(crate) fn reduce_rational(p: &SparsePoly<Rationals>, prime: u64) -> Result<SparsePoly<GfRing>, CatalogError> {
    rational_to_prime_field(p, prime)
}

