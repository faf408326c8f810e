//! `{"vars": [...], "domain": {...}, "terms": [{"e": [...], "c": ...}]}`,
//! terms in descending graded-lex order.

use serde_json::{json, Value};

use super::ring::Ring;
use super::sparse::SparsePoly;
use super::PolyError;

pub fn to_json<R: Ring>(p: &SparsePoly<R>) -> Value {
    let r = p.ring();
    let terms: Vec<Value> = p.terms().rev().map(|(m, c)| json!({"e": m.0, "c": r.elem_to_json(c)})).collect();
    json!({"vars": p.vars(), "domain": r.descriptor(), "terms": terms})
}

pub fn to_string<R: Ring>(p: &SparsePoly<R>) -> String {
    serde_json::to_string(&to_json(p)).expect("serializable")
}

pub fn from_json<R: Ring>(ring: &R, v: &Value) -> Result<SparsePoly<R>, PolyError> {
    let ser = |m: &str| PolyError::Serialization(m.to_string());
    let domain = v.get("domain").ok_or_else(|| ser("missing domain"))?;
    if *domain != ring.descriptor() {
        return Err(PolyError::DomainMismatch(domain.to_string(), ring.descriptor().to_string()));
    }
    let vars: Vec<String> =
        serde_json::from_value(v.get("vars").cloned().ok_or_else(|| ser("missing vars"))?).map_err(|e| ser(&e.to_string()))?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| ser("missing terms"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let e: Vec<u32> = serde_json::from_value(t.get("e").cloned().ok_or_else(|| ser("term without e"))?)
            .map_err(|e| ser(&e.to_string()))?;
        if e.len() != vars.len() {
            return Err(ser("exponent vector length differs from vars"));
        }
        let c = ring.elem_from_json(t.get("c").ok_or_else(|| ser("term without c"))?)?;
        if ring.is_zero(&c) {
            return Err(ser("zero coefficient stored"));
        }
        parsed.push((e, c));
    }
    let n = parsed.len();
    let p = SparsePoly::from_terms(ring, &vars, parsed);
    if p.num_terms() != n {
        return Err(ser("duplicate exponent vectors"));
    }
    Ok(p)
}

pub fn from_str<R: Ring>(ring: &R, s: &str) -> Result<SparsePoly<R>, PolyError> {
    let v: Value = serde_json::from_str(s).map_err(|e| PolyError::Serialization(e.to_string()))?;
    from_json(ring, &v)
}
