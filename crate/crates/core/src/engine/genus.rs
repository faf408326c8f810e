//! Riemann–Hurwitz bookkeeping and the places-to-genus limit report.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{weighted_count, Engine, EngineError, Point, Starts};
use crate::catalog::TowerKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DSource {
    /// `d = e − 1`, valid when the characteristic does not divide `e`.
    TameFormula,
    /// Different exponent taken from an external computation.
    Supplied,
    /// Unresolved place over `base` with total index `e`: only `d ≤ 2e − 2` is known.
    TwoBounded,
}

#[derive(Clone, Debug, Serialize)]
pub struct RamificationDatum {
    pub place: String,
    /// Place of the base field lying below.
    pub base: String,
    pub e: u64,
    pub f: u64,
    pub d: u64,
    pub source: DSource,
}

impl RamificationDatum {
    pub fn new(place: &str, base: &str, e: u64, d: u64, source: DSource) -> Self {
        RamificationDatum { place: place.into(), base: base.into(), e, f: 1, d, source }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenusBound {
    /// Upper bound; two-bounded places contribute `2e·f`.
    pub genus: i64,
    /// Same with two-bounded places contributing `d·f = (2e − 2)·f`.
    pub genus_sharp: i64,
    /// No two-bounded data, so `genus` is the genus.
    pub exact: bool,
}

/// `2g − 2 = m(2g₀ − 2) + Σ d·f` over a base of genus `g0` in characteristic `p`.
pub fn rh_genus(g0: u64, m: u64, p: u64, data: &[RamificationDatum]) -> Result<GenusBound, EngineError> {
    let bad = |s: String| Err(EngineError::InconsistentData(s));
    let mut over: BTreeMap<&str, u64> = BTreeMap::new();
    let (mut loose, mut sharp) = (0i64, 0i64);
    for r in data {
        if r.e == 0 || r.f == 0 {
            return bad(format!("{}: e and f must be positive", r.place));
        }
        match r.source {
            DSource::TameFormula if r.e % p == 0 => return bad(format!("{}: e = {} is wild", r.place, r.e)),
            DSource::TameFormula if r.d != r.e - 1 => return bad(format!("{}: tame d must be e − 1", r.place)),
            DSource::Supplied if r.e % p != 0 && r.d != r.e - 1 => {
                return bad(format!("{}: tame index {} with d = {}", r.place, r.e, r.d))
            }
            DSource::Supplied if r.e % p == 0 && r.d < r.e => {
                return bad(format!("{}: wild index {} needs d ≥ e", r.place, r.e))
            }
            DSource::TwoBounded if r.d > 2 * r.e - 2 => return bad(format!("{}: d exceeds 2e − 2", r.place)),
            _ => {}
        }
        *over.entry(&r.base).or_default() += r.e * r.f;
        sharp += (r.d * r.f) as i64;
        loose += match r.source {
            DSource::TwoBounded => (2 * r.e * r.f) as i64,
            _ => (r.d * r.f) as i64,
        };
    }
    if let Some((b, s)) = over.iter().find(|(_, &s)| s > m) {
        return bad(format!("Σ e·f = {s} above {b} exceeds the degree {m}"));
    }
    let base = m as i64 * (2 * g0 as i64 - 2);
    let genus = |diff: i64| -> Result<i64, EngineError> {
        let t = base + diff;
        if t % 2 != 0 || t < -2 {
            return Err(EngineError::InconsistentData(format!("2g − 2 = {t}")));
        }
        Ok(t / 2 + 1)
    };
    Ok(GenusBound {
        genus: genus(loose)?,
        genus_sharp: genus(sharp)?,
        exact: data.iter().all(|r| r.source != DSource::TwoBounded),
    })
}

/// `√q − 1` when `q` is a square.
pub fn dv_bound(q: u64) -> Option<u64> {
    let s = (q as f64).sqrt().round() as u64;
    (s * s == q).then(|| s - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LimitRow {
    pub level: usize,
    pub chains: usize,
    pub places_lower: u64,
    pub genus_upper: i64,
    pub genus_sharp: i64,
    pub genus_exact: Option<i64>,
    pub ratio: Ratio,
    pub dv_bound: Option<u64>,
}

/// Level-1 ramification of a twisted tower turned into RH data.
/// Returns the data and the bases whose places may ramify further up.
fn level_one_data(e: &Engine) -> Result<(Vec<RamificationDatum>, Vec<String>), EngineError> {
    let p = e.field().characteristic();
    let mut data = Vec::new();
    let mut wild = Vec::new();
    let pts: Vec<Point> = e.field().elements().map(Point::Finite).chain([Point::Infinity]).collect();
    for pt in pts {
        let rep = e.fiber(1, &[pt])?;
        if !rep.has_multiple_root() {
            continue;
        }
        let b = e.label(pt);
        let pat = rep.pattern();
        let deg = rep.step_degree;
        if rep.degree_drop == 0 && pat == [deg] && deg as u64 % p != 0 {
            data.push(RamificationDatum::new(&format!("P[{b}]"), &b, deg as u64, deg as u64 - 1, DSource::TameFormula));
        } else if rep.degree_drop == 0 && pat == [2, 1] && p == 2 {
            // wild quadratic ramification with different exponent 2, plus an unramified place
            data.push(RamificationDatum::new(&format!("P2[{b}]"), &b, 2, 2, DSource::Supplied));
            data.push(RamificationDatum::new(&format!("P1[{b}]"), &b, 1, 0, DSource::Supplied));
            wild.push(b);
        } else {
            return Err(EngineError::InconsistentData(format!("unsupported level-1 fiber over {b}: {pat:?}")));
        }
    }
    Ok((data, wild))
}

/// Places-to-genus rows for levels `1..=n_max`. Needs a twisted tower; the
/// lower bound counts weighted chains from the rational locus at `n_max`.
pub fn limit_report(e: &Engine, n_max: usize) -> Result<Vec<LimitRow>, EngineError> {
    if !matches!(e.def().kind, TowerKind::TwistedDepth2 { .. }) {
        return Err(EngineError::NoGenusRecipe(e.def().id.clone()));
    }
    if n_max == 0 {
        return Err(EngineError::BadLevel);
    }
    let p = e.field().characteristic();
    let (data, wild) = level_one_data(e)?;
    let deg1 = e.def().step_degree(1) as u64;
    let g1 = rh_genus(0, deg1, p, &data)?.genus as u64;
    // places of F1 above the wild bases: the only ones that can ramify further up
    let upper: Vec<String> = wild.iter().flat_map(|b| [format!("P2[{b}]"), format!("P1[{b}]")]).collect();
    let starts = Starts::Values(e.rational_locus(n_max, &Starts::Affine)?);
    let dv = dv_bound(e.field().order());
    let mut rows = Vec::new();
    let mut m = 1u64;
    for n in 1..=n_max {
        if n >= 2 {
            m *= e.def().step_degree(n) as u64;
        }
        let d: Vec<RamificationDatum> = upper
            .iter()
            .map(|pl| RamificationDatum::new(&format!("over {pl}"), pl, m, 2 * m - 2, DSource::TwoBounded))
            .collect();
        let bound = rh_genus(g1, m, p, &d)?;
        let genus_upper = bound.genus;
        let chains = e.enumerate_chains(n, &starts)?;
        let places = weighted_count(&chains);
        rows.push(LimitRow {
            level: n,
            chains: chains.len(),
            places_lower: places,
            genus_upper,
            genus_sharp: bound.genus_sharp,
            genus_exact: (n == 1).then_some(g1 as i64),
            ratio: Ratio { num: places, den: genus_upper.max(1) as u64 },
            dv_bound: dv,
        });
    }
    Ok(rows)
}
