//! Fibers, chains and loci of recursive towers over their constant field,
//! plus Riemann–Hurwitz bookkeeping.

mod genus;
#[cfg(test)]
mod tests;

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catalog::{TowerDef, TowerKind};
use crate::gf::{FieldSpec, Gf};
use crate::poly::{dense, roots_dense, GfRing, PolyError, Ring, SparsePoly};

pub use genus::{dv_bound, limit_report, rh_genus, DSource, GenusBound, LimitRow, RamificationDatum, Ratio};

type P = SparsePoly<GfRing>;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("step polynomial vanishes identically at level {level} over {context}")]
    LeadingVanishes { level: usize, context: String },
    #[error("backtrack factor does not divide the level-{level} step at {context}")]
    BacktrackDivisionFails { level: usize, context: String },
    #[error("oracle would visit {0} tuples (limit 10^8)")]
    SizeExceeded(u128),
    #[error("level must be at least 1 and the chain prefix must match it")]
    BadLevel,
    #[error("inconsistent ramification data: {0}")]
    InconsistentData(String),
    #[error("no genus recipe for tower {0}")]
    NoGenusRecipe(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A base or fiber value: an element of the constant field or the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Finite(Gf),
    Infinity,
}

/// Substitutes `var → 1/var` and clears the denominator with the least power
/// of `var`: `var^D · p(1/var)` for `D = deg_var p`.
pub fn infinity_transform(p: &P, var: &str) -> Result<P, PolyError> {
    let i = p.var_index(var)?;
    let d = p.degree_in(var)?.unwrap_or(0);
    let terms = p.terms().map(|(m, c)| {
        let mut e = m.0.clone();
        e[i] = d - e[i];
        (e, *c)
    });
    Ok(SparsePoly::from_terms(p.ring(), p.vars(), terms))
}

/// Both charts of a step polynomial in its last two variables.
pub struct InfinityCharts {
    pub x_chart: P,
    pub y_chart: P,
    pub both: P,
}

pub fn infinity_charts(p: &P, x: &str, y: &str) -> Result<InfinityCharts, PolyError> {
    let x_chart = infinity_transform(p, x)?;
    let y_chart = infinity_transform(p, y)?;
    let both = infinity_transform(&x_chart, y)?;
    Ok(InfinityCharts { x_chart, y_chart, both })
}

#[derive(Clone, Debug, Serialize)]
pub struct Root {
    #[serde(skip)]
    pub value: Gf,
    pub label: String,
    pub mult: u32,
    /// Multiple root of the backtrack-free quotient that sits on a full
    /// `(T − r)^d` with `r` the backtrack root and `d` tame: the places above
    /// split into `d − 1` rational ones.
    pub tame_cancelled: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub level: usize,
    #[serde(serialize_with = "ser_labels")]
    pub context: Vec<String>,
    /// Degree in the new variable after removing the backtrack factor.
    pub step_degree: u32,
    pub roots: Vec<Root>,
    /// Roots at infinity (vanishing leading coefficients).
    pub infinity_mult: u32,
    /// `step_degree − Σ mult`: roots at infinity plus roots outside the field.
    pub degree_drop: u32,
    pub squarefree: bool,
    pub backtrack_root: Option<String>,
}

fn ser_labels<S: Serializer>(v: &[String], s: S) -> Result<S::Ok, S::Error> {
    v.serialize(s)
}

impl FiberReport {
    /// Every place above splits: simple roots, or tame-cancelled ones.
    pub fn is_split(&self) -> bool {
        self.degree_drop == 0 && self.roots.iter().all(|r| r.mult == 1 || r.tame_cancelled)
    }

    /// Multiple root, or roots at infinity: the ramification locus.
    pub fn is_exceptional(&self) -> bool {
        !self.squarefree || self.infinity_mult > 0
    }

    /// Multiple root, finite or at infinity.
    pub fn has_multiple_root(&self) -> bool {
        !self.squarefree || self.infinity_mult > 1
    }

    pub fn pattern(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.roots.iter().map(|r| r.mult).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Rational places certified above the node for this root.
    pub fn place_weight(&self, root: &Root) -> u64 {
        if root.mult == 1 {
            1
        } else if root.tame_cancelled {
            root.mult as u64
        } else if self.level == 1 && self.roots.len() == 1 && root.mult == self.step_degree {
            // totally ramified: a single place
            1
        } else {
            0
        }
    }

    /// Every root is in the field and certifies a rational place.
    pub fn is_rational(&self) -> bool {
        self.degree_drop == 0 && self.roots.iter().all(|r| self.place_weight(r) > 0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Chain {
    #[serde(skip)]
    pub values: Vec<Point>,
    pub labels: Vec<String>,
    pub step_mults: Vec<u32>,
    /// Product of per-step place weights; 0 if some step certifies nothing.
    pub weight: u64,
}

#[derive(Clone, Debug)]
pub enum Starts {
    /// Every element of the constant field.
    Affine,
    /// Affine values and infinity.
    All,
    Values(Vec<Point>),
}

struct Step {
    poly: P,
    /// Context variables, oldest first.
    ctx: Vec<&'static str>,
    new: &'static str,
    degree: u32,
    /// Linear factor in `U = u_{n−2}` and `T`, already twisted for the level.
    backtrack: Option<P>,
    /// Derivative of `poly` in the new variable.
    deriv: P,
}

/// Recursive tower over its constant field.
pub struct Engine {
    def: TowerDef,
    ring: GfRing,
    steps: RefCell<BTreeMap<usize, Rc<Step>>>,
}

/// `c ↦ c^(t^k)` on coefficients.
pub fn twist_poly(p: &P, t: u64, k: u32) -> P {
    let f = p.ring().field().clone();
    let n = f.order() - 1;
    let mut e = 1u64;
    for _ in 0..k {
        e = (e as u128 * t as u128 % n as u128) as u64;
    }
    let e = if e == 0 { n } else { e };
    p.map_coeffs(p.ring(), |c| f.pow(*c, e))
}

impl Engine {
    pub fn new(def: TowerDef) -> Engine {
        let ring = def.ring();
        Engine { def, ring, steps: RefCell::new(BTreeMap::new()) }
    }

    pub fn def(&self) -> &TowerDef {
        &self.def
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.def.field
    }

    pub fn label(&self, p: Point) -> String {
        match p {
            Point::Finite(x) => self.field().format(x),
            Point::Infinity => "inf".into(),
        }
    }

    /// Parses `inf`, `0`, `1`, `b^e` or a packed integer.
    pub fn parse_point(&self, s: &str) -> Option<Point> {
        let f = self.field();
        let s = s.trim();
        match s {
            "inf" => Some(Point::Infinity),
            _ => {
                if let Some(e) = s.strip_prefix("b^") {
                    return e.parse::<i64>().ok().map(|e| Point::Finite(f.beta_pow(e)));
                }
                let n: u64 = s.parse().ok()?;
                (n < f.order()).then(|| Point::Finite(f.encode_packed(n as u32)))
            }
        }
    }

    fn step(&self, level: usize) -> Rc<Step> {
        if let Some(s) = self.steps.borrow().get(&level) {
            return s.clone();
        }
        let mk = |poly: P, ctx: Vec<&'static str>, new: &'static str, backtrack: Option<P>| {
            let degree = poly.degree_in(new).unwrap().unwrap_or(0);
            let deriv = poly.derivative(new).unwrap();
            Step { poly, ctx, new, degree, backtrack, deriv }
        };
        let s = Rc::new(match &self.def.kind {
            TowerKind::Depth1 { f } => mk(f.clone(), vec!["X"], "Y", None),
            TowerKind::Depth2 { phi, .. } if level == 1 => mk(phi.clone(), vec!["X"], "Y", None),
            TowerKind::Depth2 { psi, .. } => mk(psi.clone(), vec!["X", "Y"], "Z", None),
            TowerKind::TwistedDepth2 { phi, backtrack, twist } => {
                let poly = twist_poly(phi, *twist, level as u32 - 1);
                let bt = (level >= 2).then(|| twist_poly(backtrack, *twist, level as u32 - 2));
                mk(poly, vec!["X"], "Y", bt)
            }
        });
        self.steps.borrow_mut().insert(level, s.clone());
        s
    }

    fn specialize(&self, p: &P, bind: &[(&str, Point)], new: &str) -> Result<Vec<Gf>, PolyError> {
        let mut p = p.clone();
        for (v, pt) in bind {
            p = match pt {
                Point::Finite(x) => p.eval_var(v, x)?,
                Point::Infinity => infinity_transform(&p, v)?.eval_var(v, &Gf::ZERO)?,
            };
        }
        p.to_dense(new)
    }

    fn context_string(&self, ctx: &[Point]) -> String {
        ctx.iter().map(|p| self.label(*p)).collect::<Vec<_>>().join(", ")
    }

    /// Levels whose step reads two previous values.
    fn depth(&self, level: usize) -> usize {
        match self.def.kind {
            TowerKind::Depth1 { .. } => 1,
            _ if level == 1 => 1,
            _ => 2,
        }
    }

    /// Fiber of the level-`level` step over the chain prefix `u_0 … u_{level−1}`.
    pub fn fiber(&self, level: usize, prefix: &[Point]) -> Result<FiberReport, EngineError> {
        if level == 0 || prefix.len() != level {
            return Err(EngineError::BadLevel);
        }
        let step = self.step(level);
        let ctx = &prefix[level - step.ctx.len()..];
        let context: Vec<Point> = prefix[level - self.depth(level)..].to_vec();
        let bind: Vec<(&str, Point)> = step.ctx.iter().copied().zip(ctx.iter().copied()).collect();
        let r = &self.ring;
        let full = dense::trimmed(r, self.specialize(&step.poly, &bind, step.new)?);
        let cs = || self.context_string(&context);
        if full.is_empty() {
            return Err(EngineError::LeadingVanishes { level, context: cs() });
        }
        let mut degree = step.degree;
        let mut quotient = full.clone();
        let mut back = None;
        if let Some(bt) = &step.backtrack {
            let lin = dense::trimmed(r, self.specialize(bt, &[("U", prefix[level - 2])], "T")?);
            degree -= 1;
            match lin.len() {
                0 => return Err(EngineError::LeadingVanishes { level, context: cs() }),
                // backtrack root at infinity: the full polynomial has already dropped a degree
                1 => back = Some(Point::Infinity),
                _ => {
                    let root = r.neg(&r.mul(&lin[0], &r.inv(&lin[1]).unwrap()));
                    let (q, rem) = dense::divrem(r, &full, &[r.neg(&root), r.one()]);
                    if !rem.is_empty() {
                        return Err(EngineError::BacktrackDivisionFails { level, context: cs() });
                    }
                    quotient = q;
                    back = Some(Point::Finite(root));
                }
            }
        }
        let qdeg = dense::degree(&quotient).unwrap_or(0) as u32;
        if qdeg > degree {
            return Err(EngineError::BacktrackDivisionFails { level, context: cs() });
        }
        let found = roots_dense(r, &quotient)?;
        let f = self.field();
        let full_is_power = |x: Gf| {
            let d = step.degree;
            let fr = roots_dense(r, &full).unwrap_or_default();
            let p = f.characteristic() as u32;
            fr.len() == 1 && fr[0] == (x, d) && d % p != 0 && (f.order() - 1) % d as u64 == 0
        };
        let roots: Vec<Root> = found
            .iter()
            .map(|&(x, m)| Root {
                value: x,
                label: f.format(x),
                mult: m,
                tame_cancelled: m > 1 && back == Some(Point::Finite(x)) && full_is_power(x),
            })
            .collect();
        let total: u32 = roots.iter().map(|r| r.mult).sum();
        let squarefree = qdeg == 0 || {
            let g = dense::gcd(r, &quotient, &dense::derivative(r, &quotient));
            dense::degree(&g) == Some(0)
        };
        Ok(FiberReport {
            level,
            context: context.iter().map(|p| self.label(*p)).collect(),
            step_degree: degree,
            roots,
            infinity_mult: degree - qdeg,
            degree_drop: degree - total,
            squarefree,
            backtrack_root: back.map(|p| self.label(p)),
        })
    }

    fn start_points(&self, starts: &Starts) -> Vec<Point> {
        match starts {
            Starts::Affine => self.field().elements().map(Point::Finite).collect(),
            Starts::All => self.field().elements().map(Point::Finite).chain([Point::Infinity]).collect(),
            Starts::Values(v) => v.clone(),
        }
    }

    /// Breadth-first chains `u_0 … u_n` through finite fiber values, in
    /// enumeration order. Roots at infinity end a branch.
    pub fn enumerate_chains(&self, n: usize, starts: &Starts) -> Result<Vec<Chain>, EngineError> {
        if n == 0 {
            return Err(EngineError::BadLevel);
        }
        let mut front: Vec<(Vec<Point>, Vec<u32>, u64)> =
            self.start_points(starts).into_iter().map(|p| (vec![p], Vec::new(), 1)).collect();
        for level in 1..=n {
            let mut next = Vec::new();
            for (vals, mults, w) in front {
                let rep = self.fiber(level, &vals)?;
                for root in &rep.roots {
                    let mut v = vals.clone();
                    v.push(Point::Finite(root.value));
                    let mut m = mults.clone();
                    m.push(root.mult);
                    next.push((v, m, w * rep.place_weight(root)));
                }
            }
            front = next;
        }
        Ok(front
            .into_iter()
            .map(|(values, step_mults, weight)| Chain {
                labels: values.iter().map(|p| self.label(*p)).collect(),
                values,
                step_mults,
                weight,
            })
            .collect())
    }

    /// Whether every node of the chain tree over `base` up to depth `n`
    /// satisfies `ok`.
    fn tree_all(&self, base: Point, n: usize, ok: &dyn Fn(&FiberReport) -> bool) -> Result<bool, EngineError> {
        let mut front = vec![vec![base]];
        for level in 1..=n {
            let mut next = Vec::new();
            for vals in front {
                let rep = match self.fiber(level, &vals) {
                    Ok(r) => r,
                    Err(EngineError::LeadingVanishes { .. }) => return Ok(false),
                    Err(e) => return Err(e),
                };
                if !ok(&rep) {
                    return Ok(false);
                }
                for root in &rep.roots {
                    let mut v = vals.clone();
                    v.push(Point::Finite(root.value));
                    next.push(v);
                }
            }
            front = next;
        }
        Ok(true)
    }

    /// Base points among `starts` splitting completely up to depth `n`.
    pub fn splitting_locus(&self, n: usize, starts: &Starts) -> Result<Vec<Point>, EngineError> {
        let mut out = Vec::new();
        for p in self.start_points(starts) {
            if self.tree_all(p, n, &FiberReport::is_split)? {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Base points whose whole tree up to depth `n` consists of certified
    /// rational places (split, level-1 totally ramified, or tame-cancelled).
    pub fn rational_locus(&self, n: usize, starts: &Starts) -> Result<Vec<Point>, EngineError> {
        let mut out = Vec::new();
        for p in self.start_points(starts) {
            if self.tree_all(p, n, &FiberReport::is_rational)? {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Every node up to depth `n`, over all base points, whose specialized
    /// step has a multiple root or roots at infinity.
    pub fn ramification_locus(&self, n: usize) -> Result<Vec<(String, FiberReport)>, EngineError> {
        let mut out = Vec::new();
        for base in self.start_points(&Starts::All) {
            let mut front = vec![vec![base]];
            for level in 1..=n {
                let mut next = Vec::new();
                for vals in front {
                    let rep = self.fiber(level, &vals)?;
                    for root in &rep.roots {
                        let mut v = vals.clone();
                        v.push(Point::Finite(root.value));
                        next.push(v);
                    }
                    if rep.is_exceptional() {
                        out.push((self.label(base), rep));
                    }
                }
                front = next;
            }
        }
        Ok(out)
    }

    /// Number of affine tuples `(u_0, …, u_n)` satisfying every step relation,
    /// by nested loops over the field with direct evaluation.
    pub fn oracle_count(&self, n: usize) -> Result<u64, EngineError> {
        let q = self.field().order() as u128;
        let size = q.checked_pow(n as u32 + 1).unwrap_or(u128::MAX);
        if size > 100_000_000 {
            return Err(EngineError::SizeExceeded(size));
        }
        if n == 0 {
            return Err(EngineError::BadLevel);
        }
        let els: Vec<Gf> = self.field().elements().collect();
        let mut count = 0u64;
        let mut tuple = Vec::with_capacity(n + 1);
        self.oracle_rec(n, &els, &mut tuple, &mut count);
        Ok(count)
    }

    fn oracle_rec(&self, n: usize, els: &[Gf], tuple: &mut Vec<Gf>, count: &mut u64) {
        let level = tuple.len();
        if level == n + 1 {
            *count += 1;
            return;
        }
        for &x in els {
            if level == 0 || self.relation_holds(level, tuple, x) {
                tuple.push(x);
                self.oracle_rec(n, els, tuple, count);
                tuple.pop();
            }
        }
    }

    fn relation_holds(&self, level: usize, prefix: &[Gf], x: Gf) -> bool {
        let step = self.step(level);
        let point = |p: &P| -> Vec<Gf> {
            p.vars()
                .iter()
                .map(|v| {
                    if v == step.new {
                        return x;
                    }
                    let k = step.ctx.iter().position(|c| c == v).expect("context variable");
                    prefix[level - step.ctx.len() + k]
                })
                .collect()
        };
        if !step.poly.eval_all(&point(&step.poly)).is_zero() {
            return false;
        }
        match &step.backtrack {
            None => true,
            Some(bt) => {
                // x is excluded only as a simple root equal to the backtrack root
                let u = prefix[level - 2];
                let at: Vec<Gf> = bt.vars().iter().map(|v| if v == "U" { u } else { x }).collect();
                !bt.eval_all(&at).is_zero() || step.deriv.eval_all(&point(&step.deriv)).is_zero()
            }
        }
    }

    /// The level-`level` backtrack factor, certified by exact division at
    /// `samples` random contexts drawn with `seed`.
    pub fn backtrack_factor(&self, level: usize, seed: u64, samples: usize) -> Result<P, EngineError> {
        let step = self.step(level);
        let bt = step.backtrack.clone().ok_or(EngineError::BadLevel)?;
        self.certify_backtrack(level, &bt, seed, samples)?;
        Ok(bt)
    }

    /// Checks that `factor` (in `U`, `T`) divides the level step at random
    /// contexts `(u_{n−2}, u_{n−1})` with `u_{n−1}` a root of the previous step.
    pub fn certify_backtrack(&self, level: usize, factor: &P, seed: u64, samples: usize) -> Result<(), EngineError> {
        if level < 2 {
            return Err(EngineError::BadLevel);
        }
        let step = self.step(level);
        let prev = self.step(level - 1);
        let r = &self.ring;
        let els: Vec<Gf> = self.field().elements().collect();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut done = 0;
        let mut tries = 0;
        while done < samples {
            tries += 1;
            if tries > 100 * samples.max(1) {
                return Err(EngineError::BacktrackDivisionFails { level, context: "no usable contexts".into() });
            }
            let u2 = els[rng.gen_range(0..els.len())];
            let row = dense::trimmed(r, self.specialize(&prev.poly, &[("X", Point::Finite(u2))], prev.new)?);
            if row.len() < 2 {
                continue;
            }
            let roots = roots_dense(r, &row)?;
            if roots.is_empty() {
                continue;
            }
            let u1 = roots[rng.gen_range(0..roots.len())].0;
            let lin = dense::trimmed(r, self.specialize(factor, &[("U", Point::Finite(u2))], "T")?);
            if lin.len() != 2 {
                continue;
            }
            let full = self.specialize(&step.poly, &[("X", Point::Finite(u1))], step.new)?;
            let (_, rem) = dense::divrem(r, &full, &dense::monic(r, &lin));
            if !rem.is_empty() {
                let context = self.context_string(&[Point::Finite(u2), Point::Finite(u1)]);
                return Err(EngineError::BacktrackDivisionFails { level, context });
            }
            done += 1;
        }
        Ok(())
    }
}

/// Σ of chain weights.
pub fn weighted_count(chains: &[Chain]) -> u64 {
    chains.iter().map(|c| c.weight).sum()
}
