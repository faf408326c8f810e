//! Rank-two Drinfeld modules over F₂[S,T]/(S²+S−T³−T): commutation
//! constraints, the τ − a isogeny system and its elimination.

use crate::gf::{make_field, FieldSpec, Gf};
use crate::poly::{dense, GfRing, Ring, SparsePoly};

use super::{skew_mul, SkewError, SkewPoly};

const VARS: [&str; 18] = [
    "g1", "g2", "g3", "h1", "h2", "h3", "h4", "h5", "a", "l1", "l2", "l3", "t1", "t2", "t3", "t4", "t5", "gamma",
];

/// Polynomial ring over the prime field of characteristic `p` in all
/// parameter names used by this module.
#[derive(Clone, Debug)]
pub struct DrinfeldRing {
    pub ring: GfRing,
    pub q: u64,
}

impl DrinfeldRing {
    pub fn new(q: u64) -> Result<Self, SkewError> {
        let p = (2..=q).find(|d| q % d == 0).ok_or(SkewError::BadTwist { q, p: 0 })?;
        if !super::is_power_of(q, p) {
            return Err(SkewError::BadTwist { q, p });
        }
        let f = make_field(p, 1, None).map_err(|e| SkewError::Poly(e.into()))?;
        Ok(DrinfeldRing { ring: GfRing::new(f), q })
    }

    pub fn var(&self, name: &str) -> SparsePoly<GfRing> {
        SparsePoly::var(&self.ring, &VARS, name).expect("known parameter name")
    }

    pub fn int(&self, n: i64) -> SparsePoly<GfRing> {
        SparsePoly::constant(&self.ring, &VARS, self.ring.from_i64(n))
    }

    fn skew(&self, top: usize, names: &[&str]) -> SkewPoly<GfRing> {
        // τ^top + names[0] τ^{top-1} + … + names[last] τ
        let mut c = vec![self.int(0)];
        for n in names.iter().rev() {
            c.push(self.var(n));
        }
        c.push(self.int(1));
        debug_assert_eq!(c.len(), top + 1);
        SkewPoly::new(self.q, c).expect("valid twist")
    }

    /// τ − a.
    pub fn lambda(&self) -> SkewPoly<GfRing> {
        SkewPoly::new(self.q, vec![self.var("a").neg_poly(), self.int(1)]).unwrap()
    }
}

pub fn phi_t(d: &DrinfeldRing) -> SkewPoly<GfRing> {
    d.skew(4, &["g1", "g2", "g3"])
}

pub fn phi_s(d: &DrinfeldRing) -> SkewPoly<GfRing> {
    d.skew(6, &["h1", "h2", "h3", "h4", "h5"])
}

/// Nonzero coefficients of a skew polynomial, highest τ-degree first,
/// restricted to the variables that occur.
fn coefficient_list(s: &SkewPoly<GfRing>) -> Vec<SparsePoly<GfRing>> {
    s.coeffs().iter().rev().filter(|c| !c.is_zero()).map(SparsePoly::compact).collect()
}

#[derive(Clone, Debug)]
pub struct Constraints {
    /// From φ_{S²+S−T³−T} = 0.
    pub curve: Vec<SparsePoly<GfRing>>,
    /// From φ_Tφ_S = φ_Sφ_T.
    pub commute: Vec<SparsePoly<GfRing>>,
}

pub fn commutation_constraints(q: u64) -> Result<Constraints, SkewError> {
    let d = DrinfeldRing::new(q)?;
    let t = phi_t(&d);
    let s = phi_s(&d);
    let s2 = skew_mul(&s, &s)?;
    let t2 = skew_mul(&t, &t)?;
    let t3 = skew_mul(&t2, &t)?;
    let curve = s2.add(&s)?.sub(&t3)?.sub(&t)?;
    let comm = skew_mul(&t, &s)?.sub(&skew_mul(&s, &t)?)?;
    Ok(Constraints { curve: coefficient_list(&curve), commute: coefficient_list(&comm) })
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

/// p₃ = p₁ − p₂⁴ and the two reconstruction identities, for the q = 2 lists.
pub fn simplify_p3_identity() -> Result<Vec<IdentityCheck>, SkewError> {
    let c = commutation_constraints(2)?;
    let d = DrinfeldRing::new(2)?;
    let p1 = c.curve[0].clone();
    let p2 = c.commute[0].clone();
    let p3 = &p1 - &p2.pow(4);
    let h1 = d.var("h1");
    let g1 = d.var("g1");
    let shown = &(&(&(&h1.pow(4) + &h1) + &g1.pow(16)) + &g1.pow(4)) + &g1;
    let r2 = &p3 + &p3.pow(4);
    let r1 = &r2 + &p3.pow(16);
    let check = |name, l: &SparsePoly<GfRing>, r: &SparsePoly<GfRing>| IdentityCheck {
        name,
        holds: l == r,
        lhs: l.compact().to_string(),
        rhs: r.compact().to_string(),
    };
    Ok(vec![
        check("p3 = p1 - p2^4", &p3, &shown),
        check("p2 = p3 + p3^4", &p2, &r2),
        check("p1 = p3 + p3^4 + p3^16", &p1, &r1),
    ])
}

fn isogeny_pairs(
    d: &DrinfeldRing,
    phi: &SkewPoly<GfRing>,
    psi: &SkewPoly<GfRing>,
) -> Result<Vec<(SparsePoly<GfRing>, SparsePoly<GfRing>)>, SkewError> {
    let lam = d.lambda();
    let lhs = skew_mul(&lam, phi)?;
    let rhs = skew_mul(psi, &lam)?;
    let top = lhs.degree().unwrap();
    Ok((1..top)
        .rev()
        .map(|i| (lhs.coeff(i).unwrap().compact(), rhs.coeff(i).unwrap().compact()))
        .collect())
}

/// λφ_T = ψ_Tλ for λ = τ − a, as (left, right) coefficient pairs from τ⁴ down to τ.
pub fn isogeny_system_t(q: u64) -> Result<Vec<(SparsePoly<GfRing>, SparsePoly<GfRing>)>, SkewError> {
    let d = DrinfeldRing::new(q)?;
    isogeny_pairs(&d, &phi_t(&d), &d.skew(4, &["l1", "l2", "l3"]))
}

/// λφ_S = ψ_Sλ, coefficient pairs from τ⁶ down to τ.
pub fn isogeny_system_s(q: u64) -> Result<Vec<(SparsePoly<GfRing>, SparsePoly<GfRing>)>, SkewError> {
    let d = DrinfeldRing::new(q)?;
    isogeny_pairs(&d, &phi_s(&d), &d.skew(6, &["t1", "t2", "t3", "t4", "t5"]))
}

/// Solves the system top-down: line i gives the i-th unknown as
/// `unknown = left − (right − unknown)`; the last line becomes the residual.
fn subst(p: &SparsePoly<GfRing>, var: &str, v: &SparsePoly<GfRing>) -> Result<SparsePoly<GfRing>, SkewError> {
    if p.var_index(var).is_err() {
        return Ok(p.clone());
    }
    Ok(p.compose(var, v)?)
}

fn eliminate_top_down(
    pairs: &[(SparsePoly<GfRing>, SparsePoly<GfRing>)],
    unknowns: &[&str],
) -> Result<SparsePoly<GfRing>, SkewError> {
    let mut solved: Vec<(String, SparsePoly<GfRing>)> = Vec::new();
    for (k, name) in unknowns.iter().enumerate() {
        let (l, r) = &pairs[k];
        let mut expr = l - r;
        for (n, v) in &solved {
            expr = subst(&expr, n, v)?;
        }
        // expr = l − r is linear in `name` with coefficient −1
        let unknown = SparsePoly::var(expr.ring(), &[name], name)?;
        let value = &expr + &unknown;
        if value.degree_in(name)?.unwrap_or(0) != 0 {
            return Err(SkewError::EliminationMismatch(format!("{name} is not linear with unit coefficient")));
        }
        solved.push((name.to_string(), value.compact()));
    }
    let (l, r) = pairs.last().unwrap();
    let mut residual = r - l;
    for (n, v) in &solved {
        residual = subst(&residual, n, v)?;
    }
    Ok(residual.compact())
}

/// Bottom-up: start from the last line and replace the newest unknown using
/// the line above it, eliminating t₅ first and t₁ last.
fn eliminate_bottom_up(
    pairs: &[(SparsePoly<GfRing>, SparsePoly<GfRing>)],
    unknowns: &[&str],
) -> Result<SparsePoly<GfRing>, SkewError> {
    let (l, r) = pairs.last().unwrap();
    let mut residual = r - l;
    for k in (0..unknowns.len()).rev() {
        let name = unknowns[k];
        let (l, r) = &pairs[k];
        let unknown = SparsePoly::var(l.ring(), &[name], name)?;
        let value = &(l - r) + &unknown;
        residual = subst(&residual, name, &value)?;
    }
    Ok(residual.compact())
}

/// W for the τ-degree-`n` Drinfeld coefficient names `c`:
/// a^{q^{n−1}+…+1} + c₁a^{q^{n−2}+…+1} + … + c_{n−1}a.
fn w_poly(d: &DrinfeldRing, names: &[&str]) -> SparsePoly<GfRing> {
    let q = d.q;
    let a = d.var("a");
    let n = names.len() + 1;
    let geo = |m: usize| (0..m).map(|i| q.pow(i as u32)).sum::<u64>();
    let mut w = a.pow(geo(n));
    for (i, c) in names.iter().enumerate() {
        w = &w + &(&d.var(c) * &a.pow(geo(n - 1 - i)));
    }
    w
}

fn eliminate_checked(
    d: &DrinfeldRing,
    pairs: &[(SparsePoly<GfRing>, SparsePoly<GfRing>)],
    unknowns: &[&str],
    coeffs: &[&str],
    constant: &str,
) -> Result<SparsePoly<GfRing>, SkewError> {
    let residual = eliminate_top_down(pairs, unknowns)?;
    let w = w_poly(d, coeffs);
    let expected = &w.frobenius(d.q) - &w;
    if residual != expected {
        return Err(SkewError::EliminationMismatch(format!(
            "residual {} differs from W^q - W",
            residual.num_terms()
        )));
    }
    Ok((&w - &d.var(constant)).compact())
}

/// W_T − γ with W_T = a^{q³+q²+q+1} + g₁a^{q²+q+1} + g₂a^{q+1} + g₃a.
pub fn eliminate_t(q: u64) -> Result<SparsePoly<GfRing>, SkewError> {
    let d = DrinfeldRing::new(q)?;
    let pairs = isogeny_system_t(q)?;
    eliminate_checked(&d, &pairs, &["l1", "l2", "l3"], &["g1", "g2", "g3"], "gamma")
}

/// W_S − β over h₁…h₅. The constant is named `beta`.
pub fn eliminate_s(q: u64) -> Result<SparsePoly<GfRing>, SkewError> {
    let d = DrinfeldRing::new(q)?;
    let pairs = isogeny_system_s(q)?;
    let rel = eliminate_checked(&d, &pairs, &["t1", "t2", "t3", "t4", "t5"], &["h1", "h2", "h3", "h4", "h5"], "gamma")?;
    Ok(rel.rename(&[("gamma", "beta")]))
}

/// Residuals of the S-system with t₅ eliminated last (top-down) and first
/// (bottom-up); they must coincide.
pub fn eliminate_s_both_orders(q: u64) -> Result<(SparsePoly<GfRing>, SparsePoly<GfRing>), SkewError> {
    let pairs = isogeny_system_s(q)?;
    let names = ["t1", "t2", "t3", "t4", "t5"];
    Ok((eliminate_top_down(&pairs, &names)?, eliminate_bottom_up(&pairs, &names)?))
}

/// A point of the parameter variety over F_{2^k} and the gcd of the
/// specialized T- and S-eliminations.
#[derive(Clone, Debug)]
pub struct IsogenySpecialization {
    pub field: String,
    pub g: [Gf; 3],
    pub h: [Gf; 5],
    pub gcd: Vec<Gf>,
    pub formatted: String,
}

impl IsogenySpecialization {
    pub fn gcd_degree(&self) -> usize {
        self.gcd.len().saturating_sub(1)
    }
}

fn lift(f: &std::sync::Arc<FieldSpec>, p: &SparsePoly<GfRing>) -> SparsePoly<GfRing> {
    let r = GfRing::new(f.clone());
    p.map_coeffs(&r, |c| f.from_int(p.ring().field().to_packed(*c) as i64))
}

/// Exhaustively searches F_{2^k} (k in `degrees`) for a parameter point
/// (g₁,g₂,g₃) — the h's follow from the first five curve constraints — at
/// which every constraint vanishes, and returns the first one whose gcd with
/// β = γ = 1 has degree `want`, together with how many points were seen.
pub fn find_isogeny_specialization(
    degrees: &[u32],
    want: usize,
) -> Result<(Option<IsogenySpecialization>, usize), SkewError> {
    let c = commutation_constraints(2)?;
    let d = DrinfeldRing::new(2)?;
    let full = |p: &SparsePoly<GfRing>| p.with_vars(&VARS.map(String::from)).unwrap();
    // ascending τ-degree: entry i (i < 5) solves h_{5−i}
    let asc: Vec<SparsePoly<GfRing>> = c.curve.iter().rev().map(full).collect();
    let rest: Vec<SparsePoly<GfRing>> = asc[5..].iter().cloned().chain(c.commute.iter().map(full)).collect();
    let elim_t = full(&eliminate_t(2)?);
    let elim_s = full(&eliminate_s(2)?.rename(&[("beta", "gamma")]));
    let mut seen = 0;
    for &k in degrees {
        let f = make_field(2, k, None).map_err(|e| SkewError::Poly(e.into()))?;
        let r = GfRing::new(f.clone());
        let solve: Vec<SparsePoly<GfRing>> = asc[..5]
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let h = d.var(&format!("h{}", 5 - i));
                lift(&f, &(p - &h))
            })
            .collect();
        let rest: Vec<SparsePoly<GfRing>> = rest.iter().map(|p| lift(&f, p)).collect();
        let (et, es) = (lift(&f, &elim_t), lift(&f, &elim_s));
        let elems: Vec<Gf> = f.elements().collect();
        for &g1 in &elems {
            for &g2 in &elems {
                for &g3 in &elems {
                    let mut pt = vec![Gf::ZERO; VARS.len()];
                    pt[0] = g1;
                    pt[1] = g2;
                    pt[2] = g3;
                    for (i, s) in solve.iter().enumerate() {
                        // h_j = −(constraint − h_j); char 2
                        pt[7 - i] = s.eval_all(&pt);
                    }
                    if !rest.iter().all(|p| p.eval_all(&pt).is_zero()) {
                        continue;
                    }
                    seen += 1;
                    pt[17] = Gf::ONE;
                    let spec = |e: &SparsePoly<GfRing>| {
                        let mut s = e.clone();
                        for (j, name) in VARS.iter().enumerate() {
                            if *name != "a" {
                                s = s.eval_var(name, &pt[j]).unwrap();
                            }
                        }
                        s.to_dense("a").unwrap()
                    };
                    let g = dense::gcd(&r, &spec(&et), &spec(&es));
                    if g.len().saturating_sub(1) == want {
                        let h = [pt[3], pt[4], pt[5], pt[6], pt[7]];
                        return Ok((
                            Some(IsogenySpecialization {
                                field: f.label().to_string(),
                                g: [g1, g2, g3],
                                h,
                                formatted: dense::format(&r, &g, "a"),
                                gcd: g,
                            }),
                            seen,
                        ));
                    }
                }
            }
        }
    }
    Ok((None, seen))
}
