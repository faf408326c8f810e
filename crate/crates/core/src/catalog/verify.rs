//! Identity checks between golden polynomials and independent computations.

use std::time::Instant;

use num_rational::BigRational;
use serde::Serialize;

use super::towers::{embed_poly, reduce_rational};
use super::{Catalog, CatalogError};
use crate::gf::{make_field, Gf};
use crate::poly::{
    dense, divide_with_remainder, exact_divide, roots_dense, serial, substitute, Binding, GfRing, QuotientRing,
    RatFuncRing, Rationals, Ring, SparsePoly,
};
use crate::skew;

type P = SparsePoly<GfRing>;

fn f2() -> GfRing {
    GfRing::new(make_field(2, 1, None).expect("GF(2)"))
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The three levels with catalog modular polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Level {
    T,
    T2T1,
    T2T,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::T, Level::T2T1, Level::T2T];

    fn key(self) -> &'static str {
        match self {
            Level::T => "t",
            Level::T2T1 => "t2t1",
            Level::T2T => "t2t",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Level::T => "T",
            Level::T2T1 => "T^2+T+1",
            Level::T2T => "T^2+T",
        }
    }

    /// Coefficients over F₂ in `T`, lowest first.
    pub fn dense(self) -> Vec<Gf> {
        let b = |v: &[u8]| v.iter().map(|&c| Gf(c as u32)).collect();
        match self {
            Level::T => b(&[0, 1]),
            Level::T2T1 => b(&[1, 1, 1]),
            Level::T2T => b(&[0, 1, 1]),
        }
    }

    fn from_dense(d: &[Gf]) -> Option<Level> {
        Level::ALL.into_iter().find(|l| l.dense() == d)
    }

    pub fn phi(self, cat: &Catalog) -> Result<P, CatalogError> {
        cat.gf(&format!("phi_{}", self.key()), "phi")
    }

    /// Factors of the cross-difference; the last one is `f_P`.
    pub fn factors(self, cat: &Catalog) -> Result<Vec<P>, CatalogError> {
        cat.gf_all(&format!("factors_{}", self.key()), "factor")
    }

    pub fn jparam(self, cat: &Catalog) -> Result<[P; 4], CatalogError> {
        let id = format!("jparam_{}", self.key());
        Ok([cat.gf(&id, "j0_num")?, cat.gf(&id, "j0_den")?, cat.gf(&id, "j1_num")?, cat.gf(&id, "j1_den")?])
    }
}

/// `Φ(X,Y) = Φ(Y,X)`.
pub fn verify_symmetry(phi: &P) -> Result<bool, CatalogError> {
    Ok(phi.swap_vars("X", "Y")? == *phi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PsiMode {
    Exact,
    ModuloCurve,
}

/// Recomputes `Ψ(X,Y,Z) = (Φ(Y,Z) − Φ(Y,X)) / (Z − X)` and compares it with
/// the stored polynomial, exactly or modulo `Φ(X,Y)`.
pub fn extract_psi(phi: &P, golden: &P) -> Result<(P, PsiMode), CatalogError> {
    let mut vars: Vec<String> = names(&["X", "Y", "Z"]);
    vars.extend(phi.vars().iter().filter(|v| !["X", "Y", "Z"].contains(&v.as_str())).cloned());
    let phi = phi.with_vars(&vars)?;
    let shifted = phi.rename(&[("X", "Y"), ("Y", "Z")]).with_vars(&vars)?;
    let r = phi.ring().clone();
    let x = SparsePoly::var(&r, &vars.iter().map(String::as_str).collect::<Vec<_>>(), "X")?;
    let z = SparsePoly::var(&r, &vars.iter().map(String::as_str).collect::<Vec<_>>(), "Z")?;
    let (psi, rem) = divide_with_remainder(&shifted, &(&z - &x), "Z")?;
    if rem != phi.swap_vars("X", "Y")? {
        return Err(CatalogError::PsiMismatch);
    }
    if psi == *golden {
        return Ok((psi, PsiMode::Exact));
    }
    let diff = &psi - &golden.with_vars(&vars)?;
    match exact_divide(&diff, &phi, "Y") {
        Ok(_) => Ok((psi, PsiMode::ModuloCurve)),
        Err(_) => Err(CatalogError::PsiMismatch),
    }
}

/// `Φ_P(j₀(u), j₁(u)) = 0` identically in `u, T`. With `perturb`, `j₁ + 1` is
/// substituted instead, which must fail.
pub fn verify_parameterization(cat: &Catalog, level: Level, perturb: bool) -> Result<bool, CatalogError> {
    let [a, b, mut c, d] = level.jparam(cat)?;
    if perturb {
        c = &c + &d;
    }
    parameterization_holds(&level.phi(cat)?, [a, b, c, d])
}

/// `Φ(a/b, c/d) = 0` after clearing denominators, for `Φ` in `X, Y, T` and
/// `a, b, c, d` in `u, T`.
pub fn parameterization_holds(phi: &P, j: [P; 4]) -> Result<bool, CatalogError> {
    let vars = names(&["X", "Y", "u", "T"]);
    let phi = phi.with_vars(&vars)?;
    let [a, b, c, d] = j.map(|p| p.with_vars(&vars));
    let cleared = substitute(&phi, &[Binding { var: "X", num: a?, den: b? }, Binding { var: "Y", num: c?, den: d? }])?;
    Ok(cleared.numerator.is_zero())
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossReport {
    pub level: Level,
    /// Product of the stored factors equals the recomputed cross-difference.
    pub product_matches: bool,
    /// The stored cross-difference, where one is given, equals the recomputed one.
    pub stored_matches: Option<bool>,
    pub factor_y_degrees: Vec<u32>,
    /// Exactly one factor, the designated last one, has `Y`-degree `2^deg P`.
    pub f_unique: bool,
}

/// `ψ₀(Y)φ₁(X) − ψ₁(Y)φ₀(X)` where `j₀ = ψ₀/ψ₁` and `j₁ = φ₀/φ₁` in `u`.
pub fn cross_difference(cat: &Catalog, level: Level) -> Result<P, CatalogError> {
    let vars = names(&["X", "Y", "T"]);
    let at = |p: &P, v: &str| p.rename(&[("u", v)]).with_vars(&vars);
    let [j0n, j0d, j1n, j1d] = level.jparam(cat)?;
    let lhs = &at(&j0n, "Y")? * &at(&j1d, "X")?;
    let rhs = &at(&j0d, "Y")? * &at(&j1n, "X")?;
    Ok(&lhs - &rhs)
}

fn leading(p: &P) -> Option<Gf> {
    p.terms().next_back().map(|(_, c)| *c)
}

pub fn verify_cross_factorization(cat: &Catalog, level: Level) -> Result<CrossReport, CatalogError> {
    let cross = cross_difference(cat, level)?;
    let factors = level.factors(cat)?;
    let vars = names(&["X", "Y", "T"]);
    let mut prod = SparsePoly::one(cross.ring(), &["X", "Y", "T"]);
    for f in &factors {
        prod = &prod * &f.with_vars(&vars)?;
    }
    let field = cross.ring().field().clone();
    let product_matches = match (leading(&cross), leading(&prod)) {
        (Some(a), Some(b)) => cross == prod.scale(&field.mul(a, field.inv(b).unwrap())),
        _ => false,
    };
    let id = format!("factors_{}", level.key());
    let stored_matches = match cat.gf(&id, "cross") {
        Ok(s) => Some(s == cross),
        Err(CatalogError::MissingItem(..)) => None,
        Err(e) => return Err(e),
    };
    let factor_y_degrees: Vec<u32> = factors.iter().map(|f| f.degree_in("Y").unwrap().unwrap_or(0)).collect();
    let want = 1u32 << (level.dense().len() - 1);
    let hits: Vec<usize> = (0..factors.len()).filter(|&i| factor_y_degrees[i] == want).collect();
    let f_unique = hits == [factors.len() - 1];
    Ok(CrossReport { level, product_matches, stored_matches, factor_y_degrees, f_unique })
}

/// Reduces `f_P` modulo the irreducible `modulus` (over F₂ in `T`) and
/// compares with the stored reduction.
pub fn verify_reduction(cat: &Catalog, level: Level, modulus: &[Gf]) -> Result<bool, CatalogError> {
    let r2 = f2();
    let m = dense::trimmed(&r2, modulus.to_vec());
    let g = dense::gcd(&r2, &m, &level.dense());
    let label = dense::format(&r2, &m, "T");
    if dense::degree(&g) != Some(0) {
        return Err(CatalogError::BadModulus(label));
    }
    let golden_id = match (level, m.len()) {
        (Level::T2T1, 2) if m[0].is_zero() => "f_t2t1_mod_t",
        (Level::T2T, 3) => "f_t2t_mod_t2t1",
        _ => return Err(CatalogError::NotInCatalog(format!("{} mod {label}", level.label()))),
    };
    let d = (m.len() - 1) as u32;
    let big = make_field(2, d, None)?;
    let rb = GfRing::new(big.clone());
    let lifted: Vec<Gf> = m.iter().map(|c| big.from_int(c.index() as i64)).collect();
    let root = roots_dense(&rb, &lifted)?
        .first()
        .map(|r| r.0)
        .ok_or_else(|| CatalogError::BadModulus(format!("{label} (reducible)")))?;
    let f = level.factors(cat)?.pop().unwrap();
    let reduced = embed_poly(&f, &big)?.eval_var("T", &root)?.with_vars(&names(&["X", "Y"]))?;
    let golden = embed_poly(&cat.gf(golden_id, "f")?, &big)?;
    Ok(reduced == golden)
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeFormula {
    pub level: String,
    /// `q^deg N · Π (1 + q^-deg P)`.
    pub expected: u64,
    pub deg_y: u32,
}

impl DegreeFormula {
    pub fn holds(&self) -> bool {
        self.expected == self.deg_y as u64
    }
}

/// Checks `deg_Y Φ_N` against the index formula for `N` over F₂.
pub fn verify_degree_formula(cat: &Catalog, n: &[Gf]) -> Result<DegreeFormula, CatalogError> {
    let r2 = f2();
    let n = dense::trimmed(&r2, n.to_vec());
    let label = dense::format(&r2, &n, "T");
    let level = Level::from_dense(&n).ok_or_else(|| CatalogError::NotInCatalog(label.clone()))?;
    let primes: [&[u8]; 3] = [&[0, 1], &[1, 1], &[1, 1, 1]];
    let mut rest = n.clone();
    let mut expected = 1u64;
    for p in primes {
        let p: Vec<Gf> = p.iter().map(|&c| Gf(c as u32)).collect();
        let d = (p.len() - 1) as u32;
        let mut e = 0;
        loop {
            let (q, r) = dense::divrem(&r2, &rest, &p);
            if !r.is_empty() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            expected *= 2u64.pow(d * (e - 1)) * (2u64.pow(d) + 1);
        }
    }
    if rest.len() != 1 {
        return Err(CatalogError::NotInCatalog(label));
    }
    let deg_y = level.phi(cat)?.degree_in("Y")?.unwrap_or(0);
    Ok(DegreeFormula { level: label, expected, deg_y })
}

fn dense_in<R: Ring>(p: &SparsePoly<R>, var: &str) -> Result<Vec<R::Elem>, CatalogError> {
    Ok(p.compact().with_vars(&[var.to_string()])?.to_dense(var)?)
}

/// `v⁵ P(1/v − v) = 1 − 11v⁵ − v¹⁰` for a quintic `P`.
pub fn dihedral_holds<R: Ring>(r: &R, p: &[R::Elem]) -> bool {
    let one_minus_v2 = vec![r.one(), r.zero(), r.from_i64(-1)];
    let mut acc: Vec<R::Elem> = Vec::new();
    for (i, c) in p.iter().enumerate() {
        if i > 5 {
            return false;
        }
        let mut t = dense::pow(r, &one_minus_v2, i as u64);
        t = dense::mul(r, &t, &dense::pow(r, &[r.zero(), r.one()], (5 - i) as u64));
        acc = dense::add(r, &acc, &dense::scale(r, &t, c));
    }
    let mut want = vec![r.zero(); 11];
    want[0] = r.one();
    want[5] = r.from_i64(-11);
    want[10] = r.from_i64(-1);
    dense::trimmed(r, acc) == dense::trimmed(r, want)
}

/// In `K(w)` with `K = base(v)` and `w⁵ = R(v)`: `P(1/w − w)·P((x+4)/(x−1)) = 125`
/// for `x = 1/v − v`. `None` if `R` is not a valid modulus datum.
pub fn rr_lift_holds<R: Ring>(r: &R, p: &[R::Elem], rnum: &[R::Elem], rden: &[R::Elem]) -> Option<bool> {
    let k = RatFuncRing::new(r.clone(), "v");
    let rv = k.fraction(rnum.to_vec(), rden.to_vec())?;
    let mut modulus = vec![k.neg(&rv)];
    modulus.extend((0..4).map(|_| k.zero()));
    modulus.push(k.one());
    let q = QuotientRing::new(k.clone(), modulus, "w")?;
    let w = q.generator();
    let y = q.sub(&q.inv(&w)?, &w);
    let mut py = q.zero();
    for c in p.iter().rev() {
        py = q.add(&q.mul(&py, &y), &q.from_base(k.from_base(c.clone())));
    }
    let x = k.fraction(vec![r.one(), r.zero(), r.from_i64(-1)], vec![r.zero(), r.one()])?;
    let z = k.mul(&k.add(&x, &k.from_i64(4)), &k.inv(&k.sub(&x, &k.one()))?);
    let mut pz = k.zero();
    for c in p.iter().rev() {
        pz = k.add(&k.mul(&pz, &z), &k.from_base(c.clone()));
    }
    Some(q.mul(&py, &q.from_base(pz)) == q.from_i64(125))
}

fn rat_dense(p: &SparsePoly<Rationals>, var: &str) -> Result<Vec<BigRational>, CatalogError> {
    dense_in(p, var)
}

fn mod_dense(p: &SparsePoly<Rationals>, prime: u64, var: &str) -> Result<(GfRing, Vec<Gf>), CatalogError> {
    let g = reduce_rational(p, prime)?;
    let r = g.ring().clone();
    Ok((r, dense_in(&g, var)?))
}

pub const RR_PRIMES: [u64; 3] = [7, 11, 13];

#[derive(Clone, Debug, Serialize)]
pub struct RrLiftReport {
    pub rational: Option<bool>,
    pub modular: Vec<(u64, Option<bool>)>,
}

impl RrLiftReport {
    pub fn holds(&self) -> bool {
        match self.rational {
            Some(b) => b,
            None => self.modular.iter().all(|(_, b)| *b == Some(true)),
        }
    }
}

/// The lift identity over ℚ and modulo [`RR_PRIMES`]. With `perturb`, `R + v`
/// replaces `R`.
pub fn verify_rr_lift(cat: &Catalog, perturb: bool) -> Result<RrLiftReport, CatalogError> {
    let p = cat.rational("loetter", "elkies_p")?;
    let mut rn = cat.rational("loetter", "r_num")?;
    let rd = cat.rational("loetter", "r_den")?;
    if perturb {
        let v = SparsePoly::var(&Rationals, &["X", "Y", "t", "v"], "v")?;
        rn = &rn + &(&v * &rd);
    }
    let rational = rr_lift_holds(&Rationals, &rat_dense(&p, "t")?, &rat_dense(&rn, "v")?, &rat_dense(&rd, "v")?);
    let mut modular = Vec::new();
    for prime in RR_PRIMES {
        let (r, pd) = mod_dense(&p, prime, "t")?;
        let (_, nd) = mod_dense(&rn, prime, "v")?;
        let (_, dd) = mod_dense(&rd, prime, "v")?;
        modular.push((prime, rr_lift_holds(&r, &pd, &nd, &dd)));
    }
    Ok(RrLiftReport { rational, modular })
}

/// Dihedral identity for the stored quintic over ℚ and F₇. With `perturb`,
/// `P + 1` is checked instead.
pub fn verify_dihedral(cat: &Catalog, perturb: bool) -> Result<(bool, bool), CatalogError> {
    let mut p = cat.rational("loetter", "elkies_p")?;
    if perturb {
        p = &p + &SparsePoly::one(&Rationals, &["X", "Y", "t", "v"]);
    }
    let q = dihedral_holds(&Rationals, &rat_dense(&p, "t")?);
    let (r7, d7) = mod_dense(&p, 7, "t")?;
    Ok((q, dihedral_holds(&r7, &d7)))
}

/// The relation `P(y) = F(x)/E(x)` of the stored step satisfies
/// `P(y)·P((x+4)/(x−1)) = 125`.
pub fn verify_elkies_step(cat: &Catalog) -> Result<bool, CatalogError> {
    let step = cat.rational("loetter", "elkies_step")?;
    let p = cat.rational("loetter", "elkies_p")?;
    let e = step.coeffs_in("Y")?.get(5).cloned().unwrap_or_else(|| step.scale(&Rationals.zero()));
    let py = p.rename(&[("t", "Y")]).with_vars(step.vars())?;
    let f = &(&e * &py) - &step;
    if f.degree_in("Y")?.unwrap_or(0) > 0 {
        return Ok(false);
    }
    let k = RatFuncRing::new(Rationals, "X");
    let Some(ratio) = k.fraction(dense_in(&f, "X")?, dense_in(&e, "X")?) else {
        return Ok(false);
    };
    let x = k.variable();
    let Some(den) = k.inv(&k.sub(&x, &k.one())) else { return Ok(false) };
    let z = k.mul(&k.add(&x, &k.from_i64(4)), &den);
    let mut pz = k.zero();
    for c in rat_dense(&p, "t")?.iter().rev() {
        pz = k.add(&k.mul(&pz, &z), &k.from_base(c.clone()));
    }
    Ok(k.mul(&ratio, &pz) == k.from_i64(125))
}

/// Over F₇, `x ↦ c·x, y ↦ c·y` carries the original level-5 curve onto the
/// scaled one.
pub fn verify_scaling_equivalence(cat: &Catalog, c: i64) -> Result<bool, CatalogError> {
    let split = |name: &str| -> Result<(GfRing, Vec<Gf>, Vec<Gf>), CatalogError> {
        let p = reduce_rational(&cat.rational("loetter", name)?, 7)?.compact();
        let cs = p.coeffs_in("Y")?;
        if cs.len() != 6 || cs[1..5].iter().any(|c| !c.is_zero()) {
            return Err(CatalogError::Schema(format!("{name} is not of the form y^5 D - N")));
        }
        let r = p.ring().clone();
        let d = dense_in(&cs[5], "X")?;
        let n = dense::neg(&r, &dense_in(&cs[0], "X")?);
        Ok((r, n, d))
    };
    let (r, n0, d0) = split("original")?;
    let (_, n1, d1) = split("scaled")?;
    let k = RatFuncRing::new(r.clone(), "X");
    let cx = vec![r.zero(), r.from_i64(c)];
    let lhs_den = dense::scale(&r, &dense::compose(&r, &d0, &cx), &r.pow(&r.from_i64(c), 5));
    let lhs = k.fraction(dense::compose(&r, &n0, &cx), lhs_den);
    Ok(lhs.is_some() && lhs == k.fraction(n1, d1))
}

#[derive(Clone, Debug, Serialize)]
pub struct Level2Report {
    /// The stored factor divides exactly (a failed division is an error).
    pub divides: bool,
    pub quotient_degree: usize,
    /// Degree 2 and rootless at the certificate point.
    pub quadratic_irreducible: bool,
    /// `(u0, u1)` over F₁₀₂₄ at which the specialized quotient has no root.
    pub certificate: (u32, u32),
    pub certificate_display: String,
}

/// Divides `Φ(α⁸, u₁, T)` by the stored linear factor in
/// `F₁₀₂₄(u₀)[u₁]/(Φ(α, u₀, u₁))` and certifies the quadratic cofactor
/// irreducible by specialization.
pub fn verify_level2_factor(cat: &Catalog) -> Result<Level2Report, CatalogError> {
    let big = make_field(2, 10, None)?;
    let rb = GfRing::new(big.clone());
    let phi = embed_poly(&cat.gf("phi_alpha", "phi")?, &big)?;
    let factor = embed_poly(&cat.gf("level2_factor", "factor")?, &big)?;
    let k = RatFuncRing::new(rb.clone(), "u0");
    // Φ(α, u0, u1) monic in u1
    let as_k = |p: &P, var: &str| -> Result<Vec<_>, CatalogError> {
        p.coeffs_in(var)?.iter().map(|c| Ok(k.from_poly(dense_in(c, "X").or_else(|_| dense_in(c, "U"))?))).collect()
    };
    let base = as_k(&phi, "Y")?;
    let lead = k.inv(base.last().unwrap()).unwrap();
    let modulus: Vec<_> = base.iter().map(|c| k.mul(c, &lead)).collect();
    let q = QuotientRing::new(k.clone(), modulus, "u1").unwrap();
    // Φ(α⁸, u1, T): coefficients in T are polynomials in u1 with twisted constants
    let phi8 = phi.map_coeffs(&rb, |c| big.pow(*c, 8));
    let big_t: Vec<Vec<_>> = phi8
        .coeffs_in("Y")?
        .iter()
        .map(|c| Ok(q.reduce(dense_in(c, "X")?.into_iter().map(|e| k.from_base(e)).collect())))
        .collect::<Result<_, CatalogError>>()?;
    let lin: Vec<Vec<_>> = as_k(&factor, "T")?.into_iter().map(|c| q.from_base(c)).collect();
    let lin_lead = q.inv(lin.last().unwrap()).ok_or_else(|| CatalogError::DivisionFails("leading coefficient".into()))?;
    let lin: Vec<_> = lin.iter().map(|c| q.mul(c, &lin_lead)).collect();
    let (quot, rem) = dense::divrem(&q, &big_t, &lin);
    if !dense::trimmed(&q, rem).is_empty() {
        return Err(CatalogError::DivisionFails("nonzero remainder".into()));
    }
    let quotient_degree = quot.len() - 1;
    // specialize u0 := c, u1 := a simple root of Φ(α, c, Y)
    for c in big.elements() {
        let Some(row) = base.iter().map(|x| k.eval(x, &c)).collect::<Option<Vec<Gf>>>() else { continue };
        let row = dense::trimmed(&rb, row);
        if row.len() != base.len() {
            continue;
        }
        for (u1, mult) in roots_dense(&rb, &row)? {
            if mult != 1 {
                continue;
            }
            let spec: Option<Vec<Gf>> = quot
                .iter()
                .map(|res| {
                    let vals = res.iter().map(|x| k.eval(x, &c)).collect::<Option<Vec<Gf>>>()?;
                    Some(dense::eval(&rb, &vals, &u1))
                })
                .collect();
            let Some(spec) = spec else { continue };
            if spec.len() != quot.len() || spec.last().unwrap().is_zero() {
                continue;
            }
            if roots_dense(&rb, &spec)?.is_empty() {
                return Ok(Level2Report {
                    divides: true,
                    quotient_degree,
                    quadratic_irreducible: quotient_degree == 2,
                    certificate: (c.index(), u1.index()),
                    certificate_display: format!("u0 = {}, u1 = {}", big.format(c), big.format(u1)),
                });
            }
        }
    }
    Err(CatalogError::NoCertifyingSpecialization)
}

/// Rabin's irreducibility test over a finite field.
pub fn is_irreducible(r: &GfRing, f: &[Gf]) -> bool {
    let f = dense::monic(r, f);
    let Some(n) = dense::degree(&f) else { return false };
    if n == 0 {
        return false;
    }
    let q = r.field().order();
    let x = vec![Gf::ZERO, Gf::ONE];
    let mut frob = vec![dense::divrem(r, &x, &f).1];
    for _ in 0..n {
        let next = dense::powmod(r, frob.last().unwrap(), q, &f);
        frob.push(next);
    }
    if dense::trimmed(r, dense::sub(r, &frob[n], &frob[0])).len() > 0 {
        return false;
    }
    (2..=n).filter(|p| n % p == 0 && (2..*p).all(|d| p % d != 0)).all(|p| {
        let h = dense::sub(r, &frob[n / p], &frob[0]);
        dense::degree(&dense::gcd(r, &h, &f)) == Some(0)
    })
}

/// First `g ∈ F₃₂` at which the stored relation is irreducible in `g2`.
pub fn component_relation_irreducible_at(cat: &Catalog) -> Result<Option<(Gf, usize)>, CatalogError> {
    let rel = cat.gf("component_relation", "rel")?;
    let r = rel.ring().clone();
    for g in r.field().elements() {
        let spec = dense_in(&rel.eval_var("g", &g)?, "g2")?;
        if is_irreducible(&r, &spec) {
            return Ok(Some((g, spec.len() - 1)));
        }
    }
    Ok(None)
}

/// Samples points of `Φ_{T²+T+1} mod T` over F₄, F₁₆ and F₁₀₂₄ and checks the
/// stored `u₀(j₀, j₁)` against the reduced parameterization. Returns the
/// number of points checked, or `None` on a mismatch.
pub fn verify_u0_f4(cat: &Catalog) -> Result<Option<usize>, CatalogError> {
    let phi = Level::T2T1.phi(cat)?.eval_var("T", &Gf::ZERO)?.with_vars(&names(&["X", "Y"]))?;
    let num = cat.gf("u0_f4", "num")?;
    let den = cat.gf("u0_f4", "den")?;
    let jp = Level::T2T1.jparam(cat)?;
    let mut checked = 0;
    for k in [2, 4, 10] {
        let f = make_field(2, k, None)?;
        let r = GfRing::new(f.clone());
        let phi = embed_poly(&phi, &f)?;
        let (num, den) = (embed_poly(&num, &f)?, embed_poly(&den, &f)?);
        let jp: Vec<Vec<Gf>> = jp
            .iter()
            .map(|p| dense_in(&embed_poly(p, &f)?.eval_var("T", &Gf::ZERO)?, "u"))
            .collect::<Result<_, CatalogError>>()?;
        for j0 in f.elements() {
            let row = dense_in(&phi.eval_var("X", &j0)?, "Y")?;
            if row.is_empty() {
                continue;
            }
            for (j1, _) in roots_dense(&r, &row)? {
                let d = den.eval_all(&[j0, j1]);
                let Some(di) = f.inv(d) else { continue };
                let u = f.mul(num.eval_all(&[j0, j1]), di);
                let val = |n: &[Gf], d: &[Gf]| f.inv(dense::eval(&r, d, &u)).map(|i| f.mul(dense::eval(&r, n, &u), i));
                match (val(&jp[0], &jp[1]), val(&jp[2], &jp[3])) {
                    (Some(a), Some(b)) if a == j0 && b == j1 => checked += 1,
                    (Some(_), Some(_)) => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    Ok(Some(checked))
}

fn canonical(list: &[P]) -> Vec<String> {
    let mut v: Vec<String> = list.iter().map(|p| serial::to_string(&p.compact())).collect();
    v.sort();
    v
}

fn difference(l: &P, r: &P) -> Result<P, CatalogError> {
    Ok(l.checked_sub(&r.with_vars(l.vars()).or_else(|_| Ok::<_, CatalogError>(r.clone()))?)
        .or_else(|_| {
            let mut vars = l.vars().to_vec();
            vars.extend(r.vars().iter().filter(|v| !l.vars().contains(v)).cloned());
            l.with_vars(&vars)?.checked_sub(&r.with_vars(&vars)?)
        })?
        .compact())
}

/// Both constraint lists, compared as canonically sorted lists.
pub fn verify_constraint_lists(cat: &Catalog) -> Result<(bool, bool), CatalogError> {
    let c = skew::commutation_constraints(2)?;
    let curve = cat.gf_all("curve_constraints", "c")?;
    let comm = cat.gf_all("commute_constraints", "c")?;
    Ok((canonical(&c.curve) == canonical(&curve), canonical(&c.commute) == canonical(&comm)))
}

pub fn verify_p3(cat: &Catalog) -> Result<bool, CatalogError> {
    let checks = skew::simplify_p3_identity()?;
    let c = skew::commutation_constraints(2)?;
    let p3 = difference(&c.curve[0], &c.commute[0].pow(4))?;
    Ok(checks.iter().all(|c| c.holds) && p3 == cat.gf("p3", "p3")?)
}

/// The recomputed isogeny coefficient equations match the stored ones as
/// `lhs − rhs`, position by position.
pub fn verify_isogeny_systems(cat: &Catalog) -> Result<(bool, bool), CatalogError> {
    let cmp = |computed: Vec<(P, P)>, id: &str| -> Result<bool, CatalogError> {
        let golden = cat.gf_equations(id, "eq")?;
        if computed.len() != golden.len() {
            return Ok(false);
        }
        for ((a, b), (c, d)) in computed.iter().zip(&golden) {
            if difference(a, b)? != difference(c, d)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok((cmp(skew::isogeny_system_t(2)?, "isogeny_t")?, cmp(skew::isogeny_system_s(2)?, "isogeny_s")?))
}

pub fn verify_eliminations(cat: &Catalog) -> Result<(bool, bool), CatalogError> {
    let g = |id: &str| -> Result<P, CatalogError> {
        let (l, r) = cat.gf_equations(id, "rel")?.remove(0);
        difference(&l, &r)
    };
    Ok((skew::eliminate_t(2)? == g("eliminated_t")?, skew::eliminate_s(2)? == g("eliminated_s")?))
}

/// One line of the identity suite.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

fn run(id: &str, out: &mut Vec<CheckResult>, f: impl FnOnce() -> Result<(bool, String), CatalogError>) {
    let t = Instant::now();
    let (passed, detail) = match f() {
        Ok(x) => x,
        Err(e) => (false, format!("error: {e}")),
    };
    out.push(CheckResult { id: id.to_string(), passed, detail, millis: t.elapsed().as_millis() });
}

fn ok(b: bool) -> String {
    if b { "holds" } else { "fails" }.to_string()
}

/// Every catalog identity, including negative controls (which pass when the
/// perturbed identity is rejected).
pub fn run_identity_suite(cat: &Catalog, groups: Option<&[&str]>) -> Vec<CheckResult> {
    let want = |g: &str| groups.map_or(true, |gs| gs.contains(&g));
    let mut out = Vec::new();
    if want("modular") {
        for l in Level::ALL {
            run(&format!("symmetry/{}", l.label()), &mut out, || {
                let b = verify_symmetry(&l.phi(cat)?)?;
                Ok((b, ok(b)))
            });
        }
        run("psi/T", &mut out, || {
            let (_, mode) = extract_psi(&Level::T.phi(cat)?, &cat.gf("psi_t", "psi")?)?;
            Ok((true, format!("{mode:?}")))
        });
        for l in Level::ALL {
            run(&format!("parameterization/{}", l.label()), &mut out, || {
                let b = verify_parameterization(cat, l, false)?;
                Ok((b, ok(b)))
            });
        }
        run("parameterization/T/perturbed", &mut out, || {
            let b = verify_parameterization(cat, Level::T, true)?;
            Ok((!b, format!("perturbed identity {}", if b { "accepted" } else { "rejected" })))
        });
        for l in Level::ALL {
            run(&format!("cross-factorization/{}", l.label()), &mut out, || {
                let r = verify_cross_factorization(cat, l)?;
                let pass = r.product_matches && r.f_unique && r.stored_matches != Some(false);
                Ok((pass, format!("y-degrees {:?}, stored cross {:?}", r.factor_y_degrees, r.stored_matches)))
            });
        }
        run("reduction/T^2+T+1 mod T", &mut out, || {
            let b = verify_reduction(cat, Level::T2T1, &Level::T.dense())?;
            Ok((b, ok(b)))
        });
        run("reduction/T^2+T mod T^2+T+1", &mut out, || {
            let b = verify_reduction(cat, Level::T2T, &Level::T2T1.dense())?;
            Ok((b, ok(b)))
        });
        run("reduction/T^2+T mod T/rejected", &mut out, || match verify_reduction(cat, Level::T2T, &Level::T.dense()) {
            Err(CatalogError::BadModulus(m)) => Ok((true, format!("BadModulus({m})"))),
            other => Ok((false, format!("{other:?}"))),
        });
        for l in Level::ALL {
            run(&format!("degree-formula/{}", l.label()), &mut out, || {
                let d = verify_degree_formula(cat, &l.dense())?;
                Ok((d.holds(), format!("expected {}, deg_Y {}", d.expected, d.deg_y)))
            });
        }
        run("u0-over-F4", &mut out, || {
            let n = verify_u0_f4(cat)?;
            Ok((n.is_some_and(|n| n > 0), format!("{n:?} points")))
        });
    }
    if want("level5") {
        run("dihedral", &mut out, || {
            let (q, f7) = verify_dihedral(cat, false)?;
            Ok((q && f7, format!("Q {}, F7 {}", ok(q), ok(f7))))
        });
        run("dihedral/perturbed", &mut out, || {
            let (q, f7) = verify_dihedral(cat, true)?;
            Ok((!q && !f7, format!("Q {}, F7 {}", ok(q), ok(f7))))
        });
        run("rr-lift", &mut out, || {
            let r = verify_rr_lift(cat, false)?;
            Ok((r.holds(), format!("Q {:?}, modular {:?}", r.rational, r.modular)))
        });
        run("rr-lift/perturbed", &mut out, || {
            let r = verify_rr_lift(cat, true)?;
            Ok((!r.holds(), format!("Q {:?}, modular {:?}", r.rational, r.modular)))
        });
        run("elkies-step", &mut out, || {
            let b = verify_elkies_step(cat)?;
            Ok((b, ok(b)))
        });
        run("scaling/F7", &mut out, || {
            let yes = verify_scaling_equivalence(cat, 3)?;
            let no = verify_scaling_equivalence(cat, 2)?;
            Ok((yes && !no, format!("x->3x {}, x->2x {}", ok(yes), ok(no))))
        });
    }
    if want("drinfeld") {
        run("constraint-lists", &mut out, || {
            let (a, b) = verify_constraint_lists(cat)?;
            Ok((a && b, format!("curve {}, commute {}", ok(a), ok(b))))
        });
        run("p3", &mut out, || {
            let b = verify_p3(cat)?;
            Ok((b, ok(b)))
        });
        run("isogeny-systems", &mut out, || {
            let (a, b) = verify_isogeny_systems(cat)?;
            Ok((a && b, format!("T {}, S {}", ok(a), ok(b))))
        });
        run("eliminations", &mut out, || {
            let (a, b) = verify_eliminations(cat)?;
            Ok((a && b, format!("T {}, S {}", ok(a), ok(b))))
        });
    }
    if want("elliptic") {
        run("level2-factor", &mut out, || {
            let r = verify_level2_factor(cat)?;
            Ok((r.divides && r.quadratic_irreducible, format!("quadratic cofactor, irreducible at {}", r.certificate_display)))
        });
        run("component-relation", &mut out, || {
            let f = make_field(2, 5, None)?;
            Ok(match component_relation_irreducible_at(cat)? {
                Some((g, d)) => (true, format!("irreducible of degree {d} in g2 at g = {}", f.format(g))),
                None => (false, "reducible at every g in F32".into()),
            })
        });
    }
    out
}

pub const CHECK_GROUPS: [&str; 4] = ["modular", "level5", "drinfeld", "elliptic"];
