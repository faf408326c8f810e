use std::collections::BTreeMap;

use crate::gf::Gf;

use super::dense;
use super::ring::{GfRing, QuotientRing, Ring};
use super::sparse::{Monomial, SparsePoly};
use super::PolyError;

/// `a / b`, exact, dividing leading terms in the lex order with `var` most
/// significant. Fails with `InexactDivision` on a nonzero remainder.
pub fn exact_divide<R: Ring>(a: &SparsePoly<R>, b: &SparsePoly<R>, var: &str) -> Result<SparsePoly<R>, PolyError> {
    if b.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let a2 = a.checked_add(&b.scale(&b.ring().zero()))?;
    let b2 = b.with_vars(a2.vars())?;
    let vars = a2.vars().to_vec();
    let r = a2.ring().clone();
    let lead = vars.iter().position(|v| v == var).unwrap_or(0);
    let key = |m: &Monomial| -> Vec<u32> {
        let mut k = Vec::with_capacity(m.0.len());
        k.push(m.0[lead]);
        k.extend(m.0.iter().enumerate().filter(|(i, _)| *i != lead).map(|(_, e)| *e));
        k
    };

    let mut rem: BTreeMap<Vec<u32>, (Monomial, R::Elem)> =
        a2.terms().map(|(m, c)| (key(m), (m.clone(), c.clone()))).collect();
    let (bl_mon, bl_coef) = b2
        .terms()
        .max_by(|x, y| key(x.0).cmp(&key(y.0)))
        .map(|(m, c)| (m.clone(), c.clone()))
        .unwrap();
    let bl_inv = r.inv(&bl_coef).ok_or(PolyError::InexactDivision)?;
    let b_terms: Vec<(Monomial, R::Elem)> = b2.terms().map(|(m, c)| (m.clone(), c.clone())).collect();

    let mut quotient = Vec::new();
    while let Some((_, (m, c))) = rem.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let t = m.div(&bl_mon).ok_or(PolyError::InexactDivision)?;
        let tc = r.mul(&c, &bl_inv);
        for (bm, bc) in &b_terms {
            let pm = bm.mul(&t);
            let pc = r.mul(bc, &tc);
            let k = key(&pm);
            match rem.get_mut(&k) {
                Some(slot) => {
                    slot.1 = r.sub(&slot.1, &pc);
                    if r.is_zero(&slot.1) {
                        rem.remove(&k);
                    }
                }
                None => {
                    rem.insert(k, (pm, r.neg(&pc)));
                }
            }
        }
        quotient.push((t.0, tc));
    }
    Ok(SparsePoly::from_terms(&r, &vars, quotient))
}

/// `a = b·q + r` with `deg_var r < deg_var b`, for `b` monic in `var`.
pub fn divide_with_remainder<R: Ring>(
    a: &SparsePoly<R>,
    b: &SparsePoly<R>,
    var: &str,
) -> Result<(SparsePoly<R>, SparsePoly<R>), PolyError> {
    let (a, b) = {
        let z = b.scale(&b.ring().zero());
        let a = a.checked_add(&z)?;
        let b = b.with_vars(a.vars())?;
        (a, b)
    };
    let bc = b.coeffs_in(var)?;
    let d = bc.len().checked_sub(1).ok_or(PolyError::ZeroPolynomial)?;
    let lc = &bc[d];
    if !(lc.is_constant() && lc.ring().is_one(&lc.constant_term())) {
        return Err(PolyError::NotMonic(var.into()));
    }
    let mut rc = a.coeffs_in(var)?;
    let vi = a.var_index(var)?;
    let zero = a.scale(&a.ring().zero());
    let mut qc = vec![zero.clone(); rc.len().saturating_sub(d)];
    for k in (d..rc.len()).rev() {
        let c = rc[k].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in bc.iter().enumerate() {
            rc[k - d + i] = &rc[k - d + i] - &(&c * bi);
        }
        qc[k - d] = c;
    }
    let assemble = |cs: &[SparsePoly<R>]| {
        let mut acc = zero.clone();
        for (i, c) in cs.iter().enumerate() {
            let mut e = vec![0u32; a.vars().len()];
            e[vi] = i as u32;
            acc = &acc + &c.shift(&e);
        }
        acc
    };
    Ok((assemble(&qc), assemble(&rc[..d.min(rc.len())])))
}

/// A rational binding `var := num / den`.
pub struct Binding<'a, R: Ring> {
    pub var: &'a str,
    pub num: SparsePoly<R>,
    pub den: SparsePoly<R>,
}

/// Result of substituting rational functions and clearing denominators.
#[derive(Clone, Debug)]
pub struct Cleared<R: Ring> {
    pub numerator: SparsePoly<R>,
    pub denominator: SparsePoly<R>,
}

/// Substitutes `var := num/den` for each binding in turn. A binding whose
/// variable has degree `d` in the current numerator contributes `den^d` to
/// the common denominator; bindings must not mention later-bound variables.
pub fn substitute<R: Ring>(a: &SparsePoly<R>, bindings: &[Binding<'_, R>]) -> Result<Cleared<R>, PolyError> {
    let mut num = a.clone();
    let vars: Vec<&str> = a.vars().iter().map(String::as_str).collect();
    let mut den = SparsePoly::one(a.ring(), &vars);
    for b in bindings {
        a.var_index(b.var)?;
        let cs = num.coeffs_in(b.var)?;
        if cs.is_empty() {
            continue;
        }
        let d = cs.len() - 1;
        let mut num_pows = vec![SparsePoly::one(a.ring(), &vars)];
        let mut den_pows = vec![SparsePoly::one(a.ring(), &vars)];
        for i in 1..=d {
            num_pows.push(&num_pows[i - 1] * &b.num);
            den_pows.push(&den_pows[i - 1] * &b.den);
        }
        let mut acc = SparsePoly::zero(a.ring(), &vars);
        for (i, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&(c * &num_pows[i]) * &den_pows[d - i]);
        }
        num = acc;
        den = &den * &den_pows[d];
    }
    Ok(Cleared { numerator: num, denominator: den })
}

/// Evaluates at `var := num/den` field values; errors if a denominator is 0.
pub fn eval_rational<R: Ring>(
    a: &SparsePoly<R>,
    bindings: &[(&str, R::Elem, R::Elem)],
) -> Result<SparsePoly<R>, PolyError> {
    let r = a.ring();
    let mut out = a.clone();
    for (var, n, d) in bindings {
        let di = r.inv(d).ok_or(PolyError::DenominatorVanishes)?;
        out = out.eval_var(var, &r.mul(n, &di))?;
    }
    Ok(out)
}

/// Roots in the coefficient field with multiplicities, in enumeration order.
pub fn roots_in_field(a: &SparsePoly<GfRing>) -> Result<Vec<(Gf, u32)>, PolyError> {
    let used = a.used_vars();
    if used.len() > 1 {
        return Err(PolyError::NotUnivariate(used.join(",")));
    }
    let d = match used.first() {
        Some(v) => a.to_dense(v)?,
        None => a.to_dense(a.vars().first().map(String::as_str).unwrap_or("x"))?,
    };
    roots_dense(a.ring(), &d)
}

/// Roots of a dense polynomial over GF(q). The candidate set is cut down to
/// `gcd(a, x^q − x)` first; multiplicities come from repeated division.
pub fn roots_dense(r: &GfRing, a: &[Gf]) -> Result<Vec<(Gf, u32)>, PolyError> {
    let a = dense::trimmed(r, a.to_vec());
    if a.is_empty() {
        return Err(PolyError::ZeroPolynomial);
    }
    if a.len() == 1 {
        return Ok(Vec::new());
    }
    let f = r.field();
    let xq = dense::powmod_x(r, f.order(), &a);
    let split = dense::gcd(r, &a, &dense::sub(r, &xq, &[r.zero(), r.one()]));
    let candidates: Vec<Gf> = match split.len() {
        0 | 1 => Vec::new(),
        2 => vec![r.neg(&split[0])],
        _ => f.elements().filter(|x| r.is_zero(&dense::eval(r, &split, x))).collect(),
    };
    let mut out = Vec::with_capacity(candidates.len());
    for x in candidates {
        let lin = [r.neg(&x), r.one()];
        let mut rest = a.clone();
        let mut m = 0;
        loop {
            let (q, rem) = dense::divrem(r, &rest, &lin);
            if !rem.is_empty() {
                break;
            }
            rest = q;
            m += 1;
        }
        out.push((x, m));
    }
    out.sort_by_key(|(x, _)| x.index());
    Ok(out)
}

/// Monic gcd of two univariate polynomials in the same variable.
pub fn gcd_univariate<R: Ring>(a: &SparsePoly<R>, b: &SparsePoly<R>) -> Result<SparsePoly<R>, PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut used = a.used_vars();
    for v in b.used_vars() {
        if !used.contains(&v) {
            used.push(v);
        }
    }
    if used.len() > 1 {
        return Err(PolyError::NotUnivariate(used.join(",")));
    }
    let var = used.first().cloned().or_else(|| a.vars().first().cloned()).unwrap_or_else(|| "x".into());
    let r = a.ring();
    if !r.same_ring(b.ring()) {
        return Err(PolyError::DomainMismatch(format!("{r:?}"), format!("{:?}", b.ring())));
    }
    let g = dense::gcd(r, &a.to_dense(&var)?, &b.to_dense(&var)?);
    Ok(SparsePoly::from_dense(r, &var, &g))
}

pub fn q_add<R: Ring>(q: &QuotientRing<R>, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    q.add(&x.to_vec(), &y.to_vec())
}

pub fn q_mul<R: Ring>(q: &QuotientRing<R>, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    q.mul(&x.to_vec(), &y.to_vec())
}

/// Inverse in the quotient ring; on failure the error carries the gcd with
/// the modulus.
pub fn q_inv<R: Ring>(q: &QuotientRing<R>, x: &[R::Elem]) -> Result<Vec<R::Elem>, PolyError> {
    q.try_inv(x).map_err(|g| PolyError::NotInvertible(dense::format(q.base(), &g, q.var())))
}
