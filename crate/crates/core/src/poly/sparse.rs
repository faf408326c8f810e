use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;
use super::PolyError;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then the first variable is most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub(crate) fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct SparsePoly<R: Ring> {
    ring: R,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> SparsePoly<R> {
    pub fn zero(ring: &R, vars: &[&str]) -> Self {
        SparsePoly { ring: ring.clone(), vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, vars: &[&str], c: R::Elem) -> Self {
        let mut p = Self::zero(ring, vars);
        p.insert(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(ring: &R, vars: &[&str]) -> Self {
        Self::constant(ring, vars, ring.one())
    }

    /// The polynomial `name`; errors if `name` is not among `vars`.
    pub fn var(ring: &R, vars: &[&str], name: &str) -> Result<Self, PolyError> {
        let i = vars.iter().position(|v| *v == name).ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(ring, vars);
        p.insert(Monomial(e), ring.one());
        Ok(p)
    }

    pub fn from_terms(ring: &R, vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, R::Elem)>) -> Self {
        let mut p = SparsePoly { ring: ring.clone(), vars: vars.to_vec(), terms: BTreeMap::new() };
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Dense univariate coefficients (low first) as a polynomial in `var`.
    pub fn from_dense(ring: &R, var: &str, coeffs: &[R::Elem]) -> Self {
        let vars = [var.to_string()];
        Self::from_terms(ring, &vars, coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())))
    }

    fn insert(&mut self, m: Monomial, c: R::Elem) {
        if !self.ring.is_zero(&c) {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.ring.add(old, &c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| PolyError::UnknownVariable(name.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> R::Elem {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Result<Option<u32>, PolyError> {
        let i = match self.var_index(var) {
            Ok(i) => i,
            Err(_) => return Ok(if self.is_zero() { None } else { Some(0) }),
        };
        Ok(self.terms.keys().map(|m| m.0[i]).max())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    /// Re-expresses over `vars`, which must contain every used variable.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self, PolyError> {
        if vars == self.vars.as_slice() {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.terms.keys().all(|m| m.0[i] == 0) => map.push(None),
                None => return Err(PolyError::UnknownVariable(v.clone())),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (Monomial(e), c.clone())
        });
        Ok(SparsePoly { ring: self.ring.clone(), vars: vars.to_vec(), terms: terms.collect() })
    }

    /// Drops variables that do not occur.
    pub fn compact(&self) -> Self {
        self.with_vars(&self.used_vars()).unwrap()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut v = self.vars.clone();
        for w in &other.vars {
            if !v.contains(w) {
                v.push(w.clone());
            }
        }
        v
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self), PolyError> {
        if !self.ring.same_ring(&other.ring) {
            return Err(PolyError::DomainMismatch(format!("{:?}", self.ring), format!("{:?}", other.ring)));
        }
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        let u = self.union_vars(other);
        Ok((self.with_vars(&u)?, other.with_vars(&u)?))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let (mut a, b) = self.aligned(other)?;
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        Ok(a)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let (a, b) = self.aligned(other)?;
        Ok(a.mul_aligned(&b))
    }

    fn mul_aligned(&self, b: &Self) -> Self {
        let r = &self.ring;
        let mut out = SparsePoly { ring: r.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        if self.is_zero() || b.is_zero() {
            return out;
        }
        if b.terms.len() == 1 || self.terms.len() == 1 {
            let (single, other) = if b.terms.len() == 1 { (b, self) } else { (self, b) };
            let (sm, sc) = single.terms.iter().next().unwrap();
            for (m, c) in &other.terms {
                out.insert(m.mul(sm), r.mul(c, sc));
            }
            return out;
        }
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::with_capacity(self.terms.len() * 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &b.terms {
                let prod = r.mul(ca, cb);
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = r.add(e.get(), &prod);
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        out.terms = acc.into_iter().filter(|(_, c)| !r.is_zero(c)).collect();
        out
    }

    pub fn neg_poly(&self) -> Self {
        let r = &self.ring;
        SparsePoly {
            ring: r.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), r.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let r = &self.ring;
        let mut out = Self { ring: r.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, x) in &self.terms {
            out.insert(m.clone(), r.mul(x, c));
        }
        out
    }

    /// Multiplies by the monomial with exponent vector `e` (over `self.vars`).
    pub fn shift(&self, e: &[u32]) -> Self {
        let m = Monomial(e.to_vec());
        Self {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(&m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut acc = Self::one(&self.ring, &vars);
        if e == 0 {
            return acc;
        }
        // (Σ c·m)^p = Σ c^p·m^p in characteristic p
        let p = self.ring.characteristic();
        if p > 0 && e % p == 0 {
            return self.frobenius(p).pow(e / p);
        }
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_aligned(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_aligned(&base);
            }
        }
        acc
    }

    /// `self^q` for `q` a power of the characteristic: coefficients are raised
    /// to the q-th power and exponents multiplied by q.
    pub fn frobenius(&self, q: u64) -> Self {
        let r = &self.ring;
        let mut out = Self { ring: r.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.insert(Monomial(m.0.iter().map(|&x| x * q as u32).collect()), r.frobenius(c, q));
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> SparsePoly<S> {
        let mut out = SparsePoly { ring: ring.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c));
        }
        out
    }

    /// Swaps the roles of two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> Result<Self, PolyError> {
        let i = self.var_index(a)?;
        let j = self.var_index(b)?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.clone();
            e.0.swap(i, j);
            (e, c.clone())
        });
        Ok(Self { ring: self.ring.clone(), vars: self.vars.clone(), terms: terms.collect() })
    }

    /// Simultaneous variable substitution `old := new`. Targets that collide
    /// with an existing name merge into it, so `[("X","Y"),("Y","t")]` maps
    /// `Φ(X, Y)` to `Φ(Y, t)`.
    pub fn rename(&self, map: &[(&str, &str)]) -> Self {
        let target: Vec<String> = self
            .vars
            .iter()
            .map(|v| map.iter().find(|(from, _)| from == v).map_or(v.clone(), |(_, to)| to.to_string()))
            .collect();
        let mut vars: Vec<String> = Vec::new();
        for t in &target {
            if !vars.contains(t) {
                vars.push(t.clone());
            }
        }
        let idx: Vec<usize> = target.iter().map(|t| vars.iter().position(|v| v == t).unwrap()).collect();
        let mut out = Self { ring: self.ring.clone(), vars: vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[idx[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Coefficients with respect to `var`, low degree first; each coefficient
    /// keeps the full variable list (with exponent 0 in `var`).
    pub fn coeffs_in(&self, var: &str) -> Result<Vec<Self>, PolyError> {
        let i = self.var_index(var)?;
        let deg = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
        let mut out: Vec<Self> = (0..=deg)
            .map(|_| Self { ring: self.ring.clone(), vars: self.vars.clone(), terms: BTreeMap::new() })
            .collect();
        if self.is_zero() {
            return Ok(Vec::new());
        }
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let d = std::mem::replace(&mut e.0[i], 0) as usize;
            out[d].terms.insert(e, c.clone());
        }
        Ok(out)
    }

    /// Leading coefficient with respect to `var`.
    pub fn leading_coeff_in(&self, var: &str) -> Result<Self, PolyError> {
        let mut cs = self.coeffs_in(var)?;
        cs.pop().ok_or(PolyError::ZeroPolynomial)
    }

    /// Dense coefficients if the only occurring variable is `var`.
    pub fn to_dense(&self, var: &str) -> Result<Vec<R::Elem>, PolyError> {
        let i = match self.var_index(var) {
            Ok(i) => Some(i),
            Err(_) if self.is_constant() => None,
            Err(e) => return Err(e),
        };
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let d = match i {
                Some(i) => m.0[i] as usize,
                None => 0,
            };
            if m.degree() as usize != d {
                return Err(PolyError::NotUnivariate(var.into()));
            }
            if out.len() <= d {
                out.resize(d + 1, self.ring.zero());
            }
            out[d] = c.clone();
        }
        Ok(out)
    }

    /// Substitutes a ring element for `var`; the variable remains in the list
    /// with exponent 0.
    pub fn eval_var(&self, var: &str, x: &R::Elem) -> Result<Self, PolyError> {
        let i = self.var_index(var)?;
        let r = &self.ring;
        let mut powers: Vec<R::Elem> = vec![r.one()];
        let mut out = Self { ring: r.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let d = m.0[i] as usize;
            while powers.len() <= d {
                let next = r.mul(powers.last().unwrap(), x);
                powers.push(next);
            }
            let mut e = m.clone();
            e.0[i] = 0;
            out.add_term(e, r.mul(c, &powers[d]));
        }
        Ok(out)
    }

    /// Full evaluation at a point given for every variable in `self.vars`.
    pub fn eval_all(&self, point: &[R::Elem]) -> R::Elem {
        let r = &self.ring;
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = r.mul(&t, &r.pow(x, e as u64));
                }
            }
            acc = r.add(&acc, &t);
        }
        acc
    }

    /// Polynomial substitution `var := g` (no denominators). `g` may use any
    /// variables; the result is over the union.
    pub fn compose(&self, var: &str, g: &Self) -> Result<Self, PolyError> {
        let cs = self.coeffs_in(var)?;
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut acc = Self::zero(&self.ring, &vars);
        for c in cs.iter().rev() {
            acc = acc.checked_mul(g)?.checked_add(c)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: &str) -> Result<Self, PolyError> {
        let i = self.var_index(var)?;
        let r = &self.ring;
        let mut out = Self { ring: r.clone(), vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                continue;
            }
            let mut e = m.clone();
            e.0[i] -= 1;
            out.add_term(e, r.mul(&r.from_i64(m.0[i] as i64), c));
        }
        Ok(out)
    }

    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let r = &self.ring;
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            let cs = r.format(c);
            parts.push(if mono.is_empty() {
                cs
            } else if r.is_one(c) {
                mono
            } else if cs.contains(['+', ' ', '/']) || cs[1..].contains('-') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            });
        }
        parts.join(" + ")
    }
}

impl<R: Ring> PartialEq for SparsePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Ok((a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

impl<R: Ring> fmt::Debug for SparsePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.format(), self.vars.join(","))
    }
}

impl<R: Ring> fmt::Display for SparsePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

// Operator forms panic on a domain mismatch; use the `checked_*` methods when
// the operands come from untrusted input.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, R: Ring> $tr<&'a SparsePoly<R>> for &'a SparsePoly<R> {
            type Output = SparsePoly<R>;
            fn $m(self, rhs: &'a SparsePoly<R>) -> SparsePoly<R> {
                self.$checked(rhs).expect("polynomial operands over different domains")
            }
        }
        impl<R: Ring> $tr<SparsePoly<R>> for SparsePoly<R> {
            type Output = SparsePoly<R>;
            fn $m(self, rhs: SparsePoly<R>) -> SparsePoly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for &SparsePoly<R> {
    type Output = SparsePoly<R>;
    fn neg(self) -> SparsePoly<R> {
        self.neg_poly()
    }
}

impl<R: Ring> Neg for SparsePoly<R> {
    type Output = SparsePoly<R>;
    fn neg(self) -> SparsePoly<R> {
        self.neg_poly()
    }
}

