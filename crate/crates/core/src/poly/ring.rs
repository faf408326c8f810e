//! Coefficient domains.
//!
//! Elements carry no context; the ring value supplies it. This keeps finite
//! field elements `Copy` and lets the same generic code run over GF(p^k), the
//! rationals, rational function fields and quotient rings.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde_json::{json, Value};

use crate::gf::{FieldSpec, Gf};

use super::{dense, PolyError};

fn elem_list<R: Ring>(r: &R, v: &Value) -> Result<Vec<R::Elem>, PolyError> {
    let arr = v.as_array().ok_or_else(|| PolyError::Serialization(format!("expected list, got {v}")))?;
    let items = arr.iter().map(|x| r.elem_from_json(x)).collect::<Result<Vec<_>, _>>()?;
    Ok(dense::trimmed(r, items))
}

pub trait Ring: Clone + fmt::Debug {
    type Elem: Clone + fmt::Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero and non-units.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn same_ring(&self, other: &Self) -> bool;
    fn format(&self, a: &Self::Elem) -> String;
    /// JSON descriptor identifying the domain.
    fn descriptor(&self) -> Value;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, PolyError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^q` for `q` a power of the characteristic.
    fn frobenius(&self, a: &Self::Elem, q: u64) -> Self::Elem {
        self.pow(a, q)
    }
}

/// GF(p^k) as a coefficient ring.
#[derive(Clone)]
pub struct GfRing {
    field: Arc<FieldSpec>,
}

impl GfRing {
    pub fn new(field: Arc<FieldSpec>) -> Self {
        GfRing { field }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
}

impl fmt::Debug for GfRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.field.label())
    }
}

impl Ring for GfRing {
    type Elem = Gf;

    #[inline]
    fn zero(&self) -> Gf {
        Gf::ZERO
    }
    #[inline]
    fn one(&self) -> Gf {
        Gf::ONE
    }
    #[inline]
    fn is_zero(&self, a: &Gf) -> bool {
        a.is_zero()
    }
    #[inline]
    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        self.field.add(*a, *b)
    }
    #[inline]
    fn neg(&self, a: &Gf) -> Gf {
        self.field.neg(*a)
    }
    #[inline]
    fn sub(&self, a: &Gf, b: &Gf) -> Gf {
        self.field.sub(*a, *b)
    }
    #[inline]
    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        self.field.mul(*a, *b)
    }
    fn from_i64(&self, n: i64) -> Gf {
        self.field.from_int(n)
    }
    fn inv(&self, a: &Gf) -> Option<Gf> {
        self.field.inv(*a)
    }
    fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }
    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }
    fn format(&self, a: &Gf) -> String {
        self.field.format(*a)
    }
    fn pow(&self, a: &Gf, e: u64) -> Gf {
        self.field.pow(*a, e)
    }
    fn descriptor(&self) -> Value {
        let d = self.field.descriptor();
        json!({"kind": "gf", "p": d.p, "k": d.k, "poly": d.poly})
    }
    fn elem_to_json(&self, a: &Gf) -> Value {
        json!(self.field.coeffs(*a))
    }
    fn elem_from_json(&self, v: &Value) -> Result<Gf, PolyError> {
        let cs: Vec<u32> = serde_json::from_value(v.clone()).map_err(|e| PolyError::Serialization(e.to_string()))?;
        let p = self.field.characteristic() as u32;
        if cs.len() > self.field.degree() as usize || cs.iter().any(|&c| c >= p) {
            return Err(PolyError::Serialization(format!("bad element {v} for {}", self.field.label())));
        }
        Ok(self.field.from_coeffs(&cs))
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "rational"})
    }
    fn elem_to_json(&self, a: &BigRational) -> Value {
        Value::String(self.format(a))
    }
    fn elem_from_json(&self, v: &Value) -> Result<BigRational, PolyError> {
        let s = v.as_str().ok_or_else(|| PolyError::Serialization(format!("expected rational string, got {v}")))?;
        let bad = |_| PolyError::Serialization(format!("bad rational {s:?}"));
        match s.split_once('/') {
            None => Ok(BigRational::from_integer(s.parse().map_err(bad)?)),
            Some((n, d)) => {
                let d: BigInt = d.parse().map_err(bad)?;
                if d.is_zero() {
                    return Err(PolyError::Serialization("zero denominator".into()));
                }
                Ok(BigRational::new(n.parse().map_err(bad)?, d))
            }
        }
    }
}

/// Reduced fraction of univariate polynomials: `gcd(num, den) = 1`, `den` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<E> {
    pub num: Vec<E>,
    pub den: Vec<E>,
}

/// Rational functions in one variable over a field.
#[derive(Clone, Debug)]
pub struct RatFuncRing<R: Ring> {
    base: R,
    var: String,
}

impl<R: Ring> RatFuncRing<R> {
    pub fn new(base: R, var: &str) -> Self {
        RatFuncRing { base, var: var.to_string() }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Normalizes `num / den`; `None` if `den` is zero.
    pub fn fraction(&self, num: Vec<R::Elem>, den: Vec<R::Elem>) -> Option<RatFunc<R::Elem>> {
        let b = &self.base;
        let den = dense::trimmed(b, den);
        if den.is_empty() {
            return None;
        }
        let num = dense::trimmed(b, num);
        if num.is_empty() {
            return Some(RatFunc { num, den: vec![b.one()] });
        }
        let g = dense::gcd(b, &num, &den);
        let (mut n, _) = dense::divrem(b, &num, &g);
        let (mut d, _) = dense::divrem(b, &den, &g);
        let lead = b.inv(d.last().unwrap()).expect("base ring is a field");
        n = dense::scale(b, &n, &lead);
        d = dense::scale(b, &d, &lead);
        Some(RatFunc { num: n, den: d })
    }

    pub fn from_poly(&self, num: Vec<R::Elem>) -> RatFunc<R::Elem> {
        self.fraction(num, vec![self.base.one()]).unwrap()
    }

    pub fn from_base(&self, c: R::Elem) -> RatFunc<R::Elem> {
        self.from_poly(vec![c])
    }

    pub fn variable(&self) -> RatFunc<R::Elem> {
        self.from_poly(vec![self.base.zero(), self.base.one()])
    }

    /// Value at a point of the base field; `None` if the denominator vanishes.
    pub fn eval(&self, a: &RatFunc<R::Elem>, x: &R::Elem) -> Option<R::Elem> {
        let d = dense::eval(&self.base, &a.den, x);
        let di = self.base.inv(&d)?;
        Some(self.base.mul(&dense::eval(&self.base, &a.num, x), &di))
    }
}

impl<R: Ring> Ring for RatFuncRing<R> {
    type Elem = RatFunc<R::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc { num: Vec::new(), den: vec![self.base.one()] }
    }
    fn one(&self) -> Self::Elem {
        RatFunc { num: vec![self.base.one()], den: vec![self.base.one()] }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if a.den == b.den {
            return self.fraction(dense::add(r, &a.num, &b.num), a.den.clone()).unwrap();
        }
        let num = dense::add(r, &dense::mul(r, &a.num, &b.den), &dense::mul(r, &b.num, &a.den));
        self.fraction(num, dense::mul(r, &a.den, &b.den)).unwrap()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc { num: dense::neg(&self.base, &a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        let r = &self.base;
        self.fraction(dense::mul(r, &a.num, &b.num), dense::mul(r, &a.den, &b.den)).unwrap()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_base(self.base.from_i64(n))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_empty() {
            return None;
        }
        self.fraction(a.den.clone(), a.num.clone())
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.var == other.var && self.base.same_ring(&other.base)
    }
    fn format(&self, a: &Self::Elem) -> String {
        let n = dense::format(&self.base, &a.num, &self.var);
        if a.den.len() == 1 && self.base.is_one(&a.den[0]) {
            n
        } else {
            format!("({})/({})", n, dense::format(&self.base, &a.den, &self.var))
        }
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "ratfunc", "var": self.var, "base": self.base.descriptor()})
    }
    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        let enc = |v: &[R::Elem]| Value::Array(v.iter().map(|c| self.base.elem_to_json(c)).collect());
        json!({"num": enc(&a.num), "den": enc(&a.den)})
    }
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, PolyError> {
        let num = elem_list(&self.base, &v["num"])?;
        let den = elem_list(&self.base, &v["den"])?;
        self.fraction(num, den).ok_or_else(|| PolyError::Serialization("zero denominator".into()))
    }
}

/// `base[var] / (modulus)` for a monic modulus over a field.
#[derive(Clone, Debug)]
pub struct QuotientRing<R: Ring> {
    base: R,
    modulus: Vec<R::Elem>,
    var: String,
}

impl<R: Ring> QuotientRing<R> {
    /// `modulus` is normalized to be monic; `None` if it is constant.
    pub fn new(base: R, modulus: Vec<R::Elem>, var: &str) -> Option<Self> {
        let m = dense::trimmed(&base, modulus);
        if m.len() < 2 {
            return None;
        }
        let li = base.inv(m.last().unwrap())?;
        let modulus = dense::scale(&base, &m, &li);
        Some(QuotientRing { base, modulus, var: var.to_string() })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn modulus(&self) -> &[R::Elem] {
        &self.modulus
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn reduce(&self, a: Vec<R::Elem>) -> Vec<R::Elem> {
        dense::divrem(&self.base, &a, &self.modulus).1
    }

    pub fn from_base(&self, c: R::Elem) -> Vec<R::Elem> {
        dense::trimmed(&self.base, vec![c])
    }

    pub fn generator(&self) -> Vec<R::Elem> {
        self.reduce(vec![self.base.zero(), self.base.one()])
    }

    /// Inverse, or the nontrivial gcd of the residue with the modulus.
    pub fn try_inv(&self, a: &[R::Elem]) -> Result<Vec<R::Elem>, Vec<R::Elem>> {
        let (g, s, _) = dense::ext_gcd(&self.base, a, &self.modulus);
        if g.len() == 1 {
            let gi = self.base.inv(&g[0]).expect("field");
            Ok(self.reduce(dense::scale(&self.base, &s, &gi)))
        } else {
            Err(g)
        }
    }
}

impl<R: Ring> Ring for QuotientRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.base.one()]
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        dense::add(&self.base, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        dense::neg(&self.base, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(dense::mul(&self.base, a, b))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_base(self.base.from_i64(n))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_empty() {
            return None;
        }
        self.try_inv(a).ok()
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn same_ring(&self, other: &Self) -> bool {
        self.var == other.var && self.base.same_ring(&other.base) && self.modulus == other.modulus
    }
    fn format(&self, a: &Self::Elem) -> String {
        dense::format(&self.base, a, &self.var)
    }
    fn descriptor(&self) -> Value {
        let m: Vec<Value> = self.modulus.iter().map(|c| self.base.elem_to_json(c)).collect();
        json!({"kind": "quotient", "var": self.var, "base": self.base.descriptor(), "modulus": m})
    }
    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(a.iter().map(|c| self.base.elem_to_json(c)).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, PolyError> {
        Ok(self.reduce(elem_list(&self.base, v)?))
    }
}

/// Parses a decimal integer (possibly negative) into any ring.
pub fn ring_int<R: Ring>(ring: &R, n: &BigInt) -> R::Elem {
    let base = BigInt::from(1u64 << 32);
    let neg = n.is_negative();
    let mut digits = Vec::new();
    let mut m = n.abs();
    while !m.is_zero() {
        let d: BigInt = &m % &base;
        digits.push(u64::try_from(d).unwrap());
        m /= &base;
    }
    let shift = ring.from_i64(1i64 << 32);
    let mut acc = ring.zero();
    for &d in digits.iter().rev() {
        acc = ring.add(&ring.mul(&acc, &shift), &ring.from_i64(d as i64));
    }
    if neg {
        ring.neg(&acc)
    } else {
        acc
    }
}
