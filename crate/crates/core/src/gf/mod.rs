//! Small finite fields GF(p^k) with reproducible generators.
//!
//! A [`FieldSpec`] fixes a defining polynomial (the shipped Conway polynomial
//! unless one is supplied) and a primitive element `β`. Elements are stored
//! internally in logarithmic form so that multiplication is an index addition
//! and addition goes through a Zech-logarithm table; both tables are built
//! once at construction.

mod conway;
mod element;
mod prime_poly;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use conway::{conway_entries, conway_polynomial};
pub use element::FieldElement;

/// Largest field order accepted by [`make_field`].
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("defining polynomial must be monic of degree {k} with entries below {p}")]
    BadDefiningPoly { p: u64, k: u32 },
    #[error("defining polynomial is not irreducible over GF({p})")]
    NotIrreducible { p: u64 },
    #[error("no Conway polynomial shipped for GF({p}^{k})")]
    TableMiss { p: u64, k: u32 },
    #[error("GF({p}^{k}) exceeds the supported size 2^20")]
    SizeExceeded { p: u64, k: u32 },
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{q} is not a power of the characteristic {p}")]
    BadPower { q: u64, p: u64 },
    #[error("GF({p}^{m}) is not a subfield of GF({p2}^{k})")]
    NotASubfield { p: u64, m: u32, p2: u64, k: u32 },
    #[error("no primitive element found")]
    NotPrimitive,
}

/// Internal element handle: `0` is zero, `e + 1` is `β^e`.
///
/// Only meaningful together with the [`FieldSpec`] that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf(pub(crate) u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Raw encoding, stable for a given field.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }
}

pub struct FieldSpec {
    p: u32,
    k: u32,
    poly: Vec<u32>,
    label: String,
    order: u32,
    // log -> packed base-p digits
    exp: Vec<u32>,
    // packed -> log
    log: Vec<u32>,
    // n -> encoded 1 + β^n
    zech: Vec<Gf>,
    variable_is_primitive: bool,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("poly", &self.poly)
            .field("label", &self.label)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.poly == other.poly
    }
}

impl Eq for FieldSpec {}

/// Builds and validates GF(p^k).
///
/// With `defining_poly == None` the Conway polynomial from the shipped table
/// is used.
pub fn make_field(p: u64, k: u32, defining_poly: Option<&[u64]>) -> Result<Arc<FieldSpec>, FieldError> {
    if !prime_poly::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if order > MAX_ORDER as u128 {
        return Err(FieldError::SizeExceeded { p, k });
    }
    let poly: Vec<u64> = match defining_poly {
        Some(c) => c.to_vec(),
        None => conway_polynomial(p, k).ok_or(FieldError::TableMiss { p, k })?,
    };
    if poly.len() != k as usize + 1 || poly[k as usize] != 1 || poly.iter().any(|&c| c >= p) {
        return Err(FieldError::BadDefiningPoly { p, k });
    }
    if !prime_poly::is_irreducible(&poly, p) {
        return Err(FieldError::NotIrreducible { p });
    }
    let label = if k == 1 { format!("GF({p})") } else { format!("GF({p}^{k})") };
    FieldSpec::build(p as u32, k, poly.iter().map(|&c| c as u32).collect(), label).map(Arc::new)
}

impl FieldSpec {
    fn build(p: u32, k: u32, poly: Vec<u32>, label: String) -> Result<FieldSpec, FieldError> {
        let order = p.pow(k);
        let mut spec = FieldSpec {
            p,
            k,
            poly,
            label,
            order,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
            variable_is_primitive: false,
        };
        let var = spec.variable_packed();
        let generator = if spec.packed_is_primitive(var) {
            spec.variable_is_primitive = true;
            var
        } else {
            (1..order)
                .find(|&c| spec.packed_is_primitive(c))
                .ok_or(FieldError::NotPrimitive)?
        };
        let n = (order - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u32; order as usize];
        let mut x = 1u32;
        for e in 0..n {
            exp.push(x);
            log[x as usize] = e as u32;
            x = spec.mul_packed(x, generator);
        }
        debug_assert_eq!(x, 1);
        spec.exp = exp;
        spec.log = log;
        let mut zech = Vec::with_capacity(n);
        for e in 0..n {
            let s = spec.add_packed(1, spec.exp[e]);
            zech.push(spec.encode_packed(s));
        }
        spec.zech = zech;
        Ok(spec)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    pub fn defining_poly(&self) -> &[u32] {
        &self.poly
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether the class of the polynomial variable is the chosen generator.
    pub fn variable_is_primitive(&self) -> bool {
        self.variable_is_primitive
    }

    fn variable_packed(&self) -> u32 {
        if self.k == 1 {
            (self.p - self.poly[0]) % self.p
        } else {
            self.p
        }
    }

    pub(crate) fn unpack(&self, mut v: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub(crate) fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d % self.p)
    }

    fn add_packed(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    // Polynomial-basis product; used to build the tables and as a test oracle.
    pub(crate) fn mul_packed(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let da = self.unpack(a);
        let db = self.unpack(b);
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.poly[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&d| d as u32).collect();
        self.pack(&digits)
    }

    fn pow_packed(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_packed(acc, base);
            }
            base = self.mul_packed(base, base);
            e >>= 1;
        }
        acc
    }

    fn packed_is_primitive(&self, g: u32) -> bool {
        if g == 0 {
            return false;
        }
        let n = (self.order - 1) as u64;
        if n == 1 {
            return g == 1;
        }
        prime_poly::prime_factors(n)
            .into_iter()
            .all(|r| self.pow_packed(g, n / r) != 1)
    }

    // ---- encoded arithmetic ----

    #[inline]
    fn group_order(&self) -> u32 {
        self.order - 1
    }

    #[inline]
    pub fn encode_packed(&self, packed: u32) -> Gf {
        if packed == 0 {
            Gf::ZERO
        } else {
            Gf(self.log[packed as usize] + 1)
        }
    }

    #[inline]
    pub fn to_packed(&self, a: Gf) -> u32 {
        if a.is_zero() {
            0
        } else {
            self.exp[(a.0 - 1) as usize]
        }
    }

    /// Polynomial-basis coefficients of `a`, low to high.
    pub fn coeffs(&self, a: Gf) -> Vec<u32> {
        self.unpack(self.to_packed(a))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Gf {
        let mut digits = vec![0u32; self.k as usize];
        // reduce longer inputs through the defining relation
        let mut acc = 0u32;
        if coeffs.len() <= self.k as usize {
            for (d, &c) in digits.iter_mut().zip(coeffs) {
                *d = c % self.p;
            }
            return self.encode_packed(self.pack(&digits));
        }
        let x = self.variable_packed();
        let mut xp = 1u32;
        for &c in coeffs {
            let term = self.mul_packed(xp, c % self.p);
            acc = self.add_packed(acc, term);
            xp = self.mul_packed(xp, x);
        }
        self.encode_packed(acc)
    }

    #[inline]
    pub fn from_int(&self, n: i64) -> Gf {
        let r = n.rem_euclid(self.p as i64) as u32;
        self.encode_packed(r)
    }

    #[inline]
    pub fn beta_pow(&self, e: i64) -> Gf {
        let n = self.group_order() as i64;
        Gf(e.rem_euclid(n) as u32 + 1)
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let n = self.group_order();
        let s = (a.0 - 1) + (b.0 - 1);
        Gf(if s >= n { s - n } else { s } + 1)
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.group_order();
        let d = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + n - a.0 };
        let z = self.zech[d as usize];
        self.mul(a, z)
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        let n = self.group_order();
        let s = (a.0 - 1) + n / 2;
        Gf(if s >= n { s - n } else { s } + 1)
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: Gf) -> Option<Gf> {
        if a.0 == 0 {
            return None;
        }
        let n = self.group_order();
        Some(Gf((n - (a.0 - 1)) % n + 1))
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf::ONE;
        }
        if a.0 == 0 {
            return Gf::ZERO;
        }
        let n = self.group_order() as u128;
        Gf((((a.0 - 1) as u128 * e as u128) % n) as u32 + 1)
    }

    /// Exponent `e` with `β^e = a`.
    pub fn log_of(&self, a: Gf) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(a.0 - 1)
        }
    }

    /// Enumeration order: 0, β^0, β^1, ...
    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.order).map(Gf)
    }

    /// Whether `q` is a positive power of the characteristic (including 1).
    pub fn is_char_power(&self, q: u64) -> bool {
        let p = self.p as u64;
        let mut v = q;
        if v == 0 {
            return false;
        }
        while v % p == 0 {
            v /= p;
        }
        v == 1
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p as u64,
            k: self.k,
            poly: self.poly.iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn format(&self, a: Gf) -> String {
        match a.0 {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ if self.k == 1 => self.to_packed(a).to_string(),
            e => format!("b^{}", e - 1),
        }
    }
}

/// Serialized form of a field: `{"p": int, "k": int, "poly": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub k: u32,
    pub poly: Vec<u64>,
}

impl FieldDescriptor {
    pub fn resolve(&self) -> Result<Arc<FieldSpec>, FieldError> {
        make_field(self.p, self.k, Some(&self.poly))
    }
}

/// The generator `β` of `field`.
pub fn primitive_element(field: &Arc<FieldSpec>) -> FieldElement {
    FieldElement::from_raw(field.clone(), Gf(2))
}

/// Exponent `e` in `[0, q-1)` with `β^e = x`.
pub fn discrete_log(x: &FieldElement) -> Result<u32, FieldError> {
    x.field().log_of(x.raw()).ok_or(FieldError::DivisionByZero)
}

/// All elements in the deterministic order `0, β^0, β^1, …`.
pub fn enumerate(field: &Arc<FieldSpec>) -> Result<Vec<FieldElement>, FieldError> {
    if field.order() > MAX_ORDER {
        return Err(FieldError::SizeExceeded { p: field.characteristic(), k: field.degree() });
    }
    Ok(field.elements().map(|g| FieldElement::from_raw(field.clone(), g)).collect())
}

/// Image of the source generator in `target`: the root of the source defining
/// polynomial with the smallest discrete log.
pub fn embedding_image(source: &FieldSpec, target: &FieldSpec) -> Result<Gf, FieldError> {
    let err = FieldError::NotASubfield {
        p: source.characteristic(),
        m: source.degree(),
        p2: target.characteristic(),
        k: target.degree(),
    };
    if source.p != target.p || target.k % source.k != 0 {
        return Err(err);
    }
    let poly: Vec<Gf> = source.poly.iter().map(|&c| target.from_int(c as i64)).collect();
    let var = source.from_coeffs(&[0, 1]);
    // the variable class of a degree-1 field is a prime-field constant
    if source.k == 1 {
        let c = source.to_packed(var);
        return Ok(target.from_int(c as i64));
    }
    target
        .elements()
        .skip(1)
        .find(|&r| {
            let mut acc = Gf::ZERO;
            for &c in poly.iter().rev() {
                acc = target.add(target.mul(acc, r), c);
            }
            acc.is_zero()
        })
        .ok_or(err)
}

/// Maps raw elements of `source` into `target` along [`embedding_image`].
#[derive(Debug, Clone)]
pub struct Embedding {
    source: Arc<FieldSpec>,
    target: Arc<FieldSpec>,
    image: Vec<Gf>,
}

impl Embedding {
    pub fn new(source: Arc<FieldSpec>, target: Arc<FieldSpec>) -> Result<Self, FieldError> {
        let root = embedding_image(&source, &target)?;
        let mut powers = Vec::with_capacity(source.k as usize);
        let mut x = Gf::ONE;
        for _ in 0..source.k {
            powers.push(x);
            x = target.mul(x, root);
        }
        let image = source
            .elements()
            .map(|g| {
                let digits = source.coeffs(g);
                digits.iter().zip(&powers).fold(Gf::ZERO, |acc, (&d, &pw)| {
                    target.add(acc, target.mul(target.from_int(d as i64), pw))
                })
            })
            .collect();
        Ok(Embedding { source, target, image })
    }

    pub fn source(&self) -> &Arc<FieldSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FieldSpec> {
        &self.target
    }

    #[inline]
    pub fn map(&self, a: Gf) -> Gf {
        self.image[a.0 as usize]
    }
}

/// Embeds `x` into `target`; requires the source degree to divide the target degree.
pub fn embed(x: &FieldElement, target: &Arc<FieldSpec>) -> Result<FieldElement, FieldError> {
    let e = Embedding::new(x.field().clone(), target.clone())?;
    Ok(FieldElement::from_raw(target.clone(), e.map(x.raw())))
}

#[cfg(test)]
mod tests;
