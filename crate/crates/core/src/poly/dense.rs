//! Dense univariate polynomials as coefficient vectors, low degree first.
//!
//! All results are trimmed (no trailing zeros); the zero polynomial is `[]`.

use super::ring::Ring;

pub fn trimmed<R: Ring>(r: &R, mut a: Vec<R::Elem>) -> Vec<R::Elem> {
    while a.last().map_or(false, |c| r.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, `None` for zero.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => r.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trimmed(r, out)
}

pub fn neg<R: Ring>(r: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|c| r.neg(c)).collect()
}

pub fn sub<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    add(r, a, &neg(r, b))
}

pub fn scale<R: Ring>(r: &R, a: &[R::Elem], c: &R::Elem) -> Vec<R::Elem> {
    trimmed(r, a.iter().map(|x| r.mul(x, c)).collect())
}

pub fn mul<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = r.add(&out[i + j], &r.mul(x, y));
        }
    }
    trimmed(r, out)
}

pub fn pow<R: Ring>(r: &R, a: &[R::Elem], mut e: u64) -> Vec<R::Elem> {
    let mut acc = vec![r.one()];
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(r, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(r, &base, &base);
        }
    }
    trimmed(r, acc)
}

/// Division with remainder; the divisor's leading coefficient must be a unit.
pub fn divrem<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> (Vec<R::Elem>, Vec<R::Elem>) {
    let b = trimmed(r, b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let lead_inv = r.inv(b.last().unwrap()).expect("leading coefficient must be a unit");
    let mut rem = trimmed(r, a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let mut quo = vec![r.zero(); rem.len() - db];
    while rem.len() > db {
        let top = rem.len() - 1;
        let c = r.mul(&rem[top], &lead_inv);
        let shift = top - db;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] = r.sub(&rem[shift + i], &r.mul(&c, bc));
        }
        quo[shift] = c;
        rem.pop();
        rem = trimmed(r, rem);
    }
    (trimmed(r, quo), rem)
}

pub fn monic<R: Ring>(r: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(r, a, &r.inv(l).expect("field coefficients")),
    }
}

/// Monic gcd over a field; `gcd(0, 0) = 0`.
pub fn gcd<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut x = trimmed(r, a.to_vec());
    let mut y = trimmed(r, b.to_vec());
    while !y.is_empty() {
        let (_, rem) = divrem(r, &x, &y);
        x = y;
        y = rem;
    }
    monic(r, &x)
}

/// `(g, s, t)` with `g = s·a + t·b` monic.
pub fn ext_gcd<R: Ring>(
    r: &R,
    a: &[R::Elem],
    b: &[R::Elem],
) -> (Vec<R::Elem>, Vec<R::Elem>, Vec<R::Elem>) {
    let (mut r0, mut r1) = (trimmed(r, a.to_vec()), trimmed(r, b.to_vec()));
    let (mut s0, mut s1) = (vec![r.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![r.one()]);
    while !r1.is_empty() {
        let (q, rem) = divrem(r, &r0, &r1);
        let s2 = sub(r, &s0, &mul(r, &q, &s1));
        let t2 = sub(r, &t0, &mul(r, &q, &t1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(l) => {
            let li = r.inv(l).expect("field coefficients");
            (scale(r, &r0, &li), scale(r, &s0, &li), scale(r, &t0, &li))
        }
    }
}

pub fn eval<R: Ring>(r: &R, a: &[R::Elem], x: &R::Elem) -> R::Elem {
    let mut acc = r.zero();
    for c in a.iter().rev() {
        acc = r.add(&r.mul(&acc, x), c);
    }
    acc
}

pub fn derivative<R: Ring>(r: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    trimmed(
        r,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| r.mul(&r.from_i64(i as i64), c))
            .collect(),
    )
}

/// `a(b(x))`.
pub fn compose<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut acc: Vec<R::Elem> = Vec::new();
    for c in a.iter().rev() {
        acc = add(r, &mul(r, &acc, b), &[c.clone()]);
    }
    acc
}

/// `x^e mod m`.
pub fn powmod_x<R: Ring>(r: &R, e: u64, m: &[R::Elem]) -> Vec<R::Elem> {
    let x = divrem(r, &[r.zero(), r.one()], m).1;
    powmod(r, &x, e, m)
}

pub fn powmod<R: Ring>(r: &R, a: &[R::Elem], mut e: u64, m: &[R::Elem]) -> Vec<R::Elem> {
    let mut acc = divrem(r, &[r.one()], m).1;
    let mut base = divrem(r, a, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(r, &mul(r, &acc, &base), m).1;
        }
        e >>= 1;
        if e > 0 {
            base = divrem(r, &mul(r, &base, &base), m).1;
        }
    }
    acc
}

pub fn format<R: Ring>(r: &R, a: &[R::Elem], var: &str) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in a.iter().enumerate().rev() {
        if r.is_zero(c) {
            continue;
        }
        let cs = r.format(c);
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(if mono.is_empty() {
            cs
        } else if r.is_one(c) {
            mono
        } else if cs.contains(['+', '-', ' ']) {
            format!("({cs})*{mono}")
        } else {
            format!("{cs}*{mono}")
        });
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::poly::ring::GfRing;

    fn f7() -> GfRing {
        GfRing::new(make_field(7, 1, None).unwrap())
    }

    fn ints(r: &GfRing, v: &[i64]) -> Vec<crate::gf::Gf> {
        trimmed(r, v.iter().map(|&x| r.from_i64(x)).collect())
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let r = f7();
        let a = ints(&r, &[-1, 0, 1]);
        let b = ints(&r, &[-1, 1]);
        assert_eq!(gcd(&r, &a, &b), b);
        assert_eq!(gcd(&r, &ints(&r, &[3, 3]), &[]), ints(&r, &[1, 1]));
    }

    #[test]
    fn divrem_reconstructs() {
        let r = f7();
        let a = ints(&r, &[5, 0, 3, 1, 6, 2]);
        let b = ints(&r, &[1, 4, 3]);
        let (q, rem) = divrem(&r, &a, &b);
        assert!(rem.len() < b.len());
        assert_eq!(add(&r, &mul(&r, &q, &b), &rem), a);
    }

    #[test]
    fn ext_gcd_bezout() {
        let r = f7();
        let a = ints(&r, &[2, 0, 1, 1]);
        let b = ints(&r, &[3, 1, 5]);
        let (g, s, t) = ext_gcd(&r, &a, &b);
        assert_eq!(add(&r, &mul(&r, &s, &a), &mul(&r, &t, &b)), g);
        assert_eq!(g, gcd(&r, &a, &b));
    }
}
