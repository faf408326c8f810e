use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::gf::{make_field, Gf};

fn f2() -> GfRing {
    GfRing::new(make_field(2, 1, None).unwrap())
}

fn gf(p: u64, k: u32) -> GfRing {
    GfRing::new(make_field(p, k, None).unwrap())
}

const PHI_T: &str = "X^3+Y^3+T(T+1)^3(X^2+Y^2)+T^2(T+1)^6(X+Y)+T^3(T+1)^9+X^2Y^2+(T+1)^3(T^2+T+1)X Y+T(X^2Y+X Y^2)";

#[test]
fn expansion_matches_pointwise_oracle() {
    let r = f2();
    let p = parse(&r, &["X", "Y", "T"], "(X+T^2)^3 Y + (Y+T)^3 X^2").unwrap();
    // eight products, but X²T²Y occurs twice and cancels in characteristic 2
    assert_eq!(p.num_terms(), 6);
    // every exponent is < 16, so agreement on all of F16^3 forces equality
    let f16 = make_field(2, 4, None).unwrap();
    let r16 = GfRing::new(f16.clone());
    let p16 = p.map_coeffs(&r16, |c| if c.is_zero() { Gf::ZERO } else { Gf::ONE });
    for x in f16.elements() {
        for y in f16.elements() {
            for t in f16.elements() {
                let a = f16.add(x, f16.pow(t, 2));
                let b = f16.add(y, t);
                let direct = f16.add(
                    f16.mul(f16.pow(a, 3), y),
                    f16.mul(f16.pow(b, 3), f16.pow(x, 2)),
                );
                assert_eq!(p16.eval_all(&[x, y, t]), direct);
            }
        }
    }
}

#[test]
fn char_two_square_and_zero() {
    let r = f2();
    let s = parse(&r, &["X", "Y"], "X+Y").unwrap().pow(2);
    assert_eq!(s, parse(&r, &["X", "Y"], "X^2+Y^2").unwrap());
    let z = SparsePoly::zero(&r, &["X"]);
    assert!((&s * &z).is_zero());
}

#[test]
fn exact_division_of_cross_difference() {
    let r = f2();
    let vars = ["X", "Y", "T"];
    let a = parse(&r, &vars, "(X+T^2)^3 Y + (Y+T)^3 X^2").unwrap();
    let b = parse(&r, &vars, "X Y + T^3").unwrap();
    let q = exact_divide(&a, &b, "Y").unwrap();
    assert_eq!(q, parse(&r, &vars, "X^2+X Y^2+X Y T+Y T^3").unwrap());
    let one = SparsePoly::one(&r, &vars);
    assert_eq!(exact_divide(&a, &one, "X").unwrap(), a);
    let c = parse(&r, &["X", "Y"], "X Y + 1").unwrap();
    let x = parse(&r, &["X", "Y"], "X").unwrap();
    assert_eq!(exact_divide(&c, &x, "X").unwrap_err(), PolyError::InexactDivision);
}

#[test]
fn remainder_theorem_for_phi_t() {
    let r = f2();
    let vars = ["X", "Y", "T", "t"];
    let phi = parse(&r, &vars, PHI_T).unwrap();
    // Φ_T(Y, t)
    let shifted = phi.rename(&[("X", "Y"), ("Y", "t")]);
    let lin = parse(&r, &vars, "t - X").unwrap();
    let (q, rem) = divide_with_remainder(&shifted, &lin, "t").unwrap();
    let expected = phi.rename(&[("X", "Y"), ("Y", "X")]);
    assert_eq!(rem, expected);
    assert_eq!(q.degree_in("t").unwrap(), Some(2));
    assert_eq!(&(&q * &lin) + &rem, shifted);

    let x2 = parse(&r, &["X"], "X^2").unwrap();
    let x = parse(&r, &["X"], "X").unwrap();
    let (q, rem) = divide_with_remainder(&x2, &x, "X").unwrap();
    assert_eq!((q, rem.is_zero()), (x.clone(), true));
    let two_x = parse(&gf(7, 1), &["X"], "2X").unwrap();
    let x7 = parse(&gf(7, 1), &["X"], "X^2").unwrap();
    assert_eq!(divide_with_remainder(&x7, &two_x, "X").unwrap_err(), PolyError::NotMonic("X".into()));
}

#[test]
fn parameterization_of_phi_t_clears_to_zero() {
    let r = f2();
    let vars = ["X", "Y", "T", "u"];
    let phi = parse(&r, &vars, PHI_T).unwrap();
    let bind = |var, num: &str, den: &str| Binding {
        var,
        num: parse(&r, &vars, num).unwrap(),
        den: parse(&r, &vars, den).unwrap(),
    };
    let c = substitute(&phi, &[bind("X", "(u+T)^3", "u"), bind("Y", "(u+T^2)^3", "u^2")]).unwrap();
    assert!(c.numerator.is_zero());
    assert_eq!(c.denominator, parse(&r, &vars, "u^9").unwrap());
    let bad = substitute(&phi, &[bind("X", "(u+T)^3", "u"), bind("Y", "(u+T^2)^3 + u^2", "u^2")]).unwrap();
    assert!(!bad.numerator.is_zero());
    let same = substitute(&phi, &[]).unwrap();
    assert_eq!(same.numerator, phi);
}

#[test]
fn reduction_mod_t_by_substitution() {
    let r = f2();
    let vars = ["X", "Y", "T"];
    let f = parse(
        &r,
        &vars,
        "Y^4X^3 + (T^2+T+1)(Y^3X^2 + Y^2X^3 + (T^2+T+1)Y^2X + Y X^3 + (T^2+T+1)Y X^2 + (T^2+T+1)^2 Y) + X^4",
    )
    .unwrap();
    let reduced = f.eval_var("T", &Gf::ZERO).unwrap();
    let shown = parse(&r, &vars, "Y^4X^3+Y^3X^2+Y^2X^3+Y^2X+Y X^3+Y X^2+Y+X^4").unwrap();
    assert_eq!(reduced, shown);
}

#[test]
fn sequential_substitution_equals_simultaneous() {
    let r = gf(7, 1);
    let vars = ["X", "Y", "Z"];
    let a = parse(&r, &vars, "X^2 Y + 3 X Y^3 + Z").unwrap();
    let g = parse(&r, &vars, "Z^2 + 1").unwrap();
    let h = parse(&r, &vars, "X + Z").unwrap();
    let seq = a.compose("X", &g).unwrap().compose("Y", &h).unwrap();
    let f = r.field().clone();
    for x in f.elements() {
        for y in f.elements() {
            for z in f.elements() {
                let pt = [x, y, z];
                let sim = a.eval_all(&[g.eval_all(&pt), h.eval_all(&pt), z]);
                assert_eq!(seq.eval_all(&pt), sim);
            }
        }
    }
}

#[test]
fn evaluation_with_vanishing_denominator() {
    let r = gf(7, 1);
    let a = parse(&r, &["X"], "X^2 + 1").unwrap();
    let err = eval_rational(&a, &[("X", r.from_i64(1), r.from_i64(0))]).unwrap_err();
    assert_eq!(err, PolyError::DenominatorVanishes);
    let v = eval_rational(&a, &[("X", r.from_i64(1), r.from_i64(2))]).unwrap();
    // (1/2)^2 + 1 = 4^2 + 1 = 17 = 3 mod 7
    assert_eq!(v.constant_term(), r.from_i64(3));
}

#[test]
fn roots_small_fields() {
    let r = f2();
    let a = parse(&r, &["x"], "x^2+x").unwrap();
    assert_eq!(roots_in_field(&a).unwrap(), vec![(Gf::ZERO, 1), (Gf::ONE, 1)]);
    let b = parse(&r, &["x"], "x^2+x+1").unwrap();
    assert!(roots_in_field(&b).unwrap().is_empty());
    let z = SparsePoly::zero(&r, &["x"]);
    assert_eq!(roots_in_field(&z).unwrap_err(), PolyError::ZeroPolynomial);
    let r7 = gf(7, 1);
    let c = parse(&r7, &["x"], "(x-3)^3 (x+1) (x^2+1)").unwrap();
    assert_eq!(roots_in_field(&c).unwrap(), {
        let mut v = vec![(r7.from_i64(3), 3), (r7.from_i64(6), 1)];
        v.sort_by_key(|(x, _)| x.index());
        v
    });
}

#[test]
fn root_multiplicities_bounded_and_squarefree_simple() {
    let r = gf(2, 4);
    let f = r.field().clone();
    let vars = ["x"];
    for (i, text) in ["x^5 + x + 1", "(x+1)^4 x^2 + x^3", "x^15 - 1", "x^16 - x"].iter().enumerate() {
        let a = parse(&r, &vars, text).unwrap();
        let roots = roots_in_field(&a).unwrap();
        let total: u32 = roots.iter().map(|(_, m)| m).sum();
        assert!(total <= a.degree_in("x").unwrap().unwrap(), "case {i}");
        for (x, _) in &roots {
            assert!(a.eval_all(&[*x]).is_zero());
        }
        let brute = f.elements().filter(|x| a.eval_all(&[*x]).is_zero()).count();
        assert_eq!(brute, roots.len());
        let g = gcd_univariate(&a, &a.derivative("x").unwrap()).unwrap();
        if g.is_constant() {
            assert!(roots.iter().all(|(_, m)| *m == 1));
        }
    }
}

#[test]
fn univariate_gcd() {
    let r = gf(7, 1);
    let a = parse(&r, &["x"], "x^2 - 1").unwrap();
    let b = parse(&r, &["x"], "x - 1").unwrap();
    assert_eq!(gcd_univariate(&a, &b).unwrap(), b);
    let z = SparsePoly::zero(&r, &["x"]);
    let c = parse(&r, &["x"], "3x + 3").unwrap();
    assert_eq!(gcd_univariate(&c, &z).unwrap(), parse(&r, &["x"], "x+1").unwrap());
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// ℚ(v)[w]/(w⁵ − R(v)) with R(v) = v(v⁴−3v³+4v²−2v+1)/(v⁴+2v³+4v²+3v+1).
fn rr_quotient(extra: bool) -> (RatFuncRing<Rationals>, QuotientRing<RatFuncRing<Rationals>>, RatFunc<BigRational>) {
    let k = RatFuncRing::new(Rationals, "v");
    let mut num = vec![q(0), q(1), q(-2), q(4), q(-3), q(1)];
    if extra {
        num = dense::add(&Rationals, &num, &[q(0), q(1), q(2), q(4), q(3), q(1)]);
    }
    let r = k.fraction(num, vec![q(1), q(3), q(4), q(2), q(1)]).unwrap();
    let mut modulus = vec![k.neg(&r)];
    modulus.extend(std::iter::repeat(k.zero()).take(4));
    modulus.push(k.one());
    let qr = QuotientRing::new(k.clone(), modulus, "w").unwrap();
    (k, qr, r)
}

#[test]
fn quotient_ring_defining_relation_and_inverse() {
    let (k, qr, r) = rr_quotient(false);
    let w = qr.generator();
    let w4 = qr.pow(&w, 4);
    assert_eq!(q_mul(&qr, &w, &w4), qr.from_base(r.clone()));
    assert_eq!(q_inv(&qr, &qr.one()).unwrap(), qr.one());
    let wi = q_inv(&qr, &w).unwrap();
    assert_eq!(qr.mul(&w, &wi), qr.one());
    // P(1/w − w) = w^{-5} − w^5 − 11 = 1/R − R − 11
    let y = qr.sub(&wi, &w);
    let p_of = |t: &Vec<RatFunc<BigRational>>| {
        let c = |n| qr.from_base(k.from_i64(n));
        let t3 = qr.pow(t, 3);
        let t5 = qr.pow(t, 5);
        let s = q_add(&qr, &t5, &qr.mul(&c(5), &t3));
        let s = q_add(&qr, &s, &qr.mul(&c(5), t));
        qr.sub(&s, &c(11))
    };
    let expected = k.sub(&k.sub(&k.inv(&r).unwrap(), &r), &k.from_i64(11));
    assert_eq!(p_of(&y), qr.from_base(expected));
}

#[test]
fn non_invertible_residue_reports_gcd() {
    let r = gf(7, 1);
    let qr = QuotientRing::new(r.clone(), vec![r.from_i64(-1), r.zero(), r.one()], "x").unwrap();
    let e = q_inv(&qr, &[r.from_i64(1), r.from_i64(1)]).unwrap_err();
    assert_eq!(e, PolyError::NotInvertible("x + 1".into()));
}

#[test]
fn serialization_is_canonical() {
    let r = gf(2, 2);
    let mut consts = HashMap::new();
    consts.insert("w".to_string(), r.field().beta_pow(1));
    let a = parse_poly(&r, &["X", "Y"], &consts, "w X^2 Y + Y^3 + w^2 + X").unwrap();
    let b = parse_poly(&r, &["X", "Y"], &consts, "X + w^2 + Y^3 + X^2 Y w").unwrap();
    let sa = serial::to_string(&a);
    assert_eq!(sa, serial::to_string(&b));
    let back = serial::from_str(&r, &sa).unwrap();
    assert_eq!(back, a);
    assert_eq!(serial::to_string(&back), sa);
    let c = &a + &SparsePoly::one(&r, &["X", "Y"]);
    assert_ne!(serial::to_string(&c), sa);
    assert!(matches!(serial::from_str(&f2(), &sa), Err(PolyError::DomainMismatch(..))));
    let rat = parse(&Rationals, &["v"], "v^5 - 11 v^3 + 7").unwrap();
    assert_eq!(serial::from_str(&Rationals, &serial::to_string(&rat)).unwrap(), rat);
}

#[test]
fn parse_errors() {
    let r = f2();
    assert!(matches!(parse(&r, &["X"], "X + Z"), Err(PolyError::UnknownVariable(_))));
    assert!(matches!(parse(&r, &["X"], "(X + 1"), Err(PolyError::Parse(_))));
    assert!(matches!(parse(&r, &["X"], "X $ 1"), Err(PolyError::Parse(_))));
    assert!(matches!(parse(&r, &["X"], ""), Err(PolyError::Parse(_))));
}

#[test]
fn ratfunc_reduced_form() {
    let k = RatFuncRing::new(Rationals, "v");
    // (v^2 - 1)/(2v - 2) = (v + 1)/2
    let a = k.fraction(vec![q(-1), q(0), q(1)], vec![q(-2), q(2)]).unwrap();
    assert_eq!(a.den, vec![q(1)]);
    assert_eq!(a.num, vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 2.into())]);
    assert!(k.fraction(vec![q(1)], vec![]).is_none());
}

#[test]
fn domain_mismatch_is_an_error() {
    let a = parse(&gf(2, 2), &["X"], "X").unwrap();
    let b = parse(&gf(2, 4), &["X"], "X").unwrap();
    assert!(matches!(a.checked_add(&b), Err(PolyError::DomainMismatch(..))));
}
