use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};

use super::*;
use crate::gf::{make_field, Gf};
use crate::poly::{parse, GfRing, SparsePoly};

fn ring(p: u64, k: u32) -> GfRing {
    GfRing::new(make_field(p, k, None).unwrap())
}

fn random_skew(r: &GfRing, q: u64, rng: &mut StdRng, deg: usize) -> SkewPoly<GfRing> {
    let f = r.field().clone();
    let vars = ["x", "y"];
    let coeffs = (0..=deg)
        .map(|_| {
            let terms = (0..3).map(|_| {
                (vec![rng.gen_range(0..3), rng.gen_range(0..3)], f.from_coeffs(&[rng.gen_range(0..2), rng.gen_range(0..2)]))
            });
            let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
            SparsePoly::from_terms(r, &names, terms.filter(|(_, c)| !c.is_zero()))
        })
        .collect();
    SkewPoly::new(q, coeffs).unwrap()
}

#[test]
fn skew_product_is_associative_and_degree_additive() {
    let r = ring(2, 2);
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let a = random_skew(&r, 2, &mut rng, 2);
        let b = random_skew(&r, 2, &mut rng, 2);
        let c = random_skew(&r, 2, &mut rng, 1);
        let left = skew_mul(&skew_mul(&a, &b).unwrap(), &c).unwrap();
        let right = skew_mul(&a, &skew_mul(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            // the coefficient ring is a domain
            assert_eq!(skew_mul(&a, &b).unwrap().degree(), Some(da + db));
        }
    }
}

#[test]
fn tau_moves_past_constants_by_frobenius() {
    let r = ring(2, 2);
    let f = r.field().clone();
    let w = f.beta_pow(1);
    let vars = ["x"];
    let c = |e: Gf| SparsePoly::constant(&r, &vars, e);
    let tau = SkewPoly::new(2, vec![c(Gf::ZERO), c(Gf::ONE)]).unwrap();
    let cw = SkewPoly::new(2, vec![c(w)]).unwrap();
    let lhs = skew_mul(&tau, &cw).unwrap();
    assert_eq!(lhs.coeff(1).unwrap(), &c(f.pow(w, 2)));
    assert!(SkewPoly::new(3, vec![c(w)]).is_err());
    let other = SkewPoly::new(4, vec![c(w)]).unwrap();
    assert!(matches!(skew_mul(&cw, &other), Err(SkewError::TwistMismatch(2, 4))));
}

#[test]
fn constraint_lists_have_expected_shape() {
    let c = commutation_constraints(2).unwrap();
    assert_eq!(c.curve.len(), 11);
    assert_eq!(c.commute.len(), 8);
    let r = ring(2, 1);
    let v = ["g1", "h1"];
    assert_eq!(c.curve[0], parse(&r, &v, "h1^64+h1+g1^256+g1^16+g1").unwrap());
    assert_eq!(c.commute[0], parse(&r, &v, "h1^16+h1+g1^64+g1").unwrap());
    // lowest curve constraint is linear in h5
    assert_eq!(c.curve[10], parse(&r, &["g3", "h5"], "h5+g3").unwrap());
}

#[test]
fn p3_identities_hold() {
    for check in simplify_p3_identity().unwrap() {
        assert!(check.holds, "{}: {} vs {}", check.name, check.lhs, check.rhs);
    }
}

#[test]
fn isogeny_with_zero_kernel_parameter_is_frobenius_twist() {
    // a := 0 gives τφ = ψτ, so ψ's coefficients are q-th powers of φ's
    let pairs = isogeny_system_t(2).unwrap();
    assert_eq!(pairs.len(), 4);
    let r = ring(2, 1);
    let zero = r.field().from_int(0);
    let v = ["g1", "g2", "g3", "l1", "l2", "l3"];
    for (i, (l, rr)) in pairs.iter().take(3).enumerate() {
        let at0 = |p: &SparsePoly<GfRing>| p.eval_var("a", &zero).unwrap().compact();
        let g = parse(&r, &v, &format!("g{}^2", i + 1)).unwrap();
        let lv = parse(&r, &v, &format!("l{}", i + 1)).unwrap();
        assert_eq!(at0(l), g);
        assert_eq!(at0(rr), lv);
    }
}

#[test]
fn t_elimination_has_closed_form() {
    let rel = eliminate_t(2).unwrap();
    let r = ring(2, 1);
    let v = ["a", "g1", "g2", "g3", "gamma"];
    let expected = parse(&r, &v, "a^15+g1 a^7+g2 a^3+g3 a+gamma").unwrap();
    assert_eq!(rel, expected);
    // q = 4 closes the same way
    let rel4 = eliminate_t(4).unwrap();
    assert_eq!(rel4.degree_in("a").unwrap(), Some(85));
}

#[test]
fn s_elimination_orders_agree() {
    let (top, bottom) = eliminate_s_both_orders(2).unwrap();
    assert_eq!(top, bottom);
    let rel = eliminate_s(2).unwrap();
    let r = ring(2, 1);
    let v = ["a", "h1", "h2", "h3", "h4", "h5", "beta"];
    let expected = parse(&r, &v, "a^63+h1 a^31+h2 a^15+h3 a^7+h4 a^3+h5 a+beta").unwrap();
    assert_eq!(rel, expected);
}

#[test]
fn bad_twist_is_rejected() {
    assert!(matches!(DrinfeldRing::new(1), Err(SkewError::BadTwist { .. })));
    assert!(commutation_constraints(6).is_err());
}

#[test]
fn specialization_search_finds_cubic_gcd() {
    let (found, seen) = find_isogeny_specialization(&[1, 2, 4, 5], 3).unwrap();
    let s = found.unwrap_or_else(|| panic!("no cubic gcd among {seen} parameter points"));
    assert_eq!(s.gcd_degree(), 3);
    assert_eq!(s.field, "GF(2^5)");
}
