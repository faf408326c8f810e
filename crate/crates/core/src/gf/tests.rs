use super::*;

fn f(p: u64, k: u32) -> Arc<FieldSpec> {
    make_field(p, k, None).unwrap()
}

#[test]
fn f4_default_poly_and_square() {
    let f4 = f(2, 2);
    assert_eq!(f4.defining_poly(), &[1, 1, 1]);
    let w = FieldElement::from_coeffs(&f4, &[0, 1]);
    let w2 = w.mul(&w).unwrap();
    assert_eq!(w2.coeffs(), vec![1, 1]);
}

#[test]
fn f32_alpha_relation() {
    let f32_ = make_field(2, 5, Some(&[1, 0, 1, 0, 0, 1])).unwrap();
    let a = FieldElement::from_coeffs(&f32_, &[0, 1]);
    assert_eq!(a.pow(5).coeffs(), vec![1, 0, 1, 0, 0]);
}

#[test]
fn reducible_poly_rejected() {
    assert_eq!(
        make_field(2, 4, Some(&[0, 0, 1, 0, 1])).unwrap_err(),
        FieldError::NotIrreducible { p: 2 }
    );
    assert_eq!(make_field(3, 7, None).unwrap_err(), FieldError::TableMiss { p: 3, k: 7 });
    assert_eq!(make_field(2, 21, None).unwrap_err(), FieldError::SizeExceeded { p: 2, k: 21 });
    assert_eq!(make_field(4, 1, None).unwrap_err(), FieldError::NotPrime(4));
}

#[test]
fn group_order_power_is_one() {
    for (p, k) in conway_entries() {
        let fs = f(p, k);
        let n = fs.order() - 1;
        for x in enumerate(&fs).unwrap().into_iter().skip(1).step_by(7) {
            assert_eq!(x.pow(n), FieldElement::one(&fs));
        }
    }
}

#[test]
fn conway_polynomials_are_primitive_and_compatible() {
    for (p, k) in conway_entries() {
        let fs = f(p, k);
        assert!(fs.variable_is_primitive(), "Conway({p},{k}) must be primitive");
        // x^((p^k-1)/(p^d-1)) is a root of Conway(p, d) for every shipped d | k
        let x = FieldElement::from_coeffs(&fs, &[0, 1]);
        for (p2, d) in conway_entries() {
            if p2 != p || k % d != 0 {
                continue;
            }
            let e = (fs.order() - 1) / (p.pow(d) - 1);
            let y = x.pow(e);
            let sub = conway_polynomial(p, d).unwrap();
            let mut acc = FieldElement::zero(&fs);
            for &c in sub.iter().rev() {
                let cc = FieldElement::from_coeffs(&fs, &[c as u32]);
                acc = acc.mul(&y).unwrap().add(&cc).unwrap();
            }
            assert!(acc.is_zero(), "Conway({p},{k}) incompatible with Conway({p},{d})");
        }
    }
}

#[test]
fn log_arithmetic_matches_polynomial_basis() {
    for (p, k) in [(2u64, 4u32), (7, 2), (2, 5)] {
        let fs = f(p, k);
        for a in fs.elements() {
            for b in fs.elements().step_by(3) {
                let pa = fs.to_packed(a);
                let pb = fs.to_packed(b);
                assert_eq!(fs.to_packed(fs.mul(a, b)), fs.mul_packed(pa, pb));
                let digits: Vec<u32> = fs
                    .unpack(pa)
                    .iter()
                    .zip(fs.unpack(pb))
                    .map(|(x, y)| (x + y) % p as u32)
                    .collect();
                assert_eq!(fs.to_packed(fs.add(a, b)), fs.pack(&digits));
            }
        }
    }
}

#[test]
fn inverse_and_negation() {
    let fs = f(7, 2);
    for a in fs.elements() {
        assert!(fs.add(a, fs.neg(a)).is_zero());
        if let Some(i) = fs.inv(a) {
            assert_eq!(fs.mul(a, i), Gf::ONE);
        }
    }
    let z = FieldElement::zero(&fs);
    assert_eq!(z.inv().unwrap_err(), FieldError::DivisionByZero);
}

#[test]
fn frobenius_rules() {
    let f1024 = f(2, 10);
    let f7 = f(7, 1);
    for x in enumerate(&f7).unwrap() {
        assert_eq!(x.frobenius(7).unwrap(), x);
    }
    let b = primitive_element(&f1024);
    assert_eq!(b.frobenius(1024).unwrap(), b);
    assert!(matches!(b.frobenius(6), Err(FieldError::BadPower { .. })));
    // repeated squaring oracle
    let f32_ = f(2, 5);
    let a = primitive_element(&f32_);
    let mut sq = a.clone();
    for _ in 0..9 {
        sq = sq.mul(&sq).unwrap();
    }
    let via = a.frobenius(8).unwrap().frobenius(8).unwrap().frobenius(8).unwrap();
    assert_eq!(via, sq);
    assert_eq!(via, a.pow(512));
}

#[test]
fn discrete_logs() {
    let fs = f(2, 10);
    let b = primitive_element(&fs);
    assert_eq!(discrete_log(&FieldElement::one(&fs)).unwrap(), 0);
    assert_eq!(discrete_log(&b).unwrap(), 1);
    assert_eq!(discrete_log(&FieldElement::zero(&fs)).unwrap_err(), FieldError::DivisionByZero);
    for e in [0u64, 1, 33, 858, 1022] {
        assert_eq!(discrete_log(&b.pow(e)).unwrap() as u64, e);
    }
    // order of β^33 by repeated multiplication
    let g = b.pow(33);
    let mut x = g.clone();
    let mut ord = 1;
    while x != FieldElement::one(&fs) {
        x = x.mul(&g).unwrap();
        ord += 1;
    }
    assert_eq!(ord, 31);
    assert_eq!(g.multiplicative_order(), Some(31));
}

#[test]
fn non_primitive_variable_searches_generator() {
    // x^4+x^3+x^2+x+1 is irreducible but x has order 5
    let fs = make_field(2, 4, Some(&[1, 1, 1, 1, 1])).unwrap();
    assert!(!fs.variable_is_primitive());
    let b = primitive_element(&fs);
    assert_eq!(b.multiplicative_order(), Some(15));
}

#[test]
fn embedding_alpha_is_beta_33() {
    let f32_ = f(2, 5);
    let f1024 = f(2, 10);
    let a = FieldElement::from_coeffs(&f32_, &[0, 1]);
    let ea = embed(&a, &f1024).unwrap();
    assert_eq!(discrete_log(&ea).unwrap(), 33);
    assert_eq!(embed(&FieldElement::one(&f32_), &f1024).unwrap(), FieldElement::one(&f1024));
    let a5 = a.pow(5);
    assert_eq!(embed(&a5, &f1024).unwrap(), ea.pow(5));
    let f16 = f(2, 4);
    assert!(matches!(embed(&a, &f16), Err(FieldError::NotASubfield { .. })));
}

#[test]
fn embedding_is_injective_homomorphism() {
    let src = f(7, 2);
    let dst = f(7, 4);
    let e = Embedding::new(src.clone(), dst.clone()).unwrap();
    let mut seen = std::collections::HashSet::new();
    for a in src.elements() {
        assert!(seen.insert(e.map(a)));
        for b in src.elements().step_by(5) {
            assert_eq!(e.map(src.add(a, b)), dst.add(e.map(a), e.map(b)));
            assert_eq!(e.map(src.mul(a, b)), dst.mul(e.map(a), e.map(b)));
        }
        assert_eq!(e.map(src.pow(a, 7)), dst.pow(e.map(a), 7));
    }
}

#[test]
fn enumeration_counts() {
    let f2 = f(2, 1);
    let els = enumerate(&f2).unwrap();
    assert_eq!(els.iter().map(|x| x.coeffs()[0]).collect::<Vec<_>>(), vec![0, 1]);
    let f4 = f(2, 2);
    let set: std::collections::HashSet<u32> =
        enumerate(&f4).unwrap().iter().map(|x| f4.to_packed(x.raw())).collect();
    assert_eq!(set.len(), 4);
    assert_eq!(enumerate(&f(2, 10)).unwrap().len(), 1024);
}

#[test]
fn mismatched_fields_error() {
    let a = primitive_element(&f(2, 2));
    let b = primitive_element(&f(2, 4));
    assert!(matches!(a.add(&b), Err(FieldError::FieldMismatch(..))));
}

#[test]
fn prime_field_without_conway_entry() {
    let fs = make_field(10007, 1, Some(&[0, 1])).unwrap();
    let b = primitive_element(&fs);
    assert_eq!(b.multiplicative_order(), Some(10006));
    let three = FieldElement::from_coeffs(&fs, &[3]);
    assert_eq!(three.mul(&three.inv().unwrap()).unwrap(), FieldElement::one(&fs));
}
