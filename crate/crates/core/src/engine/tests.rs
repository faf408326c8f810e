use std::sync::OnceLock;

use super::*;
use crate::catalog::Catalog;

fn cat() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(|| Catalog::load_default().unwrap())
}

fn engine(id: &str) -> Engine {
    Engine::new(cat().tower(id).unwrap())
}

fn pt(e: &Engine, s: &str) -> Point {
    e.parse_point(s).unwrap()
}

#[test]
fn gs_fiber_over_f4_has_two_simple_roots() {
    let e = engine("gs-q2");
    let f = e.field().clone();
    // Y^2 + Y = X^2/(X+1): x = b^1 gives a split fiber
    let mut split = 0;
    for x in f.elements() {
        if let Ok(r) = e.fiber(1, &[Point::Finite(x)]) {
            if r.is_split() {
                split += 1;
                assert_eq!(r.roots.len(), 2);
            }
        }
    }
    assert!(split > 0);
}

#[test]
fn infinity_transform_twice_recovers_up_to_monomial() {
    let e = engine("elliptic");
    let TowerKind::TwistedDepth2 { phi, .. } = &e.def().kind else { panic!() };
    let c = infinity_charts(phi, "X", "Y").unwrap();
    assert_eq!(&infinity_transform(&c.x_chart, "X").unwrap(), phi);
    let back = infinity_transform(&infinity_transform(&c.both, "Y").unwrap(), "X").unwrap();
    assert_eq!(&back, phi);
}

#[test]
fn elliptic_level_one_classification() {
    let e = engine("elliptic");
    let mut total = Vec::new();
    let mut split = 0;
    let mut wild = 0;
    for x in e.field().elements() {
        let r = e.fiber(1, &[Point::Finite(x)]).unwrap();
        if r.is_split() {
            split += 1;
        }
        match r.pattern().as_slice() {
            [3] => total.push(e.label(Point::Finite(x))),
            [2, 1] => wild += 1,
            _ => {}
        }
    }
    assert_eq!(total, ["b^858"]);
    assert_eq!(wild, 5);
    assert_eq!(split, 132);
    let at_inf = e.fiber(1, &[Point::Infinity]).unwrap();
    assert!(!at_inf.has_multiple_root(), "{at_inf:?}");
}

#[test]
fn level_three_backtrack_factor_is_twisted_by_eight() {
    let e = engine("elliptic");
    let bt = e.backtrack_factor(3, 7, 16).unwrap();
    let r = bt.ring().clone();
    // alpha embeds as b^33
    let f = e.field();
    let a = |k: i64| f.pow(f.beta_pow(33), k as u64);
    let expect = {
        let u = SparsePoly::var(&r, &["U", "T"], "U").unwrap();
        let t = SparsePoly::var(&r, &["U", "T"], "T").unwrap();
        let c = |g: Gf| SparsePoly::constant(&r, &["U", "T"], g);
        &(&(&u + &c(a(14))) * &t) + &(&(&c(a(7)) * &u) + &c(a(30)))
    };
    assert_eq!(bt, expect);
}

#[test]
fn corrupted_backtrack_factor_fails_division() {
    let e = engine("elliptic");
    let bt = e.backtrack_factor(2, 1, 16).unwrap();
    let one = SparsePoly::one(bt.ring(), &["U", "T"]);
    let bad = &bt + &one;
    assert!(matches!(e.certify_backtrack(2, &bad, 1, 16), Err(EngineError::BacktrackDivisionFails { .. })));
}

#[test]
fn total_ramification_root_has_multiplicity_three() {
    let e = engine("elliptic");
    let r = e.fiber(1, &[pt(&e, "b^858")]).unwrap();
    assert_eq!(r.roots.len(), 1);
    assert_eq!(r.roots[0].mult, 3);
    assert_eq!(r.place_weight(&r.roots[0]), 1);
}

#[test]
fn elliptic_split_chain_weights_double_each_level() {
    let e = engine("elliptic");
    let starts = e.rational_locus(6, &Starts::Affine).unwrap();
    let labels: Vec<String> = starts.iter().map(|p| e.label(*p)).collect();
    assert_eq!(labels, ["b^165", "b^368", "b^523", "b^858", "b^891"]);
    for n in 1..=6 {
        let ch = e.enumerate_chains(n, &Starts::Values(starts.clone())).unwrap();
        assert_eq!(weighted_count(&ch), 13 << (n - 1), "level {n}");
    }
}

#[test]
fn elliptic_splitting_locus_shrinks_to_four() {
    let e = engine("elliptic");
    assert_eq!(e.splitting_locus(1, &Starts::Affine).unwrap().len(), 132);
    assert!(e.fiber(1, &[Point::Infinity]).unwrap().is_split());
    assert_eq!(e.splitting_locus(2, &Starts::Affine).unwrap().len(), 24);
    for n in 3..=5 {
        let l: Vec<String> = e.splitting_locus(n, &Starts::Affine).unwrap().iter().map(|p| e.label(*p)).collect();
        assert_eq!(l, ["b^165", "b^368", "b^523", "b^891"], "level {n}");
    }
}

#[test]
fn genus_of_first_step_and_limit_report() {
    let g = rh_genus(
        0,
        3,
        2,
        &[
            RamificationDatum::new("P", "0", 3, 2, DSource::TameFormula),
            RamificationDatum::new("Q", "1", 2, 2, DSource::Supplied),
            RamificationDatum::new("Q'", "1", 1, 0, DSource::Supplied),
        ],
    )
    .unwrap();
    assert_eq!((g.genus, g.exact), (0, true));
    let e = engine("elliptic");
    let rows = limit_report(&e, 6).unwrap();
    assert_eq!(rows[0].genus_exact, Some(4));
    for r in &rows {
        let m = 1i64 << (r.level - 1);
        assert_eq!(r.genus_upper, 13 * m + 1);
        assert_eq!(r.genus_sharp, 13 * m - 9);
        assert_eq!(r.places_lower, 13 * m as u64);
    }
    assert_eq!(rows[5].ratio.to_string(), "416/417");
    assert_eq!(rows[5].dv_bound, Some(31));
}

#[test]
fn inconsistent_ramification_is_rejected() {
    let too_much = [
        RamificationDatum::new("P", "0", 3, 2, DSource::TameFormula),
        RamificationDatum::new("P'", "0", 1, 0, DSource::TameFormula),
    ];
    assert!(matches!(rh_genus(0, 3, 2, &too_much), Err(EngineError::InconsistentData(_))));
    let wild_tame = [RamificationDatum::new("P", "0", 2, 1, DSource::TameFormula)];
    assert!(matches!(rh_genus(0, 2, 2, &wild_tame), Err(EngineError::InconsistentData(_))));
    let wild_small = [RamificationDatum::new("P", "0", 2, 1, DSource::Supplied)];
    assert!(matches!(rh_genus(0, 2, 2, &wild_small), Err(EngineError::InconsistentData(_))));
}

#[test]
fn no_genus_recipe_for_function_field_towers() {
    assert!(matches!(limit_report(&engine("ff-t2t1"), 2), Err(EngineError::NoGenusRecipe(_))));
}

#[test]
fn oracle_matches_chain_counts() {
    for (id, n) in [("gs-q2", 3), ("elkies-q2", 3), ("ff-t2t1", 3), ("drinfeld-t", 3), ("ff-t2t", 2), ("elliptic", 1)] {
        let e = engine(id);
        let chains = e.enumerate_chains(n, &Starts::Affine).unwrap();
        assert_eq!(e.oracle_count(n).unwrap(), chains.len() as u64, "{id} level {n}");
    }
}

#[test]
fn oracle_refuses_large_spaces() {
    assert!(matches!(engine("elliptic").oracle_count(3), Err(EngineError::SizeExceeded(_))));
}

#[test]
fn loetter_splitting_depends_on_the_field() {
    let big = engine("loetter-2401");
    let l3 = big.splitting_locus(3, &Starts::Affine).unwrap();
    assert!(!l3.is_empty());
    let l4 = big.splitting_locus(4, &Starts::Affine).unwrap();
    assert!(l3.iter().all(|p| l4.contains(p)));
    assert!(engine("loetter-49").splitting_locus(3, &Starts::Affine).unwrap().is_empty());
}
