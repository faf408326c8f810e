use towerforge::props::{self, PropertyResult, DEFAULT_SEED};

fn check(r: PropertyResult) {
    println!("{} seed {}: {} instances, {} failures", r.name, r.seed, r.instances, r.failures.len());
    assert!(r.passed(), "{}: {:?}", r.name, r.failures);
}

#[test]
fn ring_axioms_hold() {
    for seed in [DEFAULT_SEED, 1, 2] {
        check(props::ring_axioms(seed, 200));
    }
}

#[test]
fn root_multiplicities_are_conserved() {
    for seed in [DEFAULT_SEED, 3] {
        check(props::root_multiplicities(seed, 200));
    }
}

#[test]
fn splitting_locus_is_monotone() {
    for seed in [DEFAULT_SEED, 4] {
        check(props::locus_monotonicity(seed, 100));
    }
}

#[test]
fn chain_tree_degrees_are_conserved() {
    for seed in [DEFAULT_SEED, 5] {
        check(props::degree_conservation(seed, 100));
    }
}
