//! Runs acceptance criteria 1–9 and prints one line per criterion.
//!
//! Criterion 1 is expected to fail on exactly one check: the printed level
//! T^2+T modular polynomial omits four coefficient classes, so the
//! parameterization identity does not hold for the stored polynomial.

use towerforge::acceptance::run_acceptance;
use towerforge::catalog::{run_identity_suite, Catalog};
use towerforge::props::DEFAULT_SEED;

const KNOWN_FAILURE: &str = "parameterization/T^2+T";

fn main() {
    let cat = Catalog::load_default().expect("golden data");
    let results = run_acceptance(&cat, DEFAULT_SEED);
    let mut unexpected = Vec::new();
    for c in &results {
        println!("{}", c.line());
        if !c.passed && c.id != 1 {
            unexpected.push(c.id);
        }
    }
    if !results[0].passed {
        let failing: Vec<String> = run_identity_suite(&cat, Some(&["modular"]))
            .into_iter()
            .filter(|c| !c.passed)
            .map(|c| c.id)
            .collect();
        println!("criterion 1 failing checks: {failing:?} (expected [{KNOWN_FAILURE:?}])");
        if failing != [KNOWN_FAILURE] {
            unexpected.push(1);
        }
    }
    let passed = results.iter().filter(|c| c.passed).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
