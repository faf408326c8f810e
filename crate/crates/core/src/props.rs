//! Seeded randomized property suites: field/polynomial ring axioms, root
//! multiplicities, splitting-locus monotonicity and chain-tree degrees.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::catalog::{TowerDef, TowerKind};
use crate::engine::{Engine, EngineError, Point, Starts};
use crate::gf::{make_field, FieldSpec, Gf};
use crate::poly::{dense, roots_dense, GfRing, Ring, SparsePoly};

pub const DEFAULT_SEED: u64 = 20240917;

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub seed: u64,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.instances >= 100
    }
}

fn fields() -> Vec<Arc<FieldSpec>> {
    [(2, 1), (2, 2), (2, 4), (2, 10), (7, 1), (7, 2)].iter().map(|&(p, k)| make_field(p, k, None).unwrap()).collect()
}

fn element(rng: &mut StdRng, f: &FieldSpec) -> Gf {
    // zero with probability 1/q, else a random power of the generator
    if rng.gen_range(0..f.order()) == 0 {
        Gf::ZERO
    } else {
        f.beta_pow(rng.gen_range(0..f.order() as i64 - 1))
    }
}

fn rand_poly(rng: &mut StdRng, r: &GfRing, vars: &[&str], terms: usize, max_exp: u32) -> SparsePoly<GfRing> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let f = r.field().clone();
    let t: Vec<(Vec<u32>, Gf)> = (0..terms)
        .map(|_| ((0..vars.len()).map(|_| rng.gen_range(0..=max_exp)).collect(), element(rng, &f)))
        .collect();
    SparsePoly::from_terms(r, &names, t)
}

/// Field axioms on random triples and ring axioms on random bivariate polynomials.
pub fn ring_axioms(seed: u64, n: usize) -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let fs = fields();
    let mut failures = Vec::new();
    for i in 0..n {
        let f = fs[rng.gen_range(0..fs.len())].clone();
        let r = GfRing::new(f.clone());
        let (a, b, c) = (element(&mut rng, &f), element(&mut rng, &f), element(&mut rng, &f));
        let mut ok = r.add(&r.add(&a, &b), &c) == r.add(&a, &r.add(&b, &c))
            && r.mul(&r.mul(&a, &b), &c) == r.mul(&a, &r.mul(&b, &c))
            && r.mul(&a, &b) == r.mul(&b, &a)
            && r.mul(&a, &r.add(&b, &c)) == r.add(&r.mul(&a, &b), &r.mul(&a, &c))
            && r.add(&a, &r.neg(&a)) == r.zero()
            && r.inv(&a).map_or(a.is_zero(), |x| r.mul(&a, &x) == r.one());
        let (p, q, s) = (
            rand_poly(&mut rng, &r, &["X", "Y"], 4, 3),
            rand_poly(&mut rng, &r, &["X", "Y"], 4, 3),
            rand_poly(&mut rng, &r, &["X", "Y"], 3, 2),
        );
        ok &= &(&p * &q) * &s == &p * &(&q * &s)
            && &p * &(&q + &s) == &(&p * &q) + &(&p * &s)
            && &p * &q == &q * &p
            && (&p - &p).is_zero();
        // evaluation is a ring homomorphism
        let pt = [element(&mut rng, &f), element(&mut rng, &f)];
        ok &= (&p * &q).eval_all(&pt) == r.mul(&p.eval_all(&pt), &q.eval_all(&pt));
        if !ok {
            failures.push(format!("instance {i} over {}", f.label()));
        }
    }
    PropertyResult { name: "ring-axioms", seed, instances: n, failures }
}

/// Roots of products of random linear factors come back with the right
/// multiplicities; with an extra random factor the found roots still divide.
pub fn root_multiplicities(seed: u64, n: usize) -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let fs = fields();
    let mut failures = Vec::new();
    for i in 0..n {
        let f = fs[rng.gen_range(1..fs.len())].clone();
        let r = GfRing::new(f.clone());
        let k = rng.gen_range(1..=4);
        let mut want: Vec<(Gf, u32)> = Vec::new();
        let mut poly = vec![Gf::ONE];
        for _ in 0..k {
            let x = element(&mut rng, &f);
            let m = rng.gen_range(1..=3);
            match want.iter_mut().find(|(y, _)| *y == x) {
                Some(e) => e.1 += m,
                None => want.push((x, m)),
            }
            poly = dense::mul(&r, &poly, &dense::pow(&r, &[r.neg(&x), Gf::ONE], m as u64));
        }
        want.sort_by_key(|(x, _)| x.index());
        let got = roots_dense(&r, &poly).unwrap();
        let deg = dense::degree(&poly).unwrap() as u32;
        let mut ok = got == want && got.iter().map(|x| x.1).sum::<u32>() == deg;
        // random cofactor
        let extra: Vec<Gf> = (0..rng.gen_range(2..5)).map(|_| element(&mut rng, &f)).chain([Gf::ONE]).collect();
        let g = dense::mul(&r, &poly, &extra);
        let found = roots_dense(&r, &g).unwrap();
        let mut prod = vec![Gf::ONE];
        for (x, m) in &found {
            prod = dense::mul(&r, &prod, &dense::pow(&r, &[r.neg(x), Gf::ONE], *m as u64));
            // exact multiplicity: one more factor no longer divides
            let next = dense::pow(&r, &[r.neg(x), Gf::ONE], *m as u64 + 1);
            ok &= !dense::divrem(&r, &g, &next).1.is_empty();
        }
        ok &= dense::divrem(&r, &g, &prod).1.is_empty();
        ok &= found.iter().map(|x| x.1).sum::<u32>() <= dense::degree(&g).unwrap() as u32;
        if !ok {
            failures.push(format!("instance {i} over {}", f.label()));
        }
    }
    PropertyResult { name: "root-multiplicity-conservation", seed, instances: n, failures }
}

/// Random depth-1 tower over F₄ or F₁₆; about half are products of factors
/// linear in `Y`, so fibers split often.
fn random_tower(rng: &mut StdRng, i: usize) -> TowerDef {
    let f = make_field(2, if rng.gen_bool(0.5) { 2 } else { 4 }, None).unwrap();
    let r = GfRing::new(f.clone());
    let vars = ["X", "Y"];
    let y = SparsePoly::var(&r, &vars, "Y").unwrap();
    let deg = rng.gen_range(2..=3);
    let poly = if rng.gen_bool(0.5) {
        let mut p = SparsePoly::one(&r, &vars);
        for _ in 0..deg {
            let g = rand_poly(rng, &r, &["X"], 3, 2).with_vars(&["X".to_string(), "Y".to_string()]).unwrap();
            p = &p * &(&y - &g);
        }
        p
    } else {
        let mut p = y.pow(deg);
        for e in 0..deg {
            let g = rand_poly(rng, &r, &["X"], 3, 3).with_vars(&["X".to_string(), "Y".to_string()]).unwrap();
            p = &p + &(&g * &y.pow(e));
        }
        p
    };
    TowerDef { id: format!("random-{i}"), field: f, kind: TowerKind::Depth1 { f: poly }, notes: String::new() }
}

/// `splitting_locus(n + 1) ⊆ splitting_locus(n)` on random towers.
pub fn locus_monotonicity(seed: u64, n: usize) -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..n {
        let e = Engine::new(random_tower(&mut rng, i));
        let loci: Result<Vec<Vec<Point>>, EngineError> = (1..=3).map(|k| e.splitting_locus(k, &Starts::All)).collect();
        match loci {
            Ok(l) if l.windows(2).all(|w| w[1].iter().all(|p| w[0].contains(p))) => {}
            Ok(_) => failures.push(format!("instance {i}: locus grew")),
            Err(err) => failures.push(format!("instance {i}: {err}")),
        }
    }
    PropertyResult { name: "splitting-locus-monotonicity", seed, instances: n, failures }
}

/// Over base values whose tree never loses degree, Σ over chains of the
/// product of step multiplicities equals the product of step degrees.
pub fn degree_conservation(seed: u64, n: usize) -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 0..n {
        let def = random_tower(&mut rng, i);
        let levels = 2;
        let full: u64 = (1..=levels).map(|l| def.step_degree(l) as u64).product();
        let e = Engine::new(def);
        let bases: Vec<Point> = e.field().elements().map(Point::Finite).collect();
        for b in bases {
            let ok_tree = (|| -> Result<bool, EngineError> {
                let mut front = vec![vec![b]];
                for l in 1..=levels {
                    let mut next = Vec::new();
                    for v in front {
                        let rep = e.fiber(l, &v)?;
                        if rep.degree_drop > 0 {
                            return Ok(false);
                        }
                        for r in &rep.roots {
                            let mut w = v.clone();
                            w.push(Point::Finite(r.value));
                            next.push(w);
                        }
                    }
                    front = next;
                }
                Ok(true)
            })();
            if !matches!(ok_tree, Ok(true)) {
                continue;
            }
            checked += 1;
            let chains = e.enumerate_chains(levels, &Starts::Values(vec![b])).unwrap();
            let total: u64 = chains.iter().map(|c| c.step_mults.iter().map(|&m| m as u64).product::<u64>()).sum();
            if total != full {
                failures.push(format!("instance {i} base {}: {total} ≠ {full}", e.label(b)));
            }
        }
    }
    if checked == 0 {
        failures.push("no base value had a full tree".into());
    }
    PropertyResult { name: "chain-tree-degree-conservation", seed, instances: n, failures }
}

pub fn run_all(seed: u64, n: usize) -> Vec<PropertyResult> {
    vec![
        ring_axioms(seed, n),
        root_multiplicities(seed.wrapping_add(1), n),
        locus_monotonicity(seed.wrapping_add(2), n),
        degree_conservation(seed.wrapping_add(3), n),
    ]
}
