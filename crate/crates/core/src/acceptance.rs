//! The nine acceptance criteria, each reduced to a single pass/fail line.

use std::time::Instant;

use serde::Serialize;

use crate::catalog::{run_identity_suite, verify_level2_factor, Catalog, CheckResult};
use crate::engine::{limit_report, Engine, Point, Starts};
use crate::props;

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: u128,
}

impl Criterion {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {} {verdict} {} ({} ms): {}", self.id, self.name, self.millis, self.detail)
    }
}

fn checks(cat: &Catalog, group: &str, ids: Option<&[&str]>) -> Vec<CheckResult> {
    run_identity_suite(cat, Some(&[group]))
        .into_iter()
        .filter(|c| ids.map_or(true, |ids| ids.contains(&c.id.as_str())))
        .collect()
}

fn summarize(results: &[CheckResult]) -> (bool, String) {
    let failed: Vec<String> = results.iter().filter(|c| !c.passed).map(|c| format!("{} [{}]", c.id, c.detail)).collect();
    if failed.is_empty() {
        (true, format!("{} checks hold", results.len()))
    } else {
        (false, format!("{}/{} checks hold; failing: {}", results.len() - failed.len(), results.len(), failed.join("; ")))
    }
}

type Outcome = Result<(bool, String), Box<dyn std::error::Error>>;

fn crit(id: u8, name: &'static str, f: impl FnOnce() -> Outcome) -> Criterion {
    let t = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Criterion { id, name, passed, detail, millis: t.elapsed().as_millis() }
}

fn labels(e: &Engine, pts: &[Point]) -> String {
    pts.iter().map(|p| e.label(*p)).collect::<Vec<_>>().join(",")
}

pub fn criterion_1(cat: &Catalog) -> Criterion {
    crit(1, "identity-suite", || {
        let t = Instant::now();
        let (ok, d) = summarize(&checks(cat, "modular", None));
        let secs = t.elapsed().as_secs_f64();
        Ok((ok && secs < 60.0, d))
    })
}

pub fn criterion_2(cat: &Catalog) -> Criterion {
    crit(2, "level-5-suite", || Ok(summarize(&checks(cat, "level5", None))))
}

pub fn criterion_3(cat: &Catalog) -> Criterion {
    crit(3, "commutation-constraints", || Ok(summarize(&checks(cat, "drinfeld", Some(&["constraint-lists", "p3"])))))
}

pub fn criterion_4(cat: &Catalog) -> Criterion {
    crit(4, "isogeny-elimination", || Ok(summarize(&checks(cat, "drinfeld", Some(&["isogeny-systems", "eliminations"])))))
}

pub fn criterion_5(cat: &Catalog) -> Criterion {
    crit(5, "elliptic-structure", || {
        let e = Engine::new(cat.tower("elliptic")?);
        let (mut total, mut wild, mut split1) = (Vec::new(), 0, 0);
        for x in e.field().elements() {
            let r = e.fiber(1, &[Point::Finite(x)])?;
            split1 += r.is_split() as usize;
            match r.pattern().as_slice() {
                [3] if r.degree_drop == 0 => total.push(Point::Finite(x)),
                [2, 1] => wild += 1,
                _ => {}
            }
        }
        let split = e.splitting_locus(6, &Starts::Affine)?;
        let genus = limit_report(&e, 1)?[0].genus_exact;
        let l2 = verify_level2_factor(cat)?;
        let ok = total.len() == 1 && split.len() == 4 && wild == 5 && genus == Some(4) && l2.divides && l2.quadratic_irreducible;
        Ok((
            ok,
            format!(
                "totally ramified {{{}}}, completely splitting {{{}}} ({split1} split at level 1), {wild} with pattern (2,1), genus {}, level-2 factor divides {} and cofactor irreducible {} ({})",
                labels(&e, &total),
                labels(&e, &split),
                genus.map_or("unknown".into(), |g| g.to_string()),
                l2.divides,
                l2.quadratic_irreducible,
                l2.certificate_display
            ),
        ))
    })
}

pub fn criterion_6(cat: &Catalog) -> Criterion {
    crit(6, "elliptic-limit", || {
        let t = Instant::now();
        let e = Engine::new(cat.tower("elliptic")?);
        let rows = limit_report(&e, 6)?;
        let mut ok = rows.len() == 6;
        for r in &rows {
            let m = 1u64 << (r.level - 1);
            ok &= r.places_lower == 13 * m && r.genus_upper == (13 * m + 1) as i64;
        }
        let last = rows.last().unwrap();
        ok &= last.ratio.num * 417 >= last.ratio.den * 416;
        let secs = t.elapsed().as_secs_f64();
        ok &= secs < 300.0;
        let counts: Vec<String> = rows.iter().map(|r| format!("{}/{}", r.places_lower, r.genus_upper)).collect();
        Ok((ok, format!("places/genus bound per level {}; ratio {} at n=6", counts.join(" "), last.ratio)))
    })
}

pub const ORACLE_CASES: [(&str, usize); 4] = [("gs-q2", 3), ("ff-t2t1", 3), ("ff-t2t", 2), ("elliptic", 1)];

pub fn criterion_7(cat: &Catalog) -> Criterion {
    crit(7, "oracle-equivalence", || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (id, n_max) in ORACLE_CASES {
            let e = Engine::new(cat.tower(id)?);
            for n in 1..=n_max {
                let chains = e.enumerate_chains(n, &Starts::Affine)?.len() as u64;
                let oracle = e.oracle_count(n)?;
                ok &= chains == oracle;
                if n == n_max {
                    parts.push(format!("{id} n={n}: {chains}/{oracle}"));
                }
            }
        }
        Ok((ok, parts.join(", ")))
    })
}

pub fn criterion_8(cat: &Catalog) -> Criterion {
    crit(8, "loetter-splitting", || {
        let big = Engine::new(cat.tower("loetter-2401")?);
        let small = Engine::new(cat.tower("loetter-49")?);
        let l3 = big.splitting_locus(3, &Starts::Affine)?;
        let l4 = big.splitting_locus(4, &Starts::Affine)?;
        let s3 = small.splitting_locus(3, &Starts::Affine)?;
        let ok = !l3.is_empty() && l4.iter().all(|p| l3.contains(p)) && s3.is_empty();
        Ok((ok, format!("F_2401: {} values at n=3, {} at n=4; F_49: {} at n=3", l3.len(), l4.len(), s3.len())))
    })
}

pub fn criterion_9(seed: u64) -> Criterion {
    crit(9, "property-suites", || {
        let rs = props::run_all(seed, 100);
        let ok = rs.iter().all(|r| r.passed());
        let parts: Vec<String> = rs
            .iter()
            .map(|r| format!("{} {}x{}", r.name, r.instances - r.failures.len().min(r.instances), r.instances))
            .collect();
        Ok((ok, format!("seed {seed}: {}", parts.join(", "))))
    })
}

pub fn run_acceptance(cat: &Catalog, seed: u64) -> Vec<Criterion> {
    vec![
        criterion_1(cat),
        criterion_2(cat),
        criterion_3(cat),
        criterion_4(cat),
        criterion_5(cat),
        criterion_6(cat),
        criterion_7(cat),
        criterion_8(cat),
        criterion_9(seed),
    ]
}
