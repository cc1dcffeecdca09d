//! The acceptance suite: one line per criterion, PASS or FAIL with details.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use ordim::battery::{
    check_block_dims, check_block_invariants, check_chain_removal, run_check, trial_seed, Check,
};
use ordim::blocks::{binom2, build_lr, lr_realizer, lr_stats, LR_REALIZER_MAX_RANK};
use ordim::dimension::{
    dimension_exact, has_dim_le_2, two_realizer, verify_realizer, ExactOptions, Realizer,
    RealizerFailure,
};
use ordim::io::{parse_extensions, parse_poset};
use ordim::lattice::Lattice;
use ordim::poset::Poset;
use ordim::random::{
    random_closure_lattice, random_poset, random_rc_lattice, random_small_rc, rng_from_seed,
    RcShape,
};
use ordim::rc::{is_rc, rc_dimension};
use rand::Rng;

const SEED: u64 = 20_240_601;

// time limits per criterion
const LIMIT_STATS: Duration = Duration::from_secs(1);
const LIMIT_LR_TABLE: Duration = Duration::from_secs(30);
const LIMIT_ORACLE: Duration = Duration::from_secs(300);

// instance counts
const ORACLE_INSTANCES: usize = 600;
const ADJUNCT_SUMS: usize = 200;
const EXISTING_PAIRS: usize = 100;
const CHAIN_REMOVALS: usize = 100;
const REDUCTIONS: usize = 100;
const HEADLINE_INSTANCES: usize = 300;
const HEADLINE_MAX_N: usize = 60;

/// Criteria that cannot hold as stated, with the reason. The suite still prints
/// FAIL for them.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    3,
    "the cascade extensions for L_5 never put c5 before c2, so that incomparable pair is unrealized",
)];

struct Line {
    id: u32,
    name: &'static str,
    result: Result<String, String>,
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<String, String>) -> Result<String, String> {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{out}; took {took:?}, limit {limit:?}"));
    }
    Ok(format!("{out} ({took:.2?})"))
}

fn lr_statistics() -> Result<String, String> {
    timed(LIMIT_STATS, || {
        for r in 1..=12 {
            let b = build_lr(r).map_err(|e| e.to_string())?;
            let (n, eta) = (b.poset().len(), b.poset().nullity());
            if n != (r * r + 3 * r - 2) / 2 || eta != binom2(r) {
                return Err(format!("L_{r}: |L| = {n}, nullity = {eta}"));
            }
            b.check_invariants()?;
            lr_stats(r).map_err(|e| e.to_string())?;
        }
        Ok("r = 1..12 sizes and nullities match".into())
    })
}

fn lr_dimension_table() -> Result<String, String> {
    timed(LIMIT_LR_TABLE, || {
        let mut dims = Vec::new();
        for r in 1..=12 {
            let b = build_lr(r).map_err(|e| e.to_string())?;
            let p = b.poset();
            let dim = if p.is_chain() {
                1
            } else if let Some(w) = two_realizer(p) {
                verify_realizer(p, &w).map_err(|e| e.to_string())?;
                w.len()
            } else {
                let w = lr_realizer(&b).map_err(|e| format!("L_{r}: {e}"))?;
                verify_realizer(p, &w).map_err(|e| format!("L_{r}: {e}"))?;
                w.len()
            };
            let want = match r {
                1 => 1,
                2..=4 => 2,
                _ => 3,
            };
            if dim != want || (r >= 5 && has_dim_le_2(p)) {
                return Err(format!("L_{r}: dimension {dim}, expected {want}"));
            }
            dims.push(dim.to_string());
        }
        Ok(format!(
            "Dim(L_1..L_{LR_REALIZER_MAX_RANK}) = {}",
            dims.join(",")
        ))
    })
}

fn cascade_fixture() -> Result<String, String> {
    let b = build_lr(5).map_err(|e| e.to_string())?;
    let fixture = parse_poset(include_str!("fixtures/lr5.poset")).map_err(|e| e.to_string())?;
    if &fixture != b.poset() {
        return Err("fixture poset differs from L_5".into());
    }
    let r = parse_extensions(include_str!("fixtures/lr5_cascade.ext"), b.poset().len())
        .map_err(|e| e.to_string())?;
    let mut drops_fail = true;
    for drop in 0..r.len() {
        let mut partial = r.extensions.clone();
        partial.remove(drop);
        drops_fail &= verify_realizer(b.poset(), &Realizer::new(partial)).is_err();
    }
    let label = |x| b.poset().display_name(x);
    match verify_realizer(b.poset(), &r) {
        Ok(()) if drops_fail => Ok("verifies; every 2-subset fails".into()),
        Ok(()) => Err("verifies, but some 2-subset also verifies".into()),
        Err(RealizerFailure::NotARealizer { x, y }) => Err(format!(
            "does not verify: no extension puts {} before {}; every 2-subset fails = {drops_fail}",
            label(x),
            label(y)
        )),
        Err(e) => Err(format!("does not verify: {e}")),
    }
}

fn oracle_equivalence() -> Result<String, String> {
    timed(LIMIT_ORACLE, || {
        let opts = ExactOptions::default();
        let mut rc_count = 0;
        let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..ORACLE_INSTANCES {
            let mut rng = rng_from_seed(trial_seed(SEED, i));
            let p: Poset = match i % 3 {
                0 => {
                    let n = rng.gen_range(1..=8);
                    let density = rng.gen_range(0.05..0.6);
                    random_poset(&mut rng, n, density)
                }
                1 => random_closure_lattice(&mut rng, 3, 8).into_poset(),
                _ => random_small_rc(&mut rng, 8).into_poset(),
            };
            let exact = dimension_exact(&p, &opts).map_err(|e| format!("instance {i}: {e}"))?;
            *dims.entry(exact.dim).or_default() += 1;
            if (exact.dim <= 2) != has_dim_le_2(&p) {
                return Err(format!("instance {i}: exact {} vs dim-2 test", exact.dim));
            }
            if let Ok(l) = Lattice::new(p) {
                if is_rc(&l).is_rc {
                    rc_count += 1;
                    let rc = rc_dimension(&l).map_err(|e| format!("instance {i}: {e}"))?;
                    if rc.dim != exact.dim {
                        return Err(format!(
                            "instance {i}: classifier {} vs exact {}",
                            rc.dim, exact.dim
                        ));
                    }
                }
            }
        }
        Ok(format!(
            "{ORACLE_INSTANCES} instances ({rc_count} RC), dims {dims:?}, no disagreement"
        ))
    })
}

fn classical_values() -> Result<String, String> {
    let opts = ExactOptions::default();
    let mut cube = Vec::new();
    for s in 0..8usize {
        for b in 0..3 {
            if s & (1 << b) == 0 {
                cube.push((s, s | (1 << b)));
            }
        }
    }
    let cases = [
        ("chain", Poset::chain(5), 1),
        ("2-antichain", Poset::antichain(2), 2),
        ("6-crown", Poset::crown(3), 3),
        (
            "B_3",
            Poset::from_covers(8, &cube).map_err(|e| e.to_string())?,
            3,
        ),
    ];
    for (name, p, want) in cases {
        let got = dimension_exact(&p, &opts).map_err(|e| e.to_string())?.dim;
        if got != want {
            return Err(format!("{name}: {got}, expected {want}"));
        }
    }
    Ok("chain 1, antichain 2, crown 3, B_3 3".into())
}

fn adjunct_theorems() -> Result<String, String> {
    let run = |check: Check, count: usize, salt: u64| -> Result<(), String> {
        for i in 0..count {
            let s = trial_seed(SEED ^ salt, i);
            run_check(check, &mut rng_from_seed(s), 9)
                .map_err(|e| format!("{check} seed {s}: {e}"))?;
        }
        Ok(())
    };
    run(Check::AdjunctBounds, ADJUNCT_SUMS, 1)?;
    run(Check::ExistingPair, EXISTING_PAIRS, 2)?;
    let mut done = 0;
    let mut i = 0;
    while done < CHAIN_REMOVALS {
        let l = random_small_rc(&mut rng_from_seed(trial_seed(SEED ^ 3, i)), 9);
        i += 1;
        if l.is_chain() {
            continue;
        }
        check_chain_removal(&l).map_err(|e| format!("chain removal, instance {i}: {e}"))?;
        done += 1;
    }
    Ok(format!(
        "{ADJUNCT_SUMS} adjunct sums, {EXISTING_PAIRS} existing-pair gluings, {CHAIN_REMOVALS} chain removals"
    ))
}

fn reduction_equivalence() -> Result<String, String> {
    let mut done = 0;
    let mut i = 0;
    while done < REDUCTIONS {
        let l = random_small_rc(&mut rng_from_seed(trial_seed(SEED ^ 4, i)), 9);
        i += 1;
        if l.is_chain() {
            continue;
        }
        for fundamental in [false, true] {
            check_block_dims(&l, fundamental).map_err(|e| format!("instance {i}: {e}"))?;
            check_block_invariants(&l, fundamental).map_err(|e| format!("instance {i}: {e}"))?;
        }
        done += 1;
    }
    Ok(format!(
        "{REDUCTIONS} RC-lattices: Dim(L) = Dim(B) = Dim(F), Red and nullity identities hold"
    ))
}

fn headline() -> Result<String, String> {
    let mut dims: BTreeMap<usize, usize> = BTreeMap::new();
    let mut largest = 0;
    let mut done = 0;
    let mut i = 0;
    while done < HEADLINE_INSTANCES {
        let mut rng = rng_from_seed(trial_seed(SEED ^ 5, i));
        i += 1;
        let chain_len = rng.gen_range(3..=20);
        let shape = RcShape {
            chain_len,
            ears: rng.gen_range(0..=16),
            max_ear_len: rng.gen_range(1..=3),
            max_reducibles: rng.gen_range(2..=LR_REALIZER_MAX_RANK),
        };
        let l = random_rc_lattice(&mut rng, shape);
        if l.len() > HEADLINE_MAX_N {
            continue;
        }
        let rep = rc_dimension(&l).map_err(|e| format!("instance {i}: {e}"))?;
        verify_realizer(l.poset(), &rep.witness).map_err(|e| format!("instance {i}: {e}"))?;
        let two = has_dim_le_2(l.poset());
        if !(1..=3).contains(&rep.dim) || rep.witness.len() != rep.dim || (rep.dim == 3) == two {
            return Err(format!(
                "instance {i}: dim {} with dim-2 test {two}",
                rep.dim
            ));
        }
        if rep.planar != Some(rep.dim <= 2) {
            return Err(format!("instance {i}: planarity verdict disagrees"));
        }
        *dims.entry(rep.dim).or_default() += 1;
        largest = largest.max(l.len());
        done += 1;
    }
    Ok(format!(
        "{HEADLINE_INSTANCES} RC-lattices up to n = {largest}, dims {dims:?}"
    ))
}

#[test]
fn acceptance() {
    let lines = vec![
        Line {
            id: 1,
            name: "L_r statistics",
            result: lr_statistics(),
        },
        Line {
            id: 2,
            name: "L_r dimension table",
            result: lr_dimension_table(),
        },
        Line {
            id: 3,
            name: "cascade realizer fixture",
            result: cascade_fixture(),
        },
        Line {
            id: 4,
            name: "oracle equivalence",
            result: oracle_equivalence(),
        },
        Line {
            id: 5,
            name: "classical values",
            result: classical_values(),
        },
        Line {
            id: 6,
            name: "adjunct sum theorems",
            result: adjunct_theorems(),
        },
        Line {
            id: 7,
            name: "block reduction",
            result: reduction_equivalence(),
        },
        Line {
            id: 8,
            name: "RC dimension at most three",
            result: headline(),
        },
    ];
    let mut unexpected = Vec::new();
    for line in &lines {
        match &line.result {
            Ok(detail) => println!("criterion {}: PASS  {}: {detail}", line.id, line.name),
            Err(detail) => {
                let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == line.id);
                println!("criterion {}: FAIL  {}: {detail}", line.id, line.name);
                match known {
                    Some((_, why)) => println!("    known: {why}"),
                    None => unexpected.push(line.id),
                }
            }
        }
    }
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
    for (id, _) in KNOWN_FAILURES {
        let line = lines.iter().find(|l| l.id == *id).expect("known id");
        assert!(
            line.result.is_err(),
            "criterion {id} now passes; drop it from KNOWN_FAILURES"
        );
    }
}

#[test]
fn cascade_fixture_fails_on_c5_c2() {
    let b = build_lr(5).unwrap();
    let r = parse_extensions(include_str!("fixtures/lr5_cascade.ext"), b.poset().len()).unwrap();
    assert_eq!(
        verify_realizer(b.poset(), &r),
        Err(RealizerFailure::NotARealizer {
            x: b.c(5),
            y: b.c(2)
        })
    );
    // the replacement realizer does verify
    assert_eq!(
        verify_realizer(b.poset(), &lr_realizer(&b).unwrap()),
        Ok(())
    );
}
