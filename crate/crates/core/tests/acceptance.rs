mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use multiorder::chamber::{
    counterexample_search, enumerate_chamber_reps, first_chamber_reps, min_clamp,
};
use multiorder::order::{
    are_adjacent_with, asymptotic_geq, asymptotic_representative, find_drop_witness, geq,
    is_generic, shifted_contents, triangle, CharVector, OrderEngine,
};
use multiorder::quiver::{
    build_connecting_orbit, build_fixed_point, check_adhm, check_orbit, check_stability,
    det_section, torus_weights, RatMatrix,
};
use multiorder::{enumerate_multipartitions, Cell, Multipartition, Rational};

use common::{adjacent_oracle, dominance, geq_oracle, random_chi, triangle_oracle};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tensor(rows: usize, cols: usize, terms: &[(usize, usize)]) -> RatMatrix {
    let mut m = RatMatrix::zeros(rows, cols);
    for &(u, v) in terms {
        m.set(v - 1, u - 1, Rational::one());
    }
    m
}

fn golden_contents() -> Outcome {
    let chi: CharVector = "5,2,3/2,-2".parse().unwrap();
    let got = shifted_contents(&mp("(2,1)|(0)|(1,1,1)|(2)"), &chi).map_err(|e| e.to_string())?;
    let want: Vec<Rational> = ["6", "5", "4", "3/2", "1/2", "-1/2", "-1", "-2"]
        .map(rat)
        .to_vec();
    ensure(got.values() == want.as_slice(), || {
        format!("got {:?}", got.values())
    })?;
    Ok("8 contents exact".into())
}

fn golden_fixed_point() -> Outcome {
    let lambda = mp("(2,1)|(0)|(1,1,1)|(2)");
    let p = build_fixed_point(&lambda);
    ensure(p.b1 == tensor(8, 8, &[(1, 2), (7, 8)]), || {
        format!("B1 = {:?}", p.b1)
    })?;
    ensure(p.b2 == tensor(8, 8, &[(1, 3), (4, 5), (5, 6)]), || {
        format!("B2 = {:?}", p.b2)
    })?;
    ensure(p.i == tensor(8, 4, &[(1, 1), (3, 4), (4, 7)]), || {
        format!("i = {:?}", p.i)
    })?;
    ensure(p.j == RatMatrix::zeros(4, 8), || "j is not zero".into())?;
    let t = torus_weights(&lambda, &"5,2,3/2,-2".parse().unwrap(), Rational::one())
        .map_err(|e| e.to_string())?;
    let want = [
        (Cell::new(0, 0, 0), "χ1"),
        (Cell::new(0, 1, 0), "χ1 + φ1"),
        (Cell::new(0, 0, 1), "χ1 + φ2"),
        (Cell::new(2, 0, 0), "χ3"),
        (Cell::new(2, 0, 1), "χ3 + φ2"),
        (Cell::new(2, 0, 2), "χ3 + 2φ2"),
        (Cell::new(3, 0, 0), "χ4"),
        (Cell::new(3, 1, 0), "χ4 + φ1"),
    ];
    for (cell, text) in want {
        let e = t
            .entries
            .iter()
            .find(|e| e.cell == cell)
            .ok_or(format!("no weight for {cell}"))?;
        ensure(e.symbolic() == text, || {
            format!("{cell}: {} instead of {text}", e.symbolic())
        })?;
    }
    Ok("B1, B2, i, j and 8 weights match".into())
}

fn sandwich_lower_bound() -> Outcome {
    let mut characters = BTreeSet::new();
    let mut pairs = 0u64;
    for r in 1..=3 {
        for n in 0..=5 {
            let engine = OrderEngine::new(n, r);
            for chi in enumerate_chamber_reps(n, r, min_clamp(n)).map_err(|e| e.to_string())? {
                characters.insert(chi.to_string());
                let g = engine.geq_matrix(&chi).map_err(|e| e.to_string())?;
                let t = engine.triangle_matrix_from_geq(&g);
                for a in 0..engine.len() {
                    for b in 0..engine.len() {
                        pairs += 1;
                        ensure(!t.get(a, b) || g.get(a, b), || {
                            format!(
                                "{} ▷ {} without ≥ at {chi}",
                                engine.universe()[a],
                                engine.universe()[b]
                            )
                        })?;
                    }
                }
            }
        }
    }
    ensure(characters.len() >= 10, || {
        format!("only {} characters", characters.len())
    })?;
    Ok(format!(
        "{pairs} ordered pairs over {} characters",
        characters.len()
    ))
}

fn asymptotic_equivalence() -> Outcome {
    let mut witnesses = 0u64;
    for r in 1..=3 {
        for n in 0..=5 {
            let chi = asymptotic_representative(n, r);
            let want = |l: i64| {
                Rational::from_integer((r as i64 - l) * (n as i64 + 1))
                    + Rational::new(r as i64 - l, r as i64)
            };
            ensure((1..=r).all(|l| chi.get(l - 1) == want(l as i64)), || {
                format!("representative {chi}")
            })?;
            let engine = OrderEngine::new(n, r);
            let g = engine.geq_matrix(&chi).map_err(|e| e.to_string())?;
            let t = engine.triangle_matrix_from_geq(&g);
            let u = engine.universe();
            for a in 0..u.len() {
                for b in 0..u.len() {
                    let asym = asymptotic_geq(&u[a], &u[b]);
                    ensure(g.get(a, b) == t.get(a, b) && t.get(a, b) == asym, || {
                        format!(
                            "{} vs {}: geq {} triangle {} asymptotic {asym}",
                            u[a],
                            u[b],
                            g.get(a, b),
                            t.get(a, b)
                        )
                    })?;
                    if a != b && g.get(a, b) {
                        let w = find_drop_witness(&u[a], &u[b], &chi).map_err(|e| e.to_string())?;
                        let w = w.ok_or(format!("no drop witness for {} > {}", u[a], u[b]))?;
                        ensure(
                            adjacent_oracle(&u[a], &w) && g.get(a, engine.index_of(&w).unwrap()),
                            || format!("bad witness {w} for {} > {}", u[a], u[b]),
                        )?;
                        ensure(g.get(engine.index_of(&w).unwrap(), b), || {
                            format!("witness {w} not above {}", u[b])
                        })?;
                        witnesses += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{witnesses} strict pairs, each with a drop witness"
    ))
}

fn six_box_counterexample() -> Outcome {
    let chi: CharVector = "0,1/2,17/8,9/4".parse().unwrap();
    let (lambda, mu) = (mp("(0)|(3)|(1,1)|(1)"), mp("(3)|(0)|(1)|(1,1)"));
    ensure(is_generic(&chi, 6), || "χ is not generic".into())?;
    ensure(
        geq(&lambda, &mu, &chi).unwrap() && geq_oracle(&lambda, &mu, &chi),
        || "Λ ≥ M fails".into(),
    )?;
    ensure(!triangle(&lambda, &mu, &chi).unwrap(), || {
        "Λ ▷ M holds".into()
    })?;
    ensure(!triangle_oracle(&lambda, &mu, &chi), || {
        "search oracle finds Λ ▷ M".into()
    })?;
    let lower: Vec<_> = enumerate_multipartitions(6, 4)
        .into_iter()
        .filter(|l| l != &lambda)
        .filter(|l| {
            are_adjacent_with(&lambda, l, &chi)
                .unwrap()
                .is_some_and(|w| w.shift.is_some_and(|d| d.is_positive()))
        })
        .collect();
    ensure(!lower.is_empty(), || "Λ has no lower neighbours".into())?;
    for l in &lower {
        ensure(
            adjacent_oracle(&lambda, l) && geq_oracle(&lambda, l, &chi),
            || format!("{l} is not below Λ"),
        )?;
        let ok = !geq(l, &mu, &chi).unwrap() || geq(&mu, l, &chi).unwrap();
        ensure(ok, || format!("{l} lies strictly between"))?;
    }
    Ok(format!("{} lower neighbours, none above M", lower.len()))
}

fn minimality() -> Outcome {
    let mut sizes = Vec::new();
    for r in 1..=4 {
        for n in 0..=5 {
            sizes.push((n, r));
        }
    }
    sizes.push((6, 1));
    sizes.push((6, 2));
    sizes.push((6, 3));
    let mut found = Vec::new();
    for (n, r) in sizes {
        let reports = counterexample_search(n, r).map_err(|e| format!("n={n}, r={r}: {e}"))?;
        if let Some(first) = reports.first() {
            found.push(format!(
                "n={n}, r={r}: {} reports, e.g. {} ≥ {} without ▷ at χ = {}",
                reports.len(),
                first.lambda,
                first.mu,
                first.chi
            ));
        }
    }
    if found.is_empty() {
        Ok("every search is empty".into())
    } else {
        Err(format!("discrepancy: {}", found.join("; ")))
    }
}

fn quiver_suite() -> Outcome {
    let mut points = 0u64;
    for r in 1..=3 {
        for n in 0..=6 {
            let chi = asymptotic_representative(n, r);
            for lambda in enumerate_multipartitions(n, r) {
                let p = build_fixed_point(&lambda);
                ensure(check_adhm(&p).unwrap(), || {
                    format!("ADHM fails at {lambda}")
                })?;
                ensure(check_stability(&p), || format!("unstable at {lambda}"))?;
                ensure(p.j.is_zero(), || format!("j ≠ 0 at {lambda}"))?;
                ensure((&(&p.b1 * &p.b2) - &(&p.b2 * &p.b1)).is_zero(), || {
                    format!("[B1,B2] ≠ 0 at {lambda}")
                })?;
                let mut w = torus_weights(&lambda, &chi, Rational::one())
                    .unwrap()
                    .collapsed();
                w.sort_unstable_by(|x, y| y.cmp(x));
                let mut c = common::contents(&lambda, &chi);
                c.sort_unstable_by(|x, y| y.cmp(x));
                ensure(w == c, || {
                    format!("weights differ from contents at {lambda}")
                })?;
                points += 1;
            }
        }
    }
    let mut sections = 0u64;
    for r in 1..=3 {
        for n in 0..=4 {
            let all = enumerate_multipartitions(n, r);
            for at in &all {
                for m in &all {
                    let d = det_section(m, at).unwrap();
                    ensure(d.is_zero() != (m == at), || {
                        format!("det_section({m}, {at}) = {d}")
                    })?;
                    sections += 1;
                }
            }
        }
    }
    Ok(format!("{points} fixed points, {sections} sections"))
}

fn orbit_characters(n: usize, r: usize) -> Vec<CharVector> {
    let mut reps = first_chamber_reps(n, r, min_clamp(n), 5).unwrap();
    let mut k = 1;
    while reps.len() < 5 {
        let base = reps[(k - 1) % reps.len()].clone();
        reps.push(base.shifted(Rational::from_integer(k as i64)));
        k += 1;
    }
    reps
}

fn orbit_suite() -> Outcome {
    let (mut passed, mut findings) = (0u64, Vec::new());
    for r in 1..=2 {
        for n in 1..=4 {
            let engine = OrderEngine::new(n, r);
            let u = engine.universe();
            for chi in orbit_characters(n, r) {
                ensure(is_generic(&chi, n), || format!("{chi} is not generic"))?;
                for (a, b, _) in engine.adjacent_pairs() {
                    let w = are_adjacent_with(&u[*a], &u[*b], &chi).unwrap().unwrap();
                    let d = w.shift.ok_or("adjacent pair without a shift")?;
                    let (hi, lo) = if d.is_positive() {
                        (&u[*a], &u[*b])
                    } else {
                        (&u[*b], &u[*a])
                    };
                    let report = build_connecting_orbit(hi, lo, &chi).and_then(|o| check_orbit(&o));
                    match report {
                        Ok(rep) if rep.passed() => passed += 1,
                        Ok(rep) => findings.push(format!(
                            "{hi} -> {lo} at {chi}: {}",
                            rep.findings.join("; ")
                        )),
                        Err(e) => findings.push(format!("{hi} -> {lo} at {chi}: {e}")),
                    }
                }
            }
        }
    }
    if findings.is_empty() {
        Ok(format!("{passed} oriented pairs"))
    } else {
        Err(format!(
            "{} findings, first: {}",
            findings.len(),
            findings[0]
        ))
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut characters = 0;
    while characters < 25 {
        let chi = random_chi(&mut rng, 3, 8, 8);
        if !is_generic(&chi, 4) {
            continue;
        }
        characters += 1;
        for r in 1..=3 {
            let sub = CharVector::new(chi.entries()[..r].to_vec()).unwrap();
            for n in 0..=4 {
                let all = enumerate_multipartitions(n, r);
                for a in &all {
                    for b in &all {
                        ensure(geq(a, b, &sub).unwrap() == geq_oracle(a, b, &sub), || {
                            format!("{a} vs {b} at {sub}")
                        })?;
                    }
                }
            }
        }
    }
    let zero = CharVector::from_integers(&[0]);
    for n in 0..=8 {
        let all = enumerate_multipartitions(n, 1);
        for a in &all {
            for b in &all {
                let classical = dominance(a.component(0).rows(), b.component(0).rows());
                ensure(geq(a, b, &zero).unwrap() == classical, || {
                    format!("{a} vs {b}")
                })?;
            }
        }
    }
    Ok(format!(
        "{characters} random characters, dominance to n = 8"
    ))
}

fn genericity_boundary() -> Outcome {
    let chi: CharVector = "5,2,3/2,-2".parse().unwrap();
    ensure(!is_generic(&chi, 8), || "accepted at n = 8".into())?;
    ensure((0..=3).all(|n| is_generic(&chi, n)), || {
        "rejected at some n ≤ 3".into()
    })?;
    ensure(!is_generic(&chi, 4), || "accepted at n = 4".into())?;
    let collides = |chi: &CharVector, n: usize, r: usize| {
        let mut seen = BTreeSet::new();
        enumerate_multipartitions(n, r)
            .iter()
            .any(|m| !seen.insert(shifted_contents(m, chi).unwrap().values().to_vec()))
    };
    let bad = CharVector::from_integers(&[0, 1]);
    ensure(!is_generic(&bad, 2) && collides(&bad, 2, 2), || {
        "no collision for (0,1) at n = 2".into()
    })?;
    let mut tested = 0;
    for r in 1..=3 {
        for n in 0..=4 {
            for chi in enumerate_chamber_reps(n, r, min_clamp(n)).unwrap() {
                ensure(!collides(&chi, n, r), || {
                    format!("collision at {chi}, n = {n}")
                })?;
                tested += 1;
            }
        }
    }
    Ok(format!("{tested} generic characters without collisions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden contents", golden_contents),
        ("golden fixed point", golden_fixed_point),
        ("triangle implies geq", sandwich_lower_bound),
        ("asymptotic equivalence", asymptotic_equivalence),
        ("six-box counterexample", six_box_counterexample),
        ("minimality of the counterexample", minimality),
        ("quiver suite", quiver_suite),
        ("orbit suite", orbit_suite),
        ("oracle equivalence", oracle_equivalence),
        ("genericity boundary", genericity_boundary),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS ({secs:.2}s) {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL ({secs:.2}s) {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
