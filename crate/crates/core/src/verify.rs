//! Exhaustive check suites over all multipartitions of a given size.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chamber::{face_candidates, first_chamber_reps, min_clamp, ChamberOptions};
use crate::error::{Error, ParseError, Result};
use crate::order::adjacency::are_adjacent_with;
use crate::order::content::{asymptotic_representative, shifted_contents};
use crate::order::dominance::asymptotic_geq;
use crate::order::engine::{find_drop_witness, OrderEngine};
use crate::order::matrix::BitMatrix;
use crate::quiver::{
    build_connecting_orbit, check_orbit, det_section, fixed_point_report, swap_agrees,
    torus_weights, transition_matrix,
};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Order,
    Asymptotic,
    Quiver,
    Orbit,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Order, Suite::Asymptotic, Suite::Quiver, Suite::Orbit];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Order => "order",
            Suite::Asymptotic => "asymptotic",
            Suite::Quiver => "quiver",
            Suite::Orbit => "orbit",
        })
    }
}

impl FromStr for Suite {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| {
                ParseError::new(
                    s,
                    0,
                    "unknown suite; expected order, asymptotic, quiver or orbit",
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub r: usize,
    pub characters: usize,
    pub checks: u64,
    pub failures: Vec<Failure>,
    /// Observations that do not fail the suite.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, n: usize, r: usize) -> Self {
        SuiteReport {
            suite,
            n,
            r,
            characters: 0,
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                check: check.to_string(),
                detail: detail(),
            });
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Number of chamber representatives used by the order and orbit suites.
    pub chambers: usize,
    pub budget: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            chambers: 10,
            budget: 1 << 36,
        }
    }
}

fn universe_size(n: usize, r: usize) -> u128 {
    crate::partition::enumerate_multipartitions(n, r).len() as u128
}

/// Rough work estimate compared against [`VerifyOptions::budget`].
pub fn suite_cost(suite: Suite, n: usize, r: usize, opts: VerifyOptions) -> u128 {
    let big_n = universe_size(n, r);
    let cube = (n as u128).pow(3).max(1);
    let faces = face_candidates(
        r,
        ChamberOptions {
            clamp: min_clamp(n),
            include_walls: false,
        },
    );
    let chambers = opts.chambers as u128;
    match suite {
        Suite::Order => faces + chambers * big_n * big_n * big_n.div_ceil(64),
        Suite::Asymptotic => big_n * big_n * n.max(1) as u128,
        Suite::Quiver => big_n * big_n * cube,
        Suite::Orbit => faces + chambers * big_n * big_n * cube,
    }
}

pub fn run_suite(suite: Suite, n: usize, r: usize, opts: VerifyOptions) -> Result<SuiteReport> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let needed = suite_cost(suite, n, r, opts);
    if needed > opts.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    match suite {
        Suite::Order => order_suite(n, r, opts),
        Suite::Asymptotic => asymptotic_suite(n, r),
        Suite::Quiver => quiver_suite(n, r),
        Suite::Orbit => orbit_suite(n, r, opts),
    }
}

fn relation_pairs(
    m: &BitMatrix,
    engine: &OrderEngine,
    pred: impl Fn(usize, usize) -> bool,
) -> Option<String> {
    for a in 0..m.dim() {
        for b in 0..m.dim() {
            if !pred(a, b) {
                return Some(format!(
                    "{} vs {}",
                    engine.universe()[a],
                    engine.universe()[b]
                ));
            }
        }
    }
    None
}

/// Partial-order axioms for `≥` and `▷`, and `▷ ⊆ ≥`, on the first chambers.
fn order_suite(n: usize, r: usize, opts: VerifyOptions) -> Result<SuiteReport> {
    let engine = OrderEngine::new(n, r);
    let mut rep = SuiteReport::new(Suite::Order, n, r);
    let adj = engine.adjacency_matrix();
    rep.check(adj.is_symmetric(), "adjacency symmetric", String::new);
    rep.check(
        (0..adj.dim()).all(|a| !adj.get(a, a)),
        "adjacency irreflexive",
        String::new,
    );
    for chi in first_chamber_reps(n, r, min_clamp(n), opts.chambers)? {
        rep.characters += 1;
        let geq = engine.geq_matrix(&chi)?;
        let tri = engine.triangle_matrix_from_geq(&geq);
        for (name, m) in [("geq", &geq), ("triangle", &tri)] {
            rep.check(m.is_reflexive(), &format!("{name} reflexive"), || {
                chi.to_string()
            });
            rep.check(m.is_transitive(), &format!("{name} transitive"), || {
                chi.to_string()
            });
            rep.check(
                m.is_antisymmetric(),
                &format!("{name} antisymmetric"),
                || chi.to_string(),
            );
        }
        let bad = relation_pairs(&tri, &engine, |a, b| !tri.get(a, b) || geq.get(a, b));
        rep.check(bad.is_none(), "triangle implies geq", || {
            format!("chi = {chi}: {}", bad.unwrap())
        });
    }
    Ok(rep)
}

/// In the asymptotic chamber `≥`, `▷` and the partial-sum comparator agree,
/// and every strict pair has a one-box witness.
fn asymptotic_suite(n: usize, r: usize) -> Result<SuiteReport> {
    let engine = OrderEngine::new(n, r);
    let mut rep = SuiteReport::new(Suite::Asymptotic, n, r);
    let chi = asymptotic_representative(n, r);
    rep.characters = 1;
    let geq = engine.geq_matrix(&chi)?;
    let tri = engine.triangle_matrix_from_geq(&geq);
    let u = engine.universe();
    for a in 0..u.len() {
        for b in 0..u.len() {
            let g = geq.get(a, b);
            rep.check(g == tri.get(a, b), "geq iff triangle", || {
                format!("{} vs {}", u[a], u[b])
            });
            rep.check(
                g == asymptotic_geq(&u[a], &u[b]),
                "geq iff asymptotic_geq",
                || format!("{} vs {}", u[a], u[b]),
            );
            if g && a != b {
                let w = find_drop_witness(&u[a], &u[b], &chi)?;
                rep.check(w.is_some(), "drop witness", || {
                    format!("{} > {}", u[a], u[b])
                });
            }
        }
    }
    Ok(rep)
}

fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Fixed points satisfy the quiver conditions, weights are contents, and
/// determinant sections separate fixed points.
fn quiver_suite(n: usize, r: usize) -> Result<SuiteReport> {
    let engine = OrderEngine::new(n, r);
    let mut rep = SuiteReport::new(Suite::Quiver, n, r);
    let chi = asymptotic_representative(n, r);
    rep.characters = 1;
    let u = engine.universe();
    for lambda in u {
        let fp = fixed_point_report(lambda);
        rep.check(fp.adhm, "adhm", || lambda.to_string());
        rep.check(fp.stable, "stability", || lambda.to_string());
        rep.check(fp.j_zero, "j = 0", || lambda.to_string());
        rep.check(fp.commuting, "[b1, b2] = 0", || lambda.to_string());
        let weights = sorted(torus_weights(lambda, &chi, Rational::one())?.collapsed());
        let contents = shifted_contents(lambda, &chi)?;
        rep.check(weights == contents.values(), "weights are contents", || {
            lambda.to_string()
        });
    }
    for at in u {
        for m in u {
            let det = det_section(m, at)?;
            let expected = m == at;
            let ok = if expected {
                det.abs() == Rational::one()
            } else {
                det.is_zero()
            };
            rep.check(ok, "det_section nonzero iff equal", || {
                format!("section of {m} at {at} is {det}")
            });
            let t = transition_matrix(at, m)?;
            let (rows, cols) = (at.boxes(), m.boxes());
            let ok = t
                .nonzero_entries()
                .iter()
                .all(|&(a, b, v)| v == Rational::one() && rows[a] == cols[b])
                && cols
                    .iter()
                    .enumerate()
                    .filter_map(|(b, c)| rows.iter().position(|x| x == c).map(|a| (a, b)))
                    .all(|(a, b)| t.get(a, b) == Rational::one());
            rep.check(ok, "transition entries are 0 or 1 by box", || {
                format!("{at} -> {m}")
            });
        }
    }
    Ok(rep)
}

/// Connecting orbits for every adjacent pair on the first chambers.
fn orbit_suite(n: usize, r: usize, opts: VerifyOptions) -> Result<SuiteReport> {
    let engine = OrderEngine::new(n, r);
    let mut rep = SuiteReport::new(Suite::Orbit, n, r);
    let u = engine.universe();
    for (a, b, _) in engine.adjacent_pairs() {
        let ok = swap_agrees(&u[*a], &u[*b])?;
        rep.check(ok, "swap gives the same point", || {
            format!("{} / {}", u[*a], u[*b])
        });
    }
    for chi in first_chamber_reps(n, r, min_clamp(n), opts.chambers)? {
        rep.characters += 1;
        for (a, b, _) in engine.adjacent_pairs() {
            let w = are_adjacent_with(&u[*a], &u[*b], &chi)?.expect("listed pairs are adjacent");
            let (hi, lo) = if w.shift.is_some_and(|d| d.is_positive()) {
                (&u[*a], &u[*b])
            } else {
                (&u[*b], &u[*a])
            };
            let o = build_connecting_orbit(hi, lo, &chi)?;
            let report = check_orbit(&o)?;
            let label = format!("{} -> {} at chi = {chi}", report.lambda, report.mu);
            rep.check(report.passed(), "orbit", || {
                format!("{label}: {}", report.findings.join("; "))
            });
            if report.passed() && !report.findings.is_empty() {
                rep.notes
                    .push(format!("{label}: {}", report.findings.join("; ")));
            }
        }
    }
    Ok(rep)
}
