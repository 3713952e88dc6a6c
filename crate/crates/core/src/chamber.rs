//! Chambers of the character space and the exhaustive search for pairs with
//! `Λ ≥ M` but not `Λ ▷ M`.
//!
//! Comparing two shifted contents `χ_i + c` and `χ_j + c'` only asks on which
//! side of the integer `c' − c` the difference `χ_i − χ_j` lies, and
//! `|c' − c| ≤ 2(n−1)`. So the order `≥` is constant on the faces of the
//! arrangement of walls `χ_i − χ_j = m`, `|m| ≤ clamp`, once
//! `clamp ≥ 2(n−1)`. A face is described by one [`DiffRange`] per pair.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::content::{is_generic, CharVector};
use crate::order::engine::OrderEngine;
use crate::order::matrix::BitMatrix;
use crate::partition::Multipartition;
use crate::rational::Rational;

/// Where `χ_i − χ_j` is allowed to lie.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DiffRange {
    /// The open interval `(lo, hi)`; `None` is an infinite end.
    Open { lo: Option<i64>, hi: Option<i64> },
    /// Exactly `m`, a point on a wall.
    Exact(i64),
}

impl fmt::Display for DiffRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffRange::Open { lo, hi } => {
                match lo {
                    Some(v) => write!(f, "({v}, ")?,
                    None => write!(f, "(-inf, ")?,
                }
                match hi {
                    Some(v) => write!(f, "{v})"),
                    None => write!(f, "+inf)"),
                }
            }
            DiffRange::Exact(m) => write!(f, "{{{m}}}"),
        }
    }
}

/// A system of difference constraints `χ_i − χ_j ∈ range`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberSpec {
    pub r: usize,
    pub constraints: Vec<(usize, usize, DiffRange)>,
}

impl ChamberSpec {
    pub fn new(r: usize) -> Self {
        ChamberSpec {
            r,
            constraints: Vec::new(),
        }
    }

    pub fn with(mut self, i: usize, j: usize, range: DiffRange) -> Self {
        self.constraints.push((i, j, range));
        self
    }

    /// Whether `chi` satisfies every constraint.
    pub fn contains(&self, chi: &CharVector) -> bool {
        self.constraints.iter().all(|&(i, j, range)| {
            let d = chi.get(i) - chi.get(j);
            match range {
                DiffRange::Exact(m) => d == Rational::from_integer(m),
                DiffRange::Open { lo, hi } => {
                    lo.is_none_or(|v| d > Rational::from_integer(v))
                        && hi.is_none_or(|v| d < Rational::from_integer(v))
                }
            }
        })
    }
}

/// A bound `value − strict·ε` for an infinitesimal `ε > 0`; ordered
/// lexicographically, so strict inequalities become non-strict ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Bound {
    value: Rational,
    strict: i64,
}

impl Bound {
    fn closed(value: Rational) -> Self {
        Bound { value, strict: 0 }
    }

    fn open(value: Rational) -> Self {
        Bound { value, strict: 1 }
    }

    fn plus(self, other: Bound) -> Bound {
        Bound {
            value: self.value + other.value,
            strict: self.strict + other.strict,
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value
            .cmp(&other.value)
            .then_with(|| other.strict.cmp(&self.strict))
    }
}

/// `dist[a][b]` bounds `x_b − x_a` from above.
struct DifferenceSystem {
    dist: Vec<Vec<Option<Bound>>>,
}

impl DifferenceSystem {
    fn new(r: usize) -> Self {
        let mut dist = vec![vec![None; r]; r];
        for (a, row) in dist.iter_mut().enumerate() {
            row[a] = Some(Bound::closed(Rational::zero()));
        }
        DifferenceSystem { dist }
    }

    /// `x_b − x_a ≤ w` (or `<` when strict).
    fn add_edge(&mut self, a: usize, b: usize, w: Bound) {
        let cur = &mut self.dist[a][b];
        if cur.is_none_or(|c| w < c) {
            *cur = Some(w);
        }
    }

    fn add(&mut self, i: usize, j: usize, range: DiffRange) {
        match range {
            DiffRange::Exact(m) => {
                let m = Rational::from_integer(m);
                self.add_edge(j, i, Bound::closed(m));
                self.add_edge(i, j, Bound::closed(-m));
            }
            DiffRange::Open { lo, hi } => {
                if let Some(h) = hi {
                    self.add_edge(j, i, Bound::open(Rational::from_integer(h)));
                }
                if let Some(l) = lo {
                    self.add_edge(i, j, Bound::open(Rational::from_integer(-l)));
                }
            }
        }
    }

    fn fix(&mut self, v: usize, anchor: usize, value: Rational) {
        self.add_edge(anchor, v, Bound::closed(value));
        self.add_edge(v, anchor, Bound::closed(-value));
    }

    /// Floyd–Warshall; false iff a negative cycle makes the system infeasible.
    fn close(&mut self) -> bool {
        let r = self.dist.len();
        for k in 0..r {
            for a in 0..r {
                let Some(ak) = self.dist[a][k] else { continue };
                for b in 0..r {
                    let Some(kb) = self.dist[k][b] else { continue };
                    let via = ak.plus(kb);
                    if self.dist[a][b].is_none_or(|c| via < c) {
                        self.dist[a][b] = Some(via);
                    }
                }
            }
        }
        (0..r).all(|a| self.dist[a][a].is_some_and(|d| d >= Bound::closed(Rational::zero())))
    }
}

/// An exact character with `χ_r = 0` satisfying every constraint, or `None`
/// when the constraints are contradictory.
///
/// Feasibility is decided by negative-cycle detection on the difference
/// graph, with strict inequalities carried as infinitesimals. Entries are
/// then fixed one at a time at the midpoint of their remaining feasible
/// interval (or half a unit inside a half-infinite one).
#[allow(clippy::needless_range_loop)]
pub fn chamber_representative(spec: &ChamberSpec) -> Option<CharVector> {
    let r = spec.r;
    if r == 0 {
        return None;
    }
    let mut sys = DifferenceSystem::new(r);
    for &(i, j, range) in &spec.constraints {
        assert!(
            i < r && j < r && i != j,
            "constraint on ({i}, {j}) out of range"
        );
        sys.add(i, j, range);
    }
    if !sys.close() {
        return None;
    }
    let anchor = r - 1;
    let half = Rational::new(1, 2);
    let mut values = vec![Rational::zero(); r];
    for v in 0..anchor {
        let hi = sys.dist[anchor][v];
        let lo = sys.dist[v][anchor].map(|b| Bound {
            value: -b.value,
            strict: b.strict,
        });
        let value = match (lo, hi) {
            (Some(l), Some(h)) if l.value == h.value => l.value,
            (Some(l), Some(h)) => (l.value + h.value) * half,
            (Some(l), None) => l.value + half,
            (None, Some(h)) => h.value - half,
            (None, None) => Rational::zero(),
        };
        values[v] = value;
        sys.fix(v, anchor, value);
        let ok = sys.close();
        debug_assert!(ok, "fixing a point inside the projection keeps feasibility");
    }
    let chi = CharVector::new(values).expect("r >= 1");
    debug_assert!(spec.contains(&chi));
    Some(chi)
}

/// The face of the wall arrangement containing `chi`, as one range per pair `i < j`.
pub fn face_key(chi: &CharVector, clamp: i64) -> Vec<DiffRange> {
    let r = chi.r();
    let mut key = Vec::with_capacity(r * (r - 1) / 2);
    for i in 0..r {
        for j in i + 1..r {
            let d = chi.get(i) - chi.get(j);
            let range = if d > Rational::from_integer(clamp) {
                DiffRange::Open {
                    lo: Some(clamp),
                    hi: None,
                }
            } else if d < Rational::from_integer(-clamp) {
                DiffRange::Open {
                    lo: None,
                    hi: Some(-clamp),
                }
            } else if let Some(m) = d.as_integer() {
                DiffRange::Exact(m)
            } else {
                let k = d.floor();
                DiffRange::Open {
                    lo: Some(k),
                    hi: Some(k + 1),
                }
            };
            key.push(range);
        }
    }
    key
}

fn spec_from_key(r: usize, key: &[DiffRange]) -> ChamberSpec {
    let mut spec = ChamberSpec::new(r);
    let mut k = 0;
    for i in 0..r {
        for j in i + 1..r {
            spec.constraints.push((i, j, key[k]));
            k += 1;
        }
    }
    spec
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChamberOptions {
    /// Walls `χ_i − χ_j = m` for `|m| ≤ clamp` are resolved.
    pub clamp: i64,
    /// Also visit generic points on walls (`|m| ≥ n`), not just open chambers.
    pub include_walls: bool,
}

impl ChamberOptions {
    pub fn for_size(n: usize) -> Self {
        ChamberOptions {
            clamp: min_clamp(n),
            include_walls: false,
        }
    }
}

/// `2(n−1)`, the largest offset between two box contents.
pub fn min_clamp(n: usize) -> i64 {
    2 * (n as i64 - 1).max(0)
}

/// Keys of every generic face, sorted.
///
/// Integer parts range over `[−L, L]` with `L = (r−1)(clamp+1)`: any gap
/// wider than `clamp + 1` between consecutive sorted entries can be shrunk
/// by an integer without changing the face. Fractional parts range over
/// the weak orders of `r` points on the circle, realised as `level / r`.
fn generic_face_keys(n: usize, r: usize, opts: ChamberOptions) -> Vec<Vec<DiffRange>> {
    let free = r - 1;
    let span = free as i64 * (opts.clamp + 1);
    let width = (2 * span + 1) as usize;
    let levels = r; // fractional levels 0/r, 1/r, …, (r−1)/r
    let mut keys = HashSet::new();
    let total_int = width.pow(free as u32);
    let total_frac = levels.pow(free as u32);
    let mut entries = vec![Rational::zero(); r];
    for fi in 0..total_frac {
        let mut f = fi;
        let mut frac = vec![0usize; free];
        for slot in frac.iter_mut() {
            *slot = f % levels;
            f /= levels;
        }
        if !opts.include_walls {
            // open chambers: all fractional parts distinct and nonzero
            let mut seen = vec![false; levels];
            seen[0] = true;
            if frac.iter().any(|&l| std::mem::replace(&mut seen[l], true)) {
                continue;
            }
        }
        for ii in 0..total_int {
            let mut t = ii;
            for (v, &level) in frac.iter().enumerate() {
                let a = (t % width) as i64 - span;
                t /= width;
                entries[v] = Rational::from_integer(a) + Rational::new(level as i64, levels as i64);
            }
            let chi = CharVector::new(entries.clone()).expect("r >= 1");
            if !is_generic(&chi, n) {
                continue;
            }
            keys.insert(face_key(&chi, opts.clamp));
        }
    }
    let mut keys: Vec<_> = keys.into_iter().collect();
    keys.sort();
    keys
}

/// One chamber of the `≥` order: a representative and its signature.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub index: usize,
    pub chi: CharVector,
    pub face: Vec<DiffRange>,
    pub digest: [u8; 32],
}

/// Number of candidate points examined by the face enumeration.
pub fn face_candidates(r: usize, opts: ChamberOptions) -> u128 {
    let free = r.saturating_sub(1) as u32;
    let width = (2 * free as i64 * (opts.clamp + 1) + 1) as u128;
    width.pow(free) * (r as u128).pow(free)
}

fn check_clamp(n: usize, opts: ChamberOptions) -> Result<()> {
    let minimum = min_clamp(n);
    if opts.clamp < minimum {
        return Err(Error::ClampTooSmall {
            clamp: opts.clamp,
            minimum,
        });
    }
    Ok(())
}

/// Face keys for `engine`'s `(n, r)`; the single empty key when `r = 1`.
pub fn face_keys(engine: &OrderEngine, opts: ChamberOptions) -> Result<Vec<Vec<DiffRange>>> {
    check_clamp(engine.n(), opts)?;
    if engine.r() == 1 {
        return Ok(vec![Vec::new()]);
    }
    Ok(generic_face_keys(engine.n(), engine.r(), opts))
}

/// Walks `keys` in order, handing each new `≥` order (by signature) to
/// `visit` together with its matrix, until `visit` breaks.
pub fn for_each_chamber(
    engine: &OrderEngine,
    keys: &[Vec<DiffRange>],
    clamp: i64,
    mut visit: impl FnMut(&Chamber, &BitMatrix) -> Result<ControlFlow<()>>,
) -> Result<()> {
    let (n, r) = (engine.n(), engine.r());
    let mut seen = HashSet::new();
    let mut index = 0;
    for key in keys {
        let chi = if r == 1 {
            CharVector::from_integers(&[0])
        } else {
            let spec = spec_from_key(r, key);
            let chi = chamber_representative(&spec).expect("face keys come from realised points");
            assert_eq!(&face_key(&chi, clamp), key, "representative left its face");
            chi
        };
        assert!(is_generic(&chi, n));
        let geq = engine.geq_matrix(&chi)?;
        let digest = geq.digest();
        if !seen.insert(digest) {
            continue;
        }
        let chamber = Chamber {
            index,
            chi,
            face: key.clone(),
            digest,
        };
        index += 1;
        if visit(&chamber, &geq)?.is_break() {
            break;
        }
    }
    Ok(())
}

/// Generic representatives, one per distinct `≥` order, in face-key order.
pub fn enumerate_chamber_reps(n: usize, r: usize, clamp: i64) -> Result<Vec<CharVector>> {
    first_chamber_reps(n, r, clamp, usize::MAX)
}

/// The first `limit` representatives of [`enumerate_chamber_reps`].
pub fn first_chamber_reps(n: usize, r: usize, clamp: i64, limit: usize) -> Result<Vec<CharVector>> {
    let engine = OrderEngine::new(n, r);
    let opts = ChamberOptions {
        clamp,
        include_walls: false,
    };
    let keys = face_keys(&engine, opts)?;
    let mut out = Vec::new();
    for_each_chamber(&engine, &keys, clamp, |c, _| {
        if out.len() == limit {
            return Ok(ControlFlow::Break(()));
        }
        out.push(c.chi.clone());
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(out)
}

/// How an element directly below `Λ` compares with `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerNeighbour {
    pub multipartition: Multipartition,
    /// `Λ′ ≥ M`
    pub above: bool,
    /// `M ≥ Λ′`
    pub below: bool,
}

/// A pair with `Λ ≥ M` and not `Λ ▷ M` under `chi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub n: usize,
    pub r: usize,
    pub chamber: usize,
    pub chi: CharVector,
    pub lambda: Multipartition,
    pub mu: Multipartition,
    /// Every `Λ′` adjacent to `Λ` with `Λ ▷ Λ′`.
    pub lower_neighbours: Vec<LowerNeighbour>,
}

/// All pairs with `Λ ≥ M`, not `Λ ▷ M`, under one character.
pub fn scan_character(
    engine: &OrderEngine,
    chi: &CharVector,
    chamber: usize,
) -> Result<Vec<CounterexampleReport>> {
    let geq = engine.geq_matrix(chi)?;
    Ok(scan_with_geq(engine, chi, chamber, &geq))
}

fn scan_with_geq(
    engine: &OrderEngine,
    chi: &CharVector,
    chamber: usize,
    geq: &BitMatrix,
) -> Vec<CounterexampleReport> {
    let tri = engine.triangle_matrix_from_geq(geq);
    let gap = geq.and_not(&tri);
    let universe = engine.universe();
    let mut out = Vec::new();
    for a in 0..engine.len() {
        for b in gap.row_ones(a) {
            let lower_neighbours = engine
                .neighbours(a)
                .iter()
                .filter(|&&c| geq.get(a, c))
                .map(|&c| LowerNeighbour {
                    multipartition: universe[c].clone(),
                    above: geq.get(c, b),
                    below: geq.get(b, c),
                })
                .collect();
            out.push(CounterexampleReport {
                n: engine.n(),
                r: engine.r(),
                chamber,
                chi: chi.clone(),
                lambda: universe[a].clone(),
                mu: universe[b].clone(),
                lower_neighbours,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub n: usize,
    pub r: usize,
    pub clamp: i64,
    pub include_walls: bool,
    pub faces: usize,
    pub chambers: usize,
    pub reports: usize,
    /// `(chamber index, number of reports)` for chambers with findings.
    pub per_chamber: Vec<(usize, usize)>,
}

/// Default cap on search work, see [`search_with`].
pub const DEFAULT_BUDGET: u128 = 1 << 42;

/// Scans every chamber for pairs with `≥` but not `▷`, streaming findings.
///
/// Work is measured as face candidates plus `faces × |universe|²`; both
/// parts are checked against `budget` before the expensive phase starts.
pub fn search_with(
    n: usize,
    r: usize,
    opts: ChamberOptions,
    budget: u128,
    mut emit: impl FnMut(&CounterexampleReport),
) -> Result<SearchSummary> {
    let candidates = face_candidates(r, opts);
    if candidates > budget {
        return Err(Error::BudgetExceeded {
            needed: candidates,
            budget,
        });
    }
    let engine = OrderEngine::new(n, r);
    let keys = face_keys(&engine, opts)?;
    let pairs = (engine.len() as u128).pow(2);
    let needed = candidates + keys.len() as u128 * pairs;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut summary = SearchSummary {
        n,
        r,
        clamp: opts.clamp,
        include_walls: opts.include_walls,
        faces: keys.len(),
        chambers: 0,
        reports: 0,
        per_chamber: Vec::new(),
    };
    for_each_chamber(&engine, &keys, opts.clamp, |chamber, geq| {
        summary.chambers += 1;
        let found = scan_with_geq(&engine, &chamber.chi, chamber.index, geq);
        if !found.is_empty() {
            summary.per_chamber.push((chamber.index, found.len()));
            summary.reports += found.len();
            found.iter().for_each(&mut emit);
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(summary)
}

/// [`search_with`] with default options, collecting the reports.
pub fn counterexample_search(n: usize, r: usize) -> Result<Vec<CounterexampleReport>> {
    let mut out = Vec::new();
    search_with(n, r, ChamberOptions::for_size(n), DEFAULT_BUDGET, |rep| {
        out.push(rep.clone())
    })?;
    Ok(out)
}
