//! Perturbations of a fixed point that flow between two adjacent fixed points.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::adjacency::{are_adjacent, are_adjacent_with, AdjacencyWitness};
use crate::order::content::{require_generic, CharVector};
use crate::partition::{Cell, Multipartition};
use crate::quiver::point::{build_fixed_point, check_adhm, check_stability, QuiverPoint};
use crate::quiver::weights::torus_weights;
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OrbitBranch {
    /// The moved boxes fill a whole component of `M`; only `i` is perturbed.
    WholeComponent { framing: usize, target: Cell },
    /// `B₁` and `B₂` are perturbed at the border boxes.
    Border,
}

/// A perturbation `C` of the fixed point of `Λ` together with its bookkeeping.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub lambda: Multipartition,
    pub mu: Multipartition,
    pub witness: AdjacencyWitness,
    pub base: QuiverPoint,
    pub c: QuiverPoint,
    pub branch: OrbitBranch,
    /// Moved boxes of `Λ` whose top or left neighbour is fixed (or missing).
    pub border: Vec<Cell>,
    /// Moved boxes of `Λ` whose top and left neighbours were both moved.
    pub inner: Vec<Cell>,
    /// Border boxes that received no perturbation term.
    pub bare_border: Vec<Cell>,
}

impl Perturbation {
    pub fn point(&self) -> QuiverPoint {
        self.base.plus(&self.c)
    }
}

#[derive(Clone, Debug)]
pub struct ConnectingOrbit {
    pub perturbation: Perturbation,
    pub chi: CharVector,
    pub d: Rational,
}

/// The perturbation of the fixed point of `Λ` toward the adjacent `M`,
/// without regard to which of the two is larger.
pub fn perturbation(lambda: &Multipartition, mu: &Multipartition) -> Result<Perturbation> {
    let witness = are_adjacent(lambda, mu)?
        .ok_or_else(|| Error::Precondition(format!("{lambda} and {mu} are not adjacent")))?;
    let base = build_fixed_point(lambda);
    let n = base.dim_v();
    let mut c = QuiverPoint::zero(n, lambda.r());
    c.basis_labels = base.basis_labels.clone();
    let index = |cell: Cell| {
        lambda
            .box_index(cell)
            .expect("box of the reference multipartition")
    };

    let moved = &witness.removed;
    let is_moved = |col: Option<usize>, row: Option<usize>, comp: usize| match (col, row) {
        (Some(x), Some(y)) => moved.contains(&Cell::new(comp, x, y)),
        _ => false,
    };
    let (mut border, mut inner) = (Vec::new(), Vec::new());
    for &b in moved {
        let top = is_moved(Some(b.col), b.row.checked_sub(1), b.comp);
        let left = is_moved(b.col.checked_sub(1), Some(b.row), b.comp);
        if top && left {
            inner.push(b);
        } else {
            border.push(b);
        }
    }

    let k = witness.to_comp();
    let whole = mu.component(k).size() == witness.len();
    let mut bare_border = Vec::new();
    let branch = if whole {
        let target = witness.removed[0];
        c.i.set(index(target), k, Rational::one());
        OrbitBranch::WholeComponent { framing: k, target }
    } else {
        let fixed = |cell: Cell| lambda.contains(cell) && mu.contains(cell);
        for &b in &border {
            let image = witness.image(b).expect("moved box has an image");
            let mut touched = false;
            if let Some(x) = image.col.checked_sub(1) {
                let left = Cell::new(image.comp, x, image.row);
                if fixed(left) {
                    c.b1.set(index(b), index(left), Rational::one());
                    touched = true;
                }
            }
            if let Some(y) = image.row.checked_sub(1) {
                let above = Cell::new(image.comp, image.col, y);
                if fixed(above) {
                    c.b2.set(index(b), index(above), Rational::one());
                    touched = true;
                }
            }
            if !touched {
                bare_border.push(b);
            }
        }
        OrbitBranch::Border
    };

    Ok(Perturbation {
        lambda: lambda.clone(),
        mu: mu.clone(),
        witness,
        base,
        c,
        branch,
        border,
        inner,
        bare_border,
    })
}

/// The orbit from `Λ` down to `M`; requires a positive content shift `d`.
pub fn build_connecting_orbit(
    lambda: &Multipartition,
    mu: &Multipartition,
    chi: &CharVector,
) -> Result<ConnectingOrbit> {
    require_generic(chi, lambda.size())?;
    let witness = are_adjacent_with(lambda, mu, chi)?
        .ok_or_else(|| Error::Precondition(format!("{lambda} and {mu} are not adjacent")))?;
    let d = witness
        .shift
        .expect("shift filled for a supplied character");
    if !d.is_positive() {
        return Err(Error::Precondition(format!(
            "content shift from {lambda} to {mu} is {d}; orient the pair so it is positive"
        )));
    }
    Ok(ConnectingOrbit {
        perturbation: perturbation(lambda, mu)?,
        chi: chi.clone(),
        d,
    })
}

/// Weight of one nonzero entry of `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryWeight {
    pub map: &'static str,
    /// A box label for `b1`/`b2` entries, `w<l>` for `i` entries.
    pub source: String,
    pub target: Cell,
    pub weight: Rational,
}

impl fmt::Display for EntryWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} -> {}: weight {}",
            self.map, self.source, self.target, self.weight
        )
    }
}

/// Weights of the nonzero entries of `c` against the fixed point of `Λ`.
///
/// A `B_α` entry from `e_u` to `e_v` weighs `φ_α + wt(u) − wt(v)` with
/// `φ₁ = 1`, `φ₂ = −1`; an `i` entry from `w_l` to `e_v` weighs
/// `χ_l − wt(v)`. With this convention the fixed point itself has weight
/// zero everywhere.
pub fn entry_weights(
    lambda: &Multipartition,
    c: &QuiverPoint,
    chi: &CharVector,
) -> Result<Vec<EntryWeight>> {
    let table = torus_weights(lambda, chi, Rational::one())?;
    let labels = lambda.boxes();
    let mut out = Vec::new();
    for (map, m, phi) in [("b1", &c.b1, 1), ("b2", &c.b2, -1)] {
        for (v, u, _) in m.nonzero_entries() {
            out.push(EntryWeight {
                map,
                source: labels[u].to_string(),
                target: labels[v],
                weight: table.weight(u) - table.weight(v) + phi,
            });
        }
    }
    for (v, l, _) in c.i.nonzero_entries() {
        out.push(EntryWeight {
            map: "i",
            source: format!("w{}", l + 1),
            target: labels[v],
            weight: chi.get(l) - table.weight(v),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub lambda: Multipartition,
    pub mu: Multipartition,
    pub chi: CharVector,
    pub d: Rational,
    pub branch: OrbitBranch,
    pub adhm: bool,
    pub stable: bool,
    pub base_weightless: bool,
    pub uniform_weight: bool,
    pub d_positive: bool,
    pub entries: Vec<EntryWeight>,
    pub bare_border: Vec<Cell>,
    pub findings: Vec<String>,
}

impl OrbitReport {
    pub fn passed(&self) -> bool {
        self.adhm && self.stable && self.base_weightless && self.uniform_weight && self.d_positive
    }
}

pub fn check_orbit(orbit: &ConnectingOrbit) -> Result<OrbitReport> {
    let p = &orbit.perturbation;
    let (lambda, chi, d) = (&p.lambda, &orbit.chi, orbit.d);
    let mut findings = Vec::new();
    if p.c.b1.is_zero() && p.c.b2.is_zero() && p.c.i.is_zero() && p.c.j.is_zero() {
        return Err(Error::Precondition(format!(
            "empty perturbation for {lambda} -> {}",
            p.mu
        )));
    }

    let point = p.point();
    let adhm = check_adhm(&point)?;
    if !adhm {
        for (a, b, v) in point.moment().nonzero_entries() {
            findings.push(format!(
                "moment map entry {} <- {} is {v}",
                point.basis_labels[a], point.basis_labels[b]
            ));
        }
    }
    let stable = check_stability(&point);
    if !stable {
        findings.push("perturbed point is unstable".into());
    }

    let base_weights = entry_weights(lambda, &p.base, chi)?;
    let base_weightless = base_weights.iter().all(|e| e.weight.is_zero());
    for e in base_weights.iter().filter(|e| !e.weight.is_zero()) {
        findings.push(format!("fixed point entry {e}, expected 0"));
    }

    let entries = entry_weights(lambda, &p.c, chi)?;
    let uniform_weight = entries.iter().all(|e| e.weight == -d);
    for e in entries.iter().filter(|e| e.weight != -d) {
        findings.push(format!("perturbation entry {e}, expected {}", -d));
    }
    let d_positive = d.is_positive();
    if !d_positive {
        findings.push(format!("shift {d} is not positive"));
    }
    for b in &p.bare_border {
        findings.push(format!(
            "border box {b} has neither a left nor an upper fixed neighbour"
        ));
    }

    Ok(OrbitReport {
        lambda: lambda.clone(),
        mu: p.mu.clone(),
        chi: chi.clone(),
        d,
        branch: p.branch,
        adhm,
        stable,
        base_weightless,
        uniform_weight,
        d_positive,
        entries,
        bare_border: p.bare_border.clone(),
        findings,
    })
}

/// Compares the perturbed points built from either side of an adjacent
/// pair after carrying `M`'s box basis onto `Λ`'s.
pub fn swap_agrees(lambda: &Multipartition, mu: &Multipartition) -> Result<bool> {
    let forward = perturbation(lambda, mu)?;
    let backward = perturbation(mu, lambda)?;
    let w = &forward.witness;
    let perm: Vec<usize> = mu
        .boxes()
        .into_iter()
        .map(|cell| {
            let source = w
                .added
                .iter()
                .position(|&a| a == cell)
                .map_or(cell, |k| w.removed[k]);
            lambda
                .box_index(source)
                .expect("relabelled box lies in the reference multipartition")
        })
        .collect();
    let relabelled = backward.point().relabel(&perm, lambda.boxes());
    Ok(relabelled == forward.point())
}
