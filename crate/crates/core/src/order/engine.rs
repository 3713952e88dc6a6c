//! Whole-universe evaluation of the orders for fixed `(n, r)`.
//!
//! An [`OrderEngine`] enumerates the multipartitions once and precomputes
//! the adjacency graph, which does not depend on the character. Character
//! dependent relations are then bit matrices over that universe.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::adjacency::{are_adjacent, one_box_moves, AdjacencyWitness};
use crate::order::content::{
    is_asymptotic, require_generic, require_same_shape, scaled_contents, CharVector,
};
use crate::order::dominance::geq;
use crate::order::matrix::BitMatrix;
use crate::partition::{enumerate_multipartitions, Multipartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Geq,
    Triangle,
    Adjacency,
    Sandwich,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Geq => "geq",
            OrderKind::Triangle => "triangle",
            OrderKind::Adjacency => "adjacency",
            OrderKind::Sandwich => "sandwich",
        })
    }
}

impl FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "geq" => Ok(OrderKind::Geq),
            "triangle" => Ok(OrderKind::Triangle),
            "adjacency" => Ok(OrderKind::Adjacency),
            "sandwich" => Ok(OrderKind::Sandwich),
            other => Err(format!("unknown order kind {other:?}")),
        }
    }
}

/// How the proven bounds `▷ ⊆ ⪰ ⊆ ≥` decide the geometric order on a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sandwich {
    /// `Λ ▷ M`, hence `Λ ⪰ M`.
    ForcedAbove,
    /// `Λ ≱ M`, hence `Λ ⋡ M`.
    ForcedIncomparable,
    /// `Λ ≥ M` without `Λ ▷ M`.
    Undetermined,
}

impl fmt::Display for Sandwich {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sandwich::ForcedAbove => "forced-above",
            Sandwich::ForcedIncomparable => "forced-incomparable",
            Sandwich::Undetermined => "undetermined",
        })
    }
}

/// One relation tabulated over every multipartition of `(n, r)`.
#[derive(Clone, Debug)]
pub struct OrderMatrix {
    pub universe: Vec<Multipartition>,
    pub kind: OrderKind,
    /// For `Sandwich` this is `≥`, the outer bound.
    pub rel: BitMatrix,
    /// `▷`, present for `Sandwich` only.
    pub forced: Option<BitMatrix>,
}

impl OrderMatrix {
    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rel.get(a, b)
    }

    pub fn closure(&self) -> OrderMatrix {
        OrderMatrix {
            rel: self.rel.transitive_closure(),
            ..self.clone()
        }
    }

    /// Hasse diagram of the (order) relation.
    pub fn reduction(&self) -> BitMatrix {
        self.rel.transitive_reduction()
    }

    /// Canonical row-major bit string of the relation.
    pub fn signature(&self) -> Vec<u8> {
        self.rel.to_bytes()
    }

    /// Number of ordered pairs `a ≠ b` with `a R b`.
    pub fn strict_pairs(&self) -> usize {
        let diag = (0..self.rel.dim()).filter(|&i| self.rel.get(i, i)).count();
        self.rel.count_ones() - diag
    }

    /// Sandwich tag of a pair; `None` unless `kind` is `Sandwich`.
    pub fn tag(&self, a: usize, b: usize) -> Option<Sandwich> {
        let forced = self.forced.as_ref()?;
        Some(if forced.get(a, b) {
            Sandwich::ForcedAbove
        } else if !self.rel.get(a, b) {
            Sandwich::ForcedIncomparable
        } else {
            Sandwich::Undetermined
        })
    }
}

/// The multipartitions of `(n, r)` and their character-independent adjacency graph.
pub struct OrderEngine {
    n: usize,
    r: usize,
    universe: Vec<Multipartition>,
    index: HashMap<Multipartition, usize>,
    /// Adjacent pairs `(a, b)` with `a < b`; the witness reads from `a` to `b`.
    adjacent: Vec<(usize, usize, AdjacencyWitness)>,
    neighbours: Vec<Vec<usize>>,
}

impl OrderEngine {
    pub fn new(n: usize, r: usize) -> Self {
        let universe = enumerate_multipartitions(n, r);
        let index = universe
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        let mut adjacent = Vec::new();
        let mut neighbours = vec![Vec::new(); universe.len()];
        for a in 0..universe.len() {
            for b in a + 1..universe.len() {
                if let Some(w) = are_adjacent(&universe[a], &universe[b]).expect("same shape") {
                    neighbours[a].push(b);
                    neighbours[b].push(a);
                    adjacent.push((a, b, w));
                }
            }
        }
        OrderEngine {
            n,
            r,
            universe,
            index,
            adjacent,
            neighbours,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn universe(&self) -> &[Multipartition] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn index_of(&self, m: &Multipartition) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn adjacent_pairs(&self) -> &[(usize, usize, AdjacencyWitness)] {
        &self.adjacent
    }

    pub fn neighbours(&self, a: usize) -> &[usize] {
        &self.neighbours[a]
    }

    fn check_chi(&self, chi: &CharVector) -> Result<()> {
        if chi.r() != self.r {
            return Err(Error::DimensionMismatch {
                expected: self.r,
                found: chi.r(),
            });
        }
        Ok(())
    }

    /// Sorted contents of every element, scaled to integers.
    pub(crate) fn content_table(&self, chi: &CharVector) -> Vec<Vec<i64>> {
        let scale = chi.denominator();
        self.universe
            .iter()
            .map(|m| scaled_contents(m, chi, scale))
            .collect()
    }

    /// `≥` over the universe. Works for any character (a preorder in general).
    pub fn geq_matrix(&self, chi: &CharVector) -> Result<BitMatrix> {
        self.check_chi(chi)?;
        let table = self.content_table(chi);
        Ok(geq_from_table(&table))
    }

    /// Adjacent pairs, symmetric and irreflexive.
    pub fn adjacency_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::new(self.len());
        for &(a, b, _) in &self.adjacent {
            m.set(a, b, true);
            m.set(b, a, true);
        }
        m
    }

    /// `▷`: reflexive-transitive closure of the adjacent pairs oriented by `≥`.
    pub fn triangle_matrix_from_geq(&self, geq: &BitMatrix) -> BitMatrix {
        let mut m = BitMatrix::identity(self.len());
        for &(a, b, _) in &self.adjacent {
            if geq.get(a, b) {
                m.set(a, b, true);
            }
            if geq.get(b, a) {
                m.set(b, a, true);
            }
        }
        m.transitive_closure()
    }

    pub fn triangle_matrix(&self, chi: &CharVector) -> Result<BitMatrix> {
        Ok(self.triangle_matrix_from_geq(&self.geq_matrix(chi)?))
    }

    /// `Λ ▷ M` by breadth-first search from `Λ`, visiting only elements
    /// `B` with `Λ ≥ B ≥ M` (every path stays in that interval).
    pub fn triangle(&self, a: usize, b: usize, chi: &CharVector) -> Result<bool> {
        self.check_chi(chi)?;
        if a == b {
            return Ok(true);
        }
        let table = self.content_table(chi);
        if !dominates(&table[a], &table[b]) {
            return Ok(false);
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbours[u] {
                if seen[v] || !dominates(&table[u], &table[v]) || !dominates(&table[v], &table[b]) {
                    continue;
                }
                if v == b {
                    return Ok(true);
                }
                seen[v] = true;
                queue.push_back(v);
            }
        }
        Ok(false)
    }

    pub fn build(&self, chi: &CharVector, kind: OrderKind) -> Result<OrderMatrix> {
        self.check_chi(chi)?;
        if kind != OrderKind::Adjacency {
            require_generic(chi, self.n)?;
        }
        let (rel, forced) = match kind {
            OrderKind::Adjacency => (self.adjacency_matrix(), None),
            OrderKind::Geq => (self.geq_matrix(chi)?, None),
            OrderKind::Triangle => (self.triangle_matrix(chi)?, None),
            OrderKind::Sandwich => {
                let g = self.geq_matrix(chi)?;
                let t = self.triangle_matrix_from_geq(&g);
                (g, Some(t))
            }
        };
        Ok(OrderMatrix {
            universe: self.universe.clone(),
            kind,
            rel,
            forced,
        })
    }
}

#[inline]
pub(crate) fn dominates(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

pub(crate) fn geq_from_table(table: &[Vec<i64>]) -> BitMatrix {
    let n = table.len();
    let mut m = BitMatrix::new(n);
    for a in 0..n {
        m.set(a, a, true);
        for b in a + 1..n {
            let (x, y) = (&table[a], &table[b]);
            let mut ge = true;
            let mut le = true;
            for (p, q) in x.iter().zip(y) {
                ge &= p >= q;
                le &= p <= q;
                if !ge && !le {
                    break;
                }
            }
            if ge {
                m.set(a, b, true);
            }
            if le {
                m.set(b, a, true);
            }
        }
    }
    m
}

pub fn build_order_matrix(
    n: usize,
    r: usize,
    chi: &CharVector,
    kind: OrderKind,
) -> Result<OrderMatrix> {
    OrderEngine::new(n, r).build(chi, kind)
}

fn engine_for(lambda: &Multipartition, mu: &Multipartition) -> Result<(OrderEngine, usize, usize)> {
    require_same_shape(lambda, mu)?;
    let engine = OrderEngine::new(lambda.size(), lambda.r());
    let a = engine.index_of(lambda).expect("in universe");
    let b = engine.index_of(mu).expect("in universe");
    Ok((engine, a, b))
}

/// `Λ ▷ M`, reflexive by convention.
///
/// The adjacency relation excludes `Λ = M`; reflexivity enters only here.
pub fn triangle(lambda: &Multipartition, mu: &Multipartition, chi: &CharVector) -> Result<bool> {
    let (engine, a, b) = engine_for(lambda, mu)?;
    engine.triangle(a, b, chi)
}

pub fn sandwich_classify(
    lambda: &Multipartition,
    mu: &Multipartition,
    chi: &CharVector,
) -> Result<Sandwich> {
    require_same_shape(lambda, mu)?;
    require_generic(chi, lambda.size())?;
    if triangle(lambda, mu, chi)? {
        Ok(Sandwich::ForcedAbove)
    } else if !geq(lambda, mu, chi)? {
        Ok(Sandwich::ForcedIncomparable)
    } else {
        Ok(Sandwich::Undetermined)
    }
}

/// Drops the lowermost removable box of the first component whose size
/// exceeds `M`'s (all earlier sizes equal) into the first row of the next
/// component. `None` when no such component exists.
pub fn lowest_box_drop(lambda: &Multipartition, mu: &Multipartition) -> Option<Multipartition> {
    let k = (0..lambda.r()).find(|&l| lambda.component(l).size() != mu.component(l).size())?;
    if lambda.component(k).size() < mu.component(k).size() || k + 1 >= lambda.r() {
        return None;
    }
    let (_, row) = *lambda.component(k).removable_boxes().last()?;
    let smaller = lambda.component(k).remove_box(row).ok()?;
    let bigger = lambda.component(k + 1).add_box(0).ok()?;
    Some(
        lambda
            .with_component(k, smaller)
            .with_component(k + 1, bigger),
    )
}

/// A one-box move `Λ′` with `Λ ▷ Λ′ ≥ M`, for `χ` in the asymptotic chamber.
///
/// Tries [`lowest_box_drop`] first, then every other one-box move. Returns
/// `None` if nothing qualifies, which would contradict the chamber argument.
pub fn find_drop_witness(
    lambda: &Multipartition,
    mu: &Multipartition,
    chi: &CharVector,
) -> Result<Option<Multipartition>> {
    require_same_shape(lambda, mu)?;
    let n = lambda.size();
    if !is_asymptotic(chi, n) {
        return Err(Error::Precondition(format!(
            "{chi} is not in the asymptotic chamber for n = {n}"
        )));
    }
    if lambda == mu || !geq(lambda, mu, chi)? {
        return Err(Error::Precondition(format!("expected {lambda} > {mu}")));
    }
    let qualifies = |cand: &Multipartition| -> Result<bool> {
        Ok(geq(lambda, cand, chi)? && geq(cand, mu, chi)?)
    };
    if let Some(drop) = lowest_box_drop(lambda, mu) {
        if qualifies(&drop)? {
            return Ok(Some(drop));
        }
    }
    for cand in one_box_moves(lambda) {
        if qualifies(&cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}
