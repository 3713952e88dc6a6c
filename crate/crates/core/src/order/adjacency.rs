//! Adjacency of multipartitions: a single skew shape moved by translation,
//! possibly into another component.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::content::{require_same_shape, CharVector};
use crate::partition::{Cell, Multipartition, Partition};
use crate::rational::Rational;

/// Evidence that two multipartitions are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjacencyWitness {
    /// `Λ ∖ M`, in canonical box order.
    pub removed: Vec<Cell>,
    /// `M ∖ Λ`, in canonical box order; `added[k]` is the image of `removed[k]`.
    pub added: Vec<Cell>,
    /// `Cont(removed box) − Cont(added box)`, filled when a character is supplied.
    pub shift: Option<Rational>,
}

impl AdjacencyWitness {
    pub fn from_comp(&self) -> usize {
        self.removed[0].comp
    }

    pub fn to_comp(&self) -> usize {
        self.added[0].comp
    }

    /// `(dcol, drow)` carrying removed boxes onto added ones.
    pub fn translation(&self) -> (i64, i64) {
        let (a, b) = (self.removed[0], self.added[0]);
        (b.col as i64 - a.col as i64, b.row as i64 - a.row as i64)
    }

    pub fn len(&self) -> usize {
        self.removed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }

    /// The same witness read from the other side.
    pub fn reversed(&self) -> AdjacencyWitness {
        AdjacencyWitness {
            removed: self.added.clone(),
            added: self.removed.clone(),
            shift: self.shift.map(|d| -d),
        }
    }

    /// The box of the other multipartition matched with a removed box.
    pub fn image(&self, cell: Cell) -> Option<Cell> {
        self.removed
            .iter()
            .position(|&c| c == cell)
            .map(|k| self.added[k])
    }
}

/// Boxes of `a` not in `b`, row by row.
fn skew_cells(comp: usize, a: &Partition, b: &Partition, out: &mut Vec<Cell>) {
    for y in 0..a.num_rows() {
        for x in b.row(y)..a.row(y) {
            out.push(Cell::new(comp, x, y));
        }
    }
}

/// Decides adjacency of `Λ ≠ M`.
///
/// `Λ ∖ M` confined to one component `c` equals `λ^c / (λ^c ∩ μ^c)`, which
/// is automatically a skew shape, so only single-component containment and
/// translation equivalence are checked.
pub fn are_adjacent(
    lambda: &Multipartition,
    mu: &Multipartition,
) -> Result<Option<AdjacencyWitness>> {
    require_same_shape(lambda, mu)?;
    if lambda == mu {
        return Err(Error::Precondition(format!(
            "adjacency is defined for distinct multipartitions, got {lambda} twice"
        )));
    }
    let mut removed = Vec::new();
    let mut added = Vec::new();
    let mut removed_comp = None;
    let mut added_comp = None;
    for l in 0..lambda.r() {
        let (a, b) = (lambda.component(l), mu.component(l));
        if a == b {
            continue;
        }
        let before = (removed.len(), added.len());
        skew_cells(l, a, b, &mut removed);
        skew_cells(l, b, a, &mut added);
        if removed.len() > before.0 && removed_comp.replace(l).is_some() {
            return Ok(None);
        }
        if added.len() > before.1 && added_comp.replace(l).is_some() {
            return Ok(None);
        }
    }
    if removed.is_empty() || removed.len() != added.len() {
        return Ok(None);
    }
    // Translations preserve the row-major order, so matching sorted lists suffices.
    let d = (
        added[0].col as i64 - removed[0].col as i64,
        added[0].row as i64 - removed[0].row as i64,
    );
    let same = removed
        .iter()
        .zip(&added)
        .all(|(a, b)| (b.col as i64 - a.col as i64, b.row as i64 - a.row as i64) == d);
    if !same {
        return Ok(None);
    }
    Ok(Some(AdjacencyWitness {
        removed,
        added,
        shift: None,
    }))
}

/// [`are_adjacent`] with the content shift filled in for `χ`.
pub fn are_adjacent_with(
    lambda: &Multipartition,
    mu: &Multipartition,
    chi: &CharVector,
) -> Result<Option<AdjacencyWitness>> {
    if chi.r() != lambda.r() {
        return Err(Error::DimensionMismatch {
            expected: lambda.r(),
            found: chi.r(),
        });
    }
    let Some(mut w) = are_adjacent(lambda, mu)? else {
        return Ok(None);
    };
    let shifts: Vec<Rational> = w
        .removed
        .iter()
        .zip(&w.added)
        .map(|(&a, &b)| chi.content(a) - chi.content(b))
        .collect();
    assert!(
        shifts.windows(2).all(|s| s[0] == s[1]),
        "content shift not uniform across a translated skew shape"
    );
    w.shift = Some(shifts[0]);
    Ok(Some(w))
}

/// Every multipartition reachable by moving a single box, in a fixed order:
/// removable boxes by (component, row), then addable boxes by (component, row).
pub fn one_box_moves(lambda: &Multipartition) -> Vec<Multipartition> {
    let mut out = Vec::new();
    for (from, p) in lambda.components().iter().enumerate() {
        for (_, row) in p.removable_boxes() {
            let smaller = lambda.with_component(from, p.remove_box(row).expect("removable"));
            for (to, q) in smaller.components().iter().enumerate() {
                for (_, add_row) in q.addable_boxes() {
                    let moved = smaller.with_component(to, q.add_box(add_row).expect("addable"));
                    if &moved != lambda {
                        out.push(moved);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_adjacencies() {
        let lam = mp("(2,1)|(0)|(1,1,1)|(2)");
        let lam1 = mp("(2,2)|(0)|(1,1)|(2)");
        let lam2 = mp("(2,1)|(1,1)|(1)|(2)");
        let w = are_adjacent(&lam, &lam1).unwrap().expect("adjacent");
        assert_eq!(w.removed, vec![Cell::new(2, 0, 2)]);
        assert_eq!(w.added, vec![Cell::new(0, 1, 1)]);
        let w2 = are_adjacent(&lam, &lam2).unwrap().expect("adjacent");
        assert_eq!(w2.removed, vec![Cell::new(2, 0, 1), Cell::new(2, 0, 2)]);
        assert_eq!(w2.added, vec![Cell::new(1, 0, 0), Cell::new(1, 0, 1)]);
        assert!(are_adjacent(&lam1, &lam2).unwrap().is_none());
    }

    #[test]
    fn identical_inputs_violate_precondition() {
        let lam = mp("(1)|(1)");
        assert!(matches!(
            are_adjacent(&lam, &lam),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shift_is_filled_and_negates_on_reversal() {
        let chi: CharVector = "5,2,3/2,-2".parse().unwrap();
        let lam = mp("(2,1)|(0)|(1,1,1)|(2)");
        let lam1 = mp("(2,2)|(0)|(1,1)|(2)");
        let w = are_adjacent_with(&lam, &lam1, &chi).unwrap().unwrap();
        // removed (3;0,2): 3/2 - 2 = -1/2 ; added (1;1,1): 5 + 0 = 5
        assert_eq!(w.shift, Some(Rational::new(-11, 2)));
        let back = are_adjacent_with(&lam1, &lam, &chi).unwrap().unwrap();
        assert_eq!(back, w.reversed());
    }

    #[test]
    fn non_translate_shapes_are_not_adjacent() {
        // (2) -> (1,1) inside one component is a one-box move
        assert!(are_adjacent(&mp("(2)"), &mp("(1,1)")).unwrap().is_some());
        // horizontal domino vs vertical domino
        assert!(are_adjacent(&mp("(2)|()"), &mp("()|(1,1)"))
            .unwrap()
            .is_none());
        // two components lose boxes
        assert!(are_adjacent(&mp("(1)|(1)|()"), &mp("()|()|(2)"))
            .unwrap()
            .is_none());
    }

    #[test]
    fn one_box_moves_are_adjacent_single_boxes() {
        let lam = mp("(2,1)|()|(1)");
        let moves = one_box_moves(&lam);
        assert!(!moves.is_empty());
        for m in &moves {
            let w = are_adjacent(&lam, m)
                .unwrap()
                .expect("one-box move is adjacent");
            assert_eq!(w.len(), 1);
        }
        let mut dedup = moves.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), moves.len());
    }
}
