//! Torus weights on the box basis.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::content::CharVector;
use crate::partition::{Cell, Multipartition};
use crate::rational::Rational;

/// Weight of one basis vector: `χ_l + x·φ₁ + y·φ₂`, and its value at
/// `φ₁ = k`, `φ₂ = −k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct WeightEntry {
    pub cell: Cell,
    pub framing: usize,
    pub phi1: usize,
    pub phi2: usize,
    pub collapsed: Rational,
}

impl WeightEntry {
    /// Symbolic form with a 1-based framing index, as in `χ3 + 2φ2`.
    pub fn symbolic(&self) -> String {
        let mut s = format!("χ{}", self.framing + 1);
        for (coeff, name) in [(self.phi1, "φ1"), (self.phi2, "φ2")] {
            match coeff {
                0 => {}
                1 => s.push_str(&format!(" + {name}")),
                c => s.push_str(&format!(" + {c}{name}")),
            }
        }
        s
    }
}

impl fmt::Display for WeightEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ↦ {} = {}",
            self.cell,
            self.symbolic(),
            self.collapsed
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WeightTable {
    pub k: Rational,
    pub entries: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn weight(&self, basis_index: usize) -> Rational {
        self.entries[basis_index].collapsed
    }

    pub fn collapsed(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.collapsed).collect()
    }
}

pub fn torus_weights(
    lambda: &Multipartition,
    chi: &CharVector,
    k: Rational,
) -> Result<WeightTable> {
    if chi.r() != lambda.r() {
        return Err(Error::DimensionMismatch {
            expected: lambda.r(),
            found: chi.r(),
        });
    }
    if k.is_zero() {
        return Err(Error::Precondition(
            "the weight scale k must be nonzero".into(),
        ));
    }
    let entries = lambda
        .boxes()
        .into_iter()
        .map(|c| WeightEntry {
            cell: c,
            framing: c.comp,
            phi1: c.col,
            phi2: c.row,
            collapsed: chi.get(c.comp) + k * (c.col as i64 - c.row as i64),
        })
        .collect();
    Ok(WeightTable { k, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_grid() {
        let lam: Multipartition = "(2,1)|()|(1,1,1)|(2)".parse().unwrap();
        let chi: CharVector = "5,2,3/2,-2".parse().unwrap();
        let t = torus_weights(&lam, &chi, Rational::one()).unwrap();
        let sym: Vec<String> = t.entries.iter().map(WeightEntry::symbolic).collect();
        assert_eq!(
            sym,
            [
                "χ1",
                "χ1 + φ1",
                "χ1 + φ2",
                "χ3",
                "χ3 + φ2",
                "χ3 + 2φ2",
                "χ4",
                "χ4 + φ1"
            ]
        );
        let vals: Vec<String> = t.collapsed().iter().map(ToString::to_string).collect();
        assert_eq!(vals, ["5", "6", "4", "3/2", "1/2", "-1/2", "-2", "-1"]);
    }

    #[test]
    fn scale_enters_linearly() {
        let lam: Multipartition = "(2,1)".parse().unwrap();
        let chi = CharVector::from_integers(&[0]);
        let t = torus_weights(&lam, &chi, Rational::new(1, 3)).unwrap();
        assert_eq!(
            t.collapsed(),
            vec![Rational::zero(), Rational::new(1, 3), Rational::new(-1, 3)]
        );
        assert!(torus_weights(&lam, &chi, Rational::zero()).is_err());
    }
}
