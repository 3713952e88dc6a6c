//! Characters, shifted contents, and the chamber predicates on characters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::partition::{Cell, Multipartition};
use crate::rational::{common_denominator, Rational};

/// A character `(χ_1, …, χ_r)` of the framing torus.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharVector(Vec<Rational>);

impl CharVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition(
                "a character needs at least one entry".into(),
            ));
        }
        Ok(CharVector(entries))
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        CharVector(entries.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, l: usize) -> Rational {
        self.0[l]
    }

    /// Every entry shifted by `c`.
    pub fn shifted(&self, c: Rational) -> CharVector {
        CharVector(self.0.iter().map(|&v| v + c).collect())
    }

    /// Shifted content `χ_l + col − row` of a box.
    pub fn content(&self, cell: Cell) -> Rational {
        self.0[cell.comp] + cell.col as i64 - cell.row as i64
    }

    /// Least common denominator of the entries.
    pub fn denominator(&self) -> i64 {
        common_denominator(&self.0)
    }

    fn check_r(&self, r: usize) -> Result<()> {
        if self.r() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: self.r(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CharVector {
    type Err = ParseError;

    /// Comma-separated rationals, optionally parenthesised: `0,1/2,17/8,9/4`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .unwrap_or(t);
        let mut out = Vec::new();
        let mut off = 0;
        for item in t.split(',') {
            let q = item
                .parse::<Rational>()
                .map_err(|e| ParseError::new(s, off, e.message))?;
            out.push(q);
            off += item.len() + 1;
        }
        Ok(CharVector(out))
    }
}

/// The multiset of shifted contents of a multipartition, sorted descending.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ContentVector(Vec<Rational>);

impl ContentVector {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise domination of the sorted vectors.
    pub fn dominates(&self, other: &ContentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

pub fn shifted_contents(lambda: &Multipartition, chi: &CharVector) -> Result<ContentVector> {
    chi.check_r(lambda.r())?;
    let mut values: Vec<Rational> = lambda.boxes().into_iter().map(|c| chi.content(c)).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ContentVector(values))
}

/// `χ_i − χ_j ∉ {0, 1, …, n−1}` for every ordered pair `i ≠ j`.
pub fn is_generic(chi: &CharVector, n: usize) -> bool {
    let e = chi.entries();
    for i in 0..e.len() {
        for j in 0..e.len() {
            if i == j {
                continue;
            }
            if let Some(m) = (e[i] - e[j]).as_integer() {
                if m >= 0 && (m as u128) < n as u128 {
                    return false;
                }
            }
        }
    }
    true
}

/// `χ_i − χ_{i+1} > n − 1` for all consecutive entries.
pub fn is_asymptotic(chi: &CharVector, n: usize) -> bool {
    let gap = Rational::from_integer(n as i64 - 1);
    chi.entries().windows(2).all(|w| w[0] - w[1] > gap)
}

/// The representative `χ_i = (r−i)(n+1) + (r−i)/r` (1-based `i`) of the
/// asymptotic chamber. It is both asymptotic and generic.
pub fn asymptotic_representative(n: usize, r: usize) -> CharVector {
    let entries = (1..=r)
        .map(|i| {
            let k = (r - i) as i64;
            Rational::from_integer(k * (n as i64 + 1)) + Rational::new(k, r as i64)
        })
        .collect();
    CharVector(entries)
}

pub(crate) fn require_generic(chi: &CharVector, n: usize) -> Result<()> {
    if is_generic(chi, n) {
        Ok(())
    } else {
        Err(Error::NonGeneric {
            chi: chi.to_string(),
            n,
        })
    }
}

pub(crate) fn require_same_shape(a: &Multipartition, b: &Multipartition) -> Result<()> {
    if a.r() != b.r() || a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(())
}

/// Sorted shifted contents scaled by a common denominator into integers.
///
/// Used by the bulk paths (order matrices, chamber scans) where comparing
/// `i64` slices is much cheaper than comparing rationals.
pub(crate) fn scaled_contents(lambda: &Multipartition, chi: &CharVector, scale: i64) -> Vec<i64> {
    let base: Vec<i64> = chi
        .entries()
        .iter()
        .map(|q| q.scale_to_integer(scale))
        .collect();
    let mut v: Vec<i64> = lambda
        .boxes()
        .into_iter()
        .map(|c| base[c.comp] + scale * (c.col as i64 - c.row as i64))
        .collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}
