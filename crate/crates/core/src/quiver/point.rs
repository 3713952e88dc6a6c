//! Torus fixed points in the box basis, the ADHM and stability checks, and
//! the determinant sections.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::content::require_same_shape;
use crate::partition::{Cell, Multipartition};
use crate::quiver::matrix::RatMatrix;
use crate::rational::Rational;

/// A quadruple `(B₁, B₂, i, j)` with `V = ℚⁿ` and `W = ℚʳ`.
///
/// Matrices act on column vectors: a one in entry `(v, u)` of `b1` means
/// `B₁ e_u` has an `e_v` component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiverPoint {
    pub b1: RatMatrix,
    pub b2: RatMatrix,
    pub i: RatMatrix,
    pub j: RatMatrix,
    /// The box labelling each basis vector of `V`, if built from a multipartition.
    pub basis_labels: Vec<Cell>,
}

impl QuiverPoint {
    pub fn zero(n: usize, r: usize) -> Self {
        QuiverPoint {
            b1: RatMatrix::zeros(n, n),
            b2: RatMatrix::zeros(n, n),
            i: RatMatrix::zeros(n, r),
            j: RatMatrix::zeros(r, n),
            basis_labels: Vec::new(),
        }
    }

    pub fn dim_v(&self) -> usize {
        self.b1.rows()
    }

    pub fn dim_w(&self) -> usize {
        self.i.cols()
    }

    pub fn check_dimensions(&self) -> Result<()> {
        let n = self.dim_v();
        let r = self.dim_w();
        let expect = [
            ("b1", self.b1.shape(), (n, n)),
            ("b2", self.b2.shape(), (n, n)),
            ("i", self.i.shape(), (n, r)),
            ("j", self.j.shape(), (r, n)),
        ];
        for (name, found, want) in expect {
            if found != want {
                return Err(Error::Precondition(format!(
                    "{name} has shape {}x{}, expected {}x{}",
                    found.0, found.1, want.0, want.1
                )));
            }
        }
        if !self.basis_labels.is_empty() && self.basis_labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.basis_labels.len(),
            });
        }
        Ok(())
    }

    /// `[B₁, B₂] + i·j`.
    pub fn moment(&self) -> RatMatrix {
        let comm = &(&self.b1 * &self.b2) - &(&self.b2 * &self.b1);
        &comm + &(&self.i * &self.j)
    }

    /// Entrywise sum; labels are taken from `self`.
    pub fn plus(&self, other: &QuiverPoint) -> QuiverPoint {
        QuiverPoint {
            b1: &self.b1 + &other.b1,
            b2: &self.b2 + &other.b2,
            i: &self.i + &other.i,
            j: &self.j + &other.j,
            basis_labels: self.basis_labels.clone(),
        }
    }

    /// Rewrites the point in a new basis where old basis vector `k` becomes
    /// vector `perm[k]`.
    pub fn relabel(&self, perm: &[usize], labels: Vec<Cell>) -> QuiverPoint {
        let mut j = RatMatrix::zeros(self.j.rows(), self.j.cols());
        for (a, b, v) in self.j.nonzero_entries() {
            j.set(a, perm[b], v);
        }
        QuiverPoint {
            b1: self.b1.conjugate_by_permutation(perm),
            b2: self.b2.conjugate_by_permutation(perm),
            i: self.i.permute_rows(perm),
            j,
            basis_labels: labels,
        }
    }
}

/// The fixed point attached to `Λ`: `B₁` moves boxes right, `B₂` moves them
/// down, `i(w_l)` is the corner box of component `l`, and `j = 0`.
pub fn build_fixed_point(lambda: &Multipartition) -> QuiverPoint {
    let labels = lambda.boxes();
    let n = labels.len();
    let r = lambda.r();
    let mut p = QuiverPoint::zero(n, r);
    for (u, &c) in labels.iter().enumerate() {
        if let Some(v) = lambda.box_index(Cell::new(c.comp, c.col + 1, c.row)) {
            p.b1.set(v, u, Rational::one());
        }
        if let Some(v) = lambda.box_index(Cell::new(c.comp, c.col, c.row + 1)) {
            p.b2.set(v, u, Rational::one());
        }
        if c.col == 0 && c.row == 0 {
            p.i.set(u, c.comp, Rational::one());
        }
    }
    p.basis_labels = labels;
    p
}

pub fn check_adhm(p: &QuiverPoint) -> Result<bool> {
    p.check_dimensions()?;
    Ok(p.moment().is_zero())
}

/// Whether the smallest `B₁,B₂`-stable subspace containing `Im(i)` is `V`.
pub fn check_stability(p: &QuiverPoint) -> bool {
    let n = p.dim_v();
    if n == 0 {
        return true;
    }
    let mut span = p.i.select_columns(&p.i.column_basis());
    loop {
        let grown = span.hcat(&(&p.b1 * &span)).hcat(&(&p.b2 * &span));
        let basis = grown.column_basis();
        if basis.len() == span.cols() {
            return span.cols() == n;
        }
        span = grown.select_columns(&basis);
    }
}

/// The column `B₁^x B₂^y i(w_l)` for each box `(l, x, y)` of `m`, evaluated at `p`.
pub fn section_columns(m: &Multipartition, p: &QuiverPoint) -> Vec<Vec<Rational>> {
    m.boxes()
        .into_iter()
        .map(|c| {
            let mut v = p.i.column(c.comp);
            for _ in 0..c.row {
                v = p.b2.apply(&v);
            }
            for _ in 0..c.col {
                v = p.b1.apply(&v);
            }
            v
        })
        .collect()
}

fn section_matrix(m: &Multipartition, p: &QuiverPoint) -> RatMatrix {
    RatMatrix::from_columns(p.dim_v(), &section_columns(m, p))
}

/// The section of `det 𝒱` attached to `m`, evaluated at the fixed point of `at`.
pub fn det_section(m: &Multipartition, at: &Multipartition) -> Result<Rational> {
    require_same_shape(m, at)?;
    Ok(section_matrix(m, &build_fixed_point(at)).determinant())
}

/// `E_Λ⁻¹ ∘ E_M` at the fixed point of `Λ`, rows indexed by boxes of `Λ`
/// and columns by boxes of `M`.
pub fn transition_matrix(lambda: &Multipartition, mu: &Multipartition) -> Result<RatMatrix> {
    require_same_shape(lambda, mu)?;
    let p = build_fixed_point(lambda);
    let e_lambda = section_matrix(lambda, &p).inverse().ok_or_else(|| {
        Error::Precondition(format!(
            "sections of {lambda} are singular at its own point"
        ))
    })?;
    Ok(&e_lambda * &section_matrix(mu, &p))
}

/// One row of the stability and ADHM status of a fixed point.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    pub multipartition: Multipartition,
    pub adhm: bool,
    pub stable: bool,
    pub j_zero: bool,
    pub commuting: bool,
}

impl FixedPointReport {
    pub fn passed(&self) -> bool {
        self.adhm && self.stable && self.j_zero && self.commuting
    }
}

pub fn fixed_point_report(lambda: &Multipartition) -> FixedPointReport {
    let p = build_fixed_point(lambda);
    let comm = &(&p.b1 * &p.b2) - &(&p.b2 * &p.b1);
    FixedPointReport {
        multipartition: lambda.clone(),
        adhm: check_adhm(&p).unwrap_or(false),
        stable: check_stability(&p),
        j_zero: p.j.is_zero(),
        commuting: comm.is_zero(),
    }
}
