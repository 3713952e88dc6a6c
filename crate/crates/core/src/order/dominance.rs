//! The content-dominance order `≥` and its asymptotic-chamber form.

use crate::error::Result;
use crate::order::content::{require_same_shape, shifted_contents, CharVector};
use crate::partition::Multipartition;

/// `Λ ≥ M`: some bijection of boxes has `Cont(b) ≥ Cont(b')` pairwise.
///
/// Such a bijection exists iff the descending-sorted content vectors dominate
/// componentwise (pair the k-th largest with the k-th largest; any
/// dominating bijection can be uncrossed into that one).
pub fn geq(lambda: &Multipartition, mu: &Multipartition, chi: &CharVector) -> Result<bool> {
    require_same_shape(lambda, mu)?;
    let a = shifted_contents(lambda, chi)?;
    let b = shifted_contents(mu, chi)?;
    Ok(a.dominates(&b))
}

/// Row lengths concatenated component by component, `n` slots per component.
fn flattened_rows(lambda: &Multipartition, n: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(n * lambda.r());
    for p in lambda.components() {
        out.extend((0..n).map(|y| p.row(y) as i64));
    }
    out
}

/// The order `≥` for characters in the asymptotic chamber: every partial sum
/// of the flattened row-difference vector is non-negative.
pub fn asymptotic_geq(lambda: &Multipartition, mu: &Multipartition) -> bool {
    if lambda.r() != mu.r() {
        return false;
    }
    let n = lambda.size().max(mu.size());
    let a = flattened_rows(lambda, n);
    let b = flattened_rows(mu, n);
    let mut acc = 0i64;
    for (x, y) in a.iter().zip(&b) {
        acc += x - y;
        if acc < 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_neighbours_are_above() {
        let chi: CharVector = "5,2,3/2,-2".parse().unwrap();
        let lam = mp("(2,1)|(0)|(1,1,1)|(2)");
        let lam1 = mp("(2,2)|(0)|(1,1)|(2)");
        let lam2 = mp("(2,1)|(1,1)|(1)|(2)");
        assert!(geq(&lam1, &lam, &chi).unwrap());
        assert!(geq(&lam2, &lam, &chi).unwrap());
        assert!(!geq(&lam, &lam1, &chi).unwrap());
        assert!(geq(&lam, &lam, &chi).unwrap());
    }

    #[test]
    fn counterexample_pair_is_comparable() {
        let chi: CharVector = "0,1/2,17/8,9/4".parse().unwrap();
        let lam = mp("(0)|(3)|(1,1)|(1)");
        let mu = mp("(3)|(0)|(1)|(1,1)");
        assert!(geq(&lam, &mu, &chi).unwrap());
        assert!(!geq(&mu, &lam, &chi).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let chi = CharVector::from_integers(&[0, 1]);
        assert!(matches!(
            geq(&mp("(1)|()"), &mp("(1)|(1)"), &chi),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn asymptotic_examples() {
        assert!(asymptotic_geq(&mp("(2)"), &mp("(1,1)")));
        assert!(!asymptotic_geq(&mp("(1,1)"), &mp("(2)")));
        let a = mp("(1,1)|(2)");
        assert!(asymptotic_geq(&a, &a));
        assert!(asymptotic_geq(&mp("(1)|(1)"), &mp("(0)|(2)")));
        assert!(!asymptotic_geq(&mp("(0)|(2)"), &mp("(1)|(1)")));
    }
}
